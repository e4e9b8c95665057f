#pragma once

#include <string>

#include <json.hpp>

#include "mouldkit/linalg.hpp"
#include "mouldkit/mould.hpp"
#include "mouldkit/ncpoly.hpp"
#include "mouldkit/symmetry.hpp"

namespace mouldkit::io {

using Json = nlohmann::json;

// Wire format: rationals are "p/q" strings; polynomials are term lists;
// moulds map the depth (as a string key) to the term list of that component.
Json to_json(const Rational& q);
Json to_json(const MultiPoly& p);
Json to_json(const NCPoly& p);
Json to_json(const CyclicCombination& c);
Json to_json(const Mould& m);
Json to_json(const ConstantMould& c);
Json to_json(const SubspaceBasis& b);
Json to_json(const Defect& d);

// `where` is a JSON-pointer-style location used in ParseError messages.
Rational rational_from_json(const Json& j, const std::string& where = "");
MultiPoly multipoly_from_json(const Json& j, std::size_t arity, const std::string& where = "");
// Either {"alphabet": [...], "terms": [...]} or a bare term list over x, y.
NCPoly ncpoly_from_json(const Json& j, const std::string& where = "");
Mould mould_from_json(const Json& j, const std::string& where = "");
SubspaceBasis basis_from_json(const Json& j, const std::string& where = "");

// Parses text, reporting syntax errors with their byte offset.
Json parse(const std::string& text, const std::string& source = "input");
Json read_file(const std::string& path);

// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace mouldkit::io
