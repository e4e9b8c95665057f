#include "mouldkit/app/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mouldkit/errors.hpp"

namespace mouldkit::io {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"", where);
  return j.at(key);
}

Json terms_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json ex = Json::array();
    for (auto v : e) ex.push_back(v);
    out.push_back({{"coeff", to_string(c)}, {"exponents", ex}});
  }
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const MultiPoly& p) { return terms_json(p); }

Json to_json(const NCPoly& p) {
  Json terms = Json::array();
  for (const auto& [w, c] : p.terms())
    terms.push_back({{"coeff", to_string(c)}, {"word", word_to_string(p.alphabet(), w)}});
  return {{"alphabet", p.alphabet().symbols}, {"terms", terms}};
}

Json to_json(const CyclicCombination& c) {
  Json terms = Json::array();
  for (const auto& [w, v] : c.terms())
    terms.push_back({{"coeff", to_string(v)}, {"cyclic_word", word_to_string(c.alphabet(), w)}});
  return terms;
}

Json to_json(const Mould& m) {
  Json out = Json::object();
  for (std::size_t r = 0; r <= m.depth(); ++r)
    if (!m[r].is_zero()) out[std::to_string(r)] = terms_json(m[r]);
  return out;
}

Json to_json(const ConstantMould& c) {
  Json out = Json::array();
  for (const auto& v : c.values) out.push_back(to_string(v));
  return out;
}

Json to_json(const SubspaceBasis& b) {
  Json vecs = Json::array();
  for (const auto& v : b.basis) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    vecs.push_back(row);
  }
  return {{"weight", b.weight}, {"ambient_dim", b.ambient_dim}, {"labels", b.labels},
          {"dimension", b.dimension()}, {"basis", vecs}};
}

Json to_json(const Defect& d) { return {{"p", d.p}, {"q", d.q}, {"value", to_json(d.value)}}; }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (!j.is_string()) throw ParseError("expected a rational as \"p/q\" or an integer", where);
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), where);
  }
}

MultiPoly multipoly_from_json(const Json& j, std::size_t arity, const std::string& where) {
  if (!j.is_array()) throw ParseError("expected a list of terms", where);
  MultiPoly p(arity);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = at(where, i);
    const Json& ex = field(j[i], "exponents", w);
    if (!ex.is_array() || ex.size() != arity)
      throw ParseError("expected " + std::to_string(arity) + " exponents", at(w, "exponents"));
    Exponents e;
    for (std::size_t k = 0; k < ex.size(); ++k) {
      if (!ex[k].is_number_unsigned() || ex[k].get<std::uint64_t>() > 0xffff)
        throw ParseError("exponent must be a small nonnegative integer", at(at(w, "exponents"), k));
      e.push_back(static_cast<std::uint16_t>(ex[k].get<std::uint64_t>()));
    }
    p.add_term(e, rational_from_json(field(j[i], "coeff", w), at(w, "coeff")));
  }
  return p;
}

NCPoly ncpoly_from_json(const Json& j, const std::string& where) {
  Alphabet a = Alphabet::xy();
  const Json* terms = &j;
  std::string tw = where;
  if (j.is_object()) {
    if (j.contains("alphabet")) {
      const Json& al = j.at("alphabet");
      if (!al.is_array() || al.empty()) throw ParseError("alphabet must be a nonempty list", at(where, "alphabet"));
      a.symbols.clear();
      for (std::size_t i = 0; i < al.size(); ++i) {
        if (!al[i].is_string()) throw ParseError("alphabet symbols must be strings", at(at(where, "alphabet"), i));
        a.symbols.push_back(al[i].get<std::string>());
      }
    }
    terms = &field(j, "terms", where);
    tw = at(where, "terms");
  }
  if (!terms->is_array()) throw ParseError("expected a list of terms", tw);
  NCPoly p(a);
  for (std::size_t i = 0; i < terms->size(); ++i) {
    const std::string w = at(tw, i);
    const Json& word = field((*terms)[i], "word", w);
    if (!word.is_string()) throw ParseError("word must be a string", at(w, "word"));
    Word parsed;
    try {
      parsed = parse_word(a, word.get<std::string>());
    } catch (const Error& e) {
      throw ParseError(e.what(), at(w, "word"));
    }
    p.add_term(parsed, rational_from_json(field((*terms)[i], "coeff", w), at(w, "coeff")));
  }
  return p;
}

Mould mould_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError("expected an object mapping depth to terms", where);
  Mould m;
  for (const auto& [key, val] : j.items()) {
    std::size_t r = 0;
    std::size_t used = 0;
    try {
      r = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw ParseError("depth keys must be nonnegative integers", at(where, key));
    m.set(r, multipoly_from_json(val, r, at(where, key)));
  }
  return m;
}

SubspaceBasis basis_from_json(const Json& j, const std::string& where) {
  SubspaceBasis b;
  b.weight = field(j, "weight", where).get<int>();
  b.ambient_dim = field(j, "ambient_dim", where).get<std::size_t>();
  for (const auto& l : field(j, "labels", where)) b.labels.push_back(l.get<std::string>());
  const Json& vecs = field(j, "basis", where);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    Vector v;
    for (std::size_t k = 0; k < vecs[i].size(); ++k) v.push_back(rational_from_json(vecs[i][k], at(at(at(where, "basis"), i), k)));
    if (v.size() != b.ambient_dim) throw ParseError("basis vector has the wrong length", at(at(where, "basis"), i));
    b.basis.push_back(std::move(v));
  }
  return b;
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), source + ":byte " + std::to_string(e.byte));
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mouldkit::io
