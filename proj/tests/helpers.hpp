#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "mouldkit/mould.hpp"
#include "mouldkit/multipoly.hpp"
#include "mouldkit/ncpoly.hpp"

namespace testing {

using namespace mouldkit;

// nc({{"xy", 1}, {"yx", -1}}) over {x, y}
inline NCPoly nc(std::initializer_list<std::pair<const char*, int>> terms, const Alphabet& a = Alphabet::xy()) {
  NCPoly p(a);
  for (const auto& [w, c] : terms) p.add_term(parse_word(a, w), c);
  return p;
}

inline MultiPoly var(std::size_t arity, std::size_t i) { return MultiPoly::variable(arity, i); }
inline MultiPoly cst(std::size_t arity, const Rational& c) { return MultiPoly::constant(arity, c); }

inline LinearForm form(std::initializer_list<int> coeffs) {
  std::vector<Rational> v;
  for (int c : coeffs) v.emplace_back(c);
  return LinearForm(v);
}

// Mould with a single nonzero component.
inline Mould single(std::size_t depth, MultiPoly p) {
  Mould m(depth);
  m.set(depth, std::move(p));
  return m;
}

}  // namespace testing
