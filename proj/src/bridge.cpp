#include "mouldkit/bridge.hpp"

#include <algorithm>

#include "mouldkit/errors.hpp"
#include "mouldkit/lie.hpp"

namespace mouldkit {

namespace {

void require_xy(const NCPoly& p) {
  if (!(p.alphabet() == Alphabet::xy())) throw AlphabetError("expected a polynomial in x, y");
}

// Exponents (e_0, ..., e_r) of x^e0 y x^e1 ... y x^er.
Exponents x_runs(const Word& w) {
  Exponents e{0};
  for (auto l : w) {
    if (l == kY)
      e.push_back(0);
    else
      ++e.back();
  }
  return e;
}

}  // namespace

MultiPoly vimo(const NCPoly& h, int r) {
  require_xy(h);
  if (!h.is_homogeneous()) throw NotHomogeneous("vimo needs a homogeneous polynomial");
  MultiPoly out(static_cast<std::size_t>(r + 1));
  for (const auto& [w, c] : h.terms()) {
    Exponents e = x_runs(w);
    if (static_cast<int>(e.size()) != r + 1) continue;
    out.add_term(e, c);
  }
  return out;
}

Mould ma(const NCPoly& h, std::size_t depth_hint) {
  require_xy(h);
  std::size_t depth = depth_hint;
  for (const auto& [w, c] : h.terms())
    depth = std::max<std::size_t>(depth, static_cast<std::size_t>(std::count(w.begin(), w.end(), kY)));
  Mould m(depth);
  // Group terms by depth; the prefix-sum substitution is the same for every
  // weight, so inhomogeneous input needs no special casing.
  std::vector<MultiPoly> by_depth;
  for (std::size_t r = 0; r <= depth; ++r) by_depth.emplace_back(r + 1);
  for (const auto& [w, c] : h.terms()) {
    Exponents e = x_runs(w);
    by_depth[e.size() - 1].add_term(e, c);
  }
  for (std::size_t r = 1; r <= depth; ++r) {
    std::vector<LinearForm> s;
    s.push_back(LinearForm::zero(r));
    for (std::size_t k = 1; k <= r; ++k) s.push_back(LinearForm::range_sum(r, 0, k - 1));
    m.set(r, substitute(by_depth[r], s, r));
  }
  return m;
}

NCPoly F_to_ftilde(const NCPoly& F) {
  require_xy(F);
  return substitute_letters(F, {NCPoly::y() - NCPoly::x(), -NCPoly::y()});
}

NCPoly ftilde_to_F(const NCPoly& ftilde) {
  require_xy(ftilde);
  return substitute_letters(ftilde, {-NCPoly::x() - NCPoly::y(), -NCPoly::y()});
}

TangentialData nu(const NCPoly& ftilde) {
  require_xy(ftilde);
  for (int w = 0; w <= ftilde.max_weight(); ++w)
    if (!is_lie(ftilde.weight_component(w))) throw NotLie("nu expects a Lie polynomial");
  NCPoly F = ftilde_to_F(ftilde);
  NCPoly on_y = lie_bracket(NCPoly::y(), F);
  return {-on_y, on_y};
}

NCPoly apply_derivation(const TangentialData& d, const NCPoly& p) {
  require_xy(p);
  NCPoly out(p.alphabet());
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      NCPoly left = NCPoly::word(p.alphabet(), Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), c);
      NCPoly right = NCPoly::word(p.alphabet(), Word(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end()), 1);
      out += left * (w[i] == kX ? d.value_on_x : d.value_on_y) * right;
    }
  }
  return out;
}

}  // namespace mouldkit
