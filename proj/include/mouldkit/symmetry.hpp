#pragma once

#include <cstddef>
#include <vector>

#include "mouldkit/linalg.hpp"
#include "mouldkit/mould.hpp"
#include "mouldkit/varword.hpp"

namespace mouldkit {

// A nonzero (p, q) identity defect.
struct Defect {
  std::size_t p = 0;
  std::size_t q = 0;
  MultiPoly value;
};

// Constant mould C making N + C alternil, or the defects that no constant
// can absorb.
struct AlternilityCertificate {
  ConstantMould constant;
  std::vector<Defect> residual_defects;

  bool valid() const { return residual_defects.empty(); }
};

// ---------------------------------------------------------------- alternality

// sum over shuffles a of (x1..xp) and (x_{p+1}..x_{p+q}) of M^{p+q}(a).
MultiPoly alternal_defect(const Mould& m, std::size_t p, std::size_t q);
std::vector<Defect> alternal_defects(const Mould& m);
bool is_alternal(const Mould& m);

// ---------------------------------------------------------------- alternility

// M^{l}(letters of w) in `arity` variables.
MultiPoly evaluate_at(const MultiPoly& comp, const VarWord& w, std::size_t arity);

// sum_alpha qsh(a, b; alpha)|_{y=x} N^{l(alpha)}(alpha), computed by exact
// divided differences through the contracting-shuffle recursion. Every
// intermediate quantity is a polynomial for polynomial N; a failed division
// is reported as PoleError.
MultiPoly alternil_sum(const Mould& n, const VarWord& a, const VarWord& b, std::size_t arity);

// Same sum taken the long way: collect the rational-function coefficients
// of the quasi-shuffle, specialize y = x, add everything up and only then
// demand a polynomial (PoleError otherwise). Independent of alternil_sum.
MultiPoly alternil_sum_collected(const Mould& n, const VarWord& a, const VarWord& b, std::size_t arity);

// The (p, q) alternility sum for words (x1..xp), (x_{p+1}..x_{p+q}).
MultiPoly alternil_defect(const Mould& n, std::size_t p, std::size_t q);

// Largest p+q with a possibly nonzero alternility sum.
std::size_t alternil_depth_bound(const Mould& n);

bool is_alternil(const Mould& n);
// Joint exact solve for C_1, C_2, ... over every (p, q). Requires N^0 = 0.
AlternilityCertificate alternil_up_to_constant(const Mould& n);

// -------------------------------------------------------------------- senary

// teru(M)^r - push o mantar o teru o mantar(M)^r
MultiPoly senary_defect(const Mould& m, std::size_t r);
bool senary_holds(const Mould& m, std::size_t r);

// The right-hand side written out:
//   M^r(-y1-..-yr, y1, .., y_{r-1})
//     + (M^{r-1}(-y2-..-yr, y2, .., y_{r-1}) - M^{r-1}(y1, .., y_{r-1})) / (y1+..+yr)
MultiPoly senary_rhs_expanded(const Mould& m, std::size_t r);
// push o mantar o teru o mantar(M)^r, computed by composing the operators.
MultiPoly senary_rhs_composed(const Mould& m, std::size_t r);

// The translated form at depth r+1:
//   u(M)(x) + coll_{2,3} u(M)(x) = u(M)(x2,..,x_{r+1},x1) + coll_{1,2} u(M)(x)
// For r = 1 there is no coll_{2,3} and the collision on the right reads the
// depth-1 argument through the translation formula, i.e. M^0.
MultiPoly senary_translated_defect(const Mould& m, std::size_t r);
bool senary_translated_holds(const Mould& m, std::size_t r);

// ------------------------------------------------------------- ARI subspaces

// M^0 = 0, senary for every r (checked up to depth+1, all higher r are
// trivially true) and swap(M) pus-neutral.
bool in_ari_sena_pusnu(const Mould& m);
// M^0 = 0, alternal, and swap(M) alternil up to a constant mould.
bool in_ari_al_star_il(const Mould& m);

// Coordinates of weight-w polynomial moulds: one coordinate per monomial of
// degree w-r in r variables, r = 1..w, ordered by r then exponent.
class MouldCoordinates {
 public:
  explicit MouldCoordinates(int weight);

  int weight() const { return weight_; }
  std::size_t size() const { return coords_.size(); }
  std::size_t depth_of(std::size_t i) const { return coords_[i].first; }
  const Exponents& exponents_of(std::size_t i) const { return coords_[i].second; }
  // Basis mould for coordinate i.
  Mould unit(std::size_t i) const;
  Mould element(const Vector& v) const;
  std::vector<std::string> labels() const;

 private:
  int weight_;
  std::vector<std::pair<std::size_t, Exponents>> coords_;
};

// Weight-w moulds that are alternal with swap alternil up to a constant.
// With `depth_two` the depth-1 component is forced to vanish.
SubspaceBasis al_il_space(int weight, bool depth_two = false);
// Weight-w moulds that are alternal, senary for all r, and swap pus-neutral.
SubspaceBasis sena_pusnu_al_space(int weight);

}  // namespace mouldkit
