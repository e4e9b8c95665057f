#pragma once

#include <cstddef>
#include <vector>

#include "mouldkit/multipoly.hpp"

namespace mouldkit {

// Finite mould (M^0, M^1(x1), ..., M^D(x1..xD)); M^m has arity m and
// components past the declared depth D are zero.
class Mould {
 public:
  Mould() : comps_{MultiPoly(0)} {}
  explicit Mould(std::size_t depth);

  static Mould unit(std::size_t depth = 0);

  std::size_t depth() const { return comps_.size() - 1; }
  // Component m; the zero polynomial of arity m beyond the depth.
  MultiPoly component(std::size_t m) const;
  const MultiPoly& operator[](std::size_t m) const { return comps_.at(m); }
  // Sets component m (arity must be m), growing the depth if needed.
  void set(std::size_t m, MultiPoly p);

  bool is_zero() const;
  // M^r = 0 for all r < d.
  bool in_filtration(std::size_t d) const;
  Mould truncated(std::size_t depth) const;

  Mould& operator+=(const Mould& o);
  Mould& operator-=(const Mould& o);
  Mould& operator*=(const Rational& c);
  friend Mould operator+(Mould a, const Mould& b) { return a += b; }
  friend Mould operator-(Mould a, const Mould& b) { return a -= b; }
  friend Mould operator*(const Rational& c, Mould a) { return a *= c; }
  // Equality up to trailing zero components.
  friend bool operator==(const Mould& a, const Mould& b);

 private:
  std::vector<MultiPoly> comps_;
};

// Mould with constant components C_0, C_1, ...
struct ConstantMould {
  std::vector<Rational> values;

  Rational operator[](std::size_t m) const { return m < values.size() ? values[m] : Rational(0); }
  Mould to_mould() const;
};

// Deconcatenation product: (A x B)^m = sum_i A^i(x1..xi) B^{m-i}(x_{i+1}..xm).
Mould mould_mul(const Mould& a, const Mould& b);

// swap(M)^m(v1..vm) = M^m(vm, v_{m-1}-vm, ..., v1-v2)
Mould swap(const Mould& m);
// unswap(N)^m(u1..um) = N^m(u1+..+um, u1+..+u_{m-1}, ..., u1); inverse of swap.
Mould unswap(const Mould& m);
// pus(M)^m(u1..um) = M^m(um, u1, ..., u_{m-1})
Mould pus(const Mould& m);
// push(M)^m(u1..um) = M^m(-u1-..-um, u1, ..., u_{m-1})
Mould push(const Mould& m);
// mantar(M)^m(u1..um) = (-1)^{m-1} M^m(um, ..., u1)
Mould mantar(const Mould& m);
// teru(M)^m = M^m + (M^{m-1}(u1..u_{m-2}, u_{m-1}+um) - M^{m-1}(u1..u_{m-1})) / um
// for m >= 2, teru(M)^m = M^m for m <= 1. The result has depth D+1 since the
// correction at D+1 involves M^D.
Mould teru(const Mould& m);
// t(M)^m(x1..xm) = M^{m-1}(x2-x1, ..., xm-x1) for m >= 2, identity for m <= 1.
Mould translate_t(const Mould& m);
// t o swap
Mould u_map(const Mould& m);
// Replaces component `depth` by the divided difference
//   (M^{m-1}(.., xi, x_{i+2}, ..) - M^{m-1}(.., x_{i+1}, x_{i+2}, ..)) / (xi - x_{i+1}).
// Requires 2 <= depth and 1 <= slot <= depth-1, else SlotError.
Mould coll(const Mould& m, std::size_t depth, std::size_t slot);
// neg(M)^m(u) = M^m(-u1, ..., -um)
Mould neg(const Mould& m);

// sum over cyclic rotations of the arguments of M^m vanishes for 1 <= m <= D.
bool is_pus_neutral(const Mould& m);
// The rotation sum of component m (witness for is_pus_neutral).
MultiPoly pus_sum(const Mould& m, std::size_t depth);

// Component p evaluated at permuted variables: result(x) = p(x_{perm[0]}, ...).
MultiPoly permuted(const MultiPoly& p, const std::vector<std::size_t>& perm);

}  // namespace mouldkit
