#pragma once

#include <map>
#include <string>

#include "mouldkit/multipoly.hpp"

namespace mouldkit {

// Rational function whose denominator is a product of linear forms. This is
// the closure of the quasi-shuffle coefficient field under the operations we
// need: every pole comes from a reciprocal 1/(n_1 y_i1 + ... + n_k y_ik).
//
// Canonical form: each denominator factor is integer-primitive with positive
// leading coefficient, and no factor divides the numerator.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(std::size_t arity) : num_(arity) {}
  explicit RatFun(MultiPoly p) : num_(std::move(p)) {}
  static RatFun constant(std::size_t arity, const Rational& c) {
    return RatFun(MultiPoly::constant(arity, c));
  }
  // 1 / l. Throws NotDivisible when l is zero.
  static RatFun reciprocal(const LinearForm& l);

  std::size_t arity() const { return num_.arity(); }
  const MultiPoly& numerator() const { return num_; }
  const std::map<LinearForm, int>& denominator_factors() const { return den_; }
  MultiPoly denominator() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator*=(const Rational& c);
  RatFun operator-() const;
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator*(RatFun a, const MultiPoly& b) { return a *= RatFun(b); }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Idempotent; called by every mutating operation.
  void normalize();

 private:
  MultiPoly num_;
  std::map<LinearForm, int> den_;
};

std::string to_string(const RatFun& f, const std::string& prefix = "y");

}  // namespace mouldkit
