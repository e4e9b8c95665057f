#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mouldkit/rational.hpp"

namespace mouldkit {

using Exponents = std::vector<std::uint16_t>;

// Affine form c_0 + sum_i c_i t_i over a fixed number of target variables.
// Mostly used with integer coefficients and zero constant.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::size_t arity) : coeffs_(arity) {}
  LinearForm(std::vector<Rational> coeffs, Rational constant = 0)
      : coeffs_(std::move(coeffs)), constant_(std::move(constant)) {}

  static LinearForm zero(std::size_t arity) { return LinearForm(arity); }
  static LinearForm variable(std::size_t arity, std::size_t index);
  // t_first + ... + t_last (0-based, inclusive); empty range gives zero.
  static LinearForm range_sum(std::size_t arity, std::size_t first, std::size_t last);

  std::size_t arity() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(std::size_t i) const { return coeffs_[i]; }
  const Rational& constant() const { return constant_; }
  bool is_zero() const;

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const Rational& c);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(const Rational& c, LinearForm a) { return a *= c; }
  LinearForm operator-() const;

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.coeffs_ == b.coeffs_ && a.constant_ == b.constant_;
  }
  friend bool operator<(const LinearForm& a, const LinearForm& b);

 private:
  std::vector<Rational> coeffs_;
  Rational constant_ = 0;
};

// Sparse polynomial in `arity` commuting variables with rational
// coefficients. Terms are kept in lexicographic exponent order; zero
// coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t arity) : arity_(arity) {}

  static MultiPoly constant(std::size_t arity, const Rational& c);
  static MultiPoly variable(std::size_t arity, std::size_t index);
  static MultiPoly monomial(Exponents e, const Rational& c);
  static MultiPoly from_linear(const LinearForm& l);

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of the constant term (0 when absent).
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  void add_term(const Exponents& e, const Rational& c);

  // Same polynomial viewed in `arity` >= arity() variables.
  MultiPoly widened(std::size_t arity) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned e) const;

 private:
  std::size_t arity_ = 0;
  TermMap terms_;
};

// Replaces variable i of p by sigma[i]; the result lives in the arity of the
// forms. Throws MalformedSubstitution when sigma.size() != p.arity() or the
// forms disagree on their arity.
MultiPoly substitute(const MultiPoly& p, const std::vector<LinearForm>& sigma);
// As above with the target arity explicit; needed when p has no variables.
MultiPoly substitute(const MultiPoly& p, const std::vector<LinearForm>& sigma, std::size_t target_arity);

// r with r * q == p. Lex-order long division; throws NotDivisible when the
// remainder is nonzero.
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q);
std::optional<MultiPoly> try_exact_div(const MultiPoly& p, const MultiPoly& q);

// Human-readable form, variables named prefix1..prefixN.
std::string to_string(const MultiPoly& p, const std::string& prefix = "x");

}  // namespace mouldkit
