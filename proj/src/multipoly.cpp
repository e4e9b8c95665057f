#include "mouldkit/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "mouldkit/errors.hpp"

namespace mouldkit {

// ---------------------------------------------------------------- LinearForm

LinearForm LinearForm::variable(std::size_t arity, std::size_t index) {
  LinearForm l(arity);
  l.coeffs_.at(index) = 1;
  return l;
}

LinearForm LinearForm::range_sum(std::size_t arity, std::size_t first, std::size_t last) {
  LinearForm l(arity);
  for (std::size_t i = first; i <= last && i < arity; ++i) l.coeffs_[i] = 1;
  return l;
}

bool LinearForm::is_zero() const {
  if (sgn(constant_) != 0) return false;
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  if (o.arity() != arity()) throw MalformedSubstitution("linear form arity mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  constant_ += o.constant_;
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  if (o.arity() != arity()) throw MalformedSubstitution("linear form arity mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  constant_ -= o.constant_;
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  constant_ *= c;
  return *this;
}

LinearForm LinearForm::operator-() const {
  LinearForm l = *this;
  l *= Rational(-1);
  return l;
}

bool operator<(const LinearForm& a, const LinearForm& b) {
  if (a.arity() != b.arity()) return a.arity() < b.arity();
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  }
  return a.constant_ < b.constant_;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& c) {
  MultiPoly p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  Exponents e(arity, 0);
  e.at(index) = 1;
  return monomial(std::move(e), 1);
}

MultiPoly MultiPoly::monomial(Exponents e, const Rational& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::from_linear(const LinearForm& l) {
  MultiPoly p(l.arity());
  for (std::size_t i = 0; i < l.arity(); ++i) {
    if (sgn(l.coeff(i)) == 0) continue;
    Exponents e(l.arity(), 0);
    e[i] = 1;
    p.add_term(e, l.coeff(i));
  }
  p.add_term(Exponents(l.arity(), 0), l.constant());
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Rational MultiPoly::constant_term() const { return coefficient(Exponents(arity_, 0)); }

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != arity_) throw MalformedSubstitution("exponent tuple length differs from arity");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::widened(std::size_t arity) const {
  if (arity < arity_) throw MalformedSubstitution("cannot narrow a polynomial");
  MultiPoly p(arity);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f.resize(arity, 0);
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.arity_ != arity_) throw MalformedSubstitution("adding polynomials of different arity");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.arity_ != arity_) throw MalformedSubstitution("subtracting polynomials of different arity");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, x] : p.terms_) x = -x;
  return p;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity_ != b.arity_) throw MalformedSubstitution("multiplying polynomials of different arity");
  MultiPoly r(a.arity_);
  Exponents e(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(arity_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

// ---------------------------------------------------------------- operations

MultiPoly substitute(const MultiPoly& p, const std::vector<LinearForm>& sigma) {
  return substitute(p, sigma, sigma.empty() ? p.arity() : sigma.front().arity());
}

MultiPoly substitute(const MultiPoly& p, const std::vector<LinearForm>& sigma, std::size_t target) {
  if (sigma.size() != p.arity())
    throw MalformedSubstitution("substitution has " + std::to_string(sigma.size()) +
                                " forms for a polynomial in " + std::to_string(p.arity()) + " variables");
  for (const auto& l : sigma)
    if (l.arity() != target) throw MalformedSubstitution("substitution forms disagree on arity");

  // powers[i][k] = sigma[i]^k, filled lazily.
  std::vector<std::vector<MultiPoly>> powers(sigma.size());
  auto power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& table = powers[i];
    if (table.empty()) {
      table.push_back(MultiPoly::constant(target, 1));
      table.push_back(MultiPoly::from_linear(sigma[i]));
    }
    while (table.size() <= k) table.push_back(table.back() * table[1]);
    return table[k];
  };

  MultiPoly r(target);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      t = t * power(i, e[i]);
      if (t.is_zero()) break;
    }
    r += t;
  }
  return r;
}

std::optional<MultiPoly> try_exact_div(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (p.arity() != q.arity()) throw MalformedSubstitution("dividing polynomials of different arity");
  MultiPoly quotient(p.arity());
  MultiPoly rem = p;
  const auto& [lead_e, lead_c] = *q.terms().rbegin();
  Exponents e(p.arity());
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      e[i] = static_cast<std::uint16_t>(re[i] - lead_e[i]);
    }
    MultiPoly t = MultiPoly::monomial(e, rc / lead_c);
    quotient += t;
    rem -= t * q;
  }
  return quotient;
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q) {
  auto r = try_exact_div(p, q);
  if (!r) throw NotDivisible(to_string(p) + " is not divisible by " + to_string(q));
  return *std::move(r);
}

std::string to_string(const MultiPoly& p, const std::string& prefix) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest lex term first reads naturally.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool unit_monomial = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || unit_monomial) {
      os << to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << prefix << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace mouldkit
