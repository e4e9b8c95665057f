#include "mouldkit/ratfun.hpp"

#include <sstream>

#include "mouldkit/errors.hpp"

namespace mouldkit {

namespace {

// Splits l = scale * normalized with normalized integer-primitive and its
// first nonzero coefficient positive.
std::pair<LinearForm, Rational> normalize_factor(const LinearForm& l) {
  Integer den_lcm = 1, num_gcd = 0;
  auto visit = [&](const Rational& c) {
    if (sgn(c) == 0) return;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  };
  for (const auto& c : l.coeffs()) visit(c);
  visit(l.constant());
  if (num_gcd == 0) throw NotDivisible("reciprocal of the zero linear form");
  Rational scale(num_gcd, den_lcm);
  scale.canonicalize();
  const Rational* lead = nullptr;
  for (const auto& c : l.coeffs())
    if (sgn(c) != 0) {
      lead = &c;
      break;
    }
  if (!lead) lead = &l.constant();
  if (sgn(*lead) < 0) scale = -scale;
  LinearForm n = l;
  n *= Rational(1) / scale;
  return {n, scale};
}

bool has_variables(const LinearForm& l) {
  for (const auto& c : l.coeffs())
    if (sgn(c) != 0) return true;
  return false;
}

}  // namespace

RatFun RatFun::reciprocal(const LinearForm& l) {
  auto [n, scale] = normalize_factor(l);
  RatFun f = RatFun::constant(l.arity(), Rational(1) / scale);
  if (has_variables(n)) f.den_[n] = 1;
  return f;
}

MultiPoly RatFun::denominator() const {
  MultiPoly d = MultiPoly::constant(arity(), 1);
  for (const auto& [l, k] : den_) d = d * MultiPoly::from_linear(l).pow(static_cast<unsigned>(k));
  return d;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  std::map<LinearForm, int> lcm = den_;
  for (const auto& [l, k] : o.den_) {
    auto& m = lcm[l];
    m = std::max(m, k);
  }
  auto lift = [&](const MultiPoly& num, const std::map<LinearForm, int>& den) {
    MultiPoly r = num;
    for (const auto& [l, k] : lcm) {
      auto it = den.find(l);
      int have = it == den.end() ? 0 : it->second;
      if (k > have) r = r * MultiPoly::from_linear(l).pow(static_cast<unsigned>(k - have));
    }
    return r;
  };
  num_ = lift(num_, den_) + lift(o.num_, o.den_);
  den_ = std::move(lcm);
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ = num_ * o.num_;
  for (const auto& [l, k] : o.den_) den_[l] += k;
  normalize();
  return *this;
}

RatFun& RatFun::operator*=(const Rational& c) {
  num_ *= c;
  if (num_.is_zero()) den_.clear();
  return *this;
}

RatFun RatFun::operator-() const {
  RatFun f = *this;
  f.num_ *= Rational(-1);
  return f;
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    MultiPoly factor = MultiPoly::from_linear(it->first);
    while (it->second > 0) {
      auto q = try_exact_div(num_, factor);
      if (!q) break;
      num_ = *std::move(q);
      --it->second;
    }
    if (it->second == 0)
      it = den_.erase(it);
    else
      ++it;
  }
}

std::string to_string(const RatFun& f, const std::string& prefix) {
  if (f.is_polynomial()) return to_string(f.numerator(), prefix);
  std::ostringstream os;
  os << "(" << to_string(f.numerator(), prefix) << ")/(";
  bool first = true;
  for (const auto& [l, k] : f.denominator_factors()) {
    if (!first) os << "*";
    first = false;
    os << "(" << to_string(MultiPoly::from_linear(l), prefix) << ")";
    if (k > 1) os << "^" << k;
  }
  os << ")";
  return os.str();
}

}  // namespace mouldkit
