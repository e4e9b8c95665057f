#include "mouldkit/varword.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

namespace mouldkit {

Letter make_letter(std::vector<int> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

VarWord x_word(int first, int last) {
  VarWord w;
  for (int i = first; i <= last; ++i) w.push_back(x_letter(i));
  return w;
}

Letter operator-(const Letter& a, const Letter& b) {
  std::vector<int> r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return make_letter(std::move(r));
}

Letter operator-(const Letter& a) {
  Letter r = a;
  for (auto& c : r) c = -c;
  return r;
}

std::size_t ambient_arity(const VarWord& a, const VarWord& b) {
  std::size_t n = 0;
  for (const auto& l : a) n = std::max(n, l.size());
  for (const auto& l : b) n = std::max(n, l.size());
  return n;
}

LinearForm letter_form(const Letter& l, std::size_t arity) {
  std::vector<Rational> c(arity);
  for (std::size_t i = 0; i < l.size(); ++i) c.at(i) = l[i];
  return LinearForm(std::move(c));
}

namespace {

template <class Coeff>
void add_prefixed(FormalSum<Coeff>& out, const Letter& head, const FormalSum<Coeff>& tail, const Coeff& scale,
                  bool negate) {
  for (const auto& [w, c] : tail) {
    VarWord word;
    word.reserve(w.size() + 1);
    word.push_back(head);
    word.insert(word.end(), w.begin(), w.end());
    Coeff term = c * scale;
    if (negate) term = -term;
    auto [it, inserted] = out.try_emplace(std::move(word), term);
    if (!inserted) it->second += term;
  }
}

template <class Coeff>
void drop_zeros(FormalSum<Coeff>& s) {
  for (auto it = s.begin(); it != s.end();) {
    bool zero;
    if constexpr (std::is_same_v<Coeff, RatFun>)
      zero = it->second.is_zero();
    else
      zero = sgn(it->second) == 0;
    if (zero)
      it = s.erase(it);
    else
      ++it;
  }
}

FormalSum<Rational> shuffle_rec(const VarWord& a, std::size_t i, const VarWord& b, std::size_t j) {
  if (i == a.size()) return {{VarWord(b.begin() + static_cast<std::ptrdiff_t>(j), b.end()), Rational(1)}};
  if (j == b.size()) return {{VarWord(a.begin() + static_cast<std::ptrdiff_t>(i), a.end()), Rational(1)}};
  FormalSum<Rational> out;
  add_prefixed(out, a[i], shuffle_rec(a, i + 1, b, j), Rational(1), false);
  add_prefixed(out, b[j], shuffle_rec(a, i, b, j + 1), Rational(1), false);
  return out;
}

}  // namespace

FormalSum<Rational> shuffle(const VarWord& a, const VarWord& b) {
  auto out = shuffle_rec(a, 0, b, 0);
  drop_zeros(out);
  return out;
}

const FormalSum<RatFun>& QuasiShuffle::operator()(const VarWord& a, const VarWord& b) {
  auto key = std::make_pair(a, b);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  FormalSum<RatFun> out;
  const RatFun one = RatFun::constant(arity_, 1);
  if (a.empty()) {
    out.emplace(b, one);
  } else if (b.empty()) {
    out.emplace(a, one);
  } else {
    const Letter& u = a.front();
    const Letter& v = b.front();
    VarWord a_tail(a.begin() + 1, a.end());
    VarWord b_tail(b.begin() + 1, b.end());
    add_prefixed(out, u, (*this)(a_tail, b), one, false);
    add_prefixed(out, v, (*this)(a, b_tail), one, false);
    Letter diff = u - v;
    if (!diff.empty()) {
      RatFun f = RatFun::reciprocal(letter_form(diff, arity_));
      const auto& inner = (*this)(a_tail, b_tail);
      add_prefixed(out, u, inner, f, false);
      add_prefixed(out, v, inner, f, true);
    }
    drop_zeros(out);
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

FormalSum<RatFun> quasi_shuffle_star(const VarWord& a, const VarWord& b) {
  QuasiShuffle qs(ambient_arity(a, b));
  return qs(a, b);
}

std::string to_string(const Letter& l) {
  if (l.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] == 0) continue;
    int mag = std::abs(l[i]);
    if (first)
      os << (l[i] < 0 ? "-" : "");
    else
      os << (l[i] < 0 ? "-" : "+");
    first = false;
    if (mag != 1) os << mag;
    os << "x" << (i + 1);
  }
  return os.str();
}

std::string to_string(const VarWord& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += to_string(w[i]);
  }
  return s + ")";
}

}  // namespace mouldkit
