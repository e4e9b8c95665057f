#pragma once

// Reference implementations used to cross-check the library. Each one is
// written from the defining formula by brute force or pointwise evaluation
// and shares no code path with the routine it checks.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "mouldkit/mould.hpp"
#include "mouldkit/multipoly.hpp"
#include "mouldkit/ncpoly.hpp"
#include "mouldkit/ratfun.hpp"
#include "mouldkit/varword.hpp"

namespace oracle {

using mouldkit::Rational;
using Point = std::vector<Rational>;

inline Rational eval(const mouldkit::MultiPoly& p, const Point& x) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

inline Rational eval(const mouldkit::LinearForm& l, const Point& x) {
  Rational s = l.constant();
  for (std::size_t i = 0; i < l.arity(); ++i) s += l.coeff(i) * x[i];
  return s;
}

inline Rational eval(const mouldkit::RatFun& f, const Point& x) {
  Rational v = eval(f.numerator(), x);
  for (const auto& [l, k] : f.denominator_factors())
    for (int i = 0; i < k; ++i) v /= eval(l, x);
  return v;
}

// Generic point: distinct nonzero coordinates with no small integer
// relations in practice.
inline Point random_point(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-997, 997), den(1, 89);
  Point p(n);
  for (auto& v : p) {
    int a = 0;
    while (a == 0) a = num(rng);
    v = Rational(a, den(rng));
    v.canonicalize();
  }
  return p;
}

// Shuffle coproduct: every subset S of positions gives w_S (x) w_{S^c}.
inline bool shuffle_primitive(const mouldkit::NCPoly& p) {
  using mouldkit::Word;
  std::map<std::pair<Word, Word>, Rational> delta;
  for (const auto& [w, c] : p.terms()) {
    const std::size_t n = w.size();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      Word a, b;
      for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? a : b).push_back(w[i]);
      delta[{a, b}] += c;
    }
  }
  for (const auto& [w, c] : p.terms()) {
    delta[{w, {}}] -= c;
    delta[{{}, w}] -= c;
  }
  return std::all_of(delta.begin(), delta.end(), [](const auto& kv) { return kv.second == 0; });
}

// Lyndon: strictly smaller than every proper rotation.
inline bool is_lyndon(const mouldkit::Word& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    mouldkit::Word r(w.begin() + static_cast<long>(k), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(k));
    if (!(w < r)) return false;
  }
  return true;
}

inline long long count_lyndon(int length, int letters) {
  long long count = 0, total = 1;
  for (int i = 0; i < length; ++i) total *= letters;
  for (long long code = 0; code < total; ++code) {
    mouldkit::Word w(static_cast<std::size_t>(length));
    long long c = code;
    for (int i = length - 1; i >= 0; --i) {
      w[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c % letters);
      c /= letters;
    }
    if (is_lyndon(w)) ++count;
  }
  return count;
}

// Alternality sum at a point: every permutation of p+q positions that keeps
// both blocks in order.
inline Rational alternal_at(const mouldkit::Mould& m, std::size_t p, std::size_t q, const Point& x) {
  const std::size_t n = p + q;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational s = 0;
  do {
    std::size_t lastA = 0, lastB = p;
    bool ok = true;
    bool seenA = false, seenB = false;
    for (std::size_t v : perm) {
      if (v < p) {
        if (seenA && v < lastA) ok = false;
        lastA = v;
        seenA = true;
      } else {
        if (seenB && v < lastB) ok = false;
        lastB = v;
        seenB = true;
      }
    }
    if (!ok) continue;
    Point arg(n);
    for (std::size_t i = 0; i < n; ++i) arg[i] = x[perm[i]];
    s += eval(m.component(n), arg);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return s;
}

// Letters of a word evaluated at a point.
inline Point letters_at(const mouldkit::VarWord& w, const Point& x) {
  Point out;
  for (const auto& l : w) {
    Rational v = 0;
    for (std::size_t i = 0; i < l.size(); ++i) v += l[i] * x[i];
    out.push_back(v);
  }
  return out;
}

// Contracting shuffle with numeric coefficients: f(l) = 1 / l(y), f(0) = 0.
inline std::map<mouldkit::VarWord, Rational> qsh_at(const mouldkit::VarWord& a, const mouldkit::VarWord& b,
                                                    const Point& y) {
  using mouldkit::VarWord;
  std::map<VarWord, Rational> out;
  if (a.empty()) {
    out[b] = 1;
    return out;
  }
  if (b.empty()) {
    out[a] = 1;
    return out;
  }
  const auto& u = a.front();
  const auto& v = b.front();
  VarWord ra(a.begin() + 1, a.end()), rb(b.begin() + 1, b.end());
  auto prepend = [&](const auto& src, const mouldkit::Letter& l, const Rational& c) {
    for (const auto& [w, k] : src) {
      VarWord nw{l};
      nw.insert(nw.end(), w.begin(), w.end());
      out[nw] += c * k;
    }
  };
  prepend(qsh_at(ra, b, y), u, 1);
  prepend(qsh_at(a, rb, y), v, 1);
  mouldkit::Letter d(std::max(u.size(), v.size()), 0);
  for (std::size_t i = 0; i < u.size(); ++i) d[i] += u[i];
  for (std::size_t i = 0; i < v.size(); ++i) d[i] -= v[i];
  bool zero = std::all_of(d.begin(), d.end(), [](int c) { return c == 0; });
  if (!zero) {
    Rational f = 1 / letters_at({d}, y)[0];
    const auto inner = qsh_at(ra, rb, y);
    prepend(inner, u, f);
    prepend(inner, v, -f);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Alternility sum for (x1..xp), (x_{p+1}..x_{p+q}) at y = x = point.
inline Rational alternil_at(const mouldkit::Mould& n, std::size_t p, std::size_t q, const Point& x) {
  const auto terms = qsh_at(mouldkit::x_word(1, static_cast<int>(p)),
                            mouldkit::x_word(static_cast<int>(p) + 1, static_cast<int>(p + q)), x);
  Rational s = 0;
  for (const auto& [w, c] : terms) s += c * eval(n.component(w.size()), letters_at(w, x));
  return s;
}

// teru(M)^r - (expanded senary right-hand side) at a point.
inline Rational senary_at(const mouldkit::Mould& m, std::size_t r, const Point& y) {
  const auto& M = [&](std::size_t d, const Point& args) { return eval(m.component(d), args); };
  Point head(y.begin(), y.begin() + static_cast<long>(r));
  Rational lhs = M(r, head);
  Rational sum = 0;
  for (std::size_t i = 0; i < r; ++i) sum += y[i];
  Rational rhs = 0;
  {
    Point a{-sum};
    for (std::size_t k = 0; k + 1 < r; ++k) a.push_back(y[k]);
    rhs += M(r, a);
  }
  if (r >= 2) {
    Point merged(y.begin(), y.begin() + static_cast<long>(r - 1));
    merged[r - 2] += y[r - 1];
    Point plain(y.begin(), y.begin() + static_cast<long>(r - 1));
    lhs += (M(r - 1, merged) - M(r - 1, plain)) / y[r - 1];

    Point shifted{-(sum - y[0])};
    for (std::size_t k = 1; k + 1 < r; ++k) shifted.push_back(y[k]);
    rhs += (M(r - 1, shifted) - M(r - 1, plain)) / sum;
  }
  return lhs - rhs;
}

// Number of linearly independent rows, by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
