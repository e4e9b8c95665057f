#include "mouldkit/symmetry.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "mouldkit/errors.hpp"

namespace mouldkit {

namespace {

LinearForm var(std::size_t arity, std::size_t i) { return LinearForm::variable(arity, i); }

// Index of the variable when the letter is a bare x_i, else -1.
int unit_index(const Letter& l) {
  int idx = -1;
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (l[k] == 0) continue;
    if (l[k] != 1 || idx >= 0) return -1;
    idx = static_cast<int>(k);
  }
  return idx;
}


struct PairingContext {
  const Mould& n;
  const VarWord& a;
  const VarWord& b;
  std::size_t arity;
  std::vector<bool> live;  // live[l]: N^l nonzero

  bool any_live(std::size_t lo, std::size_t hi) const {
    for (std::size_t l = lo; l <= hi && l < live.size(); ++l)
      if (live[l]) return true;
    return false;
  }

  MultiPoly eval(VarWord& prefix, std::size_t i, std::size_t j) const {
    const std::size_t ra = a.size() - i, rb = b.size() - j;
    if (!any_live(prefix.size() + std::max(ra, rb), prefix.size() + ra + rb)) return MultiPoly(arity);
    if (ra == 0 || rb == 0) {
      VarWord w = prefix;
      if (ra == 0) w.insert(w.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
      else w.insert(w.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
      return evaluate_at(n.component(w.size()), w, arity);
    }
    const Letter& u = a[i];
    const Letter& v = b[j];
    prefix.push_back(u);
    MultiPoly res = eval(prefix, i + 1, j);
    MultiPoly hi = (u == v) ? MultiPoly(arity) : eval(prefix, i + 1, j + 1);
    prefix.back() = v;
    res += eval(prefix, i, j + 1);
    if (u != v) {
      MultiPoly diff = hi - eval(prefix, i + 1, j + 1);
      if (!diff.is_zero()) {
        auto q = try_exact_div(diff, MultiPoly::from_linear(letter_form(u - v, arity)));
        if (!q) throw PoleError("alternility sum for " + to_string(a) + " and " + to_string(b) +
                                " has a pole along " + to_string(u - v));
        res += *q;
      }
    }
    prefix.pop_back();
    return res;
  }
};

}  // namespace

// ---------------------------------------------------------------- alternality

MultiPoly evaluate_at(const MultiPoly& comp, const VarWord& w, std::size_t arity) {
  if (comp.is_zero()) return MultiPoly(arity);
  if (comp.arity() != w.size())
    throw MalformedSubstitution("component of arity " + std::to_string(comp.arity()) + " evaluated at a word of length " +
                                std::to_string(w.size()));
  std::vector<std::size_t> idx;
  bool units = true;
  for (const auto& l : w) {
    int k = unit_index(l);
    if (k < 0 || static_cast<std::size_t>(k) >= arity) {
      units = false;
      break;
    }
    idx.push_back(static_cast<std::size_t>(k));
  }
  if (units) {
    MultiPoly r(arity);
    Exponents e(arity);
    for (const auto& [pe, c] : comp.terms()) {
      std::fill(e.begin(), e.end(), 0);
      for (std::size_t k = 0; k < pe.size(); ++k) e[idx[k]] += pe[k];
      r.add_term(e, c);
    }
    return r;
  }
  std::vector<LinearForm> sigma;
  for (const auto& l : w) sigma.push_back(letter_form(l, arity));
  return substitute(comp, sigma, arity);
}

MultiPoly alternal_defect(const Mould& m, std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  MultiPoly acc(n);
  const MultiPoly comp = m.component(n);
  if (comp.is_zero()) return acc;
  // Shuffles of (1..p) and (p+1..p+q) as the positions taken by the first word.
  std::vector<bool> first(n, false);
  std::fill(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(p), true);
  std::vector<std::size_t> perm(n);
  do {
    std::size_t a = 0, b = p;
    for (std::size_t k = 0; k < n; ++k) perm[k] = first[k] ? a++ : b++;
    acc += permuted(comp, perm);
  } while (std::prev_permutation(first.begin(), first.end()));
  return acc;
}

std::vector<Defect> alternal_defects(const Mould& m) {
  std::vector<Defect> out;
  if (!m.component(0).is_zero()) out.push_back({0, 0, m.component(0)});
  for (std::size_t n = 2; n <= m.depth(); ++n)
    for (std::size_t p = 1; p < n; ++p) {
      MultiPoly d = alternal_defect(m, p, n - p);
      if (!d.is_zero()) out.push_back({p, n - p, std::move(d)});
    }
  return out;
}

bool is_alternal(const Mould& m) { return alternal_defects(m).empty(); }

// ---------------------------------------------------------------- alternility

MultiPoly alternil_sum(const Mould& n, const VarWord& a, const VarWord& b, std::size_t arity) {
  PairingContext ctx{n, a, b, arity, {}};
  for (std::size_t l = 0; l <= n.depth(); ++l) ctx.live.push_back(!n[l].is_zero());
  VarWord prefix;
  return ctx.eval(prefix, 0, 0);
}

MultiPoly alternil_sum_collected(const Mould& n, const VarWord& a, const VarWord& b, std::size_t arity) {
  QuasiShuffle qs(arity);
  RatFun acc(arity);
  for (const auto& [w, c] : qs(a, b)) {
    MultiPoly val = evaluate_at(n.component(w.size()), w, arity);
    if (!val.is_zero()) acc += c * val;
  }
  if (!acc.is_polynomial())
    throw PoleError("collected alternility sum for " + to_string(a) + " and " + to_string(b) + " is " + to_string(acc, "x"));
  return acc.numerator();
}

MultiPoly alternil_defect(const Mould& n, std::size_t p, std::size_t q) {
  return alternil_sum(n, x_word(1, static_cast<int>(p)), x_word(static_cast<int>(p) + 1, static_cast<int>(p + q)), p + q);
}

std::size_t alternil_depth_bound(const Mould& n) {
  std::size_t bound = 0;
  for (std::size_t l = 1; l <= n.depth(); ++l)
    if (!n[l].is_zero()) bound = std::max(bound, l + static_cast<std::size_t>(n[l].total_degree()));
  return std::min(bound, 2 * n.depth());
}

bool is_alternil(const Mould& n) {
  const std::size_t bound = alternil_depth_bound(n);
  for (std::size_t m = 2; m <= bound; ++m)
    for (std::size_t p = 1; p < m; ++p)
      if (!alternil_defect(n, p, m - p).is_zero()) return false;
  return true;
}

AlternilityCertificate alternil_up_to_constant(const Mould& n) {
  if (!n.component(0).is_zero()) throw Error("alternility up to a constant needs N^0 = 0");
  const std::size_t bound = alternil_depth_bound(n);

  std::vector<Defect> defects;
  std::vector<Vector> rows;  // constant-term equations: sum_l k_l C_l = -E_0
  Vector rhs;
  std::vector<Defect> hard;  // non-constant parts nothing can absorb
  std::vector<Mould> units;
  for (std::size_t l = 1; l <= bound; ++l) {
    Mould e(l);
    e.set(l, MultiPoly::constant(l, 1));
    units.push_back(std::move(e));
  }
  for (std::size_t m = 2; m <= bound; ++m)
    for (std::size_t p = 1; p < m; ++p) {
      const std::size_t q = m - p;
      MultiPoly d = alternil_defect(n, p, q);
      Vector row(bound);
      bool any = !d.is_zero();
      for (std::size_t l = std::max(p, q); l <= m; ++l) {
        row[l - 1] = alternil_defect(units[l - 1], p, q).constant_term();
        if (row[l - 1] != 0) any = true;
      }
      if (!any) continue;
      rows.push_back(row);
      rhs.push_back(-d.constant_term());
      defects.push_back({p, q, std::move(d)});
    }

  AlternilityCertificate cert;
  cert.constant.values.assign(bound + 1, Rational(0));
  if (!rows.empty()) {
    RatMatrix a(rows.size(), bound);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < bound; ++j) a(i, j) = rows[i][j];
    if (auto sol = solve(a, rhs))
      for (std::size_t l = 1; l <= bound; ++l) cert.constant.values[l] = (*sol)[l - 1];
  }
  for (std::size_t i = 0; i < defects.size(); ++i) {
    Rational shift = 0;
    for (std::size_t j = 0; j < bound; ++j) shift += rows[i][j] * cert.constant.values[j + 1];
    MultiPoly r = defects[i].value + MultiPoly::constant(defects[i].value.arity(), shift);
    if (!r.is_zero()) cert.residual_defects.push_back({defects[i].p, defects[i].q, std::move(r)});
  }
  return cert;
}

// -------------------------------------------------------------------- senary

MultiPoly senary_rhs_expanded(const Mould& m, std::size_t r) {
  if (r == 0) throw SlotError("senary relation needs r >= 1");
  std::vector<LinearForm> s1{-LinearForm::range_sum(r, 0, r - 1)};
  for (std::size_t k = 1; k < r; ++k) s1.push_back(var(r, k - 1));
  MultiPoly out = substitute(m.component(r), s1, r);

  const MultiPoly lower = m.component(r - 1);
  if (r >= 2 && !lower.is_zero()) {
    std::vector<LinearForm> shifted{-LinearForm::range_sum(r, 1, r - 1)}, plain;
    for (std::size_t k = 1; k + 1 < r; ++k) shifted.push_back(var(r, k));
    for (std::size_t k = 0; k + 1 < r; ++k) plain.push_back(var(r, k));
    MultiPoly diff = substitute(lower, shifted, r) - substitute(lower, plain, r);
    out += exact_div(diff, MultiPoly::from_linear(LinearForm::range_sum(r, 0, r - 1)));
  }
  return out;
}

MultiPoly senary_rhs_composed(const Mould& m, std::size_t r) {
  if (r == 0) throw SlotError("senary relation needs r >= 1");
  return push(mantar(teru(mantar(m.truncated(r))))).component(r);
}

MultiPoly senary_defect(const Mould& m, std::size_t r) {
  if (r == 0) throw SlotError("senary relation needs r >= 1");
  return teru(m.truncated(r)).component(r) - senary_rhs_expanded(m, r);
}

bool senary_holds(const Mould& m, std::size_t r) { return senary_defect(m, r).is_zero(); }

MultiPoly senary_translated_defect(const Mould& m, std::size_t r) {
  if (r == 0) throw SlotError("senary relation needs r >= 1");
  const Mould t = m.truncated(r);
  Mould u = u_map(t);
  const std::size_t d = r + 1;

  MultiPoly lhs = u.component(d);
  if (r >= 2) lhs += coll(u, d, 2).component(d);

  std::vector<std::size_t> rot(d);
  for (std::size_t k = 0; k + 1 < d; ++k) rot[k] = k + 1;
  rot[d - 1] = 0;
  MultiPoly rhs = permuted(u.component(d), rot);
  if (r == 1) u.set(1, MultiPoly::constant(1, t.component(0).constant_term()));
  rhs += coll(u, d, 1).component(d);
  return lhs - rhs;
}

bool senary_translated_holds(const Mould& m, std::size_t r) { return senary_translated_defect(m, r).is_zero(); }

// ------------------------------------------------------------- ARI subspaces

bool in_ari_sena_pusnu(const Mould& m) {
  if (!m.component(0).is_zero()) return false;
  for (std::size_t r = 1; r <= m.depth() + 1; ++r)
    if (!senary_holds(m, r)) return false;
  return is_pus_neutral(swap(m));
}

bool in_ari_al_star_il(const Mould& m) {
  if (!is_alternal(m)) return false;
  return alternil_up_to_constant(swap(m)).valid();
}

MouldCoordinates::MouldCoordinates(int weight) : weight_(weight) {
  if (weight < 1) throw WeightTooSmall("mould coordinates need weight >= 1");
  for (std::size_t r = 1; r <= static_cast<std::size_t>(weight); ++r) {
    const unsigned deg = static_cast<unsigned>(weight) - static_cast<unsigned>(r);
    // exponent vectors of total degree deg, lexicographically descending
    Exponents e(r, 0);
    std::vector<Exponents> all;
    auto rec = [&](auto&& self, std::size_t k, unsigned left) -> void {
      if (k + 1 == r) {
        e[k] = static_cast<std::uint16_t>(left);
        all.push_back(e);
        return;
      }
      for (unsigned v = left + 1; v-- > 0;) {
        e[k] = static_cast<std::uint16_t>(v);
        self(self, k + 1, left - v);
      }
    };
    rec(rec, 0, deg);
    for (auto& x : all) coords_.emplace_back(r, std::move(x));
  }
}

Mould MouldCoordinates::unit(std::size_t i) const {
  Mould m(static_cast<std::size_t>(weight_));
  m.set(coords_[i].first, MultiPoly::monomial(coords_[i].second, 1));
  return m;
}

Mould MouldCoordinates::element(const Vector& v) const {
  Mould m(static_cast<std::size_t>(weight_));
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (v[i] == 0) continue;
    const std::size_t r = coords_[i].first;
    m.set(r, m[r] + MultiPoly::monomial(coords_[i].second, v[i]));
  }
  return m;
}

std::vector<std::string> MouldCoordinates::labels() const {
  std::vector<std::string> out;
  for (const auto& [r, e] : coords_)
    out.push_back("M" + std::to_string(r) + "[" + to_string(MultiPoly::monomial(e, 1), "u") + "]");
  return out;
}

namespace {

// Linear conditions keyed by (family, p, q, monomial), filled one unknown at
// a time.
class ConditionTable {
 public:
  explicit ConditionTable(std::size_t unknowns) : n_(unknowns) {}

  void add(int family, std::size_t p, std::size_t q, const MultiPoly& value, std::size_t column) {
    for (const auto& [e, c] : value.terms()) {
      Vector& row = rows_[{family, p, q, e}];
      if (row.empty()) row.assign(n_, Rational(0));
      row[column] += c;
    }
  }
  void pin(std::size_t column) {
    Vector row(n_);
    row[column] = 1;
    extra_.push_back(std::move(row));
  }
  std::vector<Vector> kernel() const {
    RowEchelon ech(n_);
    for (const auto& [k, row] : rows_) ech.add_row(row);
    for (const auto& row : extra_) ech.add_row(row);
    return ech.nullspace();
  }

 private:
  std::size_t n_;
  std::map<std::tuple<int, std::size_t, std::size_t, Exponents>, Vector> rows_;
  std::vector<Vector> extra_;
};

enum Family { kAlternal = 0, kAlternil = 1, kSenary = 2, kPusNeutral = 3 };

void add_alternal(ConditionTable& tab, const Mould& m, std::size_t depth, std::size_t column) {
  for (std::size_t p = 1; p < depth; ++p) tab.add(kAlternal, p, depth - p, alternal_defect(m, p, depth - p), column);
}

SubspaceBasis project(const MouldCoordinates& coords, const std::vector<Vector>& kernel) {
  SubspaceBasis out;
  out.weight = coords.weight();
  out.ambient_dim = coords.size();
  out.labels = coords.labels();
  std::vector<Vector> proj;
  for (const auto& v : kernel) proj.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(coords.size()));
  out.basis = canonical_span(proj, coords.size());
  return out;
}

}  // namespace

SubspaceBasis al_il_space(int weight, bool depth_two) {
  const MouldCoordinates coords(weight);
  const std::size_t w = static_cast<std::size_t>(weight);
  const std::size_t n = coords.size();
  ConditionTable tab(n + w);
  for (std::size_t j = 0; j < n; ++j) {
    const Mould m = coords.unit(j);
    const std::size_t r = coords.depth_of(j);
    add_alternal(tab, m, r, j);
    const Mould s = swap(m);
    for (std::size_t total = r; total <= std::min(w, 2 * r); ++total)
      for (std::size_t p = 1; p < total; ++p) tab.add(kAlternil, p, total - p, alternil_defect(s, p, total - p), j);
    if (depth_two && r == 1) tab.pin(j);
  }
  for (std::size_t l = 1; l <= w; ++l) {
    Mould c(l);
    c.set(l, MultiPoly::constant(l, 1));
    for (std::size_t total = l; total <= std::min(w, 2 * l); ++total)
      for (std::size_t p = 1; p < total; ++p) tab.add(kAlternil, p, total - p, alternil_defect(c, p, total - p), n + l - 1);
  }
  return project(coords, tab.kernel());
}

SubspaceBasis sena_pusnu_al_space(int weight) {
  const MouldCoordinates coords(weight);
  const std::size_t w = static_cast<std::size_t>(weight);
  const std::size_t n = coords.size();
  ConditionTable tab(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Mould m = coords.unit(j);
    const std::size_t r = coords.depth_of(j);
    add_alternal(tab, m, r, j);
    for (std::size_t k = r; k <= r + 1 && k <= w + 1; ++k) tab.add(kSenary, k, 0, senary_defect(m, k), j);
    tab.add(kPusNeutral, r, 0, pus_sum(swap(m), r), j);
  }
  return project(coords, tab.kernel());
}

}  // namespace mouldkit
