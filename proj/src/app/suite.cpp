#include "mouldkit/app/suite.hpp"

#include <algorithm>
#include <sstream>

#include "mouldkit/app/pool.hpp"
#include "mouldkit/app/sampling.hpp"
#include "mouldkit/bridge.hpp"
#include "mouldkit/errors.hpp"
#include "mouldkit/lie.hpp"
#include "mouldkit/liealg.hpp"
#include "mouldkit/symmetry.hpp"

namespace mouldkit::app {

namespace {

using io::Json;
using mouldkit::to_string;

std::string range_text(int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

Check make(const std::string& name, bool ok, std::string detail, Json witness = Json()) {
  return Check{name, ok ? Status::Pass : Status::Fail, std::move(detail), std::move(witness)};
}

std::vector<NCPoly> basis_elements(const SuiteContext& ctx, const std::string& algebra, int w) {
  const SubspaceBasis b = ctx.basis(algebra, w);
  std::vector<NCPoly> out;
  for (const auto& v : b.basis) out.push_back(lie_element(b, v));
  return out;
}

struct Item {
  int weight;
  NCPoly poly;
};

std::vector<Item> dmr_items(const SuiteContext& ctx, int lo, int hi) {
  std::vector<Item> items;
  for (int w = lo; w <= hi; ++w)
    for (auto& f : basis_elements(ctx, "dmr", w)) items.push_back({w, std::move(f)});
  return items;
}

// ------------------------------------------------------------------ families

Check krv2_vanishes(const SuiteContext& ctx, int) {
  const auto b = ctx.basis("krv", 2);
  return make("krv2-vanishes", b.dimension() == 0, "dim krv_2 = " + std::to_string(b.dimension()),
              Json{{"dimension", b.dimension()}});
}

Check senary_on_dmr(const SuiteContext& ctx, int max_weight) {
  const int hi = std::min(8, max_weight);
  const auto items = dmr_items(ctx, 3, hi);
  auto results = parallel_map(items.size(), ctx.threads, [&](std::size_t i) {
    Json fails = Json::array();
    const Mould m = ma(items[i].poly);
    for (std::size_t r = 1; r <= 3; ++r) {
      MultiPoly d = senary_defect(m, r);
      if (!d.is_zero())
        fails.push_back({{"weight", items[i].weight}, {"ftilde", io::to_json(items[i].poly)}, {"r", r}, {"defect", io::to_json(d)}});
    }
    return fails;
  });
  Json witness = Json::array();
  for (auto& f : results)
    for (auto& x : f) witness.push_back(x);
  return make("senary-on-dmr-images", witness.empty(),
              std::to_string(items.size()) + " dmr basis elements, weights " + range_text(3, hi) + ", r = 1..3",
              witness.empty() ? Json() : witness);
}

// Lyndon basis, random Lie combinations and random KV1 solutions.
std::vector<NCPoly> kv1_sample(const SuiteContext& ctx, int w) {
  Rng rng(ctx.seed + 1000 + static_cast<std::uint64_t>(w));
  std::vector<NCPoly> out = lyndon_basis(w, Alphabet::xy());
  for (int k = 0; k < 20; ++k) out.push_back(random_lie(w, rng));
  const SubspaceBasis kv1 = kv1_basis(w);
  if (kv1.dimension() > 0)
    for (int k = 0; k < 5; ++k) out.push_back(lie_element(kv1, random_combination(kv1.basis, kv1.ambient_dim, rng)));
  return out;
}

struct Kv1Row {
  int weight = 0;
  NCPoly F;
  bool kv1 = false, senary = false, antipalindrome = false;
  int first_senary_failure = 0;
};

std::vector<Kv1Row> kv1_rows(const SuiteContext& ctx, int max_weight) {
  std::vector<std::pair<int, NCPoly>> sample;
  for (int w = 3; w <= std::min(7, max_weight); ++w)
    for (auto& F : kv1_sample(ctx, w)) sample.emplace_back(w, std::move(F));
  return parallel_map(sample.size(), ctx.threads, [&](std::size_t i) {
    const auto& [w, F] = sample[i];
    Kv1Row row{w, F};
    row.kv1 = solve_G(F, w).has_value();
    const NCPoly f = F_to_ftilde(F);
    const Mould m = ma(f);
    row.senary = true;
    for (int r = 1; r <= w && row.senary; ++r)
      if (!senary_holds(m, static_cast<std::size_t>(r))) {
        row.senary = false;
        row.first_senary_failure = r;
      }
    auto [fx, fy] = decompose_right(f);
    row.antipalindrome = is_anti_palindromic(fy + fx, w - 1);
    return row;
  });
}

Check kv1_iff(const std::string& name, const std::vector<Kv1Row>& rows, bool Kv1Row::*other, int hi) {
  Json witness = Json::array();
  std::size_t both = 0;
  for (const auto& row : rows) {
    if (row.kv1 && row.*other) ++both;
    if (row.kv1 != row.*other)
      witness.push_back({{"weight", row.weight}, {"F", io::to_json(row.F)}, {"kv1", row.kv1}, {name, row.*other}});
  }
  std::ostringstream d;
  d << rows.size() << " samples, weights " << range_text(3, hi) << ", " << both << " with both sides true";
  return make(name, witness.empty(), d.str(), witness.empty() ? Json() : witness);
}

Check kv1_iff_senary(const SuiteContext& ctx, int max_weight) {
  return kv1_iff("kv1-iff-senary", kv1_rows(ctx, max_weight), &Kv1Row::senary, std::min(7, max_weight));
}

Check kv1_iff_antipalindrome(const SuiteContext& ctx, int max_weight) {
  return kv1_iff("kv1-iff-antipalindrome", kv1_rows(ctx, max_weight), &Kv1Row::antipalindrome, std::min(7, max_weight));
}

// Replaces component r so that the senary relation holds at r (when the
// affine system is solvable), keeping a random point of the solution set.
bool impose_senary(Mould& m, std::size_t r, Rng& rng) {
  if (r == 1) {
    MultiPoly c = m.component(1);
    MultiPoly even = c + substitute(c, {-LinearForm::variable(1, 0)}, 1);
    m.set(1, even * Rational(1, 2));
    return true;
  }
  std::vector<Exponents> monos;
  monos.push_back(Exponents(r, 0));
  for (int deg = 1; deg <= 4; ++deg) {
    Exponents e(r, 0);
    auto rec = [&](auto&& self, std::size_t k, int left) -> void {
      if (k + 1 == r) {
        e[k] = static_cast<std::uint16_t>(left);
        monos.push_back(e);
        return;
      }
      for (int v = left; v >= 0; --v) {
        e[k] = static_cast<std::uint16_t>(v);
        self(self, k + 1, left - v);
      }
    };
    rec(rec, 0, deg);
  }
  Mould base = m;
  base.set(r, MultiPoly(r));
  const MultiPoly d0 = senary_defect(base, r);
  std::vector<MultiPoly> cols;
  for (const auto& e : monos) {
    Mould unit(r);
    unit.set(r, MultiPoly::monomial(e, 1));
    cols.push_back(senary_defect(unit, r));
  }
  std::map<Exponents, std::size_t> row_of;
  for (const auto& c : cols)
    for (const auto& [e, v] : c.terms()) row_of.emplace(e, 0);
  for (const auto& [e, v] : d0.terms()) row_of.emplace(e, 0);
  std::size_t i = 0;
  for (auto& [e, idx] : row_of) idx = i++;
  RatMatrix a(row_of.size(), cols.size());
  Vector b(row_of.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [e, v] : cols[j].terms()) a(row_of[e], j) = v;
  for (const auto& [e, v] : d0.terms()) b[row_of[e]] = -v;
  auto sol = solve(a, b);
  if (!sol) return false;
  const auto kernel = nullspace(a).basis;
  Vector pick = *sol;
  const Vector extra = random_combination(kernel, cols.size(), rng);
  MultiPoly comp(r);
  for (std::size_t j = 0; j < cols.size(); ++j) comp.add_term(monos[j], pick[j] + extra[j]);
  m.set(r, comp);
  return true;
}

Check senary_forms_agree(const SuiteContext& ctx, int) {
  Rng rng(ctx.seed + 2000);
  std::vector<Mould> moulds;
  for (int k = 0; k < 50; ++k) moulds.push_back(random_mould(static_cast<std::size_t>(1 + k % 4), 4, rng));
  for (int k = 0; k < 30; ++k) {
    Mould m = random_mould(static_cast<std::size_t>(2 + k % 3), 4, rng);
    const std::size_t upto = 1 + static_cast<std::size_t>(k % 3);
    for (std::size_t r = 1; r <= upto; ++r) impose_senary(m, r, rng);
    moulds.push_back(std::move(m));
  }
  Json witness = Json::array();
  std::size_t holds = 0, total = 0;
  for (const auto& m : moulds)
    for (std::size_t r = 1; r <= 3; ++r) {
      const bool a = senary_holds(m, r), b = senary_translated_holds(m, r);
      ++total;
      if (a) ++holds;
      if (a != b) witness.push_back({{"mould", io::to_json(m)}, {"r", r}, {"senary", a}, {"translated", b}});
    }
  std::ostringstream d;
  d << moulds.size() << " moulds x r = 1..3, relation true in " << holds << " of " << total << " cases";
  return make("senary-forms-agree", witness.empty(), d.str(), witness.empty() ? Json() : witness);
}

Check senary_operator_expansion(const SuiteContext& ctx, int) {
  Rng rng(ctx.seed + 3000);
  Json witness = Json::array();
  int n = 0;
  for (int k = 0; k < 30; ++k) {
    const Mould m = random_mould(4, 4, rng);
    for (std::size_t r = 1; r <= 4; ++r, ++n) {
      MultiPoly a = senary_rhs_composed(m, r), b = senary_rhs_expanded(m, r);
      if (!(a == b)) witness.push_back({{"mould", io::to_json(m)}, {"r", r}, {"difference", io::to_json(a - b)}});
    }
  }
  return make("senary-operator-expansion", witness.empty(), std::to_string(n) + " (mould, r) pairs, r = 1..4",
              witness.empty() ? Json() : witness);
}

Check ma_multiplicative(const SuiteContext& ctx, int max_weight) {
  Rng rng(ctx.seed + 4000);
  const int hi = std::min(5, max_weight);
  Json witness = Json::array();
  int n = 0;
  for (int w1 = 1; w1 <= hi; ++w1)
    for (int w2 = 1; w2 <= hi; ++w2, ++n) {
      const NCPoly h1 = random_homogeneous(w1, rng), h2 = random_adx_product(w2, rng);
      const Mould lhs = ma(h1 * h2), rhs = mould_mul(ma(h1), ma(h2));
      if (!(lhs == rhs)) witness.push_back({{"h1", io::to_json(h1)}, {"h2", io::to_json(h2)}});
    }
  return make("ma-multiplicative", witness.empty(),
              std::to_string(n) + " pairs, weights " + range_text(1, hi) + ", right factor in the ad(x)^k(y) subalgebra",
              witness.empty() ? Json() : witness);
}

Check vimo_lie_invariants(const SuiteContext& ctx, int max_weight) {
  Rng rng(ctx.seed + 5000);
  const int hi = std::min(6, max_weight);
  Json witness = Json::array();
  int n = 0;
  for (int w = 2; w <= hi; ++w) {
    std::vector<NCPoly> sample = lyndon_basis(w, Alphabet::xy());
    for (int k = 0; k < 5; ++k) sample.push_back(random_lie(w, rng));
    for (const auto& h : sample)
      for (int r = 0; r <= w; ++r, ++n) {
        const std::size_t a = static_cast<std::size_t>(r) + 1;
        const MultiPoly v = vimo(h, r);
        std::vector<LinearForm> shift{LinearForm::zero(a)}, flip;
        for (std::size_t k = 1; k < a; ++k) shift.push_back(LinearForm::variable(a, k) - LinearForm::variable(a, 0));
        for (std::size_t k = 0; k < a; ++k) flip.push_back(-LinearForm::variable(a, k));
        const bool translation = substitute(v, shift, a) == v;
        const Rational sign = (w - r) % 2 ? -1 : 1;
        const bool parity = sign * substitute(v, flip, a) == v;
        if (!translation || !parity)
          witness.push_back({{"h", io::to_json(h)}, {"r", r}, {"translation", translation}, {"parity", parity}});
      }
  }
  return make("vimo-lie-invariants", witness.empty(),
              std::to_string(n) + " (element, depth) pairs, weights " + range_text(2, hi), witness.empty() ? Json() : witness);
}

std::size_t depth_two_dimension(const SubspaceBasis& b) {
  // dim of the part with no single-y words
  std::vector<Vector> images;
  std::map<Word, std::size_t> index;
  std::vector<NCPoly> parts;
  for (const auto& v : b.basis) {
    parts.push_back(lie_element(b, v).letter_degree_component(kY, 1));
    for (const auto& [w, c] : parts.back().terms()) index.emplace(w, 0);
  }
  std::size_t i = 0;
  for (auto& [w, k] : index) k = i++;
  RowEchelon ech(index.size());
  for (const auto& p : parts) {
    Vector row(index.size());
    for (const auto& [w, c] : p.terms()) row[index[w]] = c;
    ech.add_row(row);
  }
  return b.dimension() - ech.rank();
}

Check interpretation_dimensions(const SuiteContext& ctx, int max_weight) {
  const int hi = std::min(6, max_weight);
  Json rows = Json::array();
  bool dmr_ok = true, krv_ok = true, fil2_ok = true;
  for (int w = 3; w <= hi; ++w) {
    const SubspaceBasis d = ctx.basis("dmr", w), k = ctx.basis("krv", w);
    const std::size_t alil = al_il_space(w).dimension(), alil2 = al_il_space(w, true).dimension();
    const std::size_t sena = sena_pusnu_al_space(w).dimension();
    const std::size_t d2 = depth_two_dimension(d), k2 = depth_two_dimension(k);
    dmr_ok = dmr_ok && d.dimension() == alil;
    krv_ok = krv_ok && k.dimension() == sena;
    fil2_ok = fil2_ok && d2 == alil2 && k2 == sena;
    rows.push_back({{"weight", w},
                    {"dmr", d.dimension()},
                    {"al_il", alil},
                    {"krv", k.dimension()},
                    {"sena_pusnu_al", sena},
                    {"fil2_dmr", d2},
                    {"fil2_al_il", alil2},
                    {"fil2_krv", k2}});
  }
  std::ostringstream d;
  d << "weights " << range_text(3, hi) << ": dmr vs al*il " << (dmr_ok ? "equal" : "DIFFER") << ", krv vs sena/pusnu "
    << (krv_ok ? "equal" : "DIFFER") << "; depth >= 2 parts " << (fil2_ok ? "equal" : "DIFFER");
  return make("interpretation-dimensions", dmr_ok && krv_ok, d.str(), rows);
}

Check dmr_to_krv(const SuiteContext& ctx, int max_weight) {
  Json witness = Json::array();
  int total = 0, lifted = 0;
  for (int w : {3, 5}) {
    if (w > max_weight) continue;
    for (const auto& f : basis_elements(ctx, "dmr", w)) {
      ++total;
      const NCPoly F = ftilde_to_F(f);
      auto G = solve_G(F, w);
      if (!G) continue;
      ++lifted;
      if (!kv2_check(F, *G, w)) witness.push_back({{"weight", w}, {"ftilde", io::to_json(f)}, {"G", io::to_json(*G)}});
    }
  }
  std::ostringstream d;
  d << total << " dmr basis elements, " << lifted << " with a KV1 solution, all of those checked for KV2";
  return make("dmr-to-krv", witness.empty(), d.str(), witness.empty() ? Json() : witness);
}

Check alternility_constant(const SuiteContext& ctx, int max_weight) {
  const int hi = std::min(8, max_weight);
  const auto items = dmr_items(ctx, 3, hi);
  auto results = parallel_map(items.size(), ctx.threads, [&](std::size_t i) -> Json {
    const AlternilityCertificate cert = alternil_up_to_constant(swap(ma(items[i].poly)));
    if (cert.valid() && cert.constant[2] == 0) return Json();
    Json defects = Json::array();
    for (const auto& d : cert.residual_defects) defects.push_back(io::to_json(d));
    return {{"weight", items[i].weight}, {"ftilde", io::to_json(items[i].poly)}, {"constant", io::to_json(cert.constant)},
            {"residual_defects", defects}};
  });
  Json witness = Json::array();
  for (auto& r : results)
    if (!r.is_null()) witness.push_back(r);
  return make("alternility-constant-c2", witness.empty(),
              std::to_string(items.size()) + " dmr basis elements, weights " + range_text(3, hi),
              witness.empty() ? Json() : witness);
}

}  // namespace

SuiteContext default_context() {
  SuiteContext ctx;
  ctx.basis = [](const std::string& algebra, int w) { return algebra == "dmr" ? dmr_basis(w) : krv_basis(w); };
  return ctx;
}

const std::vector<SuiteCheck>& suite_checks() {
  static const std::vector<SuiteCheck> checks{
      {"krv2-vanishes", 2, krv2_vanishes},
      {"senary-on-dmr-images", 3, senary_on_dmr},
      {"kv1-iff-senary", 3, kv1_iff_senary},
      {"kv1-iff-antipalindrome", 3, kv1_iff_antipalindrome},
      {"senary-forms-agree", 3, senary_forms_agree},
      {"senary-operator-expansion", 3, senary_operator_expansion},
      {"ma-multiplicative", 3, ma_multiplicative},
      {"vimo-lie-invariants", 3, vimo_lie_invariants},
      {"interpretation-dimensions", 3, interpretation_dimensions},
      {"dmr-to-krv", 3, dmr_to_krv},
      {"alternility-constant-c2", 3, alternility_constant},
  };
  return checks;
}

std::vector<Check> exploratory_senary(const SuiteContext& ctx, int max_weight) {
  std::vector<Check> out;
  const int hi = std::min(8, max_weight);
  for (const auto& item : dmr_items(ctx, 4, hi)) {
    const Mould m = ma(item.poly);
    for (std::size_t r = 4; r <= static_cast<std::size_t>(item.weight) + 1; ++r) {
      const MultiPoly d = senary_defect(m, r);
      Check c{"senary-dmr-w" + std::to_string(item.weight) + "-r" + std::to_string(r), Status::Exploratory,
              d.is_zero() ? "holds" : "does not hold", Json()};
      if (!d.is_zero()) c.witness = {{"ftilde", io::to_json(item.poly)}, {"defect", io::to_json(d)}};
      out.push_back(std::move(c));
    }
  }
  return out;
}

Report run_suite(int max_weight, const SuiteContext& ctx) {
  if (max_weight < 2 || max_weight > BasisSolver::kDefaultMaxWeight)
    throw WeightBoundError("max weight " + std::to_string(max_weight) + " outside 2.." +
                           std::to_string(BasisSolver::kDefaultMaxWeight));
  Report rep;
  rep.command = "paper-suite";
  rep.inputs = {{"max_weight", max_weight}, {"seed", ctx.seed}};
  for (const auto& c : suite_checks())
    if (max_weight >= c.min_weight) rep.checks.push_back(c.run(ctx, max_weight));
  if (max_weight >= 4) rep.conjectural = exploratory_senary(ctx, max_weight);
  return rep;
}

}  // namespace mouldkit::app
