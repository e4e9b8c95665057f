#include "mouldkit/liealg.hpp"

#include "mouldkit/errors.hpp"

namespace mouldkit {

namespace {

NCPoly power(const NCPoly& p, int n) {
  NCPoly r = NCPoly::one(p.alphabet());
  for (int i = 0; i < n; ++i) r = r * p;
  return r;
}

// Row for each key in a sparse system; keys are whatever identifies an
// equation (words, cyclic words, tensor pairs).
template <class Key>
class SparseSystem {
 public:
  explicit SparseSystem(std::size_t unknowns) : n_(unknowns) {}
  void add(const Key& k, std::size_t column, const Rational& c) {
    if (c == 0) return;
    Vector& row = rows_[k];
    if (row.empty()) row.assign(n_, Rational(0));
    row[column] += c;
  }
  void add_rhs(const Key& k, const Rational& c) {
    if (c == 0) return;
    if (rows_[k].empty()) rows_[k].assign(n_, Rational(0));
    rhs_[k] += c;
  }
  std::vector<Vector> kernel() const {
    RowEchelon ech(n_);
    for (const auto& [k, row] : rows_) ech.add_row(row);
    return ech.nullspace();
  }
  std::optional<Vector> solution() const {
    RatMatrix a(rows_.size(), n_);
    Vector b;
    std::size_t i = 0;
    for (const auto& [k, row] : rows_) {
      for (std::size_t j = 0; j < n_; ++j) a(i, j) = row[j];
      auto it = rhs_.find(k);
      b.push_back(it == rhs_.end() ? Rational(0) : it->second);
      ++i;
    }
    if (rows_.empty()) return Vector(n_);
    return solve(a, b);
  }

 private:
  std::size_t n_;
  std::map<Key, Vector> rows_;
  std::map<Key, Rational> rhs_;
};

void require_lie_weight(const NCPoly& p, int w, const char* what) {
  if (p.is_zero()) return;
  auto pw = p.weight();
  if (!pw || *pw != w) throw NotHomogeneous(std::string(what) + " must be homogeneous of weight " + std::to_string(w));
  if (!is_lie(p)) throw NotLie(std::string(what) + " must be a Lie polynomial");
}

Word x_power_y(int n) {
  Word w(static_cast<std::size_t>(n - 1), kX);
  w.push_back(kY);
  return w;
}

std::vector<std::string> lyndon_labels(const LieCoordinates& lc) {
  std::vector<std::string> out;
  for (const auto& w : lc.lyndon()) out.push_back(word_to_string(lc.alphabet(), w));
  return out;
}

SubspaceBasis project_basis(const LieCoordinates& lc, int w, const std::vector<Vector>& kernel) {
  SubspaceBasis out;
  out.weight = w;
  out.ambient_dim = lc.dimension();
  out.labels = lyndon_labels(lc);
  std::vector<Vector> proj;
  for (const auto& v : kernel) proj.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(lc.dimension()));
  out.basis = canonical_span(proj, lc.dimension());
  return out;
}

CyclicCombination kv2_reference(int w) {
  return trace(power(NCPoly::x() + NCPoly::y(), w) - power(NCPoly::x(), w) - power(NCPoly::y(), w));
}

// tr(P_x x) and tr(P_y y) for P = P_x x + P_y y.
std::pair<CyclicCombination, CyclicCombination> trace_parts(const NCPoly& p) {
  if (p.is_zero()) return {CyclicCombination(), CyclicCombination()};
  auto [px, py] = decompose_right(p);
  return {trace(px * NCPoly::x()), trace(py * NCPoly::y())};
}

}  // namespace

std::optional<NCPoly> bracket_preimage(std::uint8_t l, const NCPoly& value) {
  if (!(value.alphabet() == Alphabet::xy())) throw AlphabetError("expected a polynomial in x, y");
  NCPoly out;
  const NCPoly gen = NCPoly::letter(Alphabet::xy(), l);
  for (int k = 0; k <= value.max_weight(); ++k) {
    NCPoly target = value.weight_component(k);
    if (target.is_zero()) continue;
    if (k < 2) return std::nullopt;
    LieCoordinates lc(k - 1, Alphabet::xy());
    SparseSystem<Word> sys(lc.dimension());
    for (std::size_t i = 0; i < lc.dimension(); ++i) {
      const NCPoly br = lie_bracket(gen, lc.basis()[i]);
      for (const auto& [w, c] : br.terms()) sys.add(w, i, c);
    }
    for (const auto& [w, c] : target.terms()) sys.add_rhs(w, c);
    auto sol = sys.solution();
    if (!sol) return std::nullopt;
    out += lc.element(*sol);
  }
  return out;
}

std::optional<NCPoly> solve_G(const NCPoly& F, int w) {
  if (w <= 1) throw WeightTooSmall("solve_G needs weight > 1");
  require_lie_weight(F, w, "F");
  if (F.is_zero()) return NCPoly();
  return bracket_preimage(kX, -lie_bracket(NCPoly::y(), F));
}

bool is_sder(const TangentialData& d) {
  if (!(d.value_on_x + d.value_on_y).is_zero()) return false;
  return bracket_preimage(kX, d.value_on_x).has_value() && bracket_preimage(kY, d.value_on_y).has_value();
}

std::optional<Rational> kv2_check(const NCPoly& F, const NCPoly& G, int w) {
  if (w <= 1) throw WeightTooSmall("KV2 needs weight > 1");
  CyclicCombination lhs = trace_parts(G).first;
  lhs += trace_parts(F).second;
  if (lhs.is_zero()) return Rational(0);
  const CyclicCombination ref = kv2_reference(w);
  const auto& [key, c] = *ref.terms().begin();
  Rational alpha = lhs.terms().count(key) ? lhs.terms().at(key) / c : Rational(0);
  CyclicCombination scaled = ref;
  scaled *= alpha;
  if (!(lhs == scaled)) return std::nullopt;
  return alpha;
}

bool is_krv(const NCPoly& F, int w) {
  if (w <= 1) return F.is_zero();
  if (!F.is_zero()) {
    auto pw = F.weight();
    if (!pw || *pw != w || !is_lie(F)) return false;
  }
  auto G = solve_G(F, w);
  return G && kv2_check(F, *G, w).has_value();
}

NCPoly pi_Y(const NCPoly& phi, int letters) {
  if (!(phi.alphabet() == Alphabet::xy())) throw AlphabetError("pi_Y expects a polynomial in x, y");
  if (letters <= 0) letters = std::max(1, phi.max_weight());
  const Alphabet ya = Alphabet::y_indexed(letters);
  NCPoly out(ya);
  for (const auto& [w, c] : phi.terms()) {
    if (!w.empty() && w.back() == kX) continue;
    Word img;
    int run = 0;
    for (auto l : w) {
      if (l == kX) {
        ++run;
        continue;
      }
      if (run + 1 > letters) throw AlphabetError("pi_Y image needs y" + std::to_string(run + 1));
      img.push_back(static_cast<std::uint8_t>(run));
      run = 0;
    }
    out.add_term(img, img.size() % 2 ? -c : c);
  }
  return out;
}

NCPoly star_regularize(const NCPoly& phi, int letters) {
  if (letters <= 0) letters = std::max(1, phi.max_weight());
  NCPoly out = pi_Y(phi, letters);
  const Alphabet ya = Alphabet::y_indexed(letters);
  for (int n = 1; n <= phi.max_weight(); ++n) {
    Rational c = phi.coefficient(x_power_y(n));
    if (c == 0) continue;
    Rational k = Rational(n % 2 ? -1 : 1, n) * c;
    k.canonicalize();
    out.add_term(Word(static_cast<std::size_t>(n), 0), k);
  }
  return out;
}

TensorSquare delta_star(const NCPoly& xi) {
  TensorSquare out;
  for (const auto& [w, c] : xi.terms()) {
    TensorSquare acc{{{Word{}, Word{}}, Rational(1)}};
    for (auto l : w) {
      const int n = l + 1;
      TensorSquare next;
      for (const auto& [k, v] : acc)
        for (int i = 0; i <= n; ++i) {
          Word a = k.first, b = k.second;
          if (i > 0) a.push_back(static_cast<std::uint8_t>(i - 1));
          if (n - i > 0) b.push_back(static_cast<std::uint8_t>(n - i - 1));
          next[{std::move(a), std::move(b)}] += v;
        }
      acc = std::move(next);
    }
    for (const auto& [k, v] : acc) out[k] += c * v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TensorSquare primitivity_defect(const NCPoly& xi) {
  TensorSquare out = delta_star(xi);
  for (const auto& [w, c] : xi.terms()) {
    out[{Word{}, w}] -= c;
    out[{w, Word{}}] -= c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

NCPoly untilde(const NCPoly& ftilde) { return substitute_letters(ftilde, {NCPoly::x(), -NCPoly::y()}); }

bool racinet_conditions(const NCPoly& phi, int w) {
  if (phi.coefficient(Word{kX, kY}) != 0) return false;
  return primitivity_defect(star_regularize(phi, w)).empty();
}

bool is_dmr(const NCPoly& ftilde, int w) {
  if (ftilde.is_zero()) return true;
  auto pw = ftilde.weight();
  if (!pw || *pw != w || !is_lie(ftilde)) return false;
  return racinet_conditions(untilde(ftilde), w);
}

void BasisSolver::check(int w) const {
  if (w < 2 || w > max_weight_)
    throw WeightBoundError("weight " + std::to_string(w) + " outside the supported range 2.." + std::to_string(max_weight_));
}

SubspaceBasis BasisSolver::dmr(int w) {
  check(w);
  {
    std::lock_guard lock(mu_);
    if (auto it = dmr_.find(w); it != dmr_.end()) return it->second;
  }
  const LieCoordinates lc(w, Alphabet::xy());
  const std::size_t n = lc.dimension();
  // key family 0: c_xy; family 1: tensor coefficients
  SparseSystem<std::pair<int, std::pair<Word, Word>>> sys(n);
  for (std::size_t i = 0; i < n; ++i) {
    const NCPoly b = untilde(lc.basis()[i]);
    sys.add({0, {Word{kX, kY}, Word{}}}, i, b.coefficient(Word{kX, kY}));
    for (const auto& [k, c] : primitivity_defect(star_regularize(b, w))) sys.add({1, k}, i, c);
  }
  SubspaceBasis out = project_basis(lc, w, sys.kernel());
  std::lock_guard lock(mu_);
  return dmr_.emplace(w, std::move(out)).first->second;
}

SubspaceBasis BasisSolver::krv(int w) {
  check(w);
  {
    std::lock_guard lock(mu_);
    if (auto it = krv_.find(w); it != krv_.end()) return it->second;
  }
  const LieCoordinates lc(w, Alphabet::xy());
  const std::size_t n = lc.dimension();
  // unknowns: F coordinates, G coordinates, alpha
  SparseSystem<std::pair<int, Word>> sys(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const NCPoly& b = lc.basis()[i];
    const NCPoly yb = lie_bracket(NCPoly::y(), b), xb = lie_bracket(NCPoly::x(), b);
    for (const auto& [wd, c] : yb.terms()) sys.add({0, wd}, i, c);
    for (const auto& [wd, c] : xb.terms()) sys.add({0, wd}, n + i, c);
    auto [tx, ty] = trace_parts(b);
    for (const auto& [wd, c] : ty.terms()) sys.add({1, wd}, i, c);
    for (const auto& [wd, c] : tx.terms()) sys.add({1, wd}, n + i, c);
  }
  const CyclicCombination ref = kv2_reference(w);
  for (const auto& [wd, c] : ref.terms()) sys.add({1, wd}, 2 * n, -c);
  SubspaceBasis out = project_basis(lc, w, sys.kernel());
  std::lock_guard lock(mu_);
  return krv_.emplace(w, std::move(out)).first->second;
}

SubspaceBasis kv1_basis(int w) {
  if (w <= 1) throw WeightTooSmall("KV1 needs weight > 1");
  const LieCoordinates lc(w, Alphabet::xy());
  const std::size_t n = lc.dimension();
  SparseSystem<Word> sys(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const NCPoly yb = lie_bracket(NCPoly::y(), lc.basis()[i]), xb = lie_bracket(NCPoly::x(), lc.basis()[i]);
    for (const auto& [wd, c] : yb.terms()) sys.add(wd, i, c);
    for (const auto& [wd, c] : xb.terms()) sys.add(wd, n + i, c);
  }
  return project_basis(lc, w, sys.kernel());
}

namespace {
BasisSolver& default_solver() {
  static BasisSolver solver;
  return solver;
}
}  // namespace

SubspaceBasis dmr_basis(int w) { return default_solver().dmr(w); }
SubspaceBasis krv_basis(int w) { return default_solver().krv(w); }

NCPoly lie_element(const SubspaceBasis& b, const Vector& v) {
  return LieCoordinates(b.weight, Alphabet::xy()).element(v);
}

}  // namespace mouldkit
