#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "mouldkit/bridge.hpp"
#include "mouldkit/lie.hpp"
#include "mouldkit/linalg.hpp"
#include "mouldkit/ncpoly.hpp"

namespace mouldkit {

// The unique Lie G of weight w with [x,G] + [y,F] = 0, or nullopt.
// Throws WeightTooSmall for w <= 1 and NotLie when F is not Lie of weight w.
std::optional<NCPoly> solve_G(const NCPoly& F, int w);

// Some Lie G with [l, G] = value (l a generator), or nullopt.
std::optional<NCPoly> bracket_preimage(std::uint8_t l, const NCPoly& value);

// Tangential (x -> [x,G], y -> [y,F] with F, G Lie) and killing z = -x-y.
bool is_sder(const TangentialData& d);

// alpha with tr(G_x x + F_y y) = alpha tr((x+y)^w - x^w - y^w), or nullopt.
std::optional<Rational> kv2_check(const NCPoly& F, const NCPoly& G, int w);
bool is_krv(const NCPoly& F, int w);

// Words ending in x vanish; x^{n_m-1} y ... x^{n_1-1} y -> (-1)^m y_{n_m} ... y_{n_1}.
// The target alphabet is y1..y_letters (letters = 0 picks the largest weight).
NCPoly pi_Y(const NCPoly& phi, int letters = 0);
// phi_corr + pi_Y(phi), phi_corr = sum_n ((-1)^n / n) c_{x^{n-1}y}(phi) y_1^n.
NCPoly star_regularize(const NCPoly& phi, int letters = 0);

using TensorSquare = std::map<std::pair<Word, Word>, Rational>;
// Delta_*(y_n) = sum_{i=0..n} y_i (x) y_{n-i}, y_0 = 1, extended multiplicatively.
TensorSquare delta_star(const NCPoly& xi);
// Delta_*(xi) - 1 (x) xi - xi (x) 1
TensorSquare primitivity_defect(const NCPoly& xi);
// f(x, y) = ftilde(x, -y)
NCPoly untilde(const NCPoly& ftilde);
// c_xy(phi) = 0 and phi_* primitive, applied to phi as given.
bool racinet_conditions(const NCPoly& phi, int w);
// Lie of weight w with the double shuffle conditions on f = untilde(ftilde).
bool is_dmr(const NCPoly& ftilde, int w);

// Graded bases in Lyndon coordinates (dmr: coordinates of ftilde; krv:
// coordinates of F). Results are memoized; safe to share across threads.
class BasisSolver {
 public:
  static constexpr int kDefaultMaxWeight = 10;

  explicit BasisSolver(int max_weight = kDefaultMaxWeight) : max_weight_(max_weight) {}

  int max_weight() const { return max_weight_; }
  SubspaceBasis dmr(int w);
  SubspaceBasis krv(int w);

 private:
  void check(int w) const;

  int max_weight_;
  std::mutex mu_;
  std::map<int, SubspaceBasis> dmr_, krv_;
};

// F in L_w for which solve_G succeeds (KV1 alone), Lyndon coordinates.
SubspaceBasis kv1_basis(int w);

SubspaceBasis dmr_basis(int w);
SubspaceBasis krv_basis(int w);

// Element of L_w from a basis vector.
NCPoly lie_element(const SubspaceBasis& b, const Vector& v);

}  // namespace mouldkit
