#pragma once

#include <cstdint>
#include <random>

#include "mouldkit/linalg.hpp"
#include "mouldkit/mould.hpp"
#include "mouldkit/ncpoly.hpp"

namespace mouldkit::app {

using Rng = std::mt19937_64;

// Small nonzero rationals n/d with |n| <= 5, 1 <= d <= 3.
Rational random_rational(Rng& rng);
// Random combination of the standard Lyndon basis of L_w.
NCPoly random_lie(int w, Rng& rng);
// Random combination of `terms` words of weight w over x, y.
NCPoly random_homogeneous(int w, Rng& rng, int terms = 4);
// Random product of the generators ad(x)^{i-1}(y) with total weight w
// (a random linear combination of a few such products).
NCPoly random_adx_product(int w, Rng& rng);
// Random combination of the given basis vectors.
Vector random_combination(const std::vector<Vector>& basis, std::size_t dim, Rng& rng);
// Components 1..depth with a few random monomials of total degree <= degree.
Mould random_mould(std::size_t depth, int degree, Rng& rng);

}  // namespace mouldkit::app
