#pragma once

#include "mouldkit/mould.hpp"
#include "mouldkit/multipoly.hpp"
#include "mouldkit/ncpoly.hpp"

namespace mouldkit {

// Values of a tangential-style derivation on the generators x and y.
struct TangentialData {
  NCPoly value_on_x;
  NCPoly value_on_y;

  friend bool operator==(const TangentialData&, const TangentialData&) = default;
};

// vimo^r_h(z_0..z_r): the depth-r words x^e0 y x^e1 ... y x^er of h read as
// monomials z_0^e0 ... z_r^er. h must be homogeneous (NotHomogeneous).
MultiPoly vimo(const NCPoly& h, int r);

// ma_h: ma^0 = 0 and ma^r(u1..ur) = vimo^r_h(0, u1, u1+u2, ..., u1+..+ur).
// Inhomogeneous h is handled weight by weight. The depth of the result is
// max(depth_hint, largest y-degree in h).
Mould ma(const NCPoly& h, std::size_t depth_hint = 0);

// ftilde(x, y) = F(-x+y, -y), i.e. f(x,y) = F(-x-y, y) and ftilde(x,y) = f(x,-y).
NCPoly F_to_ftilde(const NCPoly& F);
// F(x, y) = ftilde(-x-y, -y)
NCPoly ftilde_to_F(const NCPoly& ftilde);

// The derivation d_F for F = ftilde_to_F(ftilde): y -> [y, F], x -> -[y, F].
// Throws NotLie when ftilde is not a Lie polynomial.
TangentialData nu(const NCPoly& ftilde);

// Image of a Lie word under the derivation (Leibniz rule on brackets is
// equivalent to the rule on words, so this extends to all of A).
NCPoly apply_derivation(const TangentialData& d, const NCPoly& p);

}  // namespace mouldkit
