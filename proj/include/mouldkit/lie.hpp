#pragma once

#include <optional>
#include <vector>

#include "mouldkit/linalg.hpp"
#include "mouldkit/ncpoly.hpp"

namespace mouldkit {

// Lyndon words of the given length over letters 0..alphabet_size-1, in
// lexicographic order (Duval's algorithm).
std::vector<Word> lyndon_words(std::size_t alphabet_size, int length);

// Bracketing along the standard factorization w = uv, v the longest proper
// Lyndon suffix.
NCPoly standard_bracketing(const Alphabet& a, const Word& lyndon);

// Standard-bracketing images of all Lyndon words of length w.
std::vector<NCPoly> lyndon_basis(int w, const Alphabet& a);

// (1/w) sum_{d | w} mu(d) k^{w/d}
long long witt_number(int w, int k);

// Left-normed bracketing [..[[a1,a2],a3],..,an] extended linearly.
NCPoly left_bracketing(const NCPoly& p);

// Dynkin-Specht-Wever: homogeneous p of weight w >= 1 is Lie iff
// left_bracketing(p) == w p. Throws NotHomogeneous.
bool is_lie(const NCPoly& p);

// Coordinates of Lie polynomials of one weight in the Lyndon basis. The
// lexicographically smallest word of a basis element is its Lyndon word with
// coefficient 1, so coordinates come from triangular elimination.
class LieCoordinates {
 public:
  LieCoordinates(int weight, Alphabet a);

  int weight() const { return weight_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Word>& lyndon() const { return words_; }
  const std::vector<NCPoly>& basis() const { return basis_; }

  // nullopt when p is not in the span.
  std::optional<Vector> coordinates(const NCPoly& p) const;
  NCPoly element(const Vector& coords) const;

 private:
  int weight_;
  Alphabet alphabet_;
  std::vector<Word> words_;
  std::vector<NCPoly> basis_;
};

}  // namespace mouldkit
