#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mouldkit/multipoly.hpp"
#include "mouldkit/ratfun.hpp"

namespace mouldkit {

// A letter of X_Z: integer coefficients (n_1, ..., n_k) of x_1, ..., x_k,
// trailing zeros trimmed. No identification of a letter with multiples of
// another letter is ever made.
using Letter = std::vector<int>;
using VarWord = std::vector<Letter>;

Letter make_letter(std::vector<int> coeffs);
inline Letter x_letter(int i) {  // x_i, 1-based
  Letter l(static_cast<std::size_t>(i), 0);
  l.back() = 1;
  return l;
}
// (x_first, ..., x_last)
VarWord x_word(int first, int last);
Letter operator-(const Letter& a, const Letter& b);
Letter operator-(const Letter& a);

// Largest variable index occurring in the words.
std::size_t ambient_arity(const VarWord& a, const VarWord& b);
LinearForm letter_form(const Letter& l, std::size_t arity);

template <class Coeff>
using FormalSum = std::map<VarWord, Coeff>;

// Shuffle product; coefficients count multiplicities.
FormalSum<Rational> shuffle(const VarWord& a, const VarWord& b);

// Contracting shuffle with rational-function coefficients in y_1..y_n:
//   u w *sh v e = u (w *sh v e) + v (u w *sh e) + f(u - v) {u (w *sh e) - v (w *sh e)}
// with f(n_1 x_i1 + ...) = 1/(n_1 y_i1 + ...) and f(0) = 0.
//
// Results are memoized per context; a context is not thread safe and fixes
// the ambient arity of the coefficients.
class QuasiShuffle {
 public:
  explicit QuasiShuffle(std::size_t arity) : arity_(arity) {}

  std::size_t arity() const { return arity_; }
  const FormalSum<RatFun>& operator()(const VarWord& a, const VarWord& b);

 private:
  std::size_t arity_;
  std::map<std::pair<VarWord, VarWord>, FormalSum<RatFun>> memo_;
};

FormalSum<RatFun> quasi_shuffle_star(const VarWord& a, const VarWord& b);

std::string to_string(const Letter& l);
std::string to_string(const VarWord& w);

}  // namespace mouldkit
