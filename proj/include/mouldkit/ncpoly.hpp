#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mouldkit/rational.hpp"

namespace mouldkit {

// Ordered list of letter names. The order is the lexicographic order used
// for Lyndon words and cyclic representatives.
struct Alphabet {
  std::vector<std::string> symbols;

  static Alphabet xy() { return Alphabet{{"x", "y"}}; }
  // y1, ..., yk
  static Alphabet y_indexed(int k);

  std::size_t size() const { return symbols.size(); }
  // Index of a symbol; throws AlphabetError when absent.
  std::size_t index_of(std::string_view symbol) const;
  bool single_char() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

// Letters are indices into the alphabet.
using Word = std::vector<std::uint8_t>;

constexpr std::uint8_t kX = 0;
constexpr std::uint8_t kY = 1;

// Noncommutative polynomial with rational coefficients.
class NCPoly {
 public:
  using TermMap = std::map<Word, Rational>;

  NCPoly() : alphabet_(Alphabet::xy()) {}
  explicit NCPoly(Alphabet a) : alphabet_(std::move(a)) {}

  static NCPoly one(const Alphabet& a) { return word(a, {}, 1); }
  static NCPoly letter(const Alphabet& a, std::uint8_t l) { return word(a, {l}, 1); }
  static NCPoly word(const Alphabet& a, Word w, const Rational& c);
  static NCPoly x() { return letter(Alphabet::xy(), kX); }
  static NCPoly y() { return letter(Alphabet::xy(), kY); }

  const Alphabet& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& w) const;
  void add_term(const Word& w, const Rational& c);

  // Total degree of the single weight present; nullopt when zero or when
  // several weights occur.
  std::optional<int> weight() const;
  bool is_homogeneous() const;
  int max_weight() const;  // -1 for zero
  NCPoly weight_component(int w) const;
  // Part with exactly d occurrences of `letter`.
  NCPoly letter_degree_component(std::uint8_t letter, int d) const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rational& c);
  NCPoly operator-() const;
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }
  friend NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

 private:
  Alphabet alphabet_;
  TermMap terms_;
};

// Linear combination of cyclic words, keyed by lexicographically minimal
// rotation.
class CyclicCombination {
 public:
  explicit CyclicCombination(Alphabet a = Alphabet::xy()) : alphabet_(std::move(a)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Adds c times the class of w (w need not be canonical).
  void add(const Word& w, const Rational& c);

  CyclicCombination& operator+=(const CyclicCombination& o);
  CyclicCombination& operator*=(const Rational& c);
  friend CyclicCombination operator-(CyclicCombination a, const CyclicCombination& b) {
    CyclicCombination nb = b;
    nb *= Rational(-1);
    return a += nb;
  }
  friend bool operator==(const CyclicCombination&, const CyclicCombination&) = default;

 private:
  Alphabet alphabet_;
  std::map<Word, Rational> terms_;
};

Word minimal_rotation(const Word& w);

// ab - ba. Throws AlphabetError on mismatched alphabets.
NCPoly lie_bracket(const NCPoly& a, const NCPoly& b);
// Reverses every word.
NCPoly anti(const NCPoly& p);
// p == (-1)^w anti(p). Throws NotHomogeneous when p has a weight other
// than w.
bool is_anti_palindromic(const NCPoly& p, int w);
// p = p_x x + p_y y (split by last letter). Alphabet {x, y} only; throws
// HasConstantTerm.
std::pair<NCPoly, NCPoly> decompose_right(const NCPoly& p);
// p = x p^x + y p^y (split by first letter).
std::pair<NCPoly, NCPoly> decompose_left(const NCPoly& p);
CyclicCombination trace(const NCPoly& p);
inline Rational coefficient(const NCPoly& p, const Word& w) { return p.coefficient(w); }

// Algebra substitution: letter i of p is replaced by images[i] (all images
// share one alphabet).
NCPoly substitute_letters(const NCPoly& p, const std::vector<NCPoly>& images);

// Word <-> text. Single-character alphabets concatenate letters; otherwise
// letters are separated by spaces. The empty word is "".
std::string word_to_string(const Alphabet& a, const Word& w);
Word parse_word(const Alphabet& a, std::string_view text);
std::string to_string(const NCPoly& p);
std::string to_string(const CyclicCombination& c);

}  // namespace mouldkit
