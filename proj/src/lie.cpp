#include "mouldkit/lie.hpp"

#include <algorithm>

#include "mouldkit/errors.hpp"

namespace mouldkit {

std::vector<Word> lyndon_words(std::size_t alphabet_size, int length) {
  std::vector<Word> out;
  if (length < 1 || alphabet_size == 0) return out;
  // Duval: generates all Lyndon words of length <= n in lex order.
  const auto k = static_cast<int>(alphabet_size);
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (static_cast<int>(w.size()) == length) out.emplace_back(w.begin(), w.end());
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
  }
  return out;
}

namespace {

bool is_lyndon(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word rot(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    if (!(w < rot)) return false;
  }
  return !w.empty();
}

}  // namespace

NCPoly standard_bracketing(const Alphabet& a, const Word& lyndon) {
  if (lyndon.size() == 1) return NCPoly::letter(a, lyndon[0]);
  for (std::size_t split = 1; split < lyndon.size(); ++split) {
    Word v(lyndon.begin() + static_cast<std::ptrdiff_t>(split), lyndon.end());
    if (is_lyndon(v)) {
      Word u(lyndon.begin(), lyndon.begin() + static_cast<std::ptrdiff_t>(split));
      return lie_bracket(standard_bracketing(a, u), standard_bracketing(a, v));
    }
  }
  throw AlphabetError("standard bracketing of a non-Lyndon word");
}

std::vector<NCPoly> lyndon_basis(int w, const Alphabet& a) {
  std::vector<NCPoly> out;
  for (const auto& word : lyndon_words(a.size(), w)) out.push_back(standard_bracketing(a, word));
  return out;
}

long long witt_number(int w, int k) {
  auto mobius = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
    return n > 1 ? -result : result;
  };
  long long total = 0;
  for (int d = 1; d <= w; ++d) {
    if (w % d) continue;
    long long pw = 1;
    for (int i = 0; i < w / d; ++i) pw *= k;
    total += mobius(d) * pw;
  }
  return total / w;
}

NCPoly left_bracketing(const NCPoly& p) {
  NCPoly r(p.alphabet());
  for (const auto& [w, c] : p.terms()) {
    if (w.empty()) continue;
    NCPoly acc = NCPoly::letter(p.alphabet(), w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) acc = lie_bracket(acc, NCPoly::letter(p.alphabet(), w[i]));
    r += acc * c;
  }
  return r;
}

bool is_lie(const NCPoly& p) {
  if (p.is_zero()) return true;
  auto w = p.weight();
  if (!w) throw NotHomogeneous("Lie test needs a homogeneous polynomial");
  if (*w == 0) return false;
  return left_bracketing(p) == p * Rational(*w);
}

LieCoordinates::LieCoordinates(int weight, Alphabet a)
    : weight_(weight), alphabet_(std::move(a)), words_(lyndon_words(alphabet_.size(), weight)) {
  for (const auto& w : words_) basis_.push_back(standard_bracketing(alphabet_, w));
}

std::optional<Vector> LieCoordinates::coordinates(const NCPoly& p) const {
  Vector coords(basis_.size());
  NCPoly rest = p;
  while (!rest.is_zero()) {
    const auto& [w, c] = *rest.terms().begin();
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || *it != w) return std::nullopt;
    auto i = static_cast<std::size_t>(it - words_.begin());
    Rational k = c;
    coords[i] += k;
    rest -= basis_[i] * k;
  }
  return coords;
}

NCPoly LieCoordinates::element(const Vector& coords) const {
  NCPoly r(alphabet_);
  for (std::size_t i = 0; i < basis_.size() && i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) r += basis_[i] * coords[i];
  return r;
}

}  // namespace mouldkit
