#include "mouldkit/ncpoly.hpp"

#include <algorithm>
#include <sstream>

#include "mouldkit/errors.hpp"

namespace mouldkit {

Alphabet Alphabet::y_indexed(int k) {
  Alphabet a;
  for (int i = 1; i <= k; ++i) a.symbols.push_back("y" + std::to_string(i));
  return a;
}

std::size_t Alphabet::index_of(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i] == symbol) return i;
  throw AlphabetError("letter '" + std::string(symbol) + "' not in alphabet");
}

bool Alphabet::single_char() const {
  return std::all_of(symbols.begin(), symbols.end(), [](const std::string& s) { return s.size() == 1; });
}

// ------------------------------------------------------------------ NCPoly

NCPoly NCPoly::word(const Alphabet& a, Word w, const Rational& c) {
  NCPoly p(a);
  p.add_term(w, c);
  return p;
}

Rational NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (sgn(c) == 0) return;
  for (auto l : w)
    if (l >= alphabet_.size()) throw AlphabetError("letter index outside the alphabet");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<int> NCPoly::weight() const {
  std::optional<int> w;
  for (const auto& [word, c] : terms_) {
    int n = static_cast<int>(word.size());
    if (w && *w != n) return std::nullopt;
    w = n;
  }
  return w;
}

bool NCPoly::is_homogeneous() const { return is_zero() || weight().has_value(); }

int NCPoly::max_weight() const {
  int w = -1;
  for (const auto& [word, c] : terms_) w = std::max(w, static_cast<int>(word.size()));
  return w;
}

NCPoly NCPoly::weight_component(int w) const {
  NCPoly p(alphabet_);
  for (const auto& [word, c] : terms_)
    if (static_cast<int>(word.size()) == w) p.terms_.emplace(word, c);
  return p;
}

NCPoly NCPoly::letter_degree_component(std::uint8_t letter, int d) const {
  NCPoly p(alphabet_);
  for (const auto& [word, c] : terms_)
    if (std::count(word.begin(), word.end(), letter) == d) p.terms_.emplace(word, c);
  return p;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (!(o.alphabet_ == alphabet_)) throw AlphabetError("adding polynomials over different alphabets");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  if (!(o.alphabet_ == alphabet_)) throw AlphabetError("subtracting polynomials over different alphabets");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly p = *this;
  for (auto& [w, x] : p.terms_) x = -x;
  return p;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  if (!(a.alphabet_ == b.alphabet_)) throw AlphabetError("multiplying polynomials over different alphabets");
  NCPoly r(a.alphabet_);
  Word w;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      w.assign(wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

// ------------------------------------------------------------- cyclic words

Word minimal_rotation(const Word& w) {
  Word best = w, cand = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(cand.begin(), cand.begin() + 1, cand.end());
    if (cand < best) best = cand;
  }
  return best;
}

void CyclicCombination::add(const Word& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(minimal_rotation(w), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

CyclicCombination& CyclicCombination::operator+=(const CyclicCombination& o) {
  if (!(o.alphabet_ == alphabet_)) throw AlphabetError("cyclic words over different alphabets");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

CyclicCombination& CyclicCombination::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

// -------------------------------------------------------------- operations

NCPoly lie_bracket(const NCPoly& a, const NCPoly& b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetError("bracket of polynomials over different alphabets");
  return a * b - b * a;
}

NCPoly anti(const NCPoly& p) {
  NCPoly r(p.alphabet());
  for (const auto& [w, c] : p.terms()) r.add_term(Word(w.rbegin(), w.rend()), c);
  return r;
}

bool is_anti_palindromic(const NCPoly& p, int w) {
  for (const auto& [word, c] : p.terms())
    if (static_cast<int>(word.size()) != w)
      throw NotHomogeneous("anti-palindrome test expects weight " + std::to_string(w));
  NCPoly a = anti(p);
  if (w % 2) a *= Rational(-1);
  return a == p;
}

namespace {

void require_xy(const NCPoly& p) {
  if (!(p.alphabet() == Alphabet::xy())) throw AlphabetError("expected a polynomial in x, y");
}

}  // namespace

std::pair<NCPoly, NCPoly> decompose_right(const NCPoly& p) {
  require_xy(p);
  NCPoly px(p.alphabet()), py(p.alphabet());
  for (const auto& [w, c] : p.terms()) {
    if (w.empty()) throw HasConstantTerm("right decomposition of a polynomial with constant term");
    Word head(w.begin(), w.end() - 1);
    (w.back() == kX ? px : py).add_term(head, c);
  }
  return {px, py};
}

std::pair<NCPoly, NCPoly> decompose_left(const NCPoly& p) {
  require_xy(p);
  NCPoly px(p.alphabet()), py(p.alphabet());
  for (const auto& [w, c] : p.terms()) {
    if (w.empty()) throw HasConstantTerm("left decomposition of a polynomial with constant term");
    Word tail(w.begin() + 1, w.end());
    (w.front() == kX ? px : py).add_term(tail, c);
  }
  return {px, py};
}

CyclicCombination trace(const NCPoly& p) {
  CyclicCombination r(p.alphabet());
  for (const auto& [w, c] : p.terms()) r.add(w, c);
  return r;
}

NCPoly substitute_letters(const NCPoly& p, const std::vector<NCPoly>& images) {
  if (images.size() != p.alphabet().size()) throw AlphabetError("one image per letter required");
  const Alphabet& target = images.front().alphabet();
  for (const auto& im : images)
    if (!(im.alphabet() == target)) throw AlphabetError("letter images over different alphabets");
  NCPoly r(target);
  for (const auto& [w, c] : p.terms()) {
    NCPoly t = NCPoly::word(target, {}, c);
    for (auto l : w) t = t * images[l];
    r += t;
  }
  return r;
}

// -------------------------------------------------------------------- text

std::string word_to_string(const Alphabet& a, const Word& w) {
  std::string s;
  const bool compact = a.single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i) s += ' ';
    s += a.symbols.at(w[i]);
  }
  return s;
}

Word parse_word(const Alphabet& a, std::string_view text) {
  Word w;
  if (a.single_char()) {
    for (char ch : text) {
      if (ch == ' ') continue;
      w.push_back(static_cast<std::uint8_t>(a.index_of(std::string_view(&ch, 1))));
    }
    return w;
  }
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) w.push_back(static_cast<std::uint8_t>(a.index_of(tok)));
  return w;
}

namespace {

template <class Map>
std::string format_terms(const Alphabet& a, const Map& terms, const char* open, const char* close) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    std::string word = w.empty() ? "1" : word_to_string(a, w);
    if (mag != 1) os << to_string(mag) << "*";
    os << open << word << close;
  }
  return os.str();
}

}  // namespace

std::string to_string(const NCPoly& p) { return format_terms(p.alphabet(), p.terms(), "", ""); }

std::string to_string(const CyclicCombination& c) {
  return format_terms(c.alphabet(), c.terms(), "cyc(", ")");
}

}  // namespace mouldkit
