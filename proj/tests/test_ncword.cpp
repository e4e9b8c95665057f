#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mouldkit/errors.hpp"
#include "mouldkit/lie.hpp"
#include "mouldkit/ratfun.hpp"
#include "mouldkit/varword.hpp"
#include "oracles.hpp"

using namespace testing;

namespace {

NCPoly random_word_poly(int w, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> bit(0, 1), c(-4, 4);
  NCPoly p;
  for (int t = 0; t < terms; ++t) {
    Word word;
    for (int i = 0; i < w; ++i) word.push_back(static_cast<std::uint8_t>(bit(rng)));
    p.add_term(word, c(rng));
  }
  return p;
}

NCPoly random_lie_poly(int w, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  NCPoly p;
  for (const auto& b : lyndon_basis(w, Alphabet::xy())) p += Rational(c(rng)) * b;
  return p;
}

VarWord random_varword(std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, 4);
  VarWord w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(x_letter(idx(rng)));
  return w;
}

template <class C>
FormalSum<C> product_with(const FormalSum<C>& s, const VarWord& c) {
  FormalSum<C> out;
  for (const auto& [w, k] : s)
    for (const auto& [v, m] : shuffle(w, c)) out[v] += k * m;
  return out;
}

}  // namespace

TEST_CASE("lie bracket") {
  NCPoly x = NCPoly::x(), y = NCPoly::y();
  CHECK(lie_bracket(x, y) == nc({{"xy", 1}, {"yx", -1}}));
  CHECK(lie_bracket(x, lie_bracket(x, y)) == nc({{"xxy", 1}, {"xyx", -2}, {"yxx", 1}}));
  CHECK(lie_bracket(x, x).is_zero());
  CHECK_THROWS_AS(lie_bracket(x, NCPoly::letter(Alphabet::y_indexed(2), 0)), AlphabetError);
}

TEST_CASE("Lie test") {
  CHECK(is_lie(nc({{"xy", 1}, {"yx", -1}})));
  CHECK_FALSE(is_lie(nc({{"xy", 1}})));
  CHECK(is_lie(nc({{"xxy", 1}, {"xyx", -2}, {"yxx", 1}})));
  CHECK_THROWS_AS(is_lie(nc({{"x", 1}, {"xy", 1}})), NotHomogeneous);

  SUBCASE("agrees with shuffle primitivity") {
    std::mt19937_64 rng(19);
    for (int w = 1; w <= 5; ++w)
      for (int it = 0; it < 15; ++it) {
        NCPoly p = it % 3 == 0 ? random_word_poly(w, 3, rng) : random_lie_poly(w, rng);
        if (p.is_zero()) continue;
        CHECK(is_lie(p) == oracle::shuffle_primitive(p));
      }
  }
}

TEST_CASE("Lyndon basis") {
  const auto xy = Alphabet::xy();
  auto b1 = lyndon_basis(1, xy);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0] == NCPoly::x());
  CHECK(b1[1] == NCPoly::y());
  auto b2 = lyndon_basis(2, xy);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0] == nc({{"xy", 1}, {"yx", -1}}));
  auto b3 = lyndon_basis(3, xy);
  REQUIRE(b3.size() == 2);
  CHECK(b3[0].coefficient(parse_word(xy, "xxy")) != 0);
  CHECK(b3[1].coefficient(parse_word(xy, "xyy")) != 0);

  for (int w = 1; w <= 9; ++w) {
    CHECK(static_cast<long long>(lyndon_basis(w, xy).size()) == witt_number(w, 2));
    CHECK(witt_number(w, 2) == oracle::count_lyndon(w, 2));
    for (const auto& word : lyndon_words(2, w)) CHECK(oracle::is_lyndon(word));
  }
  for (int w = 1; w <= 5; ++w) CHECK(witt_number(w, 3) == oracle::count_lyndon(w, 3));
  for (int w = 1; w <= 6; ++w)
    for (const auto& b : lyndon_basis(w, xy)) CHECK(oracle::shuffle_primitive(b));
}

TEST_CASE("Lie coordinates") {
  std::mt19937_64 rng(23);
  for (int w = 2; w <= 6; ++w) {
    LieCoordinates lc(w, Alphabet::xy());
    CHECK(static_cast<long long>(lc.dimension()) == witt_number(w, 2));
    NCPoly p = random_lie_poly(w, rng);
    auto c = lc.coordinates(p);
    REQUIRE(c);
    CHECK(lc.element(*c) == p);
    NCPoly notlie = random_word_poly(w, 1, rng);
    CHECK_FALSE(lc.coordinates(notlie).has_value());
  }
}

TEST_CASE("anti") {
  CHECK(anti(nc({{"xxy", 1}})) == nc({{"yxx", 1}}));
  CHECK(anti(nc({{"xy", 1}, {"yx", 1}})) == nc({{"xy", 1}, {"yx", 1}}));
  CHECK(anti(NCPoly()).is_zero());
  CHECK(is_anti_palindromic(nc({{"xy", 1}, {"yx", 1}}), 2));
  CHECK_FALSE(is_anti_palindromic(nc({{"xy", 1}, {"yx", -1}}), 2));
  CHECK(is_anti_palindromic(nc({{"xxy", 1}, {"yxx", -1}}), 3));
  CHECK(is_anti_palindromic(NCPoly(), 4));
  CHECK_THROWS_AS(is_anti_palindromic(nc({{"xy", 1}}), 3), NotHomogeneous);

  std::mt19937_64 rng(29);
  for (int it = 0; it < 20; ++it) {
    NCPoly p = random_word_poly(1 + it % 6, 4, rng);
    CHECK(anti(anti(p)) == p);
  }
}

TEST_CASE("decompositions") {
  const NCPoly x = NCPoly::x(), y = NCPoly::y();
  NCPoly br = nc({{"xy", 1}, {"yx", -1}});
  auto [px, py] = decompose_right(br);
  CHECK(px == -y);
  CHECK(py == x);
  auto [qx, qy] = decompose_right(nc({{"xx", 1}}));
  CHECK(qx == x);
  CHECK(qy.is_zero());
  auto [zx, zy] = decompose_right(NCPoly());
  CHECK((zx.is_zero() && zy.is_zero()));

  auto [lx, ly] = decompose_left(br);
  CHECK(lx == y);
  CHECK(ly == -x);
  auto [mx, my] = decompose_left(nc({{"yy", 1}}));
  CHECK(mx.is_zero());
  CHECK(my == y);

  CHECK_THROWS_AS(decompose_right(nc({{"", 1}, {"x", 1}})), HasConstantTerm);
  CHECK_THROWS_AS(decompose_left(nc({{"", 2}})), HasConstantTerm);

  std::mt19937_64 rng(31);
  for (int it = 0; it < 20; ++it) {
    NCPoly p = random_word_poly(1 + it % 5, 5, rng);
    auto [a, b] = decompose_right(p);
    CHECK(a * x + b * y == p);
    auto [c, d] = decompose_left(p);
    CHECK(x * c + y * d == p);
  }
}

TEST_CASE("trace") {
  CHECK(trace(nc({{"xy", 1}, {"yx", -1}})).is_zero());
  CyclicCombination two;
  two.add(parse_word(Alphabet::xy(), "xxy"), 2);
  CHECK(trace(nc({{"xxy", 1}, {"xyx", 1}})) == two);
  NCPoly s = NCPoly::x() + NCPoly::y();
  CyclicCombination xy2;
  xy2.add(parse_word(Alphabet::xy(), "xy"), 2);
  CHECK(trace(s * s - NCPoly::x() * NCPoly::x() - NCPoly::y() * NCPoly::y()) == xy2);

  CHECK(minimal_rotation(parse_word(Alphabet::xy(), "yxx")) == parse_word(Alphabet::xy(), "xxy"));
  std::mt19937_64 rng(37);
  for (int it = 0; it < 20; ++it) {
    NCPoly a = random_word_poly(1 + it % 3, 2, rng), b = random_word_poly(1 + it % 4, 2, rng);
    const CyclicCombination ab = trace(a * b);
    CHECK(ab == trace(b * a));
    for (const auto& [k, c] : ab.terms()) CHECK(minimal_rotation(k) == k);
  }
}

TEST_CASE("coefficients and words") {
  NCPoly br = nc({{"xy", 1}, {"yx", -1}});
  const auto xy = Alphabet::xy();
  CHECK(coefficient(br, parse_word(xy, "xy")) == 1);
  CHECK(coefficient(br, parse_word(xy, "yx")) == -1);
  CHECK(coefficient(br, parse_word(xy, "xx")) == 0);
  CHECK(word_to_string(xy, parse_word(xy, "xyy")) == "xyy");
  const auto ya = Alphabet::y_indexed(3);
  CHECK(parse_word(ya, "y3 y1") == Word{2, 0});
  CHECK(word_to_string(ya, Word{2, 0}) == "y3 y1");
  CHECK_THROWS_AS(parse_word(xy, "xz"), AlphabetError);
  CHECK(br.weight() == 2);
  CHECK_FALSE((br + NCPoly::x()).weight().has_value());
  CHECK(substitute_letters(br, {NCPoly::y(), NCPoly::x()}) == -br);
}

TEST_CASE("shuffle") {
  auto s = shuffle(x_word(1, 1), x_word(2, 2));
  CHECK(s.size() == 2);
  CHECK(s[x_word(1, 2)] == 1);
  CHECK(s[VarWord{x_letter(2), x_letter(1)}] == 1);

  auto t = shuffle(x_word(1, 1), x_word(2, 3));
  CHECK(t.size() == 3);
  CHECK(t[x_word(1, 3)] == 1);
  CHECK(t[(VarWord{x_letter(2), x_letter(1), x_letter(3)})] == 1);
  CHECK(t[(VarWord{x_letter(2), x_letter(3), x_letter(1)})] == 1);

  auto u = shuffle({}, x_word(1, 2));
  CHECK(u.size() == 1);
  CHECK(u[x_word(1, 2)] == 1);

  std::mt19937_64 rng(41);
  for (int it = 0; it < 25; ++it) {
    VarWord a = random_varword(1 + it % 3, rng), b = random_varword(1 + (it / 3) % 3, rng),
            c = random_varword(1 + it % 2, rng);
    CHECK(shuffle(a, b) == shuffle(b, a));
    Rational total = 0;
    for (const auto& [w, k] : shuffle(a, b)) total += k;
    CHECK(total == binomial(static_cast<unsigned>(a.size() + b.size()), static_cast<unsigned>(a.size())));
    // (a sh b) sh c == a sh (b sh c)
    auto left = product_with(shuffle(a, b), c);
    FormalSum<Rational> right;
    for (const auto& [w, k] : shuffle(b, c))
      for (const auto& [v, m] : shuffle(a, w)) right[v] += k * m;
    CHECK(left == right);
  }
}

TEST_CASE("contracting shuffle") {
  auto q = quasi_shuffle_star(x_word(1, 1), x_word(2, 2));
  const RatFun f = RatFun::reciprocal(form({1, -1}));
  CHECK(q.size() == 4);
  CHECK(q[x_word(1, 2)] == RatFun::constant(2, 1));
  CHECK(q[(VarWord{x_letter(2), x_letter(1)})] == RatFun::constant(2, 1));
  CHECK(q[x_word(1, 1)] == f);
  CHECK(q[VarWord{x_letter(2)}] == -f);

  auto same = quasi_shuffle_star(x_word(1, 1), x_word(1, 1));
  CHECK(same.size() == 1);
  CHECK(same[(VarWord{x_letter(1), x_letter(1)})] == RatFun::constant(1, 2));

  auto unit = quasi_shuffle_star({}, x_word(1, 3));
  CHECK(unit.size() == 1);
  CHECK(unit[x_word(1, 3)] == RatFun::constant(3, 1));

  CHECK(mouldkit::operator-(x_letter(1), x_letter(2)) == make_letter({1, -1}));
  CHECK(make_letter({1, 0, 0}) == Letter{1});

  std::mt19937_64 rng(43);
  for (int it = 0; it < 15; ++it) {
    VarWord a = random_varword(1 + it % 3, rng), b = random_varword(1 + (it / 3) % 3, rng);
    auto ab = quasi_shuffle_star(a, b);
    CHECK(ab == quasi_shuffle_star(b, a));
    const std::size_t n = ambient_arity(a, b);
    const auto pt = oracle::random_point(n, rng);
    auto ref = oracle::qsh_at(a, b, pt);
    std::size_t nonzero = 0;
    for (const auto& [w, c] : ab) {
      CHECK(oracle::eval(c, pt) == ref[w]);
      ++nonzero;
    }
    CHECK(nonzero == ref.size());
  }
}

TEST_CASE("contracting shuffle keeps scalar multiples distinct") {
  // (x1) with (-x1): the difference 2 x1 is a genuine letter, and -x1 is not
  // identified with x1.
  VarWord a{x_letter(1)}, b{make_letter({-1})};
  auto q = quasi_shuffle_star(a, b);
  CHECK(q.count(VarWord{make_letter({-1})}) == 1);
  CHECK(q.count(VarWord{x_letter(1)}) == 1);
  CHECK(q[VarWord{x_letter(1)}] == RatFun::reciprocal(form({2})));
}
