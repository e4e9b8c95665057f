#include <doctest.h>

#include "helpers.hpp"
#include "mouldkit/app/sampling.hpp"
#include "mouldkit/bridge.hpp"
#include "mouldkit/errors.hpp"
#include "mouldkit/liealg.hpp"
#include "mouldkit/symmetry.hpp"
#include "oracles.hpp"

using namespace testing;
using mouldkit::app::random_lie;
using mouldkit::app::random_mould;
using mouldkit::app::Rng;

namespace {

NCPoly dmr_element(int w, std::size_t i = 0) {
  const auto b = dmr_basis(w);
  REQUIRE(b.dimension() > i);
  return lie_element(b, b.basis[i]);
}

}  // namespace

TEST_CASE("alternality") {
  CHECK(is_alternal(single(2, var(2, 0) - var(2, 1))));
  CHECK_FALSE(is_alternal(single(2, var(2, 0))));
  CHECK(alternal_defect(single(2, var(2, 0)), 1, 1) == var(2, 0) + var(2, 1));

  Mould with_constant = single(2, var(2, 0) - var(2, 1));
  with_constant.set(0, cst(0, 1));
  CHECK_FALSE(is_alternal(with_constant));

  SUBCASE("ma of Lie elements") {
    Rng rng(211);
    for (int w = 1; w <= 6; ++w)
      for (int it = 0; it < 3; ++it) CHECK(is_alternal(ma(random_lie(w, rng))));
  }

  SUBCASE("brute-force permutation oracle") {
    Rng rng(223);
    for (int it = 0; it < 15; ++it) {
      Mould m = random_mould(4, 3, rng);
      for (std::size_t p = 1; p <= 3; ++p)
        for (std::size_t q = 1; p + q <= 4; ++q) {
          const auto pt = oracle::random_point(p + q, rng);
          CHECK(oracle::eval(alternal_defect(m, p, q), pt) == oracle::alternal_at(m, p, q, pt));
        }
    }
  }
}

TEST_CASE("alternility sums") {
  SUBCASE("divided differences agree with collected rational functions and the pointwise oracle") {
    Rng rng(227);
    for (int it = 0; it < 12; ++it) {
      Mould n = random_mould(4, 3, rng);
      for (std::size_t p = 1; p <= 2; ++p)
        for (std::size_t q = 1; p + q <= 4; ++q) {
          const VarWord a = x_word(1, static_cast<int>(p));
          const VarWord b = x_word(static_cast<int>(p) + 1, static_cast<int>(p + q));
          const MultiPoly fast = alternil_sum(n, a, b, p + q);
          CHECK(fast == alternil_sum_collected(n, a, b, p + q));
          CHECK(fast == alternil_defect(n, p, q));
          const auto pt = oracle::random_point(p + q, rng);
          CHECK(oracle::eval(fast, pt) == oracle::alternil_at(n, p, q, pt));
        }
    }
  }

  SUBCASE("evaluation at composite letters") {
    Mould n = single(2, var(2, 0) * var(2, 1));
    VarWord w{make_letter({1, -1}), x_letter(3)};
    CHECK(evaluate_at(n[2], w, 3) == (var(3, 0) - var(3, 1)) * var(3, 2));
  }
}

TEST_CASE("alternility up to a constant") {
  SUBCASE("zero mould") {
    auto cert = alternil_up_to_constant(Mould(3));
    CHECK(cert.valid());
    for (const auto& v : cert.constant.values) CHECK(v == 0);
    CHECK(is_alternil(Mould(3)));
  }
  SUBCASE("constant depth-two component") {
    Mould n = single(2, cst(2, 1));
    CHECK(alternil_defect(n, 1, 1) == cst(2, 2));
    CHECK_FALSE(is_alternil(n));
    auto cert = alternil_up_to_constant(n);
    REQUIRE(cert.valid());
    CHECK(cert.constant[2] == -1);
    CHECK(is_alternil(n + cert.constant.to_mould()));
  }
  SUBCASE("swap of a dmr image") {
    Mould n = swap(ma(dmr_element(3)));
    auto cert = alternil_up_to_constant(n);
    CHECK(cert.valid());
    CHECK(is_alternil(n + cert.constant.to_mould()));
  }
  SUBCASE("no constant can help a nonconstant defect") {
    Mould n = single(2, var(2, 0));
    auto cert = alternil_up_to_constant(n);
    CHECK_FALSE(cert.valid());
    CHECK_FALSE(cert.residual_defects.empty());
  }
  SUBCASE("requires a vanishing constant component") {
    Mould n = Mould::unit(2);
    CHECK_THROWS_AS(alternil_up_to_constant(n), Error);
  }
  SUBCASE("depth bound") {
    Mould n = single(2, var(2, 0) * var(2, 0));
    CHECK(alternil_depth_bound(n) >= 2);
    CHECK(alternil_depth_bound(n) <= 4);
  }
}

TEST_CASE("senary relation") {
  SUBCASE("depth one is automatic in Fil2") {
    Rng rng(229);
    for (int it = 0; it < 10; ++it) {
      Mould m = random_mould(4, 4, rng);
      m.set(1, MultiPoly(1));
      CHECK(senary_holds(m, 1));
      CHECK(senary_translated_holds(m, 1));
    }
  }
  SUBCASE("dmr image at weight three") {
    Mould m = ma(dmr_element(3));
    for (std::size_t r = 1; r <= 4; ++r) CHECK(senary_holds(m, r));
  }
  SUBCASE("a failing example") {
    Mould m = single(2, var(2, 0));
    CHECK_FALSE(senary_holds(m, 2));
    CHECK_FALSE(senary_defect(m, 2).is_zero());
  }
  SUBCASE("zero mould") {
    for (std::size_t r = 1; r <= 4; ++r) {
      CHECK(senary_holds(Mould(3), r));
      CHECK(senary_translated_holds(Mould(3), r));
    }
  }
  SUBCASE("r = 0 is rejected") { CHECK_THROWS_AS(senary_defect(Mould(2), 0), SlotError); }

  SUBCASE("pointwise oracle and the translated form") {
    Rng rng(233);
    int holds = 0;
    for (int it = 0; it < 50; ++it) {
      Mould m = random_mould(1 + it % 4, 4, rng);
      for (std::size_t r = 1; r <= 3; ++r) {
        const auto pt = oracle::random_point(r, rng);
        CHECK(oracle::eval(senary_defect(m, r), pt) == oracle::senary_at(m, r, pt));
        const bool a = senary_holds(m, r);
        CHECK(a == senary_translated_holds(m, r));
        holds += a;
      }
    }
    // Both outcomes occur in the sample.
    CHECK(holds > 0);
    CHECK(holds < 150);
  }

  SUBCASE("linear in the mould") {
    const Mould a = ma(dmr_element(3)), b = ma(dmr_element(5));
    for (std::size_t r = 1; r <= 3; ++r) CHECK(senary_holds(Rational(2) * a - Rational(3, 2) * b, r));
  }
}

TEST_CASE("ARI membership") {
  SUBCASE("sena/pusnu") {
    CHECK(in_ari_sena_pusnu(Mould(3)));
    CHECK_FALSE(in_ari_sena_pusnu(single(2, var(2, 0))));
  }
  SUBCASE("al*il") {
    CHECK(in_ari_al_star_il(ma(dmr_element(3))));
    CHECK(in_ari_al_star_il(Mould(3)));
    CHECK_FALSE(in_ari_al_star_il(single(2, var(2, 0))));
  }
  SUBCASE("depth-two krv images") {
    // Combinations of krv elements whose mould starts in depth two.
    std::size_t found = 0;
    for (int w = 3; w <= 8; ++w) {
      const auto b = krv_basis(w);
      std::vector<Mould> images;
      for (const auto& v : b.basis) images.push_back(ma(F_to_ftilde(lie_element(b, v))));
      const Exponents depth1{static_cast<std::uint16_t>(w - 1)};
      RatMatrix a(1, images.size());
      for (std::size_t j = 0; j < images.size(); ++j) a(0, j) = images[j].component(1).coefficient(depth1);
      for (const auto& c : nullspace(a).basis) {
        Mould m(0);
        for (std::size_t j = 0; j < images.size(); ++j) m += c[j] * images[j];
        if (m.is_zero()) continue;
        CHECK(in_ari_sena_pusnu(m));
        ++found;
      }
    }
    CHECK(found >= 1);
  }
}

TEST_CASE("mould coordinate spaces") {
  MouldCoordinates mc(3);
  CHECK(mc.size() == 4);
  CHECK(mc.labels().size() == mc.size());
  Vector v(mc.size(), 0);
  v[0] = 1;
  CHECK(mc.element(v) == mc.unit(0));
  CHECK(mc.depth_of(0) == 1);

  // Weight-w spaces: alternal with swap alternil up to constants, and
  // alternal senary with swap pus-neutral.
  const std::vector<std::size_t> al_il{1, 0, 1, 0};
  const std::vector<std::size_t> sena{0, 0, 0, 0};
  for (int w = 3; w <= 6; ++w) {
    CHECK(al_il_space(w).dimension() == al_il[static_cast<std::size_t>(w - 3)]);
    CHECK(sena_pusnu_al_space(w).dimension() == sena[static_cast<std::size_t>(w - 3)]);
    for (const auto& vec : al_il_space(w).basis) CHECK(in_ari_al_star_il(MouldCoordinates(w).element(vec)));
  }
  CHECK(al_il_space(8, true).dimension() == 1);
}

TEST_CASE("ma of dmr elements") {
  for (int w = 3; w <= 8; ++w) {
    const auto b = dmr_basis(w);
    for (const auto& v : b.basis) {
      Mould m = ma(lie_element(b, v));
      CHECK(is_alternal(m));
      auto cert = alternil_up_to_constant(swap(m));
      REQUIRE(cert.valid());
      CHECK(cert.constant[2] == 0);
      for (std::size_t r = 1; r <= 3; ++r) CHECK(senary_holds(m, r));
    }
  }
}
