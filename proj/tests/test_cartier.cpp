#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "howec/cartier.hpp"
#include "howec/legendre.hpp"
#include "oracles.hpp"

using namespace howec;

namespace {

// matrix straight off the full schoolbook power, no truncation path shared
// with the implementation
CartierMatrix oracle_matrix(const UniPoly& f) {
  const FieldHandle& F = f.field();
  const Digit p = F->characteristic();
  UniPoly h = oracles::repeated_mul_pow(f, (p - 1) / 2);
  return CartierMatrix{F, h.coeff(p - 1), h.coeff(2 * p - 1), h.coeff(p - 2),
                       h.coeff(2 * p - 2)};
}

bool entries_equal(const CartierMatrix& x, const CartierMatrix& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

UniPoly random_squarefree_model(std::mt19937_64& rng, const FieldHandle& h,
                                int deg) {
  for (;;) {
    UniPoly f = oracles::random_poly(rng, h, deg);
    if (gcd(f, f.derivative()).degree() == 0) return f;
  }
}

}  // namespace

TEST_CASE("matrix entries are the four marked power coefficients") {
  SUBCASE("y^2 = x^5 + 1 in characteristic 3") {
    auto F3 = Field::prime(3);
    UniPoly f = UniPoly::from_int_coeffs(F3, {1, 0, 0, 0, 0, 1});
    CartierMatrix M = cartier_matrix(f);
    CHECK(M.a.is_zero());
    CHECK(M.b.is_one());
    CHECK(M.c.is_zero());
    CHECK(M.d.is_zero());
    CHECK(is_supersingular_genus2(M));
    CHECK(a_number(M) == 1);
  }
  SUBCASE("y^2 = x^5 + x + 1 in characteristic 5") {
    auto F5 = Field::prime(5);
    UniPoly f = UniPoly::from_int_coeffs(F5, {1, 1, 0, 0, 0, 1});
    REQUIRE(gcd(f, f.derivative()).degree() == 0);
    UniPoly sq = oracles::schoolbook_mul(f, f);
    CartierMatrix M = cartier_matrix(f);
    CHECK(M.a == sq.coeff(4));
    CHECK(M.b == sq.coeff(9));
    CHECK(M.c == sq.coeff(3));
    CHECK(M.d == sq.coeff(8));
  }
  SUBCASE("random models match the untruncated expansion") {
    for (Digit p : {5u, 7u, 11u}) {
      for (unsigned k : {1u, 2u}) {
        auto F = k == 1 ? Field::prime(p) : Field::extension(p, 2, 77);
        std::mt19937_64 rng(mix_seed(21, p, k));
        for (int deg : {5, 6}) {
          for (int trial = 0; trial < 5; ++trial) {
            UniPoly f = random_squarefree_model(rng, F, deg);
            CHECK(entries_equal(cartier_matrix(f), oracle_matrix(f)));
          }
        }
      }
    }
  }
  SUBCASE("rejects bad models") {
    auto F5 = Field::prime(5);
    // wrong degree
    CHECK_THROWS_AS(cartier_matrix(UniPoly::from_int_coeffs(F5, {1, 1, 0, 0, 1})),
                    PolyError);
    CHECK_THROWS_AS(
        cartier_matrix(UniPoly::from_int_coeffs(F5, {1, 1, 0, 0, 0, 0, 0, 1})),
        PolyError);
    // x^2 (x^3 + x + 1): repeated root at 0
    CHECK_THROWS_AS(cartier_matrix(UniPoly::from_int_coeffs(F5, {0, 0, 1, 1, 0, 1})),
                    PolyError);
    CHECK_THROWS_AS(cartier_matrix(UniPoly{}), PolyError);
  }
}

TEST_CASE("matrix criterion agrees with the reduced system") {
  // The two supersingularity formulations are equivalent as plain field
  // algebra, so random quadruples are a fair universe.
  for (Digit p : {5u, 7u, 11u, 13u}) {
    CAPTURE(p);
    auto Q = Field::extension(p, 2, 31);
    std::mt19937_64 rng(mix_seed(22, p));
    int holds = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      FieldElement a = Q->random_element(rng), b = Q->random_element(rng);
      FieldElement c = Q->random_element(rng), d = Q->random_element(rng);
      bool lhs = is_supersingular_genus2(CartierMatrix{Q, a, b, c, d});
      bool rhs = reduced_system_holds(a, b, c, d);
      CHECK(lhs == rhs);
      holds += lhs;
    }
    // dense corner sweep hits the degenerate patterns
    for (int mask = 0; mask < 256; ++mask) {
      FieldElement a = Q->from_int(mask & 3), b = Q->from_int((mask >> 2) & 3);
      FieldElement c = Q->from_int((mask >> 4) & 3),
                   d = Q->from_int((mask >> 6) & 3);
      CHECK(is_supersingular_genus2(CartierMatrix{Q, a, b, c, d}) ==
            reduced_system_holds(a, b, c, d));
    }
    // nontrivial matrices on the locus: conjugates of ((0, b), (0, 0))
    for (int trial = 0; trial < 50; ++trial) {
      FieldElement b = Q->random_element(rng), u = Q->random_element(rng);
      FieldElement v = Q->random_element(rng);
      if (b.is_zero() || u.is_zero() || v.is_zero()) continue;
      CartierMatrix T =
          transform(CartierMatrix{Q, Q->zero(), b, Q->zero(), Q->zero()}, u, v);
      CHECK(!T.a.is_zero());  // genuinely four nonzero entries
      CHECK(!T.d.is_zero());
      CHECK(is_supersingular_genus2(T));
      CHECK(reduced_system_holds(T.a, T.b, T.c, T.d));
    }
  }
  SUBCASE("frozen spot values") {
    auto F7 = Field::prime(7);
    auto m = [&](int a, int b, int c, int d) {
      return CartierMatrix{F7, F7->from_int(a), F7->from_int(b),
                           F7->from_int(c), F7->from_int(d)};
    };
    CHECK(is_supersingular_genus2(m(0, 0, 0, 0)));
    CHECK(reduced_system_holds(F7->zero(), F7->zero(), F7->zero(), F7->zero()));
    CHECK(is_supersingular_genus2(m(0, 1, 0, 0)));
    CHECK(reduced_system_holds(F7->zero(), F7->one(), F7->zero(), F7->zero()));
    CHECK(!is_supersingular_genus2(m(1, 0, 0, 1)));
    CHECK(!reduced_system_holds(F7->one(), F7->zero(), F7->zero(), F7->one()));
  }
}

TEST_CASE("transform tracks the substitution x -> ux + v") {
  SUBCASE("identity substitution") {
    auto F5 = Field::prime(5);
    UniPoly f = UniPoly::from_int_coeffs(F5, {1, 1, 0, 0, 0, 1});
    CartierMatrix M = cartier_matrix(f);
    CHECK(entries_equal(transform(M, F5->one(), F5->zero()), M));
  }
  SUBCASE("x(x-1)(x-2)(x^2+2) under random substitutions") {
    auto F5 = Field::prime(5);
    // (x^3 + 2x^2 + 2x)(x^2 + 2) = x^5 + 2x^4 + 4x^3 + 4x^2 + 4x
    UniPoly f = UniPoly::from_int_coeffs(F5, {0, 4, 4, 4, 2, 1});
    REQUIRE(gcd(f, f.derivative()).degree() == 0);
    CartierMatrix M = cartier_matrix(f);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      FieldElement u = F5->random_element(rng), v = F5->random_element(rng);
      if (u.is_zero()) continue;
      CHECK(entries_equal(transform(M, u, v),
                          cartier_matrix(f.compose_linear(u, v))));
    }
  }
  SUBCASE("random sextics over prime and quadratic fields") {
    for (Digit p : {5u, 7u, 11u}) {
      for (unsigned k : {1u, 2u}) {
        auto F = k == 1 ? Field::prime(p) : Field::extension(p, 2, 78);
        std::mt19937_64 rng(mix_seed(24, p, k));
        for (int trial = 0; trial < 8; ++trial) {
          UniPoly f = random_squarefree_model(rng, F, 6);
          FieldElement u = F->random_element(rng), v = F->random_element(rng);
          if (u.is_zero()) u = F->one();
          CartierMatrix M = cartier_matrix(f);
          CartierMatrix T = transform(M, u, v);
          CHECK(entries_equal(T, cartier_matrix(f.compose_linear(u, v))));
          // supersingularity is a conjugation invariant
          CHECK(is_supersingular_genus2(T) == is_supersingular_genus2(M));
          // undo with the inverse substitution
          CartierMatrix back = transform(T, u.inv(), -(v / u));
          CHECK(entries_equal(back, M));
        }
      }
    }
  }
  SUBCASE("rejects a vanishing scale") {
    auto F5 = Field::prime(5);
    CartierMatrix M{F5, F5->one(), F5->zero(), F5->zero(), F5->one()};
    CHECK_THROWS_AS(transform(M, F5->zero(), F5->one()), FieldError);
  }
}

TEST_CASE("elliptic supersingularity via the marked power coefficient") {
  auto F5 = Field::prime(5);
  auto F7 = Field::prime(7);
  CHECK(elliptic_supersingular(F5->zero(), F5->one()));
  CHECK(!elliptic_supersingular(F5->one(), F5->zero()));
  CHECK(elliptic_supersingular(F7->from_int(6), F7->zero()));
  // (x^3 - x)^3 = x^9 - 3x^7 + 3x^5 - x^3 by hand: x^6 term absent
  UniPoly cube = oracles::repeated_mul_pow(
      UniPoly::from_int_coeffs(F7, {0, 6, 0, 1}), 3);
  CHECK(cube.coeff(6).is_zero());

  // singular inputs rejected: 4*(-3)^3 + 27*2^2 = 0
  CHECK_THROWS_AS(elliptic_supersingular(F5->from_int(-3), F5->from_int(2)),
                  FieldError);
  CHECK_THROWS_AS(elliptic_supersingular(F5->zero(), F5->zero()), FieldError);
  auto F3 = Field::prime(3);
  CHECK_THROWS_AS(elliptic_supersingular(F3->one(), F3->one()), FieldError);

  SUBCASE("agrees with the Hasse-root description of the invariants") {
    for (Digit p : {7u, 11u, 13u}) {
      CAPTURE(p);
      auto ctx = LegendreContext::make(p, 25);
      SubfieldEmbedding emb(ctx.base, ctx.quad);
      UniPoly h = emb.apply(hasse_poly(ctx));
      for (const auto& a : supersingular_invariants(ctx)) {
        auto [A, B] = legendre_to_short_weierstrass(a);
        CHECK(elliptic_supersingular(A, B));
      }
      // every rational non-root depresses to an ordinary curve
      for (Digit c0 = 2; c0 + 1 < p; ++c0) {
        FieldElement a = ctx.quad->from_int(c0);
        if (h.eval(a).is_zero()) continue;
        auto [A, B] = legendre_to_short_weierstrass(a);
        CHECK(!elliptic_supersingular(A, B));
      }
    }
  }
  SUBCASE("next coefficient down never vanishes on supersingular models") {
    for (Digit p : {5u, 7u, 11u, 13u}) {
      CAPTURE(p);
      auto ctx = LegendreContext::make(p, 26);
      for (const auto& a : supersingular_invariants(ctx)) {
        auto [A, B] = legendre_to_short_weierstrass(a);
        UniPoly f(ctx.quad);
        f.set_coeff(3, ctx.quad->one());
        f.set_coeff(1, A);
        f.set_coeff(0, B);
        CHECK(!f.pow_truncated(ctx.e, p - 2).coeff(p - 2).is_zero());
      }
    }
  }
}

TEST_CASE("a-number counts the corank") {
  auto F7 = Field::prime(7);
  auto m = [&](int a, int b, int c, int d) {
    return CartierMatrix{F7, F7->from_int(a), F7->from_int(b), F7->from_int(c),
                         F7->from_int(d)};
  };
  CHECK(a_number(m(0, 0, 0, 0)) == 2);
  CHECK(a_number(m(0, 1, 0, 0)) == 1);
  CHECK(a_number(m(1, 0, 0, 1)) == 0);
  CHECK(a_number(m(2, 4, 3, 6)) == 1);  // proportional rows
  CHECK(a_number(m(2, 4, 3, 5)) == 0);
  // rank is a conjugation invariant too
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 40; ++trial) {
    CartierMatrix M = m(static_cast<int>(rng() % 7), static_cast<int>(rng() % 7),
                        static_cast<int>(rng() % 7), static_cast<int>(rng() % 7));
    FieldElement u = F7->random_element(rng), v = F7->random_element(rng);
    if (u.is_zero()) continue;
    CHECK(a_number(transform(M, u, v)) == a_number(M));
  }
}
