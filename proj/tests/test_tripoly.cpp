#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>

#include "doctest.h"
#include "howec/tripoly.hpp"
#include "oracles.hpp"

using namespace howec;

namespace {

TriPoly random_tri(std::mt19937_64& rng, const FieldHandle& h, unsigned nterms,
                   unsigned max_exp) {
  TriPoly f(h);
  for (unsigned t = 0; t < nterms; ++t) {
    unsigned i = rng() % (max_exp + 1);
    unsigned j = rng() % (max_exp + 1);
    unsigned n = rng() % (max_exp + 1);
    f.set_coeff(i, j, n, h->random_element(rng));
  }
  return f;
}

// independent product: dense cube convolution over explicit triple loops
TriPoly convolve_oracle(const TriPoly& a, const TriPoly& b) {
  const FieldHandle& h = a.field();
  std::map<std::array<unsigned, 3>, FieldElement> acc;
  for (const auto& [ka, ca] : a.terms()) {
    unsigned e1[3];
    TriPoly::unpack(ka, e1[0], e1[1], e1[2]);
    for (const auto& [kb, cb] : b.terms()) {
      unsigned e2[3];
      TriPoly::unpack(kb, e2[0], e2[1], e2[2]);
      std::array<unsigned, 3> key{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, ca * cb);
      else
        it->second = it->second + ca * cb;
    }
  }
  TriPoly out(h);
  for (const auto& [key, c] : acc) out.set_coeff(key[0], key[1], key[2], c);
  return out;
}

// independent full evaluation: per-term repeated multiplication
FieldElement term_eval_oracle(const TriPoly& f, const FieldElement& l,
                              const FieldElement& m, const FieldElement& n) {
  FieldElement acc = f.field()->zero();
  for (const auto& [key, c] : f.terms()) {
    unsigned e[3];
    TriPoly::unpack(key, e[0], e[1], e[2]);
    FieldElement t = c;
    for (unsigned r = 0; r < e[0]; ++r) t = t * l;
    for (unsigned r = 0; r < e[1]; ++r) t = t * m;
    for (unsigned r = 0; r < e[2]; ++r) t = t * n;
    acc = acc + t;
  }
  return acc;
}

}  // namespace

TEST_CASE("ring axioms on random sparse polynomials") {
  std::mt19937_64 rng(11);
  for (const auto& h : {Field::prime(5), Field::extension(7, 2, 3)}) {
    for (int t = 0; t < 20; ++t) {
      TriPoly a = random_tri(rng, h, 5, 6);
      TriPoly b = random_tri(rng, h, 5, 6);
      TriPoly c = random_tri(rng, h, 5, 6);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK(a * TriPoly::constant(h->one()) == a);
      CHECK((a * TriPoly::zero(h)).is_zero());
    }
  }
}

TEST_CASE("multiplication matches the brute-force convolution") {
  std::mt19937_64 rng(21);
  for (const auto& h : {Field::prime(5), Field::extension(3, 2, 9)}) {
    for (int t = 0; t < 25; ++t) {
      TriPoly a = random_tri(rng, h, 1 + rng() % 8, 5);
      TriPoly b = random_tri(rng, h, 1 + rng() % 8, 5);
      CHECK(a * b == convolve_oracle(a, b));
    }
  }
}

TEST_CASE("expansion of (l+m+n)^2 over F_5 has the six expected terms") {
  FieldHandle h = Field::prime(5);
  TriPoly s = TriPoly::variable(h, kVarL) + TriPoly::variable(h, kVarM) +
              TriPoly::variable(h, kVarN);
  TriPoly sq = s * s;
  CHECK(sq == convolve_oracle(s, s));
  CHECK(sq.term_count() == 6);
  CHECK(sq.coeff(2, 0, 0).is_one());
  CHECK(sq.coeff(1, 1, 0) == h->from_int(2));
  CHECK(sq.coeff(0, 1, 1) == h->from_int(2));
}

TEST_CASE("freshman's dream: (l+m)^p = l^p + m^p") {
  for (Digit p : {5u, 7u, 11u}) {
    FieldHandle h = Field::prime(p);
    TriPoly s = TriPoly::variable(h, kVarL) + TriPoly::variable(h, kVarM);
    TriPoly sp = s.pow(p);
    TriPoly want = TriPoly::monomial(h->one(), p, 0, 0) +
                   TriPoly::monomial(h->one(), 0, p, 0);
    CHECK(sp == want);
  }
}

TEST_CASE("pow agrees with repeated multiplication, including e = p") {
  std::mt19937_64 rng(31);
  FieldHandle h = Field::prime(5);
  for (int t = 0; t < 10; ++t) {
    TriPoly f = random_tri(rng, h, 4, 3);
    TriPoly acc = TriPoly::constant(h->one());
    for (unsigned e = 0; e <= 6; ++e) {
      CHECK(f.pow(e) == acc);
      acc = acc * f;
    }
  }
  // frobenius shortcut against the naive 5-fold product, extension coeffs too
  FieldHandle h2 = Field::extension(5, 2, 4);
  for (int t = 0; t < 5; ++t) {
    TriPoly f = random_tri(rng, h2, 3, 2);
    TriPoly naive = TriPoly::constant(h2->one());
    for (int i = 0; i < 5; ++i) naive = naive * f;
    CHECK(f.pow(5) == naive);
    CHECK(f.frobenius_power() == naive);
  }
}

TEST_CASE("ord and degree bookkeeping") {
  FieldHandle h = Field::prime(7);
  // l^2 m^3 + l m^5
  TriPoly f = TriPoly::monomial(h->one(), 2, 3, 0) +
              TriPoly::monomial(h->one(), 1, 5, 0);
  CHECK(f.ord_var(kVarM) == 3u);
  CHECK(f.ord_var(kVarL) == 1u);
  CHECK(f.ord_var(kVarN) == 0u);
  CHECK(f.deg_var(kVarM) == 5u);
  CHECK_FALSE(TriPoly::zero(h).ord_var(kVarM).has_value());
  CHECK(f.total_degree() == 6u);
}

TEST_CASE("homogeneity detection") {
  FieldHandle h = Field::prime(5);
  TriPoly lmn = TriPoly::monomial(h->one(), 1, 1, 1);
  CHECK(lmn.homogeneous_degree() == 3u);
  TriPoly mixed = TriPoly::variable(h, kVarL) + TriPoly::monomial(h->one(), 0, 2, 0);
  CHECK_FALSE(mixed.homogeneous_degree().has_value());
  CHECK_THROWS_AS(TriPoly::zero(h).homogeneous_degree(), PolyError);
}

TEST_CASE("reduction modulo variable ideals") {
  FieldHandle h = Field::prime(7);
  // l^3 + l*m + n^2  mod (m, n)  ->  l^3
  TriPoly f = TriPoly::monomial(h->one(), 3, 0, 0) +
              TriPoly::monomial(h->one(), 1, 1, 0) +
              TriPoly::monomial(h->one(), 0, 0, 2);
  TriPoly red = f.reduce_mod_vars(false, true, true);
  CHECK(red == TriPoly::monomial(h->one(), 3, 0, 0));
}

TEST_CASE("substitution and evaluation match the term oracle") {
  std::mt19937_64 rng(41);
  for (const auto& h : {Field::prime(11), Field::extension(5, 2, 6)}) {
    for (int t = 0; t < 20; ++t) {
      TriPoly f = random_tri(rng, h, 6, 4);
      FieldElement l = h->random_element(rng);
      FieldElement m = h->random_element(rng);
      FieldElement n = h->random_element(rng);
      CHECK(f.eval(l, m, n) == term_eval_oracle(f, l, m, n));
      // partial substitution then full evaluation
      TriPoly g = f.substitute_var(kVarM, m);
      CHECK(g.deg_var(kVarM).value_or(0) == 0);
      CHECK(g.eval(l, h->zero(), n) == term_eval_oracle(f, l, m, n));
      // collapse to a univariate in m
      UniPoly u = f.collapse(kVarM, l, n);
      CHECK(u.eval(m) == term_eval_oracle(f, l, m, n));
    }
  }
}

TEST_CASE("dehomogenize and rehomogenize round-trip on homogeneous input") {
  std::mt19937_64 rng(51);
  FieldHandle h = Field::prime(7);
  for (int t = 0; t < 20; ++t) {
    // random homogeneous of degree 9
    TriPoly f(h);
    for (int s = 0; s < 6; ++s) {
      unsigned i = rng() % 10;
      unsigned j = rng() % (10 - i);
      f.set_coeff(i, j, 9 - i - j, h->random_element(rng));
    }
    if (f.is_zero()) continue;
    REQUIRE(f.homogeneous_degree() == 9u);
    TriPoly dh = f.dehomogenize(kVarN);
    CHECK(dh.rehomogenize(kVarN, 9) == f);
  }
  TriPoly g = TriPoly::monomial(h->one(), 3, 0, 0);
  CHECK_THROWS_AS(g.rehomogenize(kVarN, 2), PolyError);
}

TEST_CASE("single-variable conversion to a univariate polynomial") {
  FieldHandle h = Field::prime(5);
  TriPoly f = TriPoly::monomial(h->from_int(2), 0, 3, 0) +
              TriPoly::monomial(h->from_int(4), 0, 1, 0);
  UniPoly u = f.to_unipoly(kVarM);
  CHECK(u == UniPoly::from_int_coeffs(h, {0, 4, 0, 2}));
  TriPoly bad = f + TriPoly::variable(h, kVarL);
  CHECK_THROWS_AS(bad.to_unipoly(kVarM), PolyError);
}

TEST_CASE("variable derivative follows the product rule and kills p-th powers") {
  std::mt19937_64 rng(61);
  FieldHandle h = Field::prime(5);
  for (int t = 0; t < 15; ++t) {
    TriPoly f = random_tri(rng, h, 5, 4);
    TriPoly g = random_tri(rng, h, 5, 4);
    for (unsigned v = 0; v < 3; ++v)
      CHECK((f * g).derivative_var(v) ==
            f.derivative_var(v) * g + f * g.derivative_var(v));
  }
  CHECK(TriPoly::monomial(h->one(), 5, 0, 0).derivative_var(kVarL).is_zero());
  CHECK(TriPoly::monomial(h->one(), 3, 0, 0).derivative_var(kVarL) ==
        TriPoly::monomial(h->from_int(3), 2, 0, 0));
}

TEST_CASE("exact division by a variable power") {
  std::mt19937_64 rng(71);
  FieldHandle h = Field::prime(7);
  TriPoly f = random_tri(rng, h, 6, 4);
  TriPoly m2 = TriPoly::monomial(h->one(), 0, 2, 0);
  CHECK((f * m2).divide_exact_var(kVarM, 2) == f);
  TriPoly g = TriPoly::variable(h, kVarL);  // no mu at all
  CHECK_THROWS_AS(g.divide_exact_var(kVarM, 1), PolyError);
}

TEST_CASE("canonical text form is graded-lex, highest degree first") {
  FieldHandle h = Field::prime(3);
  TriPoly s = TriPoly::variable(h, kVarL) + TriPoly::variable(h, kVarM);
  TriPoly sq = s * s;
  CHECK(sq.to_string() ==
        "1*l^2*m^0*n^0 + 2*l^1*m^1*n^0 + 1*l^0*m^2*n^0");
  CHECK(TriPoly::zero(h).to_string() == "0");
  TriPoly mix = TriPoly::constant(h->one()) + TriPoly::monomial(h->one(), 0, 0, 2);
  CHECK(mix.to_string() == "1*l^0*m^0*n^2 + 1*l^0*m^0*n^0");
}

TEST_CASE("coefficient lift along a subfield embedding commutes with eval") {
  FieldHandle base = Field::prime(5);
  FieldHandle ext = Field::extension(5, 2, 8);
  SubfieldEmbedding emb(base, ext);
  std::mt19937_64 rng(81);
  for (int t = 0; t < 15; ++t) {
    TriPoly f = random_tri(rng, base, 6, 4);
    TriPoly g = f.lifted(emb);
    CHECK(g.field()->same_as(*ext));
    FieldElement l = base->random_element(rng);
    FieldElement m = base->random_element(rng);
    FieldElement n = base->random_element(rng);
    CHECK(g.eval(emb.apply(l), emb.apply(m), emb.apply(n)) ==
          emb.apply(f.eval(l, m, n)));
  }
}

TEST_CASE("exponent packing is guarded") {
  FieldHandle h = Field::prime(5);
  CHECK_THROWS_AS(TriPoly::monomial(h->one(), 1u << 20, 0, 0), PolyError);
  CHECK_NOTHROW(TriPoly::monomial(h->one(), (1u << 20) - 1, 0, 0));
}

TEST_CASE("dense homogeneous product path agrees with the oracle at scale") {
  std::mt19937_64 rng(91);
  FieldHandle h = Field::extension(7, 2, 12);
  // two fully dense homogeneous polynomials of degrees 9 and 11
  TriPoly a(h), b(h);
  for (unsigned i = 0; i <= 9; ++i)
    for (unsigned j = 0; i + j <= 9; ++j)
      a.set_coeff(i, j, 9 - i - j, h->random_element(rng));
  for (unsigned i = 0; i <= 11; ++i)
    for (unsigned j = 0; i + j <= 11; ++j)
      b.set_coeff(i, j, 11 - i - j, h->random_element(rng));
  TriPoly prod = a * b;
  CHECK(prod.homogeneous_degree() == 20u);
  CHECK(prod == convolve_oracle(a, b));
}
