#include "howec/legendre.hpp"

#include <algorithm>

namespace howec {
namespace {

void require_p_gt3(const LegendreContext& ctx, const char* where) {
  if (ctx.p <= 3)
    throw FieldError(std::string(where) + ": requires characteristic > 3");
}

// g(x) = x(x-1)(x-t) = x^3 - (1+t) x^2 + t x as a polynomial in x (var l)
// and t (var m).
TriPoly legendre_cubic(const FieldHandle& h) {
  TriPoly g(h);
  g.set_coeff(3, 0, 0, h->one());
  g.set_coeff(2, 0, 0, h->from_int(-1));
  g.set_coeff(2, 1, 0, h->from_int(-1));
  g.set_coeff(1, 1, 0, h->one());
  return g;
}

// coefficient of l^j, as a univariate polynomial in m
UniPoly coeff_of_x_power(const TriPoly& f, unsigned j) {
  UniPoly out(f.field());
  unsigned e[3];
  for (const auto& [key, c] : f.terms()) {
    TriPoly::unpack(key, e[0], e[1], e[2]);
    if (e[0] == j) out.set_coeff(e[1], c);
  }
  return out;
}

}  // namespace

LegendreContext LegendreContext::make(Digit p, u64 seed) {
  LegendreContext ctx;
  ctx.base = Field::prime(p);  // validates primality, oddness, size
  ctx.p = p;
  ctx.e = (p - 1) / 2;
  ctx.quad = Field::extension(p, 2, mix_seed(seed, p, 2, 0x4c656761ull));
  return ctx;
}

UniPoly hasse_poly(const LegendreContext& ctx) {
  UniPoly h(ctx.base);
  for (unsigned i = 0; i <= ctx.e; ++i) {
    Digit b = binomial_mod_p(ctx.e, i, ctx.p);
    h.set_coeff(i, ctx.base->from_int(static_cast<std::int64_t>(b) * b));
  }
  return h;
}

UniPoly delta_pm1(const LegendreContext& ctx) {
  require_p_gt3(ctx, "delta_pm1");
  UniPoly h = hasse_poly(ctx);
  return (ctx.e % 2) ? -h : h;
}

UniPoly delta_pm2(const LegendreContext& ctx) {
  require_p_gt3(ctx, "delta_pm2");
  UniPoly d(ctx.base);
  bool flip = (ctx.e - 1) % 2;
  for (unsigned i = 1; i <= ctx.e; ++i) {
    std::int64_t b = static_cast<std::int64_t>(binomial_mod_p(ctx.e, i - 1, ctx.p)) *
                     binomial_mod_p(ctx.e, i, ctx.p);
    d.set_coeff(i, ctx.base->from_int(flip ? -b : b));
  }
  return d;
}

LegendreIdentityReport check_prop31(const LegendreContext& ctx) {
  require_p_gt3(ctx, "check_prop31");
  const FieldHandle& F = ctx.base;
  UniPoly d1 = delta_pm1(ctx);
  UniPoly d2 = delta_pm2(ctx);
  UniPoly t = UniPoly::x(F);
  UniPoly two = UniPoly::from_int_coeffs(F, {2});
  UniPoly e1 = UniPoly::from_int_coeffs(F, {static_cast<std::int64_t>(ctx.e) + 1});
  LegendreIdentityReport rep;
  rep.derivative_identity =
      two * d2.derivative() == two * t * d1.derivative() + d1;
  rep.scaled_identity =
      e1 * d2 == e1 * t * d1 + t * (t - UniPoly::one(F)) * d1.derivative();
  rep.deltas_coprime = gcd(d1, d2).degree() == 0;
  UniPoly h = hasse_poly(ctx);
  rep.hasse_squarefree = gcd(h, h.derivative()).degree() == 0;
  return rep;
}

bool check_lemma33(const LegendreContext& ctx) {
  const Digit p = ctx.p;
  for (Digit i = 1; i <= p; ++i) {
    Digit lhs = factorial_mod_p(p - i, p);
    Digit rhs = inv_mod_p(factorial_mod_p(i - 1, p), p);
    if (i % 2) rhs = rhs ? p - rhs : 0;  // times (-1)^i
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<FieldElement> supersingular_invariants(const LegendreContext& ctx) {
  require_p_gt3(ctx, "supersingular_invariants");
  UniPoly h = hasse_poly(ctx);
  if (gcd(h, h.derivative()).degree() != 0)
    throw SplittingError("Hasse polynomial has a repeated root");
  SubfieldEmbedding emb(ctx.base, ctx.quad);
  std::vector<FieldElement> roots =
      emb.apply(h).roots_in_field(mix_seed(0x696e7673ull, ctx.p));
  if (roots.size() != ctx.e)
    throw SplittingError(
        "Hasse polynomial does not split into linear factors over F_{p^2}");
  for (const auto& a : roots) {
    if (a.is_zero() || a.is_one())
      throw SplittingError("supersingular invariant collided with 0 or 1");
  }
  // Frobenius closure: conjugates of roots are roots; verify against the set.
  for (const auto& a : roots) {
    FieldElement c = a.frobenius();
    if (!std::binary_search(roots.begin(), roots.end(), c,
                            FieldElement::lex_less))
      throw SplittingError("invariant set is not Frobenius-closed");
  }
  return roots;  // roots_in_field already sorts
}

bool check_prop32(const LegendreContext& ctx) {
  require_p_gt3(ctx, "check_prop32");
  // left side: (-1)^e e!/(p-1)! (g^e)^(e), derivatives in x. Wilson gives
  // (p-1)! = -1, so the scalar is (-1)^{e+1} e!.
  TriPoly ge = legendre_cubic(ctx.base).pow(ctx.e);
  for (unsigned i = 0; i < ctx.e; ++i) ge = ge.derivative_var(kVarL);
  std::int64_t fact = factorial_mod_p(ctx.e, ctx.p);
  FieldElement scalar =
      ctx.base->from_int((ctx.e + 1) % 2 ? -fact : fact);
  TriPoly lhs = ge.scale(scalar);

  // right side: prod_i {(t - a_i) x - (1 - a_i) t} over F_{p^2}
  std::vector<FieldElement> inv = supersingular_invariants(ctx);
  const FieldHandle& Q = ctx.quad;
  TriPoly rhs = TriPoly::constant(Q->one());
  for (const auto& a : inv) {
    TriPoly factor(Q);
    factor.set_coeff(1, 1, 0, Q->one());                  // t x
    factor.set_coeff(1, 0, 0, -a);                        // -a x
    factor.set_coeff(0, 1, 0, a - Q->one());              // -(1-a) t
    rhs = rhs * factor;
  }
  SubfieldEmbedding emb(ctx.base, ctx.quad);
  return lhs.lifted(emb) == rhs;
}

std::pair<FieldElement, FieldElement> legendre_to_short_weierstrass(
    const FieldElement& a) {
  if (a.null()) throw FieldError("legendre_to_short_weierstrass: null input");
  const FieldHandle& F = a.field();
  if (F->characteristic() <= 3)
    throw FieldError("legendre_to_short_weierstrass: characteristic must exceed 3");
  if (a.is_zero() || a.is_one())
    throw FieldError("legendre_to_short_weierstrass: invariant must avoid 0 and 1");
  // x(x-1)(x-a), then depress the x^2 term by shifting x -> X + (a+1)/3
  UniPoly f(F);
  f.set_coeff(3, F->one());
  f.set_coeff(2, -(a + F->one()));
  f.set_coeff(1, a);
  FieldElement shift = (a + F->one()) / F->from_int(3);
  UniPoly dep = f.compose_linear(F->one(), shift);
  if (!dep.coeff(2).is_zero() || !dep.coeff(3).is_one())
    throw FieldError("legendre_to_short_weierstrass: depression failed");
  FieldElement A = dep.coeff(1), B = dep.coeff(0);
  FieldElement disc = F->from_int(4) * A * A * A + F->from_int(27) * B * B;
  if (disc.is_zero())
    throw FieldError("legendre_to_short_weierstrass: singular output");
  return {A, B};
}

LegendreSuiteResult run_identity_suite(Digit p, u64 seed, bool with_prop32) {
  LegendreContext ctx = LegendreContext::make(p, seed);
  LegendreSuiteResult res;
  res.p = p;
  res.prop31 = check_prop31(ctx);
  res.lemma33 = check_lemma33(ctx);
  // closed forms against the direct expansion of g^e
  TriPoly ge = legendre_cubic(ctx.base).pow(ctx.e);
  res.delta_crosscheck = coeff_of_x_power(ge, p - 1) == delta_pm1(ctx) &&
                         coeff_of_x_power(ge, p - 2) == delta_pm2(ctx);
  res.prop32_ran = with_prop32;
  if (with_prop32) res.prop32 = check_prop32(ctx);
  return res;
}

}  // namespace howec
