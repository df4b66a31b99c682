#pragma once

#include <utility>
#include <vector>

#include "howec/tripoly.hpp"
#include "howec/unipoly.hpp"

namespace howec {

// Per-prime workspace for the Legendre-form machinery: the Hasse polynomial,
// the delta coefficients of g(x) = x(x-1)(x-t) raised to e = (p-1)/2, and the
// supersingular lambda-invariants, which live in F_{p^2}.
struct LegendreContext {
  Digit p = 0;
  unsigned e = 0;        // (p-1)/2
  FieldHandle base;      // F_p
  FieldHandle quad;      // F_{p^2}
  // p must be an odd prime; p = 3 supports hasse_poly only. The seed fixes
  // the F_{p^2} modulus, so downstream output is deterministic per seed.
  static LegendreContext make(Digit p, u64 seed);
};

// H_p(t) = sum_{i<=e} C(e,i)^2 t^i over F_p; degree e, constant term 1.
UniPoly hasse_poly(const LegendreContext& ctx);

// x^{p-1} coefficient of g^e: (-1)^e H_p(t).
UniPoly delta_pm1(const LegendreContext& ctx);
// x^{p-2} coefficient of g^e: (-1)^{e-1} sum_{i=1}^{e} C(e,i-1) C(e,i) t^i.
UniPoly delta_pm2(const LegendreContext& ctx);

struct LegendreIdentityReport {
  bool derivative_identity = false;  // 2 delta'_{p-2} = 2t delta'_{p-1} + delta_{p-1}
  bool scaled_identity = false;      // (e+1) delta_{p-2} = (e+1) t delta_{p-1} + t(t-1) delta'_{p-1}
  bool deltas_coprime = false;       // gcd(delta_{p-1}, delta_{p-2}) = 1
  bool hasse_squarefree = false;     // gcd(H_p, H_p') = 1
  bool all() const {
    return derivative_identity && scaled_identity && deltas_coprime &&
           hasse_squarefree;
  }
};

// The two delta identities as exact polynomial equalities plus both
// coprimality statements.
LegendreIdentityReport check_prop31(const LegendreContext& ctx);

// (p-i)! = (-1)^i / (i-1)!  mod p for every i = 1..p.
bool check_lemma33(const LegendreContext& ctx);

// Both sides of the e-th-derivative factorization: (-1)^e e!/(p-1)! (g^e)^(e)
// against prod_i {(t - a_i)x - (1 - a_i)t} over the invariants a_i, compared
// exactly in F_{p^2}[x, t].
bool check_prop32(const LegendreContext& ctx);

// The e distinct roots of H_p in F_{p^2}, lex-sorted; none is 0 or 1 and the
// set is Frobenius-closed. Throws SplittingError when H_p fails to split into
// e distinct roots over F_{p^2}.
std::vector<FieldElement> supersingular_invariants(const LegendreContext& ctx);

// Depress x(x-1)(x-a) into X^3 + AX + B via X = x - (a+1)/3. Requires
// characteristic > 3 and a outside {0, 1}; the output curve is nonsingular.
std::pair<FieldElement, FieldElement> legendre_to_short_weierstrass(
    const FieldElement& a);

// One prime's worth of identity checking, bundled for the CLI table.
struct LegendreSuiteResult {
  Digit p = 0;
  LegendreIdentityReport prop31;
  bool lemma33 = false;
  bool delta_crosscheck = false;  // closed forms vs expansion of g^e
  bool prop32 = false;            // only meaningful when prop32_ran
  bool prop32_ran = false;
  bool all() const {
    return prop31.all() && lemma33 && delta_crosscheck &&
           (!prop32_ran || prop32);
  }
};

LegendreSuiteResult run_identity_suite(Digit p, u64 seed, bool with_prop32);

}  // namespace howec
