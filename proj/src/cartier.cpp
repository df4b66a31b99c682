#include "howec/cartier.hpp"

namespace howec {
namespace {

void require_matrix(const CartierMatrix& M, const char* where) {
  if (!M.handle) throw FieldError(std::string(where) + ": empty matrix");
  require_same_field(*M.a.field(), *M.b.field(), where);
  require_same_field(*M.a.field(), *M.c.field(), where);
  require_same_field(*M.a.field(), *M.d.field(), where);
}

}  // namespace

CartierMatrix cartier_matrix(const UniPoly& f) {
  if (f.null()) throw PolyError("cartier_matrix: null polynomial");
  const FieldHandle& F = f.field();
  const Digit p = F->characteristic();
  if (f.degree() != 5 && f.degree() != 6)
    throw PolyError("cartier_matrix: model must have degree 5 or 6");
  if (gcd(f, f.derivative()).degree() != 0)
    throw PolyError("cartier_matrix: model is not squarefree");
  UniPoly h = f.pow_truncated((p - 1) / 2, 2 * p - 1);
  return CartierMatrix{F, h.coeff(p - 1), h.coeff(2 * p - 1), h.coeff(p - 2),
                       h.coeff(2 * p - 2)};
}

CartierMatrix mm_sigma(const CartierMatrix& M) {
  require_matrix(M, "mm_sigma");
  FieldElement as = M.a.frobenius(), bs = M.b.frobenius();
  FieldElement cs = M.c.frobenius(), ds = M.d.frobenius();
  return CartierMatrix{M.handle, M.a * as + M.b * cs, M.a * bs + M.b * ds,
                       M.c * as + M.d * cs, M.c * bs + M.d * ds};
}

bool is_supersingular_genus2(const CartierMatrix& M) {
  CartierMatrix S = mm_sigma(M);
  return S.a.is_zero() && S.b.is_zero() && S.c.is_zero() && S.d.is_zero();
}

bool reduced_system_holds(const FieldElement& a, const FieldElement& b,
                          const FieldElement& c, const FieldElement& d) {
  require_same_field(*a.field(), *b.field(), "reduced_system_holds");
  require_same_field(*a.field(), *c.field(), "reduced_system_holds");
  require_same_field(*a.field(), *d.field(), "reduced_system_holds");
  const Digit p = a.field()->characteristic();
  if (!(a * d - b * c).is_zero()) return false;
  if (!(a * b.pow(p - 1) + d.pow(p)).is_zero()) return false;
  return (a.pow(p) + c.pow(p - 1) * d).is_zero();
}

CartierMatrix transform(const CartierMatrix& M, const FieldElement& u,
                        const FieldElement& v) {
  require_matrix(M, "transform");
  require_same_field(*M.a.field(), *u.field(), "transform");
  require_same_field(*M.a.field(), *v.field(), "transform");
  if (u.is_zero()) throw FieldError("transform: scale factor must be nonzero");
  const Digit p = M.handle->characteristic();
  // P = ((u, 0), (uv, u^2)) gives P^{-1} = ((1/u, 0), (-v/u^2, 1/u^2)) and
  // P^sigma = ((u^p, 0), (u^p v^p, u^{2p})).
  FieldElement up = u.pow(p), vp = v.pow(p);
  FieldElement iu = u.inv(), iu2 = iu * iu;
  FieldElement r0 = M.a + M.b * vp;  // top row of M P^sigma, / u^p
  FieldElement r1 = M.c + M.d * vp;
  return CartierMatrix{M.handle, iu * up * r0, iu * M.b * up * up,
                       iu2 * up * (r1 - v * r0), iu2 * (M.d - v * M.b) * up * up};
}

bool elliptic_supersingular(const FieldElement& A, const FieldElement& B) {
  require_same_field(*A.field(), *B.field(), "elliptic_supersingular");
  const FieldHandle& F = A.field();
  const Digit p = F->characteristic();
  if (p <= 3)
    throw FieldError("elliptic_supersingular: characteristic must exceed 3");
  FieldElement disc = F->from_int(4) * A * A * A + F->from_int(27) * B * B;
  if (disc.is_zero())
    throw FieldError("elliptic_supersingular: singular model");
  UniPoly f(F);
  f.set_coeff(3, F->one());
  f.set_coeff(1, A);
  f.set_coeff(0, B);
  return f.pow_truncated((p - 1) / 2, p - 1).coeff(p - 1).is_zero();
}

int a_number(const CartierMatrix& M) {
  require_matrix(M, "a_number");
  if (M.a.is_zero() && M.b.is_zero() && M.c.is_zero() && M.d.is_zero())
    return 2;
  return (M.a * M.d - M.b * M.c).is_zero() ? 1 : 0;
}

}  // namespace howec
