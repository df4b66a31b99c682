#pragma once

#include "howec/unipoly.hpp"

namespace howec {

// Cartier-Manin matrix ((a, b), (c, d)) of a genus-2 hyperelliptic model
// y^2 = f(x): with h = f^{(p-1)/2} = sum gamma_i x^i, the entries are
// a = gamma_{p-1}, b = gamma_{2p-1}, c = gamma_{p-2}, d = gamma_{2p-2}.
struct CartierMatrix {
  FieldHandle handle;
  FieldElement a, b, c, d;
};

// Entries read off f^{(p-1)/2}, truncated at degree 2p-1. f must be
// squarefree of degree 5 or 6 over a field of odd characteristic.
CartierMatrix cartier_matrix(const UniPoly& f);

// M M^sigma, where sigma raises each entry to the p-th power.
CartierMatrix mm_sigma(const CartierMatrix& M);

// The curve behind M is supersingular iff M M^sigma = 0.
bool is_supersingular_genus2(const CartierMatrix& M);

// The equivalent three-equation form: ad - bc = 0, a b^{p-1} + d^p = 0,
// a^p + c^{p-1} d = 0.
bool reduced_system_holds(const FieldElement& a, const FieldElement& b,
                          const FieldElement& c, const FieldElement& d);

// P^{-1} M P^sigma for P = ((u, 0), (uv, u^2)), u != 0. When M is the matrix
// of y^2 = f(x), this is the matrix of y^2 = f(uX + v).
CartierMatrix transform(const CartierMatrix& M, const FieldElement& u,
                        const FieldElement& v);

// Supersingularity of y^2 = x^3 + Ax + B via the vanishing of the x^{p-1}
// coefficient of (x^3 + Ax + B)^{(p-1)/2}. Requires 4A^3 + 27B^2 != 0 and
// characteristic > 3.
bool elliptic_supersingular(const FieldElement& A, const FieldElement& B);

// 2 - rank(M).
int a_number(const CartierMatrix& M);

}  // namespace howec
