#pragma once

// Reference implementations used only by the test suite. Everything here is
// deliberately naive and independent of the library's algorithms: resultants
// come from a Sylvester determinant, products from schoolbook expansion,
// binomials from the Pascal recurrence, roots from exhaustive scans. Slow is
// fine; different is the point.

#include <random>
#include <vector>

#include "howec/field.hpp"
#include "howec/unipoly.hpp"

namespace oracles {

using howec::Field;
using howec::FieldElement;
using howec::FieldHandle;
using howec::UniPoly;

inline UniPoly random_poly(std::mt19937_64& rng, const FieldHandle& h,
                           int deg) {
  UniPoly f(h);
  if (deg < 0) return f;
  for (int i = 0; i < deg; ++i)
    f.set_coeff(static_cast<unsigned>(i), h->random_element(rng));
  // force the exact degree
  FieldElement lead = h->zero();
  while (lead.is_zero()) lead = h->random_element(rng);
  f.set_coeff(static_cast<unsigned>(deg), lead);
  return f;
}

inline UniPoly schoolbook_mul(const UniPoly& a, const UniPoly& b) {
  const FieldHandle& h = a.field();
  UniPoly out(h);
  if (a.is_zero() || b.is_zero()) return out;
  std::vector<FieldElement> acc(
      static_cast<std::size_t>(a.degree() + b.degree() + 1), h->zero());
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j)
      acc[i + j] = acc[i + j] + a.coeff(i) * b.coeff(j);
  return UniPoly::from_coeffs(h, acc);
}

inline UniPoly repeated_mul_pow(const UniPoly& f, unsigned e) {
  UniPoly r = UniPoly::one(f.field());
  for (unsigned i = 0; i < e; ++i) r = schoolbook_mul(r, f);
  return r;
}

inline FieldElement power_sum_eval(const UniPoly& f, const FieldElement& x) {
  FieldElement acc = f.field()->zero();
  FieldElement xp = f.field()->one();
  for (int i = 0; i <= f.degree(); ++i) {
    acc = acc + f.coeff(i) * xp;
    xp = xp * x;
  }
  return acc;
}

// Determinant by Gaussian elimination with exact field division.
inline FieldElement determinant(std::vector<std::vector<FieldElement>> m,
                                const FieldHandle& h) {
  const std::size_t n = m.size();
  FieldElement det = h->one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return h->zero();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    FieldElement inv = m[col][col].inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      FieldElement f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c)
        m[r][c] = m[r][c] - f * m[col][c];
    }
  }
  return det;
}

// Sylvester resultant, f-block on top, coefficients written descending.
inline FieldElement sylvester_resultant(const UniPoly& f, const UniPoly& g) {
  const FieldHandle& h = f.field();
  if (f.is_zero() || g.is_zero()) return h->zero();
  const int m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) return h->one();
  const std::size_t dim = static_cast<std::size_t>(m + n);
  std::vector<std::vector<FieldElement>> s(
      dim, std::vector<FieldElement>(dim, h->zero()));
  for (int row = 0; row < n; ++row)
    for (int i = 0; i <= m; ++i)
      s[row][row + i] = f.coeff(static_cast<unsigned>(m - i));
  for (int row = 0; row < m; ++row)
    for (int i = 0; i <= n; ++i)
      s[n + row][row + i] = g.coeff(static_cast<unsigned>(n - i));
  return determinant(std::move(s), h);
}

// Every root in the coefficient field, by scanning all of it.
inline std::vector<FieldElement> scan_roots(const UniPoly& f) {
  std::vector<FieldElement> out;
  const FieldHandle& h = f.field();
  for (howec::u64 i = 0; i < static_cast<howec::u64>(h->size()); ++i) {
    FieldElement x = h->element_at(i);
    if (power_sum_eval(f, x).is_zero()) out.push_back(x);
  }
  return out;
}

// Binomial coefficients mod p from the Pascal recurrence (row-by-row).
inline howec::Digit pascal_binomial(howec::u64 n, howec::u64 k,
                                    howec::Digit p) {
  if (k > n) return 0;
  std::vector<howec::Digit> row{1};
  for (howec::u64 r = 1; r <= n; ++r) {
    std::vector<howec::Digit> nxt(r + 1, 1);
    for (howec::u64 c = 1; c < r; ++c)
      nxt[c] = static_cast<howec::Digit>(
          (static_cast<howec::u64>(row[c - 1]) + row[c]) % p);
    row = std::move(nxt);
  }
  return row[k];
}

}  // namespace oracles
