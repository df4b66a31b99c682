#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "howec/field.hpp"

namespace howec {

// Dense univariate polynomial over a FieldHandle. Coefficients are stored
// flat (constant term first, k digits per coefficient) and kept normalized:
// the zero polynomial owns no storage, otherwise the leading coefficient is
// nonzero. degree() is -1 for the zero polynomial.
class UniPoly {
 public:
  UniPoly() = default;  // null; only assignment is valid
  explicit UniPoly(FieldHandle f) : f_(std::move(f)) {}

  static UniPoly zero(const FieldHandle& f) { return UniPoly(f); }
  static UniPoly one(const FieldHandle& f);
  static UniPoly x(const FieldHandle& f);
  static UniPoly monomial(const FieldElement& c, unsigned deg);
  static UniPoly from_coeffs(const FieldHandle& f,
                             const std::vector<FieldElement>& coeffs);
  static UniPoly from_int_coeffs(const FieldHandle& f,
                                 const std::vector<std::int64_t>& coeffs);

  const FieldHandle& field() const { return f_; }
  bool null() const { return !f_; }
  int degree() const;
  bool is_zero() const { return c_.empty(); }
  FieldElement coeff(unsigned i) const;
  FieldElement leading() const;
  // Direct digit view: coefficient i occupies [i*k, (i+1)*k).
  const std::vector<Digit>& raw() const { return c_; }

  void set_coeff(unsigned i, const FieldElement& v);

  UniPoly operator-() const;
  UniPoly scale(const FieldElement& s) const;
  UniPoly shift_up(unsigned n) const;  // multiply by x^n
  UniPoly truncated(unsigned cutoff) const;  // drop degrees > cutoff
  // Product truncated to degrees <= cutoff (full product when cutoff is
  // large). Lazy digit accumulation; safe for any operand size.
  UniPoly mul_truncated(const UniPoly& o, unsigned cutoff) const;
  // Binary powering with truncation applied after every multiply.
  UniPoly pow_truncated(u64 e, unsigned cutoff) const;
  UniPoly pow(u64 e) const;
  UniPoly derivative() const;
  // Quotient and remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& divisor) const;
  UniPoly monic() const;
  FieldElement eval(const FieldElement& at) const;
  // f(u*x + v), linear substitution via Horner.
  UniPoly compose_linear(const FieldElement& u, const FieldElement& v) const;
  // Coefficient-wise Frobenius (x -> x^p on coefficients).
  UniPoly coeff_frobenius() const;
  std::string to_string(const std::string& var) const;

  // Roots lying in the coefficient field itself, each listed once, sorted in
  // digit-lex order. Deterministic for a fixed seed: the equal-degree split
  // draws from a seeded generator keyed on the input.
  std::vector<FieldElement> roots_in_field(u64 seed) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b);
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

 private:
  void normalize();
  FieldHandle f_;
  std::vector<Digit> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic (or zero)

// Resultant via the Euclidean polynomial remainder sequence over the
// coefficient field (the degenerate fraction-free subresultant scheme: every
// division is exact over a field, so no fraction plumbing is needed and
// intermediate growth stays linear). Convention: resultant(f, g) equals the
// determinant of the Sylvester matrix with the f-block on top, i.e.
// lc(f)^deg(g) * prod g(alpha) over the roots alpha of f. In particular
// resultant(x - a, x - b) = a - b, and any zero input gives zero.
FieldElement resultant(const UniPoly& f, const UniPoly& g);

// b^e mod m over the coefficient field (m nonzero, deg m >= 1).
UniPoly powmod(const UniPoly& base, u128 e, const UniPoly& m);
// x^(p^times) mod m by iterated Frobenius powering.
UniPoly frobenius_x_power(const UniPoly& m, unsigned times);

// Field embedding F_{p^j} -> F_{p^k} for j | k. The generator image is the
// digit-lex smallest root of the source modulus in the target field, so the
// map is deterministic for fixed handles. Identical handles short-circuit to
// the identity.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(FieldHandle src, FieldHandle dst);
  const FieldHandle& src() const { return src_; }
  const FieldHandle& dst() const { return dst_; }
  FieldElement apply(const FieldElement& a) const;
  UniPoly apply(const UniPoly& f) const;
  // Writes the unique preimage into out and returns true when a lies in the
  // embedded copy of the source field; returns false otherwise.
  bool try_decompose(const FieldElement& a, FieldElement& out) const;

 private:
  FieldHandle src_, dst_;
  bool identity_ = false;
  std::vector<FieldElement> gen_powers_;  // r^0 .. r^{j-1} in dst
};

// Roots of f (over F_p or a subfield of the target) in F_{p^k}; the target
// handle is built from (p, k, seed) and also seeds the equal-degree split.
std::vector<FieldElement> roots_in_extension(const UniPoly& f, unsigned k,
                                             u64 seed);

// Unique interpolating polynomial of degree < nodes.size() through
// (nodes[i], values[i]); nodes must be pairwise distinct, all over one field.
UniPoly interpolate(const std::vector<FieldElement>& nodes,
                    const std::vector<FieldElement>& values);

}  // namespace howec
