#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "howec/errors.hpp"
#include "howec/numutil.hpp"

namespace howec {

class Field;
class FieldElement;

// Shared immutable handle. Two handles are interoperable iff their contents
// (p, degree, modulus) are equal, regardless of object identity.
using FieldHandle = std::shared_ptr<const Field>;

// F_{p^k} for an odd prime p (p >= 3, machine-word size) and k >= 1.
// Elements are coefficient vectors of length k over F_p, lowest degree first,
// reduced modulo a monic irreducible modulus of degree k. For k = 1 no modulus
// is stored. Arithmetic: schoolbook multiply + reduction by the monic modulus;
// inversion by the extended Euclidean algorithm; Frobenius is x -> x^p.
class Field : public std::enable_shared_from_this<Field> {
 public:
  // Prime field F_p.
  static FieldHandle prime(Digit p);

  // F_{p^k} with a modulus found by a seeded random search over monic
  // degree-k polynomials. Deterministic for fixed (p, k, seed); k = 1 gives
  // the prime field (seed ignored).
  static FieldHandle extension(Digit p, unsigned k, u64 seed);

  // F_{p^k} with the given monic modulus [c0..c_{k-1}, 1]. Validates
  // primality, monicity and irreducibility; throws FieldError otherwise.
  // An empty modulus (or [*, 1] of length 2.. consistent) with k deduced.
  static FieldHandle with_modulus(Digit p, const std::vector<Digit>& modulus);

  Digit characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  // [c0..c_{k-1}, 1] for k >= 2; empty for k = 1.
  const std::vector<Digit>& modulus() const { return mod_; }
  bool same_as(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_;
  }
  // Number of elements; fits u128 for every supported size.
  u128 size() const;
  bool size_fits_u64() const;

  // --- element factories -------------------------------------------------
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t n) const;
  // digits.size() <= k, each < p; shorter vectors are zero-padded.
  FieldElement from_digits(std::vector<Digit> digits) const;
  // Elements in counting order: index written base p, digit i = coefficient i.
  FieldElement element_at(u64 index) const;
  FieldElement random_element(std::mt19937_64& rng) const;

  // --- digit-span kernels (buffers of length k, each digit < p) ----------
  void add_digits(const Digit* a, const Digit* b, Digit* out) const;
  void sub_digits(const Digit* a, const Digit* b, Digit* out) const;
  void neg_digits(const Digit* a, Digit* out) const;
  void mul_digits(const Digit* a, const Digit* b, Digit* out) const;
  void inv_digits(const Digit* a, Digit* out) const;  // throws on zero
  // Reduces a buffer of 2k-1 u64 accumulators (degree 2k-2 polynomial over
  // F_p, entries arbitrary u64 residues) modulo the field modulus into k
  // digits. Shared by mul_digits and the polynomial fast paths.
  void reduce_acc(u64* acc, Digit* out) const;

  // --- element arithmetic -------------------------------------------------
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, u128 e) const;
  FieldElement frobenius(const FieldElement& a) const;  // a^p

  FieldHandle handle() const { return shared_from_this(); }

 private:
  Field(Digit p, unsigned k, std::vector<Digit> mod)
      : p_(p), k_(k), mod_(std::move(mod)) {}

  Digit p_;
  unsigned k_;
  std::vector<Digit> mod_;
};

void require_same_field(const Field& a, const Field& b, const char* where);

class FieldElement {
 public:
  FieldElement() = default;  // null element; only assignment is valid
  FieldElement(FieldHandle f, std::vector<Digit> d)
      : f_(std::move(f)), d_(std::move(d)) {}

  bool null() const { return !f_; }
  const FieldHandle& field() const { return f_; }
  const std::vector<Digit>& digits() const { return d_; }
  Digit digit(unsigned i) const { return i < d_.size() ? d_[i] : 0; }
  bool is_zero() const;
  bool is_one() const;
  // True iff the element lies in the prime subfield.
  bool in_prime_subfield() const;

  FieldElement pow(u128 e) const { return f_->pow(*this, e); }
  FieldElement inv() const { return f_->inv(*this); }
  FieldElement frobenius() const { return f_->frobenius(*this); }

  std::string to_string() const;

  // Lexicographic order on digit vectors; total over one field, used for
  // canonical sorting of roots/solutions.
  static bool lex_less(const FieldElement& a, const FieldElement& b);

 private:
  FieldHandle f_;
  std::vector<Digit> d_;
  friend class Field;
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
bool operator==(const FieldElement& a, const FieldElement& b);
bool operator!=(const FieldElement& a, const FieldElement& b);

}  // namespace howec
