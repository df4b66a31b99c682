#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "howec/unipoly.hpp"

namespace howec {

// Variable indices for the three indeterminates; printed as l, m, n.
inline constexpr unsigned kVarL = 0;  // lambda
inline constexpr unsigned kVarM = 1;  // mu
inline constexpr unsigned kVarN = 2;  // nu

// Sparse exact polynomial in three variables over a FieldHandle. Terms live
// in an ordered map keyed by the packed exponent triple (20 bits per
// variable, guarded); no zero coefficient is ever stored. Also serves as a
// bivariate carrier by simply never using the third variable.
class TriPoly {
 public:
  using TermMap = std::map<u64, FieldElement>;

  static constexpr unsigned kExpMax = (1u << 20) - 1;
  static u64 pack(unsigned il, unsigned im, unsigned in);
  static void unpack(u64 key, unsigned& il, unsigned& im, unsigned& in);

  TriPoly() = default;  // null; only assignment is valid
  explicit TriPoly(FieldHandle f) : f_(std::move(f)) {}

  static TriPoly zero(const FieldHandle& f) { return TriPoly(f); }
  static TriPoly constant(const FieldElement& c);
  static TriPoly variable(const FieldHandle& f, unsigned var);
  static TriPoly monomial(const FieldElement& c, unsigned il, unsigned im,
                          unsigned in);

  const FieldHandle& field() const { return f_; }
  bool null() const { return !f_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  const TermMap& terms() const { return t_; }

  FieldElement coeff(unsigned il, unsigned im, unsigned in) const;
  void set_coeff(unsigned il, unsigned im, unsigned in, const FieldElement& v);

  TriPoly operator-() const;
  TriPoly scale(const FieldElement& s) const;
  // Binary powering; powers of the characteristic collapse to the Frobenius
  // shortcut (exponents scaled by p, coefficients taken to the p-th power).
  TriPoly pow(u64 e) const;
  TriPoly frobenius_power() const;  // f^p in one step

  // Minimal exponent of var over all terms; nullopt (= infinity) when zero.
  std::optional<unsigned> ord_var(unsigned var) const;
  // Maximal exponent of var; nullopt when zero.
  std::optional<unsigned> deg_var(unsigned var) const;
  std::optional<unsigned> total_degree() const;  // nullopt when zero
  // Common total degree of all terms, or nullopt when mixed; zero input is
  // rejected (no meaningful answer).
  std::optional<unsigned> homogeneous_degree() const;

  // Drops every term containing any selected variable (reduction modulo the
  // ideal generated by those variables).
  TriPoly reduce_mod_vars(bool drop_l, bool drop_m, bool drop_n) const;
  TriPoly substitute_var(unsigned var, const FieldElement& value) const;
  FieldElement eval(const FieldElement& l, const FieldElement& m,
                    const FieldElement& n) const;
  // Collapse to a univariate polynomial in `keep`, substituting the given
  // values for the other two variables in increasing index order.
  UniPoly collapse(unsigned keep, const FieldElement& first,
                   const FieldElement& second) const;
  // The polynomial must involve only `var`.
  UniPoly to_unipoly(unsigned var) const;
  TriPoly derivative_var(unsigned var) const;
  // Exact division by var^e; throws when some term has a smaller exponent.
  TriPoly divide_exact_var(unsigned var, unsigned e) const;
  TriPoly dehomogenize(unsigned var) const;  // substitute 1
  // Raise each term's `var` exponent so its total degree reaches `total`.
  TriPoly rehomogenize(unsigned var, unsigned total) const;
  // Coefficient-wise application of a subfield embedding.
  TriPoly lifted(const SubfieldEmbedding& emb) const;

  // Canonical text: `c*l^i*m^j*n^k` terms joined by " + ", highest total
  // degree first, ties in lexicographic (l, m, n) exponent order, larger
  // first. Exponents and the coefficient are always written out.
  std::string to_string() const;

  friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator-(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend bool operator==(const TriPoly& a, const TriPoly& b);
  friend bool operator!=(const TriPoly& a, const TriPoly& b) {
    return !(a == b);
  }

 private:
  void insert_add(u64 key, const FieldElement& v);
  FieldHandle f_;
  TermMap t_;
};

}  // namespace howec
