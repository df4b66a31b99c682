#include "howec/field.hpp"

#include <algorithm>
#include <sstream>

namespace howec {
namespace {

// --- minimal F_p[x] arithmetic on raw coefficient vectors -------------------
// Used only for modulus construction/validation and element inversion, so the
// public polynomial layer can depend on Field without a cycle. Vectors are
// lowest-degree-first and kept free of trailing zeros.

using PVec = std::vector<Digit>;

void pnorm(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, Digit p) {
  if (a.empty() || b.empty()) return {};
  PVec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<Digit>(
          (out[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
  }
  pnorm(out);
  return out;
}

// a mod m, m monic.
PVec pmod(PVec a, const PVec& m, Digit p) {
  pnorm(a);
  while (a.size() >= m.size()) {
    Digit lead = a.back();
    std::size_t shift = a.size() - m.size();
    if (lead != 0) {
      for (std::size_t j = 0; j + 1 < m.size(); ++j) {
        u64 sub = static_cast<u64>(lead) * m[j] % p;
        Digit& slot = a[shift + j];
        slot = static_cast<Digit>((slot + p - sub) % p);
      }
    }
    a.pop_back();
    pnorm(a);
  }
  return a;
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& m, Digit p) {
  return pmod(pmul(a, b, p), m, p);
}

PVec ppowmod(PVec base, u64 e, const PVec& m, Digit p) {
  PVec r{1};
  base = pmod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = pmulmod(r, base, m, p);
    base = pmulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

PVec pgcd(PVec a, PVec b, Digit p) {
  pnorm(a);
  pnorm(b);
  while (!b.empty()) {
    // reduce a mod b after making b monic
    Digit li = inv_mod_p(b.back(), p);
    PVec bm = b;
    for (auto& c : bm) c = static_cast<Digit>(static_cast<u64>(c) * li % p);
    a = pmod(std::move(a), bm, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    Digit li = inv_mod_p(a.back(), p);
    for (auto& c : a) c = static_cast<Digit>(static_cast<u64>(c) * li % p);
  }
  return a;
}

PVec psub(PVec a, const PVec& b, Digit p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = static_cast<Digit>((a[i] + p - b[i]) % p);
  pnorm(a);
  return a;
}

// (quotient, remainder) with b != 0 (not necessarily monic).
std::pair<PVec, PVec> pdivrem(PVec a, const PVec& b, Digit p) {
  pnorm(a);
  if (a.size() < b.size()) return {PVec{}, std::move(a)};
  Digit li = inv_mod_p(b.back(), p);
  PVec q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    // leading coefficient is nonzero after pnorm, so this step always cancels it
    Digit fac = static_cast<Digit>(static_cast<u64>(a.back()) * li % p);
    std::size_t shift = a.size() - b.size();
    q[shift] = fac;
    for (std::size_t j = 0; j < b.size(); ++j) {
      u64 sub = static_cast<u64>(fac) * b[j] % p;
      a[shift + j] = static_cast<Digit>((a[shift + j] + p - sub) % p);
    }
    pnorm(a);
  }
  pnorm(q);
  return {std::move(q), std::move(a)};
}

// x^(p^d) mod m by iterated Frobenius.
PVec frob_power_x(const PVec& m, Digit p, unsigned d) {
  PVec r{0, 1};
  for (unsigned i = 0; i < d; ++i) r = ppowmod(std::move(r), p, m, p);
  return r;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q * q <= n; ++q)
    while (n % q == 0) {
      if (out.empty() || out.back() != q) out.push_back(q);
      n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Monic m of degree k >= 2: irreducible over F_p iff x^(p^k) == x (mod m) and
// gcd(x^(p^(k/q)) - x, m) = 1 for every prime q | k.
bool modulus_irreducible(const PVec& m, Digit p) {
  unsigned k = static_cast<unsigned>(m.size()) - 1;
  PVec x{0, 1};
  PVec r = frob_power_x(m, p, k);
  if (psub(r, x, p) != PVec{}) return false;
  for (unsigned q : prime_factors(k)) {
    PVec s = frob_power_x(m, p, k / q);
    if (pgcd(psub(s, x, p), m, p).size() != 1) return false;
  }
  return true;
}

constexpr Digit kMaxP = 32749;  // largest prime below 2^15; keeps products lazy-safe

void check_p(Digit p) {
  if (p < 3 || p > kMaxP || !is_prime_u32(p))
    throw FieldError("characteristic must be an odd prime in [3, 32749], got " +
                     std::to_string(p));
}

}  // namespace

FieldHandle Field::prime(Digit p) {
  check_p(p);
  return FieldHandle(new Field(p, 1, {}));
}

FieldHandle Field::extension(Digit p, unsigned k, u64 seed) {
  check_p(p);
  if (k == 0) throw FieldError("extension degree must be >= 1");
  if (k == 1) return prime(p);
  if (k > 24) throw FieldError("extension degree too large: " + std::to_string(k));
  std::mt19937_64 rng(mix_seed(seed, p, k, 0x66697865u));
  std::uniform_int_distribution<Digit> coeff(0, p - 1);
  for (int tries = 0; tries < 100000; ++tries) {
    PVec m(k + 1, 0);
    m[k] = 1;
    for (unsigned i = 0; i < k; ++i) m[i] = coeff(rng);
    if (m[0] == 0) continue;  // x | m otherwise
    if (modulus_irreducible(m, p)) return FieldHandle(new Field(p, k, std::move(m)));
  }
  throw FieldError("failed to find an irreducible modulus (p=" +
                   std::to_string(p) + ", k=" + std::to_string(k) + ")");
}

FieldHandle Field::with_modulus(Digit p, const std::vector<Digit>& modulus) {
  check_p(p);
  if (modulus.empty()) return prime(p);
  if (modulus.size() < 2)
    throw FieldError("modulus must have degree >= 1");
  for (Digit c : modulus)
    if (c >= p) throw FieldError("modulus digit out of range");
  if (modulus.back() != 1) throw FieldError("modulus must be monic");
  unsigned k = static_cast<unsigned>(modulus.size()) - 1;
  if (k == 1) {
    // linear modulus: still the prime field, but keep it rejected to avoid
    // two distinct encodings of F_p
    throw FieldError("degree-1 modulus not allowed; use the prime field");
  }
  if (k > 24) throw FieldError("extension degree too large");
  if (!modulus_irreducible(modulus, p))
    throw FieldError("modulus is not irreducible over F_" + std::to_string(p));
  return FieldHandle(new Field(p, k, modulus));
}

u128 Field::size() const {
  u128 s = 1;
  for (unsigned i = 0; i < k_; ++i) {
    if (s > (u128(1) << 112)) throw FieldError("field too large for size()");
    s *= p_;
  }
  return s;
}

bool Field::size_fits_u64() const {
  u128 s = size();
  return s <= u128(~u64(0));
}

FieldElement Field::zero() const {
  return FieldElement(handle(), std::vector<Digit>(k_, 0));
}

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  std::vector<Digit> d(k_, 0);
  d[0] = static_cast<Digit>(r);
  return FieldElement(handle(), std::move(d));
}

FieldElement Field::from_digits(std::vector<Digit> digits) const {
  if (digits.size() > k_)
    throw FieldError("too many digits for this field");
  for (Digit c : digits)
    if (c >= p_) throw FieldError("element digit out of range");
  digits.resize(k_, 0);
  return FieldElement(handle(), std::move(digits));
}

FieldElement Field::element_at(u64 index) const {
  std::vector<Digit> d(k_, 0);
  for (unsigned i = 0; i < k_ && index; ++i) {
    d[i] = static_cast<Digit>(index % p_);
    index /= p_;
  }
  if (index) throw FieldError("element index out of range");
  return FieldElement(handle(), std::move(d));
}

FieldElement Field::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<Digit> coeff(0, p_ - 1);
  std::vector<Digit> d(k_);
  for (auto& c : d) c = coeff(rng);
  return FieldElement(handle(), std::move(d));
}

void Field::add_digits(const Digit* a, const Digit* b, Digit* out) const {
  for (unsigned i = 0; i < k_; ++i) {
    Digit s = a[i] + b[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
}

void Field::sub_digits(const Digit* a, const Digit* b, Digit* out) const {
  for (unsigned i = 0; i < k_; ++i) {
    Digit s = a[i] + p_ - b[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
}

void Field::neg_digits(const Digit* a, Digit* out) const {
  for (unsigned i = 0; i < k_; ++i) out[i] = a[i] ? p_ - a[i] : 0;
}

void Field::reduce_acc(u64* acc, Digit* out) const {
  if (k_ == 1) {
    out[0] = static_cast<Digit>(acc[0] % p_);
    return;
  }
  for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
    Digit t = static_cast<Digit>(acc[i] % p_);
    if (t) {
      u64 f = p_ - t;
      for (unsigned j = 0; j < k_; ++j)
        acc[i - k_ + j] += f * mod_[j];
    }
    if (i == k_) break;
  }
  for (unsigned j = 0; j < k_; ++j) out[j] = static_cast<Digit>(acc[j] % p_);
}

void Field::mul_digits(const Digit* a, const Digit* b, Digit* out) const {
  if (k_ == 1) {
    out[0] = static_cast<Digit>(static_cast<u64>(a[0]) * b[0] % p_);
    return;
  }
  u64 acc[47] = {0};  // 2k-1 <= 47 for k <= 24
  for (unsigned i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    u64 ai = a[i];
    for (unsigned j = 0; j < k_; ++j) acc[i + j] += ai * b[j];
  }
  reduce_acc(acc, out);
}

void Field::inv_digits(const Digit* a, Digit* out) const {
  if (k_ == 1) {
    if (a[0] == 0) throw FieldError("division by zero");
    out[0] = inv_mod_p(a[0], p_);
    return;
  }
  PVec r0 = mod_, r1(a, a + k_);
  pnorm(r1);
  if (r1.empty()) throw FieldError("division by zero");
  // extended Euclid: maintain t with t*a == r (mod modulus)
  PVec t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r2] = pdivrem(r0, r1, p_);
    r0 = std::move(r1);
    r1 = std::move(r2);
    PVec t2 = psub(t0, pmul(q, t1, p_), p_);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1)
    throw FieldError("inverse of a zero divisor (modulus not irreducible?)");
  Digit ci = inv_mod_p(r0[0], p_);
  PVec res = pmod(std::move(t0), mod_, p_);
  res.resize(k_, 0);
  for (unsigned i = 0; i < k_; ++i)
    out[i] = static_cast<Digit>(static_cast<u64>(res[i]) * ci % p_);
}

namespace {
void check_operand(const Field& f, const FieldElement& a, const char* where) {
  if (a.null()) throw FieldError("null element");
  require_same_field(f, *a.field(), where);
}
void check_operands(const Field& f, const FieldElement& a,
                    const FieldElement& b, const char* where) {
  check_operand(f, a, where);
  check_operand(f, b, where);
}
}  // namespace

void require_same_field(const Field& a, const Field& b, const char* where) {
  if (!a.same_as(b))
    throw HandleMismatchError(std::string("field handle mismatch in ") + where);
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check_operands(*this, a, b, "add");
  std::vector<Digit> d(k_);
  add_digits(a.digits().data(), b.digits().data(), d.data());
  return FieldElement(handle(), std::move(d));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  check_operands(*this, a, b, "sub");
  std::vector<Digit> d(k_);
  sub_digits(a.digits().data(), b.digits().data(), d.data());
  return FieldElement(handle(), std::move(d));
}

FieldElement Field::neg(const FieldElement& a) const {
  check_operand(*this, a, "neg");
  std::vector<Digit> d(k_);
  neg_digits(a.digits().data(), d.data());
  return FieldElement(handle(), std::move(d));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check_operands(*this, a, b, "mul");
  std::vector<Digit> d(k_);
  mul_digits(a.digits().data(), b.digits().data(), d.data());
  return FieldElement(handle(), std::move(d));
}

FieldElement Field::inv(const FieldElement& a) const {
  check_operand(*this, a, "inv");
  std::vector<Digit> d(k_);
  inv_digits(a.digits().data(), d.data());
  return FieldElement(handle(), std::move(d));
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, inv(b));
}

FieldElement Field::pow(const FieldElement& a, u128 e) const {
  FieldElement r = one(), base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FieldElement Field::frobenius(const FieldElement& a) const {
  if (k_ == 1) return a;
  return pow(a, p_);
}

bool FieldElement::is_zero() const {
  for (Digit c : d_)
    if (c) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (d_.empty() || d_[0] != 1) return false;
  for (std::size_t i = 1; i < d_.size(); ++i)
    if (d_[i]) return false;
  return true;
}

bool FieldElement::in_prime_subfield() const {
  for (std::size_t i = 1; i < d_.size(); ++i)
    if (d_[i]) return false;
  return true;
}

std::string FieldElement::to_string() const {
  if (null()) return "<null>";
  if (d_.size() == 1) return std::to_string(d_[0]);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (i) os << ',';
    os << d_[i];
  }
  os << ']';
  return os.str();
}

bool FieldElement::lex_less(const FieldElement& a, const FieldElement& b) {
  return a.d_ < b.d_;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return a.field()->add(a, b);
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return a.field()->sub(a, b);
}
FieldElement operator-(const FieldElement& a) { return a.field()->neg(a); }
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return a.field()->mul(a, b);
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a.field()->div(a, b);
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.null() || b.null()) return a.null() == b.null();
  require_same_field(*a.field(), *b.field(), "equality");
  return a.digits() == b.digits();
}
bool operator!=(const FieldElement& a, const FieldElement& b) {
  return !(a == b);
}

}  // namespace howec
