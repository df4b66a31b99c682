#include "howec/unipoly.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace howec {
namespace {

// The heavy loops below work on raw digit vectors (k digits per coefficient,
// constant term first) so no per-coefficient FieldElement is materialized.
using DVec = std::vector<Digit>;

bool slot_zero(const Digit* s, unsigned k) {
  for (unsigned j = 0; j < k; ++j)
    if (s[j]) return false;
  return true;
}

void dnormalize(DVec& v, unsigned k) {
  std::size_t n = v.size() / k;
  while (n > 0 && slot_zero(&v[(n - 1) * k], k)) --n;
  v.resize(n * k);
}

// Product of a and b truncated to cutoff+1 coefficients. One pass per output
// slot with 2k-1 u64 accumulators; reduced in blocks so the accumulators
// cannot overflow no matter the operand length.
DVec dmul_trunc(const Field& F, const DVec& a, const DVec& b, u64 max_terms) {
  if (a.empty() || b.empty()) return {};
  const unsigned k = F.degree();
  const std::size_t la = a.size() / k, lb = b.size() / k;
  const std::size_t out_terms =
      std::min<u64>(static_cast<u64>(la + lb - 1), max_terms);
  DVec out(out_terms * k);
  u64 acc[47];
  Digit tmp[24];
  const u64 p = F.characteristic();
  // Each (i, j) pair adds at most k products < p^2 to one accumulator slot;
  // cap the pair count per reduction so slots stay below 2^62.
  const u64 block = std::max<u64>(1, (u64(1) << 62) / (p * p * k) / k);
  for (std::size_t s = 0; s < out_terms; ++s) {
    std::memset(acc, 0, sizeof(u64) * (2 * k - 1));
    std::size_t i0 = s >= lb ? s - (lb - 1) : 0;
    std::size_t i1 = std::min(la - 1, s);
    u64 cnt = 0;
    for (std::size_t i = i0; i <= i1; ++i) {
      const Digit* pa = &a[i * k];
      const Digit* pb = &b[(s - i) * k];
      for (unsigned u = 0; u < k; ++u) {
        if (!pa[u]) continue;
        u64 au = pa[u];
        for (unsigned v = 0; v < k; ++v) acc[u + v] += au * pb[v];
      }
      if (++cnt >= block) {
        F.reduce_acc(acc, tmp);
        for (unsigned j = 0; j < k; ++j) acc[j] = tmp[j];
        for (unsigned j = k; j < 2 * k - 1; ++j) acc[j] = 0;
        cnt = 0;
      }
    }
    F.reduce_acc(acc, &out[s * k]);
  }
  dnormalize(out, k);
  return out;
}

DVec dadd(const Field& F, const DVec& a, const DVec& b, bool sub) {
  const unsigned k = F.degree();
  DVec out(std::max(a.size(), b.size()), 0);
  Digit za[24] = {0};
  for (std::size_t s = 0; s * k < out.size(); ++s) {
    const Digit* pa = s * k < a.size() ? &a[s * k] : za;
    const Digit* pb = s * k < b.size() ? &b[s * k] : za;
    if (sub)
      F.sub_digits(pa, pb, &out[s * k]);
    else
      F.add_digits(pa, pb, &out[s * k]);
  }
  dnormalize(out, k);
  return out;
}

// Scale by one coefficient (s nonzero). In-place friendly.
void dscale(const Field& F, DVec& a, const Digit* s) {
  const unsigned k = F.degree();
  for (std::size_t i = 0; i * k < a.size(); ++i)
    F.mul_digits(&a[i * k], s, &a[i * k]);
}

struct DDivRem {
  DVec q, r;
};

// Standard long division; divisor nonzero, any degrees.
DDivRem ddivrem(const Field& F, const DVec& a, const DVec& b) {
  const unsigned k = F.degree();
  const std::size_t la = a.size() / k, lb = b.size() / k;
  DDivRem res;
  if (la < lb) {
    res.r = a;
    return res;
  }
  Digit il[24], qc[24], t[24];
  F.inv_digits(&b[(lb - 1) * k], il);
  res.r = a;
  res.q.assign((la - lb + 1) * k, 0);
  for (std::size_t s = la - lb + 1; s-- > 0;) {
    Digit* top = &res.r[(s + lb - 1) * k];
    if (slot_zero(top, k)) continue;
    F.mul_digits(top, il, qc);
    std::copy(qc, qc + k, &res.q[s * k]);
    for (std::size_t i = 0; i < lb; ++i) {
      F.mul_digits(qc, &b[i * k], t);
      F.sub_digits(&res.r[(s + i) * k], t, &res.r[(s + i) * k]);
    }
  }
  dnormalize(res.q, k);
  dnormalize(res.r, k);
  return res;
}

void dmonic(const Field& F, DVec& a) {
  const unsigned k = F.degree();
  if (a.empty()) return;
  Digit il[24];
  F.inv_digits(&a[a.size() - k], il);
  dscale(F, a, il);
}

u64 digits_hash(const DVec& v) {
  u64 h = 1469598103934665603ull;
  for (Digit d : v) {
    h ^= d;
    h *= 1099511628211ull;
  }
  return h;
}

const DVec& raw_of(const UniPoly& f) { return f.raw(); }

void require_poly(const UniPoly& f, const char* where) {
  if (f.null()) throw PolyError(std::string(where) + ": null polynomial");
}

}  // namespace

UniPoly UniPoly::one(const FieldHandle& f) {
  UniPoly r(f);
  r.set_coeff(0, f->one());
  return r;
}

UniPoly UniPoly::x(const FieldHandle& f) {
  UniPoly r(f);
  r.set_coeff(1, f->one());
  return r;
}

UniPoly UniPoly::monomial(const FieldElement& c, unsigned deg) {
  if (c.null()) throw PolyError("monomial: null coefficient");
  UniPoly r(c.field());
  r.set_coeff(deg, c);
  return r;
}

UniPoly UniPoly::from_coeffs(const FieldHandle& f,
                             const std::vector<FieldElement>& coeffs) {
  UniPoly r(f);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    r.set_coeff(static_cast<unsigned>(i), coeffs[i]);
  return r;
}

UniPoly UniPoly::from_int_coeffs(const FieldHandle& f,
                                 const std::vector<std::int64_t>& coeffs) {
  UniPoly r(f);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    r.set_coeff(static_cast<unsigned>(i), f->from_int(coeffs[i]));
  return r;
}

int UniPoly::degree() const {
  if (!f_) return -1;
  return static_cast<int>(c_.size() / f_->degree()) - 1;
}

FieldElement UniPoly::coeff(unsigned i) const {
  require_poly(*this, "coeff");
  const unsigned k = f_->degree();
  if (static_cast<std::size_t>(i) * k >= c_.size()) return f_->zero();
  return f_->from_digits(
      std::vector<Digit>(c_.begin() + static_cast<std::size_t>(i) * k,
                         c_.begin() + static_cast<std::size_t>(i + 1) * k));
}

FieldElement UniPoly::leading() const {
  require_poly(*this, "leading");
  if (c_.empty()) return f_->zero();
  return coeff(static_cast<unsigned>(degree()));
}

void UniPoly::set_coeff(unsigned i, const FieldElement& v) {
  require_poly(*this, "set_coeff");
  if (v.null()) throw PolyError("set_coeff: null coefficient");
  require_same_field(*f_, *v.field(), "set_coeff");
  const unsigned k = f_->degree();
  const std::size_t need = (static_cast<std::size_t>(i) + 1) * k;
  if (c_.size() < need) c_.resize(need, 0);
  for (unsigned j = 0; j < k; ++j) c_[static_cast<std::size_t>(i) * k + j] = v.digit(j);
  normalize();
}

void UniPoly::normalize() { dnormalize(c_, f_->degree()); }

UniPoly UniPoly::operator-() const {
  require_poly(*this, "negate");
  UniPoly r(f_);
  r.c_.resize(c_.size());
  const unsigned k = f_->degree();
  for (std::size_t s = 0; s * k < c_.size(); ++s)
    f_->neg_digits(&c_[s * k], &r.c_[s * k]);
  return r;
}

UniPoly UniPoly::scale(const FieldElement& s) const {
  require_poly(*this, "scale");
  require_same_field(*f_, *s.field(), "scale");
  if (s.is_zero()) return UniPoly(f_);
  UniPoly r = *this;
  dscale(*f_, r.c_, s.digits().data());
  r.normalize();
  return r;
}

UniPoly UniPoly::shift_up(unsigned n) const {
  require_poly(*this, "shift_up");
  if (c_.empty() || n == 0) return n == 0 ? *this : UniPoly(f_);
  UniPoly r(f_);
  r.c_.assign(static_cast<std::size_t>(n) * f_->degree(), 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

UniPoly UniPoly::truncated(unsigned cutoff) const {
  require_poly(*this, "truncated");
  UniPoly r = *this;
  const std::size_t keep = (static_cast<std::size_t>(cutoff) + 1) * f_->degree();
  if (r.c_.size() > keep) r.c_.resize(keep);
  r.normalize();
  return r;
}

UniPoly UniPoly::mul_truncated(const UniPoly& o, unsigned cutoff) const {
  require_poly(*this, "mul");
  require_poly(o, "mul");
  require_same_field(*f_, *o.f_, "mul");
  UniPoly r(f_);
  r.c_ = dmul_trunc(*f_, c_, o.c_, static_cast<u64>(cutoff) + 1);
  return r;
}

UniPoly UniPoly::pow_truncated(u64 e, unsigned cutoff) const {
  require_poly(*this, "pow");
  UniPoly r = one(f_).truncated(cutoff);
  UniPoly b = truncated(cutoff);
  while (e) {
    if (e & 1) r = r.mul_truncated(b, cutoff);
    e >>= 1;
    if (e) b = b.mul_truncated(b, cutoff);
  }
  return r;
}

UniPoly UniPoly::pow(u64 e) const {
  return pow_truncated(e, std::numeric_limits<unsigned>::max() - 1);
}

UniPoly UniPoly::derivative() const {
  require_poly(*this, "derivative");
  const unsigned k = f_->degree();
  const u64 p = f_->characteristic();
  UniPoly r(f_);
  if (c_.size() <= k) return r;
  r.c_.assign(c_.size() - k, 0);
  for (std::size_t s = 1; s * k < c_.size(); ++s) {
    u64 m = s % p;
    if (!m) continue;
    for (unsigned j = 0; j < k; ++j)
      r.c_[(s - 1) * k + j] = static_cast<Digit>(c_[s * k + j] * m % p);
  }
  r.normalize();
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& divisor) const {
  require_poly(*this, "divrem");
  require_poly(divisor, "divrem");
  require_same_field(*f_, *divisor.f_, "divrem");
  if (divisor.is_zero()) throw PolyError("divrem: division by zero polynomial");
  DDivRem d = ddivrem(*f_, c_, divisor.c_);
  UniPoly q(f_), r(f_);
  q.c_ = std::move(d.q);
  r.c_ = std::move(d.r);
  return {std::move(q), std::move(r)};
}

UniPoly UniPoly::monic() const {
  require_poly(*this, "monic");
  UniPoly r = *this;
  dmonic(*f_, r.c_);
  return r;
}

FieldElement UniPoly::eval(const FieldElement& at) const {
  require_poly(*this, "eval");
  require_same_field(*f_, *at.field(), "eval");
  const unsigned k = f_->degree();
  std::vector<Digit> acc(k, 0), t(k);
  for (std::size_t s = c_.size() / k; s-- > 0;) {
    f_->mul_digits(acc.data(), at.digits().data(), t.data());
    f_->add_digits(t.data(), &c_[s * k], acc.data());
  }
  return f_->from_digits(std::move(acc));
}

UniPoly UniPoly::compose_linear(const FieldElement& u,
                                const FieldElement& v) const {
  require_poly(*this, "compose_linear");
  require_same_field(*f_, *u.field(), "compose_linear");
  require_same_field(*f_, *v.field(), "compose_linear");
  const unsigned k = f_->degree();
  DVec acc;  // running Horner value, low-first digit slots
  DVec next;
  Digit t1[24], t2[24];
  for (std::size_t s = c_.size() / k; s-- > 0;) {
    // acc <- acc*(u x + v) + c_s
    std::size_t terms = acc.size() / k;
    next.assign((terms + 1) * k, 0);
    for (std::size_t i = 0; i < terms; ++i) {
      f_->mul_digits(&acc[i * k], u.digits().data(), t1);
      f_->add_digits(&next[(i + 1) * k], t1, &next[(i + 1) * k]);
      f_->mul_digits(&acc[i * k], v.digits().data(), t2);
      f_->add_digits(&next[i * k], t2, &next[i * k]);
    }
    f_->add_digits(&next[0], &c_[s * k], &next[0]);
    acc.swap(next);
    dnormalize(acc, k);
  }
  UniPoly r(f_);
  r.c_ = std::move(acc);
  return r;
}

UniPoly UniPoly::coeff_frobenius() const {
  require_poly(*this, "coeff_frobenius");
  UniPoly r(f_);
  const unsigned k = f_->degree();
  if (k == 1) return *this;
  for (std::size_t s = 0; s * k < c_.size(); ++s)
    r.set_coeff(static_cast<unsigned>(s),
                coeff(static_cast<unsigned>(s)).frobenius());
  return r;
}

std::string UniPoly::to_string(const std::string& var) const {
  require_poly(*this, "to_string");
  if (c_.empty()) return "0";
  std::ostringstream os;
  const unsigned k = f_->degree();
  bool first = true;
  for (std::size_t s = 0; s * k < c_.size(); ++s) {
    FieldElement ci = coeff(static_cast<unsigned>(s));
    if (ci.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (s == 0) {
      os << ci.to_string();
      continue;
    }
    if (!ci.is_one()) os << ci.to_string() << "*";
    os << var;
    if (s > 1) os << "^" << s;
  }
  return os.str();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  require_poly(a, "add");
  require_poly(b, "add");
  require_same_field(*a.f_, *b.f_, "add");
  UniPoly r(a.f_);
  r.c_ = dadd(*a.f_, a.c_, b.c_, false);
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  require_poly(a, "sub");
  require_poly(b, "sub");
  require_same_field(*a.f_, *b.f_, "sub");
  UniPoly r(a.f_);
  r.c_ = dadd(*a.f_, a.c_, b.c_, true);
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  return a.mul_truncated(b, std::numeric_limits<unsigned>::max() - 1);
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.null() || b.null()) return a.null() == b.null();
  return a.f_->same_as(*b.f_) && a.c_ == b.c_;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  require_poly(a, "gcd");
  require_poly(b, "gcd");
  require_same_field(*a.field(), *b.field(), "gcd");
  const Field& F = *a.field();
  DVec x = raw_of(a), y = raw_of(b);
  while (!y.empty()) {
    DVec r = ddivrem(F, x, y).r;
    x.swap(y);
    y.swap(r);
  }
  dmonic(F, x);
  UniPoly g(a.field());
  for (std::size_t s = 0; s * F.degree() < x.size(); ++s)
    g.set_coeff(static_cast<unsigned>(s),
                F.from_digits(std::vector<Digit>(
                    x.begin() + s * F.degree(),
                    x.begin() + (s + 1) * F.degree())));
  return g;
}

FieldElement resultant(const UniPoly& f, const UniPoly& g) {
  require_poly(f, "resultant");
  require_poly(g, "resultant");
  require_same_field(*f.field(), *g.field(), "resultant");
  const Field& F = *f.field();
  if (f.is_zero() || g.is_zero()) return F.zero();
  DVec A = raw_of(f), B = raw_of(g);
  const unsigned k = F.degree();
  bool negate = false;
  FieldElement res = F.one();
  while (true) {
    std::size_t m = A.size() / k - 1, n = B.size() / k - 1;
    FieldElement lb = F.from_digits(
        std::vector<Digit>(B.end() - k, B.end()));
    if (n == 0) {
      res = res * lb.pow(m);
      break;
    }
    DVec r = ddivrem(F, A, B).r;
    if ((m & 1) && (n & 1)) negate = !negate;
    if (r.empty()) return F.zero();
    std::size_t rho = r.size() / k - 1;
    res = res * lb.pow(m - rho);
    A.swap(B);
    B.swap(r);
  }
  return negate ? -res : res;
}

UniPoly powmod(const UniPoly& base, u128 e, const UniPoly& m) {
  require_poly(base, "powmod");
  require_poly(m, "powmod");
  require_same_field(*base.field(), *m.field(), "powmod");
  if (m.degree() < 1) throw PolyError("powmod: modulus must have degree >= 1");
  const Field& F = *m.field();
  const u64 full = std::numeric_limits<unsigned>::max() - 1;
  DVec b = ddivrem(F, raw_of(base), raw_of(m)).r;
  DVec r(F.degree(), 0);
  r[0] = 1;  // constant 1
  while (e) {
    if (e & 1) r = ddivrem(F, dmul_trunc(F, r, b, full), raw_of(m)).r;
    e >>= 1;
    if (e) b = ddivrem(F, dmul_trunc(F, b, b, full), raw_of(m)).r;
  }
  UniPoly out(m.field());
  for (std::size_t s = 0; s * F.degree() < r.size(); ++s)
    out.set_coeff(static_cast<unsigned>(s),
                  F.from_digits(std::vector<Digit>(
                      r.begin() + s * F.degree(),
                      r.begin() + (s + 1) * F.degree())));
  return out;
}

UniPoly frobenius_x_power(const UniPoly& m, unsigned times) {
  require_poly(m, "frobenius_x_power");
  if (m.degree() < 1)
    throw PolyError("frobenius_x_power: modulus must have degree >= 1");
  UniPoly r = UniPoly::x(m.field());
  r = r.divrem(m).second;
  for (unsigned i = 0; i < times; ++i)
    r = powmod(r, m.field()->characteristic(), m);
  return r;
}

std::vector<FieldElement> UniPoly::roots_in_field(u64 seed) const {
  require_poly(*this, "roots_in_field");
  if (is_zero()) throw PolyError("roots_in_field: zero polynomial");
  const FieldHandle& h = f_;
  const Field& F = *h;
  std::vector<FieldElement> roots;
  if (degree() == 0) return roots;
  if (degree() == 1) {
    roots.push_back(-(coeff(0) / coeff(1)));
    return roots;
  }
  UniPoly f = monic();
  // gcd with x^q - x keeps exactly the distinct roots lying in the field
  // itself (that binomial is squarefree with every field element as a root).
  UniPoly xq = frobenius_x_power(f, F.degree());
  UniPoly g = gcd(f, xq - UniPoly::x(h));
  if (g.degree() <= 0) return roots;
  u128 q = F.size();
  u128 half = (q - 1) / 2;
  std::mt19937_64 rng(mix_seed(seed, digits_hash(c_),
                               (static_cast<u64>(F.characteristic()) << 8) |
                                   F.degree()));
  // Equal-degree splitting: every factor of g is linear and distinct, so
  // gcd(g, (x+a)^((q-1)/2) - 1) splits g by quadratic-residue class.
  std::vector<UniPoly> work{g};
  while (!work.empty()) {
    UniPoly cur = std::move(work.back());
    work.pop_back();
    if (cur.degree() == 1) {
      roots.push_back(-cur.coeff(0));
      continue;
    }
    bool split = false;
    for (int tries = 0; tries < 256 && !split; ++tries) {
      UniPoly shift = UniPoly::x(h) + UniPoly::monomial(F.random_element(rng), 0);
      UniPoly t = powmod(shift, half, cur) - UniPoly::one(h);
      UniPoly d = gcd(cur, t);
      if (d.degree() > 0 && d.degree() < cur.degree()) {
        work.push_back(cur.divrem(d).first);
        work.push_back(std::move(d));
        split = true;
      }
    }
    if (!split) throw PolyError("roots_in_field: equal-degree split stalled");
  }
  std::sort(roots.begin(), roots.end(), FieldElement::lex_less);
  return roots;
}

SubfieldEmbedding::SubfieldEmbedding(FieldHandle src, FieldHandle dst)
    : src_(std::move(src)), dst_(std::move(dst)) {
  if (!src_ || !dst_) throw FieldError("embedding: null field handle");
  if (src_->characteristic() != dst_->characteristic())
    throw HandleMismatchError("embedding: characteristic mismatch");
  if (dst_->degree() % src_->degree() != 0)
    throw FieldError("embedding: source degree does not divide target degree");
  if (src_->same_as(*dst_)) {
    identity_ = true;
    return;
  }
  const unsigned j = src_->degree();
  if (j == 1) {
    gen_powers_ = {dst_->one()};
    return;
  }
  // Image of the source generator: the digit-lex smallest root of the source
  // modulus inside the target field. Deterministic for fixed handles.
  UniPoly m(dst_);
  const std::vector<Digit>& md = src_->modulus();
  for (std::size_t i = 0; i < md.size(); ++i)
    m.set_coeff(static_cast<unsigned>(i), dst_->from_int(md[i]));
  u64 seed = mix_seed(0x656d6265646469ull, src_->characteristic(),
                      (static_cast<u64>(j) << 32) | dst_->degree(),
                      digits_hash(md));
  std::vector<FieldElement> rts = m.roots_in_field(seed);
  if (rts.size() != j)
    throw FieldError("embedding: source modulus does not split in target");
  gen_powers_.reserve(j);
  gen_powers_.push_back(dst_->one());
  for (unsigned i = 1; i < j; ++i)
    gen_powers_.push_back(gen_powers_.back() * rts.front());
}

FieldElement SubfieldEmbedding::apply(const FieldElement& a) const {
  if (a.null()) throw FieldError("embedding: null element");
  require_same_field(*src_, *a.field(), "embedding apply");
  if (identity_) return a;
  FieldElement acc = dst_->zero();
  for (unsigned i = 0; i < src_->degree(); ++i) {
    Digit d = a.digit(i);
    if (d) acc = acc + gen_powers_[i] * dst_->from_int(d);
  }
  return acc;
}

UniPoly SubfieldEmbedding::apply(const UniPoly& f) const {
  require_poly(f, "embedding apply");
  require_same_field(*src_, *f.field(), "embedding apply");
  if (identity_) return f;
  UniPoly out(dst_);
  for (int i = 0; i <= f.degree(); ++i)
    out.set_coeff(static_cast<unsigned>(i),
                  apply(f.coeff(static_cast<unsigned>(i))));
  return out;
}

bool SubfieldEmbedding::try_decompose(const FieldElement& a,
                                      FieldElement& out) const {
  if (a.null()) throw FieldError("embedding: null element");
  require_same_field(*dst_, *a.field(), "embedding decompose");
  if (identity_) {
    out = a;
    return true;
  }
  const unsigned j = src_->degree(), kd = dst_->degree();
  const u64 p = src_->characteristic();
  // Solve sum_i x_i * gen_powers_[i] = a over F_p by Gaussian elimination on
  // the (kd x j) digit matrix; the powers are independent, so a consistent
  // system has a unique solution.
  std::vector<u64> M(static_cast<std::size_t>(kd) * (j + 1));
  for (unsigned r = 0; r < kd; ++r) {
    for (unsigned c = 0; c < j; ++c) M[r * (j + 1) + c] = gen_powers_[c].digit(r);
    M[r * (j + 1) + j] = a.digit(r);
  }
  std::vector<int> pivot_row(j, -1);
  unsigned row = 0;
  for (unsigned col = 0; col < j && row < kd; ++col) {
    unsigned pr = row;
    while (pr < kd && M[pr * (j + 1) + col] == 0) ++pr;
    if (pr == kd) continue;
    for (unsigned c = 0; c <= j; ++c)
      std::swap(M[row * (j + 1) + c], M[pr * (j + 1) + c]);
    u64 iv = inv_mod_p(static_cast<Digit>(M[row * (j + 1) + col]),
                       static_cast<Digit>(p));
    for (unsigned c = col; c <= j; ++c)
      M[row * (j + 1) + c] = M[row * (j + 1) + c] * iv % p;
    for (unsigned r2 = 0; r2 < kd; ++r2) {
      if (r2 == row) continue;
      u64 f = M[r2 * (j + 1) + col];
      if (!f) continue;
      for (unsigned c = col; c <= j; ++c)
        M[r2 * (j + 1) + c] =
            (M[r2 * (j + 1) + c] + (p - f % p) * M[row * (j + 1) + c]) % p;
    }
    pivot_row[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<Digit> x(j, 0);
  for (unsigned c = 0; c < j; ++c) {
    if (pivot_row[c] < 0) return false;  // powers independent; cannot happen
    x[c] = static_cast<Digit>(M[pivot_row[c] * (j + 1) + j]);
  }
  for (unsigned r = 0; r < kd; ++r) {
    bool zero_row = true;
    for (unsigned c = 0; c < j; ++c)
      if (M[r * (j + 1) + c]) zero_row = false;
    if (zero_row && M[r * (j + 1) + j]) return false;  // not in the subfield
  }
  out = src_->from_digits(std::move(x));
  return true;
}

std::vector<FieldElement> roots_in_extension(const UniPoly& f, unsigned k,
                                             u64 seed) {
  require_poly(f, "roots_in_extension");
  FieldHandle target =
      k == f.field()->degree() && f.field()->degree() == 1
          ? f.field()
          : Field::extension(f.field()->characteristic(), k, seed);
  SubfieldEmbedding emb(f.field(), target);
  return emb.apply(f).roots_in_field(mix_seed(seed, 0x726f6f7473ull, k));
}

UniPoly interpolate(const std::vector<FieldElement>& nodes,
                    const std::vector<FieldElement>& values) {
  if (nodes.empty() || nodes.size() != values.size())
    throw PolyError("interpolate: need equally many nodes and values");
  const FieldHandle& h = nodes.front().field();
  if (!h) throw PolyError("interpolate: null field");
  const Field& F = *h;
  const unsigned k = F.degree();
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (nodes[i].null() || values[i].null())
      throw PolyError("interpolate: null entry");
    require_same_field(F, *nodes[i].field(), "interpolate");
    require_same_field(F, *values[i].field(), "interpolate");
  }
  {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return FieldElement::lex_less(nodes[a], nodes[b]);
    });
    for (std::size_t i = 1; i < n; ++i)
      if (nodes[idx[i - 1]] == nodes[idx[i]])
        throw PolyError("interpolate: repeated node");
  }
  // Master polynomial N = prod (x - a_i), built once; then per node a
  // synthetic division gives Q_i = N/(x - a_i) and the weight y_i / Q_i(a_i).
  DVec N((n + 1) * k, 0);
  N[0] = 1;
  Digit t[24];
  for (std::size_t i = 0; i < n; ++i) {
    const Digit* ai = nodes[i].digits().data();
    // In-place multiply by (x - a_i), top slot first so each step still sees
    // the untouched lower neighbour: N[s] <- N[s-1] - a*N[s].
    for (std::size_t s = i + 1; s > 0; --s) {
      F.mul_digits(&N[s * k], ai, t);
      F.sub_digits(&N[(s - 1) * k], t, &N[s * k]);
    }
    F.mul_digits(&N[0], ai, t);
    F.neg_digits(t, &N[0]);
  }
  DVec Q(n * k), R(n * k, 0);
  std::vector<Digit> w(k), denom(k), iv(k);
  for (std::size_t i = 0; i < n; ++i) {
    const Digit* ai = nodes[i].digits().data();
    // synthetic division: q_{n-1} = N_n; q_{s} = N_{s+1} + a*q_{s+1}
    std::copy(&N[n * k], &N[n * k] + k, &Q[(n - 1) * k]);
    for (std::size_t s = n - 1; s-- > 0;) {
      F.mul_digits(&Q[(s + 1) * k], ai, t);
      F.add_digits(&N[(s + 1) * k], t, &Q[s * k]);
    }
    // denom = Q(a_i) by Horner
    std::fill(denom.begin(), denom.end(), 0);
    for (std::size_t s = n; s-- > 0;) {
      F.mul_digits(denom.data(), ai, t);
      F.add_digits(t, &Q[s * k], denom.data());
    }
    if (slot_zero(denom.data(), k))
      throw PolyError("interpolate: repeated node");
    F.inv_digits(denom.data(), iv.data());
    F.mul_digits(values[i].digits().data(), iv.data(), w.data());
    if (slot_zero(w.data(), k)) continue;
    for (std::size_t s = 0; s < n; ++s) {
      F.mul_digits(&Q[s * k], w.data(), t);
      F.add_digits(&R[s * k], t, &R[s * k]);
    }
  }
  dnormalize(R, k);
  UniPoly out(h);
  for (std::size_t s = 0; s * k < R.size(); ++s)
    out.set_coeff(static_cast<unsigned>(s),
                  F.from_digits(std::vector<Digit>(R.begin() + s * k,
                                                   R.begin() + (s + 1) * k)));
  return out;
}

}  // namespace howec
