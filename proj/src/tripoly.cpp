#include "howec/tripoly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace howec {
namespace {

void require_tri(const TriPoly& f, const char* where) {
  if (f.null()) throw PolyError(std::string(where) + ": null polynomial");
}

void require_var(unsigned var, const char* where) {
  if (var > 2) throw PolyError(std::string(where) + ": variable index out of range");
}

// Dense triangle layout for a homogeneous polynomial of total degree d: slot
// (i, j) holds the coefficient of l^i m^j n^{d-i-j}.
std::size_t tri_size(unsigned d) {
  return (static_cast<std::size_t>(d) + 1) * (d + 2) / 2;
}
std::size_t tri_idx(unsigned d, unsigned i, unsigned j) {
  return static_cast<std::size_t>(i) * (d + 1) -
         static_cast<std::size_t>(i) * (i - 1) / 2 + j;
}

struct FlatTerm {
  unsigned i, j;
  const Digit* c;
};

// u64 accumulator budget for the dense product path (~320 MB); anything
// bigger falls back to the sparse path.
constexpr std::size_t kDenseAccCap = 40'000'000;

}  // namespace

u64 TriPoly::pack(unsigned il, unsigned im, unsigned in) {
  if (il > kExpMax || im > kExpMax || in > kExpMax)
    throw PolyError("exponent exceeds the 20-bit packing bound");
  return (static_cast<u64>(il) << 40) | (static_cast<u64>(im) << 20) | in;
}

void TriPoly::unpack(u64 key, unsigned& il, unsigned& im, unsigned& in) {
  il = static_cast<unsigned>(key >> 40) & kExpMax;
  im = static_cast<unsigned>(key >> 20) & kExpMax;
  in = static_cast<unsigned>(key) & kExpMax;
}

TriPoly TriPoly::constant(const FieldElement& c) {
  if (c.null()) throw PolyError("constant: null coefficient");
  TriPoly r(c.field());
  if (!c.is_zero()) r.t_.emplace(0, c);
  return r;
}

TriPoly TriPoly::variable(const FieldHandle& f, unsigned var) {
  require_var(var, "variable");
  TriPoly r(f);
  r.t_.emplace(pack(var == 0, var == 1, var == 2), f->one());
  return r;
}

TriPoly TriPoly::monomial(const FieldElement& c, unsigned il, unsigned im,
                          unsigned in) {
  if (c.null()) throw PolyError("monomial: null coefficient");
  TriPoly r(c.field());
  if (!c.is_zero()) r.t_.emplace(pack(il, im, in), c);
  return r;
}

FieldElement TriPoly::coeff(unsigned il, unsigned im, unsigned in) const {
  require_tri(*this, "coeff");
  auto it = t_.find(pack(il, im, in));
  return it == t_.end() ? f_->zero() : it->second;
}

void TriPoly::set_coeff(unsigned il, unsigned im, unsigned in,
                        const FieldElement& v) {
  require_tri(*this, "set_coeff");
  if (v.null()) throw PolyError("set_coeff: null coefficient");
  require_same_field(*f_, *v.field(), "set_coeff");
  u64 key = pack(il, im, in);
  if (v.is_zero())
    t_.erase(key);
  else
    t_.insert_or_assign(key, v);
}

void TriPoly::insert_add(u64 key, const FieldElement& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = t_.emplace(key, v);
  if (!fresh) {
    it->second = it->second + v;
    if (it->second.is_zero()) t_.erase(it);
  }
}

TriPoly TriPoly::operator-() const {
  require_tri(*this, "negate");
  TriPoly r(f_);
  for (const auto& [key, c] : t_) r.t_.emplace(key, -c);
  return r;
}

TriPoly TriPoly::scale(const FieldElement& s) const {
  require_tri(*this, "scale");
  require_same_field(*f_, *s.field(), "scale");
  TriPoly r(f_);
  if (s.is_zero()) return r;
  for (const auto& [key, c] : t_) r.t_.emplace(key, c * s);
  return r;
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
  require_tri(a, "add");
  require_tri(b, "add");
  require_same_field(*a.f_, *b.f_, "add");
  TriPoly r = a;
  for (const auto& [key, c] : b.t_) r.insert_add(key, c);
  return r;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) {
  require_tri(a, "sub");
  require_tri(b, "sub");
  require_same_field(*a.f_, *b.f_, "sub");
  TriPoly r = a;
  for (const auto& [key, c] : b.t_) r.insert_add(key, -c);
  return r;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  require_tri(a, "mul");
  require_tri(b, "mul");
  require_same_field(*a.f_, *b.f_, "mul");
  const Field& F = *a.f_;
  TriPoly r(a.f_);
  if (a.t_.empty() || b.t_.empty()) return r;

  // Dense triangular fast path: both operands homogeneous, accumulator and
  // overflow budgets respected. The product of homogeneous polynomials is
  // homogeneous, so one triangle of u64 accumulators catches everything.
  std::optional<unsigned> da = a.homogeneous_degree();
  std::optional<unsigned> db = b.homogeneous_degree();
  const unsigned k = F.degree();
  const u64 p = F.characteristic();
  if (da && db) {
    const unsigned dc = *da + *db;
    const std::size_t accn = tri_size(dc) * (2 * k - 1);
    const u128 pair_bound = static_cast<u128>(std::min(a.t_.size(), b.t_.size())) *
                            k * p * p;
    if (accn <= kDenseAccCap && pair_bound < (static_cast<u128>(1) << 62)) {
      std::vector<FlatTerm> ta, tb;
      ta.reserve(a.t_.size());
      tb.reserve(b.t_.size());
      unsigned i, j, nn;
      for (const auto& [key, c] : a.t_) {
        TriPoly::unpack(key, i, j, nn);
        ta.push_back({i, j, c.digits().data()});
      }
      for (const auto& [key, c] : b.t_) {
        TriPoly::unpack(key, i, j, nn);
        tb.push_back({i, j, c.digits().data()});
      }
      std::vector<u64> acc(accn, 0);
      if (k == 1) {
        for (const FlatTerm& x : ta) {
          const u64 cx = x.c[0];
          for (const FlatTerm& y : tb)
            acc[tri_idx(dc, x.i + y.i, x.j + y.j)] += cx * y.c[0];
        }
      } else {
        for (const FlatTerm& x : ta) {
          for (const FlatTerm& y : tb) {
            u64* slot = &acc[tri_idx(dc, x.i + y.i, x.j + y.j) * (2 * k - 1)];
            for (unsigned u = 0; u < k; ++u) {
              if (!x.c[u]) continue;
              const u64 cu = x.c[u];
              for (unsigned v = 0; v < k; ++v) slot[u + v] += cu * y.c[v];
            }
          }
        }
      }
      std::vector<Digit> out(k);
      for (unsigned ii = 0; ii <= dc; ++ii) {
        for (unsigned jj = 0; ii + jj <= dc; ++jj) {
          u64* slot = &acc[tri_idx(dc, ii, jj) * (2 * k - 1)];
          F.reduce_acc(slot, out.data());
          bool nz = false;
          for (unsigned d = 0; d < k; ++d) nz |= out[d] != 0;
          if (nz)
            r.t_.emplace(TriPoly::pack(ii, jj, dc - ii - jj),
                         F.from_digits(out));
        }
      }
      return r;
    }
  }

  // Sparse fallback: plain term-by-term convolution.
  for (const auto& [ka, ca] : a.t_) {
    unsigned i1, j1, n1;
    TriPoly::unpack(ka, i1, j1, n1);
    for (const auto& [kb, cb] : b.t_) {
      unsigned i2, j2, n2;
      TriPoly::unpack(kb, i2, j2, n2);
      r.insert_add(TriPoly::pack(i1 + i2, j1 + j2, n1 + n2), ca * cb);
    }
  }
  return r;
}

bool operator==(const TriPoly& a, const TriPoly& b) {
  if (a.null() || b.null()) return a.null() == b.null();
  if (!a.f_->same_as(*b.f_) || a.t_.size() != b.t_.size()) return false;
  auto ia = a.t_.begin();
  auto ib = b.t_.begin();
  for (; ia != a.t_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

TriPoly TriPoly::frobenius_power() const {
  require_tri(*this, "frobenius_power");
  const u64 p = f_->characteristic();
  TriPoly r(f_);
  for (const auto& [key, c] : t_) {
    unsigned i, j, n;
    unpack(key, i, j, n);
    if (static_cast<u64>(i) * p > kExpMax || static_cast<u64>(j) * p > kExpMax ||
        static_cast<u64>(n) * p > kExpMax)
      throw PolyError("frobenius_power: exponent exceeds the packing bound");
    r.t_.emplace(pack(static_cast<unsigned>(i * p), static_cast<unsigned>(j * p),
                      static_cast<unsigned>(n * p)),
                 c.frobenius());
  }
  return r;
}

TriPoly TriPoly::pow(u64 e) const {
  require_tri(*this, "pow");
  const u64 p = f_->characteristic();
  unsigned fro = 0;
  while (e && e % p == 0) {
    e /= p;
    ++fro;
  }
  TriPoly r = constant(f_->one());
  TriPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  for (unsigned i = 0; i < fro; ++i) r = r.frobenius_power();
  return r;
}

std::optional<unsigned> TriPoly::ord_var(unsigned var) const {
  require_tri(*this, "ord_var");
  require_var(var, "ord_var");
  if (t_.empty()) return std::nullopt;
  unsigned best = kExpMax + 1;
  unsigned e[3];
  for (const auto& [key, c] : t_) {
    unpack(key, e[0], e[1], e[2]);
    best = std::min(best, e[var]);
  }
  return best;
}

std::optional<unsigned> TriPoly::deg_var(unsigned var) const {
  require_tri(*this, "deg_var");
  require_var(var, "deg_var");
  if (t_.empty()) return std::nullopt;
  unsigned best = 0;
  unsigned e[3];
  for (const auto& [key, c] : t_) {
    unpack(key, e[0], e[1], e[2]);
    best = std::max(best, e[var]);
  }
  return best;
}

std::optional<unsigned> TriPoly::total_degree() const {
  require_tri(*this, "total_degree");
  if (t_.empty()) return std::nullopt;
  unsigned best = 0;
  unsigned i, j, n;
  for (const auto& [key, c] : t_) {
    unpack(key, i, j, n);
    best = std::max(best, i + j + n);
  }
  return best;
}

std::optional<unsigned> TriPoly::homogeneous_degree() const {
  require_tri(*this, "homogeneous_degree");
  if (t_.empty())
    throw PolyError("homogeneous_degree: zero polynomial has no answer");
  std::optional<unsigned> deg;
  unsigned i, j, n;
  for (const auto& [key, c] : t_) {
    unpack(key, i, j, n);
    unsigned tot = i + j + n;
    if (!deg)
      deg = tot;
    else if (*deg != tot)
      return std::nullopt;
  }
  return deg;
}

TriPoly TriPoly::reduce_mod_vars(bool drop_l, bool drop_m, bool drop_n) const {
  require_tri(*this, "reduce_mod_vars");
  TriPoly r(f_);
  unsigned i, j, n;
  for (const auto& [key, c] : t_) {
    unpack(key, i, j, n);
    if ((drop_l && i) || (drop_m && j) || (drop_n && n)) continue;
    r.t_.emplace(key, c);
  }
  return r;
}

TriPoly TriPoly::substitute_var(unsigned var, const FieldElement& value) const {
  require_tri(*this, "substitute_var");
  require_var(var, "substitute_var");
  if (value.null()) throw PolyError("substitute_var: null value");
  require_same_field(*f_, *value.field(), "substitute_var");
  unsigned dv = deg_var(var).value_or(0);
  std::vector<FieldElement> pw{f_->one()};
  pw.reserve(dv + 1);
  for (unsigned i = 1; i <= dv; ++i) pw.push_back(pw.back() * value);
  TriPoly r(f_);
  unsigned e[3];
  for (const auto& [key, c] : t_) {
    unpack(key, e[0], e[1], e[2]);
    FieldElement nc = c * pw[e[var]];
    e[var] = 0;
    r.insert_add(pack(e[0], e[1], e[2]), nc);
  }
  return r;
}

FieldElement TriPoly::eval(const FieldElement& l, const FieldElement& m,
                           const FieldElement& n) const {
  require_tri(*this, "eval");
  for (const FieldElement* v : {&l, &m, &n}) {
    if (v->null()) throw PolyError("eval: null value");
    require_same_field(*f_, *v->field(), "eval");
  }
  const FieldElement* vals[3] = {&l, &m, &n};
  std::vector<FieldElement> pw[3];
  for (unsigned v = 0; v < 3; ++v) {
    unsigned dv = deg_var(v).value_or(0);
    pw[v].push_back(f_->one());
    for (unsigned i = 1; i <= dv; ++i) pw[v].push_back(pw[v].back() * *vals[v]);
  }
  FieldElement acc = f_->zero();
  unsigned e[3];
  for (const auto& [key, c] : t_) {
    unpack(key, e[0], e[1], e[2]);
    acc = acc + c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
  }
  return acc;
}

UniPoly TriPoly::collapse(unsigned keep, const FieldElement& first,
                          const FieldElement& second) const {
  require_tri(*this, "collapse");
  require_var(keep, "collapse");
  const unsigned others[2] = {keep == 0 ? 1u : 0u, keep == 2 ? 1u : 2u};
  const FieldElement* vals[2] = {&first, &second};
  for (const FieldElement* v : vals) {
    if (v->null()) throw PolyError("collapse: null value");
    require_same_field(*f_, *v->field(), "collapse");
  }
  std::vector<FieldElement> pw[2];
  for (unsigned v = 0; v < 2; ++v) {
    unsigned dv = deg_var(others[v]).value_or(0);
    pw[v].push_back(f_->one());
    for (unsigned i = 1; i <= dv; ++i) pw[v].push_back(pw[v].back() * *vals[v]);
  }
  unsigned dk = deg_var(keep).value_or(0);
  std::vector<FieldElement> out(dk + 1, f_->zero());
  unsigned e[3];
  for (const auto& [key, c] : t_) {
    unpack(key, e[0], e[1], e[2]);
    out[e[keep]] = out[e[keep]] + c * pw[0][e[others[0]]] * pw[1][e[others[1]]];
  }
  return UniPoly::from_coeffs(f_, out);
}

UniPoly TriPoly::to_unipoly(unsigned var) const {
  require_tri(*this, "to_unipoly");
  require_var(var, "to_unipoly");
  UniPoly r(f_);
  unsigned e[3];
  for (const auto& [key, c] : t_) {
    unpack(key, e[0], e[1], e[2]);
    for (unsigned v = 0; v < 3; ++v)
      if (v != var && e[v])
        throw PolyError("to_unipoly: polynomial involves another variable");
    r.set_coeff(e[var], c);
  }
  return r;
}

TriPoly TriPoly::derivative_var(unsigned var) const {
  require_tri(*this, "derivative_var");
  require_var(var, "derivative_var");
  const u64 p = f_->characteristic();
  TriPoly r(f_);
  unsigned e[3];
  for (const auto& [key, c] : t_) {
    unpack(key, e[0], e[1], e[2]);
    if (e[var] == 0) continue;
    FieldElement s = f_->from_int(static_cast<std::int64_t>(e[var] % p));
    if (s.is_zero()) continue;
    unsigned ne[3] = {e[0], e[1], e[2]};
    --ne[var];
    r.t_.emplace(pack(ne[0], ne[1], ne[2]), c * s);
  }
  return r;
}

TriPoly TriPoly::divide_exact_var(unsigned var, unsigned e) const {
  require_tri(*this, "divide_exact_var");
  require_var(var, "divide_exact_var");
  TriPoly r(f_);
  unsigned ex[3];
  for (const auto& [key, c] : t_) {
    unpack(key, ex[0], ex[1], ex[2]);
    if (ex[var] < e)
      throw PolyError("divide_exact_var: division is not exact");
    ex[var] -= e;
    r.t_.emplace(pack(ex[0], ex[1], ex[2]), c);
  }
  return r;
}

TriPoly TriPoly::dehomogenize(unsigned var) const {
  return substitute_var(var, f_ ? f_->one() : FieldElement());
}

TriPoly TriPoly::rehomogenize(unsigned var, unsigned total) const {
  require_tri(*this, "rehomogenize");
  require_var(var, "rehomogenize");
  TriPoly r(f_);
  unsigned e[3];
  for (const auto& [key, c] : t_) {
    unpack(key, e[0], e[1], e[2]);
    unsigned cur = e[0] + e[1] + e[2];
    if (cur > total)
      throw PolyError("rehomogenize: term degree exceeds the target");
    e[var] += total - cur;
    r.insert_add(pack(e[0], e[1], e[2]), c);
  }
  return r;
}

TriPoly TriPoly::lifted(const SubfieldEmbedding& emb) const {
  require_tri(*this, "lifted");
  require_same_field(*emb.src(), *f_, "lifted");
  TriPoly r(emb.dst());
  for (const auto& [key, c] : t_) r.t_.emplace(key, emb.apply(c));
  return r;
}

std::string TriPoly::to_string() const {
  require_tri(*this, "to_string");
  if (t_.empty()) return "0";
  struct Row {
    unsigned tot, i, j, n;
    const FieldElement* c;
  };
  std::vector<Row> rows;
  rows.reserve(t_.size());
  for (const auto& [key, c] : t_) {
    unsigned i, j, n;
    unpack(key, i, j, n);
    rows.push_back({i + j + n, i, j, n, &c});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.tot != b.tot) return a.tot > b.tot;
    if (a.i != b.i) return a.i > b.i;
    if (a.j != b.j) return a.j > b.j;
    return a.n > b.n;
  });
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) os << " + ";
    os << rows[r].c->to_string() << "*l^" << rows[r].i << "*m^" << rows[r].j
       << "*n^" << rows[r].n;
  }
  return os.str();
}

}  // namespace howec
