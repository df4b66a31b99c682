#include "howec/numutil.hpp"

#include <thread>

namespace howec {

bool is_prime_u32(Digit n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<Digit> primes_in_range(Digit lo, Digit hi) {
  std::vector<Digit> out;
  for (Digit n = lo; n <= hi && n >= lo; ++n)
    if (is_prime_u32(n)) out.push_back(n);
  return out;
}

u64 mix_seed(u64 seed, u64 a, u64 b, u64 c) {
  u64 h = 14695981039346656037ull ^ seed;
  auto absorb = [&h](u64 w) {
    for (int i = 0; i < 8; ++i) {
      h ^= (w >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  absorb(a);
  absorb(b);
  absorb(c);
  return h;
}

Digit pow_mod_p(u64 base, u64 exp, Digit p) {
  u64 r = 1 % p, b = base % p;
  while (exp) {
    if (exp & 1) r = r * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<Digit>(r);
}

Digit inv_mod_p(Digit a, Digit p) {
  // p prime, a != 0: Fermat.
  return pow_mod_p(a, p - 2, p);
}

Digit factorial_mod_p(Digit n, Digit p) {
  u64 r = 1 % p;
  for (u64 i = 2; i <= n; ++i) r = r * (i % p) % p;
  return static_cast<Digit>(r);
}

namespace {

// C(n, k) mod p for 0 <= k <= n < p.
Digit binom_small(u64 n, u64 k, Digit p) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  u64 num = 1 % p, den = 1 % p;
  for (u64 i = 0; i < k; ++i) {
    num = num * ((n - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return static_cast<Digit>(num * inv_mod_p(static_cast<Digit>(den), p) % p);
}

}  // namespace

Digit binomial_mod_p(u64 n, u64 k, Digit p) {
  if (k > n) return 0;
  u64 r = 1 % p;
  while (n || k) {
    u64 nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    r = r * binom_small(nd, kd, p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<Digit>(r);
}

void parallel_chunks(std::size_t count, unsigned workers,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
  if (count == 0) return;
  if (workers == 0) workers = 1;
  if (workers <= 1 || count < 2 * workers) {
    fn(0, count);
    return;
  }
  std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  for (std::size_t begin = 0; begin < count; begin += chunk) {
    std::size_t end = begin + chunk < count ? begin + chunk : count;
    pool.emplace_back(fn, begin, end);
  }
  for (auto& t : pool) t.join();
}

unsigned hardware_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

}  // namespace howec
