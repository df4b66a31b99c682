#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace howec {

using Digit = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_prime_u32(Digit n);
std::vector<Digit> primes_in_range(Digit lo, Digit hi);

// Deterministic seed mixing (FNV-1a over the words); used to derive
// independent RNG streams from one master seed.
u64 mix_seed(u64 seed, u64 a, u64 b = 0, u64 c = 0);

Digit pow_mod_p(u64 base, u64 exp, Digit p);
Digit inv_mod_p(Digit a, Digit p);  // a != 0 mod p

// n! mod p for n < p.
Digit factorial_mod_p(Digit n, Digit p);

// Binomial coefficient mod a prime via Lucas' theorem (n, k unbounded).
Digit binomial_mod_p(u64 n, u64 k, Digit p);

// Runs fn(begin, end) over [0, count) split into `workers` contiguous chunks.
// With workers <= 1 this is a plain loop; chunk boundaries are deterministic,
// so any order-sensitive aggregation must happen per chunk and be merged in
// chunk order by the caller.
void parallel_chunks(std::size_t count, unsigned workers,
                     const std::function<void(std::size_t, std::size_t)>& fn);

unsigned hardware_workers();

}  // namespace howec
