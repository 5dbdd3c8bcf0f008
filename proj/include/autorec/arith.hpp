#pragma once

// Small-integer number theory used throughout: factorization, totient,
// multiplicative orders and coset representatives of (Z/nZ)^x / <k>.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace autorec {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Prime factorization by trial division, ascending primes with multiplicity.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

u64 euler_phi(u64 n);

int moebius(u64 n);

std::vector<u64> divisors(u64 n);

/// The prime p when n = p^a with a >= 1.
std::optional<u64> prime_power_base(u64 n);

bool is_squarefree(u64 n);

u64 distinct_prime_count(u64 n);

/// Nonnegative residue of a modulo m (m >= 1).
u64 mod_floor(i64 a, u64 m);

u64 mul_mod(u64 a, u64 b, u64 m);

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Least s >= 1 with k^s = 1 (mod r0). Throws Error(Precondition) unless gcd(k, r0) = 1.
u64 multiplicative_order(i64 k, u64 r0);

/// Representatives of the cosets of <k> in (Z/r0Z)^x: the smallest positive
/// member of each coset, ascending. The first is always 1.
std::vector<u64> coset_representatives(i64 k, u64 r0);

/// Conductor used for the field Q(zeta_n): n with a factor 2 dropped when n = 2 (mod 4).
u64 normalized_conductor(u64 n);

/// Normalized conductor of the smallest cyclotomic field containing both Q(zeta_a) and Q(zeta_b).
u64 compositum_conductor(u64 a, u64 b);

}  // namespace autorec
