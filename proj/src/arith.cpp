#include "autorec/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "autorec/error.hpp"

namespace autorec {

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

u64 euler_phi(u64 n) {
    u64 result = n;
    for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

int moebius(u64 n) {
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<u64> prime_power_base(u64 n) {
    const auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    return f.front().first;
}

bool is_squarefree(u64 n) {
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

u64 distinct_prime_count(u64 n) { return factorize(n).size(); }

u64 mod_floor(i64 a, u64 m) {
    const i64 mm = static_cast<i64>(m);
    i64 r = a % mm;
    if (r < 0) r += mm;
    return static_cast<u64>(r);
}

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

u64 multiplicative_order(i64 k, u64 r0) {
    require(r0 >= 1, "modulus must be positive");
    const u64 kk = mod_floor(k, r0);
    require(std::gcd(kk, r0) == 1 || r0 == 1,
            "gcd(" + std::to_string(k) + ", " + std::to_string(r0) + ") != 1");
    if (r0 == 1) return 1;
    u64 s = 1;
    u64 x = kk;
    while (x != 1) {
        x = mul_mod(x, kk, r0);
        ++s;
    }
    return s;
}

std::vector<u64> coset_representatives(i64 k, u64 r0) {
    const u64 s0 = multiplicative_order(k, r0);
    if (r0 == 1) return {1};
    const u64 kk = mod_floor(k, r0);
    std::vector<bool> seen(r0, false);
    std::vector<u64> reps;
    for (u64 u = 1; u < r0; ++u) {
        if (seen[u] || std::gcd(u, r0) != 1) continue;
        reps.push_back(u);
        u64 x = u;
        for (u64 i = 0; i < s0; ++i) {
            seen[x] = true;
            x = mul_mod(x, kk, r0);
        }
    }
    return reps;
}

u64 normalized_conductor(u64 n) {
    require(n >= 1, "conductor must be positive");
    return n % 4 == 2 ? n / 2 : n;
}

u64 compositum_conductor(u64 a, u64 b) {
    return normalized_conductor(std::lcm(normalized_conductor(a), normalized_conductor(b)));
}

}  // namespace autorec
