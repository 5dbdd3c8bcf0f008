#pragma once

// The Thue-Morse coefficient T(2^{s0}; w) = prod_{i < s0} (1 - w^{2^i}): polynomial
// identities, integrality classification, the table scan and the 0/1 variant.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autorec/automaton.hpp"
#include "autorec/recurrence.hpp"

namespace autorec {

/// T(n; x) = sum_{m < n} t(m) x^m with t(m) = (-1)^{s_2(m)}.
RatPoly tm_polynomial(u64 n);

struct TmIdentityFailure {
    /// 1..4 for the identities T(2n) = (1-x) T(n; x^2), T(2^s) = prod (1 - x^{2^i}),
    /// T(2^s n) = T(n; x^{2^s}) T(2^s), x^{2^s-1} T(2^s; 1/x) = (-1)^s T(2^s).
    int identity;
    u64 n;
    u64 s;
};

struct TmIdentityReport {
    bool ok = true;
    std::size_t checks = 0;
    std::optional<TmIdentityFailure> failure;
};

TmIdentityReport tm_identities_check(u64 n_max, u64 s_max);

/// T(2^{s0}; w) for w = zeta_{r0}^e, in Q(w); s0 is the order of 2 modulo the order of w.
CycloElement tm_coefficient(u64 r0, u64 e = 1);

enum class TmCase { PrimePowerPrimitiveRoot, PrimePowerHalfOdd, TwoFactorUnit, TwoFactorRealNonInt, Other };

std::string_view to_string(TmCase c) noexcept;

struct TmClassification {
    u64 r0 = 0;
    u64 s0 = 0;
    u64 phi = 0;
    /// p when r0 = p^a, otherwise 0.
    u64 prime = 0;
    bool is_real = false;
    bool is_imaginary = false;
    Rationality rationality{Rationality::Kind::Irrational, BigRational(0)};
    TmCase label = TmCase::Other;
    CycloElement value;

    bool is_integer() const noexcept { return rationality.kind == Rationality::Kind::Integer; }
};

/// Exact value plus the case predicted from r0 and s0; throws Error(Inconsistency) when
/// the value contradicts the prediction. Requires r0 odd and >= 3.
TmClassification tm_classify(u64 r0);

/// prod_j psi_{u_j}(T(2^{s0}; w)) over coset representatives of <2> in (Z/r0Z)^x.
CycloElement tm_conjugate_product(u64 r0);

inline constexpr u64 kDeskScaleBound = 2000;

struct TmTableOptions {
    unsigned threads = 0;  // 0: hardware concurrency
    /// Required for bounds above kDeskScaleBound.
    bool long_run = false;
    std::function<void(u64 done, u64 total)> progress;
};

struct TmTableEntry {
    u64 r0;
    u64 s0;
    u64 phi;
    /// 1, -1, or 0 for a non-integer value.
    int value;
    bool in_r;
};

struct TmTable {
    u64 bound = 0;
    /// counts[row][col]: rows value 1 / -1 / non-integer, columns phi = 2 s0 / phi > 2 s0.
    std::array<std::array<u64, 2>, 3> counts{};
    /// Odd r0 <= bound with at least two distinct prime factors.
    u64 scanned = 0;
    /// Members of the tabulated set: s0 even and 2^{s0/2} != -1 (mod r0).
    u64 in_r = 0;
    std::vector<TmTableEntry> entries;

    u64 row_total(std::size_t row) const { return counts[row][0] + counts[row][1]; }
    u64 column_total(std::size_t col) const { return counts[0][col] + counts[1][col] + counts[2][col]; }
    /// Aligned text in the layout of the published table.
    std::string to_string() const;
};

/// Scan of odd non-prime-power r0 <= bound. Requires bound >= 15.
TmTable tm_table(u64 bound, const TmTableOptions& options = {});

/// Dfao for the 0/1 variant t~(n) = s_2(n) mod 2.
Dfao tm_tilde_dfao();

struct TildeReport {
    RootSpec root;
    /// C = T(2^s; w)
    CycloElement c;
    bool c_is_one = false;
    /// 2 T~(n; x) (x - 1) = x^n - 1 - (x - 1) T(n; x) for n <= n_max.
    bool polynomial_identity = true;
    /// T~(2^s n; w) = C T~(n; w) + (1 - C)(w^n - 1) / (2 (w - 1)) for n <= n_max.
    bool shifted_identity = true;
    /// When C = 1: T~(2^s n; w) = T~(n; w) for n <= n_max.
    std::optional<bool> two_term;
    std::size_t synthesized_order = 0;
    std::optional<u64> first_failure;
};

/// Requires w != 1.
TildeReport tilde_demo(const RootSpec& root, u64 n_max);

/// Smallest odd r0 in [3, limit] with T(2^{s0}; zeta_{r0}) = 1.
std::optional<u64> smallest_unit_conductor(u64 limit);

}  // namespace autorec
