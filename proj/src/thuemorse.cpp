#include "autorec/thuemorse.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "autorec/error.hpp"

namespace autorec {

namespace {

int tm_term(u64 m) { return __builtin_popcountll(m) % 2 ? -1 : 1; }

RatPoly tm_power_product(u64 s) {
    RatPoly p{1};
    for (u64 i = 0; i < s; ++i) p *= RatPoly{1} - RatPoly::monomial(BigRational(1), std::size_t{1} << i);
    return p;
}

bool is_minus_one(u64 value, u64 r0) { return (value + 1) % r0 == 0; }

void consistency(bool ok, u64 r0, const std::string& what) {
    if (!ok) fail(ErrorCode::Inconsistency, "r0 = " + std::to_string(r0) + ": " + what);
}

}  // namespace

RatPoly tm_polynomial(u64 n) {
    std::vector<BigRational> c(n);
    for (u64 m = 0; m < n; ++m) c[m] = tm_term(m);
    return RatPoly(std::move(c));
}

TmIdentityReport tm_identities_check(u64 n_max, u64 s_max) {
    TmIdentityReport report;
    auto record = [&](bool holds, int id, u64 n, u64 s) {
        ++report.checks;
        if (!holds && report.ok) {
            report.ok = false;
            report.failure = TmIdentityFailure{id, n, s};
        }
    };
    const RatPoly one_minus_x{1, -1};
    for (u64 n = 1; n <= n_max; ++n) {
        record(tm_polynomial(2 * n) == one_minus_x * tm_polynomial(n).substitute_power(2), 1, n, 0);
    }
    for (u64 s = 0; s <= s_max; ++s) {
        const u64 p = u64{1} << s;
        const RatPoly t = tm_polynomial(p);
        record(t == tm_power_product(s), 2, 0, s);
        for (u64 n = 1; n <= n_max; ++n) {
            record(tm_polynomial(p * n) == tm_polynomial(n).substitute_power(p) * t, 3, n, s);
        }
        const RatPoly sign{s % 2 ? -1L : 1L};
        record(t.reversed(p - 1) == t * sign.coeff(0), 4, 0, s);
    }
    return report;
}

CycloElement tm_coefficient(u64 r0, u64 e) {
    require(r0 >= 1, "r0 must be positive");
    const u64 g = std::gcd(r0, e % r0);
    const u64 n = r0 / g;
    if (n == 1) return CycloElement(CycloField(1));  // T(2; 1) = 0
    require(n % 2 == 1, "the order of w must be odd");
    const u64 f = (e % r0) / g;
    const u64 s0 = multiplicative_order(2, n);
    std::vector<BigInt> v(n, BigInt(0));
    std::vector<BigInt> prev;
    v[0] = 1;
    u64 shift = f % n;
    for (u64 i = 0; i < s0; ++i) {
        prev = v;
        for (u64 j = 0; j < n; ++j) {
            if (prev[j] == 0) continue;
            u64 t = j + shift;
            if (t >= n) t -= n;
            v[t] -= prev[j];
        }
        shift = (2 * shift) % n;
    }
    return reduce_integer_coeffs(CycloField(n), v);
}

std::string_view to_string(TmCase c) noexcept {
    switch (c) {
        case TmCase::PrimePowerPrimitiveRoot: return "PrimePowerPrimitiveRoot";
        case TmCase::PrimePowerHalfOdd: return "PrimePowerHalfOdd";
        case TmCase::TwoFactorUnit: return "TwoFactorUnit";
        case TmCase::TwoFactorRealNonInt: return "TwoFactorRealNonInt";
        case TmCase::Other: return "Other";
    }
    return "Other";
}

TmClassification tm_classify(u64 r0) {
    require(r0 >= 3 && r0 % 2 == 1, "r0 must be odd and at least 3, got " + std::to_string(r0));
    TmClassification c;
    c.r0 = r0;
    c.s0 = multiplicative_order(2, r0);
    c.phi = euler_phi(r0);
    c.prime = prime_power_base(r0).value_or(0);
    c.value = tm_coefficient(r0, 1);
    const CycloField& field = c.value.field();
    const CycloElement conj = GaloisMap(field, -1)(c.value);
    c.is_real = conj == c.value;
    c.is_imaginary = conj == -c.value;
    c.rationality = rationality(c.value);

    const bool s0_even = c.s0 % 2 == 0;
    const bool half_minus_one = s0_even && is_minus_one(pow_mod(2, c.s0 / 2, r0), r0);
    if (c.prime != 0) {
        if (c.s0 == c.phi) c.label = TmCase::PrimePowerPrimitiveRoot;
        else if (2 * c.s0 == c.phi && !s0_even) c.label = TmCase::PrimePowerHalfOdd;
    } else {
        if (half_minus_one) c.label = TmCase::TwoFactorRealNonInt;
        else if (2 * c.s0 == c.phi) c.label = TmCase::TwoFactorUnit;
    }

    consistency(GaloisMap(field, 2)(c.value) == c.value, r0, "value is not fixed by psi_2");
    consistency(c.is_real == s0_even, r0, "realness disagrees with the parity of s0 = " + std::to_string(c.s0));
    consistency(c.is_imaginary == !s0_even, r0, "value is neither real nor purely imaginary as predicted");
    const bool integer = c.is_integer();
    if (c.prime != 0) {
        consistency(integer == (c.s0 == c.phi), r0, "integrality disagrees with s0 = phi(r0)");
        if (integer) consistency(c.rationality.value == BigInt(c.prime), r0, "integer value differs from p");
        if (c.label == TmCase::PrimePowerHalfOdd) {
            consistency(c.value * conj == CycloElement(field, BigRational(BigInt(c.prime))), r0,
                        "|T|^2 differs from p");
        }
    } else {
        if (integer) {
            const BigRational& v = c.rationality.value;
            consistency(v == 1 || v == -1, r0, "integer value other than 1 or -1");
        }
        if (c.label == TmCase::TwoFactorUnit) consistency(integer, r0, "expected a value in {1, -1}");
        if (c.label == TmCase::TwoFactorRealNonInt) consistency(c.is_real && !integer, r0, "expected a real non-integer");
    }
    return c;
}

CycloElement tm_conjugate_product(u64 r0) {
    const CycloElement v = tm_coefficient(r0, 1);
    CycloElement product(v.field(), BigRational(1));
    for (u64 u : coset_representatives(2, r0)) product *= GaloisMap(v.field(), static_cast<i64>(u))(v);
    return product;
}

std::string TmTable::to_string() const {
    static const char* rows[] = {"T = 1", "T = -1", "T not in Z"};
    std::ostringstream out;
    out << std::left << std::setw(12) << "" << std::right << std::setw(12) << "phi = 2 s0" << std::setw(12)
        << "phi > 2 s0" << std::setw(10) << "total" << "\n";
    for (std::size_t i = 0; i < 3; ++i) {
        out << std::left << std::setw(12) << rows[i] << std::right << std::setw(12) << counts[i][0] << std::setw(12)
            << counts[i][1] << std::setw(10) << row_total(i) << "\n";
    }
    out << "bound " << bound << ": " << in_r << " of " << scanned << " values tabulated\n";
    return out.str();
}

TmTable tm_table(u64 bound, const TmTableOptions& options) {
    require(bound >= 15, "table bound must be at least 15");
    if (bound > kDeskScaleBound && !options.long_run) {
        fail(ErrorCode::Precondition, "bound " + std::to_string(bound) + " exceeds the desk-scale limit " +
                                          std::to_string(kDeskScaleBound) + "; enable the long run explicitly");
    }
    std::vector<u64> candidates;
    for (u64 r0 = 3; r0 <= bound; r0 += 2) {
        if (distinct_prime_count(r0) >= 2) candidates.push_back(r0);
    }
    std::vector<TmTableEntry> entries(candidates.size());
    std::atomic<std::size_t> next{0};
    std::atomic<u64> done{0};
    std::mutex progress_mutex;
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= candidates.size()) return;
            try {
                const u64 r0 = candidates[i];
                TmTableEntry& e = entries[i];
                e.r0 = r0;
                e.s0 = multiplicative_order(2, r0);
                e.phi = euler_phi(r0);
                e.in_r = e.s0 % 2 == 0 && !is_minus_one(pow_mod(2, e.s0 / 2, r0), r0);
                const TmClassification c = tm_classify(r0);
                e.value = c.is_integer() ? static_cast<int>(c.rationality.value.get_num().get_si()) : 0;
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(candidates.size());
                return;
            }
            const u64 count = done.fetch_add(1) + 1;
            if (options.progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                options.progress(count, candidates.size());
            }
        }
    };
    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(candidates.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    TmTable table;
    table.bound = bound;
    table.scanned = candidates.size();
    for (const auto& e : entries) {
        if (!e.in_r) continue;
        ++table.in_r;
        const std::size_t row = e.value == 1 ? 0 : e.value == -1 ? 1 : 2;
        const std::size_t col = e.phi == 2 * e.s0 ? 0 : 1;
        ++table.counts[row][col];
    }
    if (table.counts[2][0] != 0) {
        fail(ErrorCode::Inconsistency, "non-integer values with phi(r0) = 2 s0 contradict the unit case");
    }
    table.entries = std::move(entries);
    return table;
}

Dfao tm_tilde_dfao() {
    return Dfao(2, Direction::Forward, {"even", "odd"}, {0, 1, 1, 0}, {OutputValue(BigRational(0)), OutputValue(BigRational(1))});
}

TildeReport tilde_demo(const RootSpec& root, u64 n_max) {
    require(root.k == 2, "the variant is a base-2 sequence");
    require(root.r0 > 1, "the variant demonstration needs w != 1");
    TildeReport report;
    report.root = root;
    const Dfao tm = parse_dfao(
        "base: 2\nstates: even odd\noutput: even = 1\noutput: odd = -1\n"
        "delta: even 0 -> even\ndelta: even 1 -> odd\ndelta: odd 0 -> odd\ndelta: odd 1 -> even\n");
    const Dfao tilde = tm_tilde_dfao();
    PartialSumEvaluator t_eval(tm, root);
    PartialSumEvaluator tilde_eval(tilde, root);
    const CycloField& field = tilde_eval.field();
    const BigInt step = BigInt(1) << static_cast<mp_bitcnt_t>(root.s);
    report.c = embed(t_eval.value(step), field);
    report.c_is_one = report.c.is_one();

    const RatPoly x_minus_one{-1, 1};
    const CycloElement w = root.omega_power(field, 1);
    const CycloElement inv_denominator = ((w - CycloElement(field, BigRational(1))) * BigRational(2)).inverse();
    const CycloElement one_minus_c = CycloElement(field, BigRational(1)) - report.c;
    bool two_term = true;
    for (u64 n = 1; n <= n_max; ++n) {
        std::vector<BigRational> tc(n);
        for (u64 m = 0; m < n; ++m) tc[m] = __builtin_popcountll(m) % 2;
        const RatPoly lhs = RatPoly(std::move(tc)) * x_minus_one * BigRational(2);
        const RatPoly rhs = RatPoly::x_pow_minus_one(n) - x_minus_one * tm_polynomial(n);
        const bool poly_ok = lhs == rhs;
        const CycloElement tn = tilde_eval.value(BigInt(n));
        const CycloElement t2n = tilde_eval.value(step * n);
        const CycloElement wn = root.omega_power(field, static_cast<i64>(n % root.r)) - CycloElement(field, BigRational(1));
        const bool shifted_ok = t2n == report.c * tn + one_minus_c * wn * inv_denominator;
        if (!poly_ok) report.polynomial_identity = false;
        if (!shifted_ok) report.shifted_identity = false;
        if ((!poly_ok || !shifted_ok) && !report.first_failure) report.first_failure = n;
        if (!(t2n == tn)) two_term = false;
    }
    if (report.c_is_one) report.two_term = two_term;
    report.synthesized_order = synthesize(tilde, root).order();
    return report;
}

std::optional<u64> smallest_unit_conductor(u64 limit) {
    for (u64 r0 = 3; r0 <= limit; r0 += 2) {
        if (tm_coefficient(r0, 1).is_one()) return r0;
    }
    return std::nullopt;
}

}  // namespace autorec
