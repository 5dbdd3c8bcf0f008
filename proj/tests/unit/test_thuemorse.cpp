#include <boost/math/constants/constants.hpp>

#include "doctest.h"
#include "support.hpp"

#include "autorec/error.hpp"
#include "autorec/thuemorse.hpp"

using namespace autorec;
using namespace autorec::testing;

namespace {

CycloElement rat(const CycloField& f, long v) { return CycloElement(f, BigRational(v)); }

// T(2^{s0}; exp(2 pi i / r0)) from the product formula in 256-digit floating point:
// 1 and -1 for the unit values, 0 for a non-integer.
int float_unit_value(u64 r0) {
    using F = HighPrecisionFloat;
    const F two_pi = 2 * boost::math::constants::pi<F>();
    const u64 s0 = multiplicative_order(2, r0);
    F re = 1, im = 0;
    u64 e = 1;
    for (u64 i = 0; i < s0; ++i) {
        const F angle = two_pi * F(e) / F(r0);
        const F a = 1 - cos(angle), b = -sin(angle);
        const F nre = re * a - im * b;
        im = re * b + im * a;
        re = nre;
        e = (2 * e) % r0;
    }
    const F eps("1e-150");
    if (abs(im) > eps) return 0;
    const F rounded = round(re);
    if (abs(re - rounded) > eps) return 0;
    const int v = static_cast<int>(rounded);
    return v == 1 || v == -1 ? v : 0;
}

}  // namespace

TEST_CASE("Thue-Morse polynomial identities") {
    CHECK(tm_polynomial(2) == RatPoly{1, -1});
    CHECK(tm_polynomial(8) == RatPoly{1, -1, -1, 1, -1, 1, 1, -1});
    const TmIdentityReport report = tm_identities_check(64, 6);
    CHECK(report.ok);
    CHECK_FALSE(report.failure.has_value());
    CHECK(report.checks == 64 + 7 * (2 + 64));
}

TEST_CASE("coefficient values at small conductors") {
    CHECK(tm_coefficient(3) == rat(CycloField(3), 3));
    CHECK(tm_coefficient(5) == rat(CycloField(5), 5));
    CHECK(tm_coefficient(9) == rat(CycloField(9), 3));
    CHECK(tm_coefficient(9, 3) == rat(CycloField(3), 3));
    CHECK(tm_coefficient(9, 0).is_zero());
    const CycloElement t7 = tm_coefficient(7);
    CHECK_FALSE(t7.is_rational());
    CHECK(t7 * tm_coefficient(7, 3) == rat(CycloField(7), 7));
    const RootSpec w7 = RootSpec::make(2, 7, 1);
    CHECK(t7 == partial_sum_value(parse_dfao("base: 2\nstates: a b\noutput: a = 1\noutput: b = -1\n"
                                             "delta: a 0 -> a\ndelta: a 1 -> b\ndelta: b 0 -> b\ndelta: b 1 -> a\n"),
                                  8, w7));
}

TEST_CASE("classification examples") {
    const TmClassification c9 = tm_classify(9);
    CHECK(c9.label == TmCase::PrimePowerPrimitiveRoot);
    CHECK(c9.is_integer());
    CHECK(c9.rationality.value == 3);

    const TmClassification c7 = tm_classify(7);
    CHECK(c7.label == TmCase::PrimePowerHalfOdd);
    CHECK(c7.s0 == 3);
    CHECK(c7.is_imaginary);
    CHECK_FALSE(c7.is_real);
    CHECK(c7.value * c7.value == rat(c7.value.field(), -7));

    const TmClassification c33 = tm_classify(33);
    CHECK(c33.label == TmCase::TwoFactorRealNonInt);
    CHECK(c33.s0 == 10);
    CHECK(c33.is_real);
    CHECK_FALSE(c33.is_integer());

    const TmClassification c15 = tm_classify(15);
    CHECK(c15.label == TmCase::TwoFactorUnit);
    CHECK(c15.is_integer());
    CHECK(to_string(c15.label) == "TwoFactorUnit");
    CHECK_THROWS_AS(tm_classify(8), Error);
    CHECK_THROWS_AS(tm_classify(1), Error);
}

TEST_CASE("prime power classification") {
    for (u64 r0 = 3; r0 <= 500; r0 += 2) {
        const auto p = prime_power_base(r0);
        if (!p) continue;
        const TmClassification c = tm_classify(r0);
        if (c.s0 == c.phi) {
            CHECK(c.label == TmCase::PrimePowerPrimitiveRoot);
            CHECK(c.rationality.value == BigInt(*p));
        }
        if (2 * c.s0 == c.phi && c.s0 % 2 == 1) {
            CHECK(c.is_imaginary);
            CHECK(c.value * GaloisMap(c.value.field(), -1)(c.value) == rat(c.value.field(), static_cast<long>(*p)));
        }
    }
}

TEST_CASE("coset product of conjugates is the cyclotomic value at one") {
    for (u64 r0 = 3; r0 <= 200; r0 += 2) {
        const BigRational phi1 = cyclotomic_poly(r0)(BigRational(1));
        CHECK(tm_conjugate_product(r0) == CycloElement(CycloField(r0), phi1));
    }
}

TEST_CASE("table scan agrees with a floating-point scan") {
    const TmTable small = tm_table(15);
    CHECK(small.scanned == 1);
    CHECK(small.in_r == 1);
    CHECK(small.row_total(0) + small.row_total(1) == 1);
    CHECK(small.counts[0][0] + small.counts[1][0] == 1);

    const TmTable table = tm_table(100);
    for (const auto& e : table.entries) CHECK(e.value == float_unit_value(e.r0));
    u64 sum = 0;
    for (std::size_t row = 0; row < 3; ++row) sum += table.row_total(row);
    CHECK(sum == table.in_r);
    CHECK(table.column_total(0) + table.column_total(1) == table.in_r);
    CHECK(table.counts[2][0] == 0);
    CHECK(table.to_string().find("phi = 2 s0") != std::string::npos);
    CHECK_THROWS_AS(tm_table(10), Error);
    CHECK_THROWS_AS(tm_table(kDeskScaleBound + 2), Error);
}

TEST_CASE("variant with 0/1 values") {
    const TildeReport r3 = tilde_demo(RootSpec::make(2, 3, 1, 2), 100);
    CHECK(r3.polynomial_identity);
    CHECK(r3.shifted_identity);
    CHECK(r3.c == rat(r3.c.field(), 3));
    CHECK_FALSE(r3.c_is_one);
    CHECK_FALSE(r3.two_term.has_value());
    CHECK(r3.synthesized_order == 2);

    const auto unit = smallest_unit_conductor(500);
    REQUIRE(unit.has_value());
    CHECK(distinct_prime_count(*unit) >= 2);
    const TildeReport ru = tilde_demo(RootSpec::make(2, *unit, 1), 100);
    CHECK(ru.c_is_one);
    REQUIRE(ru.two_term.has_value());
    CHECK(*ru.two_term);
    CHECK(ru.shifted_identity);
    CHECK_THROWS_AS(tilde_demo(RootSpec::make(2, 3, 0), 10), Error);
}
