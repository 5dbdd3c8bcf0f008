#include <random>

#include "doctest.h"
#include "support.hpp"

#include "autorec/error.hpp"
#include "autorec/recurrence.hpp"

using namespace autorec;
using namespace autorec::testing;

namespace {

const CycloField kQ(1);

Dfao zero_sequence() {
    return parse_dfao("base: 2\nstates: z\noutput: z = 0\ndelta: z 0 -> z\ndelta: z 1 -> z\n");
}

std::vector<Dfao> shipped() { return {thue_morse(), rudin_shapiro(), baum_sweet(), pattern_11()}; }

CycloElement rat(const CycloField& f, long v) { return CycloElement(f, BigRational(v)); }

using YPoly = std::vector<CycloElement>;

YPoly ypoly_mul(const YPoly& a, const YPoly& b) {
    YPoly out(a.size() + b.size() - 1, CycloElement(a.front().field()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

void ypoly_add(YPoly& acc, const YPoly& b, bool negate) {
    if (acc.size() < b.size()) acc.resize(b.size(), CycloElement(b.front().field()));
    for (std::size_t i = 0; i < b.size(); ++i) acc[i] += negate ? -b[i] : b[i];
}

// det(y I - m) by cofactor expansion along the first row.
YPoly cofactor_char_poly(const CycloMatrix& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
    const CycloField& f = m.field();
    if (rows.empty()) return {rat(f, 1)};
    YPoly total{CycloElement(f)};
    const std::size_t i = rows.front();
    std::vector<std::size_t> rest_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const std::size_t j = cols[c];
        YPoly entry{-m(i, j)};
        if (i == j) entry.push_back(rat(f, 1));
        std::vector<std::size_t> rest_cols = cols;
        rest_cols.erase(rest_cols.begin() + static_cast<long>(c));
        ypoly_add(total, ypoly_mul(entry, cofactor_char_poly(m, rest_rows, rest_cols)), c % 2 == 1);
    }
    while (total.size() > 1 && total.back().is_zero()) total.pop_back();
    return total;
}

YPoly cofactor_char_poly(const CycloMatrix& m) {
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return cofactor_char_poly(m, idx, idx);
}

std::vector<long> rational_coeffs(const Recurrence& rec) {
    std::vector<long> out;
    for (const auto& c : rec.coefficients) {
        REQUIRE(c.is_rational());
        REQUIRE(c.rational_value().get_den() == 1);
        out.push_back(c.rational_value().get_num().get_si());
    }
    return out;
}

std::vector<RootSpec> odd_roots(u64 r_max) {
    std::vector<RootSpec> out;
    for (u64 r = 1; r <= r_max; r += 2)
        for (u64 e = 0; e < r; ++e) out.push_back(RootSpec::make(2, r, e));
    return out;
}

}  // namespace

TEST_CASE("root spec derives r0 and s0") {
    const RootSpec a = RootSpec::make(2, 3, 1);
    CHECK(a.r0 == 3);
    CHECK(a.s0 == 2);
    CHECK(a.s == 2);
    const RootSpec b = RootSpec::make(2, 15, 5);
    CHECK(b.r0 == 3);
    CHECK(b.s == 2);
    CHECK(RootSpec::make(2, 9, 0).r0 == 1);
    CHECK(RootSpec::make(2, 9, 0).s == 1);
    CHECK(RootSpec::make(2, 7, 3, 6).s == 6);
    CHECK(RootSpec::make(3, 10, 5).r0 == 2);
    CHECK(RootSpec::make(3, 10, 5).conductor() == 1);
    CHECK_THROWS_AS(RootSpec::make(2, 6, 1), Error);
    CHECK_THROWS_AS(RootSpec::make(2, 7, 7), Error);
    CHECK_THROWS_AS(RootSpec::make(2, 7, 1, 4), Error);
}

TEST_CASE("partial sums by direct summation") {
    const RootSpec w3 = RootSpec::make(2, 3, 1);
    const CycloField f3(3);
    CHECK(partial_sum_value(thue_morse(), 4, w3) == rat(f3, 3));
    CHECK(partial_sum_value(rudin_shapiro(), 4, w3) == rat(f3, -1));
    for (const Dfao& a : shipped()) CHECK(partial_sum_value(a, 1, w3) == embed(sequence_term(a, 0), f3));
    CHECK_THROWS_AS(partial_sum_value(thue_morse(), 0, w3), Error);
    const CycloField f5(5);
    const RootSpec w5 = RootSpec::make(2, 5, 2);
    CycloElement expect(f5);
    for (u64 m = 0; m < 37; ++m) expect += embed(sequence_term(rudin_shapiro(), m), f5) * w5.omega_power(f5, static_cast<i64>(m));
    CHECK(partial_sum_value(rudin_shapiro(), 37, w5) == expect);
}

TEST_CASE("digit walk agrees with direct summation") {
    std::vector<Dfao> autos = shipped();
    autos.push_back(cyclic5());
    autos.push_back(pattern_dfao(PatternSpec{3, {0, 2}, 3}));
    autos.push_back(pattern_dfao(PatternSpec{2, {0, 1}, 5}));
    for (const Dfao& a : autos) {
        const unsigned k = a.base();
        for (u64 r : {1, 5, 7, 10}) {
            if (std::gcd(static_cast<u64>(k), r) != 1) continue;
            for (u64 e : {u64{0}, u64{1}, r - 1}) {
                if (e >= r) continue;
                const RootSpec root = RootSpec::make(k, r, e);
                PartialSumEvaluator eval(a, root);
                for (u64 n = 1; n < 200; n += 7) CHECK(eval.value(BigInt(n)) == partial_sum_value(a, n, root));
                CHECK(eval.value(BigInt(0)).is_zero());
            }
        }
    }
}

TEST_CASE("characteristic polynomial examples and cofactor oracle") {
    const CycloField f3(3);
    CycloMatrix one(f3, 1, 1);
    one(0, 0) = CycloElement::generator(f3);
    const auto c1 = char_poly(one);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0] == -CycloElement::generator(f3));
    CHECK(c1[1] == rat(f3, 1));

    const Dfao rs = rudin_shapiro();
    const PolyMatrix mhat = reduced_matrix(span_analysis(rs));
    const auto at_w = char_poly(reduced_product_at_root(mhat, Direction::Forward, RootSpec::make(2, 3, 1, 2)));
    CHECK(at_w == std::vector<CycloElement>{rat(f3, 4), rat(f3, -1), rat(f3, 1)});
    const auto at_1 = char_poly(reduced_product_at_root(mhat, Direction::Forward, RootSpec::make(2, 1, 0, 2)));
    CHECK(at_1 == std::vector<CycloElement>{rat(kQ, 4), rat(kQ, -4), rat(kQ, 1)});

    std::mt19937_64 rng(11);
    for (u64 n : {1, 3, 5, 7}) {
        const CycloField f(n);
        for (std::size_t dim = 1; dim <= 4; ++dim) {
            CycloMatrix m(f, dim, dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) m(i, j) = random_element(rng, f);
            const auto fl = char_poly(m);
            CHECK(fl == cofactor_char_poly(m));
            CHECK(matrix_poly_eval(fl, m).is_zero());
        }
    }
}

TEST_CASE("minimal polynomial divides the characteristic polynomial") {
    const CycloField f5(5);
    CycloMatrix scalar = CycloMatrix::identity(f5, 3);
    scalar *= CycloElement::generator(f5);
    const auto mp = minimal_poly(scalar);
    REQUIRE(mp.size() == 2);
    CHECK(mp[0] == -CycloElement::generator(f5));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        CycloMatrix m(f5, 3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = trial % 2 ? random_element(rng, f5) : rat(f5, static_cast<long>(i == j ? trial % 3 : (i < j)));
        const auto mp2 = minimal_poly(m);
        const auto cp = char_poly(m);
        CHECK(mp2.back() == rat(f5, 1));
        CHECK(matrix_poly_eval(mp2, m).is_zero());
        // polynomial long division by the monic minimal polynomial leaves no remainder
        std::vector<CycloElement> rem = cp;
        for (std::size_t top = rem.size(); top-- >= mp2.size();) {
            const CycloElement lead = rem[top];
            for (std::size_t i = 0; i < mp2.size(); ++i) rem[top - mp2.size() + 1 + i] -= lead * mp2[i];
            if (top == mp2.size() - 1) break;
        }
        for (std::size_t i = 0; i + 1 < mp2.size(); ++i) CHECK(rem[i].is_zero());
    }
}

TEST_CASE("Rudin-Shapiro recurrence at a cube root of unity") {
    const Recurrence rec = synthesize(rudin_shapiro(), RootSpec::make(2, 3, 1, 2));
    CHECK(rational_coeffs(rec) == std::vector<long>{4, -1, 1});
    CHECK(rec.order() == 2);
    CHECK(rec.rational_matrix);
    CHECK(rec.to_string("R") == "R(2^4 n) - R(2^2 n) + 4 R(n) = 0");
    CHECK(verify(rec, rudin_shapiro(), 200).all_zero);

    Recurrence corrupted = rec;
    corrupted.coefficients[0] = rat(rec.field(), 5);
    const VerificationReport bad = verify(corrupted, rudin_shapiro(), 10);
    CHECK_FALSE(bad.all_zero);
    REQUIRE(bad.first_failure.has_value());
    CHECK(bad.first_failure->first <= 10);
    CHECK(bad.first_failure->second == partial_sum_value(rudin_shapiro(), bad.first_failure->first, rec.root));
}

TEST_CASE("Thue-Morse recurrences have two terms") {
    for (const RootSpec& root : odd_roots(15)) {
        const Recurrence rec = synthesize(thue_morse(), root);
        REQUIRE(rec.order() == 1);
        CHECK(rec.coefficients[1].is_one());
        const u64 p = u64{1} << root.s;
        CHECK(-rec.coefficients[0] == partial_sum_value(thue_morse(), p, root));
    }
}

TEST_CASE("Baum-Sweet recurrence form") {
    const Dfao bs = baum_sweet();
    const SpanAnalysis span = span_analysis(bs);
    const PolyMatrix mhat = reduced_matrix(span);
    CHECK(mhat.dim() == 2);
    for (const RootSpec& root : odd_roots(21)) {
        const Recurrence rec = synthesize(bs, root);
        REQUIRE(rec.order() == 2);
        const CycloMatrix prod = reduced_product_at_root(mhat, Direction::Backward, root);
        CHECK(rec.coefficients[0] == rat(rec.field(), root.s % 2 ? -1 : 1));
        CHECK(rec.coefficients[1] == -prod.trace());
        CHECK(rec.coefficients[2].is_one());
    }
}

TEST_CASE("synthesized recurrences verify and satisfy Cayley-Hamilton") {
    for (const Dfao& a : shipped()) {
        const PolyMatrix mhat = reduced_matrix(span_analysis(recurrence_automaton(a)));
        for (const RootSpec& root : odd_roots(11)) {
            const Recurrence rec = synthesize(a, root);
            const CycloMatrix prod = reduced_product_at_root(mhat, a.direction(), root);
            CHECK(matrix_poly_eval(rec.coefficients, prod).is_zero());
            CHECK(verify(rec, a, 40).all_zero);
            const Recurrence mini = synthesize(a, root, true);
            CHECK(mini.provenance == Provenance::Minimal);
            CHECK(mini.order() <= rec.order());
            CHECK(verify(mini, a, 20).all_zero);
        }
    }
}

TEST_CASE("larger steps and the cyclic five-state automaton") {
    const RootSpec root = RootSpec::make(2, 7, 1, 6);
    for (const Dfao& a : shipped()) CHECK(verify(synthesize(a, root), a, 30).all_zero);
    const Dfao fig = cyclic5();
    for (const RootSpec& w : {RootSpec::make(2, 5, 1), RootSpec::make(2, 9, 3), RootSpec::make(2, 1, 0)})
        CHECK(verify(synthesize(fig, w), fig, 50).all_zero);
    const Dfao pat3 = pattern_dfao(PatternSpec{3, {0, 2}, 3});
    for (const RootSpec& w : {RootSpec::make(3, 4, 1), RootSpec::make(3, 5, 2)}) {
        const Recurrence rec = synthesize(pat3, w);
        CHECK(verify(rec, pat3, 30).all_zero);
    }
}

TEST_CASE("zero sequence and verification budget") {
    const Dfao z = zero_sequence();
    const Recurrence rec = synthesize(z, RootSpec::make(2, 5, 1));
    CHECK(verify(rec, z, 50).all_zero);
    CHECK(lmin_bound(z) == 1);
    VerifyOptions tight;
    tight.budget = 100;
    CHECK_THROWS_AS(verify(synthesize(rudin_shapiro(), RootSpec::make(2, 3, 1)), rudin_shapiro(), 100, tight), Error);
    try {
        verify(synthesize(rudin_shapiro(), RootSpec::make(2, 3, 1)), rudin_shapiro(), 100, tight);
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::BudgetExceeded);
    }
    VerifyOptions threaded;
    threaded.threads = 3;
    Recurrence corrupted = synthesize(rudin_shapiro(), RootSpec::make(2, 3, 1));
    corrupted.coefficients[0] = rat(corrupted.field(), 5);
    const auto serial = verify(corrupted, rudin_shapiro(), 30);
    const auto parallel = verify(corrupted, rudin_shapiro(), 30, threaded);
    REQUIRE(parallel.first_failure.has_value());
    CHECK(parallel.first_failure->first == serial.first_failure->first);
    CHECK(verify(synthesize(thue_morse(), RootSpec::make(2, 7, 1)), thue_morse(), 60, threaded).all_zero);
}

TEST_CASE("integer recurrences from coset products") {
    const RootSpec w7 = RootSpec::make(2, 7, 1);
    const Recurrence tm = integer_recurrence(thue_morse(), w7);
    CHECK(tm.provenance == Provenance::IntegerProduct);
    const auto tmc = rational_coeffs(tm);
    REQUIRE(tmc.size() == 3);
    CHECK(tmc[2] == 1);
    CHECK(tmc[0] == 7);
    const CycloField f7(7);
    const CycloElement t1 = partial_sum_value(thue_morse(), 8, w7);
    const CycloElement t3 = partial_sum_value(thue_morse(), 8, RootSpec::make(2, 7, 3));
    CHECK(t1 * t3 == rat(f7, 7));
    CHECK(rat(f7, tmc[1]) == -(t1 + t3));
    CHECK(verify(tm, thue_morse(), 100).all_zero);

    const Recurrence rs = integer_recurrence(rudin_shapiro(), RootSpec::make(2, 7, 2));
    CHECK(rs.order() == 4);
    rational_coeffs(rs);
    CHECK(verify(rs, rudin_shapiro(), 100).all_zero);

    for (const Dfao& a : shipped()) {
        const RootSpec w3 = RootSpec::make(2, 3, 2);
        const Recurrence ir = integer_recurrence(a, w3);
        const Recurrence sy = synthesize(a, w3);
        REQUIRE(ir.order() == sy.order());
        for (std::size_t m = 0; m <= ir.order(); ++m)
            CHECK(embed(ir.coefficients[m], sy.field()) == sy.coefficients[m] * BigRational(ir.scale));
    }
    CHECK_THROWS_AS(integer_recurrence(pattern_dfao(PatternSpec{2, {1, 1}, 3}), w7), Error);
}

TEST_CASE("Galois invariance of recurrence coefficients") {
    const GaloisReport rs = galois_invariance_report(synthesize(rudin_shapiro(), RootSpec::make(2, 3, 1)));
    CHECK(rs.invariant);
    CHECK(rs.primitive);
    CHECK(rs.all_rational);

    const Recurrence tm = synthesize(thue_morse(), RootSpec::make(2, 7, 1));
    const GaloisReport g = galois_invariance_report(tm);
    CHECK(g.invariant);
    CHECK_FALSE(g.primitive);
    CHECK(g.coset_representatives == std::vector<u64>{1, 3});
    REQUIRE(g.period_coords.size() == 2);
    const CycloField f7(7);
    CycloElement rebuilt(f7);
    for (std::size_t j = 0; j < 2; ++j) rebuilt += gaussian_period(f7, 2, j) * g.period_coords[0][j];
    CHECK(rebuilt == tm.coefficients[0]);

    CHECK(galois_invariance_report(synthesize(baum_sweet(), RootSpec::make(2, 1, 0))).invariant);
    for (const Dfao& a : shipped())
        for (const RootSpec& root : odd_roots(15)) CHECK(galois_invariance_report(synthesize(a, root)).invariant);
    CHECK_THROWS_AS(galois_invariance_report(synthesize(pattern_dfao(PatternSpec{2, {1, 1}, 3}), RootSpec::make(2, 3, 1))),
                    Error);
}

TEST_CASE("order bounds and the dimension experiment") {
    CHECK(lmin_bound(rudin_shapiro()) == 2);
    CHECK(lmin_bound(baum_sweet()) == 2);
    CHECK(lmin_bound(thue_morse()) == 1);
    CHECK(lmin_bound(pattern_11()) <= 2);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        PatternSpec spec;
        spec.k = 2 + static_cast<unsigned>(rng() % 2);
        spec.m = 2 + rng() % 4;
        spec.v.resize(1 + rng() % 3);
        for (auto& d : spec.v) d = static_cast<unsigned>(rng() % spec.k);
        const std::size_t bound = spec.v.size() + (spec.v.front() == 0 ? 1 : 0);
        CHECK(lmin_bound(pattern_dfao(spec)) <= bound);
    }
    const DimExperiment tm = dim_experiment(thue_morse());
    CHECK(tm.forward_dim == 1);
    CHECK(tm.backward_dim == 1);
    const DimExperiment rs = dim_experiment(rudin_shapiro());
    CHECK(rs.forward_dim == 2);
    CHECK(rs.backward_dim == 2);
    const DimExperiment bs = dim_experiment(baum_sweet());
    CHECK(bs.forward_dim == 2);
    CHECK(bs.backward_dim >= 1);
    CHECK_THROWS_AS(dim_experiment(rudin_shapiro(), 2), Error);
}
