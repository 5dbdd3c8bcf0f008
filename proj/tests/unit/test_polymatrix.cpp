#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "autorec/error.hpp"
#include "autorec/polymatrix.hpp"

using namespace autorec;
using namespace autorec::testing;

namespace {

const CycloField kQ(1);

CycloPoly rp(std::initializer_list<long> coeffs) {
    std::vector<CycloElement> out;
    for (long c : coeffs) out.emplace_back(kQ, BigRational(c));
    return CycloPoly(kQ, std::move(out));
}

PolyMatrix rat_matrix(std::initializer_list<std::initializer_list<std::initializer_list<long>>> rows) {
    PolyMatrix m(kQ, rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const auto& e : row) m(i, j++) = rp(e);
        ++i;
    }
    return m;
}

std::vector<Dfao> shipped() {
    return {thue_morse(), rudin_shapiro(), baum_sweet(), pattern_11(), cyclic5(), pattern_dfao({3, {0, 2}, 3})};
}

}  // namespace

TEST_CASE("transition matrices of the shipped automata") {
    CHECK(transition_matrix(rudin_shapiro()) ==
          rat_matrix({{{1}, {0, 1}, {}, {}}, {{1}, {}, {0, 1}, {}}, {{}, {0, 1}, {}, {1}}, {{}, {}, {0, 1}, {1}}}));
    CHECK(transition_matrix(baum_sweet()) == rat_matrix({{{0, 1}, {1}, {}}, {{1}, {}, {0, 1}}, {{}, {}, {1, 1}}}));
    CHECK(transition_matrix(thue_morse()) == rat_matrix({{{1}, {0, 1}}, {{0, 1}, {1}}}));
}

TEST_CASE("rows of M(1) sum to k") {
    for (const auto& a : shipped()) {
        const auto m1 = transition_matrix(a).evaluate(CycloElement(kQ, BigRational(1)));
        for (std::size_t i = 0; i < a.size(); ++i) {
            CycloElement s(kQ);
            for (std::size_t j = 0; j < a.size(); ++j) s += m1(i, j);
            CHECK(s == CycloElement(kQ, BigRational(a.base())));
        }
    }
}

TEST_CASE("power products") {
    const auto m = transition_matrix(rudin_shapiro());
    CHECK(power_product(m, 2, 0, Side::Left) == PolyMatrix::identity(kQ, 4));
    CHECK(power_product(m, 2, 1, Side::Left) == m);
    CHECK(power_product(m, 2, 1, Side::Right) == m);
    CHECK(power_product(m, 2, 2, Side::Left) == m.substitute_power(2) * m);
    CHECK(power_product(m, 2, 2, Side::Right) == m * m.substitute_power(2));
}

TEST_CASE("power product entries enumerate paths") {
    for (const auto& a : shipped()) {
        const auto m = transition_matrix(a);
        const unsigned k = a.base();
        for (u64 t = 0; t <= 4; ++t) {
            if (ipow(k, t) > 256) continue;
            const auto left = power_product(m, k, t, Side::Left);
            const auto right = power_product(m, k, t, Side::Right);
            PolyMatrix el(kQ, a.size());
            PolyMatrix er(kQ, a.size());
            const CycloElement one(kQ, BigRational(1));
            for (u64 n = 0; n < ipow(k, t); ++n) {
                const Word w = padded(n, k, t);
                for (std::size_t i = 0; i < a.size(); ++i) {
                    const std::size_t j = a.run(i, w);
                    el(i, j) += CycloPoly::monomial(one, word_value(w, k));
                    er(i, j) += CycloPoly::monomial(one, word_value(reversed(w), k));
                }
            }
            CHECK(left == el);
            CHECK(right == er);
            // Coefficient of x^n is M_w for the length-t word with [w]_k = n.
            for (u64 n = 0; n < ipow(k, t); ++n) CHECK(left.coefficient(n) == word_matrix(a, padded(n, k, t)));
        }
    }
}

TEST_CASE("word matrices multiply along concatenation") {
    std::mt19937_64 rng(7);
    for (const auto& a : shipped()) {
        std::uniform_int_distribution<unsigned> digit(0, a.base() - 1);
        std::uniform_int_distribution<int> len(0, 6);
        CHECK(word_matrix(a, {}) == CycloMatrix::identity(kQ, a.size()));
        for (int trial = 0; trial < 50; ++trial) {
            Word v, w;
            for (int i = len(rng); i > 0; --i) v.push_back(digit(rng));
            for (int i = len(rng); i > 0; --i) w.push_back(digit(rng));
            Word vw = v;
            vw.insert(vw.end(), w.begin(), w.end());
            CHECK(word_matrix(a, vw) == word_matrix(a, v) * word_matrix(a, w));
        }
    }
}

TEST_CASE("truncation") {
    const auto tm_hat = rat_matrix({{{1, -1}}});
    const auto p = power_product(tm_hat, 2, 2, Side::Left);
    CHECK(p(0, 0) == rp({1, -1, -1, 1}));
    CHECK(truncate(p, 2, 2, 3)(0, 0) == rp({1, -1, -1}));
    CHECK(truncate(p, 2, 2, 4) == p);
    CHECK(truncated_power(tm_hat, 2, 1) == PolyMatrix::identity(kQ, 1));
    const auto m = transition_matrix(rudin_shapiro());
    CHECK(truncate(m, 2, 1, 2) == m);
    CHECK_THROWS_AS(truncate(p, 2, 2, 2), Error);
    CHECK_THROWS_AS(truncate(p, 2, 2, 5), Error);
}

TEST_CASE("span analysis of the shipped automata") {
    const auto rs = span_analysis(rudin_shapiro());
    CHECK(rs.rank == 2);
    CHECK(rs.generators == std::vector<std::size_t>{0, 1});
    CHECK(rs.dependents == std::vector<std::size_t>{2, 3});
    CHECK(rs.alpha_field == kQ);
    CHECK(rs.alphas[0][0].is_zero());
    CHECK(rs.alphas[0][1] == CycloElement(kQ, BigRational(-1)));
    CHECK(rs.alphas[1][0] == CycloElement(kQ, BigRational(-1)));
    CHECK(rs.alphas[1][1].is_zero());
    CHECK(rs.witness_words.front().empty());
    CHECK(reduced_matrix(rudin_shapiro(), rs) == rat_matrix({{{1}, {0, 1}}, {{1}, {0, -1}}}));

    const auto bs = span_analysis(baum_sweet());
    CHECK(bs.rank == 2);
    CHECK(bs.dependents == std::vector<std::size_t>{2});
    CHECK(bs.alphas[0][0].is_zero());
    CHECK(bs.alphas[0][1].is_zero());
    CHECK(reduced_matrix(bs) == rat_matrix({{{0, 1}, {1}}, {{1}, {}}}));

    const auto tm = span_analysis(thue_morse());
    CHECK(tm.rank == 1);
    CHECK(tm.alphas[0][0] == CycloElement(kQ, BigRational(-1)));
    CHECK(reduced_matrix(tm) == rat_matrix({{{1, -1}}}));
}

TEST_CASE("span analysis edge cases") {
    // All-zero sequence: rank 0, still one generator.
    const auto z = parse_dfao("base: 2\nstates: a b\noutput: a = 0\noutput: b = 0\n"
                              "delta: a 0 -> a\ndelta: a 1 -> b\ndelta: b 0 -> b\ndelta: b 1 -> a\n");
    const auto sz = span_analysis(z);
    CHECK(sz.rank == 0);
    CHECK(sz.generators == std::vector<std::size_t>{0});
    CHECK(reduced_matrix(sz) == rat_matrix({{{1}}}));

    // Inaccessible states are pruned first; full rank keeps M(x).
    const auto a = parse_dfao("base: 2\nstates: a dead b\noutput: a = 1\noutput: dead = 9\noutput: b = 2\n"
                              "delta: a 0 -> a\ndelta: a 1 -> b\ndelta: dead 0 -> a\ndelta: dead 1 -> dead\n"
                              "delta: b 0 -> a\ndelta: b 1 -> b\n");
    const auto sa = span_analysis(a);
    CHECK(sa.automaton.size() == 2);
    CHECK(sa.dependents.empty());
    CHECK(reduced_matrix(a, sa) == transition_matrix(sa.automaton));

    // Irrational dependency coefficients keep the output field.
    const auto p = pattern_dfao({2, {1}, 3});
    const auto sp = span_analysis(p);
    CHECK(sp.rank == 1);
    CHECK(sp.alpha_field == p.field());
    CHECK(sp.alphas[0][0] == root_of_unity(p.field(), 3, 1));
    CHECK(sp.alphas[1][0] == root_of_unity(p.field(), 3, 2));
}

TEST_CASE("dependency coefficients hold on witnesses and random words") {
    std::mt19937_64 rng(99);
    for (const auto& input : shipped()) {
        const auto s = span_analysis(input);
        const auto& a = s.automaton;
        auto check_word = [&](const Word& w) {
            for (std::size_t p = 0; p < s.dependents.size(); ++p) {
                CycloElement rhs(a.field());
                for (std::size_t j = 0; j < s.generators.size(); ++j)
                    rhs += embed(s.alphas[p][j], a.field()) * a.state_function(s.generators[j], w);
                CHECK(a.state_function(s.dependents[p], w) == rhs);
            }
        };
        for (const auto& w : s.witness_words) check_word(w);
        std::uniform_int_distribution<unsigned> digit(0, a.base() - 1);
        for (int trial = 0; trial < 100; ++trial) {
            Word w(std::uniform_int_distribution<int>(0, 12)(rng));
            for (auto& c : w) c = digit(rng);
            check_word(w);
        }
        // Tuple rows are distinct and witness words reproduce them.
        for (std::size_t r = 0; r < s.tuples.size(); ++r)
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(s.tuples[r][i] == a.run(i, s.witness_words[r]));
    }
}

TEST_CASE("polynomial recurrences against word enumeration") {
    for (const auto& input : shipped()) {
        const auto s = span_analysis(input);
        const auto mhat = reduced_matrix(s);
        const CycloField f = s.automaton.field();
        const auto mf = mhat.embed(CycloField(compositum_conductor(f.conductor(), mhat.field().conductor())));
        const CycloField& L = mf.field();
        const unsigned k = s.automaton.base();
        for (u64 u = 1; u <= 3; ++u) {
            const u64 ku = ipow(k, u);
            const auto fk = embed_polys(brute_fhat(s, ku, false), L);
            const auto mr = power_product(mf, k, u, Side::Right);
            for (u64 n = 1; n <= 9; ++n) {
                const auto lhs = embed_polys(brute_fhat(s, ku * n, false), L);
                const auto rhs = mat_vec(truncated_power(mf, k, n).substitute_power(ku), fk);
                CHECK(lhs == rhs);
                const auto lhs_r = embed_polys(brute_fhat(s, ku * n, true), L);
                const auto rhs_r = mat_vec(mr, substitute(embed_polys(brute_fhat(s, n, true), L), ku));
                CHECK(lhs_r == rhs_r);
            }
        }
    }
}

TEST_CASE("Rudin-Shapiro characteristic polynomial and determinant law") {
    const auto mhat = reduced_matrix(span_analysis(rudin_shapiro()));
    const auto c = characteristic_polynomial(power_product(mhat, 2, 2, Side::Left));
    REQUIRE(c.size() == 3);
    CHECK(c[0] == rp({0, 0, 0, 4}));
    CHECK(c[1] == rp({-1, -1, -1, -1}));
    CHECK(c[2] == rp({1}));
    for (u64 s = 1; s <= 3; ++s) {
        const auto det = determinant(power_product(mhat, 2, s, Side::Right));
        const long sign = s % 2 ? -1 : 1;
        CHECK(det == CycloPoly::monomial(CycloElement(kQ, BigRational(sign * (1L << s))), (1ULL << s) - 1));
    }
}

TEST_CASE("polynomial text rendering") {
    CHECK(rp({1, -1, 0, 2}).to_string() == "1 - x + 2*x^3");
    CHECK(rp({}).to_string() == "0");
    CHECK(rp({0, -1}).to_string() == "-x");
    const auto text = rat_matrix({{{1}, {0, 1}}, {{1}, {0, -1}}}).to_string();
    CHECK(text == "[ 1  x  ]\n[ 1  -x ]\n");
}
