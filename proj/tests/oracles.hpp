#pragma once

// Brute-force oracles for the polynomial matrix recurrences: the vectors of
// generator functions F_i(n;x) and F_i^R(n;x) built by word enumeration.

#include <vector>

#include "autorec/polymatrix.hpp"

namespace autorec::testing {

inline Word padded(u64 n, unsigned k, u64 t) {
    Word w = base_digits(n, k);
    Word out(t - w.size(), 0);
    out.insert(out.end(), w.begin(), w.end());
    return out;
}

// F_i(n;x) or F_i^R(n;x) by enumerating the words of length t with [w]_k <= n - 1.
inline CycloPoly brute_f(const Dfao& a, std::size_t i, u64 n, bool reversed_words) {
    const u64 t = scale_exponent(n, a.base());
    std::vector<CycloElement> coeffs;
    for (u64 m = 0; m < n; ++m) {
        Word w = padded(m, a.base(), t);
        if (reversed_words) w = reversed(w);
        coeffs.push_back(a.state_function(i, w));
    }
    return CycloPoly(a.field(), std::move(coeffs));
}

inline std::vector<CycloPoly> brute_fhat(const SpanAnalysis& s, u64 n, bool reversed_words) {
    std::vector<CycloPoly> out;
    for (auto g : s.generators) out.push_back(brute_f(s.automaton, g, n, reversed_words));
    return out;
}

inline std::vector<CycloPoly> mat_vec(const PolyMatrix& m, const std::vector<CycloPoly>& v) {
    std::vector<CycloPoly> out(m.dim(), CycloPoly(m.field()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

inline std::vector<CycloPoly> substitute(const std::vector<CycloPoly>& v, u64 e) {
    std::vector<CycloPoly> out;
    for (const auto& p : v) out.push_back(p.substitute_power(e));
    return out;
}

inline std::vector<CycloPoly> embed_polys(const std::vector<CycloPoly>& v, const CycloField& f) {
    std::vector<CycloPoly> out;
    for (const auto& p : v) out.push_back(p.embed(f));
    return out;
}

inline u64 ipow(u64 k, u64 t) {
    u64 r = 1;
    while (t--) r *= k;
    return r;
}

}  // namespace autorec::testing
