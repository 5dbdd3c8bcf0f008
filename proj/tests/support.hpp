#pragma once

// Shared test helpers: deterministic random generators and the bundled automata.

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "autorec/cyclotomic.hpp"

#ifndef AUTOREC_DATA_DIR
#define AUTOREC_DATA_DIR "data"
#endif

namespace autorec::testing {

inline std::string data_path(const std::string& name) { return std::string(AUTOREC_DATA_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline BigRational random_rational(std::mt19937_64& rng, int bound = 6, int max_den = 3) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, max_den);
    return make_rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline CycloElement random_element(std::mt19937_64& rng, const CycloField& field, int bound = 6, int max_den = 3) {
    std::vector<BigRational> coords(field.degree());
    for (auto& c : coords) c = random_rational(rng, bound, max_den);
    return CycloElement(field, std::move(coords));
}

inline CycloElement random_nonzero_element(std::mt19937_64& rng, const CycloField& field) {
    for (;;) {
        auto a = random_element(rng, field);
        if (!a.is_zero()) return a;
    }
}

/// Reference value of sum_i c_i exp(2 pi i j / n) in double precision, used only as
/// an approximate cross-check.
inline std::complex<double> naive_embed(const CycloElement& a) {
    const double n = static_cast<double>(a.field().conductor());
    std::complex<double> z = 0;
    for (std::size_t i = 0; i < a.coords().size(); ++i)
        z += a.coords()[i].get_d() * std::polar(1.0, 2.0 * 3.14159265358979323846 * static_cast<double>(i) / n);
    return z;
}

}  // namespace autorec::testing

#include "autorec/automaton.hpp"

namespace autorec::testing {

inline Dfao thue_morse() { return load_dfao(data_path("thue_morse.dfao")); }
inline Dfao rudin_shapiro() { return load_dfao(data_path("rudin_shapiro.dfao")); }
inline Dfao baum_sweet() { return load_dfao(data_path("baum_sweet.dfao")); }
inline Dfao cyclic5() { return load_dfao(data_path("cyclic5.dfao")); }
inline Dfao pattern_11() { return pattern_dfao(PatternSpec{2, {1, 1}, 2}); }

inline int tm_direct(u64 n) { return __builtin_popcountll(n) % 2 ? -1 : 1; }

inline int rs_direct(u64 n) {
    int count = 0;
    for (u64 x = n; x; x >>= 1)
        if ((x & 3U) == 3U) ++count;
    return count % 2 ? -1 : 1;
}

inline int bs_direct(u64 n) {
    if (n == 0) return 1;
    int run = 0;
    for (u64 x = n; x; x >>= 1) {
        if (x & 1U) {
            if (run % 2) return 0;
            run = 0;
        } else {
            ++run;
        }
    }
    return 1;
}

}  // namespace autorec::testing
