#pragma once

// Deterministic finite automata with output (DFAO) over the digit alphabet
// {0, ..., k-1}, with cyclotomic output values.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autorec/cyclotomic.hpp"

namespace autorec {

enum class Direction { Forward, Backward };

std::string_view to_string(Direction d) noexcept;

/// Digits, most significant first. The empty word is allowed.
using Word = std::vector<unsigned>;

/// (n)_k: base-k expansion without leading zeros; empty for n = 0.
Word base_digits(u64 n, unsigned k);
Word base_digits(const BigInt& n, unsigned k);
/// [w]_k (leading zeros allowed).
u64 word_value(const Word& w, unsigned k);
Word reversed(Word w);

/// An output value: a rational number or a root of unity zeta(m)^e.
/// Stored in normal form: e in 1..m-1, gcd(m, e) = 1, m >= 3; roots of order
/// 1 and 2 become the rationals 1 and -1.
class OutputValue {
public:
    OutputValue() = default;
    explicit OutputValue(BigRational value) : value_(std::move(value)) {}

    static OutputValue root(u64 order, i64 exponent);

    bool is_root() const noexcept { return order_ != 0; }
    u64 order() const noexcept { return order_; }
    u64 exponent() const noexcept { return exponent_; }
    const BigRational& rational() const noexcept { return value_; }

    /// Normalized conductor of the smallest cyclotomic field holding the value.
    u64 conductor() const noexcept;
    CycloElement in_field(const CycloField& field) const;
    /// "-1", "3/2", "zeta(5)^2"
    std::string to_string() const;

    friend bool operator==(const OutputValue& a, const OutputValue& b) {
        return a.order_ == b.order_ && a.exponent_ == b.exponent_ && a.value_ == b.value_;
    }

private:
    BigRational value_{0};
    u64 order_ = 0;
    u64 exponent_ = 0;
};

class Dfao {
public:
    /// `delta` is row-major: delta[q * base + digit]. State 0 is the initial state.
    Dfao(unsigned base, Direction direction, std::vector<std::string> states, std::vector<std::size_t> delta,
         std::vector<OutputValue> outputs);

    unsigned base() const noexcept { return base_; }
    Direction direction() const noexcept { return direction_; }
    std::size_t size() const noexcept { return states_.size(); }
    const std::vector<std::string>& state_names() const noexcept { return states_; }
    std::optional<std::size_t> find_state(std::string_view name) const;

    std::size_t next(std::size_t q, unsigned digit) const { return delta_[q * base_ + digit]; }
    /// delta(q, w), reading w left to right.
    std::size_t run(std::size_t q, const Word& w) const;
    const std::vector<std::size_t>& transitions() const noexcept { return delta_; }

    /// Common field of all outputs.
    const CycloField& field() const noexcept { return field_; }
    const OutputValue& output_value(std::size_t q) const { return output_values_[q]; }
    const std::vector<OutputValue>& output_values() const noexcept { return output_values_; }
    const CycloElement& output(std::size_t q) const { return outputs_[q]; }

    /// f_q(w) = tau(delta(q, w)).
    const CycloElement& state_function(std::size_t q, const Word& w) const { return outputs_[run(q, w)]; }

    Dfao with_direction(Direction d) const;

    friend bool operator==(const Dfao& a, const Dfao& b);

private:
    unsigned base_;
    Direction direction_;
    std::vector<std::string> states_;
    std::vector<std::size_t> delta_;
    std::vector<OutputValue> output_values_;
    CycloField field_;
    std::vector<CycloElement> outputs_;
};

/// Parse the line-oriented DFAO description format. Throws SyntaxError (with
/// line and column) or Error(Semantic) naming the offending state or digit.
Dfao parse_dfao(std::string_view text);
Dfao load_dfao(const std::string& path);
/// Normalized text form; parse_dfao(format_dfao(a)) == a.
std::string format_dfao(const Dfao& a);

/// a(n): feeds (n)_k, reversed first for backward automata.
CycloElement sequence_term(const Dfao& a, u64 n);
std::vector<CycloElement> sequence_prefix(const Dfao& a, std::size_t count);

inline constexpr std::size_t kDefaultReversalCap = 100000;

/// Automaton of the opposite direction inducing the same sequence. States are the
/// word-induced transformations Q -> Q reachable from the identity.
Dfao reverse_dfao(const Dfao& a, std::size_t state_cap = kDefaultReversalCap);

/// Prepend a fresh initial state q0' with delta(q0', 0) = q0' that otherwise
/// behaves like q0. The result is forward and induces tau(delta(q0, (n)_k)).
Dfao add_initial_state(const Dfao& a);

/// Drop states not reachable from the initial state; order is preserved.
Dfao prune_inaccessible(const Dfao& a);

/// Whether padding with leading zeros never changes the output: delta(q0, 0) = q0
/// for forward automata, tau(delta(q, 0)) = tau(q) on accessible states for backward ones.
bool ignores_leading_zeros(const Dfao& a);

/// An automaton inducing n -> sequence_term(a, n) for every expansion of n, leading
/// zeros included. Returns `a` itself when it already does.
Dfao make_inducing(const Dfao& a);

std::vector<std::size_t> accessible_states(const Dfao& a);

struct PatternSpec {
    unsigned k = 2;
    Word v;
    u64 m = 2;
};

/// Forward automaton for a(n) = xi_m^{e_{k:v}(n)}, counting possibly overlapping
/// occurrences of v in (n)_k. States (p, t) are numbered p * |v| + t; when v starts
/// with 0 an extra initial state is prepended.
Dfao pattern_dfao(const PatternSpec& spec);

/// Number of possibly overlapping occurrences of v in w.
std::size_t count_occurrences(const Word& w, const Word& v);

/// A partial map rho on states; image[q] is set exactly for q in the domain Q'.
struct StateMap {
    std::vector<std::optional<std::size_t>> image;
};

/// sum_{(q, c) in terms} c * f_q = 0 as finite-state functions.
struct StateRelation {
    std::vector<std::pair<std::size_t, CycloElement>> terms;
};

struct SymmetryReport {
    bool commutes = false;
    /// First (q, digit) with delta(rho(q), digit) != rho(delta(q, digit)).
    std::optional<std::pair<std::size_t, unsigned>> violation;
    /// Least m >= 1 with rho^m = rho^j for some j < m on Q'.
    std::size_t period = 0;
    /// delta({q'} x Sigma^*), ascending.
    std::vector<std::size_t> orbit;
    /// Basis of the beta with sum_i beta_i tau(rho^i(q)) = 0 for every q in the orbit.
    std::vector<std::vector<CycloElement>> output_relations;
    /// The induced relations sum_i beta_i f_{rho^i(q)} = 0, one per (beta, q).
    std::vector<StateRelation> induced_relations;
};

/// Exhaustive check of delta(rho(q), j) = rho(delta(q, j)) on Q'. Throws
/// Error(Precondition) when Q' is not closed under delta or q' is outside Q'.
SymmetryReport check_symmetry(const Dfao& a, const StateMap& rho, std::size_t q_prime);

}  // namespace autorec
