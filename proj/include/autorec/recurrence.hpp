#pragma once

// Recurrences sum_m C_m(w) A(k^{ms} n; w) = 0 for the partial sums
// A(n; x) = sum_{m < n} a(m) x^m of an automatic sequence at a root of unity w.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autorec/automaton.hpp"
#include "autorec/linalg.hpp"
#include "autorec/polymatrix.hpp"

namespace autorec {

/// w = zeta_r^e together with the base k and the step s.
struct RootSpec {
    unsigned k = 2;
    u64 r = 1;
    u64 e = 0;
    /// Order of w: r / gcd(r, e).
    u64 r0 = 1;
    /// Multiplicative order of k modulo r0.
    u64 s0 = 1;
    u64 s = 1;

    /// Validates gcd(k, r) = 1 and 0 <= e < r; s = 0 selects s0, otherwise s must
    /// be a positive multiple of s0.
    static RootSpec make(unsigned k, u64 r, u64 e, u64 s = 0);

    /// Normalized conductor of Q(w).
    u64 conductor() const;
    CycloField field() const { return CycloField(conductor()); }
    /// w^j in `target`, which must contain Q(w).
    CycloElement omega_power(const CycloField& target, i64 j) const;
};

enum class Provenance { Characteristic, Minimal, IntegerProduct };

std::string_view to_string(Provenance p) noexcept;

struct Recurrence {
    RootSpec root;
    /// C_0 ... C_l, all in one field; C_l != 0.
    std::vector<CycloElement> coefficients;
    Provenance provenance = Provenance::Characteristic;
    /// For IntegerProduct: the lcm of denominators the product was multiplied by.
    BigInt scale{1};
    /// Whether M^ had rational coefficients (the hypothesis of the Galois results).
    bool rational_matrix = false;

    std::size_t order() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    const CycloField& field() const { return coefficients.front().field(); }
    /// "R(2^4 n) - R(2^2 n) + 4 R(n) = 0" style rendering with A as the sequence name.
    std::string to_string(std::string_view name = "A") const;
};

struct VerificationReport {
    u64 n_max = 0;
    bool all_zero = true;
    /// (n, residual)
    std::optional<std::pair<u64, CycloElement>> first_failure;
};

/// sum_{m < n} a(m) w^m by direct summation.
CycloElement partial_sum_value(const Dfao& a, u64 n, const RootSpec& root);

/// A(N; w) for arbitrary N via a digit walk over cached block sums
/// G_j(q) = sum_{|u| = j} tau(delta(q, u)) w^{[u]_k}.
class PartialSumEvaluator {
public:
    PartialSumEvaluator(const Dfao& a, const RootSpec& root);

    /// Field holding w and every output.
    const CycloField& field() const noexcept { return field_; }
    CycloElement value(const BigInt& n);
    /// Precompute block sums for all N below k^length; value() is then read-only.
    void reserve_digits(std::size_t length);
    CycloElement value_const(const BigInt& n) const;

private:
    /// Elements of Z[x]/(x^N - 1) carrying the common denominator denominator_.
    using Ring = std::vector<BigInt>;

    Ring walk(const Word& digits) const;
    void add_term(Ring& acc, const Ring& v, u64 residue) const;
    CycloElement finish(const Ring& acc) const;

    Dfao automaton_;
    RootSpec root_;
    CycloField field_;
    u64 ring_size_;
    BigInt denominator_{1};
    /// w^c = sign * x^power for c mod r
    std::vector<GeneratorPower> powers_;
    std::vector<u64> k_powers_;  // k^j mod r
    std::vector<std::vector<Ring>> blocks_;
};

/// Monic det(y I - m) as C_0, ..., C_n.
std::vector<CycloElement> char_poly(const CycloMatrix& m);
/// Monic minimal polynomial from the first linear dependence among I, m, m^2, ...
std::vector<CycloElement> minimal_poly(const CycloMatrix& m);
/// sum_i c_i m^i
CycloMatrix matrix_poly_eval(const std::vector<CycloElement>& c, const CycloMatrix& m);

/// M^(k^s; w): Left product for forward automata, Right for backward ones, over the
/// compositum of Q(w) and the coefficient field of M^.
CycloMatrix reduced_product_at_root(const PolyMatrix& mhat, Direction direction, const RootSpec& root);

/// The analysed form of `a`: leading-zero insensitive, as used by synthesize.
Dfao recurrence_automaton(const Dfao& a);

Recurrence synthesize(const Dfao& a, const RootSpec& root, bool use_minimal = false);

struct VerifyOptions {
    /// Upper bound on digit steps (evaluations times digits times base); 0 disables.
    u64 budget = 200'000'000;
    unsigned threads = 1;
};

/// Checks sum_m C_m A(k^{ms} n; w) = 0 for n = 1 .. n_max. Throws Error(BudgetExceeded)
/// before starting when the estimated work exceeds the budget.
VerificationReport verify(const Recurrence& rec, const Dfao& a, u64 n_max, const VerifyOptions& options = {});

/// prod_j C(w^{u_j}, y) over coset representatives u_j of <k> in (Z/r0Z)^x, scaled to
/// integer coefficients. Requires M^ with rational coefficients.
Recurrence integer_recurrence(const Dfao& a, const RootSpec& root);

struct GaloisReport {
    bool invariant = true;
    /// k generates (Z/r0Z)^x, so every coefficient is rational.
    bool primitive = false;
    bool all_rational = true;
    std::vector<Rationality> rationality;
    /// Coordinates over eta_0 .. eta_{f-1} per coefficient; empty unless r0 is squarefree.
    std::vector<std::vector<BigRational>> period_coords;
    std::vector<u64> coset_representatives;
};

/// psi_k-invariance of every coefficient. Throws Error(Precondition) without a rational
/// M^ and Error(Inconsistency) when invariance fails.
GaloisReport galois_invariance_report(const Recurrence& rec);

/// dim span{f_0, ..., f_{d-1}} (at least 1) after pruning; an upper bound for the
/// minimal order.
std::size_t lmin_bound(const Dfao& a);

struct DimExperiment {
    std::size_t forward_dim = 0;
    std::size_t backward_dim = 0;
    std::size_t forward_states = 0;
    std::size_t backward_states = 0;
};

/// Span dimensions of a and of reverse_dfao(a).
DimExperiment dim_experiment(const Dfao& a, std::size_t state_cap = kDefaultReversalCap);

}  // namespace autorec
