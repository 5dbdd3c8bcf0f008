#pragma once

// Polynomial transition matrices of a DFAO, their ordered products and
// truncations, and the span analysis that reduces M(x) to M^(x).

#include <cstddef>
#include <string>
#include <vector>

#include "autorec/automaton.hpp"
#include "autorec/linalg.hpp"

namespace autorec {

/// Univariate polynomial with coefficients in a cyclotomic field, lowest degree first.
class CycloPoly {
public:
    explicit CycloPoly(CycloField field = CycloField(1));
    CycloPoly(CycloField field, std::vector<CycloElement> coeffs);

    static CycloPoly constant(const CycloElement& c);
    static CycloPoly monomial(const CycloElement& c, u64 degree);
    static CycloPoly from_rational(const CycloField& field, const RatPoly& p);

    const CycloField& field() const noexcept { return field_; }
    const std::vector<CycloElement>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    CycloElement coeff(std::size_t i) const;
    bool has_rational_coeffs() const;
    /// Requires has_rational_coeffs().
    RatPoly to_rat_poly() const;

    CycloPoly& operator+=(const CycloPoly& rhs);
    CycloPoly& operator-=(const CycloPoly& rhs);
    CycloPoly& operator*=(const CycloElement& c);
    CycloPoly& operator*=(const BigRational& c);
    friend CycloPoly operator+(CycloPoly a, const CycloPoly& b) { return a += b; }
    friend CycloPoly operator-(CycloPoly a, const CycloPoly& b) { return a -= b; }
    friend CycloPoly operator*(const CycloPoly& a, const CycloPoly& b);
    friend CycloPoly operator*(CycloPoly a, const BigRational& c) { return a *= c; }
    friend CycloPoly operator*(CycloPoly a, const CycloElement& c) { return a *= c; }
    friend bool operator==(const CycloPoly& a, const CycloPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// p(x^m)
    CycloPoly substitute_power(u64 m) const;
    /// Drop all monomials of degree >= n.
    CycloPoly truncated(u64 n) const;
    /// p(x) for x in a field containing the coefficient field.
    CycloElement evaluate(const CycloElement& x) const;
    CycloPoly embed(const CycloField& target) const;

    /// "1 + x", "(-1 - w)*x^2"
    std::string to_string(std::string_view var = "x") const;

private:
    void trim();

    CycloField field_;
    std::vector<CycloElement> coeffs_;
};

/// Square matrix of CycloPoly entries over a common coefficient field.
class PolyMatrix {
public:
    PolyMatrix(CycloField field, std::size_t dim);

    static PolyMatrix identity(const CycloField& field, std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rows() const noexcept { return dim_; }
    const CycloField& field() const noexcept { return field_; }

    CycloPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const CycloPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    CycloPoly trace() const;
    long max_degree() const;
    bool has_rational_coeffs() const;

    PolyMatrix& operator+=(const PolyMatrix& rhs);
    PolyMatrix& operator*=(const CycloPoly& c);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    PolyMatrix substitute_power(u64 m) const;
    PolyMatrix truncated(u64 n) const;
    PolyMatrix embed(const CycloField& target) const;
    CycloMatrix evaluate(const CycloElement& x) const;
    /// Coefficient matrix of x^m.
    CycloMatrix coefficient(u64 m) const;

    /// Aligned human-readable rows.
    std::string to_string() const;

private:
    CycloField field_;
    std::size_t dim_;
    std::vector<CycloPoly> entries_;
};

enum class Side { Left, Right };

/// m_ij(x) = sum of x^a over digits a with delta(q_i, a) = q_j; rational coefficients.
PolyMatrix transition_matrix(const Dfao& a);

/// M_w: entry (i, j) is 1 iff delta(q_i, w) = q_j.
CycloMatrix word_matrix(const Dfao& a, const Word& w);

/// Left: M(x^{k^{t-1}}) ... M(x^k) M(x).  Right: M(x) M(x^k) ... M(x^{k^{t-1}}).
PolyMatrix power_product(const PolyMatrix& m, unsigned k, u64 t, Side side);

/// Least t with n <= k^t.
u64 scale_exponent(u64 n, unsigned k);

/// M(n;x) from M(k^t;x): drop monomials of degree >= n. Requires k^{t-1} + 1 <= n <= k^t
/// (n = 1 with t = 0).
PolyMatrix truncate(const PolyMatrix& m_kt, unsigned k, u64 t, u64 n);

/// M(n;x) computed from M(x): power_product at the minimal scale, then truncate.
PolyMatrix truncated_power(const PolyMatrix& m, unsigned k, u64 n);

/// det by the trace recursion (no division other than by integers).
CycloPoly determinant(const PolyMatrix& m);
/// Coefficients C_0(x), ..., C_n(x) of det(y I - M(x)), C_n = 1.
std::vector<CycloPoly> characteristic_polynomial(const PolyMatrix& m);

struct SpanAnalysis {
    /// The analysed automaton (inaccessible states removed).
    Dfao automaton;
    /// One witness word per distinct d-tuple, in discovery order; the first is the empty word.
    std::vector<Word> witness_words;
    std::vector<std::vector<std::size_t>> tuples;
    /// values(j, i) = f_i(w_j)
    CycloMatrix values;
    std::size_t rank = 0;
    /// Generating states, ascending; always starts with 0. Size c + 1 = max(rank, 1).
    std::vector<std::size_t> generators;
    /// The remaining states, ascending.
    std::vector<std::size_t> dependents;
    /// alphas[p][j]: f_{dependents[p]} = sum_j alphas[p][j] f_{generators[j]}.
    std::vector<std::vector<CycloElement>> alphas;
    /// Q when every alpha is rational, otherwise the output field.
    CycloField alpha_field;

    std::size_t reduced_dim() const noexcept { return generators.size(); }
};

SpanAnalysis span_analysis(const Dfao& a);

/// M^(x) of size c + 1, rows and columns ordered as s.generators.
PolyMatrix reduced_matrix(const SpanAnalysis& s);
/// Same, checking that s was computed from a.
PolyMatrix reduced_matrix(const Dfao& a, const SpanAnalysis& s);

}  // namespace autorec
