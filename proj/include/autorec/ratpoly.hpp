#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace autorec {

using BigInt = mpz_class;
/// Arbitrary-precision rational; gmpxx keeps arithmetic results canonical.
using BigRational = mpq_class;

/// Exact rational from numerator/denominator, reduced to lowest terms.
BigRational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const BigRational& q);

/// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<BigRational> coeffs);
    RatPoly(std::initializer_list<long> coeffs);

    static RatPoly constant(const BigRational& c);
    static RatPoly monomial(const BigRational& c, std::size_t degree);
    /// x^n - 1
    static RatPoly x_pow_minus_one(std::size_t n);

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const;
    const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
    BigRational coeff(std::size_t i) const;
    const BigRational& leading() const;

    BigRational operator()(const BigRational& x) const;

    /// p(x^e)
    RatPoly substitute_power(std::size_t e) const;
    /// Drop every monomial of degree >= n.
    RatPoly truncated(std::size_t n) const;
    /// x^deg * p(1/x) for deg >= degree().
    RatPoly reversed(std::size_t deg) const;

    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const RatPoly& rhs);
    RatPoly& operator*=(const BigRational& c);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(RatPoly a, const BigRational& c) { return a *= c; }
    friend RatPoly operator-(RatPoly a);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(std::string_view var = "x") const;

private:
    void trim();

    std::vector<BigRational> coeffs_;
};

struct PolyDivision {
    RatPoly quotient;
    RatPoly remainder;
};

/// Euclidean division; throws Error(DivisionByZero) for a zero divisor.
PolyDivision divmod(const RatPoly& a, const RatPoly& b);

struct ExtendedGcd {
    RatPoly gcd;  // monic (or zero)
    RatPoly s;
    RatPoly t;  // s*a + t*b = gcd
};

ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b);

/// The n-th cyclotomic polynomial.
RatPoly cyclotomic_poly(std::size_t n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<BigInt> cyclotomic_coeffs(std::size_t n);

}  // namespace autorec
