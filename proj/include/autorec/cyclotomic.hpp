#pragma once

// Exact arithmetic in cyclotomic fields Q(w), w = exp(2*pi*i/n), represented in
// the power basis 1, w, ..., w^{phi(n)-1} modulo the n-th cyclotomic polynomial.

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "autorec/arith.hpp"
#include "autorec/ratpoly.hpp"

namespace autorec {

class CycloField {
public:
    /// Q(zeta_n). Any n >= 1 is accepted; callers that merge fields use
    /// normalized_conductor so that equal fields compare equal.
    explicit CycloField(u64 conductor = 1);

    u64 conductor() const noexcept;
    /// phi(conductor), the length of every coordinate vector.
    std::size_t degree() const noexcept;
    const RatPoly& modulus() const noexcept;
    const std::vector<BigInt>& modulus_coeffs() const noexcept;

    friend bool operator==(const CycloField& a, const CycloField& b) noexcept {
        return a.conductor() == b.conductor();
    }

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

class CycloElement {
public:
    /// Zero of the rationals.
    CycloElement();
    /// Zero of `field`.
    explicit CycloElement(CycloField field);
    CycloElement(CycloField field, const BigRational& value);
    /// Coordinates must have exactly field.degree() entries.
    CycloElement(CycloField field, std::vector<BigRational> coords);

    /// The distinguished generator w = zeta_n of the field.
    static CycloElement generator(const CycloField& field);
    /// w^e for any integer e.
    static CycloElement generator_power(const CycloField& field, i64 e);

    const CycloField& field() const noexcept { return field_; }
    const std::vector<BigRational>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Constant coordinate; throws unless is_rational().
    const BigRational& rational_value() const;

    CycloElement& operator+=(const CycloElement& rhs);
    CycloElement& operator-=(const CycloElement& rhs);
    CycloElement& operator*=(const CycloElement& rhs);
    CycloElement& operator*=(const BigRational& c);

    friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
    friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(CycloElement a, const BigRational& c) { return a *= c; }
    friend CycloElement operator-(CycloElement a);
    friend bool operator==(const CycloElement& a, const CycloElement& b);

    CycloElement inverse() const;
    CycloElement pow(u64 e) const;
    /// Multiply by w^e (cheap: no general multiplication needed).
    CycloElement times_generator_power(i64 e) const;

    /// Q-combination of powers of w, e.g. "-1 - w" for w^2 in conductor 3.
    std::string to_string(std::string_view var = "w") const;

private:
    CycloField field_;
    std::vector<BigRational> coords_;
};

/// Reduce an integer vector indexed by exponent modulo x^n - 1 (folding), then modulo Phi_n.
CycloElement reduce_integer_coeffs(const CycloField& field, const std::vector<BigInt>& coeffs);
/// p(w) as an element of the field (p is reduced mod x^n - 1, then mod Phi_n).
CycloElement cyclo_reduce(const CycloField& field, const RatPoly& p);

CycloElement cyclo_inv(const CycloElement& a);

/// zeta_order^exponent as an element of `target`; requires Q(zeta_order) to embed in `target`.
CycloElement root_of_unity(const CycloField& target, u64 order, i64 exponent);

/// zeta_order^exponent = sign * w^power for the generator w of `target`; requires
/// Q(zeta_order) to embed in `target`.
struct GeneratorPower {
    int sign;
    u64 power;
};
GeneratorPower as_generator_power(const CycloField& target, u64 order, i64 exponent);

/// Image of `a` under the inclusion of its field into `target`.
CycloElement embed(const CycloElement& a, const CycloField& target);

/// Smallest field (by normalized conductor) in which all coordinates of `a` can be written.
/// Returns 1 for rational elements, otherwise the field conductor.
u64 coefficient_conductor(const CycloElement& a);

/// The automorphism psi_m : w -> w^m.
class GaloisMap {
public:
    GaloisMap(CycloField field, i64 m);

    const CycloField& field() const noexcept { return field_; }
    u64 exponent() const noexcept { return m_; }

    CycloElement operator()(const CycloElement& a) const;

    /// psi_a o psi_b = psi_{ab}
    friend GaloisMap operator*(const GaloisMap& a, const GaloisMap& b);

private:
    CycloField field_;
    u64 m_;
};

CycloElement galois_apply(const GaloisMap& map, const CycloElement& a);

/// eta_j = sum_{i < s0} w^{u_j k^i}, where u_j is the j-th coset representative of
/// <k> in (Z/nZ)^x (smallest positive member, ascending; u_0 = 1).
CycloElement gaussian_period(const CycloField& field, i64 k, std::size_t j);

struct Rationality {
    enum class Kind { Integer, Rational, Irrational };
    Kind kind;
    BigRational value;  // meaningful unless kind == Irrational
};

Rationality rationality(const CycloElement& a);

std::string to_string(Rationality::Kind kind);

/// 256 significant decimal digits; complex_embed accepts precisions up to this.
using HighPrecisionFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<256>>;
inline constexpr unsigned kMaxEmbedDigits = 256;

struct HighPrecisionComplex {
    HighPrecisionFloat re;
    HighPrecisionFloat im;
};

/// Evaluate `a` at w = exp(2*pi*i/n), accurate to roughly `digits` decimal digits (1..256).
HighPrecisionComplex complex_embed(const CycloElement& a, unsigned digits);

/// Double-precision embedding (evaluated at 40 digits, then rounded).
std::complex<double> to_complex(const CycloElement& a);

/// Elements of Q[x]/(x^n - 1), used to accumulate sums of terms c * w^e cheaply
/// before a single reduction into the field.
class CyclicVector {
public:
    explicit CyclicVector(u64 n);

    u64 size() const noexcept { return coeffs_.size(); }
    const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }

    /// this += c * x^shift * other
    void add_shifted(const CyclicVector& other, u64 shift);
    void add_shifted_scaled(const CyclicVector& other, u64 shift, const BigRational& c);
    /// this += c * x^e
    void add_term(const BigRational& c, u64 e);
    CyclicVector& operator+=(const CyclicVector& other);

    /// Lift an element of Q(zeta_n) to the ring.
    static CyclicVector lift(const CycloElement& a);
    CycloElement reduce(const CycloField& field) const;

private:
    std::vector<BigRational> coeffs_;
};

}  // namespace autorec
