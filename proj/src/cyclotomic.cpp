#include "autorec/cyclotomic.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include <boost/math/constants/constants.hpp>

#include "autorec/error.hpp"

namespace autorec {

struct CycloField::Data {
    u64 conductor;
    std::size_t degree;
    std::vector<BigInt> modulus_int;
    RatPoly modulus;
};

CycloField::CycloField(u64 conductor) {
    require(conductor >= 1, "cyclotomic field conductor must be positive");
    auto coeffs = cyclotomic_coeffs(conductor);
    std::vector<BigRational> q(coeffs.begin(), coeffs.end());
    const std::size_t degree = coeffs.size() - 1;
    data_ = std::make_shared<const Data>(Data{conductor, degree, std::move(coeffs), RatPoly(std::move(q))});
}

u64 CycloField::conductor() const noexcept { return data_->conductor; }
std::size_t CycloField::degree() const noexcept { return data_->degree; }
const RatPoly& CycloField::modulus() const noexcept { return data_->modulus; }
const std::vector<BigInt>& CycloField::modulus_coeffs() const noexcept { return data_->modulus_int; }

namespace {

// Reduce `a` (any length) modulo the monic integer polynomial `phi` in place,
// leaving exactly deg(phi) coordinates.
template <class T>
void reduce_mod_monic(std::vector<T>& a, const std::vector<BigInt>& phi) {
    const std::size_t deg = phi.size() - 1;
    if (a.size() > deg) {
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < deg; ++j)
            if (phi[j] != 0) support.push_back(j);
        for (std::size_t i = a.size(); i-- > deg;) {
            if (a[i] == 0) continue;
            const T c = a[i];
            const std::size_t base = i - deg;
            for (std::size_t j : support) a[base + j] -= c * phi[j];
            a[i] = 0;
        }
    }
    a.resize(deg);
}

template <class T>
std::vector<T> fold_cyclic(const std::vector<T>& a, u64 n) {
    if (a.size() <= n) return a;
    std::vector<T> out(n);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) out[i % n] += a[i];
    return out;
}

void check_same_field(const CycloField& a, const CycloField& b) {
    if (!(a == b))
        fail(ErrorCode::Precondition, "field mismatch: conductor " + std::to_string(a.conductor()) + " vs " +
                                          std::to_string(b.conductor()));
}

// zeta_order^exponent = sign * zeta_target^e; throws if Q(zeta_order) is not inside Q(zeta_target).
std::pair<int, u64> root_exponent(u64 target, u64 order, i64 exponent) {
    require(order >= 1, "root of unity order must be positive");
    u64 b = mod_floor(exponent, order);
    u64 a = order;
    const u64 g = std::gcd(a, b);
    if (b == 0) return {1, 0};
    a /= g;
    b /= g;
    if (target % a == 0) return {1, mul_mod(b, target / a, target)};
    if (a % 4 == 2 && target % (a / 2) == 0) {
        // zeta_{2a'} = -zeta_{a'}^{(a'+1)/2} for odd a'; b is odd here.
        const u64 ap = a / 2;
        const u64 e = mul_mod(b % ap, (ap + 1) / 2, ap);
        return {-1, mul_mod(e, target / ap, target)};
    }
    fail(ErrorCode::Precondition, "Q(zeta_" + std::to_string(order) + ") does not embed in Q(zeta_" +
                                      std::to_string(target) + ")");
}

}  // namespace

// ---------------------------------------------------------------------------

CycloElement::CycloElement() : CycloElement(CycloField(1)) {}

CycloElement::CycloElement(CycloField field) : field_(std::move(field)), coords_(field_.degree()) {}

CycloElement::CycloElement(CycloField field, const BigRational& value) : CycloElement(std::move(field)) {
    coords_[0] = value;
}

CycloElement::CycloElement(CycloField field, std::vector<BigRational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    require(coords_.size() == field_.degree(), "coordinate vector length must equal the field degree");
}

CycloElement CycloElement::generator(const CycloField& field) { return generator_power(field, 1); }

CycloElement CycloElement::generator_power(const CycloField& field, i64 e) {
    const u64 n = field.conductor();
    const u64 ee = mod_floor(e, n);
    if (ee < field.degree()) {
        CycloElement out(field);
        out.coords_[ee] = 1;
        return out;
    }
    std::vector<BigRational> v(ee + 1);
    v[ee] = 1;
    reduce_mod_monic(v, field.modulus_coeffs());
    return CycloElement(field, std::move(v));
}

bool CycloElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CycloElement::is_one() const { return is_rational() && coords_[0] == 1; }

bool CycloElement::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

const BigRational& CycloElement::rational_value() const {
    if (!is_rational()) fail(ErrorCode::Precondition, "element is not rational: " + to_string());
    return coords_[0];
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
    check_same_field(field_, rhs.field_);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
    check_same_field(field_, rhs.field_);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    check_same_field(a.field_, b.field_);
    const std::size_t deg = a.coords_.size();
    if (deg == 1) return CycloElement(a.field_, a.coords_[0] * b.coords_[0]);
    std::vector<BigRational> prod(2 * deg - 1);
    for (std::size_t i = 0; i < deg; ++i) {
        if (a.coords_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (b.coords_[j] == 0) continue;
            prod[i + j] += a.coords_[i] * b.coords_[j];
        }
    }
    reduce_mod_monic(prod, a.field_.modulus_coeffs());
    return CycloElement(a.field_, std::move(prod));
}

CycloElement& CycloElement::operator*=(const CycloElement& rhs) { return *this = *this * rhs; }

CycloElement& CycloElement::operator*=(const BigRational& c) {
    for (auto& x : coords_) x *= c;
    return *this;
}

CycloElement operator-(CycloElement a) {
    for (auto& x : a.coords_) x = -x;
    return a;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
}

CycloElement CycloElement::inverse() const { return cyclo_inv(*this); }

CycloElement CycloElement::pow(u64 e) const {
    CycloElement result(field_, BigRational(1));
    CycloElement base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

CycloElement CycloElement::times_generator_power(i64 e) const {
    const u64 n = field_.conductor();
    const u64 shift = mod_floor(e, n);
    if (shift == 0) return *this;
    std::vector<BigRational> v(n);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] != 0) v[(i + shift) % n] = coords_[i];
    reduce_mod_monic(v, field_.modulus_coeffs());
    return CycloElement(field_, std::move(v));
}

std::string CycloElement::to_string(std::string_view var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const BigRational& c = coords_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigRational mag = negative ? BigRational(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    if (first) return "0";
    return os.str();
}

// ---------------------------------------------------------------------------

CycloElement reduce_integer_coeffs(const CycloField& field, const std::vector<BigInt>& coeffs) {
    std::vector<BigInt> v = fold_cyclic(coeffs, field.conductor());
    reduce_mod_monic(v, field.modulus_coeffs());
    std::vector<BigRational> q(v.begin(), v.end());
    return CycloElement(field, std::move(q));
}

CycloElement cyclo_reduce(const CycloField& field, const RatPoly& p) {
    std::vector<BigRational> v = fold_cyclic(p.coeffs(), field.conductor());
    reduce_mod_monic(v, field.modulus_coeffs());
    return CycloElement(field, std::move(v));
}

CycloElement cyclo_inv(const CycloElement& a) {
    if (a.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in Q(zeta_" +
                                                         std::to_string(a.field().conductor()) + ")");
    if (a.is_rational()) return CycloElement(a.field(), 1 / a.coords()[0]);
    // s*a + t*Phi = 1 since Phi is irreducible and a != 0 mod Phi.
    const auto eg = extended_gcd(RatPoly(a.coords()), a.field().modulus());
    if (eg.gcd.degree() != 0) fail(ErrorCode::Inconsistency, "non-trivial gcd with the cyclotomic modulus");
    return cyclo_reduce(a.field(), eg.s);
}

GeneratorPower as_generator_power(const CycloField& target, u64 order, i64 exponent) {
    const auto [sign, e] = root_exponent(target.conductor(), order, exponent);
    return {sign, e};
}

CycloElement root_of_unity(const CycloField& target, u64 order, i64 exponent) {
    const auto [sign, e] = root_exponent(target.conductor(), order, exponent);
    CycloElement out = CycloElement::generator_power(target, static_cast<i64>(e));
    return sign < 0 ? -out : out;
}

CycloElement embed(const CycloElement& a, const CycloField& target) {
    if (a.field() == target) return a;
    if (a.is_rational()) return CycloElement(target, a.rational_value());
    const u64 n = a.field().conductor();
    CyclicVector acc(target.conductor());
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        if (a.coords()[i] == 0) continue;
        const auto [sign, e] = root_exponent(target.conductor(), n, static_cast<i64>(i));
        acc.add_term(sign < 0 ? BigRational(-a.coords()[i]) : a.coords()[i], e);
    }
    return acc.reduce(target);
}

u64 coefficient_conductor(const CycloElement& a) { return a.is_rational() ? 1 : a.field().conductor(); }

// ---------------------------------------------------------------------------

GaloisMap::GaloisMap(CycloField field, i64 m) : field_(std::move(field)), m_(mod_floor(m, field_.conductor())) {
    if (field_.conductor() > 1 && std::gcd(m_, field_.conductor()) != 1)
        fail(ErrorCode::Precondition, "Galois exponent " + std::to_string(m) + " is not coprime to " +
                                          std::to_string(field_.conductor()));
}

CycloElement GaloisMap::operator()(const CycloElement& a) const {
    check_same_field(field_, a.field());
    const u64 n = field_.conductor();
    if (n <= 2 || m_ == 1) return a;
    CyclicVector acc(n);
    for (std::size_t i = 0; i < a.coords().size(); ++i)
        if (a.coords()[i] != 0) acc.add_term(a.coords()[i], mul_mod(i, m_, n));
    return acc.reduce(field_);
}

GaloisMap operator*(const GaloisMap& a, const GaloisMap& b) {
    check_same_field(a.field_, b.field_);
    const u64 n = a.field_.conductor();
    return GaloisMap(a.field_, static_cast<i64>(n == 1 ? 0 : mul_mod(a.m_, b.m_, n)));
}

CycloElement galois_apply(const GaloisMap& map, const CycloElement& a) { return map(a); }

CycloElement gaussian_period(const CycloField& field, i64 k, std::size_t j) {
    const u64 n = field.conductor();
    const auto reps = coset_representatives(k, n);
    require(j < reps.size(), "Gaussian period index " + std::to_string(j) + " out of range (f = " +
                                 std::to_string(reps.size()) + ")");
    const u64 s0 = multiplicative_order(k, n);
    const u64 kk = mod_floor(k, n);
    CyclicVector acc(n);
    u64 x = reps[j] % n;
    for (u64 i = 0; i < s0; ++i) {
        acc.add_term(BigRational(1), x);
        x = mul_mod(x, kk, n);
    }
    return acc.reduce(field);
}

Rationality rationality(const CycloElement& a) {
    if (!a.is_rational()) return {Rationality::Kind::Irrational, BigRational(0)};
    const BigRational& v = a.coords()[0];
    return {v.get_den() == 1 ? Rationality::Kind::Integer : Rationality::Kind::Rational, v};
}

std::string to_string(Rationality::Kind kind) {
    switch (kind) {
        case Rationality::Kind::Integer: return "Integer";
        case Rationality::Kind::Rational: return "Rational";
        case Rationality::Kind::Irrational: return "Irrational";
    }
    return "?";
}

HighPrecisionComplex complex_embed(const CycloElement& a, unsigned digits) {
    require(digits >= 1 && digits <= kMaxEmbedDigits, "embedding precision must be in 1..256 digits");
    using F = HighPrecisionFloat;
    const u64 n = a.field().conductor();
    const F angle = boost::math::constants::two_pi<F>() / F(n);
    F re = 0, im = 0;
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        const BigRational& c = a.coords()[i];
        if (c == 0) continue;
        const F cf = F(c.get_num().get_str()) / F(c.get_den().get_str());
        const F t = angle * F(i);
        re += cf * cos(t);
        im += cf * sin(t);
    }
    return {re, im};
}

std::complex<double> to_complex(const CycloElement& a) {
    const auto z = complex_embed(a, 40);
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

// ---------------------------------------------------------------------------

CyclicVector::CyclicVector(u64 n) : coeffs_(n) { require(n >= 1, "cyclic ring size must be positive"); }

void CyclicVector::add_shifted(const CyclicVector& other, u64 shift) {
    require(other.size() == size(), "cyclic ring size mismatch");
    const u64 n = size();
    shift %= n;
    for (u64 i = 0; i < n; ++i) {
        if (other.coeffs_[i] == 0) continue;
        u64 j = i + shift;
        if (j >= n) j -= n;
        coeffs_[j] += other.coeffs_[i];
    }
}

void CyclicVector::add_shifted_scaled(const CyclicVector& other, u64 shift, const BigRational& c) {
    require(other.size() == size(), "cyclic ring size mismatch");
    if (c == 0) return;
    const u64 n = size();
    shift %= n;
    for (u64 i = 0; i < n; ++i) {
        if (other.coeffs_[i] == 0) continue;
        u64 j = i + shift;
        if (j >= n) j -= n;
        coeffs_[j] += c * other.coeffs_[i];
    }
}

void CyclicVector::add_term(const BigRational& c, u64 e) { coeffs_[e % size()] += c; }

CyclicVector& CyclicVector::operator+=(const CyclicVector& other) {
    add_shifted(other, 0);
    return *this;
}

CyclicVector CyclicVector::lift(const CycloElement& a) {
    CyclicVector v(a.field().conductor());
    for (std::size_t i = 0; i < a.coords().size(); ++i) v.coeffs_[i] = a.coords()[i];
    return v;
}

CycloElement CyclicVector::reduce(const CycloField& field) const {
    require(field.conductor() == size(), "cyclic ring size does not match the field conductor");
    std::vector<BigRational> v = coeffs_;
    reduce_mod_monic(v, field.modulus_coeffs());
    return CycloElement(field, std::move(v));
}

}  // namespace autorec
