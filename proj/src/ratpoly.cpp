#include "autorec/ratpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "autorec/arith.hpp"
#include "autorec/error.hpp"

namespace autorec {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

RatPoly::RatPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

RatPoly RatPoly::constant(const BigRational& c) { return RatPoly(std::vector<BigRational>{c}); }

RatPoly RatPoly::monomial(const BigRational& c, std::size_t degree) {
    std::vector<BigRational> v(degree + 1);
    v[degree] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::x_pow_minus_one(std::size_t n) {
    std::vector<BigRational> v(n + 1);
    v[0] = -1;
    v[n] += 1;
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool RatPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

BigRational RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

const BigRational& RatPoly::leading() const {
    if (coeffs_.empty()) fail(ErrorCode::Precondition, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

BigRational RatPoly::operator()(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::substitute_power(std::size_t e) const {
    if (coeffs_.empty() || e == 1) return *this;
    if (e == 0) {
        BigRational sum = 0;
        for (const auto& c : coeffs_) sum += c;
        return constant(sum);
    }
    std::vector<BigRational> v((coeffs_.size() - 1) * e + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * e] = coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::truncated(std::size_t n) const {
    std::vector<BigRational> v(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(n, coeffs_.size())));
    return RatPoly(std::move(v));
}

RatPoly RatPoly::reversed(std::size_t deg) const {
    require(degree() <= static_cast<long>(deg), "reversal degree below polynomial degree");
    std::vector<BigRational> v(deg + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[deg - i] = coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return RatPoly(std::move(v));
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) { return *this = *this * rhs; }

RatPoly& RatPoly::operator*=(const BigRational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

RatPoly operator-(RatPoly a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
}

std::string RatPoly::to_string(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigRational& c = coeffs_[i];
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
    return os.str();
}

PolyDivision divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPoly(), a};
    std::vector<BigRational> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<BigRational> quot(rem.size() - db);
    const BigRational lead_inv = 1 / bc.back();
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        const BigRational q = rem[i] * lead_inv;
        quot[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * bc[j];
    }
    rem.resize(db);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(1), s1;
    RatPoly t0, t1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (!r0.is_zero()) {
        const BigRational inv = 1 / r0.leading();
        r0 *= inv;
        s0 *= inv;
        t0 *= inv;
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

std::vector<BigInt> cyclotomic_coeffs(std::size_t n) {
    require(n >= 1, "cyclotomic index must be positive");
    // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}: multiply the numerator factors,
    // then divide exactly by the denominator factors.
    std::vector<BigInt> p{1};
    const auto divs = divisors(n);
    for (u64 d : divs) {
        if (moebius(n / d) != 1) continue;
        std::vector<BigInt> q(p.size() + d);
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i] -= p[i];
            q[i + d] += p[i];
        }
        p = std::move(q);
    }
    for (u64 d : divs) {
        if (moebius(n / d) != -1) continue;
        // p = q * (x^d - 1)  =>  q[i] = q[i - d] - p[i]
        std::vector<BigInt> q(p.size() - d);
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = -p[i];
            if (i >= d) q[i] += q[i - d];
        }
        p = std::move(q);
    }
    return p;
}

RatPoly cyclotomic_poly(std::size_t n) {
    const auto c = cyclotomic_coeffs(n);
    std::vector<BigRational> v(c.begin(), c.end());
    return RatPoly(std::move(v));
}

}  // namespace autorec
