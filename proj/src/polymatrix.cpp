#include "autorec/polymatrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "autorec/error.hpp"

namespace autorec {

// CycloPoly

CycloPoly::CycloPoly(CycloField field) : field_(std::move(field)) {}

CycloPoly::CycloPoly(CycloField field, std::vector<CycloElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require(c.field() == field_, "coefficient field mismatch");
    trim();
}

CycloPoly CycloPoly::constant(const CycloElement& c) { return CycloPoly(c.field(), {c}); }

CycloPoly CycloPoly::monomial(const CycloElement& c, u64 degree) {
    if (c.is_zero()) return CycloPoly(c.field());
    std::vector<CycloElement> coeffs(degree + 1, CycloElement(c.field()));
    coeffs[degree] = c;
    return CycloPoly(c.field(), std::move(coeffs));
}

CycloPoly CycloPoly::from_rational(const CycloField& field, const RatPoly& p) {
    std::vector<CycloElement> coeffs;
    for (long i = 0; i <= p.degree(); ++i) coeffs.emplace_back(field, p.coeff(static_cast<std::size_t>(i)));
    return CycloPoly(field, std::move(coeffs));
}

void CycloPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CycloElement CycloPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : CycloElement(field_); }

bool CycloPoly::has_rational_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CycloElement& c) { return c.is_rational(); });
}

RatPoly CycloPoly::to_rat_poly() const {
    std::vector<BigRational> out;
    for (const auto& c : coeffs_) out.push_back(c.rational_value());
    return RatPoly(std::move(out));
}

CycloPoly& CycloPoly::operator+=(const CycloPoly& rhs) {
    require(field_ == rhs.field_, "polynomial field mismatch");
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), CycloElement(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

CycloPoly& CycloPoly::operator-=(const CycloPoly& rhs) {
    require(field_ == rhs.field_, "polynomial field mismatch");
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), CycloElement(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

CycloPoly& CycloPoly::operator*=(const CycloElement& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

CycloPoly& CycloPoly::operator*=(const BigRational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

CycloPoly operator*(const CycloPoly& a, const CycloPoly& b) {
    require(a.field_ == b.field_, "polynomial field mismatch");
    if (a.is_zero() || b.is_zero()) return CycloPoly(a.field_);
    std::vector<CycloElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, CycloElement(a.field_));
    const bool rational = a.field_.degree() == 1;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            if (rational)
                out[i + j] += b.coeffs_[j] * a.coeffs_[i].rational_value();
            else
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return CycloPoly(a.field_, std::move(out));
}

CycloPoly CycloPoly::substitute_power(u64 m) const {
    require(m >= 1, "substitution exponent must be positive");
    if (m == 1 || coeffs_.size() <= 1) return *this;
    std::vector<CycloElement> out((coeffs_.size() - 1) * m + 1, CycloElement(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * m] = coeffs_[i];
    return CycloPoly(field_, std::move(out));
}

CycloPoly CycloPoly::truncated(u64 n) const {
    if (coeffs_.size() <= n) return *this;
    return CycloPoly(field_, std::vector<CycloElement>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
}

CycloElement CycloPoly::evaluate(const CycloElement& x) const {
    CycloElement acc(x.field());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x;
        acc += autorec::embed(*it, x.field());
    }
    return acc;
}

CycloPoly CycloPoly::embed(const CycloField& target) const {
    if (target == field_) return *this;
    std::vector<CycloElement> out;
    for (const auto& c : coeffs_) out.push_back(autorec::embed(c, target));
    return CycloPoly(target, std::move(out));
}

std::string CycloPoly::to_string(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const CycloElement& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string mono;
        if (i == 1)
            mono = std::string(var);
        else if (i > 1)
            mono = std::string(var) + "^" + std::to_string(i);
        if (c.is_rational()) {
            BigRational v = c.rational_value();
            const bool neg = v < 0;
            if (neg) v = -v;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            if (mono.empty())
                os << v.get_str();
            else if (v == 1)
                os << mono;
            else
                os << v.get_str() << "*" << mono;
        } else {
            if (!first) os << " + ";
            os << "(" << c.to_string() << ")";
            if (!mono.empty()) os << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

// PolyMatrix

PolyMatrix::PolyMatrix(CycloField field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), entries_(dim * dim, CycloPoly(field_)) {}

PolyMatrix PolyMatrix::identity(const CycloField& field, std::size_t dim) {
    PolyMatrix m(field, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = CycloPoly::constant(CycloElement(field, BigRational(1)));
    return m;
}

CycloPoly PolyMatrix::trace() const {
    CycloPoly t(field_);
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

long PolyMatrix::max_degree() const {
    long d = -1;
    for (const auto& e : entries_) d = std::max(d, e.degree());
    return d;
}

bool PolyMatrix::has_rational_coeffs() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const CycloPoly& p) { return p.has_rational_coeffs(); });
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& rhs) {
    require(dim_ == rhs.dim_, "matrix shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

PolyMatrix& PolyMatrix::operator*=(const CycloPoly& c) {
    for (auto& e : entries_) e = e * c;
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    require(a.dim_ == b.dim_, "matrix shape mismatch");
    PolyMatrix out(a.field_, a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
        for (std::size_t l = 0; l < a.dim_; ++l) {
            const CycloPoly& x = a(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < a.dim_; ++j) {
                const CycloPoly& y = b(l, j);
                if (!y.is_zero()) out(i, j) += x * y;
            }
        }
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) { return a.dim_ == b.dim_ && a.entries_ == b.entries_; }

PolyMatrix PolyMatrix::substitute_power(u64 m) const {
    PolyMatrix out(field_, dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].substitute_power(m);
    return out;
}

PolyMatrix PolyMatrix::truncated(u64 n) const {
    PolyMatrix out(field_, dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].truncated(n);
    return out;
}

PolyMatrix PolyMatrix::embed(const CycloField& target) const {
    PolyMatrix out(target, dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].embed(target);
    return out;
}

CycloMatrix PolyMatrix::evaluate(const CycloElement& x) const {
    CycloMatrix out(x.field(), dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(i, j) = (*this)(i, j).evaluate(x);
    return out;
}

CycloMatrix PolyMatrix::coefficient(u64 m) const {
    CycloMatrix out(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(i, j) = (*this)(i, j).coeff(m);
    return out;
}

std::string PolyMatrix::to_string() const {
    std::vector<std::string> cells;
    std::vector<std::size_t> width(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            cells.push_back((*this)(i, j).to_string());
            width[j] = std::max(width[j], cells.back().size());
        }
    std::ostringstream os;
    for (std::size_t i = 0; i < dim_; ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < dim_; ++j) {
            const std::string& c = cells[i * dim_ + j];
            os << c << std::string(width[j] - c.size(), ' ') << (j + 1 < dim_ ? "  " : " ");
        }
        os << "]\n";
    }
    return os.str();
}

// Constructions

PolyMatrix transition_matrix(const Dfao& a) {
    const CycloField q(1);
    PolyMatrix m(q, a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (unsigned d = 0; d < a.base(); ++d)
            m(i, a.next(i, d)) += CycloPoly::monomial(CycloElement(q, BigRational(1)), d);
    return m;
}

CycloMatrix word_matrix(const Dfao& a, const Word& w) {
    const CycloField q(1);
    CycloMatrix m(q, a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m(i, a.run(i, w)) = CycloElement(q, BigRational(1));
    return m;
}

PolyMatrix power_product(const PolyMatrix& m, unsigned k, u64 t, Side side) {
    require(k >= 2, "base must be at least 2");
    PolyMatrix out = PolyMatrix::identity(m.field(), m.dim());
    u64 kp = 1;
    for (u64 i = 0; i < t; ++i) {
        const PolyMatrix factor = m.substitute_power(kp);
        out = side == Side::Left ? factor * out : out * factor;
        if (i + 1 < t) {
            require(kp <= UINT64_MAX / k, "power product scale overflows");
            kp *= k;
        }
    }
    return out;
}

u64 scale_exponent(u64 n, unsigned k) {
    require(n >= 1, "n must be positive");
    u64 t = 0;
    unsigned __int128 kt = 1;
    while (kt < n) {
        kt *= k;
        ++t;
    }
    return t;
}

PolyMatrix truncate(const PolyMatrix& m_kt, unsigned k, u64 t, u64 n) {
    require(n >= 1, "n must be positive");
    require(scale_exponent(n, k) == t,
            "truncation requires k^(t-1) + 1 <= n <= k^t (n = " + std::to_string(n) + ", t = " + std::to_string(t) + ")");
    return m_kt.truncated(n);
}

PolyMatrix truncated_power(const PolyMatrix& m, unsigned k, u64 n) {
    const u64 t = scale_exponent(n, k);
    return truncate(power_product(m, k, t, Side::Left), k, t, n);
}

std::vector<CycloPoly> characteristic_polynomial(const PolyMatrix& m) {
    const CycloPoly one = CycloPoly::constant(CycloElement(m.field(), BigRational(1)));
    return faddeev_leverrier(m, PolyMatrix::identity(m.field(), m.dim()), one);
}

CycloPoly determinant(const PolyMatrix& m) {
    CycloPoly c0 = characteristic_polynomial(m).front();
    return m.dim() % 2 ? c0 * BigRational(-1) : c0;
}

// Span analysis

SpanAnalysis span_analysis(const Dfao& input) {
    Dfao a = prune_inaccessible(input);
    const std::size_t d = a.size();
    const unsigned k = a.base();

    // BFS over d-tuples (delta(q_0, w), ..., delta(q_{d-1}, w)) starting from the identity.
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<Word> words;
    std::map<std::vector<std::size_t>, std::size_t> seen;
    std::vector<std::size_t> start(d);
    for (std::size_t i = 0; i < d; ++i) start[i] = i;
    seen.emplace(start, 0);
    tuples.push_back(start);
    words.emplace_back();
    for (std::size_t head = 0; head < tuples.size(); ++head)
        for (unsigned j = 0; j < k; ++j) {
            std::vector<std::size_t> next(d);
            for (std::size_t i = 0; i < d; ++i) next[i] = a.next(tuples[head][i], j);
            if (seen.emplace(next, tuples.size()).second) {
                Word w = words[head];
                w.push_back(j);
                tuples.push_back(std::move(next));
                words.push_back(std::move(w));
            }
        }

    const CycloField& field = a.field();
    CycloMatrix values(field, tuples.size(), d);
    for (std::size_t r = 0; r < tuples.size(); ++r)
        for (std::size_t i = 0; i < d; ++i) values(r, i) = a.output(tuples[r][i]);

    // Distinct value rows carry the same column relations.
    std::vector<std::size_t> distinct;
    for (std::size_t r = 0; r < tuples.size(); ++r) {
        bool dup = false;
        for (auto s : distinct) {
            bool same = true;
            for (std::size_t i = 0; i < d && same; ++i) same = values(r, i) == values(s, i);
            if (same) {
                dup = true;
                break;
            }
        }
        if (!dup) distinct.push_back(r);
    }
    CycloMatrix reduced(field, distinct.size(), d);
    for (std::size_t r = 0; r < distinct.size(); ++r)
        for (std::size_t i = 0; i < d; ++i) reduced(r, i) = values(distinct[r], i);
    const auto pivots = rref_in_place(reduced);

    std::vector<std::size_t> generators = pivots;
    if (generators.empty() || generators.front() != 0) {
        // Only possible when f_0 vanishes, and then (all states accessible) every f_i does.
        require(pivots.empty(), "internal: f_0 is not a generator");
        generators = {0};
    }
    std::vector<std::size_t> dependents;
    for (std::size_t i = 0; i < d; ++i)
        if (std::find(generators.begin(), generators.end(), i) == generators.end()) dependents.push_back(i);

    // Pivot columns form an identity block in the RREF, so column p reads off its coordinates.
    std::vector<std::vector<CycloElement>> alphas;
    bool rational = true;
    for (auto p : dependents) {
        std::vector<CycloElement> row;
        for (std::size_t j = 0; j < generators.size(); ++j)
            row.push_back(pivots.empty() ? CycloElement(field) : reduced(j, p));
        for (const auto& x : row) rational = rational && x.is_rational();
        alphas.push_back(std::move(row));
    }
    CycloField alpha_field = field;
    if (rational) {
        alpha_field = CycloField(1);
        for (auto& row : alphas)
            for (auto& x : row) x = CycloElement(alpha_field, x.rational_value());
    }

    return SpanAnalysis{std::move(a),           std::move(words),    std::move(tuples),
                        std::move(values),      pivots.size(),       std::move(generators),
                        std::move(dependents),  std::move(alphas),   std::move(alpha_field)};
}

PolyMatrix reduced_matrix(const SpanAnalysis& s) {
    const PolyMatrix m = transition_matrix(s.automaton).embed(s.alpha_field);
    if (s.dependents.empty()) return m;
    const std::size_t c1 = s.generators.size();
    PolyMatrix out(s.alpha_field, c1);
    for (std::size_t i = 0; i < c1; ++i)
        for (std::size_t j = 0; j < c1; ++j) {
            CycloPoly e = m(s.generators[i], s.generators[j]);
            for (std::size_t p = 0; p < s.dependents.size(); ++p)
                if (!s.alphas[p][j].is_zero()) e += m(s.generators[i], s.dependents[p]) * s.alphas[p][j];
            out(i, j) = std::move(e);
        }
    return out;
}

PolyMatrix reduced_matrix(const Dfao& a, const SpanAnalysis& s) {
    require(prune_inaccessible(a) == s.automaton, "span analysis was computed for a different automaton");
    return reduced_matrix(s);
}

}  // namespace autorec
