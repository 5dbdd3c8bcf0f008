#include "autorec/recurrence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include "autorec/error.hpp"

namespace autorec {

namespace {

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

std::vector<CycloElement> embed_all(const std::vector<CycloElement>& v, const CycloField& f) {
    std::vector<CycloElement> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(embed(c, f));
    return out;
}

/// Product of polynomials in y, lowest degree first.
std::vector<CycloElement> poly_mul(const std::vector<CycloElement>& a, const std::vector<CycloElement>& b) {
    const CycloField& f = a.front().field();
    std::vector<CycloElement> out(a.size() + b.size() - 1, CycloElement(f));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::string power_label(unsigned k, u64 e) {
    if (e == 0) return "n";
    return std::to_string(k) + "^" + std::to_string(e) + " n";
}

}  // namespace

RootSpec RootSpec::make(unsigned k, u64 r, u64 e, u64 s) {
    require(k >= 2, "base must be at least 2");
    require(r >= 1, "modulus r must be positive");
    require(e < r, "root exponent " + std::to_string(e) + " must be below r = " + std::to_string(r));
    require(gcd_u64(k, r) == 1,
            "gcd(k, r) = " + std::to_string(gcd_u64(k, r)) + " for k = " + std::to_string(k) + ", r = " + std::to_string(r));
    RootSpec spec;
    spec.k = k;
    spec.r = r;
    spec.e = e;
    spec.r0 = r / gcd_u64(r, e);
    spec.s0 = multiplicative_order(k, spec.r0);
    spec.s = s == 0 ? spec.s0 : s;
    require(spec.s % spec.s0 == 0, "step s = " + std::to_string(spec.s) + " is not a multiple of s0 = " +
                                       std::to_string(spec.s0) + " (order of " + std::to_string(k) + " mod " +
                                       std::to_string(spec.r0) + ")");
    return spec;
}

u64 RootSpec::conductor() const { return normalized_conductor(r0); }

CycloElement RootSpec::omega_power(const CycloField& target, i64 j) const {
    return root_of_unity(target, r, static_cast<i64>(mul_mod(e, mod_floor(j, r), r)));
}

std::string_view to_string(Provenance p) noexcept {
    switch (p) {
        case Provenance::Characteristic: return "characteristic";
        case Provenance::Minimal: return "minimal";
        case Provenance::IntegerProduct: return "integer-product";
    }
    return "unknown";
}

std::string Recurrence::to_string(std::string_view name) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t m = coefficients.size(); m-- > 0;) {
        const CycloElement& c = coefficients[m];
        if (c.is_zero()) continue;
        std::string term = std::string(name) + "(" + power_label(root.k, m * root.s) + ")";
        std::string coeff;
        bool negative = false;
        if (c.is_rational()) {
            BigRational v = c.rational_value();
            negative = v < 0;
            if (negative) v = -v;
            if (v != 1) coeff = v.get_str() + " ";
        } else {
            coeff = "(" + c.to_string() + ") ";
        }
        if (first) out << (negative ? "-" : "");
        else out << (negative ? " - " : " + ");
        out << coeff << term;
        first = false;
    }
    if (first) out << "0";
    out << " = 0";
    return out.str();
}

CycloElement partial_sum_value(const Dfao& a, u64 n, const RootSpec& root) {
    require(n >= 1, "partial sums need n >= 1");
    const CycloField field(compositum_conductor(a.field().conductor(), root.conductor()));
    std::vector<std::vector<u64>> counts(a.size(), std::vector<u64>(root.r, 0));
    u64 residue = 0;
    for (u64 m = 0; m < n; ++m) {
        Word w = base_digits(m, a.base());
        if (a.direction() == Direction::Backward) w = reversed(std::move(w));
        ++counts[a.run(0, w)][residue];
        if (++residue == root.r) residue = 0;
    }
    CycloElement total(field);
    for (std::size_t q = 0; q < a.size(); ++q) {
        if (a.output(q).is_zero()) continue;
        CycloElement inner(field);
        for (u64 c = 0; c < root.r; ++c) {
            if (counts[q][c] != 0) inner += root.omega_power(field, static_cast<i64>(c)) * BigRational(BigInt(counts[q][c]));
        }
        total += inner * embed(a.output(q), field);
    }
    return total;
}

PartialSumEvaluator::PartialSumEvaluator(const Dfao& a, const RootSpec& root)
    : automaton_(make_inducing(a.direction() == Direction::Forward ? a : reverse_dfao(a))),
      root_(root),
      field_(compositum_conductor(a.field().conductor(), root.conductor())),
      ring_size_(field_.conductor()) {
    require(automaton_.base() == root.k, "automaton base differs from the recurrence base");
    std::vector<CycloElement> outs;
    for (std::size_t q = 0; q < automaton_.size(); ++q) {
        outs.push_back(embed(automaton_.output(q), field_));
        for (const auto& c : outs.back().coords()) denominator_ = lcm(denominator_, BigInt(c.get_den()));
    }
    std::vector<Ring> level;
    for (const auto& o : outs) {
        Ring v(ring_size_, BigInt(0));
        for (std::size_t i = 0; i < o.coords().size(); ++i) {
            BigRational x = o.coords()[i] * BigRational(denominator_);
            v[i] = x.get_num();
        }
        level.push_back(std::move(v));
    }
    blocks_.push_back(std::move(level));
    for (u64 c = 0; c < root.r; ++c) {
        powers_.push_back(as_generator_power(field_, root.r, static_cast<i64>(mul_mod(root.e, c, root.r))));
    }
    k_powers_.push_back(1 % root.r);
}

void PartialSumEvaluator::add_term(Ring& acc, const Ring& v, u64 residue) const {
    const GeneratorPower& g = powers_[residue];
    const u64 n = ring_size_;
    for (u64 i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        u64 j = i + g.power;
        if (j >= n) j -= n;
        if (g.sign > 0) acc[j] += v[i];
        else acc[j] -= v[i];
    }
}

void PartialSumEvaluator::reserve_digits(std::size_t length) {
    const unsigned k = root_.k;
    while (blocks_.size() <= length) {
        const std::size_t j = blocks_.size() - 1;
        const std::vector<Ring>& prev = blocks_.back();
        std::vector<Ring> next(automaton_.size(), Ring(ring_size_, BigInt(0)));
        for (std::size_t q = 0; q < automaton_.size(); ++q) {
            for (unsigned d = 0; d < k; ++d) {
                add_term(next[q], prev[automaton_.next(q, d)], mul_mod(d, k_powers_[j], root_.r));
            }
        }
        blocks_.push_back(std::move(next));
        k_powers_.push_back(mul_mod(k_powers_.back(), k, root_.r));
    }
}

PartialSumEvaluator::Ring PartialSumEvaluator::walk(const Word& digits) const {
    const unsigned k = root_.k;
    const u64 r = root_.r;
    Ring acc(ring_size_, BigInt(0));
    std::size_t q = 0;
    u64 prefix = 0;  // value of the digits read so far, mod r
    const std::size_t len = digits.size();
    for (std::size_t idx = 0; idx < len; ++idx) {
        const std::size_t i = len - 1 - idx;
        const unsigned d = digits[idx];
        for (unsigned a = 0; a < d; ++a) {
            const u64 lead = (mul_mod(prefix, k, r) + a) % r;
            add_term(acc, blocks_[i][automaton_.next(q, a)], mul_mod(lead, k_powers_[i], r));
        }
        prefix = (mul_mod(prefix, k, r) + d) % r;
        q = automaton_.next(q, d);
    }
    return acc;
}

CycloElement PartialSumEvaluator::finish(const Ring& acc) const {
    CycloElement v = reduce_integer_coeffs(field_, acc);
    if (denominator_ != 1) v *= BigRational(BigInt(1), denominator_);
    return v;
}

CycloElement PartialSumEvaluator::value(const BigInt& n) {
    const Word digits = base_digits(n, root_.k);
    reserve_digits(digits.size());
    return finish(walk(digits));
}

CycloElement PartialSumEvaluator::value_const(const BigInt& n) const {
    const Word digits = base_digits(n, root_.k);
    require(digits.size() < blocks_.size(), "partial sum evaluator not reserved for " + n.get_str());
    return finish(walk(digits));
}

std::vector<CycloElement> char_poly(const CycloMatrix& m) {
    require(m.is_square(), "characteristic polynomial of a non-square matrix");
    const CycloMatrix id = CycloMatrix::identity(m.field(), m.rows());
    return faddeev_leverrier(m, id, CycloElement(m.field(), BigRational(1)));
}

std::vector<CycloElement> minimal_poly(const CycloMatrix& m) {
    require(m.is_square(), "minimal polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    const CycloField& f = m.field();
    std::vector<CycloMatrix> powers{CycloMatrix::identity(f, n)};
    for (std::size_t j = 1; j <= n; ++j) {
        powers.push_back(m * powers.back());
        CycloMatrix krylov(f, n * n, j + 1);
        for (std::size_t c = 0; c <= j; ++c) {
            for (std::size_t row = 0; row < n; ++row) {
                for (std::size_t col = 0; col < n; ++col) krylov(row * n + col, c) = powers[c](row, col);
            }
        }
        const auto kernel = nullspace(krylov);
        if (!kernel.empty()) return kernel.front();
    }
    fail(ErrorCode::Inconsistency, "no polynomial relation up to the matrix size");
}

CycloMatrix matrix_poly_eval(const std::vector<CycloElement>& c, const CycloMatrix& m) {
    CycloMatrix acc(m.field(), m.rows(), m.cols());
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * m;
        CycloMatrix term = CycloMatrix::identity(m.field(), m.rows());
        term *= embed(c[i], m.field());
        acc += term;
    }
    return acc;
}

CycloMatrix reduced_product_at_root(const PolyMatrix& mhat, Direction direction, const RootSpec& root) {
    const CycloField field(compositum_conductor(mhat.field().conductor(), root.conductor()));
    const PolyMatrix lifted = mhat.embed(field);
    CycloMatrix product = CycloMatrix::identity(field, mhat.dim());
    u64 kp = 1 % root.r;
    for (u64 i = 0; i < root.s; ++i) {
        CycloMatrix factor = lifted.evaluate(root.omega_power(field, static_cast<i64>(kp)));
        product = direction == Direction::Forward ? factor * product : product * factor;
        kp = mul_mod(kp, root.k, root.r);
    }
    return product;
}

Dfao recurrence_automaton(const Dfao& a) { return make_inducing(a); }

Recurrence synthesize(const Dfao& a, const RootSpec& root, bool use_minimal) {
    require(a.base() == root.k, "automaton base " + std::to_string(a.base()) + " differs from k = " +
                                    std::to_string(root.k));
    const Dfao b = recurrence_automaton(a);
    const SpanAnalysis span = span_analysis(b);
    const PolyMatrix mhat = reduced_matrix(span);
    const CycloMatrix product = reduced_product_at_root(mhat, b.direction(), root);
    Recurrence rec;
    rec.root = root;
    rec.provenance = use_minimal ? Provenance::Minimal : Provenance::Characteristic;
    rec.coefficients = use_minimal ? minimal_poly(product) : char_poly(product);
    rec.rational_matrix = mhat.has_rational_coeffs();
    return rec;
}

VerificationReport verify(const Recurrence& rec, const Dfao& a, u64 n_max, const VerifyOptions& options) {
    require(!rec.coefficients.empty(), "empty recurrence");
    const RootSpec& root = rec.root;
    PartialSumEvaluator eval(a, root);
    const std::size_t l = rec.order();
    const BigInt top_scale = [&] {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), root.k, static_cast<unsigned long>(l * root.s));
        return p;
    }();
    const std::size_t max_digits = base_digits(BigInt(top_scale * n_max), root.k).size();
    if (options.budget != 0) {
        const long double work = static_cast<long double>(n_max) * static_cast<long double>(l + 1) *
                                 static_cast<long double>(max_digits) * root.k;
        if (work > static_cast<long double>(options.budget)) {
            std::ostringstream msg;
            msg << "verification needs about " << static_cast<unsigned long long>(work) << " digit steps (order " << l
                << ", s = " << root.s << ", n_max = " << n_max << "), over the budget of " << options.budget;
            fail(ErrorCode::BudgetExceeded, msg.str());
        }
    }
    eval.reserve_digits(max_digits);
    const CycloField field(compositum_conductor(eval.field().conductor(), rec.field().conductor()));
    const std::vector<CycloElement> coeffs = embed_all(rec.coefficients, field);
    std::vector<BigInt> scales;
    for (std::size_t m = 0; m <= l; ++m) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), root.k, static_cast<unsigned long>(m * root.s));
        scales.push_back(p);
    }

    auto check_range = [&](u64 lo, u64 hi) -> std::optional<std::pair<u64, CycloElement>> {
        for (u64 n = lo; n <= hi; ++n) {
            CycloElement residual(field);
            for (std::size_t m = 0; m <= l; ++m) {
                if (coeffs[m].is_zero()) continue;
                residual += coeffs[m] * embed(eval.value_const(scales[m] * n), field);
            }
            if (!residual.is_zero()) return std::make_pair(n, residual);
        }
        return std::nullopt;
    };

    VerificationReport report;
    report.n_max = n_max;
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(std::max<u64>(n_max, 1))));
    if (threads == 1) {
        report.first_failure = check_range(1, n_max);
    } else {
        std::vector<std::optional<std::pair<u64, CycloElement>>> results(threads);
        std::vector<std::thread> workers;
        const u64 chunk = (n_max + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const u64 lo = 1 + t * chunk;
            const u64 hi = std::min(n_max, lo + chunk - 1);
            if (lo > hi) continue;
            workers.emplace_back([&, t, lo, hi] { results[t] = check_range(lo, hi); });
        }
        for (auto& w : workers) w.join();
        for (auto& r : results) {
            if (r && (!report.first_failure || r->first < report.first_failure->first)) report.first_failure = r;
        }
    }
    report.all_zero = !report.first_failure.has_value();
    return report;
}

Recurrence integer_recurrence(const Dfao& a, const RootSpec& root) {
    const Recurrence base = synthesize(a, root, false);
    require(base.rational_matrix, "integer recurrence needs a reduced matrix with rational coefficients");
    const CycloField field = base.field();
    const std::vector<u64> reps = coset_representatives(root.k, root.r0);
    std::vector<CycloElement> product{CycloElement(field, BigRational(1))};
    for (u64 u : reps) {
        const GaloisMap psi(field, static_cast<i64>(u));
        std::vector<CycloElement> conj;
        for (const auto& c : base.coefficients) conj.push_back(psi(c));
        product = poly_mul(product, conj);
    }
    BigInt scale(1);
    std::vector<BigRational> values;
    for (std::size_t m = 0; m < product.size(); ++m) {
        const Rationality rat = rationality(product[m]);
        if (rat.kind == Rationality::Kind::Irrational) {
            fail(ErrorCode::Inconsistency, "coefficient D_" + std::to_string(m) + " = " + product[m].to_string() +
                                               " of the coset product is not rational");
        }
        values.push_back(rat.value);
        scale = lcm(scale, BigInt(rat.value.get_den()));
    }
    Recurrence rec;
    rec.root = root;
    rec.provenance = Provenance::IntegerProduct;
    rec.scale = scale;
    rec.rational_matrix = true;
    const CycloField q(1);
    for (const auto& v : values) rec.coefficients.emplace_back(q, v * BigRational(scale));
    return rec;
}

GaloisReport galois_invariance_report(const Recurrence& rec) {
    require(rec.rational_matrix, "Galois invariance needs a reduced matrix with rational coefficients");
    const RootSpec& root = rec.root;
    const CycloField field(compositum_conductor(rec.field().conductor(), root.conductor()));
    require(field.conductor() == root.conductor(), "recurrence coefficients lie outside Q(w)");
    const u64 n = field.conductor();
    GaloisReport report;
    report.coset_representatives = coset_representatives(root.k, root.r0);
    report.primitive = report.coset_representatives.size() == 1;
    const std::vector<CycloElement> coeffs = embed_all(rec.coefficients, field);
    const GaloisMap psi(field, n == 1 ? 1 : static_cast<i64>(root.k % n));
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (!(psi(coeffs[m]) == coeffs[m])) {
            report.invariant = false;
            fail(ErrorCode::Inconsistency, "coefficient C_" + std::to_string(m) + " = " + coeffs[m].to_string() +
                                               " is not fixed by psi_" + std::to_string(root.k));
        }
        report.rationality.push_back(rationality(coeffs[m]));
        if (report.rationality.back().kind == Rationality::Kind::Irrational) report.all_rational = false;
    }
    if (report.primitive && !report.all_rational) {
        fail(ErrorCode::Inconsistency, "k is a primitive root but some coefficient is irrational");
    }
    if (!is_squarefree(root.r0)) return report;
    if (n == 1) {
        for (const auto& c : coeffs) report.period_coords.push_back({c.coords().front()});
        return report;
    }
    const std::vector<u64> reps = coset_representatives(root.k, n);
    const std::size_t f = reps.size();
    std::vector<CycloElement> etas;
    for (std::size_t j = 0; j < f; ++j) etas.push_back(gaussian_period(field, root.k, j));
    const std::size_t deg = field.degree();
    const CycloField q(1);
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        CycloMatrix system(q, deg, f + 1);
        for (std::size_t i = 0; i < deg; ++i) {
            for (std::size_t j = 0; j < f; ++j) system(i, j) = CycloElement(q, etas[j].coords()[i]);
            system(i, f) = CycloElement(q, coeffs[m].coords()[i]);
        }
        const std::vector<std::size_t> pivots = rref_in_place(system);
        std::vector<BigRational> coords(f, BigRational(0));
        for (std::size_t row = 0; row < pivots.size(); ++row) {
            if (pivots[row] == f) {
                fail(ErrorCode::Inconsistency, "coefficient C_" + std::to_string(m) + " is not in the span of the periods");
            }
            coords[pivots[row]] = system(row, f).rational_value();
        }
        report.period_coords.push_back(std::move(coords));
    }
    return report;
}

std::size_t lmin_bound(const Dfao& a) { return span_analysis(recurrence_automaton(a)).reduced_dim(); }

DimExperiment dim_experiment(const Dfao& a, std::size_t state_cap) {
    DimExperiment out;
    const SpanAnalysis fwd = span_analysis(a);
    const Dfao rev = reverse_dfao(a, state_cap);
    const SpanAnalysis bwd = span_analysis(rev);
    out.forward_dim = fwd.rank;
    out.backward_dim = bwd.rank;
    out.forward_states = fwd.automaton.size();
    out.backward_states = bwd.automaton.size();
    return out;
}

}  // namespace autorec
