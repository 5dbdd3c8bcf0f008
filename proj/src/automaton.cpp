#include "autorec/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "autorec/error.hpp"
#include "autorec/linalg.hpp"

namespace autorec {

std::string_view to_string(Direction d) noexcept { return d == Direction::Forward ? "forward" : "backward"; }

Word base_digits(u64 n, unsigned k) {
    require(k >= 2, "base must be at least 2");
    Word w;
    while (n > 0) {
        w.push_back(static_cast<unsigned>(n % k));
        n /= k;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

Word base_digits(const BigInt& n, unsigned k) {
    require(k >= 2, "base must be at least 2");
    require(n >= 0, "negative integer has no base expansion");
    Word w;
    BigInt x = n;
    BigInt r;
    while (x > 0) {
        mpz_fdiv_qr_ui(x.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), k);
        w.push_back(static_cast<unsigned>(r.get_ui()));
    }
    std::reverse(w.begin(), w.end());
    return w;
}

u64 word_value(const Word& w, unsigned k) {
    u64 n = 0;
    for (unsigned d : w) n = n * k + d;
    return n;
}

Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

// OutputValue

OutputValue OutputValue::root(u64 order, i64 exponent) {
    require(order >= 1, "root of unity order must be positive");
    u64 e = mod_floor(exponent, order);
    const u64 g = std::gcd(order, e);  // gcd(order, 0) = order
    const u64 m = order / g;
    e /= g;
    if (m == 1) return OutputValue(BigRational(1));
    if (m == 2) return OutputValue(BigRational(-1));
    OutputValue v;
    v.order_ = m;
    v.exponent_ = e;
    return v;
}

u64 OutputValue::conductor() const noexcept { return order_ ? normalized_conductor(order_) : 1; }

CycloElement OutputValue::in_field(const CycloField& field) const {
    if (order_) return root_of_unity(field, order_, static_cast<i64>(exponent_));
    return CycloElement(field, value_);
}

std::string OutputValue::to_string() const {
    if (order_) return "zeta(" + std::to_string(order_) + ")^" + std::to_string(exponent_);
    return value_.get_str();
}

// Dfao

Dfao::Dfao(unsigned base, Direction direction, std::vector<std::string> states, std::vector<std::size_t> delta,
           std::vector<OutputValue> outputs)
    : base_(base),
      direction_(direction),
      states_(std::move(states)),
      delta_(std::move(delta)),
      output_values_(std::move(outputs)) {
    require(base_ >= 2, "base must be at least 2");
    require(!states_.empty(), "automaton needs at least one state");
    require(delta_.size() == states_.size() * base_, "transition table has wrong size");
    require(output_values_.size() == states_.size(), "one output per state required");
    for (auto t : delta_) require(t < states_.size(), "transition target out of range");
    u64 conductor = 1;
    for (const auto& v : output_values_) conductor = compositum_conductor(conductor, v.conductor());
    field_ = CycloField(conductor);
    outputs_.reserve(output_values_.size());
    for (const auto& v : output_values_) outputs_.push_back(v.in_field(field_));
}

std::optional<std::size_t> Dfao::find_state(std::string_view name) const {
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i] == name) return i;
    return std::nullopt;
}

std::size_t Dfao::run(std::size_t q, const Word& w) const {
    for (unsigned d : w) q = next(q, d);
    return q;
}

Dfao Dfao::with_direction(Direction d) const {
    Dfao copy = *this;
    copy.direction_ = d;
    return copy;
}

bool operator==(const Dfao& a, const Dfao& b) {
    return a.base_ == b.base_ && a.direction_ == b.direction_ && a.states_ == b.states_ && a.delta_ == b.delta_ &&
           a.output_values_ == b.output_values_;
}

// Parsing

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    std::size_t column() const { return pos_ + 1; }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    [[noreturn]] void error(const std::string& msg) const { throw SyntaxError(line_, column(), msg); }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }

    bool accept(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) error("expected '" + std::string(tok) + "'");
    }

    std::string name() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
        if (pos_ == start) error("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    BigInt integer(bool allow_sign) {
        skip_ws();
        const std::size_t start = pos_;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            error("expected an integer");
        }
        std::string s(text_.substr(start, pos_ - start));
        if (s[0] == '+') s.erase(0, 1);
        return BigInt(s);
    }

    u64 small(bool allow_zero, const char* what) {
        skip_ws();
        const std::size_t col = column();
        BigInt v = integer(false);
        if (!v.fits_ulong_p() || v > BigInt(1000000000)) throw SyntaxError(line_, col, std::string(what) + " too large");
        if (!allow_zero && v == 0) throw SyntaxError(line_, col, std::string(what) + " must be positive");
        return v.get_ui();
    }

    OutputValue value() {
        skip_ws();
        if (accept("zeta")) {
            expect("(");
            const u64 m = small(false, "root order");
            expect(")");
            i64 e = 1;
            if (accept("^")) {
                skip_ws();
                const std::size_t col = column();
                BigInt x = integer(true);
                if (!x.fits_slong_p()) throw SyntaxError(line_, col, "exponent too large");
                e = x.get_si();
            }
            return OutputValue::root(m, e);
        }
        BigInt num = integer(true);
        BigInt den = 1;
        if (accept("/")) {
            skip_ws();
            const std::size_t col = column();
            den = integer(false);
            if (den == 0) throw SyntaxError(line_, col, "zero denominator");
        }
        BigRational q(num, den);
        q.canonicalize();
        return OutputValue(q);
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct RawOutput {
    std::size_t line;
    std::string state;
    OutputValue value;
};

struct RawDelta {
    std::size_t line;
    std::string from;
    u64 digit;
    std::string to;
};

[[noreturn]] void semantic(std::size_t line, const std::string& msg) {
    fail(ErrorCode::Semantic, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Dfao parse_dfao(std::string_view text) {
    std::optional<u64> base;
    std::optional<Direction> direction;
    std::optional<std::vector<std::string>> states;
    std::vector<RawOutput> outputs;
    std::vector<RawDelta> deltas;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        LineCursor cur(line, line_no);
        if (cur.at_end()) continue;
        const std::string key = cur.name();
        cur.expect(":");
        if (key == "base") {
            if (base) semantic(line_no, "duplicate base");
            const std::size_t col = cur.column();
            const u64 k = cur.small(true, "base");
            if (k < 2) throw SyntaxError(line_no, col, "base must be at least 2");
            base = k;
        } else if (key == "direction") {
            if (direction) semantic(line_no, "duplicate direction");
            const std::string d = cur.name();
            if (d == "forward")
                direction = Direction::Forward;
            else if (d == "backward")
                direction = Direction::Backward;
            else
                cur.error("direction must be 'forward' or 'backward'");
        } else if (key == "states") {
            if (states) semantic(line_no, "duplicate states line");
            std::vector<std::string> names;
            while (!cur.at_end()) {
                std::string n = cur.name();
                if (std::find(names.begin(), names.end(), n) != names.end())
                    semantic(line_no, "duplicate state '" + n + "'");
                names.push_back(std::move(n));
            }
            if (names.empty()) cur.error("expected at least one state name");
            states = std::move(names);
        } else if (key == "output") {
            RawOutput o{line_no, cur.name(), {}};
            cur.expect("=");
            o.value = cur.value();
            outputs.push_back(std::move(o));
        } else if (key == "delta") {
            RawDelta d{line_no, cur.name(), 0, {}};
            d.digit = cur.small(true, "digit");
            cur.expect("->");
            d.to = cur.name();
            deltas.push_back(std::move(d));
        } else {
            throw SyntaxError(line_no, 1, "unknown key '" + key + "'");
        }
        if (!cur.at_end()) cur.error("unexpected trailing input");
    }

    if (!base) semantic(line_no, "missing 'base' line");
    if (!states) semantic(line_no, "missing 'states' line");
    const auto& names = *states;
    const std::size_t d = names.size();
    const unsigned k = static_cast<unsigned>(*base);
    auto index_of = [&](const std::string& name, std::size_t line) {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) semantic(line, "unknown state '" + name + "'");
        return static_cast<std::size_t>(it - names.begin());
    };

    std::vector<std::optional<OutputValue>> out(d);
    for (const auto& o : outputs) {
        const std::size_t q = index_of(o.state, o.line);
        if (out[q]) semantic(o.line, "duplicate output for state '" + o.state + "'");
        out[q] = o.value;
    }
    std::vector<std::optional<std::size_t>> delta(d * k);
    for (const auto& t : deltas) {
        const std::size_t q = index_of(t.from, t.line);
        if (t.digit >= k)
            semantic(t.line, "digit " + std::to_string(t.digit) + " out of range for base " + std::to_string(k) +
                                 " (state '" + t.from + "')");
        const std::size_t to = index_of(t.to, t.line);
        auto& slot = delta[q * k + t.digit];
        if (slot)
            semantic(t.line, "duplicate transition for state '" + t.from + "' on digit " + std::to_string(t.digit));
        slot = to;
    }

    std::vector<OutputValue> out_values;
    for (std::size_t q = 0; q < d; ++q) {
        if (!out[q]) semantic(line_no, "missing output for state '" + names[q] + "'");
        out_values.push_back(*out[q]);
    }
    std::vector<std::size_t> table;
    for (std::size_t q = 0; q < d; ++q)
        for (unsigned a = 0; a < k; ++a) {
            if (!delta[q * k + a])
                semantic(line_no, "missing transition for state '" + names[q] + "' on digit " + std::to_string(a));
            table.push_back(*delta[q * k + a]);
        }
    return Dfao(k, direction.value_or(Direction::Forward), names, std::move(table), std::move(out_values));
}

Dfao load_dfao(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_dfao(ss.str());
}

std::string format_dfao(const Dfao& a) {
    std::ostringstream os;
    os << "base: " << a.base() << "\n";
    os << "direction: " << to_string(a.direction()) << "\n";
    os << "states:";
    for (const auto& n : a.state_names()) os << ' ' << n;
    os << "\n";
    for (std::size_t q = 0; q < a.size(); ++q)
        os << "output: " << a.state_names()[q] << " = " << a.output_value(q).to_string() << "\n";
    for (std::size_t q = 0; q < a.size(); ++q)
        for (unsigned d = 0; d < a.base(); ++d)
            os << "delta: " << a.state_names()[q] << ' ' << d << " -> " << a.state_names()[a.next(q, d)] << "\n";
    return os.str();
}

// Sequences

CycloElement sequence_term(const Dfao& a, u64 n) {
    Word w = base_digits(n, a.base());
    if (a.direction() == Direction::Backward) std::reverse(w.begin(), w.end());
    return a.output(a.run(0, w));
}

std::vector<CycloElement> sequence_prefix(const Dfao& a, std::size_t count) {
    std::vector<CycloElement> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) out.push_back(sequence_term(a, n));
    return out;
}

// Constructions

Dfao reverse_dfao(const Dfao& a, std::size_t state_cap) {
    const std::size_t d = a.size();
    const unsigned k = a.base();
    using Transform = std::vector<std::size_t>;
    std::map<Transform, std::size_t> index;
    std::vector<Transform> states;
    std::vector<std::size_t> delta;

    Transform id(d);
    std::iota(id.begin(), id.end(), 0);
    index.emplace(id, 0);
    states.push_back(std::move(id));
    // T_{xa}(q) = T_x(delta(q, a)); BFS order gives deterministic numbering.
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (unsigned j = 0; j < k; ++j) {
            Transform t(d);
            for (std::size_t q = 0; q < d; ++q) t[q] = states[i][a.next(q, j)];
            auto [it, inserted] = index.emplace(t, states.size());
            if (inserted) {
                if (states.size() >= state_cap)
                    fail(ErrorCode::StateCapExceeded,
                         "reversal exceeds the cap of " + std::to_string(state_cap) + " states");
                states.push_back(std::move(t));
            }
            delta.push_back(it->second);
        }
    }
    std::vector<std::string> names;
    std::vector<OutputValue> outputs;
    for (std::size_t i = 0; i < states.size(); ++i) {
        names.push_back("r" + std::to_string(i));
        outputs.push_back(a.output_value(states[i][0]));
    }
    const Direction dir = a.direction() == Direction::Forward ? Direction::Backward : Direction::Forward;
    return Dfao(k, dir, std::move(names), std::move(delta), std::move(outputs));
}

Dfao add_initial_state(const Dfao& a) {
    const unsigned k = a.base();
    std::string fresh = a.state_names()[0] + "'";
    while (a.find_state(fresh)) fresh += "'";
    std::vector<std::string> names{fresh};
    names.insert(names.end(), a.state_names().begin(), a.state_names().end());
    std::vector<std::size_t> delta;
    delta.push_back(0);
    for (unsigned j = 1; j < k; ++j) delta.push_back(a.next(0, j) + 1);
    for (auto t : a.transitions()) delta.push_back(t + 1);
    std::vector<OutputValue> outputs{a.output_value(0)};
    outputs.insert(outputs.end(), a.output_values().begin(), a.output_values().end());
    return Dfao(k, Direction::Forward, std::move(names), std::move(delta), std::move(outputs));
}

std::vector<std::size_t> accessible_states(const Dfao& a) {
    std::vector<bool> seen(a.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const std::size_t q = queue.front();
        queue.pop_front();
        for (unsigned j = 0; j < a.base(); ++j) {
            const std::size_t t = a.next(q, j);
            if (!seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < a.size(); ++q)
        if (seen[q]) out.push_back(q);
    return out;
}

Dfao prune_inaccessible(const Dfao& a) {
    const auto keep = accessible_states(a);
    if (keep.size() == a.size()) return a;
    std::vector<std::size_t> remap(a.size(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = i;
    std::vector<std::string> names;
    std::vector<std::size_t> delta;
    std::vector<OutputValue> outputs;
    for (auto q : keep) {
        names.push_back(a.state_names()[q]);
        outputs.push_back(a.output_value(q));
        for (unsigned j = 0; j < a.base(); ++j) delta.push_back(remap[a.next(q, j)]);
    }
    return Dfao(a.base(), a.direction(), std::move(names), std::move(delta), std::move(outputs));
}

bool ignores_leading_zeros(const Dfao& a) {
    if (a.direction() == Direction::Forward) return a.next(0, 0) == 0;
    for (auto q : accessible_states(a))
        if (!(a.output_value(a.next(q, 0)) == a.output_value(q))) return false;
    return true;
}

Dfao make_inducing(const Dfao& a) {
    if (ignores_leading_zeros(a)) return a;
    if (a.direction() == Direction::Forward) return add_initial_state(a);
    return make_inducing(reverse_dfao(a));
}

Dfao pattern_dfao(const PatternSpec& spec) {
    const unsigned k = spec.k;
    const Word& v = spec.v;
    require(k >= 2, "base must be at least 2");
    require(!v.empty(), "pattern must be nonempty");
    require(spec.m >= 2, "modulus must be at least 2");
    for (unsigned c : v) require(c < k, "pattern digit " + std::to_string(c) + " out of range for base " + std::to_string(k));
    const std::size_t e = v.size();

    // KMP prefix function and automaton over match lengths 0..e.
    std::vector<std::size_t> pi(e, 0);
    for (std::size_t i = 1; i < e; ++i) {
        std::size_t j = pi[i - 1];
        while (j > 0 && v[i] != v[j]) j = pi[j - 1];
        if (v[i] == v[j]) ++j;
        pi[i] = j;
    }
    std::vector<std::size_t> aut((e + 1) * k);
    for (std::size_t t = 0; t <= e; ++t)
        for (unsigned j = 0; j < k; ++j) {
            if (t < e && v[t] == j)
                aut[t * k + j] = t + 1;
            else if (t == 0)
                aut[t * k + j] = 0;
            else
                aut[t * k + j] = aut[pi[t - 1] * k + j];
        }

    const u64 m = spec.m;
    std::vector<std::string> names;
    std::vector<std::size_t> delta;
    std::vector<OutputValue> outputs;
    for (u64 p = 0; p < m; ++p)
        for (std::size_t t = 0; t < e; ++t) {
            names.push_back("p" + std::to_string(p) + "t" + std::to_string(t));
            outputs.push_back(OutputValue::root(m, static_cast<i64>(p)));
            for (unsigned j = 0; j < k; ++j) {
                std::size_t nt = aut[t * k + j];
                u64 np = p;
                if (nt == e) {
                    np = (p + 1) % m;
                    nt = pi[e - 1];
                }
                delta.push_back(np * e + nt);
            }
        }
    Dfao a(k, Direction::Forward, std::move(names), std::move(delta), std::move(outputs));
    return v.front() == 0 ? add_initial_state(a) : a;
}

std::size_t count_occurrences(const Word& w, const Word& v) {
    if (v.empty() || v.size() > w.size()) return 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + v.size() <= w.size(); ++i)
        if (std::equal(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) ++count;
    return count;
}

SymmetryReport check_symmetry(const Dfao& a, const StateMap& rho, std::size_t q_prime) {
    const std::size_t d = a.size();
    require(rho.image.size() == d, "state map must list every state");
    require(q_prime < d && rho.image[q_prime].has_value(), "q' must lie in the domain of rho");
    std::vector<std::size_t> domain;
    for (std::size_t q = 0; q < d; ++q) {
        if (!rho.image[q]) continue;
        domain.push_back(q);
        const std::size_t img = *rho.image[q];
        require(img < d && rho.image[img].has_value(),
                "rho maps '" + a.state_names()[q] + "' outside its domain");
        for (unsigned j = 0; j < a.base(); ++j)
            require(rho.image[a.next(q, j)].has_value(), "domain is not closed: '" + a.state_names()[q] +
                                                             "' on digit " + std::to_string(j) + " leaves it");
    }

    SymmetryReport report;
    report.commutes = true;
    for (auto q : domain) {
        for (unsigned j = 0; j < a.base() && report.commutes; ++j)
            if (a.next(*rho.image[q], j) != *rho.image[a.next(q, j)]) {
                report.commutes = false;
                report.violation = std::make_pair(q, j);
            }
        if (!report.commutes) break;
    }

    // Powers of rho restricted to the domain, until one repeats.
    std::vector<std::vector<std::size_t>> powers;
    std::vector<std::size_t> cur(d);
    std::iota(cur.begin(), cur.end(), 0);
    while (std::find(powers.begin(), powers.end(), cur) == powers.end()) {
        powers.push_back(cur);
        for (auto q : domain) cur[q] = *rho.image[cur[q]];
    }
    report.period = powers.size();

    std::vector<bool> seen(d, false);
    std::deque<std::size_t> queue{q_prime};
    seen[q_prime] = true;
    while (!queue.empty()) {
        const std::size_t q = queue.front();
        queue.pop_front();
        for (unsigned j = 0; j < a.base(); ++j)
            if (!seen[a.next(q, j)]) {
                seen[a.next(q, j)] = true;
                queue.push_back(a.next(q, j));
            }
    }
    for (std::size_t q = 0; q < d; ++q)
        if (seen[q]) report.orbit.push_back(q);

    if (!report.commutes) return report;

    const std::size_t m = report.period;
    CycloMatrix values(a.field(), report.orbit.size(), m);
    for (std::size_t r = 0; r < report.orbit.size(); ++r)
        for (std::size_t i = 0; i < m; ++i) values(r, i) = a.output(powers[i][report.orbit[r]]);
    report.output_relations = nullspace(values);

    for (const auto& beta : report.output_relations)
        for (auto q : report.orbit) {
            std::map<std::size_t, CycloElement> acc;
            for (std::size_t i = 0; i < m; ++i) {
                if (beta[i].is_zero()) continue;
                auto [it, inserted] = acc.emplace(powers[i][q], beta[i]);
                if (!inserted) it->second += beta[i];
            }
            StateRelation rel;
            for (auto& [state, c] : acc)
                if (!c.is_zero()) rel.terms.emplace_back(state, c);
            if (!rel.terms.empty()) report.induced_relations.push_back(std::move(rel));
        }
    return report;
}

}  // namespace autorec
