// autorec: command-line front end for automata, partial-sum recurrences and the
// Thue-Morse scan. Exit status 0 on success, 1 on a domain error, 2 on a usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "autorec/error.hpp"
#include "autorec/json_export.hpp"

#ifndef AUTOREC_DATA_DIR
#define AUTOREC_DATA_DIR "data"
#endif

using namespace autorec;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string dfao_path;
    std::string inline_text;
    std::string format;
    u64 count = 16;
    u64 r = 1;
    u64 e = 0;
    u64 s = 0;
    u64 n_max = 100;
    u64 power = 0;
    u64 truncate = 0;
    std::string side = "auto";
    bool reduced = false;
    bool minimal = false;
    bool galois = false;
    u64 verify_to = 0;
    u64 budget = VerifyOptions{}.budget;
    unsigned threads = 1;
    std::vector<u64> r0s;
    u64 bound = kDeskScaleBound;
    bool long_run = false;
    bool progress = false;
    bool show_entries = false;
    std::size_t state_cap = kDefaultReversalCap;
    unsigned k = 2;
    std::string pattern;
    u64 modulus = 2;
};

std::string resolve_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    const fs::path bundled = fs::path(AUTOREC_DATA_DIR) / path;
    if (fs::path(path).is_relative() && fs::exists(bundled)) return bundled.string();
    return path;
}

Dfao input_dfao(const Options& o) {
    if (!o.inline_text.empty()) {
        std::string text = o.inline_text;
        for (std::size_t i = 0; (i = text.find(';', i)) != std::string::npos;) text[i] = '\n';
        return parse_dfao(text);
    }
    if (o.dfao_path.empty()) throw UsageError("no automaton given (use --dfao or --inline)");
    return load_dfao(resolve_path(o.dfao_path));
}

RootSpec input_root(const Dfao& a, const Options& o) { return RootSpec::make(a.base(), o.r, o.e, o.s); }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

bool json_output(const Options& o) { return o.format == "json"; }

Word parse_pattern(const std::string& text, unsigned k) {
    Word v;
    if (text.find(',') != std::string::npos) {
        std::stringstream in(text);
        std::string part;
        while (std::getline(in, part, ',')) v.push_back(static_cast<unsigned>(std::stoul(part)));
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') fail(ErrorCode::Precondition, std::string("invalid pattern digit '") + c + "'");
            v.push_back(static_cast<unsigned>(c - '0'));
        }
    }
    for (unsigned d : v) {
        if (d >= k) fail(ErrorCode::Precondition, "pattern digit " + std::to_string(d) + " out of range for base " + std::to_string(k));
    }
    return v;
}

int cmd_parse(const Options& o) {
    const Dfao a = input_dfao(o);
    if (json_output(o)) print_json(dfao_json(a));
    else std::cout << format_dfao(a);
    return 0;
}

int cmd_seq(const Options& o) {
    const Dfao a = input_dfao(o);
    const auto terms = sequence_prefix(a, o.count);
    if (json_output(o)) {
        Json out = Json::array();
        for (const auto& t : terms) out.push_back(value_json(t));
        print_json(out);
        return 0;
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << (terms[i].is_rational() ? to_string(terms[i].rational_value()) : terms[i].to_string());
    }
    std::cout << "\n";
    return 0;
}

int cmd_matrix(const Options& o) {
    const Dfao a = input_dfao(o);
    PolyMatrix m = transition_matrix(a);
    std::string title = "M(x)";
    if (o.reduced) {
        m = reduced_matrix(span_analysis(a));
        title = "M^(x)";
    }
    if (o.power > 0) {
        Side side = a.direction() == Direction::Forward ? Side::Left : Side::Right;
        if (o.side == "left") side = Side::Left;
        else if (o.side == "right") side = Side::Right;
        m = power_product(m, a.base(), o.power, side);
        title += " product t=" + std::to_string(o.power) + (side == Side::Left ? " (left)" : " (right)");
        if (o.truncate > 0) {
            m = truncate(m, a.base(), o.power, o.truncate);
            title += " truncated n=" + std::to_string(o.truncate);
        }
    } else if (o.truncate > 0) {
        throw UsageError("--truncate needs --power");
    }
    if (json_output(o)) {
        Json out = polymatrix_json(m);
        out["title"] = title;
        print_json(out);
    } else {
        std::cout << title << ":\n" << m.to_string();
    }
    return 0;
}

int cmd_span(const Options& o) {
    const Dfao a = input_dfao(o);
    const SpanAnalysis s = span_analysis(a);
    if (json_output(o)) {
        print_json(span_json(s));
        return 0;
    }
    const auto& names = s.automaton.state_names();
    std::cout << "states: " << s.automaton.size() << "\nrank: " << s.rank << "\ngenerators:";
    for (auto g : s.generators) std::cout << ' ' << names[g];
    std::cout << "\n";
    for (std::size_t p = 0; p < s.dependents.size(); ++p) {
        std::cout << "f_" << names[s.dependents[p]] << " =";
        for (std::size_t j = 0; j < s.generators.size(); ++j) {
            const auto& c = s.alphas[p][j];
            if (c.is_zero()) continue;
            std::cout << " + (" << c.to_string() << ") f_" << names[s.generators[j]];
        }
        std::cout << "\n";
    }
    std::cout << "reduced matrix:\n" << reduced_matrix(s).to_string();
    return 0;
}

int finish_recurrence(const Recurrence& rec, const Dfao& a, const Options& o) {
    std::optional<VerificationReport> report;
    if (o.verify_to > 0) {
        VerifyOptions vo;
        vo.budget = o.budget;
        vo.threads = o.threads;
        report = verify(rec, a, o.verify_to, vo);
    }
    const std::optional<u64> verified = report && report->all_zero ? std::optional<u64>(o.verify_to) : std::nullopt;
    if (json_output(o)) {
        Json out = recurrence_json(rec, verified);
        if (report) out["verification"] = verification_json(*report);
        if (o.galois) out["galois"] = galois_json(galois_invariance_report(rec));
        print_json(out);
    } else {
        std::cout << rec.to_string() << "\n";
        std::cout << "w = zeta_" << rec.root.r << "^" << rec.root.e << ", s = " << rec.root.s << ", order " << rec.order()
                  << " (" << to_string(rec.provenance) << ")\n";
        for (std::size_t m = 0; m < rec.coefficients.size(); ++m) {
            std::cout << "C_" << m << " = " << rec.coefficients[m].to_string() << "\n";
        }
        if (report) std::cout << (report->all_zero ? "verified for n <= " : "verification failed, n_max = ") << o.verify_to << "\n";
        if (o.galois) {
            const GaloisReport g = galois_invariance_report(rec);
            std::cout << "fixed by psi_" << rec.root.k << ": " << (g.invariant ? "yes" : "no")
                      << ", k primitive mod r0: " << (g.primitive ? "yes" : "no")
                      << ", all rational: " << (g.all_rational ? "yes" : "no") << "\n";
            for (std::size_t m = 0; m < g.period_coords.size(); ++m) {
                std::cout << "C_" << m << " over periods:";
                for (const auto& c : g.period_coords[m]) std::cout << ' ' << to_string(c);
                std::cout << "\n";
            }
        }
    }
    if (report && !report->all_zero) {
        std::cerr << "error[inconsistency]: recurrence fails at n = " << report->first_failure->first << "\n";
        return 1;
    }
    return 0;
}

int cmd_synth(const Options& o) {
    const Dfao a = input_dfao(o);
    return finish_recurrence(synthesize(a, input_root(a, o), o.minimal), a, o);
}

int cmd_intrec(const Options& o) {
    const Dfao a = input_dfao(o);
    return finish_recurrence(integer_recurrence(a, input_root(a, o)), a, o);
}

int cmd_verify(const Options& o) {
    const Dfao a = input_dfao(o);
    const Recurrence rec = synthesize(a, input_root(a, o), o.minimal);
    VerifyOptions vo;
    vo.budget = o.budget;
    vo.threads = o.threads;
    const VerificationReport report = verify(rec, a, o.n_max, vo);
    if (json_output(o)) {
        Json out = verification_json(report);
        out["recurrence"] = rec.to_string();
        print_json(out);
    } else {
        std::cout << rec.to_string() << "\n";
        if (report.all_zero) std::cout << "all residuals zero for 1 <= n <= " << report.n_max << "\n";
        else std::cout << "first nonzero residual at n = " << report.first_failure->first << ": "
                       << report.first_failure->second.to_string() << "\n";
    }
    return report.all_zero ? 0 : 1;
}

int cmd_tm_classify(const Options& o) {
    if (o.r0s.empty()) fail(ErrorCode::Precondition, "no r0 given");
    for (u64 r0 : o.r0s) {
        const TmClassification c = tm_classify(r0);
        if (json_output(o)) {
            std::cout << classification_json(c).dump() << "\n";
        } else {
            std::cout << "r0 = " << c.r0 << ", s0 = " << c.s0 << ", phi = " << c.phi << ": " << to_string(c.label) << ", "
                      << (c.is_real ? "real" : "imaginary") << ", T = " << c.value.to_string() << "\n";
        }
    }
    return 0;
}

int cmd_tm_table(const Options& o) {
    TmTableOptions to;
    to.threads = o.threads;
    to.long_run = o.long_run;
    if (o.progress) {
        to.progress = [](u64 done, u64 total) {
            if (done % 500 == 0 || done == total) std::cerr << "scanned " << done << " / " << total << "\n";
        };
    }
    const TmTable t = tm_table(o.bound, to);
    if (json_output(o)) {
        Json out = table_json(t);
        if (o.show_entries) {
            Json entries = Json::array();
            for (const auto& e : t.entries) {
                entries.push_back(Json{{"r0", e.r0}, {"s0", e.s0}, {"phi", e.phi}, {"value", e.value}, {"in_r", e.in_r}});
            }
            out["entries"] = entries;
        }
        print_json(out);
    } else {
        std::cout << t.to_string();
    }
    return 0;
}

int cmd_pattern(const Options& o) {
    const Dfao a = pattern_dfao(PatternSpec{o.k, parse_pattern(o.pattern, o.k), o.modulus});
    if (json_output(o)) print_json(dfao_json(a));
    else std::cout << format_dfao(a);
    return 0;
}

int cmd_dims(const Options& o) {
    const Dfao a = input_dfao(o);
    const DimExperiment d = dim_experiment(a, o.state_cap);
    if (json_output(o)) print_json(dims_json(d));
    else std::cout << "forward: dim " << d.forward_dim << " (" << d.forward_states << " states)\nbackward: dim "
                   << d.backward_dim << " (" << d.backward_states << " states)\n";
    return 0;
}

int cmd_tilde(const Options& o) {
    const TildeReport t = tilde_demo(RootSpec::make(2, o.r, o.e, o.s), o.n_max);
    if (json_output(o)) print_json(tilde_json(t));
    else std::cout << "C = " << t.c.to_string() << (t.c_is_one ? " (two-term relation)" : "") << "\nidentities "
                   << (t.polynomial_identity && t.shifted_identity ? "hold" : "FAIL") << " for n <= " << o.n_max
                   << "\nsynthesized order " << t.synthesized_order << "\n";
    return t.polynomial_identity && t.shifted_identity ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partial-sum recurrences of automatic sequences at roots of unity"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_input = [&](CLI::App* c) {
        c->add_option("--dfao", o.dfao_path, "Automaton description file");
        c->add_option("--inline", o.inline_text, "Automaton text, lines separated by ';'");
    };
    auto add_format = [&](CLI::App* c, const std::string& def) {
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->default_str(def);
        c->callback([&o, def] {
            if (o.format.empty()) o.format = def;
        });
    };
    auto add_root = [&](CLI::App* c) {
        c->add_option("--r", o.r, "Modulus r of the root of unity")->check(CLI::PositiveNumber);
        c->add_option("--e", o.e, "Exponent e, w = zeta_r^e")->check(CLI::NonNegativeNumber);
        c->add_option("--s", o.s, "Step s (default: order of k mod r0)")->check(CLI::PositiveNumber);
    };
    auto add_verify = [&](CLI::App* c) {
        c->add_option("--budget", o.budget, "Verification work budget in digit steps (0: unlimited)");
        c->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    };

    auto* parse = app.add_subcommand("parse", "Validate an automaton and print its normalized form");
    add_input(parse);
    add_format(parse, "text");

    auto* seq = app.add_subcommand("seq", "Print the first terms of the sequence");
    add_input(seq);
    seq->add_option("--count", o.count, "Number of terms")->check(CLI::PositiveNumber);
    add_format(seq, "text");

    auto* matrix = app.add_subcommand("matrix", "Polynomial transition matrix, its products and truncations");
    add_input(matrix);
    matrix->add_flag("--reduced", o.reduced, "Use the reduced matrix");
    matrix->add_option("--power", o.power, "Ordered product of t factors")->check(CLI::PositiveNumber);
    matrix->add_option("--side", o.side, "Product order")->check(CLI::IsMember({"auto", "left", "right"}));
    matrix->add_option("--truncate", o.truncate, "Truncate the product to n terms")->check(CLI::PositiveNumber);
    add_format(matrix, "text");

    auto* span = app.add_subcommand("span", "Linear relations among the state functions");
    add_input(span);
    add_format(span, "json");

    auto* synth = app.add_subcommand("synth", "Synthesize a recurrence");
    add_input(synth);
    add_root(synth);
    synth->add_flag("--minimal", o.minimal, "Use the minimal polynomial");
    synth->add_flag("--galois", o.galois, "Include the Galois invariance report");
    synth->add_option("--verify", o.verify_to, "Verify for n up to this bound")->check(CLI::PositiveNumber);
    add_verify(synth);
    add_format(synth, "json");

    auto* ver = app.add_subcommand("verify", "Synthesize and verify a recurrence");
    add_input(ver);
    add_root(ver);
    ver->add_flag("--minimal", o.minimal, "Use the minimal polynomial");
    ver->add_option("--n-max", o.n_max, "Largest n checked")->check(CLI::PositiveNumber);
    add_verify(ver);
    add_format(ver, "json");

    auto* intrec = app.add_subcommand("intrec", "Integer-coefficient recurrence from the coset product");
    add_input(intrec);
    add_root(intrec);
    intrec->add_flag("--galois", o.galois, "Include the Galois invariance report");
    intrec->add_option("--verify", o.verify_to, "Verify for n up to this bound")->check(CLI::PositiveNumber);
    add_verify(intrec);
    add_format(intrec, "json");

    auto* classify = app.add_subcommand("tm-classify", "Classify the Thue-Morse coefficient T(2^s0; w)");
    classify->add_option("--r0", o.r0s, "Odd conductors")->required()->check(CLI::PositiveNumber);
    add_format(classify, "json");

    auto* table = app.add_subcommand("tm-table", "Integrality table over odd r0 with two or more prime factors");
    table->add_option("--bound", o.bound, "Largest r0 scanned")->check(CLI::PositiveNumber);
    table->add_flag("--long-run", o.long_run, "Allow bounds above the desk-scale limit");
    table->add_flag("--progress", o.progress, "Report progress on stderr");
    table->add_flag("--entries", o.show_entries, "Include per-r0 entries in JSON output");
    table->add_option("--threads", o.threads, "Worker threads (0: all cores)");
    add_format(table, "text");

    auto* pattern = app.add_subcommand("pattern", "Emit the pattern-counting automaton");
    pattern->add_option("--k", o.k, "Base")->check(CLI::Range(2u, 36u));
    pattern->add_option("--v", o.pattern, "Pattern digits, e.g. 11 or 1,0,12")->required();
    pattern->add_option("--m", o.modulus, "Modulus of the counter")->check(CLI::Range(u64{2}, u64{1} << 20));
    add_format(pattern, "text");

    auto* dims = app.add_subcommand("dims", "Span dimensions of the automaton and its reversal");
    add_input(dims);
    dims->add_option("--state-cap", o.state_cap, "Reversal state cap")->check(CLI::PositiveNumber);
    add_format(dims, "json");

    auto* tilde = app.add_subcommand("tilde", "Identities for the 0/1 Thue-Morse variant");
    add_root(tilde);
    tilde->add_option("--n-max", o.n_max, "Largest n checked")->check(CLI::PositiveNumber);
    add_format(tilde, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*parse) return cmd_parse(o);
        if (*seq) return cmd_seq(o);
        if (*matrix) return cmd_matrix(o);
        if (*span) return cmd_span(o);
        if (*synth) return cmd_synth(o);
        if (*ver) return cmd_verify(o);
        if (*intrec) return cmd_intrec(o);
        if (*classify) return cmd_tm_classify(o);
        if (*table) return cmd_tm_table(o);
        if (*pattern) return cmd_pattern(o);
        if (*dims) return cmd_dims(o);
        if (*tilde) return cmd_tilde(o);
    } catch (const UsageError& e) {
        std::cerr << "error[usage]: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
