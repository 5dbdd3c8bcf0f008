#include "autorec/json_export.hpp"

namespace autorec {

namespace {

std::string word_string(const Word& w, unsigned k) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (k > 10 && i > 0) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

Json rational_json(const BigRational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return to_string(q);
}

std::string kind_string(Rationality::Kind k) { return to_string(k); }

}  // namespace

Json element_json(const CycloElement& a) {
    Json coords = Json::array();
    for (const auto& c : a.coords()) coords.push_back(to_string(c));
    return Json{{"conductor", a.field().conductor()}, {"coords", coords}, {"pretty", a.to_string()}};
}

Json value_json(const CycloElement& a) {
    if (a.is_rational()) return rational_json(a.rational_value());
    return a.to_string();
}

Json dfao_json(const Dfao& a) {
    Json outputs = Json::object();
    Json delta = Json::object();
    for (std::size_t q = 0; q < a.size(); ++q) {
        outputs[a.state_names()[q]] = a.output_value(q).to_string();
        Json row = Json::array();
        for (unsigned d = 0; d < a.base(); ++d) row.push_back(a.state_names()[a.next(q, d)]);
        delta[a.state_names()[q]] = row;
    }
    return Json{{"base", a.base()},
                {"direction", std::string(to_string(a.direction()))},
                {"states", a.state_names()},
                {"outputs", outputs},
                {"delta", delta}};
}

Json polymatrix_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return Json{{"dim", m.dim()}, {"field", m.field().conductor()}, {"rows", rows}};
}

Json span_json(const SpanAnalysis& s) {
    const auto& names = s.automaton.state_names();
    Json generators = Json::array();
    for (auto g : s.generators) generators.push_back(names[g]);
    Json dependents = Json::array();
    for (std::size_t p = 0; p < s.dependents.size(); ++p) {
        Json alphas = Json::array();
        for (const auto& a : s.alphas[p]) alphas.push_back(value_json(a));
        dependents.push_back(Json{{"state", names[s.dependents[p]]}, {"alphas", alphas}});
    }
    Json words = Json::array();
    for (const auto& w : s.witness_words) words.push_back(word_string(w, s.automaton.base()));
    return Json{{"states", s.automaton.size()},
                {"rank", s.rank},
                {"reduced_dim", s.reduced_dim()},
                {"generators", generators},
                {"dependents", dependents},
                {"alpha_field", s.alpha_field.conductor()},
                {"witness_words", words},
                {"reduced_matrix", polymatrix_json(reduced_matrix(s))}};
}

Json recurrence_json(const Recurrence& rec, std::optional<u64> verified_to) {
    Json coeffs = Json::array();
    for (const auto& c : rec.coefficients) coeffs.push_back(element_json(c));
    Json out{{"k", rec.root.k},
             {"r", rec.root.r},
             {"e", rec.root.e},
             {"r0", rec.root.r0},
             {"s", rec.root.s},
             {"order", rec.order()},
             {"provenance", std::string(to_string(rec.provenance))},
             {"coefficients", coeffs},
             {"verified_to", verified_to ? Json(*verified_to) : Json(nullptr)}};
    out["scale"] = rec.scale.get_str();
    out["equation"] = rec.to_string();
    return out;
}

Json verification_json(const VerificationReport& report) {
    Json out{{"n_max", report.n_max}, {"all_zero", report.all_zero}, {"first_failure", nullptr}};
    if (report.first_failure) {
        out["first_failure"] = Json{{"n", report.first_failure->first},
                                    {"residual", element_json(report.first_failure->second)}};
    }
    return out;
}

Json galois_json(const GaloisReport& report) {
    Json rat = Json::array();
    for (const auto& r : report.rationality) rat.push_back(kind_string(r.kind));
    Json periods = Json::array();
    for (const auto& row : report.period_coords) {
        Json coords = Json::array();
        for (const auto& c : row) coords.push_back(rational_json(c));
        periods.push_back(coords);
    }
    return Json{{"invariant", report.invariant},
                {"primitive", report.primitive},
                {"all_rational", report.all_rational},
                {"rationality", rat},
                {"coset_representatives", report.coset_representatives},
                {"period_coords", periods}};
}

Json classification_json(const TmClassification& c) {
    return Json{{"r0", c.r0},
                {"s0", c.s0},
                {"phi", c.phi},
                {"prime", c.prime == 0 ? Json(nullptr) : Json(c.prime)},
                {"case", std::string(to_string(c.label))},
                {"value", value_json(c.value)},
                {"rationality", kind_string(c.rationality.kind)},
                {"is_real", c.is_real},
                {"is_imaginary", c.is_imaginary},
                {"coords", element_json(c.value)["coords"]}};
}

Json table_json(const TmTable& t) {
    static const char* rows[] = {"one", "minus_one", "non_integer"};
    Json cells = Json::object();
    for (std::size_t i = 0; i < 3; ++i) {
        cells[rows[i]] = Json{{"phi_eq_2s0", t.counts[i][0]}, {"phi_gt_2s0", t.counts[i][1]}, {"total", t.row_total(i)}};
    }
    return Json{{"bound", t.bound},
                {"cells", cells},
                {"totals", Json{{"phi_eq_2s0", t.column_total(0)},
                                {"phi_gt_2s0", t.column_total(1)},
                                {"tabulated", t.in_r},
                                {"scanned", t.scanned}}}};
}

Json dims_json(const DimExperiment& d) {
    return Json{{"forward_dim", d.forward_dim},
                {"backward_dim", d.backward_dim},
                {"forward_states", d.forward_states},
                {"backward_states", d.backward_states}};
}

Json tilde_json(const TildeReport& t) {
    return Json{{"r", t.root.r},
                {"e", t.root.e},
                {"r0", t.root.r0},
                {"s", t.root.s},
                {"c", element_json(t.c)},
                {"c_is_one", t.c_is_one},
                {"polynomial_identity", t.polynomial_identity},
                {"shifted_identity", t.shifted_identity},
                {"two_term", t.two_term ? Json(*t.two_term) : Json(nullptr)},
                {"synthesized_order", t.synthesized_order},
                {"first_failure", t.first_failure ? Json(*t.first_failure) : Json(nullptr)}};
}

}  // namespace autorec
