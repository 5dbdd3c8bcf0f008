#pragma once

// JSON records for automata, matrices, span reports, recurrences and the
// Thue-Morse scan. Key order is fixed so output is stable.

#include <optional>

#include "json.hpp"

#include "autorec/automaton.hpp"
#include "autorec/polymatrix.hpp"
#include "autorec/recurrence.hpp"
#include "autorec/thuemorse.hpp"

namespace autorec {

using Json = nlohmann::ordered_json;

/// {coords: ["1/2", ...], pretty: "..."}
Json element_json(const CycloElement& a);
/// An integer or rational value as a JSON number or "p/q" string; other elements as pretty strings.
Json value_json(const CycloElement& a);

Json dfao_json(const Dfao& a);
Json polymatrix_json(const PolyMatrix& m);
Json span_json(const SpanAnalysis& s);
Json recurrence_json(const Recurrence& rec, std::optional<u64> verified_to = std::nullopt);
Json verification_json(const VerificationReport& report);
Json galois_json(const GaloisReport& report);
Json classification_json(const TmClassification& c);
Json table_json(const TmTable& t);
Json dims_json(const DimExperiment& d);
Json tilde_json(const TildeReport& t);

}  // namespace autorec
