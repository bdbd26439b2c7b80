#pragma once

#include <json.hpp>

#include "q2n/completion.hpp"
#include "q2n/verifier.hpp"

namespace q2n {

/// Insertion-ordered JSON: emitted documents are byte-stable for identical
/// inputs, which the CLI's determinism contract relies on.
using Json = nlohmann::ordered_json;

// Wire forms:
//   Rational   "p/q" (canonical, q > 0, denominator always present)
//   VectorQ    ["p/q", ...]
//   Interval   {"lo": "p/q", "hi": "p/q"}
//   TwoNormSpec{"kind": "cross3"|"cross3p"|"scaled"|"affine"|"mutant", ...}
//   SeqSpec    {"kind": "const"|"geometric"|"newton_sqrt"|"sum"|"diff"|"scale", ...}
//   CompletionElem {"space": <spec>, "rep": <seq>}
//
// from_* functions throw ParseError on structural problems and let the
// factories' ParameterError pass through for range violations, so callers can
// distinguish malformed input from invalid input.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json vector_to_json(const VectorQ& v);
VectorQ vector_from_json(const Json& j);

Json interval_to_json(const Interval& iv);
Interval interval_from_json(const Json& j);

Json spec_to_json(const TwoNormSpec& spec);
TwoNormSpec spec_from_json(const Json& j);

Json seq_to_json(const SeqSpec& s);  // throws DomainError for dynamic kinds
SeqSpec seq_from_json(const Json& j);

Json elem_to_json(const CompletionElem& e);
CompletionElem elem_from_json(const Json& j);

Json verdict_to_json(const EquivVerdict& v);

Json witness_to_json(const AxiomWitness& w);
Json report_to_json(const AxiomReport& rep, const TwoNormSpec& spec);

/// FNV-1a 64-bit over the compact dump; "0x" + 16 hex digits. Embedded in
/// reports so a replay can be checked against the exact spec it used.
std::string spec_hash(const TwoNormSpec& spec);

/// Parse a comma-separated vector of "p/q" or integer tokens, e.g. "1,2/3,-4".
VectorQ vector_from_csv(const std::string& text);

}  // namespace q2n
