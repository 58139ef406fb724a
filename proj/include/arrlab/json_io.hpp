#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "arrlab/arrangement.hpp"
#include "arrlab/faces.hpp"
#include "arrlab/graphs.hpp"
#include "arrlab/identities.hpp"
#include "arrlab/polyseries.hpp"
#include "arrlab/shelling.hpp"

// JSON (de)serialization for every document the CLI reads or writes. Parsers
// throw ParseError on malformed JSON and ValidationError with a field path on
// schema violations; serialized integers are JSON numbers when they fit in
// int64 and decimal strings otherwise, and parsers accept both forms.

namespace arrlab {

using Json = nlohmann::json;

Json intToJson(const Int& v);
Int intFromJson(const Json& j, const std::string& where);

// Polynomials are integer coefficient arrays in ascending degree.
Json polynomialToJson(const IntPolynomial& p);
IntPolynomial polynomialFromJson(const Json& j, const std::string& where);

// {"num": [...], "denom_power": k}
Json seriesToJson(const RationalSeries& r);
RationalSeries seriesFromJson(const Json& j, const std::string& where);

// f-vectors include the empty-face count in position 0.
Json fvectorToJson(const FVector& f);
FVector fvectorFromJson(const Json& j, const std::string& where);

// {"vertices": n, "facets": [[...], ...]}
Json complexToJson(const AbstractComplex& c);

Json shellingOrderToJson(const ShellingOrder& s);
// {"is_shelling": bool, "first_violation": j or null}  (1-based position)
Json shellingCheckToJson(const ShellingCheck& c);

Json arrangementToJson(const Arrangement& a);
Arrangement arrangementFromJson(const Json& j);

Graph graphFromJson(const Json& j);
Hypergraph hypergraphFromJson(const Json& j);
SignedGraph signedGraphFromJson(const Json& j);

// One input document, auto-detected by its keys: an arrangement
// ({"ambient": ...}), a graph ({"edges": ...}), a hypergraph
// ({"hyperedges": ...}), or a signed graph ({"positive"/"negative"/
// "zero_vertices": ...}). Graph-like inputs are also converted to their
// arrangements; conversion of a constraint-free graph yields the empty
// arrangement in the matching ambient.
struct ParsedInput {
    Arrangement arrangement;
    std::optional<Graph> graph;
    std::optional<Hypergraph> hypergraph;
    std::optional<SignedGraph> signedGraph;
};
ParsedInput parseInputDocument(const std::string& text);

Json reportToJson(const VerificationReport& r);
VerificationReport reportFromJson(const Json& j);

// Negative-control fixture: {"arrangement": <input document>,
// "fvector": [...], "identity": "theorem-sn"|"theorem-bn"|"steingrimsson"}.
// The stored f-vector replaces the enumerated one for the named identity.
struct Fixture {
    ParsedInput input;
    FVector fvector;
    Identity identity = Identity::TheoremSn;
};
Fixture fixtureFromJson(const Json& j);

Json parseJsonText(const std::string& text);

}  // namespace arrlab
