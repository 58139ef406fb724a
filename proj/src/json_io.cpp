#include "arrlab/json_io.hpp"

#include <limits>

#include "arrlab/errors.hpp"

namespace arrlab {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ValidationError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(where + ": missing field \"" + key + "\"");
    return *it;
}

const Json* optField(const Json& j, const char* key) {
    if (!j.is_object()) return nullptr;
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

void requireArray(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError(where + ": expected an array");
}

int smallInt(const Json& j, const std::string& where) {
    const Int v = intFromJson(j, where);
    if (v < -1000000 || v > 1000000) throw ValidationError(where + ": value out of range");
    return static_cast<int>(v);
}

std::vector<int> smallIntList(const Json& j, const std::string& where) {
    requireArray(j, where);
    std::vector<int> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(smallInt(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::pair<int, int>> pairList(const Json& j, const std::string& where) {
    requireArray(j, where);
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        requireArray(j[i], at);
        if (j[i].size() != 2) throw ValidationError(at + ": expected a pair");
        out.emplace_back(smallInt(j[i][0], at + "[0]"), smallInt(j[i][1], at + "[1]"));
    }
    return out;
}

std::string describeType(const Json& j) { return j.type_name(); }

ParsedInput parseInputJson(const Json& j, const std::string& where);

}  // namespace

Json intToJson(const Int& v) {
    static const Int lo = std::numeric_limits<int64_t>::min();
    static const Int hi = std::numeric_limits<int64_t>::max();
    if (v >= lo && v <= hi) return Json(static_cast<int64_t>(v));
    return Json(v.str());
}

Int intFromJson(const Json& j, const std::string& where) {
    if (j.is_number_unsigned()) return Int(j.get<uint64_t>());
    if (j.is_number_integer()) return Int(j.get<int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty()) throw ValidationError(where + ": empty integer string");
        size_t start = s[0] == '-' ? 1 : 0;
        if (start == s.size()) throw ValidationError(where + ": malformed integer \"" + s + "\"");
        for (size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw ValidationError(where + ": malformed integer \"" + s + "\"");
        return Int(s);
    }
    throw ValidationError(where + ": expected an integer, got " + describeType(j));
}

Json polynomialToJson(const IntPolynomial& p) {
    Json out = Json::array();
    for (const Int& c : p.coeffs()) out.push_back(intToJson(c));
    return out;
}

IntPolynomial polynomialFromJson(const Json& j, const std::string& where) {
    requireArray(j, where);
    std::vector<Int> coeffs;
    for (size_t i = 0; i < j.size(); ++i)
        coeffs.push_back(intFromJson(j[i], where + "[" + std::to_string(i) + "]"));
    return IntPolynomial(std::move(coeffs));
}

Json seriesToJson(const RationalSeries& r) {
    return Json{{"num", polynomialToJson(r.numerator())}, {"denom_power", r.denomPower()}};
}

RationalSeries seriesFromJson(const Json& j, const std::string& where) {
    IntPolynomial num = polynomialFromJson(field(j, "num", where), where + ".num");
    const int dp = smallInt(field(j, "denom_power", where), where + ".denom_power");
    if (dp < 0) throw ValidationError(where + ".denom_power: must be nonnegative");
    return RationalSeries(std::move(num), dp);
}

Json fvectorToJson(const FVector& f) {
    Json out = Json::array();
    for (const Int& c : f.counts) out.push_back(intToJson(c));
    return out;
}

FVector fvectorFromJson(const Json& j, const std::string& where) {
    requireArray(j, where);
    FVector f;
    for (size_t i = 0; i < j.size(); ++i)
        f.counts.push_back(intFromJson(j[i], where + "[" + std::to_string(i) + "]"));
    return f;
}

Json complexToJson(const AbstractComplex& c) {
    return Json{{"vertices", c.vertexCount}, {"facets", c.facets}};
}

Json shellingOrderToJson(const ShellingOrder& s) { return Json(s.facets); }

Json shellingCheckToJson(const ShellingCheck& c) {
    Json out;
    out["is_shelling"] = c.isShelling;
    out["first_violation"] = c.firstViolation ? Json(*c.firstViolation) : Json(nullptr);
    return out;
}

Json arrangementToJson(const Arrangement& a) {
    Json out;
    out["ambient"] = {{"family", a.ambient().family == Family::TypeA ? "A" : "B"},
                      {"n", a.ambient().n}};
    Json subs = Json::array();
    if (a.ambient().family == Family::TypeA) {
        for (const auto& s : a.subspacesA()) {
            Json blocks = Json::array();
            for (const auto& b : s.blocks())
                if (b.size() >= 2) blocks.push_back(b);
            subs.push_back(Json{{"blocks", std::move(blocks)}});
        }
    } else {
        for (const auto& s : a.subspacesB()) {
            Json sb = Json::array();
            for (const auto& [mem, sg] : s.signedBlocks()) {
                if (mem.size() < 2) continue;
                Json signs = Json::array();
                for (int e : sg) signs.push_back(e > 0 ? "+" : "-");
                sb.push_back(Json{{"members", mem}, {"signs", std::move(signs)}});
            }
            subs.push_back(Json{{"zero", s.zeroSet()}, {"signed_blocks", std::move(sb)}});
        }
    }
    out["subspaces"] = std::move(subs);
    return out;
}

Arrangement arrangementFromJson(const Json& j) {
    const std::string where = "arrangement";
    const Json& amb = field(j, "ambient", where);
    const Json& fam = field(amb, "family", where + ".ambient");
    if (!fam.is_string()) throw ValidationError(where + ".ambient.family: expected a string");
    const std::string f = fam.get<std::string>();
    if (f != "A" && f != "B")
        throw ValidationError(where + ".ambient.family: expected \"A\" or \"B\", got \"" + f + "\"");
    const int n = smallInt(field(amb, "n", where + ".ambient"), where + ".ambient.n");
    const Json& subs = field(j, "subspaces", where);
    requireArray(subs, where + ".subspaces");

    if (f == "A") {
        std::vector<SubspaceA> v;
        for (size_t i = 0; i < subs.size(); ++i) {
            const std::string at = where + ".subspaces[" + std::to_string(i) + "]";
            const Json& blocks = field(subs[i], "blocks", at);
            requireArray(blocks, at + ".blocks");
            std::vector<std::vector<int>> merges;
            for (size_t b = 0; b < blocks.size(); ++b)
                merges.push_back(smallIntList(blocks[b], at + ".blocks[" + std::to_string(b) + "]"));
            v.push_back(SubspaceA::fromBlocks(n, merges));
        }
        return Arrangement::typeA(n, v);
    }

    std::vector<SubspaceB> v;
    for (size_t i = 0; i < subs.size(); ++i) {
        const std::string at = where + ".subspaces[" + std::to_string(i) + "]";
        std::vector<int> zero;
        if (const Json* z = optField(subs[i], "zero")) zero = smallIntList(*z, at + ".zero");
        std::vector<std::pair<std::vector<int>, std::vector<int>>> merges;
        if (const Json* sb = optField(subs[i], "signed_blocks")) {
            requireArray(*sb, at + ".signed_blocks");
            for (size_t b = 0; b < sb->size(); ++b) {
                const std::string bat = at + ".signed_blocks[" + std::to_string(b) + "]";
                std::vector<int> members = smallIntList(field((*sb)[b], "members", bat), bat + ".members");
                const Json& sj = field((*sb)[b], "signs", bat);
                requireArray(sj, bat + ".signs");
                if (sj.size() != members.size())
                    throw ValidationError(bat + ": signs and members differ in length");
                std::vector<int> signs;
                for (size_t u = 0; u < sj.size(); ++u) {
                    const std::string sat = bat + ".signs[" + std::to_string(u) + "]";
                    if (!sj[u].is_string()) throw ValidationError(sat + ": expected \"+\" or \"-\"");
                    const std::string sv = sj[u].get<std::string>();
                    if (sv == "+")
                        signs.push_back(1);
                    else if (sv == "-")
                        signs.push_back(-1);
                    else
                        throw ValidationError(sat + ": expected \"+\" or \"-\", got \"" + sv + "\"");
                }
                merges.emplace_back(std::move(members), std::move(signs));
            }
        }
        if (!subs[i].is_object() || (!optField(subs[i], "zero") && !optField(subs[i], "signed_blocks")))
            throw ValidationError(at + ": expected \"zero\" and/or \"signed_blocks\"");
        v.push_back(SubspaceB::fromParts(n, zero, merges));
    }
    return Arrangement::typeB(n, v);
}

Graph graphFromJson(const Json& j) {
    const int n = smallInt(field(j, "n", "graph"), "graph.n");
    return Graph::make(n, pairList(field(j, "edges", "graph"), "graph.edges"));
}

Hypergraph hypergraphFromJson(const Json& j) {
    const int n = smallInt(field(j, "n", "hypergraph"), "hypergraph.n");
    const Json& he = field(j, "hyperedges", "hypergraph");
    requireArray(he, "hypergraph.hyperedges");
    std::vector<std::vector<int>> edges;
    for (size_t i = 0; i < he.size(); ++i)
        edges.push_back(smallIntList(he[i], "hypergraph.hyperedges[" + std::to_string(i) + "]"));
    return Hypergraph::make(n, edges);
}

SignedGraph signedGraphFromJson(const Json& j) {
    const int n = smallInt(field(j, "n", "signed graph"), "signed graph.n");
    std::vector<std::pair<int, int>> pos, neg;
    std::vector<int> zero;
    if (const Json* p = optField(j, "positive")) pos = pairList(*p, "signed graph.positive");
    if (const Json* q = optField(j, "negative")) neg = pairList(*q, "signed graph.negative");
    if (const Json* z = optField(j, "zero_vertices"))
        zero = smallIntList(*z, "signed graph.zero_vertices");
    return SignedGraph::make(n, pos, neg, zero);
}

namespace {

ParsedInput parseInputJson(const Json& j, const std::string& where) {
    if (!j.is_object())
        throw ValidationError(where + ": expected an object, got " + describeType(j));
    ParsedInput out;
    if (j.contains("ambient")) {
        out.arrangement = arrangementFromJson(j);
        return out;
    }
    if (j.contains("edges")) {
        Graph g = graphFromJson(j);
        out.arrangement = g.edges.empty() ? Arrangement::typeA(g.n, std::vector<SubspaceA>{})
                                          : graphToArrangement(g);
        out.graph = std::move(g);
        return out;
    }
    if (j.contains("hyperedges")) {
        Hypergraph h = hypergraphFromJson(j);
        out.arrangement = h.hyperedges.empty()
                              ? Arrangement::typeA(h.n, std::vector<SubspaceA>{})
                              : hypergraphToArrangement(h);
        out.hypergraph = std::move(h);
        return out;
    }
    if (j.contains("positive") || j.contains("negative") || j.contains("zero_vertices")) {
        SignedGraph s = signedGraphFromJson(j);
        out.arrangement = s.hasConstraints() ? signedGraphToArrangement(s)
                                             : Arrangement::typeB(s.n, std::vector<SubspaceB>{});
        out.signedGraph = std::move(s);
        return out;
    }
    throw ValidationError(where +
                          ": unrecognized document; expected an arrangement (\"ambient\"), graph "
                          "(\"edges\"), hypergraph (\"hyperedges\"), or signed graph "
                          "(\"positive\"/\"negative\"/\"zero_vertices\")");
}

}  // namespace

Json parseJsonText(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("input is not valid JSON: ") + e.what());
    }
}

ParsedInput parseInputDocument(const std::string& text) {
    return parseInputJson(parseJsonText(text), "input");
}

Json reportToJson(const VerificationReport& r) {
    Json out;
    out["identity"] = identityName(r.identity);
    out["input"] = r.input;
    out["lhs"] = r.lhs;
    out["rhs"] = r.rhs;
    out["pass"] = r.pass;
    return out;
}

VerificationReport reportFromJson(const Json& j) {
    const Json& idj = field(j, "identity", "report");
    if (!idj.is_string()) throw ValidationError("report.identity: expected a string");
    const auto id = identityFromName(idj.get<std::string>());
    if (!id)
        throw ValidationError("report.identity: unknown identity \"" + idj.get<std::string>() + "\"");
    VerificationReport r;
    r.identity = *id;
    const Json& in = field(j, "input", "report");
    const Json& lhs = field(j, "lhs", "report");
    const Json& rhs = field(j, "rhs", "report");
    const Json& pass = field(j, "pass", "report");
    if (!in.is_string() || !lhs.is_string() || !rhs.is_string())
        throw ValidationError("report: input/lhs/rhs must be strings");
    if (!pass.is_boolean()) throw ValidationError("report.pass: expected a boolean");
    r.input = in.get<std::string>();
    r.lhs = lhs.get<std::string>();
    r.rhs = rhs.get<std::string>();
    r.pass = pass.get<bool>();
    return r;
}

Fixture fixtureFromJson(const Json& j) {
    Fixture f;
    f.input = parseInputJson(field(j, "arrangement", "fixture"), "fixture.arrangement");
    f.fvector = fvectorFromJson(field(j, "fvector", "fixture"), "fixture.fvector");
    const Json& idj = field(j, "identity", "fixture");
    if (!idj.is_string()) throw ValidationError("fixture.identity: expected a string");
    const std::string name = idj.get<std::string>();
    const auto id = identityFromName(name);
    if (!id || (*id != Identity::TheoremSn && *id != Identity::TheoremBn &&
                *id != Identity::Steingrimsson))
        throw ValidationError(
            "fixture.identity: expected \"theorem-sn\", \"theorem-bn\", or \"steingrimsson\", got \"" +
            name + "\"");
    f.identity = *id;
    if (f.identity == Identity::Steingrimsson && !f.input.graph)
        throw ValidationError("fixture: steingrimsson needs a graph document");
    if (f.identity == Identity::TheoremSn && f.input.arrangement.ambient().family != Family::TypeA)
        throw ValidationError("fixture: theorem-sn needs a type A input");
    if (f.identity == Identity::TheoremBn && f.input.arrangement.ambient().family != Family::TypeB)
        throw ValidationError("fixture: theorem-bn needs a type B input");
    if (f.input.arrangement.empty())
        throw ValidationError("fixture: the arrangement must be nonempty");
    return f;
}

}  // namespace arrlab
