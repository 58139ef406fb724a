#include <doctest.h>

#include "arrlab/errors.hpp"
#include "arrlab/identities.hpp"

using namespace arrlab;

namespace {
SubspaceA sa(int n, std::vector<std::vector<int>> merges) { return SubspaceA::fromBlocks(n, merges); }
Arrangement k3Arrangement() {
    return graphToArrangement(Graph::make(3, {{1, 2}, {1, 3}, {2, 3}}));
}
}  // namespace

TEST_CASE("identity names round-trip") {
    const Identity all[] = {
        Identity::DeletionRestriction, Identity::LemmaRecursion,   Identity::LemmaEulerianA,
        Identity::LemmaEulerianB,      Identity::LemmaSingleA,     Identity::LemmaSingleB,
        Identity::TheoremSn,           Identity::TheoremBn,        Identity::Steingrimsson,
        Identity::CorollarySnRing,     Identity::CorollarySnIdeal, Identity::CorollaryBnRing,
        Identity::CorollaryBnIdeal,    Identity::EulerWedge,
    };
    for (Identity id : all) {
        const auto back = identityFromName(identityName(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(identityFromName("nonsense").has_value());
}

TEST_CASE("deletion-restriction") {
    const VerificationReport r = verifyDeletionRestriction(k3Arrangement());
    CHECK(r.pass);
    CHECK(r.lhs == r.rhs);

    // singleton arrangements pass by the empty/point conventions
    CHECK(verifyDeletionRestriction(Arrangement::typeA(4, {sa(4, {{1, 2, 3}})})).pass);
    CHECK(verifyDeletionRestriction(
              Arrangement::typeB(2, {SubspaceB::fromParts(2, {1, 2}, {})}))
              .pass);

    CHECK_THROWS_AS(verifyDeletionRestriction(Arrangement::typeA(3, {})), ValidationError);
}

TEST_CASE("h-polynomial recursion") {
    const VerificationReport r = verifyLemmaRecursion(k3Arrangement(), 0);
    CHECK(r.pass);

    // the worked two-hyperplane instance: h = x + 3
    const Arrangement two = Arrangement::typeA(3, {sa(3, {{1, 2}}), sa(3, {{1, 3}})});
    const VerificationReport t = verifyLemmaRecursion(two, 1);
    CHECK(t.pass);
    CHECK(t.lhs == "x + 3");

    // mixed dimensions: hyperedge plus edge
    const Arrangement mixed = Arrangement::typeA(4, {sa(4, {{1, 2, 3}}), sa(4, {{3, 4}})});
    CHECK(verifyLemmaRecursion(mixed, 0).pass);
    CHECK(verifyLemmaRecursion(mixed, 1).pass);

    CHECK_THROWS_AS(verifyLemmaRecursion(Arrangement::typeA(3, {sa(3, {{1, 2}})}), 0),
                    ValidationError);
    CHECK_THROWS_AS(verifyLemmaRecursion(two, 2), IndexOutOfRange);
}

TEST_CASE("Eulerian identities for the full complexes") {
    for (int n = 2; n <= 4; ++n) CHECK(verifyLemmaEulerian(Family::TypeA, n).pass);
    for (int n = 1; n <= 3; ++n) CHECK(verifyLemmaEulerian(Family::TypeB, n).pass);

    const VerificationReport a3 = verifyLemmaEulerian(Family::TypeA, 3);
    CHECK(a3.lhs == "(x^3 + 4x^2 + x) / (1-x)^4");
    const VerificationReport b2 = verifyLemmaEulerian(Family::TypeB, 2);
    CHECK(b2.lhs == "(x^2 + 6x + 1) / (1-x)^3");

    CHECK_THROWS_AS(verifyLemmaEulerian(Family::TypeA, 7), EnumerationBudget);
    CHECK_THROWS_AS(verifyLemmaEulerian(Family::TypeA, 1), ValidationError);
}

TEST_CASE("single-subspace identities") {
    // {123|4}: the link is a copy of the rank-2 complex, numerator x + x^2
    const VerificationReport r = verifyLemmaSingleA(sa(4, {{1, 2, 3}}));
    CHECK(r.pass);
    CHECK(r.lhs == "(x^2 + x) / (1-x)^3");

    // hyperplane of S_3: same numerator
    CHECK(verifyLemmaSingleA(sa(3, {{1, 2}})).lhs == "(x^2 + x) / (1-x)^3");

    // {x_1=0} in B_2: link is the B_1 complex
    const VerificationReport b = verifyLemmaSingleB(SubspaceB::fromParts(2, {1}, {}));
    CHECK(b.pass);
    CHECK(b.lhs == "(x + 1) / (1-x)^2");

    // the origin: degree-0 series 1/(1-x)
    const VerificationReport o = verifyLemmaSingleB(SubspaceB::fromParts(2, {1, 2}, {}));
    CHECK(o.pass);
    CHECK(o.lhs == "(1) / (1-x)^1");

    CHECK_THROWS_AS(verifyLemmaSingleA(sa(3, {})), ValidationError);
}

TEST_CASE("series theorem in type A with the worked instance") {
    const VerificationReport r = verifyTheoremSn(k3Arrangement());
    CHECK(r.pass);
    CHECK(r.lhs == "(5x^2 + x) / (1-x)^3");
    CHECK(r.rhs == "(5x^2 + x) / (1-x)^3");

    // mixed-dimension antichain
    const Arrangement mixed = Arrangement::typeA(4, {sa(4, {{1, 2, 3}}), sa(4, {{3, 4}})});
    CHECK(verifyTheoremSn(mixed).pass);

    // corrupting the f-vector must break it
    FVector bad = linkFVector(k3Arrangement());
    bad.counts.back() += 1;
    const VerificationReport broken = verifyTheoremSn(k3Arrangement(), &bad);
    CHECK_FALSE(broken.pass);
    CHECK(broken.lhs != broken.rhs);

    CHECK_THROWS_AS(verifyTheoremSn(Arrangement::typeA(3, {})), ValidationError);
    CHECK_THROWS_AS(
        verifyTheoremSn(Arrangement::typeB(2, {SubspaceB::fromParts(2, {1}, {})})),
        AmbientMismatch);
}

TEST_CASE("series theorem in type B") {
    // {x_1=0} in B_1: constant tail, series 1/(1-x)
    const Arrangement b1 = Arrangement::typeB(1, {SubspaceB::fromParts(1, {1}, {})});
    const VerificationReport r = verifyTheoremBn(b1);
    CHECK(r.pass);
    CHECK(r.lhs == "(1) / (1-x)^1");

    // {x_1=x_2} in B_2 and the full B_2 arrangement
    CHECK(verifyTheoremBn(Arrangement::typeB(2, {SubspaceB::fromParts(2, {}, {{{1, 2}, {1, 1}}})}))
              .pass);
    CHECK(verifyTheoremBn(fullReflectionArrangement(Ambient{Family::TypeB, 2})).pass);

    FVector bad = linkFVector(b1);
    bad.counts.push_back(99);
    CHECK_FALSE(verifyTheoremBn(b1, &bad).pass);
}

TEST_CASE("graph specialization agrees with the general theorem") {
    for (uint32_t mask = 1; mask < (1u << 6); ++mask) {
        const std::pair<int, int> all[] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < 6; ++b)
            if (mask >> b & 1) edges.push_back(all[b]);
        const Graph g = Graph::make(4, edges);
        const VerificationReport viaGraph = verifySteingrimsson(g);
        const VerificationReport viaArrangement = verifyTheoremSn(graphToArrangement(g));
        CHECK(viaGraph.pass);
        CHECK(viaArrangement.pass);
        CHECK(viaGraph.lhs == viaArrangement.lhs);
    }
    CHECK_THROWS_AS(verifySteingrimsson(Graph::make(3, {})), EmptyEdgeSet);
}

TEST_CASE("Hilbert corollaries with pinned window values") {
    const auto reports = verifyCorollarySn(k3Arrangement());
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].identity == Identity::CorollarySnRing);
    CHECK(reports[0].pass);
    CHECK(reports[0].lhs == "[1, 8, 21, 40, 65, 96, 133]");
    CHECK(reports[1].identity == Identity::CorollarySnIdeal);
    CHECK(reports[1].pass);
    CHECK(reports[1].lhs == "[0, 0, 6, 24, 60, 120, 210]");

    // {x_1=x_2} in B_2: cone Hilbert value at m=1 equals T(a;3) = 3
    const Arrangement b = Arrangement::typeB(2, {SubspaceB::fromParts(2, {}, {{{1, 2}, {1, 1}}})});
    const auto rb = verifyCorollaryBn(b);
    REQUIRE(rb.size() == 2);
    CHECK(rb[0].pass);
    CHECK(rb[1].pass);
    CHECK(rb[0].lhs.substr(0, 5) == "[1, 3");

    // nonempty arrangements always satisfy T(a;1) = 1
    CHECK(tailPoly(k3Arrangement()).evalInt(1) == 1);
    CHECK(tailPoly(b).evalInt(1) == 1);
}

TEST_CASE("Euler characteristic counts regions") {
    const VerificationReport r = verifyEulerWedge(k3Arrangement());
    CHECK(r.pass);
    CHECK(r.lhs == "5");

    // path on 3 vertices: 4 regions, wedge of 3 spheres
    const VerificationReport p =
        verifyEulerWedge(graphToArrangement(Graph::make(3, {{1, 2}, {2, 3}})));
    CHECK(p.pass);
    CHECK(p.lhs == "3");

    // a single hyperplane: one sphere, sign follows the link dimension
    const VerificationReport one =
        verifyEulerWedge(Arrangement::typeA(4, {sa(4, {{1, 2}})}));
    CHECK(one.pass);

    CHECK_THROWS_AS(verifyEulerWedge(hypergraphToArrangement(Hypergraph::make(3, {{1, 2, 3}}))),
                    NotHyperplanes);
}

TEST_CASE("runAll preserves order and captures failures") {
    Catalog cat;
    CHECK(runAll(cat, 1).empty());

    cat.items.push_back({"ok", [] {
                             return std::vector<VerificationReport>{
                                 verifyLemmaEulerian(Family::TypeA, 2)};
                         }});
    cat.items.push_back({"throws", []() -> std::vector<VerificationReport> {
                             throw ValidationError("synthetic failure");
                         }});
    const auto rs = runAll(cat, 1);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].pass);
    CHECK_FALSE(rs[1].pass);
    CHECK(rs[1].input == "throws");
}

TEST_CASE("the standard catalog passes, independent of thread count") {
    const Catalog cat = standardCatalog();
    CHECK(cat.items.size() > 2000);

    const auto rs = runAll(cat, 4);
    CHECK(rs.size() > 8000);
    size_t failures = 0;
    for (const auto& r : rs) {
        if (!r.pass) {
            ++failures;
            if (failures <= 3) {
                CAPTURE(identityName(r.identity));
                CAPTURE(r.input);
                CHECK(r.pass);
            }
        }
        CHECK(r.pass == (r.lhs == r.rhs));
    }
    CHECK(failures == 0);

    // a slice re-run single-threaded gives byte-identical reports
    Catalog slice;
    for (size_t i = 0; i < 60 && i < cat.items.size(); ++i) slice.items.push_back(cat.items[i]);
    const auto r1 = runAll(slice, 1);
    const auto r2 = runAll(slice, 3);
    REQUIRE(r1.size() == r2.size());
    for (size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].identity == r2[i].identity);
        CHECK(r1[i].input == r2[i].input);
        CHECK(r1[i].lhs == r2[i].lhs);
        CHECK(r1[i].rhs == r2[i].rhs);
        CHECK(r1[i].pass == r2[i].pass);
    }
}
