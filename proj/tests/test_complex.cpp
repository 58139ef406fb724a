#include <doctest.h>

#include <algorithm>

#include "arrlab/errors.hpp"
#include "arrlab/faces.hpp"

using namespace arrlab;

namespace {
SubspaceA sa(int n, std::vector<std::vector<int>> merges) { return SubspaceA::fromBlocks(n, merges); }
FVector fv(std::vector<long long> counts) {
    return FVector{std::vector<Int>(counts.begin(), counts.end())};
}
IntPolynomial poly(std::vector<long long> ascending) {
    return IntPolynomial(std::vector<Int>(ascending.begin(), ascending.end()));
}
}  // namespace

TEST_CASE("face enumeration matches Coxeter complex sizes") {
    // nonempty faces are ordered set partitions of {1,2,3} into >= 2 blocks:
    // 6 vertices plus 6 edges
    CHECK(enumerateFacesA(3).size() == 12);
    CHECK(coxeterFVector(Ambient{Family::TypeA, 3}) == fv({1, 6, 6}));
    CHECK(coxeterFVector(Ambient{Family::TypeA, 4}) == fv({1, 14, 36, 24}));
    CHECK(coxeterFVector(Ambient{Family::TypeB, 2}) == fv({1, 8, 8}));
    CHECK(coxeterFVector(Ambient{Family::TypeB, 3}) == fv({1, 26, 72, 48}));

    // facet count is the Weyl group order
    CHECK(coxeterFVector(Ambient{Family::TypeA, 5}).counts.back() == 120);
    CHECK(coxeterFVector(Ambient{Family::TypeB, 4}).counts.back() == 384);
}

TEST_CASE("face geometry accessors") {
    // partition 12|3 as a vertex of the hexagon
    const FaceA v{{0, 0, 1}, 2};
    CHECK(v.dim() == 0);
    CHECK(v.blocks() == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(faceSupport(v) == sa(3, {{1, 2}}));

    const FaceB w{{1, 0, 2}, 1};  // x2 = 0, |x1| = |x3|, x1 > 0 > x3
    CHECK(w.dim() == 0);
    CHECK(w.zeroSet() == std::vector<int>{2});
    CHECK(w.signOf(1) == 1);
    CHECK(w.signOf(3) == -1);
    const SubspaceB sup = faceSupport(w);
    CHECK(sup.zeroSet() == std::vector<int>{2});
    CHECK(sup.signedBlocks() ==
          std::vector<std::pair<std::vector<int>, std::vector<int>>>{{{1, 3}, {1, -1}}});
}

TEST_CASE("link f-vectors of reference arrangements") {
    const Arrangement k3 = Arrangement::typeA(
        3, {sa(3, {{1, 2}}), sa(3, {{1, 3}}), sa(3, {{2, 3}})});
    CHECK(linkFVector(k3) == fv({1, 6}));

    // empty arrangement: the void complex
    CHECK(linkFVector(Arrangement::typeA(4, {})).isVoid());
    // origin-only arrangement: just the empty face
    CHECK(linkFVector(Arrangement::typeA(3, {sa(3, {{1, 2, 3}})})) == fv({1}));
    CHECK(linkFVector(Arrangement::typeB(1, {SubspaceB::fromParts(1, {1}, {})})) == fv({1}));

    // single hyperplane of S_3: two antipodal vertices
    CHECK(linkFVector(Arrangement::typeA(3, {sa(3, {{1, 2}})})) == fv({1, 2}));
    // {x_1=0} in B_2: the link is a copy of the B_1 complex (2 points)
    CHECK(linkFVector(Arrangement::typeB(2, {SubspaceB::fromParts(2, {1}, {})})) == fv({1, 2}));

    // the full reflection arrangement's union misses only the open chamber
    // cells, so its link is the Coxeter complex without the top layer
    FVector a4 = coxeterFVector(Ambient{Family::TypeA, 4});
    a4.counts.pop_back();
    CHECK(linkFVector(fullReflectionArrangement(Ambient{Family::TypeA, 4})) == a4);
    FVector b2 = coxeterFVector(Ambient{Family::TypeB, 2});
    b2.counts.pop_back();
    CHECK(linkFVector(fullReflectionArrangement(Ambient{Family::TypeB, 2})) == b2);
}

TEST_CASE("h-polynomials and Euler characteristics") {
    const FVector hexagon = fv({1, 6, 6});
    CHECK(hPolynomial(hexagon) == poly({1, 4, 1}));
    CHECK(reverseH(hexagon) == poly({1, 4, 1}));
    CHECK(reducedEuler(hexagon) == -1);  // a circle

    const FVector k3 = fv({1, 6});
    CHECK(hPolynomial(k3) == poly({5, 1}));
    CHECK(reverseH(k3) == poly({1, 5}));
    CHECK(reducedEuler(k3) == 5);  // wedge of 5 zero-spheres

    CHECK(reducedEuler(fv({1})) == -1);
    CHECK(reducedEuler(FVector{}) == 0);

    // reverse-h is palindromic to h for these sphere-like complexes
    const FVector b2 = coxeterFVector(Ambient{Family::TypeB, 2});
    CHECK(reverseH(b2) == poly({1, 6, 1}));
}

TEST_CASE("cones shift f-vectors and preserve the h-polynomial") {
    CHECK(coneFVector(fv({1, 6, 6})) == fv({1, 7, 12, 6}));
    CHECK(coneFVector(FVector{}) == fv({1, 1}));

    for (const FVector& f : {fv({1, 6, 6}), fv({1, 6}), fv({1}), fv({1, 8, 8})}) {
        CHECK(reverseH(coneFVector(f)) == reverseH(f));
        CHECK(reverseH(coneFVector(coneFVector(f))) == reverseH(f));
    }
}

TEST_CASE("Hilbert functions agree with the series expansion") {
    const FVector hexagon = fv({1, 6, 6});
    CHECK(hilbertFunction(hexagon, 0) == 1);
    CHECK(hilbertFunction(hexagon, 1) == 6);
    CHECK(hilbertFunction(hexagon, 2) == 12);
    CHECK(hilbertFunction(hexagon, 3) == 18);

    for (const FVector& f :
         {fv({1, 6, 6}), fv({1, 6}), fv({1}), fv({1, 7, 12, 6}), FVector{}}) {
        const auto coeffs = seriesCoefficients(hilbertSeries(f), 8);
        for (long long m = 0; m < 8; ++m)
            CHECK(coeffs[static_cast<size_t>(m)] == hilbertFunction(f, m));
    }
}

TEST_CASE("abstract link complexes") {
    const Arrangement full = fullReflectionArrangement(Ambient{Family::TypeA, 3});
    const LinkComplex lc = linkAbstract(full);
    CHECK(lc.complex.vertexCount == 6);
    REQUIRE(lc.complex.facets.size() == 6);
    for (const auto& f : lc.complex.facets) CHECK(f.size() == 1);  // six isolated points

    // one hyperplane: a zero-sphere
    const LinkComplex pair = linkAbstract(Arrangement::typeA(3, {sa(3, {{1, 2}})}));
    CHECK(pair.complex.vertexCount == 2);
    CHECK(pair.complex.facets == std::vector<std::vector<int>>{{0}, {1}});

    // {12},{34} in S_4: two circles glued along 4 points; 1-dimensional
    const Arrangement two = Arrangement::typeA(4, {sa(4, {{1, 2}}), sa(4, {{3, 4}})});
    const LinkComplex tc = linkAbstract(two);
    const FVector f = abstractFVector(tc.complex);
    CHECK(f == linkFVector(two));
    CHECK(f.d() == 2);

    CHECK_THROWS_AS(linkAbstract(Arrangement::typeA(3, {})), ValidationError);
    CHECK_THROWS_AS(linkAbstract(Arrangement::typeA(3, {sa(3, {{1, 2, 3}})})), ValidationError);
}

TEST_CASE("coxeterAbstract matches the enumerated complex") {
    const LinkComplex hex = coxeterAbstract(Ambient{Family::TypeA, 3});
    CHECK(hex.complex.vertexCount == 6);
    CHECK(hex.complex.facets.size() == 6);
    CHECK(abstractFVector(hex.complex) == coxeterFVector(Ambient{Family::TypeA, 3}));

    const LinkComplex oct = coxeterAbstract(Ambient{Family::TypeB, 2});
    CHECK(abstractFVector(oct.complex) == coxeterFVector(Ambient{Family::TypeB, 2}));

    // vertexIndices inverts the vertex identity maps
    for (const auto& facet : hex.complex.facets) CHECK(facet.size() == 2);
    const FaceA edge{{0, 1, 2}, 3};  // chamber x1 < x2 < x3
    const auto idx = hex.vertexIndices(edge);
    REQUIRE(idx.size() == 2);
    CHECK(std::is_sorted(idx.begin(), idx.end()));
    CHECK(std::find(hex.complex.facets.begin(), hex.complex.facets.end(), idx) !=
          hex.complex.facets.end());
}

TEST_CASE("cone complexes agree with cone f-vectors") {
    const LinkComplex hex = coxeterAbstract(Ambient{Family::TypeA, 3});
    const AbstractComplex cone = coneComplex(hex.complex);
    CHECK(cone.vertexCount == 7);
    CHECK(abstractFVector(cone) == coneFVector(abstractFVector(hex.complex)));

    const AbstractComplex none{0, {}};
    const AbstractComplex point = coneComplex(none);
    CHECK(point.vertexCount == 1);
    CHECK(abstractFVector(point) == fv({1, 1}));
}

TEST_CASE("enumeration budgets refuse oversized ambients") {
    CHECK_THROWS_AS(coxeterFVector(Ambient{Family::TypeA, 32}), EnumerationBudget);
    CHECK_THROWS_AS(coxeterFVector(Ambient{Family::TypeB, 16}), EnumerationBudget);
}
