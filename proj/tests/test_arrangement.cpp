#include <doctest.h>

#include "arrlab/arrangement.hpp"
#include "arrlab/errors.hpp"

using namespace arrlab;

namespace {
SubspaceA sa(int n, std::vector<std::vector<int>> merges) { return SubspaceA::fromBlocks(n, merges); }
IntPolynomial poly(std::vector<long long> ascending) {
    return IntPolynomial(std::vector<Int>(ascending.begin(), ascending.end()));
}
}  // namespace

TEST_CASE("partition subspaces canonicalize") {
    // overlapping merges union together
    const SubspaceA s = sa(4, {{1, 2}, {2, 3}});
    CHECK(s.blockCount() == 2);
    CHECK(s.dim() == 1);
    CHECK(s.blocks() == std::vector<std::vector<int>>{{1, 2, 3}, {4}});
    CHECK(sa(3, {}).isFullSpace());
    CHECK_THROWS_AS(sa(3, {{1, 5}}), ValidationError);

    CHECK(intersectA(sa(3, {{1, 2}}), sa(3, {{1, 3}})) == sa(3, {{1, 2, 3}}));
    CHECK(intersectA(sa(4, {{1, 2}}), sa(4, {{3, 4}})) == sa(4, {{1, 2}, {3, 4}}));
    CHECK(subspaceLeq(sa(3, {{1, 2}}), sa(3, {{1, 2, 3}})));
    CHECK_FALSE(subspaceLeq(sa(3, {{1, 2}}), sa(3, {{1, 3}})));
}

TEST_CASE("signed subspaces canonicalize") {
    // least member of each block carries +
    const SubspaceB s = SubspaceB::fromParts(3, {}, {{{2, 1}, {-1, 1}}});
    REQUIRE(s.dim() == 2);
    CHECK(s.signedBlocks()[0].first == std::vector<int>{1, 2});
    CHECK(s.signedBlocks()[0].second == std::vector<int>{1, -1});

    // sign conflict collapses the class into the zero set
    const SubspaceB conflict =
        SubspaceB::fromParts(2, {}, {{{1, 2}, {1, 1}}, {{1, 2}, {1, -1}}});
    CHECK(conflict.dim() == 0);
    CHECK(conflict.zeroSet() == std::vector<int>{1, 2});

    // contact with the zero set pulls the whole block in
    const SubspaceB touched = SubspaceB::fromParts(3, {1}, {{{1, 2}, {1, 1}}});
    CHECK(touched.zeroSet() == std::vector<int>{1, 2});
    CHECK(touched.dim() == 1);

    const SubspaceB x1 = SubspaceB::fromParts(2, {1}, {});
    const SubspaceB eq = SubspaceB::fromParts(2, {}, {{{1, 2}, {1, 1}}});
    const SubspaceB meet = intersectB(x1, eq);
    CHECK(meet.zeroSet() == std::vector<int>{1, 2});
    CHECK(subspaceLeq(x1, meet));
    CHECK(subspaceLeq(eq, meet));
}

TEST_CASE("arrangements enforce the antichain rule") {
    CHECK_THROWS_AS(Arrangement::typeA(3, {sa(3, {{1, 2}}), sa(3, {{1, 2, 3}})}), ValidationError);
    CHECK_THROWS_AS(Arrangement::typeA(3, {sa(3, {})}), ValidationError);  // full space
    const Arrangement a = Arrangement::typeA(4, {sa(4, {{1, 2}}), sa(4, {{3, 4}})});
    CHECK(a.size() == 2);
    CHECK(a.maxDim() == 2);
    CHECK(a.deletion(0).size() == 1);
    CHECK(a.deletion(0).subspacesA()[0] == sa(4, {{3, 4}}));
    CHECK_THROWS_AS(a.deletion(2), IndexOutOfRange);
}

TEST_CASE("intersection lattice of the full braid arrangement on 3 letters") {
    const Arrangement a = fullReflectionArrangement(Ambient{Family::TypeA, 3});
    REQUIRE(a.size() == 3);
    const IntersectionLattice lat = buildLattice(a);
    REQUIRE(lat.size() == 5);
    CHECK(lat.dims == std::vector<int>{2, 1, 1, 1, 0});
    CHECK(lat.mobius == std::vector<Int>{1, -1, -1, -1, 2});
    CHECK(lat.leq(0, 4));
    CHECK(lat.leq(1, 4));
    CHECK_FALSE(lat.leq(1, 2));
    CHECK(charPoly(a) == poly({2, -3, 1}));
    CHECK(tailPoly(a) == poly({-2, 3}));
}

TEST_CASE("characteristic polynomials of reference arrangements") {
    // single hyperplane of S_3
    CHECK(charPoly(Arrangement::typeA(3, {sa(3, {{1, 2}})})) == poly({0, -1, 1}));
    // empty arrangement: x^{essential dimension}
    CHECK(charPoly(Arrangement::typeA(3, {})) == IntPolynomial::monomial(2));
    CHECK(charPoly(Arrangement::typeB(2, {})) == IntPolynomial::monomial(2));
    // full B_1 and B_2 reflection arrangements
    CHECK(charPoly(fullReflectionArrangement(Ambient{Family::TypeB, 1})) == poly({-1, 1}));
    CHECK(charPoly(fullReflectionArrangement(Ambient{Family::TypeB, 2})) == poly({3, -4, 1}));
    // one coordinate hyperplane in B_2
    CHECK(charPoly(Arrangement::typeB(2, {SubspaceB::fromParts(2, {1}, {})})) == poly({0, -1, 1}));
    // a 0-dimensional subspace alone: chi = x^d - 1
    CHECK(charPoly(Arrangement::typeA(3, {sa(3, {{1, 2, 3}})})) == poly({-1, 0, 1}));
}

TEST_CASE("restriction keeps inclusion-maximal proper traces") {
    const Arrangement a = Arrangement::typeA(3, {sa(3, {{1, 2}}), sa(3, {{1, 3}})});
    const Restriction r = restriction(a, 0);
    CHECK(r.hostA == sa(3, {{1, 2}}));
    CHECK(r.arrangement.ambient().n == 2);
    CHECK(r.arrangement.ambient().family == Family::TypeA);
    REQUIRE(r.arrangement.size() == 1);
    CHECK(charPoly(r.arrangement) == poly({-1, 1}));

    // deletion-restriction at every member of a mixed antichain
    const Arrangement b = Arrangement::typeA(
        5, {sa(5, {{1, 2, 3}}), sa(5, {{3, 4}}), sa(5, {{1, 4}, {2, 5}})});
    for (size_t i = 0; i < b.size(); ++i) {
        const IntPolynomial lhs = charPoly(b);
        const IntPolynomial rhs =
            charPoly(b.deletion(i)) - charPoly(restriction(b, i).arrangement);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("restriction in type B collapses conflicting traces to the origin") {
    const Arrangement a = Arrangement::typeB(2, {SubspaceB::fromParts(2, {}, {{{1, 2}, {1, 1}}}),
                                                 SubspaceB::fromParts(2, {}, {{{1, 2}, {1, -1}}})});
    const Restriction r = restriction(a, 0);
    CHECK(r.arrangement.ambient().n == 1);
    REQUIRE(r.arrangement.size() == 1);
    CHECK(r.arrangement.subspacesB()[0].dim() == 0);
    CHECK(charPoly(a) == poly({1, -2, 1}));
    CHECK(charPoly(a) == charPoly(a.deletion(0)) - charPoly(r.arrangement));
}

TEST_CASE("restrictionTo validates lattice membership") {
    const Arrangement a = Arrangement::typeA(4, {sa(4, {{1, 2}}), sa(4, {{3, 4}})});
    const Restriction r = restrictionTo(a, sa(4, {{1, 2}, {3, 4}}));
    CHECK(r.arrangement.empty());  // nothing lies strictly below the bottom of the host
    CHECK_THROWS_AS(restrictionTo(a, sa(4, {{1, 3}})), NotInLattice);
}

TEST_CASE("canonical hyperplanes and index lookup") {
    const auto ha = canonicalHyperplanesA(3);
    REQUIRE(ha.size() == 3);
    CHECK(ha[0].i == 1);
    CHECK(ha[0].j == 2);
    CHECK(ha[2].i == 2);
    CHECK(ha[2].j == 3);
    CHECK(hyperplaneIndex(Ambient{Family::TypeA, 3}, sa(3, {{1, 3}})) == 1);
    CHECK_THROWS_AS(hyperplaneIndex(Ambient{Family::TypeA, 3}, sa(3, {{1, 2, 3}})), NotHyperplanes);

    const auto hb = canonicalHyperplanesB(2);
    REQUIRE(hb.size() == 4);  // x1=x2, x1=-x2, x1=0, x2=0
    CHECK(isHyperplane(Ambient{Family::TypeB, 2}, SubspaceB::fromParts(2, {1}, {})));
    CHECK_FALSE(isHyperplane(Ambient{Family::TypeB, 2}, SubspaceB::fromParts(2, {1, 2}, {})));
    CHECK(hyperplaneIndex(Ambient{Family::TypeB, 2}, SubspaceB::fromParts(2, {}, {{{1, 2}, {1, -1}}})) == 1);

    const Arrangement fullA4 = fullReflectionArrangement(Ambient{Family::TypeA, 4});
    CHECK(fullA4.size() == 6);
    const Arrangement fullB3 = fullReflectionArrangement(Ambient{Family::TypeB, 3});
    CHECK(fullB3.size() == 9);
}

TEST_CASE("arrangement equality ignores member order") {
    const Arrangement x = Arrangement::typeA(3, {sa(3, {{1, 2}}), sa(3, {{1, 3}})});
    const Arrangement y = Arrangement::typeA(3, {sa(3, {{1, 3}}), sa(3, {{1, 2}})});
    CHECK(x == y);
    CHECK_FALSE(x == Arrangement::typeA(3, {sa(3, {{1, 2}})}));
}
