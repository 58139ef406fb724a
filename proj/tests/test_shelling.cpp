#include <doctest.h>

#include <bit>
#include <random>

#include "arrlab/errors.hpp"
#include "arrlab/graphs.hpp"
#include "arrlab/shelling.hpp"

using namespace arrlab;

namespace {

SubspaceA sa(int n, std::vector<std::vector<int>> merges) { return SubspaceA::fromBlocks(n, merges); }

std::vector<int> rankSizes(const RegionPoset& p) {
    std::vector<int> out;
    for (int e : p.ell) {
        if (static_cast<size_t>(e) >= out.size()) out.resize(e + 1, 0);
        ++out[e];
    }
    return out;
}

// facets of the Coxeter complex in a given chamber order
ShellingOrder orderFromChambers(const LinkComplex& lc, const std::vector<Chamber>& chambers,
                                const std::vector<size_t>& order) {
    ShellingOrder out;
    for (size_t i : order) {
        const Chamber& c = chambers[i];
        out.facets.push_back(lc.family == Family::TypeA ? lc.vertexIndices(c.faceA)
                                                        : lc.vertexIndices(c.faceB));
    }
    return out;
}

// uniform random linear extension: repeatedly pick a random minimal element
std::vector<size_t> randomExtension(const RegionPoset& p, std::mt19937_64& rng) {
    const size_t n = p.chambers.size();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<size_t>> up(n);
    for (const auto& [lo, hi] : p.covers) {
        up[lo].push_back(hi);
        ++indeg[hi];
    }
    std::vector<size_t> avail, out;
    for (size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) avail.push_back(i);
    while (!avail.empty()) {
        const size_t pick = rng() % avail.size();
        const size_t v = avail[pick];
        avail.erase(avail.begin() + pick);
        out.push_back(v);
        for (size_t w : up[v])
            if (--indeg[w] == 0) avail.push_back(w);
    }
    REQUIRE(out.size() == n);
    return out;
}

}  // namespace

TEST_CASE("chamber enumeration") {
    CHECK(chambersOf(Ambient{Family::TypeA, 3}).size() == 6);
    CHECK(chambersOf(Ambient{Family::TypeA, 4}).size() == 24);
    CHECK(chambersOf(Ambient{Family::TypeB, 2}).size() == 8);
    CHECK(chambersOf(Ambient{Family::TypeB, 3}).size() == 48);

    // antipodal pairs: separation is everything, and ell values complement
    const auto cs = chambersOf(Ambient{Family::TypeB, 2});
    const uint64_t all = (1u << 4) - 1;
    for (const Chamber& c : cs) {
        bool foundOpposite = false;
        for (const Chamber& d : cs)
            if (separationSet(c, d) == all) foundOpposite = true;
        CHECK(foundOpposite);
    }
    CHECK(separationSet(cs[0], cs[0]) == 0);
}

TEST_CASE("poset of regions has the weak-order shape") {
    CHECK(rankSizes(posetOfRegionsAt(Ambient{Family::TypeA, 3}, 0)) ==
          std::vector<int>{1, 2, 2, 1});
    CHECK(rankSizes(posetOfRegionsAt(Ambient{Family::TypeB, 2}, 0)) ==
          std::vector<int>{1, 2, 2, 2, 1});
    CHECK(rankSizes(posetOfRegionsAt(Ambient{Family::TypeA, 2}, 0)) == std::vector<int>{1, 1});

    // base choice only relabels: every base gives the same rank profile
    const auto cs = chambersOf(Ambient{Family::TypeA, 3});
    for (size_t b = 0; b < cs.size(); ++b)
        CHECK(rankSizes(posetOfRegions(Ambient{Family::TypeA, 3}, cs[b])) ==
              std::vector<int>{1, 2, 2, 1});

    // covers change ell by exactly one
    const RegionPoset p = posetOfRegionsAt(Ambient{Family::TypeB, 2}, 3);
    for (const auto& [lo, hi] : p.covers) {
        CHECK(p.ell[hi] - p.ell[lo] == 1);
        CHECK(std::popcount(separationSet(p.chambers[lo], p.chambers[hi])) == 1);
        CHECK(p.leq(lo, hi));
    }
}

TEST_CASE("linear extensions respect the order and the preferred filter") {
    const RegionPoset p = posetOfRegionsAt(Ambient{Family::TypeA, 4}, 5);
    const auto ext = linearExtension(p);
    REQUIRE(ext.size() == 24);
    std::vector<size_t> pos(24);
    for (size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = i;
    for (size_t i = 0; i < 24; ++i)
        for (size_t j = 0; j < 24; ++j)
            if (p.leq(i, j)) CHECK(pos[i] <= pos[j]);

    // the maximum alone is always an order filter and lands last
    size_t top = 0;
    for (size_t i = 0; i < 24; ++i)
        if (p.ell[i] == 6) top = i;
    const auto last = linearExtension(p, std::set<size_t>{top});
    CHECK(last.back() == top);

    // the base alone is not upward closed
    CHECK_THROWS_AS(linearExtension(p, std::set<size_t>{p.base}), NotAnOrderFilter);
}

TEST_CASE("shelling checker on the hexagon") {
    const LinkComplex hex = coxeterAbstract(Ambient{Family::TypeA, 3});
    const auto chambers = chambersOf(Ambient{Family::TypeA, 3});

    // walking the circle contiguously is a shelling
    ShellingOrder cyclic;
    cyclic.facets = hex.complex.facets;
    std::sort(cyclic.facets.begin(), cyclic.facets.end());
    // sorted vertex lists do not walk the circle; build a genuine walk instead
    ShellingOrder walk;
    std::vector<std::vector<int>> remaining = hex.complex.facets;
    walk.facets.push_back(remaining.front());
    remaining.erase(remaining.begin());
    while (!remaining.empty()) {
        bool advanced = false;
        for (size_t i = 0; i < remaining.size(); ++i) {
            std::vector<int> common;
            std::set_intersection(remaining[i].begin(), remaining[i].end(),
                                  walk.facets.back().begin(), walk.facets.back().end(),
                                  std::back_inserter(common));
            if (!common.empty()) {
                walk.facets.push_back(remaining[i]);
                remaining.erase(remaining.begin() + i);
                advanced = true;
                break;
            }
        }
        REQUIRE(advanced);
    }
    CHECK(isShellingOrder(hex.complex, walk));

    // opposite edges first: fails at the second facet
    ShellingOrder bad;
    bad.facets = walk.facets;
    for (size_t i = 1; i < bad.facets.size(); ++i) {
        std::vector<int> common;
        std::set_intersection(bad.facets[0].begin(), bad.facets[0].end(), bad.facets[i].begin(),
                              bad.facets[i].end(), std::back_inserter(common));
        if (common.empty()) {
            std::swap(bad.facets[1], bad.facets[i]);
            break;
        }
    }
    const ShellingCheck chk = checkShellingOrder(hex.complex, bad);
    CHECK_FALSE(chk.isShelling);
    REQUIRE(chk.firstViolation.has_value());
    CHECK(*chk.firstViolation == 2);

    // not a permutation: repeat a facet
    ShellingOrder dup = walk;
    dup.facets[1] = dup.facets[0];
    CHECK_THROWS_AS(checkShellingOrder(hex.complex, dup), NotAPermutation);

    // impure complex
    AbstractComplex impure{3, {{0, 1}, {2}}};
    ShellingOrder io{{{0, 1}, {2}}};
    CHECK_THROWS_AS(checkShellingOrder(impure, io), NotPure);

    // single facet is vacuously shelled
    AbstractComplex one{2, {{0, 1}}};
    CHECK(isShellingOrder(one, ShellingOrder{{{0, 1}}}));
}

TEST_CASE("any linear extension shells the Coxeter complex") {
    std::mt19937_64 rng(7);
    for (const Ambient h : {Ambient{Family::TypeA, 3}, Ambient{Family::TypeA, 4},
                            Ambient{Family::TypeB, 2}}) {
        const LinkComplex lc = coxeterAbstract(h);
        for (size_t base = 0; base < 3; ++base) {
            const RegionPoset p = posetOfRegionsAt(h, base);
            for (int t = 0; t < 5; ++t) {
                const auto ext = randomExtension(p, rng);
                CHECK(isShellingOrder(lc.complex, orderFromChambers(lc, p.chambers, ext)));
            }
        }
    }
}

TEST_CASE("shellCoxeter output verifies") {
    for (const Ambient h : {Ambient{Family::TypeA, 3}, Ambient{Family::TypeA, 4},
                            Ambient{Family::TypeB, 2}, Ambient{Family::TypeB, 3}}) {
        const ShellingOrder order = shellCoxeter(h);
        const LinkComplex lc = coxeterAbstract(h);
        CHECK(order.facets.size() == lc.complex.facets.size());
        CHECK(isShellingOrder(lc.complex, order));
    }
}

TEST_CASE("complement classes split the restricted chambers") {
    // two hyperplanes of S_3: the restriction of one is a point cutting S^0
    const Arrangement a = Arrangement::typeA(3, {sa(3, {{1, 2}}), sa(3, {{1, 3}})});
    const ComplementClasses cc = complementClasses(a, 0);
    CHECK(cc.chambers.size() == 2);
    REQUIRE(cc.classes.size() == 2);
    CHECK(cc.classes[0].size() == 1);
    CHECK(cc.classes[1].size() == 1);

    // a single hyperplane: nothing to separate, one class with everything
    const Arrangement b = Arrangement::typeA(4, {sa(4, {{1, 2}})});
    const ComplementClasses cb = complementClasses(b, 0);
    REQUIRE(cb.classes.size() == 1);
    CHECK(cb.classes[0].size() == cb.chambers.size());

    // classes partition the chamber set
    const Arrangement k3 = graphToArrangement(Graph::make(3, {{1, 2}, {1, 3}, {2, 3}}));
    const ComplementClasses ck = complementClasses(k3, 0);
    size_t total = 0;
    for (const auto& cls : ck.classes) total += cls.size();
    CHECK(total == ck.chambers.size());
    CHECK(ck.classes.size() == 2);  // two arcs of S^0 ... the two sides of the point pair

    CHECK_THROWS_AS(complementClasses(Arrangement::typeA(4, {sa(4, {{1, 2, 3}})}), 0),
                    NotHyperplanes);
}

TEST_CASE("shellLink produces verified shellings") {
    // K_3: six isolated vertices, any order shells
    const Arrangement k3 = graphToArrangement(Graph::make(3, {{1, 2}, {1, 3}, {2, 3}}));
    const ShellingOrder ok3 = shellLink(k3);
    CHECK(ok3.facets.size() == 6);
    CHECK(isShellingOrder(linkAbstract(k3).complex, ok3));

    // {12},{34} in S_4: a 1-dimensional complex, 8 edges
    const Arrangement two = Arrangement::typeA(4, {sa(4, {{1, 2}}), sa(4, {{3, 4}})});
    const ShellingOrder ot = shellLink(two);
    CHECK(isShellingOrder(linkAbstract(two).complex, ot));

    // one hyperplane of B_2: the restriction is a copy of the B_1 complex
    const Arrangement h = Arrangement::typeB(2, {SubspaceB::fromParts(2, {}, {{{1, 2}, {1, 1}}})});
    const ShellingOrder oh = shellLink(h);
    CHECK(oh.facets.size() == 2);
    CHECK(isShellingOrder(linkAbstract(h).complex, oh));

    // every graph on 4 vertices
    for (uint32_t mask = 1; mask < (1u << 6); ++mask) {
        std::vector<std::pair<int, int>> edges;
        const std::pair<int, int> all[] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
        for (int b = 0; b < 6; ++b)
            if (mask >> b & 1) edges.push_back(all[b]);
        const Arrangement g = graphToArrangement(Graph::make(4, edges));
        CHECK(isShellingOrder(linkAbstract(g).complex, shellLink(g)));
    }

    // every signed graph on 2 vertices
    for (int pos = 0; pos < 2; ++pos)
        for (int neg = 0; neg < 2; ++neg)
            for (int z = 0; z < 4; ++z) {
                if (!pos && !neg && !z) continue;
                std::vector<std::pair<int, int>> pv, nv;
                std::vector<int> zv;
                if (pos) pv.push_back({1, 2});
                if (neg) nv.push_back({1, 2});
                for (int v = 1; v <= 2; ++v)
                    if (z >> (v - 1) & 1) zv.push_back(v);
                const SignedGraph s = SignedGraph::make(2, pv, nv, zv);
                const Arrangement a = signedGraphToArrangement(s);
                if (a.maxDim() < 1) continue;
                CHECK(isShellingOrder(linkAbstract(a).complex, shellLink(a)));
            }

    CHECK_THROWS_AS(shellLink(Arrangement::typeA(4, {sa(4, {{1, 2, 3}})})), NotHyperplanes);
    CHECK_THROWS_AS(shellLink(Arrangement::typeA(3, {})), ValidationError);
}
