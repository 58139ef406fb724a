#include "arrlab/graphs.hpp"

#include <algorithm>
#include <set>

#include "arrlab/errors.hpp"
#include "arrlab/shelling.hpp"

namespace arrlab {

namespace {

std::vector<std::pair<int, int>> canonicalPairs(int n, std::vector<std::pair<int, int>> pairs,
                                                const char* what) {
    for (auto& [i, j] : pairs) {
        if (i == j) throw ValidationError(std::string(what) + ": loop on vertex");
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n) throw ValidationError(std::string(what) + ": vertex label out of range");
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

// Runs fn for every map [n] -> {0..palette-1}; fn returns whether the map is
// proper. Returns the number of proper maps.
template <class Fn>
Int countMaps(int n, long long palette, Fn proper) {
    if (palette <= 0) return n == 0 ? Int(1) : Int(0);
    std::vector<long long> color(n, 0);
    Int count = 0;
    while (true) {
        if (proper(color)) ++count;
        int pos = 0;
        while (pos < n && ++color[pos] == palette) color[pos++] = 0;
        if (pos == n) break;
    }
    return count;
}

IntPolynomial interpolateCounts(int n, const std::function<Int(long long)>& countAt) {
    std::vector<std::pair<Int, Int>> points;
    for (long long m = 0; m <= n; ++m) points.emplace_back(Int(m), countAt(m));
    return polyInterpolate(points);
}

}  // namespace

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw ValidationError("Graph: needs at least one vertex");
    Graph g;
    g.n = n;
    g.edges = canonicalPairs(n, std::move(edges), "Graph");
    return g;
}

Hypergraph Hypergraph::make(int n, std::vector<std::vector<int>> hyperedges) {
    if (n < 1) throw ValidationError("Hypergraph: needs at least one vertex");
    for (auto& e : hyperedges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.size() < 2) throw ValidationError("Hypergraph: hyperedge needs at least two vertices");
        if (e.front() < 1 || e.back() > n)
            throw ValidationError("Hypergraph: vertex label out of range");
    }
    std::sort(hyperedges.begin(), hyperedges.end());
    hyperedges.erase(std::unique(hyperedges.begin(), hyperedges.end()), hyperedges.end());
    for (const auto& e : hyperedges)
        for (const auto& f : hyperedges)
            if (&e != &f && std::includes(f.begin(), f.end(), e.begin(), e.end()))
                throw ValidationError("Hypergraph: hyperedge contained in another");
    Hypergraph h;
    h.n = n;
    h.hyperedges = std::move(hyperedges);
    return h;
}

SignedGraph SignedGraph::make(int n, std::vector<std::pair<int, int>> positive,
                              std::vector<std::pair<int, int>> negative,
                              std::vector<int> zeroVertices) {
    if (n < 1) throw ValidationError("SignedGraph: needs at least one vertex");
    SignedGraph s;
    s.n = n;
    s.positive = canonicalPairs(n, std::move(positive), "SignedGraph");
    s.negative = canonicalPairs(n, std::move(negative), "SignedGraph");
    std::sort(zeroVertices.begin(), zeroVertices.end());
    zeroVertices.erase(std::unique(zeroVertices.begin(), zeroVertices.end()), zeroVertices.end());
    for (int v : zeroVertices)
        if (v < 1 || v > n) throw ValidationError("SignedGraph: vertex label out of range");
    s.zeroVertices = std::move(zeroVertices);
    return s;
}

Arrangement graphToArrangement(const Graph& g) {
    if (g.edges.empty()) throw EmptyEdgeSet("graphToArrangement: no edges");
    std::vector<SubspaceA> subs;
    for (const auto& [i, j] : g.edges) subs.push_back(SubspaceA::fromBlocks(g.n, {{i, j}}));
    return Arrangement::typeA(g.n, std::move(subs));
}

Arrangement hypergraphToArrangement(const Hypergraph& h) {
    if (h.hyperedges.empty()) throw EmptyEdgeSet("hypergraphToArrangement: no hyperedges");
    std::vector<SubspaceA> subs;
    for (const auto& e : h.hyperedges) subs.push_back(SubspaceA::fromBlocks(h.n, {e}));
    return Arrangement::typeA(h.n, std::move(subs));
}

Arrangement signedGraphToArrangement(const SignedGraph& s) {
    if (!s.hasConstraints()) throw EmptyEdgeSet("signedGraphToArrangement: no edges or zero-vertices");
    std::vector<SubspaceB> subs;
    for (const auto& [i, j] : s.positive)
        subs.push_back(SubspaceB::fromParts(s.n, {}, {{{i, j}, {1, 1}}}));
    for (const auto& [i, j] : s.negative)
        subs.push_back(SubspaceB::fromParts(s.n, {}, {{{i, j}, {1, -1}}}));
    for (int v : s.zeroVertices) subs.push_back(SubspaceB::fromParts(s.n, {v}, {}));
    return Arrangement::typeB(s.n, std::move(subs));
}

Int properColoringCount(const Graph& g, long long m) {
    if (g.n > 6) throw EnumerationBudget("properColoringCount: graph oracle capped at n <= 6");
    return countMaps(g.n, m, [&](const std::vector<long long>& c) {
        for (const auto& [i, j] : g.edges)
            if (c[i - 1] == c[j - 1]) return false;
        return true;
    });
}

Int properColoringCount(const Hypergraph& h, long long m) {
    if (h.n > 6) throw EnumerationBudget("properColoringCount: hypergraph oracle capped at n <= 6");
    return countMaps(h.n, m, [&](const std::vector<long long>& c) {
        for (const auto& e : h.hyperedges) {
            bool mono = true;
            for (size_t u = 1; mono && u < e.size(); ++u) mono = c[e[u] - 1] == c[e[0] - 1];
            if (mono) return false;
        }
        return true;
    });
}

IntPolynomial chromaticPolyBrute(const Graph& g) {
    return interpolateCounts(g.n, [&](long long m) { return properColoringCount(g, m); });
}

IntPolynomial chromaticPolyBrute(const Hypergraph& h) {
    return interpolateCounts(h.n, [&](long long m) { return properColoringCount(h, m); });
}

Int signedColoringCount(const SignedGraph& s, long long m) {
    if (s.n > 4) throw EnumerationBudget("signedColoringCount: oracle capped at n <= 4");
    // palette {-m..m} enumerated as 0..2m with offset
    return countMaps(s.n, 2 * m + 1, [&](const std::vector<long long>& raw) {
        auto c = [&](int v) { return raw[v - 1] - m; };
        for (const auto& [i, j] : s.positive)
            if (c(i) == c(j)) return false;
        for (const auto& [i, j] : s.negative)
            if (c(i) == -c(j)) return false;
        for (int v : s.zeroVertices)
            if (c(v) == 0) return false;
        return true;
    });
}

Int acyclicOrientations(const Graph& g) {
    const size_t e = g.edges.size();
    if (e > 20) throw EnumerationBudget("acyclicOrientations: capped at 20 edges");
    Int count = 0;
    for (uint32_t mask = 0; mask < (1u << e); ++mask) {
        // bit b set: edge b directed j -> i instead of i -> j
        std::vector<std::vector<int>> out(g.n + 1);
        std::vector<int> indeg(g.n + 1, 0);
        for (size_t b = 0; b < e; ++b) {
            auto [i, j] = g.edges[b];
            if (mask >> b & 1) std::swap(i, j);
            out[i].push_back(j);
            ++indeg[j];
        }
        // Kahn: acyclic iff all vertices drain
        std::vector<int> queue;
        for (int v = 1; v <= g.n; ++v)
            if (indeg[v] == 0) queue.push_back(v);
        size_t seen = 0;
        while (seen < queue.size()) {
            int v = queue[seen++];
            for (int w : out[v])
                if (--indeg[w] == 0) queue.push_back(w);
        }
        if (seen == static_cast<size_t>(g.n)) ++count;
    }
    return count;
}

Int regionCount(const Arrangement& a) {
    const Ambient& amb = a.ambient();
    std::vector<int> bits;
    if (amb.family == Family::TypeA)
        for (const auto& s : a.subspacesA()) bits.push_back(hyperplaneIndex(amb, s));
    else
        for (const auto& s : a.subspacesB()) bits.push_back(hyperplaneIndex(amb, s));

    std::set<uint64_t> signatures;
    for (const Chamber& c : chambersOf(amb)) {
        uint64_t sig = 0;
        for (size_t b = 0; b < bits.size(); ++b)
            if ((c.signs >> bits[b]) & 1) sig |= uint64_t(1) << b;
        signatures.insert(sig);
    }
    return Int(signatures.size());
}

}  // namespace arrlab
