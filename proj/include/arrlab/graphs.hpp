#pragma once

#include <utility>
#include <vector>

#include "arrlab/arrangement.hpp"

// Graphs, hypergraphs, and signed graphs with their arrangements, plus
// independent brute-force oracles (coloring counts, acyclic orientations,
// region counts). The oracles deliberately enumerate everything; they exist
// to validate the algebraic machinery, not to be fast.

namespace arrlab {

// Simple graph on vertices 1..n: no loops, no multi-edges.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted, distinct

    static Graph make(int n, std::vector<std::pair<int, int>> edges);
};

// Hypergraph whose edges have size >= 2 and form an antichain.
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> hyperedges;  // each ascending, sorted, distinct

    static Hypergraph make(int n, std::vector<std::vector<int>> hyperedges);
};

// Signed graph: sign-labeled edges plus zero-vertices (the hyperplane x_i=0).
// A pair may carry both signs; the induced hyperplanes stay distinct.
struct SignedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> positive;  // i < j, sorted, distinct
    std::vector<std::pair<int, int>> negative;
    std::vector<int> zeroVertices;              // ascending, distinct

    static SignedGraph make(int n, std::vector<std::pair<int, int>> positive,
                            std::vector<std::pair<int, int>> negative,
                            std::vector<int> zeroVertices);
    bool hasConstraints() const {
        return !positive.empty() || !negative.empty() || !zeroVertices.empty();
    }
};

// Edge {i,j} -> partition with block {i,j}; hyperedge -> one block.
// Throws EmptyEdgeSet when there is nothing to embed.
Arrangement graphToArrangement(const Graph& g);
Arrangement hypergraphToArrangement(const Hypergraph& h);

// Positive edge -> x_i = x_j, negative -> x_i = -x_j, zero-vertex -> x_i = 0.
Arrangement signedGraphToArrangement(const SignedGraph& s);

// Number of maps [n] -> [m] with no monochromatic (hyper)edge. Brute force
// over all m^n maps; capped at n <= 6.
Int properColoringCount(const Graph& g, long long m);
Int properColoringCount(const Hypergraph& h, long long m);

// Chromatic polynomial by interpolating the brute-force counts at m = 0..n.
IntPolynomial chromaticPolyBrute(const Graph& g);
IntPolynomial chromaticPolyBrute(const Hypergraph& h);

// Number of maps [n] -> {-m,...,m} with c_i != c_j on positive edges,
// c_i != -c_j on negative edges, c_i != 0 on zero-vertices. Capped at n <= 4.
Int signedColoringCount(const SignedGraph& s, long long m);

// Orientations of the edges with no directed cycle, by checking all 2^|E|.
Int acyclicOrientations(const Graph& g);

// Number of regions cut out by a hyperplane arrangement: chambers of the
// ambient reflection arrangement refine the regions, so count the distinct
// sign vectors restricted to the members. Throws NotHyperplanes otherwise.
Int regionCount(const Arrangement& a);

}  // namespace arrlab
