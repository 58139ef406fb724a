#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "arrlab/arrangement.hpp"

// Cells of the Coxeter complex (the reflection-arrangement decomposition of
// the unit sphere in the essential ambient) and the link subcomplex of a
// subspace arrangement: the faces whose cells lie inside the union of the
// arrangement's subspaces.

namespace arrlab {

// Type A face: ordered set partition (B_1 | ... | B_k) of {1..n}, k >= 2,
// encoding points with coordinates constant on each block and values strictly
// increasing with the block index. blockOf[c-1] is the 0-based position of
// the block containing coordinate c. Dimension k-2; the vertices of the face
// are the k-1 two-block coarsenings that cut between consecutive blocks.
struct FaceA {
    std::vector<int> blockOf;
    int k = 0;

    int dim() const { return k - 2; }
    std::vector<std::vector<int>> blocks() const;
    auto operator<=>(const FaceA&) const = default;
};

// Type B face: zero set plus ordered signed blocks, encoding points with
// x_c = 0 on the zero set and |x_c| equal on each block, strictly increasing
// with the level, with the given signs. Per-coordinate code: 0 = zero,
// 2l-1 = (level l, sign +), 2l = (level l, sign -). Dimension k-1; the i-th
// vertex (1 <= i <= k) sends levels below i to zero and merges the rest.
struct FaceB {
    std::vector<int> code;
    int k = 0;

    int dim() const { return k - 1; }
    int levelOf(int c) const { return (code[c - 1] + 1) / 2; }
    int signOf(int c) const { return code[c - 1] == 0 ? 0 : (code[c - 1] % 2 == 1 ? 1 : -1); }
    std::vector<int> zeroSet() const;
    // (members, signs) per level, ascending members.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> signedLevels() const;
    auto operator<=>(const FaceB&) const = default;
};

// Stream every face in lexicographic order of the per-coordinate encoding.
void forEachFaceA(int n, const std::function<void(const FaceA&)>& fn);
void forEachFaceB(int n, const std::function<void(const FaceB&)>& fn);

std::vector<FaceA> enumerateFacesA(int n);
std::vector<FaceB> enumerateFacesB(int n);

// Smallest arrangement subspace whose span contains the face's cell.
SubspaceA faceSupport(const FaceA& f);
SubspaceB faceSupport(const FaceB& f);

// True iff the face's cell lies inside some member of the arrangement.
bool faceInLink(const FaceA& f, const Arrangement& a);
bool faceInLink(const FaceB& f, const Arrangement& a);

// f-vector (f_{-1}, f_0, ..., f_{d-1}). The empty vector is the void complex
// (no faces at all); (1) alone is the (-1)-sphere {empty face}.
struct FVector {
    std::vector<Int> counts;

    bool isVoid() const { return counts.empty(); }
    int d() const { return static_cast<int>(counts.size()) - 1; }
    bool operator==(const FVector& o) const { return counts == o.counts; }
};

// f-vector of the link complex of a. The void complex for an empty
// arrangement; otherwise includes the empty face, so counts[0] = 1 even when
// no sphere cell lies in the union (an origin arrangement).
FVector linkFVector(const Arrangement& a);

// f-vector of the whole Coxeter complex of the ambient.
FVector coxeterFVector(const Ambient& h);

// h(f; x) = sum_i f_{i-1} (x-1)^{d-i}, d = length - 1.
IntPolynomial hPolynomial(const FVector& f);

// Reversed h-polynomial x^d h(1/x); the Hilbert numerator.
IntPolynomial reverseH(const FVector& f);

// Reduced Euler characteristic -f_{-1} + f_0 - f_1 + ...; 0 for the void.
Int reducedEuler(const FVector& f);

// f-vector of the cone (join with one new vertex). Cone over the void
// complex is a single vertex.
FVector coneFVector(const FVector& f);

// Hilbert function of the Stanley-Reisner ring: H(0) = 1 (0 for the void),
// H(m) = sum_j (faces with j vertices) * C(m-1, j-1) for m >= 1.
Int hilbertFunction(const FVector& f, long long m);

// Hilbert series reverseH(f) / (1-x)^d; the zero series for the void.
RationalSeries hilbertSeries(const FVector& f);

// Facet-presented simplicial complex with vertices 0..vertexCount-1.
struct AbstractComplex {
    int vertexCount = 0;
    std::vector<std::vector<int>> facets;  // each ascending
};

// Adds one new vertex (index vertexCount) to every facet; a complex with no
// facets cones to the single new vertex.
AbstractComplex coneComplex(const AbstractComplex& c);

// f-vector by materializing all subsets of facets. Small inputs only.
FVector abstractFVector(const AbstractComplex& c);

// The link complex as an abstract simplicial complex, with the geometric
// identity of each vertex: type A vertices are the proper subsets forming the
// first block (bit c-1 = coordinate c); type B vertices are (nonzero mask,
// negative-sign mask) pairs. Vertex order is face enumeration order.
struct LinkComplex {
    Family family = Family::TypeA;
    int n = 0;
    AbstractComplex complex;
    std::vector<uint32_t> vertexMaskA;
    std::vector<std::pair<uint32_t, uint32_t>> vertexMaskB;
    std::map<uint32_t, int> indexA;
    std::map<std::pair<uint32_t, uint32_t>, int> indexB;

    std::vector<int> vertexIndices(const FaceA& f) const;  // ascending
    std::vector<int> vertexIndices(const FaceB& f) const;
};

// Requires a nonempty with d(A) >= 1. Facets are the inclusion-maximal link
// faces, in face enumeration order.
LinkComplex linkAbstract(const Arrangement& a);

// The full Coxeter complex: all vertices, facets = chambers.
LinkComplex coxeterAbstract(const Ambient& h);

}  // namespace arrlab
