#pragma once

#include <cstdint>
#include <vector>

#include "arrlab/polyseries.hpp"

// Subspace arrangements embedded in the two classical reflection ambients:
//   TypeA(n): the braid arrangement inside the sum-zero hyperplane of R^n
//             (essential dimension n-1); subspaces are set partitions of
//             {1..n}, the partition with b blocks having dimension b-1.
//   TypeB(n): the signed arrangement x_i = +-x_j, x_i = 0 in R^n (essential
//             dimension n); subspaces combine a zero set with signed blocks,
//             one dimension per block.
// The intersection lattice is ordered by reverse inclusion, bottom = ambient.

namespace arrlab {

enum class Family { TypeA, TypeB };

struct Ambient {
    Family family;
    int n;
    int essentialDim() const { return family == Family::TypeA ? n - 1 : n; }
    bool operator==(const Ambient&) const = default;
};

// Set partition of {1..n} in canonical form: blocks internally ascending,
// block list sorted by least member. Canonical form makes structural
// comparison meaningful, so the defaulted ordering is a total order on
// subspaces.
class SubspaceA {
public:
    SubspaceA() = default;
    // Canonicalizes an arbitrary merge list; groups may overlap, singletons
    // may be omitted.
    static SubspaceA fromBlocks(int n, const std::vector<std::vector<int>>& merges);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int blockCount() const { return static_cast<int>(blocks_.size()); }
    int dim() const { return blockCount() - 1; }
    bool isFullSpace() const { return blockCount() == n_; }

    auto operator<=>(const SubspaceA&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

// Zero set plus signed blocks over the remaining coordinates. A signed block
// (members, signs) is the constraint signs[u]*x_{members[u]} all equal; the
// least member of each block carries sign +1. Dimension = number of blocks.
class SubspaceB {
public:
    SubspaceB() = default;
    // signedMerges: (members, signs) pairs with signs in {+1,-1} parallel to
    // members; merge groups may overlap and sign conflicts or contact with the
    // zero set collapse whole classes to zero. Singletons may be omitted.
    static SubspaceB fromParts(
        int n, const std::vector<int>& zero,
        const std::vector<std::pair<std::vector<int>, std::vector<int>>>& signedMerges);

    int n() const { return n_; }
    const std::vector<int>& zeroSet() const { return zero_; }
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& signedBlocks() const {
        return blocks_;
    }
    int dim() const { return static_cast<int>(blocks_.size()); }
    bool isFullSpace() const { return zero_.empty() && dim() == n_; }

    auto operator<=>(const SubspaceB&) const = default;

private:
    int n_ = 0;
    std::vector<int> zero_;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks_;
};

SubspaceA intersectA(const SubspaceA& s, const SubspaceA& t);
SubspaceB intersectB(const SubspaceB& s, const SubspaceB& t);

// True iff s <= t in the intersection lattice, i.e. t is contained in s as a
// subspace. Implemented as intersect(s, t) == t.
bool subspaceLeq(const SubspaceA& s, const SubspaceA& t);
bool subspaceLeq(const SubspaceB& s, const SubspaceB& t);

// Finite antichain of proper subspaces of a common ambient. Member order is
// preserved as given (deletion is by index); equality ignores order.
class Arrangement {
public:
    static Arrangement typeA(int n, std::vector<SubspaceA> subs);
    static Arrangement typeB(int n, std::vector<SubspaceB> subs);

    const Ambient& ambient() const { return ambient_; }
    size_t size() const;
    bool empty() const { return size() == 0; }
    const std::vector<SubspaceA>& subspacesA() const { return subA_; }
    const std::vector<SubspaceB>& subspacesB() const { return subB_; }

    // d(A): the largest subspace dimension; -1 for the empty arrangement.
    int maxDim() const;

    Arrangement deletion(size_t index) const;

    bool operator==(const Arrangement& o) const;

private:
    Ambient ambient_{Family::TypeA, 0};
    std::vector<SubspaceA> subA_;
    std::vector<SubspaceB> subB_;
};

// Intersection lattice: all intersections of arrangement members, bottom
// element the ambient space at index 0, sorted by descending dimension then
// canonical form. mobius[j] = mu(bottom, element j).
struct IntersectionLattice {
    Ambient ambient{Family::TypeA, 0};
    std::vector<SubspaceA> elementsA;
    std::vector<SubspaceB> elementsB;
    std::vector<int> dims;
    std::vector<Int> mobius;
    std::vector<std::vector<bool>> leqMatrix;  // leqMatrix[i][j]: element i <= element j

    size_t size() const { return dims.size(); }
    bool leq(size_t i, size_t j) const { return leqMatrix[i][j]; }
};

IntersectionLattice buildLattice(const Arrangement& a);

// Characteristic polynomial chi(A; x) = sum over lattice elements of
// mu(bottom, Y) x^{dim Y}. Monic of degree essentialDim; chi of the empty
// arrangement is x^essentialDim.
IntPolynomial charPoly(const Arrangement& a);

// T(A; x) = x^essentialDim - chi(A; x).
IntPolynomial tailPoly(const Arrangement& a);

// Restriction to a host subspace: each coordinate of the result ambient is a
// block of the host (type A: blocks()[j] <-> label j+1; type B:
// signedBlocks()[j] <-> label j+1, normalized so the least member of a host
// block carries sign +1). The arrangement consists of the inclusion-maximal
// proper contractions of host-intersections with the other members.
struct Restriction {
    Arrangement arrangement;
    SubspaceA hostA;  // valid when ambient family of the source is TypeA
    SubspaceB hostB;  // valid when TypeB
};

Restriction restriction(const Arrangement& a, size_t index);
// Host given explicitly; must be an element of the intersection lattice.
Restriction restrictionTo(const Arrangement& a, const SubspaceA& host);
Restriction restrictionTo(const Arrangement& a, const SubspaceB& host);

// Contraction of a subspace t that contains the host, into the host's block
// labels. Exposed for face expansion in the complex/shelling layers.
SubspaceA contractIntoHost(const SubspaceA& t, const SubspaceA& host);
SubspaceB contractIntoHost(const SubspaceB& t, const SubspaceB& host);

// Hyperplanes of the reflection ambient in canonical order.
// TypeA: pairs (i, j), i < j, lexicographic; functional x_j - x_i.
// TypeB: pairs (i, j, tau) lexicographic with tau = +1 before -1 (functional
// tau*x_j - x_i), then coordinate hyperplanes x_i = 0 (functional x_i).
struct HyperplaneA {
    int i, j;
};
struct HyperplaneB {
    int i, j, tau;  // j == 0 encodes the coordinate hyperplane x_i = 0
};

std::vector<HyperplaneA> canonicalHyperplanesA(int n);
std::vector<HyperplaneB> canonicalHyperplanesB(int n);

bool isHyperplane(const Ambient& ambient, const SubspaceA& s);
bool isHyperplane(const Ambient& ambient, const SubspaceB& s);

// Position of a hyperplane subspace in the canonical list. Throws
// NotHyperplanes when the subspace is not a hyperplane of the ambient.
int hyperplaneIndex(const Ambient& ambient, const SubspaceA& s);
int hyperplaneIndex(const Ambient& ambient, const SubspaceB& s);

// The full reflection arrangement of the ambient, as an Arrangement.
Arrangement fullReflectionArrangement(const Ambient& ambient);

}  // namespace arrlab
