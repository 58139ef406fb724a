#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "arrlab/faces.hpp"

// The poset of regions of a reflection arrangement and the shelling machinery
// built on it: any linear extension shells the Coxeter complex, and the link
// of a hyperplane arrangement is shelled hyperplane by hyperplane, appending
// each sign-vector class of the restricted chambers as an order filter of a
// suitably re-based poset of regions.

namespace arrlab {

// Top-dimensional cell of the reflection arrangement, carried as its
// Coxeter-complex facet plus the sign vector over the canonical hyperplane
// list (bit h = 1 means the positive side of hyperplane h, where hyperplane
// functionals are x_j - x_i, tau*x_j - x_i and x_i).
struct Chamber {
    FaceA faceA;  // populated for type A ambients
    FaceB faceB;  // populated for type B
    uint64_t signs = 0;
};

// All chambers in canonical order: type A by the permutation listing
// coordinates in increasing value order, lexicographically; type B likewise
// with sign patterns (positive first) per permutation.
std::vector<Chamber> chambersOf(const Ambient& h);

// Hyperplanes separating the two chambers, as a sign-vector XOR.
uint64_t separationSet(const Chamber& c1, const Chamber& c2);

struct RegionPoset {
    Ambient ambient{Family::TypeA, 0};
    int hyperplaneCount = 0;
    std::vector<Chamber> chambers;
    size_t base = 0;
    std::vector<int> ell;                        // distance from the base
    std::vector<std::pair<size_t, size_t>> covers;  // (lower, upper)
    std::vector<std::vector<char>> leqMatrix;    // reflexive-transitive closure

    bool leq(size_t i, size_t j) const { return leqMatrix[i][j] != 0; }
};

RegionPoset posetOfRegions(const Ambient& h, const Chamber& base);
RegionPoset posetOfRegionsAt(const Ambient& h, size_t baseIndex);

// Chamber indices in a poset-respecting order, ties broken by (ell, canonical
// face encoding). With a preferred filter the non-members all come first;
// throws NotAnOrderFilter when the set is not upward closed.
std::vector<size_t> linearExtension(const RegionPoset& p,
                                    const std::optional<std::set<size_t>>& preferredFilter = {});

// A candidate shelling: facets listed as vertex-index sets of some
// AbstractComplex.
struct ShellingOrder {
    std::vector<std::vector<int>> facets;
};

struct ShellingCheck {
    bool isShelling = false;
    std::optional<size_t> firstViolation;  // 1-based position of the offending facet
};

// Verifies the classical condition: the order must be a permutation of the
// complex's facets (NotAPermutation), the complex pure (NotPure), and each
// facet F_j (j >= 2) must meet the union of its predecessors in a nonempty
// pure (d-2)-dimensional subcomplex. Every order of a 0-dimensional complex
// is a shelling.
ShellingCheck checkShellingOrder(const AbstractComplex& c, const ShellingOrder& order);
bool isShellingOrder(const AbstractComplex& c, const ShellingOrder& order);

// Shelling of the full Coxeter complex: linear extension of the poset of
// regions from the canonical base, facets aligned with coxeterAbstract(h).
ShellingOrder shellCoxeter(const Ambient& h);

// Chambers of the restriction to member `index`, partitioned by their sign
// vectors on the restricted traces of the other members. Classes appear in
// order of their least chamber; chambers within a class keep canonical order.
struct ComplementClasses {
    Restriction restr;
    std::vector<Chamber> chambers;               // chambersOf(restricted ambient)
    std::vector<std::vector<size_t>> classes;    // chamber indices
};

ComplementClasses complementClasses(const Arrangement& a, size_t index);

// Shelling order for the link complex of a hyperplane arrangement with
// d(A) >= 1, aligned with linkAbstract(a). Built recursively: shell the
// deletion of the canonically last hyperplane, then append that hyperplane's
// chambers class by class, each class ordered by a poset of regions re-based
// at the antipode of the class's least chamber (making the class an order
// filter, which is asserted).
ShellingOrder shellLink(const Arrangement& a);

}  // namespace arrlab
