#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrlab/faces.hpp"
#include "arrlab/graphs.hpp"

// Machine verification of the identities tying the link complex's face
// enumeration to the characteristic polynomial: deletion-restriction, the
// h-polynomial recursion, the Eulerian-polynomial identities for the full
// Coxeter complexes and for single subspaces, the two main rational-series
// theorems, Steingrimsson's coloring-complex identity, the Hilbert-function
// corollaries for the cone rings, and the wedge Euler-characteristic count.
// Both sides of every identity are computed by independent code paths: the
// face enumeration never feeds the characteristic polynomial and vice versa.

namespace arrlab {

enum class Identity {
    DeletionRestriction,
    LemmaRecursion,
    LemmaEulerianA,
    LemmaEulerianB,
    LemmaSingleA,
    LemmaSingleB,
    TheoremSn,
    TheoremBn,
    Steingrimsson,
    CorollarySnRing,
    CorollarySnIdeal,
    CorollaryBnRing,
    CorollaryBnIdeal,
    EulerWedge,
};

// Stable kebab-case name, e.g. "theorem-sn".
const char* identityName(Identity id);
std::optional<Identity> identityFromName(std::string_view name);

struct VerificationReport {
    Identity identity = Identity::DeletionRestriction;
    std::string input;  // short instance descriptor
    std::string lhs;    // serialized left side
    std::string rhs;    // serialized right side
    bool pass = false;
};

// chi(a) = chi(a \ A) - chi(a / A) for every member A; one report, both
// sides listing all members.
VerificationReport verifyDeletionRestriction(const Arrangement& a);

// h(a;x) = (x-1)^{d(a)-d(a\A)} h(a\A;x) + (x-1)^{d(a)-d(A)} h({A};x)
//        - (x-1)^{d(a)-d(a/A)} h(a/A;x), for the chosen member. Needs
// |a| >= 2; all four h-polynomials come from independent face enumerations.
VerificationReport verifyLemmaRecursion(const Arrangement& a, size_t memberIndex);

// x*reverseH(full type A complex) = Eulerian numerator A_n(x); type B drops
// the leading x and uses the (2m+1)-Eulerian numerator.
VerificationReport verifyLemmaEulerian(Family family, int n);

// Single-subspace arrangement {s}: its link obeys the same Eulerian identity
// one rank down (type A: A_{d+1}; type B: the (2m+1)-numerator of degree d).
VerificationReport verifyLemmaSingleA(const SubspaceA& s);
VerificationReport verifyLemmaSingleB(const SubspaceB& s);

// x*reverseH(link)/(1-x)^{d+2} = sum_m m*T(a;m) x^m. linkOverride substitutes
// a foreign f-vector (negative-control fixtures).
VerificationReport verifyTheoremSn(const Arrangement& a, const FVector* linkOverride = nullptr);

// reverseH(link)/(1-x)^{d+1} = sum_m T(a;2m+1) x^m.
VerificationReport verifyTheoremBn(const Arrangement& a, const FVector* linkOverride = nullptr);

// x*reverseH(link of the graph arrangement)/(1-x)^n = sum_m (m^n - P_G(m)) x^m
// with P_G from the brute-force coloring oracle.
VerificationReport verifySteingrimsson(const Graph& g, const FVector* linkOverride = nullptr);

// Double cone over the link: Hilbert function H(m) = (m+1) T(a;m+1); the
// complement ideal inside the double-coned full complex has
// H_Gamma(m) - H_Gamma'(m) = (m+1) chi(a;m+1). Checked for m = 0..2d+4,
// past every polynomial degree in play. Returns {ring, ideal} reports.
std::vector<VerificationReport> verifyCorollarySn(const Arrangement& a);

// Single cones; H(m) = T(a;2m+1) and difference chi(a;2m+1).
std::vector<VerificationReport> verifyCorollaryBn(const Arrangement& a);

// |reducedEuler(link)| = regionCount - 1 with sign (-1)^{dim link}, for
// hyperplane arrangements.
VerificationReport verifyEulerWedge(const Arrangement& a);

// A catalog entry is an independently runnable verification batch.
struct CatalogItem {
    std::string label;
    std::function<std::vector<VerificationReport>()> run;
};

struct Catalog {
    std::vector<CatalogItem> items;
};

// The built-in verification catalog: Eulerian identities across the budgeted
// ranks, single-subspace checks, deletion-restriction and recursion on random
// antichains, and the theorem/corollary/wedge suite over every labeled graph
// on 2..5 vertices, every signed graph on 1..3 vertices, and random
// mixed-dimension antichains. Deterministically seeded.
Catalog standardCatalog();

// Runs every item (optionally across threads) and aggregates reports in
// item order. Individual failures are recorded, never thrown.
std::vector<VerificationReport> runAll(const Catalog& catalog, int threads = 1);

}  // namespace arrlab
