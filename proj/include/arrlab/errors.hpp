#pragma once

#include <stdexcept>
#include <string>

// Error taxonomy shared across the library. Every failure mode callers are
// expected to distinguish gets its own type; generic misuse goes through
// ValidationError.

namespace arrlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input document or violated structural invariant.
struct ValidationError : Error {
    using Error::Error;
};

// polyInterpolate: the unique interpolant has a non-integer coefficient.
struct NonIntegerCoefficient : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// restriction: the given subspace is not an element of the intersection lattice.
struct NotInLattice : Error {
    using Error::Error;
};

// Operands live in different ambient spaces.
struct AmbientMismatch : Error {
    using Error::Error;
};

// Operation requires an arrangement consisting of hyperplanes only.
struct NotHyperplanes : Error {
    using Error::Error;
};

// linearExtension: the preferred subset is not upward closed.
struct NotAnOrderFilter : Error {
    using Error::Error;
};

// isShellingOrder: facets of unequal cardinality.
struct NotPure : Error {
    using Error::Error;
};

// isShellingOrder: the candidate order is not a permutation of the facets.
struct NotAPermutation : Error {
    using Error::Error;
};

// Graph-to-arrangement conversions need at least one edge.
struct EmptyEdgeSet : Error {
    using Error::Error;
};

// CLI refused an enumeration larger than the configured budget.
struct EnumerationBudget : Error {
    using Error::Error;
};

// Input document is not syntactically valid JSON.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace arrlab
