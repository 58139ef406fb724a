#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "arrlab/errors.hpp"

// Exact univariate polynomial arithmetic and rational generating series with
// denominator (1-x)^k. Everything is integer-exact; rationals appear only
// transiently inside evaluation and interpolation.

namespace arrlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Binomial coefficient C(n, k) for k >= 0 and arbitrary integer n,
// via the falling-factorial product. Exact.
Int binomialInt(const Int& n, long long k);

// Dense polynomial with integer coefficients, stored ascending by degree.
// The zero polynomial has an empty coefficient vector and degree -1.
// Trailing zero coefficients are trimmed on construction, so equality of
// coefficient vectors is equality of polynomials.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial constant(Int c);
    // c * x^degree
    static IntPolynomial monomial(int degree, Int c = 1);

    bool isZero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    // Coefficient of x^i; zero outside the stored range.
    Int coeff(int i) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    Int evalInt(const Int& x) const;
    Rat evalRat(const Rat& x) const;

    // p(q(x)); used for arguments like 2m+1.
    IntPolynomial substitute(const IntPolynomial& inner) const;

    // Human-readable, descending: "x^2 - 3x + 2"; the zero polynomial is "0".
    std::string toHuman() const;

private:
    std::vector<Int> coeffs_;
};

// (x - 1)^k, handy for h-polynomial expansions.
IntPolynomial xMinusOnePower(int k);

// Unique polynomial of degree < points.size() through the given (x, y) pairs.
// The x values must be pairwise distinct. Throws NonIntegerCoefficient when
// the interpolant is not integral.
IntPolynomial polyInterpolate(const std::vector<std::pair<Int, Int>>& points);

// A formal power series written as num(x) / (1-x)^denomPower. Construction
// normalizes: factors of (1-x) shared with the denominator are divided out,
// so num(1) != 0 or the series is zero (num = 0, denomPower = 0).
class RationalSeries {
public:
    RationalSeries() : denomPower_(0) {}
    RationalSeries(IntPolynomial num, int denomPower);

    const IntPolynomial& numerator() const { return num_; }
    int denomPower() const { return denomPower_; }
    bool isZero() const { return num_.isZero(); }
    bool operator==(const RationalSeries& o) const {
        return denomPower_ == o.denomPower_ && num_ == o.num_;
    }

private:
    IntPolynomial num_;
    int denomPower_;
};

// Equality as formal series, by cross-multiplying with the (1-x)-power gap.
bool seriesEqual(const RationalSeries& a, const RationalSeries& b);

// First `count` coefficients of the series expansion around 0.
std::vector<Int> seriesCoefficients(const RationalSeries& r, int count);

// The numerator transform: for a polynomial q of degree D,
//   sum_{m>=0} q(m) x^m  =  N(x) / (1-x)^(D+1)
// with N_j = sum_{i=0..j} (-1)^i C(D+1, i) q(j-i), j = 0..D+1.
RationalSeries polynomialToNumerator(const IntPolynomial& q);

// Eulerian numerator: A_n(x) with sum_{m>=0} m^n x^m = A_n(x)/(1-x)^(n+1).
// Requires n >= 1.
IntPolynomial eulerianNumeratorA(int n);

// Type B analogue: B_n(x) with sum_{m>=0} (2m+1)^n x^m = B_n(x)/(1-x)^(n+1).
// Requires n >= 1.
IntPolynomial eulerianNumeratorB(int n);

}  // namespace arrlab
