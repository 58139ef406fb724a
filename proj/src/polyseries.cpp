#include "arrlab/polyseries.hpp"

#include <algorithm>
#include <sstream>

namespace arrlab {

Int binomialInt(const Int& n, long long k) {
    if (k < 0) return 0;
    Int num = 1;
    Int den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    // den divides num exactly: C(n, k) is an integer for all integer n.
    return num / den;
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int c) {
    return IntPolynomial(std::vector<Int>{std::move(c)});
}

IntPolynomial IntPolynomial::monomial(int degree, Int c) {
    std::vector<Int> v(degree + 1, Int(0));
    v[degree] = std::move(c);
    return IntPolynomial(std::move(v));
}

Int IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (isZero() || o.isZero()) return IntPolynomial();
    std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> v(coeffs_);
    for (auto& c : v) c = -c;
    return IntPolynomial(std::move(v));
}

Int IntPolynomial::evalInt(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPolynomial::evalRat(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

IntPolynomial IntPolynomial::substitute(const IntPolynomial& inner) const {
    IntPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * inner + IntPolynomial::constant(*it);
    return acc;
}

std::string IntPolynomial::toHuman() const {
    if (isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Int& c = coeffs_[d];
        if (c == 0) continue;
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1 || d == 0) out << a.str();
        if (d >= 1) out << "x";
        if (d >= 2) out << "^" << d;
        first = false;
    }
    return out.str();
}

IntPolynomial xMinusOnePower(int k) {
    IntPolynomial base(std::vector<Int>{-1, 1});
    IntPolynomial acc = IntPolynomial::constant(1);
    for (int i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

IntPolynomial polyInterpolate(const std::vector<std::pair<Int, Int>>& points) {
    const size_t n = points.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw ValidationError("polyInterpolate: repeated x value " + points[i].first.str());

    // Newton form with exact rational divided differences.
    std::vector<Rat> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = Rat(points[i].second);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i].first - points[i - level].first);

    // Expand sum_k dd[k] * prod_{j<k} (x - x_j) into the monomial basis.
    std::vector<Rat> acc;  // ascending
    std::vector<Rat> basis{Rat(1)};
    for (size_t k = 0; k < n; ++k) {
        if (acc.size() < basis.size()) acc.resize(basis.size(), Rat(0));
        for (size_t i = 0; i < basis.size(); ++i) acc[i] += dd[k] * basis[i];
        if (k + 1 < n) {
            // basis <- basis * (x - x_k)
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] += basis[i];
                next[i] -= basis[i] * Rat(points[k].first);
            }
            basis = std::move(next);
        }
    }

    std::vector<Int> coeffs(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        if (denominator(acc[i]) != 1)
            throw NonIntegerCoefficient("polyInterpolate: coefficient of x^" + std::to_string(i) +
                                        " is " + acc[i].str());
        coeffs[i] = numerator(acc[i]);
    }
    return IntPolynomial(std::move(coeffs));
}

namespace {

// Exact quotient N / (1-x); requires N(1) == 0. With (1-x)Q = N the
// coefficients of Q are the prefix sums of N.
IntPolynomial divideByOneMinusX(const IntPolynomial& n) {
    const auto& c = n.coeffs();
    std::vector<Int> q(c.size() > 0 ? c.size() - 1 : 0, Int(0));
    Int run = 0;
    for (size_t i = 0; i + 1 < c.size(); ++i) {
        run += c[i];
        q[i] = run;
    }
    return IntPolynomial(std::move(q));
}

}  // namespace

RationalSeries::RationalSeries(IntPolynomial num, int denomPower)
    : num_(std::move(num)), denomPower_(denomPower) {
    if (denomPower_ < 0) throw ValidationError("RationalSeries: negative denominator power");
    if (num_.isZero()) {
        denomPower_ = 0;
        return;
    }
    while (denomPower_ > 0 && num_.evalInt(1) == 0) {
        num_ = divideByOneMinusX(num_);
        --denomPower_;
    }
}

bool seriesEqual(const RationalSeries& a, const RationalSeries& b) {
    IntPolynomial na = a.numerator();
    IntPolynomial nb = b.numerator();
    const IntPolynomial oneMinusX(std::vector<Int>{1, -1});
    const int gap = a.denomPower() - b.denomPower();
    for (int i = 0; i < gap; ++i) nb = nb * oneMinusX;
    for (int i = 0; i < -gap; ++i) na = na * oneMinusX;
    return na == nb;
}

std::vector<Int> seriesCoefficients(const RationalSeries& r, int count) {
    if (count < 0) throw ValidationError("seriesCoefficients: negative count");
    std::vector<Int> out(count, Int(0));
    const auto& num = r.numerator().coeffs();
    const int k = r.denomPower();
    for (int m = 0; m < count; ++m) {
        Int c = 0;
        for (int i = 0; i <= m && i < static_cast<int>(num.size()); ++i) {
            if (k == 0) {
                if (i == m) c += num[i];
            } else {
                c += num[i] * binomialInt(Int(m - i + k - 1), k - 1);
            }
        }
        out[m] = c;
    }
    return out;
}

RationalSeries polynomialToNumerator(const IntPolynomial& q) {
    if (q.isZero()) return RationalSeries();
    const int d = q.degree();
    std::vector<Int> n(d + 2, Int(0));
    for (int j = 0; j <= d + 1; ++j) {
        Int sum = 0;
        for (int i = 0; i <= j; ++i) {
            Int term = binomialInt(Int(d + 1), i) * q.evalInt(Int(j - i));
            sum += (i % 2 == 0) ? term : -term;
        }
        n[j] = sum;
    }
    return RationalSeries(IntPolynomial(std::move(n)), d + 1);
}

IntPolynomial eulerianNumeratorA(int n) {
    if (n < 1) throw ValidationError("eulerianNumeratorA: n must be >= 1");
    RationalSeries r = polynomialToNumerator(IntPolynomial::monomial(n));
    // A_n(1) = n! != 0, so normalization leaves the power at n+1.
    if (r.denomPower() != n + 1)
        throw Error("eulerianNumeratorA: unexpected normalization");
    return r.numerator();
}

IntPolynomial eulerianNumeratorB(int n) {
    if (n < 1) throw ValidationError("eulerianNumeratorB: n must be >= 1");
    IntPolynomial q = IntPolynomial::monomial(n).substitute(IntPolynomial(std::vector<Int>{1, 2}));
    RationalSeries r = polynomialToNumerator(q);
    // B_n(1) = 2^n n! != 0.
    if (r.denomPower() != n + 1)
        throw Error("eulerianNumeratorB: unexpected normalization");
    return r.numerator();
}

}  // namespace arrlab
