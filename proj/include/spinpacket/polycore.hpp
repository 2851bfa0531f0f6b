// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef SPINPACKET_POLYCORE_HPP
#define SPINPACKET_POLYCORE_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spinpacket {

using Int = mpz_class;
using Rat = mpq_class;

/// Univariate polynomial over Z, coefficients stored low-to-high.
/// The highest stored coefficient is nonzero unless the polynomial is zero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(const Int& c, std::size_t k);
    static IntPolynomial constant(const Int& c) { return monomial(c, 0); }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const;

    // Coefficient of T^i; zero beyond the degree.
    const Int& coeff(std::size_t i) const;
    const Int& operator[](std::size_t i) const { return coeff(i); }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& leading() const;

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const Int& scalar) const;
    bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntPolynomial& rhs) const { return !(*this == rhs); }

    IntPolynomial derivative() const;
    // p(-T).
    IntPolynomial negate_variable() const;
    // Coefficient list reversed: T^deg * p(1/T).
    IntPolynomial reverse() const;
    IntPolynomial pow(unsigned e) const;

    Int evaluate(const Int& x) const;
    Rat evaluate(const Rat& x) const;

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    Int content() const;
    // this / content, sign-normalized to positive leading coefficient.
    IntPolynomial primitive_part() const;

    // Quotient of num by den over Q when the division is exact over Z,
    // nullopt otherwise.
    static std::optional<IntPolynomial> divide_exact(const IntPolynomial& num,
                                                     const IntPolynomial& den);

    // Total order: degree first, then coefficients from the constant term up.
    static int compare(const IntPolynomial& a, const IntPolynomial& b);

    std::string to_string(const std::string& var = "T") const;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// Exact real number of the form a + b*sqrt(d), d a positive integer.
/// Construction extracts the square part of d, so two surds over the
/// same quadratic field normalize to the same d.
class QuadraticSurd {
public:
    QuadraticSurd(Rat a, Rat b, Int d);
    static QuadraticSurd rational(Rat a) { return QuadraticSurd(std::move(a), 0, 1); }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    const Int& radicand() const { return d_; }

    // Exact sign in {-1, 0, 1}, from the signs of a, b and a^2 vs b^2 d.
    int sign() const;

    double to_double() const;

private:
    Rat a_, b_;
    Int d_;
};

// Exact comparison; supports operands over different radicands.
int compare(const QuadraticSurd& x, const QuadraticSurd& y);
bool operator<(const QuadraticSurd& x, const QuadraticSurd& y);
bool operator==(const QuadraticSurd& x, const QuadraticSurd& y);

/// Primitive gcd over the rationals, positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& r);

/// p / gcd(p, p'): the distinct roots of p, each with multiplicity one.
/// Primitive, positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// For monic g with roots tau_j, the monic polynomial with roots tau_j^r,
/// computed as Res_S(g(S), T - S^r); no root extraction.
IntPolynomial power_map(const IntPolynomial& g, unsigned r);

/// Resultant of p and r over Z (Sylvester convention), via the
/// subresultant pseudo-remainder chain.
Int resultant(const IntPolynomial& p, const IntPolynomial& r);

/// Number of real roots of squarefree p in the open interval (lo, hi).
/// Endpoint signs are evaluated exactly on quadratic surds; an endpoint
/// that is a root of p is a caller error.
int sturm_count(const IntPolynomial& p, const QuadraticSurd& lo, const QuadraticSurd& hi);

struct PolyFactor {
    IntPolynomial factor;     // primitive, positive leading coefficient
    unsigned multiplicity = 0;
};

/// Yun squarefree decomposition: p = unit * prod factor^multiplicity with
/// each factor primitive squarefree and pairwise coprime.
std::vector<PolyFactor> squarefree_decomposition(const IntPolynomial& p);

/// Complete factorization into irreducible primitive integer polynomials,
/// positive leading coefficients, sorted by (degree, coefficients).
/// Squarefree decomposition, then factorization modulo one prime, Hensel
/// lifting to a Mignotte-style bound, and exhaustive recombination.
std::vector<PolyFactor> factor_rational(const IntPolynomial& p);

bool is_irreducible(const IntPolynomial& p);

}  // namespace spinpacket

#endif  // SPINPACKET_POLYCORE_HPP
