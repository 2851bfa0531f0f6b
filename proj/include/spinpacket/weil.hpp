// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef SPINPACKET_WEIL_HPP
#define SPINPACKET_WEIL_HPP

#include "spinpacket/errors.hpp"
#include "spinpacket/polycore.hpp"

namespace spinpacket {

/// A validated Weil q-polynomial: monic integer P of degree 2g, coefficient
/// functional equation a_{g-k} = q^k a_{g+k}, and every complex root of
/// modulus exactly sqrt(q) (certified by an exact Sturm count on the real
/// transform).
class WeilPolynomial {
public:
    // Throws ValidationError with the failing check and witness.
    static WeilPolynomial validate(IntPolynomial P, Int q);

    const IntPolynomial& polynomial() const { return p_; }
    const Int& q() const { return q_; }
    const Int& prime() const { return prime_; }
    unsigned prime_exponent() const { return prime_exponent_; }
    unsigned g() const { return g_; }

    bool operator==(const WeilPolynomial& rhs) const {
        return p_ == rhs.p_ && q_ == rhs.q_;
    }

private:
    WeilPolynomial(IntPolynomial p, Int q, Int prime, unsigned e, unsigned g)
        : p_(std::move(p)), q_(std::move(q)), prime_(std::move(prime)),
          prime_exponent_(e), g_(g) {}

    IntPolynomial p_;
    Int q_;
    Int prime_;
    unsigned prime_exponent_;
    unsigned g_;
};

struct IsogenyClassInvariants {
    IntPolynomial radical;          // squarefree part of P
    unsigned center_dim = 0;        // deg(radical)
    bool is_isotypic = false;       // radical irreducible
    bool is_even = false;           // P(T) = P(-T)
    IntPolynomial twist;            // P(-T)
    unsigned center_dim_quadratic = 0;  // deg squarefree_part(P^(2))
};

// Writes q = p^e with p prime; false if q is not a prime power.
bool prime_power_decompose(const Int& q, Int& p, unsigned& e);

/// The unique monic degree-g integer h with P(T) = T^g h(T + q/T).
/// Throws DomainError if P does not satisfy the functional equation.
IntPolynomial real_weil_transform(const IntPolynomial& P, const Int& q);

/// The class with polynomial P(-T); an involution.
WeilPolynomial quadratic_twist(const WeilPolynomial& w);

/// True iff every odd-index coefficient of P vanishes.
bool is_even(const WeilPolynomial& w);

/// The class over F_{q^r} with polynomial P^(r).
WeilPolynomial base_change(const WeilPolynomial& w, unsigned r);

IsogenyClassInvariants invariants(const WeilPolynomial& w);

/// For isotypic w: the integer m | r with M^(r) = (radical after base
/// change)^m; also checks that identity exactly.
unsigned base_change_index(const WeilPolynomial& w, unsigned r);

/// For isotypic w: center_dim == 2 * center_dim_quadratic, which under the
/// hypothesis is equivalent to evenness.
bool even_criterion_centers(const WeilPolynomial& w);

}  // namespace spinpacket

#endif  // SPINPACKET_WEIL_HPP
