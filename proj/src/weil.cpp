// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "spinpacket/weil.hpp"

#include <sstream>
#include <utility>

namespace spinpacket {

bool prime_power_decompose(const Int& q, Int& p, unsigned& e) {
    if (q < 2) return false;
    const unsigned max_e = static_cast<unsigned>(mpz_sizeinbase(q.get_mpz_t(), 2));
    for (unsigned k = max_e; k >= 1; --k) {
        Int root;
        const int exact = mpz_root(root.get_mpz_t(), q.get_mpz_t(), k);
        if (!exact) continue;
        if (mpz_probab_prime_p(root.get_mpz_t(), 40) > 0) {
            p = root;
            e = k;
            return true;
        }
        if (k == 1) break;  // q itself composite and no smaller exponent left
    }
    return false;
}

IntPolynomial real_weil_transform(const IntPolynomial& P, const Int& q) {
    const int deg = P.degree();
    if (deg < 0 || deg % 2 != 0)
        throw DomainError("real_weil_transform: degree must be even and nonnegative");
    const int g = deg / 2;
    for (int k = 0; k <= g; ++k) {
        Int qk;
        mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned>(k));
        if (P.coeff(static_cast<std::size_t>(g - k)) != qk * P.coeff(static_cast<std::size_t>(g + k)))
            throw DomainError("real_weil_transform: functional equation not satisfied");
    }

    // P(T) = sum_k c_k T^(g-k) (T^2+q)^k; peel coefficients from the top.
    const IntPolynomial t2q(std::vector<Int>{q, Int(0), Int(1)});
    IntPolynomial residue = P;
    std::vector<Int> h(static_cast<std::size_t>(g) + 1, Int(0));
    for (int k = g; k >= 0; --k) {
        const Int c = residue.coeff(static_cast<std::size_t>(g + k));
        h[static_cast<std::size_t>(k)] = c;
        if (c != 0)
            residue = residue - t2q.pow(static_cast<unsigned>(k)) *
                                    IntPolynomial::monomial(c, static_cast<std::size_t>(g - k));
    }
    if (!residue.is_zero())
        throw InternalContradiction("real_weil_transform: nonzero residue after peeling");
    return IntPolynomial(std::move(h));
}

WeilPolynomial WeilPolynomial::validate(IntPolynomial P, Int q) {
    Int prime;
    unsigned exponent = 0;
    if (!prime_power_decompose(q, prime, exponent))
        throw ValidationError(ValidationFailure::NotPrimePower,
                              "q = " + q.get_str() + " is not a prime power");

    const int deg = P.degree();
    if (deg < 2 || deg % 2 != 0)
        throw ValidationError(ValidationFailure::BadDegree,
                              "degree must be even and at least 2, got " + std::to_string(deg));
    if (!P.is_monic())
        throw ValidationError(ValidationFailure::NotMonic, "polynomial is not monic");

    const unsigned g = static_cast<unsigned>(deg) / 2;
    for (unsigned k = 0; k <= g; ++k) {
        Int qk;
        mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k);
        if (P.coeff(g - k) != qk * P.coeff(g + k)) {
            std::ostringstream msg;
            msg << "functional equation fails at k=" << k << ": a_" << (g - k) << " = "
                << P.coeff(g - k).get_str() << " but q^k a_" << (g + k) << " = "
                << Int(qk * P.coeff(g + k)).get_str();
            throw ValidationError(ValidationFailure::FunctionalEquationFailed, msg.str(),
                                  static_cast<long>(k));
        }
    }

    // Modulus condition: all roots of the real transform h must be real and
    // lie in [-2 sqrt(q), 2 sqrt(q)]. Boundary roots are exact factors of
    // x^2 - 4q (or x -+ 2 sqrt(q) when q is a square); strip them, then the
    // rest must have a full count of real roots strictly inside.
    IntPolynomial h = real_weil_transform(P, q);
    const Int four_q = 4 * q;
    if (mpz_perfect_square_p(four_q.get_mpz_t())) {
        Int two_root_q;
        mpz_sqrt(two_root_q.get_mpz_t(), four_q.get_mpz_t());
        for (const Int& sign : {Int(1), Int(-1)}) {
            const IntPolynomial lin({-(sign * two_root_q), Int(1)});
            while (h.degree() > 0) {
                auto quot = IntPolynomial::divide_exact(h, lin);
                if (!quot) break;
                h = *quot;
            }
        }
    } else {
        const IntPolynomial boundary({-four_q, Int(0), Int(1)});
        while (h.degree() > 1) {
            auto quot = IntPolynomial::divide_exact(h, boundary);
            if (!quot) break;
            h = *quot;
        }
    }
    if (h.degree() > 0) {
        const IntPolynomial h1 = squarefree_part(h);
        const QuadraticSurd lo(Rat(0), Rat(-2), q);
        const QuadraticSurd hi(Rat(0), Rat(2), q);
        const int inside = sturm_count(h1, lo, hi);
        if (inside != h1.degree()) {
            std::ostringstream msg;
            msg << "roots off the Weil circle: " << inside << " of " << h1.degree()
                << " distinct real-transform roots lie in (-2 sqrt q, 2 sqrt q)";
            throw ValidationError(ValidationFailure::RootsOffWeilCircle, msg.str(), -1,
                                  inside, h1.degree());
        }
    }

    return WeilPolynomial(std::move(P), std::move(q), std::move(prime), exponent, g);
}

WeilPolynomial quadratic_twist(const WeilPolynomial& w) {
    // P(-T) is monic (even degree) and has the same root moduli and pairing.
    return WeilPolynomial::validate(w.polynomial().negate_variable(), w.q());
}

bool is_even(const WeilPolynomial& w) {
    const auto& c = w.polynomial().coeffs();
    for (std::size_t i = 1; i < c.size(); i += 2)
        if (c[i] != 0) return false;
    return true;
}

WeilPolynomial base_change(const WeilPolynomial& w, unsigned r) {
    if (r == 0) throw DomainError("base_change: extension degree must be positive");
    Int qr;
    mpz_pow_ui(qr.get_mpz_t(), w.q().get_mpz_t(), r);
    return WeilPolynomial::validate(power_map(w.polynomial(), r), qr);
}

IsogenyClassInvariants invariants(const WeilPolynomial& w) {
    IsogenyClassInvariants inv;
    inv.radical = squarefree_part(w.polynomial());
    inv.center_dim = static_cast<unsigned>(inv.radical.degree());
    inv.is_isotypic = is_irreducible(inv.radical);
    inv.is_even = is_even(w);
    inv.twist = w.polynomial().negate_variable();
    inv.center_dim_quadratic =
        static_cast<unsigned>(squarefree_part(power_map(w.polynomial(), 2)).degree());
    return inv;
}

unsigned base_change_index(const WeilPolynomial& w, unsigned r) {
    if (r == 0) throw DomainError("base_change_index: extension degree must be positive");
    const IntPolynomial radical = squarefree_part(w.polynomial());
    if (!is_irreducible(radical))
        throw NotIsotypicError("base_change_index: class is not isotypic");

    const WeilPolynomial extended = base_change(w, r);
    const IntPolynomial radical_ext = squarefree_part(extended.polynomial());
    const unsigned dim = static_cast<unsigned>(radical.degree());
    const unsigned dim_ext = static_cast<unsigned>(radical_ext.degree());
    if (dim_ext == 0 || dim % dim_ext != 0)
        throw InternalContradiction("base_change_index: center dimension not divisible");
    const unsigned m = dim / dim_ext;
    if (power_map(radical, r) != radical_ext.pow(m))
        throw InternalContradiction("base_change_index: radical power identity fails");
    if (r % m != 0)
        throw InternalContradiction("base_change_index: m=" + std::to_string(m) +
                                    " does not divide r=" + std::to_string(r) +
                                    " for this class");
    return m;
}

bool even_criterion_centers(const WeilPolynomial& w) {
    const IsogenyClassInvariants inv = invariants(w);
    if (!inv.is_isotypic)
        throw NotIsotypicError("even_criterion_centers: class is not isotypic");
    return inv.center_dim == 2 * inv.center_dim_quadratic;
}

}  // namespace spinpacket
