// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).
//
// Rational factorization: squarefree decomposition, Cantor-Zassenhaus
// modulo one prime, quadratic Hensel lifting to a Mignotte-style bound,
// exhaustive subset recombination. Degrees in scope stay small, so the
// exponential recombination worst case is acceptable.

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "spinpacket/errors.hpp"
#include "spinpacket/polycore.hpp"

namespace spinpacket {

namespace {

// Dense polynomial with coefficients reduced into [0, m).
using ModPoly = std::vector<Int>;

Int mod_reduce(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

void mp_trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int mp_deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

ModPoly mp_from(const IntPolynomial& p, const Int& m) {
    ModPoly f(p.coeffs().size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = mod_reduce(p.coeffs()[i], m);
    mp_trim(f);
    return f;
}

ModPoly mp_x() { return ModPoly{Int(0), Int(1)}; }

ModPoly mp_add(const ModPoly& a, const ModPoly& b, const Int& m) {
    ModPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod_reduce(r[i] + b[i], m);
    mp_trim(r);
    return r;
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, const Int& m) {
    ModPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod_reduce(r[i] - b[i], m);
    mp_trim(r);
    return r;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    for (Int& c : r) c = mod_reduce(c, m);
    mp_trim(r);
    return r;
}

ModPoly mp_scale(const ModPoly& a, const Int& c, const Int& m) {
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_reduce(a[i] * c, m);
    mp_trim(r);
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int inv;
    if (!mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw InternalContradiction("factor: modular inverse does not exist");
    return inv;
}

// Division with remainder; requires lc(den) invertible mod m.
void mp_divmod(const ModPoly& num, const ModPoly& den, const Int& m,
               ModPoly& quot, ModPoly& rem) {
    if (den.empty()) throw InternalContradiction("factor: modular division by zero");
    rem = num;
    quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    const Int inv = mod_inverse(den.back(), m);
    while (mp_deg(rem) >= mp_deg(den)) {
        const std::size_t shift = rem.size() - den.size();
        const Int f = mod_reduce(rem.back() * inv, m);
        quot[shift] = f;
        for (std::size_t i = 0; i < den.size(); ++i)
            rem[shift + i] = mod_reduce(rem[shift + i] - f * den[i], m);
        mp_trim(rem);
    }
    mp_trim(quot);
}

ModPoly mp_rem(const ModPoly& num, const ModPoly& den, const Int& m) {
    ModPoly q, r;
    mp_divmod(num, den, m, q, r);
    return r;
}

ModPoly mp_monic(const ModPoly& a, const Int& m) {
    if (a.empty() || a.back() == 1) return a;
    return mp_scale(a, mod_inverse(a.back(), m), m);
}

// Monic gcd over F_p.
ModPoly mp_gcd(ModPoly a, ModPoly b, const Int& p) {
    while (!b.empty()) {
        ModPoly r = mp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a, p);
}

// Extended Euclid over F_p: s a + t b = g with g monic.
void mp_ext_gcd(const ModPoly& a, const ModPoly& b, const Int& p,
                ModPoly& g, ModPoly& s, ModPoly& t) {
    ModPoly r0 = a, r1 = b;
    ModPoly s0{Int(1)}, s1{}, t0{}, t1{Int(1)};
    while (!r1.empty()) {
        ModPoly q, r;
        mp_divmod(r0, r1, p, q, r);
        ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
        ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.empty()) throw InternalContradiction("factor: ext_gcd of zero polynomials");
    const Int inv = mod_inverse(r0.back(), p);
    g = mp_scale(r0, inv, p);
    s = mp_scale(s0, inv, p);
    t = mp_scale(t0, inv, p);
}

// base^e mod f over F_p.
ModPoly mp_powmod(ModPoly base, Int e, const ModPoly& f, const Int& p) {
    ModPoly result{Int(1)};
    base = mp_rem(base, f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = mp_rem(mp_mul(result, base, p), f, p);
        base = mp_rem(mp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do { v = rng(); } while (v >= limit);
    return v % n;
}

// Equal-degree splitting (Cantor-Zassenhaus, p odd): f monic squarefree,
// all irreducible factors of degree d. Deterministically seeded so the
// output factor list is reproducible.
void mp_equal_degree(const ModPoly& f, int d, const Int& p,
                     std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (mp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    const unsigned long pl = mpz_get_ui(p.get_mpz_t());
    Int exponent;
    mpz_pow_ui(exponent.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
    ModPoly g;
    while (true) {
        ModPoly a(static_cast<std::size_t>(mp_deg(f)), Int(0));
        for (Int& c : a) c = Int(static_cast<unsigned long>(uniform_below(rng, pl)));
        mp_trim(a);
        if (mp_deg(a) < 1) continue;
        g = mp_gcd(a, f, p);
        if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(f)) break;
        ModPoly b = mp_powmod(a, exponent, f, p);
        b = mp_sub(b, ModPoly{Int(1)}, p);
        g = mp_gcd(b, f, p);
        if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(f)) break;
    }
    ModPoly q, r;
    mp_divmod(f, g, p, q, r);
    mp_equal_degree(g, d, p, rng, out);
    mp_equal_degree(q, d, p, rng, out);
}

// Full factorization of monic squarefree f over F_p into monic irreducibles.
std::vector<ModPoly> mp_factor_squarefree(ModPoly f, const Int& p) {
    std::vector<ModPoly> out;
    std::mt19937_64 rng(0x53504b54u);  // fixed seed: reproducible splitting
    ModPoly h = mp_x();
    int d = 0;
    while (mp_deg(f) >= 2 * (d + 1)) {
        ++d;
        h = mp_powmod(h, p, f, p);
        ModPoly g = mp_gcd(mp_sub(h, mp_x(), p), f, p);
        if (mp_deg(g) > 0) {
            mp_equal_degree(g, d, p, rng, out);
            ModPoly q, r;
            mp_divmod(f, g, p, q, r);
            f = std::move(q);
            h = mp_rem(h, f, p);
        }
    }
    if (mp_deg(f) > 0) out.push_back(f);
    return out;
}

// Symmetric representative in (-m/2, m/2].
Int symmetric_mod(const Int& a, const Int& m) {
    Int r = mod_reduce(a, m);
    if (2 * r > m) r -= m;
    return r;
}

IntPolynomial mp_to_int_symmetric(const ModPoly& f, const Int& m) {
    std::vector<Int> v(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) v[i] = symmetric_mod(f[i], m);
    return IntPolynomial(std::move(v));
}

// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m),
// h monic, to the same data mod m^2.
void hensel_step(const IntPolynomial& f, ModPoly& g, ModPoly& h,
                 ModPoly& s, ModPoly& t, const Int& m) {
    const Int m2 = m * m;
    ModPoly fm = mp_from(f, m2);
    ModPoly e = mp_sub(fm, mp_mul(g, h, m2), m2);
    ModPoly q, r;
    mp_divmod(mp_mul(s, e, m2), h, m2, q, r);
    ModPoly g1 = mp_add(g, mp_add(mp_mul(t, e, m2), mp_mul(q, g, m2), m2), m2);
    ModPoly h1 = mp_add(h, r, m2);
    ModPoly b = mp_sub(mp_add(mp_mul(s, g1, m2), mp_mul(t, h1, m2), m2), ModPoly{Int(1)}, m2);
    ModPoly c, d;
    mp_divmod(mp_mul(s, b, m2), h1, m2, c, d);
    ModPoly s1 = mp_sub(s, d, m2);
    ModPoly t1 = mp_sub(mp_sub(t, mp_mul(t, b, m2), m2), mp_mul(c, g1, m2), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

Int int_pow(const Int& base, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// 2-norm of the coefficient vector, rounded up.
Int norm2_ceil(const IntPolynomial& f) {
    Int s = 0;
    for (const Int& c : f.coeffs()) s += c * c;
    Int rt;
    mpz_sqrt(rt.get_mpz_t(), s.get_mpz_t());
    if (rt * rt < s) rt += 1;
    return rt;
}

// Irreducible factors of a primitive squarefree polynomial, positive
// leading coefficients.
std::vector<IntPolynomial> zassenhaus(const IntPolynomial& f) {
    const int n = f.degree();
    if (n == 1) return {f};

    // Prime: smallest >= 5 dividing neither the leading coefficient nor
    // the discriminant-bearing resultant res(f, f').
    const Int res = resultant(f, f.derivative());
    if (res == 0) throw InternalContradiction("zassenhaus: input not squarefree");
    Int p = 3;
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p < 5) continue;
        if (mpz_divisible_p(f.leading().get_mpz_t(), p.get_mpz_t())) continue;
        if (mpz_divisible_p(res.get_mpz_t(), p.get_mpz_t())) continue;
        break;
    }
    if (!p.fits_ulong_p())
        throw InternalContradiction("zassenhaus: modular prime does not fit a machine word");

    ModPoly fp = mp_monic(mp_from(f, p), p);
    std::vector<ModPoly> locals = mp_factor_squarefree(fp, p);
    if (locals.size() == 1) return {f};
    // Deterministic local ordering (degree, then coefficients).
    std::sort(locals.begin(), locals.end(), [](const ModPoly& a, const ModPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });

    // Lift each local factor against its cofactor to one common modulus
    // p^(2^j) exceeding twice the Mignotte-style bound; uniqueness of the
    // coprime lift keeps f = lc * prod(lifted) (mod p^(2^j)).
    const Int bound = 2 * int_pow(Int(2), static_cast<unsigned>(n)) * norm2_ceil(f) * abs(f.leading());
    unsigned doublings = 0;
    Int modulus = p;
    while (modulus <= bound) {
        modulus = modulus * modulus;
        ++doublings;
    }

    std::vector<ModPoly> lifted;
    lifted.reserve(locals.size());
    for (const ModPoly& gi : locals) {
        ModPoly h = gi;                       // monic part being lifted
        ModPoly q, r;
        mp_divmod(fp, gi, p, q, r);
        ModPoly g = mp_scale(q, mod_reduce(f.leading(), p), p);  // cofactor carrying lc
        ModPoly s, t, one;
        mp_ext_gcd(g, h, p, one, s, t);
        if (mp_deg(one) != 0)
            throw InternalContradiction("zassenhaus: local factors not coprime");
        Int m = p;
        for (unsigned j = 0; j < doublings; ++j) {
            hensel_step(f, g, h, s, t, m);
            m = m * m;
        }
        lifted.push_back(std::move(h));
    }

    // Exhaustive recombination over subsets of the lifted local factors,
    // by increasing subset size, combinations in lexicographic order.
    std::vector<IntPolynomial> out;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    IntPolynomial f_rem = f;

    auto next_combination = [](std::vector<std::size_t>& pick, std::size_t n) {
        const std::size_t s = pick.size();
        std::size_t i = s;
        while (i-- > 0) {
            if (pick[i] != i + n - s) {
                ++pick[i];
                for (std::size_t k = i + 1; k < s; ++k) pick[k] = pick[k - 1] + 1;
                return true;
            }
        }
        return false;
    };

    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool found = false;
        std::vector<std::size_t> pick(s);
        for (std::size_t i = 0; i < s; ++i) pick[i] = i;
        do {
            ModPoly prod{mod_reduce(f_rem.leading(), modulus)};
            for (std::size_t i : pick) prod = mp_mul(prod, lifted[remaining[i]], modulus);
            IntPolynomial cand = mp_to_int_symmetric(prod, modulus).primitive_part();
            if (cand.degree() == 0) continue;
            auto quot = IntPolynomial::divide_exact(f_rem, cand);
            if (!quot) continue;
            out.push_back(cand);
            f_rem = *quot;
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < remaining.size(); ++i)
                if (std::find(pick.begin(), pick.end(), i) == pick.end())
                    keep.push_back(remaining[i]);
            remaining = std::move(keep);
            found = true;
            break;
        } while (next_combination(pick, remaining.size()));
        if (!found) ++s;
    }
    if (f_rem.degree() > 0) out.push_back(f_rem.primitive_part());
    return out;
}

}  // namespace

std::vector<PolyFactor> factor_rational(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw DomainError("factor_rational: input must have degree >= 1");

    std::vector<PolyFactor> out;
    for (const PolyFactor& part : squarefree_decomposition(p)) {
        for (const IntPolynomial& irr : zassenhaus(part.factor))
            out.push_back({irr.primitive_part(), part.multiplicity});
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        return IntPolynomial::compare(a.factor, b.factor) < 0;
    });
    // Merge equal factors across multiplicity classes (cannot occur for
    // distinct Yun parts, but keeps the contract airtight).
    std::vector<PolyFactor> merged;
    for (PolyFactor& pf : out) {
        if (!merged.empty() && merged.back().factor == pf.factor)
            merged.back().multiplicity += pf.multiplicity;
        else
            merged.push_back(std::move(pf));
    }
    return merged;
}

bool is_irreducible(const IntPolynomial& p) {
    auto factors = factor_rational(p);
    return factors.size() == 1 && factors[0].multiplicity == 1;
}

}  // namespace spinpacket
