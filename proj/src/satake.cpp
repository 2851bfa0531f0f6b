// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "spinpacket/satake.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <unordered_set>

#include "spinpacket/errors.hpp"

namespace spinpacket {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> to_scaled_doubles(const IntPolynomial& p, double& scale) {
    scale = 0.0;
    for (const Int& c : p.coeffs()) scale = std::max(scale, std::abs(c.get_d()));
    if (scale == 0.0) scale = 1.0;
    std::vector<double> v(p.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.coeffs()[i].get_d() / scale;
    return v;
}

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::complex<double> horner_derivative(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * z + c[i] * static_cast<double>(i);
    return acc;
}

// Aberth-Ehrlich on a squarefree real polynomial. Deterministic start:
// equally spaced points on the Cauchy-bound circle, angular offset 0.376.
std::vector<std::complex<double>> aberth(const IntPolynomial& p, int max_iter) {
    const int n = p.degree();
    double scale;
    const std::vector<double> c = to_scaled_doubles(p, scale);

    double cauchy = 0.0;
    for (int i = 0; i < n; ++i) cauchy = std::max(cauchy, std::abs(c[static_cast<std::size_t>(i)]));
    cauchy = 1.0 + cauchy / std::abs(c[static_cast<std::size_t>(n)]);

    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double angle = kTwoPi * static_cast<double>(k) / static_cast<double>(n) + 0.376;
        z[static_cast<std::size_t>(k)] = std::polar(cauchy, angle);
    }

    for (int iter = 0; iter < max_iter; ++iter) {
        double max_step = 0.0;
        for (int k = 0; k < n; ++k) {
            const std::complex<double> zk = z[static_cast<std::size_t>(k)];
            const std::complex<double> pv = horner(c, zk);
            if (pv == 0.0) continue;
            const std::complex<double> dv = horner_derivative(c, zk);
            std::complex<double> newton;
            if (dv == 0.0) {
                newton = std::complex<double>(1e-12, 1e-12);
            } else {
                newton = pv / dv;
            }
            std::complex<double> repulsion = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                const std::complex<double> diff = zk - z[static_cast<std::size_t>(j)];
                if (diff != 0.0) repulsion += 1.0 / diff;
            }
            const std::complex<double> denom = 1.0 - newton * repulsion;
            const std::complex<double> step = (denom == 0.0) ? newton : newton / denom;
            z[static_cast<std::size_t>(k)] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-15 * (1.0 + cauchy)) break;
    }
    return z;
}

double residual_scale(const IntPolynomial& p) {
    double maxc = 0.0;
    for (const Int& c : p.coeffs()) maxc = std::max(maxc, std::abs(c.get_d()));
    double cauchy = 0.0;
    for (int i = 0; i < p.degree(); ++i)
        cauchy = std::max(cauchy, std::abs(p.coeffs()[static_cast<std::size_t>(i)].get_d()));
    cauchy = 1.0 + cauchy / std::abs(p.leading().get_d());
    return maxc * std::max(1.0, cauchy);
}

double abs_eval(const IntPolynomial& p, std::complex<double> z) {
    double scale;
    const std::vector<double> c = to_scaled_doubles(p, scale);
    return std::abs(horner(c, z)) * scale;
}

}  // namespace

std::vector<std::complex<double>> complex_roots(const IntPolynomial& p, double tol, int max_iter) {
    if (p.degree() < 1) throw DomainError("complex_roots: polynomial must be nonconstant");

    // Exact multiplicity split first; Aberth then only ever sees simple
    // roots, which keeps repeated classes at full accuracy.
    std::vector<std::complex<double>> roots;
    for (const PolyFactor& part : squarefree_decomposition(p)) {
        const std::vector<std::complex<double>> zs = aberth(part.factor, max_iter);
        for (const std::complex<double>& z : zs)
            for (unsigned m = 0; m < part.multiplicity; ++m) roots.push_back(z);
    }

    const double scale = residual_scale(p);
    double worst = 0.0;
    for (const std::complex<double>& z : roots) worst = std::max(worst, abs_eval(p, z));
    if (worst > tol * scale)
        throw NumericalFailure("complex_roots: residual above tolerance", worst / scale);
    return roots;
}

SatakeParameter satake_parameter(const WeilPolynomial& w, double tol) {
    const unsigned g = w.g();
    const double sqrt_q = std::sqrt(w.q().get_d());
    std::vector<std::complex<double>> roots = complex_roots(w.polynomial(), tol);

    // Classify unitary-normalized roots by angle; theta in {0, 1/2} pairs
    // self-conjugate real roots (even multiplicity by validation).
    std::vector<std::complex<double>> pos, neg;  // Im > 0 / Im < 0
    int real_pos = 0, real_neg = 0;
    std::vector<std::complex<double>> real_pos_roots, real_neg_roots;
    for (const std::complex<double>& tau : roots) {
        const std::complex<double> u = tau / sqrt_q;
        double theta = std::atan2(std::abs(u.imag()), u.real()) / kTwoPi;
        if (theta < tol) {
            ++real_pos;
            real_pos_roots.push_back(tau);
        } else if (0.5 - theta < tol) {
            ++real_neg;
            real_neg_roots.push_back(tau);
        } else if (u.imag() > 0) {
            pos.push_back(tau);
        } else {
            neg.push_back(tau);
        }
    }
    if (real_pos % 2 != 0 || real_neg % 2 != 0 || pos.size() != neg.size())
        throw NumericalFailure("satake_parameter: roots do not pair under conjugation");

    // Deterministic order, then greedy conjugate matching.
    auto by_re_im = [](const std::complex<double>& a, const std::complex<double>& b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    };
    std::sort(pos.begin(), pos.end(), by_re_im);

    struct Pair {
        double theta;
        std::complex<double> tau, partner;
    };
    std::vector<Pair> pairs;
    pairs.reserve(g);
    std::vector<bool> used(neg.size(), false);
    const double match_tol = std::sqrt(tol) * (1.0 + sqrt_q);
    for (const std::complex<double>& tau : pos) {
        const std::complex<double> want = std::conj(tau);
        std::size_t best = neg.size();
        double best_dist = match_tol;
        for (std::size_t i = 0; i < neg.size(); ++i) {
            if (used[i]) continue;
            const double d = std::abs(neg[i] - want);
            if (d < best_dist) {
                best_dist = d;
                best = i;
            }
        }
        if (best == neg.size())
            throw NumericalFailure("satake_parameter: conjugate partner not found");
        used[best] = true;
        const double theta = std::atan2(tau.imag(), tau.real()) / kTwoPi;
        pairs.push_back({theta, tau, neg[best]});
    }
    for (int i = 0; i + 1 < real_pos; i += 2)
        pairs.push_back({0.0, real_pos_roots[static_cast<std::size_t>(i)],
                         real_pos_roots[static_cast<std::size_t>(i + 1)]});
    for (int i = 0; i + 1 < real_neg; i += 2)
        pairs.push_back({0.5, real_neg_roots[static_cast<std::size_t>(i)],
                         real_neg_roots[static_cast<std::size_t>(i + 1)]});
    if (pairs.size() != g)
        throw NumericalFailure("satake_parameter: wrong number of root pairs");

    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Pair& a, const Pair& b) { return a.theta > b.theta; });

    SatakeParameter sp;
    sp.g = g;
    sp.q = w.q();
    sp.similitude_angle = 0.0;
    sp.angles.reserve(g);
    sp.roots.resize(2 * static_cast<std::size_t>(g));
    for (unsigned j = 0; j < g; ++j) {
        sp.angles.push_back(pairs[j].theta);
        sp.roots[j] = pairs[j].tau;
        sp.roots[g + j] = pairs[j].partner;
    }

    double max_coeff = 0.0;
    for (const Int& c : w.polynomial().coeffs())
        max_coeff = std::max(max_coeff, std::abs(c.get_d()));
    double worst = 0.0;
    const double q_d = w.q().get_d();
    for (unsigned j = 0; j < g; ++j) {
        worst = std::max(worst, abs_eval(w.polynomial(), sp.roots[j]));
        worst = std::max(worst, abs_eval(w.polynomial(), sp.roots[g + j]));
        // Pairing and modulus invariants.
        if (std::abs(sp.roots[j] * sp.roots[g + j] - q_d) > tol * q_d)
            throw NumericalFailure("satake_parameter: pairing tau * partner != q");
        if (std::abs(std::abs(sp.roots[j]) - sqrt_q) > tol * sqrt_q)
            throw NumericalFailure("satake_parameter: root modulus off sqrt(q)");
    }
    sp.residual = worst / max_coeff;
    return sp;
}

std::vector<std::complex<double>> similitude_char_poly(const SatakeParameter& sp) {
    std::vector<std::complex<double>> coeffs{1.0};
    auto multiply_root = [&coeffs](std::complex<double> root) {
        coeffs.insert(coeffs.begin(), 0.0);
        for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) coeffs[i] -= root * coeffs[i + 1];
    };
    const std::complex<double> t0 = std::polar(1.0, kTwoPi * sp.similitude_angle);
    for (double theta : sp.angles) multiply_root(std::polar(1.0, kTwoPi * theta));
    for (double theta : sp.angles) multiply_root(t0 * std::polar(1.0, -kTwoPi * theta));
    return coeffs;
}

ComponentGroupResult component_group_exact(const WeilPolynomial& w) {
    ComponentGroupResult res;
    res.route = ComponentGroupRoute::exact;
    res.order = is_even(w) ? 2 : 1;
    return res;
}

namespace {

std::vector<AnglePairing> pairing_witness(const std::vector<double>& y) {
    std::vector<AnglePairing> wit;
    const std::size_t g = y.size();
    for (std::size_t j = 0; j < g; ++j)
        wit.push_back({static_cast<unsigned>(j + 1), static_cast<unsigned>(g - j),
                       y[j] + y[g - 1 - j]});
    return wit;
}

}  // namespace

ComponentGroupResult component_group_alcove(const WeilPolynomial& w, double tol) {
    const SatakeParameter sp = satake_parameter(w, tol);
    const SpinRootDatum dat = SpinRootDatum::build(w.g());
    const AlcovePoint pt = alcove_reduce(sp.angles, tol);
    ComponentGroupResult res;
    res.route = ComponentGroupRoute::alcove;
    if (omega_fixed(dat, pt, tol)) {
        res.order = 2;
        res.witness = pairing_witness(pt.y);
    } else {
        res.order = 1;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Brute-force Knapp-Stein route
// ---------------------------------------------------------------------------

namespace {

// Signed permutation w: w(y)_i = sign[i] * y[perm[i]]. Encoded in 32 bits
// for set membership (g <= 7).
struct SignedPerm {
    std::array<std::uint8_t, 8> perm{};
    std::array<std::int8_t, 8> sign{};
    unsigned g = 0;

    std::uint32_t encode() const {
        std::uint32_t code = 0;
        for (unsigned i = 0; i < g; ++i)
            code |= static_cast<std::uint32_t>((perm[i] << 1) | (sign[i] < 0 ? 1u : 0u))
                    << (4 * i);
        return code;
    }

    SignedPerm compose(const SignedPerm& rhs) const {  // this ∘ rhs
        SignedPerm out;
        out.g = g;
        for (unsigned i = 0; i < g; ++i) {
            out.perm[i] = rhs.perm[perm[i]];
            out.sign[i] = static_cast<std::int8_t>(sign[i] * rhs.sign[perm[i]]);
        }
        return out;
    }
};

std::vector<SignedPerm> enumerate_weyl(unsigned g) {
    std::vector<std::uint8_t> base(g);
    for (unsigned i = 0; i < g; ++i) base[i] = static_cast<std::uint8_t>(i);
    std::vector<SignedPerm> out;
    do {
        for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
            SignedPerm w;
            w.g = g;
            for (unsigned i = 0; i < g; ++i) {
                w.perm[i] = base[i];
                w.sign[i] = (mask >> i) & 1u ? -1 : 1;
            }
            out.push_back(w);
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

// Lattice ker(exp to the adjoint torus) = Z^g  union  (1/2,...,1/2) + Z^g.
bool in_adjoint_kernel(const std::vector<double>& d, double tol) {
    bool all_int = true, all_half = true;
    for (double x : d) {
        const double fi = x - std::round(x);
        if (std::abs(fi) >= tol) all_int = false;
        const double fh = (x - 0.5) - std::round(x - 0.5);
        if (std::abs(fh) >= tol) all_half = false;
        if (!all_int && !all_half) return false;
    }
    return all_int || all_half;
}

// Type C_g roots in f-coordinates: +-2 f_k and +-f_i +- f_j (i < j).
struct CRoot {
    std::array<std::int8_t, 8> v{};
    unsigned g = 0;

    std::uint32_t encode() const {
        std::uint32_t code = 0;
        for (unsigned i = 0; i < g; ++i)
            code |= static_cast<std::uint32_t>((v[i] + 2) & 0x7) << (3 * i);
        return code;
    }
};

std::vector<CRoot> c_roots(unsigned g) {
    std::vector<CRoot> out;
    for (unsigned k = 0; k < g; ++k)
        for (int s : {2, -2}) {
            CRoot r;
            r.g = g;
            r.v[k] = static_cast<std::int8_t>(s);
            out.push_back(r);
        }
    for (unsigned i = 0; i < g; ++i)
        for (unsigned j = i + 1; j < g; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    CRoot r;
                    r.g = g;
                    r.v[i] = static_cast<std::int8_t>(si);
                    r.v[j] = static_cast<std::int8_t>(sj);
                    out.push_back(r);
                }
    return out;
}

CRoot act(const SignedPerm& w, const CRoot& r) {
    // (w r)_i = sign[i] * r_{perm[i]}: the coordinate action matching
    // w(y)_i = sign[i] y_{perm[i]} on pairing values.
    CRoot out;
    out.g = r.g;
    for (unsigned i = 0; i < r.g; ++i)
        out.v[i] = static_cast<std::int8_t>(w.sign[i] * r.v[w.perm[i]]);
    return out;
}

bool is_positive(const CRoot& r) {
    for (unsigned i = 0; i < r.g; ++i) {
        if (r.v[i] > 0) return true;
        if (r.v[i] < 0) return false;
    }
    return false;
}

// Reflection in the C-root r as a signed permutation.
SignedPerm reflection(const CRoot& r, unsigned g) {
    SignedPerm w;
    w.g = g;
    for (unsigned i = 0; i < g; ++i) {
        w.perm[i] = static_cast<std::uint8_t>(i);
        w.sign[i] = 1;
    }
    int i = -1, j = -1;
    for (unsigned k = 0; k < g; ++k) {
        if (r.v[k] == 0) continue;
        if (i < 0) i = static_cast<int>(k);
        else j = static_cast<int>(k);
    }
    if (j < 0) {
        w.sign[i] = -1;  // +-2 f_i: sign flip
    } else if (r.v[i] * r.v[j] < 0) {
        std::swap(w.perm[i], w.perm[j]);  // f_i - f_j: transposition
    } else {
        std::swap(w.perm[i], w.perm[j]);  // f_i + f_j: transposition with flips
        w.sign[i] = -1;
        w.sign[j] = -1;
    }
    return w;
}

std::size_t subgroup_order(const std::vector<SignedPerm>& generators, unsigned g) {
    SignedPerm id;
    id.g = g;
    for (unsigned i = 0; i < g; ++i) {
        id.perm[i] = static_cast<std::uint8_t>(i);
        id.sign[i] = 1;
    }
    std::unordered_set<std::uint32_t> seen{id.encode()};
    std::vector<SignedPerm> frontier{id};
    while (!frontier.empty()) {
        std::vector<SignedPerm> next;
        for (const SignedPerm& w : frontier)
            for (const SignedPerm& gen : generators) {
                const SignedPerm prod = w.compose(gen);
                if (seen.insert(prod.encode()).second) next.push_back(prod);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace

BruteForceDiagnostics component_group_brute_diagnostics(const WeilPolynomial& w, double tol) {
    const unsigned g = w.g();
    if (g > 7) throw RankTooLarge("component_group_brute: rank above enumeration budget (g <= 7)");

    const SatakeParameter sp = satake_parameter(w, tol);
    const std::vector<double>& y = sp.angles;

    BruteForceDiagnostics diag;
    const std::vector<SignedPerm> weyl = enumerate_weyl(g);
    diag.weyl_order = weyl.size();

    // W_sigma: stabilizer of exp(y) in the adjoint torus, i.e. w(y) = y
    // modulo Z^g + Z (1/2,...,1/2).
    std::vector<SignedPerm> stabilizer;
    std::vector<double> d(g);
    for (const SignedPerm& perm : weyl) {
        for (unsigned i = 0; i < g; ++i)
            d[i] = perm.sign[i] * y[perm.perm[i]] - y[i];
        if (in_adjoint_kernel(d, tol)) stabilizer.push_back(perm);
    }
    diag.stabilizer_order = stabilizer.size();

    // R_sigma: C-roots with integral pairing against y.
    std::vector<CRoot> integral;
    for (const CRoot& r : c_roots(g)) {
        double pairing = 0.0;
        for (unsigned i = 0; i < g; ++i) pairing += r.v[i] * y[i];
        const double frac = pairing - std::round(pairing);
        if (std::abs(frac) < tol) integral.push_back(r);
    }
    diag.integral_coroots = integral.size();

    // W(R_sigma): reflection subgroup generated by the integral roots.
    std::vector<SignedPerm> gens;
    for (const CRoot& r : integral)
        if (is_positive(r)) gens.push_back(reflection(r, g));
    diag.reflection_subgroup_order = gens.empty() ? 1 : subgroup_order(gens, g);

    if (diag.stabilizer_order % diag.reflection_subgroup_order != 0)
        throw InternalContradiction(
            "component_group_brute: reflection subgroup does not divide the stabilizer");
    diag.order = static_cast<int>(diag.stabilizer_order / diag.reflection_subgroup_order);

    // Elementwise realization: elements of W_sigma permuting the positive
    // system of R_sigma; complements W(R_sigma) inside W_sigma.
    std::unordered_set<std::uint32_t> positive_codes;
    for (const CRoot& r : integral)
        if (is_positive(r)) positive_codes.insert(r.encode());
    std::size_t preservers = 0;
    for (const SignedPerm& perm : stabilizer) {
        bool preserves = true;
        for (const CRoot& r : integral) {
            if (!is_positive(r)) continue;
            if (!positive_codes.count(act(perm, r).encode())) {
                preserves = false;
                break;
            }
        }
        if (preserves) ++preservers;
    }
    diag.r_group_elementwise_order = preservers;

    if (diag.stabilizer_order != diag.reflection_subgroup_order * static_cast<std::size_t>(diag.order))
        throw InternalContradiction("component_group_brute: exact sequence order mismatch");
    return diag;
}

ComponentGroupResult component_group_brute(const WeilPolynomial& w, double tol) {
    const BruteForceDiagnostics diag = component_group_brute_diagnostics(w, tol);
    ComponentGroupResult res;
    res.route = ComponentGroupRoute::brute;
    res.order = diag.order;
    if (res.order == 2) {
        const SatakeParameter sp = satake_parameter(w, tol);
        const AlcovePoint pt = alcove_reduce(sp.angles, tol);
        res.witness = pairing_witness(pt.y);
    }
    return res;
}

}  // namespace spinpacket
