// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef SPINPACKET_SATAKE_HPP
#define SPINPACKET_SATAKE_HPP

#include <complex>
#include <optional>
#include <vector>

#include "spinpacket/rootdata.hpp"
#include "spinpacket/weil.hpp"

namespace spinpacket {

/// Frobenius eigenvalue angles of a Weil polynomial: roots labeled so that
/// tau_{g+j} = q / tau_j and tau_j = sqrt(q) e^{2 pi i theta_j} with
/// theta_1 >= ... >= theta_g, each theta in [0, 1/2].
struct SatakeParameter {
    unsigned g = 0;
    Int q;
    std::vector<double> angles;       // theta_1..theta_g, descending
    double similitude_angle = 0.0;    // theta_0
    // 2g roots; roots[g+j] is the partner of roots[j] (product q).
    std::vector<std::complex<double>> roots;
    double residual = 0.0;            // max |P(tau)| / coefficient scale
};

enum class ComponentGroupRoute { exact, alcove, brute };

struct AnglePairing {
    unsigned j = 0;      // 1-based
    unsigned partner = 0;  // g - j + 1
    double sum = 0.0;    // y_j + y_{g-j+1}, approx 1/2
};

struct ComponentGroupResult {
    int order = 1;  // 1 or 2
    ComponentGroupRoute route = ComponentGroupRoute::exact;
    // Fixed-point certificate when order == 2 on a numeric route.
    std::optional<std::vector<AnglePairing>> witness;
};

/// All deg(P) complex roots with multiplicity, residual-checked.
/// Aberth-Ehrlich simultaneous iteration on each squarefree factor,
/// deterministic initialization on the Cauchy-bound circle.
std::vector<std::complex<double>> complex_roots(const IntPolynomial& p,
                                                double tol = 1e-9,
                                                int max_iter = 200);

SatakeParameter satake_parameter(const WeilPolynomial& w, double tol = kDefaultTol);

/// Coefficients (low-to-high) of prod (T - t_j) prod (T - t_0 t_j^{-1})
/// with t_j = e^{2 pi i theta_j}, t_0 = 1: the characteristic polynomial of
/// the unitary-normalized Satake parameter in the 2g-dimensional
/// representation.
std::vector<std::complex<double>> similitude_char_poly(const SatakeParameter& sp);

/// Component group order by the exact coefficient test: 2 iff P is even.
ComponentGroupResult component_group_exact(const WeilPolynomial& w);

/// Component group order via alcove reduction and the fixed-point test for
/// the nontrivial alcove automorphism.
ComponentGroupResult component_group_alcove(const WeilPolynomial& w,
                                            double tol = kDefaultTol);

/// Component group order by brute-force Knapp-Stein enumeration of the
/// Weyl group of type B_g/C_g (signed permutations). Requires g <= 7.
ComponentGroupResult component_group_brute(const WeilPolynomial& w,
                                           double tol = kDefaultTol);

/// Full brute-force data, for cross-checking the exact sequence
/// 1 -> W_sigma^o -> W_sigma -> R(sigma) -> 1.
struct BruteForceDiagnostics {
    std::size_t weyl_order = 0;               // |W| = 2^g g!
    std::size_t stabilizer_order = 0;         // |W_sigma|
    std::size_t reflection_subgroup_order = 0;  // |W(R_sigma)|
    std::size_t integral_coroots = 0;         // |R_sigma|
    // |{w in W_sigma : w permutes the positive system of R_sigma}|,
    // the elementwise realization of R(sigma).
    std::size_t r_group_elementwise_order = 0;
    int order = 1;  // |W_sigma| / |W(R_sigma)|
};

BruteForceDiagnostics component_group_brute_diagnostics(const WeilPolynomial& w,
                                                        double tol = kDefaultTol);

}  // namespace spinpacket

#endif  // SPINPACKET_SATAKE_HPP
