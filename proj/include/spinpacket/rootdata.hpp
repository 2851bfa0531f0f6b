// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef SPINPACKET_ROOTDATA_HPP
#define SPINPACKET_ROOTDATA_HPP

#include <span>
#include <vector>

#include "spinpacket/polycore.hpp"

namespace spinpacket {

inline constexpr double kDefaultTol = 1e-9;

/// Based root datum for GSpin_{2g+1} / Spin_{2g+1} (type B_g) and its dual
/// GSp_{2g} / PGSp_{2g} (type C_g), together with the fundamental alcove of
/// the extended affine Weyl group acting on X*(T_der) (x) R.
///
/// Integer vectors are coordinates in the e-basis (characters) or the
/// f-basis (cocharacters); exact rationals are used where half-integral
/// entries occur (the spin weight).
struct SpinRootDatum {
    unsigned g = 0;
    // alpha_1 = e1-e2, ..., alpha_{g-1} = e_{g-1}-e_g, alpha_g = e_g.
    std::vector<std::vector<int>> simple_roots_B;
    // coroots, f-coordinates: f1-f2, ..., f_{g-1}-f_g, 2f_g.
    std::vector<std::vector<int>> simple_coroots_C;
    std::vector<int> highest_coroot;  // 2 f_1
    // b_0..b_g = (1, 2, ..., 2, 1); highest_coroot = sum b_j coroot_j, j>=1.
    std::vector<int> marks;
    // Weights dual to the simple coroots: <coroot_i, weight_j> = delta_ij.
    // weight_j = e_1+...+e_j for j < g; weight_g = (e_1+...+e_g)/2.
    std::vector<std::vector<Rat>> fundamental_weights;
    // v_j = weight_j / b_j, v_0 = 0; the closed alcove is their convex hull.
    std::vector<std::vector<Rat>> alcove_vertices;
    // Exactly two vertices are hyperspecial: those with mark 1 (v_0, v_g).
    std::vector<bool> hyperspecial;

    static SpinRootDatum build(unsigned g);
};

/// A point of the closed fundamental alcove in character values
/// y_j = <f_j, v>:  1/2 >= y_1 >= ... >= y_g >= 0.
struct AlcovePoint {
    std::vector<double> y;
    double tolerance = kDefaultTol;

    bool in_closed_alcove() const;
};

/// Unique closed-alcove representative of the affine-Weyl orbit of raw:
/// reduce mod 1, fold y -> 1-y above 1/2, sort descending.
AlcovePoint alcove_reduce(std::span<const double> raw, double tol = kDefaultTol);

/// The nontrivial alcove automorphism (weight_j -> weight_{g-j}); in
/// coordinates (1/2 - y_g, ..., 1/2 - y_1). An involution preserving the
/// closed alcove.
AlcovePoint omega_rho(const SpinRootDatum& dat, const AlcovePoint& pt);

/// True iff pt is fixed by omega_rho within tol, i.e. y_j + y_{g-j+1} = 1/2
/// for all j.
bool omega_fixed(const SpinRootDatum& dat, const AlcovePoint& pt, double tol = kDefaultTol);

}  // namespace spinpacket

#endif  // SPINPACKET_ROOTDATA_HPP
