// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef SPINPACKET_LPACKET_HPP
#define SPINPACKET_LPACKET_HPP

#include <optional>
#include <string>
#include <vector>

#include "spinpacket/satake.hpp"
#include "spinpacket/weil.hpp"

namespace spinpacket {

/// Verdicts of the independent component-group routes. The exact route is
/// authoritative; floats never override integer arithmetic.
struct RouteVerdicts {
    int exact = 1;
    std::optional<int> alcove;   // unset on numerical failure
    std::optional<int> brute;    // unset for g > 7 or numerical failure
    bool agree = true;
    std::string diagnostic;      // nonempty when agree is false or a route degraded
};

struct PacketReport {
    IntPolynomial p;
    Int q;
    unsigned g = 0;

    IsogenyClassInvariants invariants;

    // Satake summary; satake_ok false when the root finder failed, in which
    // case angles/residual are absent and only exact-route fields hold.
    bool satake_ok = false;
    std::vector<double> angles;
    double residual = 0.0;

    int r_group_order = 1;            // 1 or 2, from the exact route
    int restriction_components = 1;   // = r_group_order
    int packet_size_gspin = 1;        // always 1
    int packet_size_spin = 1;         // = r_group_order

    std::vector<Int> euler_denominator;  // coefficients in u = q^{-s}

    RouteVerdicts notes;
    bool good_reduction_assumed = true;  // input assumption, recorded
};

/// Coefficients of u^{2g} P(1/u) in u = q^{-s} (constant term 1): the
/// denominator of the local L-factor 1 / (that polynomial at q^{-s}).
std::vector<Int> euler_factor(const WeilPolynomial& w);

/// Full per-class report: invariants, Satake data, all applicable
/// component-group routes with agreement check, and packet sizes.
PacketReport analyze(const WeilPolynomial& w, double tol = kDefaultTol);

}  // namespace spinpacket

#endif  // SPINPACKET_LPACKET_HPP
