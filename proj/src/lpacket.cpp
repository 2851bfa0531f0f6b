// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "spinpacket/lpacket.hpp"

#include <sstream>

namespace spinpacket {

std::vector<Int> euler_factor(const WeilPolynomial& w) {
    // Reversed coefficient list: u^{2g} P(1/u) in u = q^{-s}; constant 1.
    const auto& c = w.polynomial().coeffs();
    return std::vector<Int>(c.rbegin(), c.rend());
}

PacketReport analyze(const WeilPolynomial& w, double tol) {
    PacketReport rep;
    rep.p = w.polynomial();
    rep.q = w.q();
    rep.g = w.g();
    rep.invariants = invariants(w);
    rep.euler_denominator = euler_factor(w);

    const ComponentGroupResult exact = component_group_exact(w);
    rep.notes.exact = exact.order;

    std::ostringstream diag;
    try {
        const SatakeParameter sp = satake_parameter(w, tol);
        rep.satake_ok = true;
        rep.angles = sp.angles;
        rep.residual = sp.residual;
        rep.notes.alcove = component_group_alcove(w, tol).order;
    } catch (const NumericalFailure& e) {
        rep.satake_ok = false;
        diag << "satake degraded: " << e.what() << "; ";
    }
    if (rep.satake_ok && w.g() <= 7) {
        try {
            rep.notes.brute = component_group_brute(w, tol).order;
        } catch (const NumericalFailure& e) {
            diag << "brute degraded: " << e.what() << "; ";
        }
    } else if (w.g() > 7) {
        diag << "brute skipped for g > 7; ";
    }

    rep.notes.agree = (!rep.notes.alcove || *rep.notes.alcove == rep.notes.exact) &&
                      (!rep.notes.brute || *rep.notes.brute == rep.notes.exact);
    if (!rep.notes.agree) diag << "component-group routes disagree; exact route is authoritative; ";
    rep.notes.diagnostic = diag.str();

    // The exact route is authoritative for every packet-level field.
    rep.r_group_order = rep.notes.exact;
    rep.restriction_components = rep.r_group_order;
    rep.packet_size_gspin = 1;
    rep.packet_size_spin = rep.r_group_order;
    rep.good_reduction_assumed = true;
    return rep;
}

}  // namespace spinpacket
