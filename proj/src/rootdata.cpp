// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "spinpacket/rootdata.hpp"

#include <algorithm>
#include <cmath>

#include "spinpacket/errors.hpp"

namespace spinpacket {

SpinRootDatum SpinRootDatum::build(unsigned g) {
    if (g == 0) throw DomainError("SpinRootDatum: rank must be positive");

    SpinRootDatum dat;
    dat.g = g;

    dat.simple_roots_B.assign(g, std::vector<int>(g, 0));
    dat.simple_coroots_C.assign(g, std::vector<int>(g, 0));
    for (unsigned i = 0; i + 1 < g; ++i) {
        dat.simple_roots_B[i][i] = 1;
        dat.simple_roots_B[i][i + 1] = -1;
        dat.simple_coroots_C[i][i] = 1;
        dat.simple_coroots_C[i][i + 1] = -1;
    }
    dat.simple_roots_B[g - 1][g - 1] = 1;   // alpha_g = e_g
    dat.simple_coroots_C[g - 1][g - 1] = 2;  // coroot_g = 2 f_g

    dat.highest_coroot.assign(g, 0);
    dat.highest_coroot[0] = 2;  // 2 f_1

    dat.marks.assign(g + 1, 2);
    dat.marks.front() = 1;
    dat.marks.back() = 1;

    // Dual basis to the simple coroots: weight_j = e_1+..+e_j for j < g,
    // weight_g = (e_1+..+e_g)/2 (the spin weight).
    dat.fundamental_weights.assign(g, std::vector<Rat>(g, Rat(0)));
    for (unsigned j = 0; j < g; ++j) {
        const Rat entry = (j + 1 == g) ? Rat(1, 2) : Rat(1);
        for (unsigned i = 0; i <= j; ++i) dat.fundamental_weights[j][i] = entry;
    }

    dat.alcove_vertices.assign(g + 1, std::vector<Rat>(g, Rat(0)));
    for (unsigned j = 1; j <= g; ++j) {
        const Rat inv_mark(1, dat.marks[j]);
        for (unsigned i = 0; i < g; ++i)
            dat.alcove_vertices[j][i] = dat.fundamental_weights[j - 1][i] * inv_mark;
    }

    dat.hyperspecial.assign(g + 1, false);
    for (unsigned j = 0; j <= g; ++j) dat.hyperspecial[j] = (dat.marks[j] == 1);

    // Construction invariants: pairing identity, highest coroot expansion,
    // exactly two hyperspecial vertices.
    for (unsigned i = 0; i < g; ++i) {
        for (unsigned j = 0; j < g; ++j) {
            Rat pairing(0);
            for (unsigned k = 0; k < g; ++k)
                pairing += Rat(dat.simple_coroots_C[i][k]) * dat.fundamental_weights[j][k];
            if (pairing != (i == j ? Rat(1) : Rat(0)))
                throw InternalContradiction("SpinRootDatum: weight/coroot pairing is not dual");
        }
    }
    for (unsigned k = 0; k < g; ++k) {
        int sum = 0;
        for (unsigned j = 0; j < g; ++j) sum += dat.marks[j + 1] * dat.simple_coroots_C[j][k];
        if (sum != dat.highest_coroot[k])
            throw InternalContradiction("SpinRootDatum: marks do not expand the highest coroot");
    }
    if (std::count(dat.hyperspecial.begin(), dat.hyperspecial.end(), true) != 2)
        throw InternalContradiction("SpinRootDatum: expected exactly two hyperspecial vertices");

    return dat;
}

bool AlcovePoint::in_closed_alcove() const {
    double prev = 0.5;
    for (double v : y) {
        if (v > prev + tolerance || v < -tolerance) return false;
        prev = v;
    }
    return true;
}

AlcovePoint alcove_reduce(std::span<const double> raw, double tol) {
    AlcovePoint pt;
    pt.tolerance = tol;
    pt.y.reserve(raw.size());
    for (double v : raw) {
        if (!std::isfinite(v)) throw DomainError("alcove_reduce: non-finite coordinate");
        double r = v - std::floor(v);  // into [0, 1)
        if (r >= 1.0) r = 0.0;         // guard against floor rounding at the seam
        if (r > 0.5) r = 1.0 - r;      // Weyl flip composed with a translation
        pt.y.push_back(r);
    }
    std::sort(pt.y.begin(), pt.y.end(), std::greater<double>());
    return pt;
}

AlcovePoint omega_rho(const SpinRootDatum& dat, const AlcovePoint& pt) {
    if (pt.y.size() != dat.g)
        throw DomainError("omega_rho: point rank does not match datum");
    if (!pt.in_closed_alcove())
        throw DomainError("omega_rho: point outside the closed alcove");
    AlcovePoint out;
    out.tolerance = pt.tolerance;
    out.y.resize(pt.y.size());
    const std::size_t g = pt.y.size();
    for (std::size_t j = 0; j < g; ++j) out.y[j] = 0.5 - pt.y[g - 1 - j];
    return out;
}

bool omega_fixed(const SpinRootDatum& dat, const AlcovePoint& pt, double tol) {
    if (pt.y.size() != dat.g)
        throw DomainError("omega_fixed: point rank does not match datum");
    const std::size_t g = pt.y.size();
    for (std::size_t j = 0; j < g; ++j)
        if (std::abs(pt.y[j] + pt.y[g - 1 - j] - 0.5) >= tol) return false;
    return true;
}

}  // namespace spinpacket
