// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <cmath>
#include <complex>

#include "spinpacket/io.hpp"
#include "spinpacket/lpacket.hpp"

using namespace spinpacket;

namespace {

WeilPolynomial make(std::initializer_list<long> coeffs, long q) {
    return WeilPolynomial::validate(IntPolynomial(coeffs), Int(q));
}

std::vector<WeilPolynomial> mixed_corpus() {
    std::vector<WeilPolynomial> ws;
    for (long q : {3L, 5L, 9L}) {
        for (unsigned g = 1; g <= 3; ++g) {
            for (const InputRecord& rec : generate_corpus(Int(q), g, 10, 404)) {
                ws.push_back(WeilPolynomial::validate(
                    IntPolynomial(std::vector<Int>(rec.coeffs)), rec.q));
            }
        }
    }
    return ws;
}

}  // namespace

TEST_CASE("euler_factor: stated examples") {
    CHECK(euler_factor(make({3, -1, 1}, 3)) == std::vector<Int>{1, -1, 3});
    CHECK(euler_factor(make({7, 0, 1}, 7)) == std::vector<Int>{1, 0, 7});
}

TEST_CASE("euler_factor: involution, trace, numeric product") {
    for (const WeilPolynomial& w : mixed_corpus()) {
        const std::vector<Int> e = euler_factor(w);
        CHECK(e.size() == 2 * w.g() + 1);
        CHECK(e.front() == 1);

        // Reversal of the reversal returns P.
        const IntPolynomial back = IntPolynomial(std::vector<Int>(e)).reverse();
        CHECK(back == w.polynomial());

        // Coefficient at u^1 is minus the Frobenius trace.
        Int trace = -w.polynomial().coeff(2 * w.g() - 1);
        CHECK(e[1] == -trace);

        // Numeric check at s = 2: prod (1 - tau_i q^-2) matches the exact
        // polynomial evaluated at u = q^-2.
        const SatakeParameter sp = satake_parameter(w);
        const double qs = std::pow(w.q().get_d(), -2.0);
        std::complex<double> prod = 1.0;
        for (const auto& tau : sp.roots) prod *= (1.0 - tau * qs);
        const Rat exact = IntPolynomial(std::vector<Int>(e)).evaluate(
            Rat(1) / Rat(w.q() * w.q()));
        CHECK(std::abs(prod - exact.get_d()) < 1e-9);
    }
}

TEST_CASE("analyze: supersingular example") {
    const PacketReport rep = analyze(make({7, 0, 1}, 7));
    CHECK(rep.invariants.is_even);
    CHECK(rep.packet_size_spin == 2);
    CHECK(rep.packet_size_gspin == 1);
    CHECK(rep.restriction_components == 2);
    CHECK(rep.invariants.center_dim == 2);
    CHECK(rep.invariants.center_dim_quadratic == 1);
    CHECK(rep.notes.agree);
    REQUIRE(rep.notes.alcove.has_value());
    REQUIRE(rep.notes.brute.has_value());
    CHECK(*rep.notes.alcove == 2);
    CHECK(*rep.notes.brute == 2);
    CHECK(rep.good_reduction_assumed);
}

TEST_CASE("analyze: ordinary example") {
    const PacketReport rep = analyze(make({3, -1, 1}, 3));
    CHECK_FALSE(rep.invariants.is_even);
    CHECK(rep.packet_size_spin == 1);
    CHECK(rep.packet_size_gspin == 1);
    CHECK(rep.restriction_components == 1);
    CHECK(rep.notes.agree);
}

TEST_CASE("analyze: non-isotypic dimension-criterion example") {
    const IntPolynomial a{3, -1, 1}, b{3, 1, 1};
    const PacketReport rep = analyze(WeilPolynomial::validate(a.pow(2) * b, 3));
    CHECK_FALSE(rep.invariants.is_even);
    CHECK_FALSE(rep.invariants.is_isotypic);
    CHECK(rep.invariants.center_dim == 4);
    CHECK(rep.invariants.center_dim_quadratic == 2);
    CHECK(rep.packet_size_spin == 1);
    CHECK(rep.notes.agree);
}

TEST_CASE("analyze: report invariants and twist invariance on the corpus") {
    for (const WeilPolynomial& w : mixed_corpus()) {
        const PacketReport rep = analyze(w);
        CHECK(rep.restriction_components == rep.r_group_order);
        CHECK(rep.packet_size_spin == rep.r_group_order);
        CHECK(rep.packet_size_gspin == 1);
        CHECK((rep.r_group_order == 2) == rep.invariants.is_even);
        CHECK((rep.packet_size_spin == 1 || rep.packet_size_spin == 2));
        CHECK(rep.notes.agree);

        const PacketReport twisted = analyze(quadratic_twist(w));
        CHECK(twisted.r_group_order == rep.r_group_order);
        CHECK(twisted.packet_size_spin == rep.packet_size_spin);
    }
}

TEST_CASE("analyze: degraded report when the numeric routes cannot meet tolerance") {
    // An impossible tolerance forces NumericalFailure out of the root
    // finder; the exact-route fields must still be filled and authoritative.
    const PacketReport rep = analyze(make({7, 0, 1}, 7), 1e-300);
    CHECK_FALSE(rep.satake_ok);
    CHECK_FALSE(rep.notes.alcove.has_value());
    CHECK_FALSE(rep.notes.brute.has_value());
    CHECK(rep.notes.exact == 2);
    CHECK(rep.r_group_order == 2);
    CHECK(rep.packet_size_spin == 2);
    CHECK(rep.invariants.is_even);
    CHECK(rep.notes.agree);  // no disagreeing route survived
    CHECK(rep.notes.diagnostic.find("degraded") != std::string::npos);
}

TEST_CASE("analyze: brute route is skipped above the rank budget") {
    IntPolynomial p{1};
    for (int i = 0; i < 8; ++i) p = p * IntPolynomial{3, -1, 1};
    const PacketReport rep = analyze(WeilPolynomial::validate(p, 3));
    CHECK(rep.satake_ok);
    CHECK_FALSE(rep.notes.brute.has_value());
    REQUIRE(rep.notes.alcove.has_value());
    CHECK(rep.notes.agree);
    CHECK(rep.notes.diagnostic.find("g > 7") != std::string::npos);
}
