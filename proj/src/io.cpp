// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "spinpacket/io.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "spinpacket/errors.hpp"

namespace spinpacket {

namespace {

using nlohmann::json;

json int_to_json(const Int& v) {
    // Within long range keep native JSON integers; fall back to strings.
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw DomainError("expected integer or integer string in JSON input");
}

json coeffs_to_json(const std::vector<Int>& coeffs) {
    json arr = json::array();
    for (const Int& c : coeffs) arr.push_back(int_to_json(c));
    return arr;
}

std::vector<Int> coeffs_from_json(const json& arr) {
    if (!arr.is_array()) throw DomainError("expected coefficient array");
    std::vector<Int> out;
    out.reserve(arr.size());
    for (const json& v : arr) out.push_back(int_from_json(v));
    return out;
}

// Fixed-width decimal keeps golden files free of float-serialization drift.
std::string angle_to_string(double a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12f", a);
    return std::string(buf);
}

std::string residual_to_string(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", r);
    return std::string(buf);
}

}  // namespace

json input_record_to_json(const InputRecord& rec) {
    json j;
    j["label"] = rec.label;
    j["q"] = int_to_json(rec.q);
    j["coeffs"] = coeffs_to_json(rec.coeffs);
    if (rec.expected_even || rec.expected_spin_packet_size) {
        json exp;
        if (rec.expected_even) exp["even"] = *rec.expected_even;
        if (rec.expected_spin_packet_size) exp["spin_packet_size"] = *rec.expected_spin_packet_size;
        j["expected"] = exp;
    }
    return j;
}

InputRecord input_record_from_json(const json& j) {
    InputRecord rec;
    if (!j.is_object()) throw DomainError("input record must be a JSON object");
    rec.label = j.value("label", std::string{});
    if (!j.contains("q") || !j.contains("coeffs"))
        throw DomainError("input record needs q and coeffs");
    rec.q = int_from_json(j.at("q"));
    rec.coeffs = coeffs_from_json(j.at("coeffs"));
    if (j.contains("expected")) {
        const json& exp = j.at("expected");
        if (exp.contains("even")) rec.expected_even = exp.at("even").get<bool>();
        if (exp.contains("spin_packet_size"))
            rec.expected_spin_packet_size = exp.at("spin_packet_size").get<int>();
    }
    return rec;
}

json report_to_json(const PacketReport& rep) {
    json j;
    j["weil"] = {{"q", int_to_json(rep.q)},
                 {"g", rep.g},
                 {"coeffs", coeffs_to_json(rep.p.coeffs())}};
    j["invariants"] = {
        {"radical", coeffs_to_json(rep.invariants.radical.coeffs())},
        {"center_dim", rep.invariants.center_dim},
        {"is_isotypic", rep.invariants.is_isotypic},
        {"is_even", rep.invariants.is_even},
        {"twist", coeffs_to_json(rep.invariants.twist.coeffs())},
        {"center_dim_quadratic", rep.invariants.center_dim_quadratic},
    };
    json sat;
    sat["ok"] = rep.satake_ok;
    if (rep.satake_ok) {
        json angles = json::array();
        for (double a : rep.angles) angles.push_back(angle_to_string(a));
        sat["angles"] = angles;
        sat["residual"] = residual_to_string(rep.residual);
    }
    j["satake"] = sat;
    j["r_group_order"] = rep.r_group_order;
    j["restriction_components"] = rep.restriction_components;
    j["packet_size_gspin"] = rep.packet_size_gspin;
    j["packet_size_spin"] = rep.packet_size_spin;
    j["euler_denominator"] = coeffs_to_json(rep.euler_denominator);
    json notes;
    notes["route_exact"] = rep.notes.exact;
    if (rep.notes.alcove) notes["route_alcove"] = *rep.notes.alcove;
    if (rep.notes.brute) notes["route_brute"] = *rep.notes.brute;
    notes["routes_agree"] = rep.notes.agree;
    if (!rep.notes.diagnostic.empty()) notes["diagnostic"] = rep.notes.diagnostic;
    notes["good_reduction_assumed"] = rep.good_reduction_assumed;
    j["notes"] = notes;
    return j;
}

PacketReport report_from_json(const json& j) {
    PacketReport rep;
    rep.q = int_from_json(j.at("weil").at("q"));
    rep.g = j.at("weil").at("g").get<unsigned>();
    rep.p = IntPolynomial(coeffs_from_json(j.at("weil").at("coeffs")));
    const json& inv = j.at("invariants");
    rep.invariants.radical = IntPolynomial(coeffs_from_json(inv.at("radical")));
    rep.invariants.center_dim = inv.at("center_dim").get<unsigned>();
    rep.invariants.is_isotypic = inv.at("is_isotypic").get<bool>();
    rep.invariants.is_even = inv.at("is_even").get<bool>();
    rep.invariants.twist = IntPolynomial(coeffs_from_json(inv.at("twist")));
    rep.invariants.center_dim_quadratic = inv.at("center_dim_quadratic").get<unsigned>();
    const json& sat = j.at("satake");
    rep.satake_ok = sat.at("ok").get<bool>();
    if (rep.satake_ok) {
        for (const json& a : sat.at("angles"))
            rep.angles.push_back(std::stod(a.get<std::string>()));
        rep.residual = std::stod(sat.at("residual").get<std::string>());
    }
    rep.r_group_order = j.at("r_group_order").get<int>();
    rep.restriction_components = j.at("restriction_components").get<int>();
    rep.packet_size_gspin = j.at("packet_size_gspin").get<int>();
    rep.packet_size_spin = j.at("packet_size_spin").get<int>();
    rep.euler_denominator = coeffs_from_json(j.at("euler_denominator"));
    const json& notes = j.at("notes");
    rep.notes.exact = notes.at("route_exact").get<int>();
    if (notes.contains("route_alcove")) rep.notes.alcove = notes.at("route_alcove").get<int>();
    if (notes.contains("route_brute")) rep.notes.brute = notes.at("route_brute").get<int>();
    rep.notes.agree = notes.at("routes_agree").get<bool>();
    rep.notes.diagnostic = notes.value("diagnostic", std::string{});
    rep.good_reduction_assumed = notes.at("good_reduction_assumed").get<bool>();
    return rep;
}

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do { v = rng(); } while (v >= limit);
    return v % n;
}

}  // namespace

std::vector<InputRecord> generate_corpus(const Int& q, unsigned g, std::size_t count,
                                         std::uint64_t seed) {
    if (g == 0) throw DomainError("generate_corpus: g must be positive");
    Int p;
    unsigned e;
    if (!prime_power_decompose(q, p, e))
        throw DomainError("generate_corpus: q must be a prime power");

    // Largest |a| with a^2 <= 4q.
    Int amax_z;
    {
        Int four_q = 4 * q;
        mpz_sqrt(amax_z.get_mpz_t(), four_q.get_mpz_t());
    }
    if (!amax_z.fits_ulong_p())
        throw DomainError("generate_corpus: q out of generator range");
    const std::uint64_t amax = amax_z.get_ui();
    const bool q_square = mpz_perfect_square_p(q.get_mpz_t()) != 0;

    // Deterministic stream: the standard-specified mt19937_64 plus
    // rejection sampling, so output is identical across platforms.
    std::mt19937_64 rng(seed);
    std::vector<InputRecord> out;
    out.reserve(count);
    const IntPolynomial boundary_block =
        IntPolynomial(std::vector<Int>{-q, Int(0), Int(1)}).pow(2);  // (T^2-q)^2
    for (std::size_t i = 0; i < count; ++i) {
        IntPolynomial prod({1});
        unsigned remaining = g;
        while (remaining > 0) {
            if (!q_square && remaining >= 2 && uniform_below(rng, 8) == 0) {
                // Boundary angles: (T^2-q)^2 is the smallest valid block
                // with roots at +-sqrt(q).
                prod = prod * boundary_block;
                remaining -= 2;
            } else {
                const std::uint64_t span = 2 * amax + 1;
                const long a = static_cast<long>(uniform_below(rng, span)) -
                               static_cast<long>(amax);
                prod = prod * IntPolynomial(std::vector<Int>{q, Int(-a), Int(1)});
                remaining -= 1;
            }
        }
        InputRecord rec;
        std::ostringstream label;
        label << "gen-q" << q.get_str() << "-g" << g << "-s" << seed << "-" << i;
        rec.label = label.str();
        rec.q = q;
        rec.coeffs = prod.coeffs();
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace spinpacket
