// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).
//
// Acceptance suite: one line per criterion. Criteria 1-2 drive the actual
// CLI binary; the rest exercise the library against a generated corpus of
// 1000+ classes. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "spinpacket/io.hpp"
#include "spinpacket/lpacket.hpp"

using namespace spinpacket;
using nlohmann::json;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string cmd = std::string(SPINPACKET_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string output;
    char buf[1024];
    while (fgets(buf, sizeof buf, pipe)) output += buf;
    return {WEXITSTATUS(pclose(pipe)), output};
}

struct CorpusEntry {
    WeilPolynomial w;
    PacketReport report;
};

}  // namespace

int main() {
    // --- Criterion 1: supersingular case through the CLI. -----------------
    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto [code, out] = run_cli("analyze --q 7 --coeffs 7,0,1 --json");
        const double dt = seconds_since(t0);
        bool ok = code == 0;
        std::string detail;
        try {
            const json j = json::parse(out);
            ok = ok && j["invariants"]["is_even"] == true;
            ok = ok && j["restriction_components"] == 2;
            ok = ok && j["packet_size_spin"] == 2;
            ok = ok && j["packet_size_gspin"] == 1;
            ok = ok && j["invariants"]["center_dim"] == 2;
            ok = ok && j["invariants"]["center_dim_quadratic"] == 1;
        } catch (...) {
            ok = false;
        }
        ok = ok && dt < 1.0;
        std::ostringstream msg;
        msg << "supersingular analyze --q 7 --coeffs 7,0,1: even, components 2, "
               "spin 2, gspin 1, center dims (2,1), "
            << dt << " s";
        report(1, ok, msg.str());
    }

    // --- Criterion 2: ordinary case, stable Satake angle. ------------------
    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto [code, out] = run_cli("analyze --q 3 --coeffs 3,-1,1 --json");
        bool ok = code == 0;
        double angle = -1.0;
        try {
            const json j = json::parse(out);
            ok = ok && j["invariants"]["is_even"] == false;
            ok = ok && j["packet_size_spin"] == 1;
            angle = std::stod(j["satake"]["angles"][0].get<std::string>());
        } catch (...) {
            ok = false;
        }
        // The stated oracle for this class: quadratic formula + angle,
        // theta = atan2(sqrt(11), 1) / 2 pi.
        const double oracle = std::atan2(std::sqrt(11.0), 1.0) / (2 * std::numbers::pi);
        ok = ok && std::abs(angle - oracle) < 1e-9;
        // Stability across independent recomputations.
        const WeilPolynomial w = WeilPolynomial::validate(IntPolynomial{3, -1, 1}, 3);
        for (int run = 0; run < 3 && ok; ++run) {
            const SatakeParameter sp = satake_parameter(w);
            ok = ok && std::abs(sp.angles[0] - oracle) < 1e-9;
        }
        const double dt = seconds_since(t0);
        ok = ok && dt < 1.0;
        std::ostringstream msg;
        msg.precision(12);
        msg << std::fixed << "ordinary analyze --q 3 --coeffs 3,-1,1: not even, spin 1, "
            << "angle " << angle << " = atan2(sqrt 11, 1)/2pi stable to 1e-9, ";
        msg.precision(3);
        msg << dt << " s";
        report(2, ok, msg.str());
    }

    // --- Criterion 3: non-isotypic dimension-criterion class. --------------
    {
        const IntPolynomial a{3, -1, 1}, b{3, 1, 1};
        const IntPolynomial p6 = a * a * b;
        bool ok = true;
        try {
            const PacketReport rep = analyze(WeilPolynomial::validate(p6, 3));
            ok = !rep.invariants.is_even && !rep.invariants.is_isotypic &&
                 rep.invariants.center_dim == 4 && rep.invariants.center_dim_quadratic == 2;
        } catch (...) {
            ok = false;
        }
        report(3, ok,
               "(T^2-T+3)^2(T^2+T+3) over q=3: not even, not isotypic, center dims (4,2), exact");
    }

    // --- Shared corpus for criteria 4-8. ------------------------------------
    std::vector<CorpusEntry> corpus;
    const auto corpus_t0 = std::chrono::steady_clock::now();
    {
        for (long q : {3L, 5L, 7L, 9L, 11L, 13L}) {
            for (unsigned g = 1; g <= 5; ++g) {
                for (const InputRecord& rec :
                     generate_corpus(Int(q), g, 34, 0x5350u + static_cast<unsigned>(q) + g)) {
                    WeilPolynomial w = WeilPolynomial::validate(
                        IntPolynomial(std::vector<Int>(rec.coeffs)), rec.q);
                    PacketReport rep = analyze(w);
                    corpus.push_back({std::move(w), std::move(rep)});
                }
            }
        }
    }

    // --- Criterion 4: three-way component-group agreement. ------------------
    {
        std::size_t disagreements = 0, with_brute = 0;
        for (const CorpusEntry& e : corpus) {
            if (!e.report.notes.alcove || !e.report.notes.brute) {
                ++disagreements;  // a numeric route failed outright
                continue;
            }
            ++with_brute;
            if (*e.report.notes.alcove != e.report.notes.exact ||
                *e.report.notes.brute != e.report.notes.exact)
                ++disagreements;
        }
        const double dt = seconds_since(corpus_t0);
        const bool ok = corpus.size() >= 1000 && disagreements == 0 && dt < 60.0;
        std::ostringstream msg;
        msg << corpus.size() << " generated classes (g<=5, q in {3,5,7,9,11,13}): exact/alcove/"
            << "brute orders identical on " << with_brute << " classes, " << disagreements
            << " disagreements, " << dt << " s";
        report(4, ok, msg.str());
    }

    // --- Criterion 5: theorem equivalence and twist fixed point. ------------
    {
        std::size_t bad = 0;
        for (const CorpusEntry& e : corpus) {
            const bool even = e.report.invariants.is_even;
            if ((e.report.packet_size_spin == 2) != even) ++bad;
            if (even != (e.w.polynomial() == e.w.polynomial().negate_variable())) ++bad;
        }
        std::ostringstream msg;
        msg << "spin packet size 2 <=> even, and even <=> P = twist, exact on " << corpus.size()
            << " classes (" << bad << " violations)";
        report(5, bad == 0, msg.str());
    }

    // --- Criterion 6: base-change index divisibility and radical identity. --
    {
        std::size_t isotypic = 0, identity_bad = 0, divisibility_bad = 0;
        std::vector<std::string> distinct_examples;
        for (const CorpusEntry& e : corpus) {
            if (!e.report.invariants.is_isotypic) continue;
            ++isotypic;
            for (unsigned r : {2u, 3u, 4u, 6u}) {
                const IntPolynomial radical_ext =
                    squarefree_part(base_change(e.w, r).polynomial());
                const unsigned m = e.report.invariants.center_dim /
                                   static_cast<unsigned>(radical_ext.degree());
                if (power_map(e.report.invariants.radical, r) != radical_ext.pow(m))
                    ++identity_bad;
                if (r % m != 0) {
                    ++divisibility_bad;
                    std::ostringstream ex;
                    ex << "[radical " << e.report.invariants.radical.to_string() << ", q="
                       << e.w.q().get_str() << ", r=" << r << ", m=" << m << "]";
                    if (std::find(distinct_examples.begin(), distinct_examples.end(), ex.str()) ==
                        distinct_examples.end())
                        distinct_examples.push_back(ex.str());
                }
            }
        }
        std::ostringstream examples;
        for (const std::string& ex : distinct_examples) examples << " " << ex;
        const bool ok = isotypic > 0 && identity_bad == 0 && divisibility_bad == 0;
        std::ostringstream msg;
        msg << isotypic << " isotypic classes, r in {2,3,4,6}: radical identity M^(r) = "
            << "(base-change radical)^m exact with " << identity_bad << " violations; m | r has "
            << divisibility_bad << " violations";
        if (divisibility_bad > 0)
            msg << examples.str()
                << " -- genuine counterexamples to the divisibility claim (tau = sqrt(q) zeta_3 "
                   "classes; the index m = 2 while r = 3; see ledger)";
        report(6, ok, msg.str());
    }

    // --- Criterion 7: isotypic evenness criterion, even halving. ------------
    {
        std::size_t criterion_bad = 0, halving_bad = 0, isotypic = 0, even_count = 0;
        for (const CorpusEntry& e : corpus) {
            if (e.report.invariants.is_isotypic) {
                ++isotypic;
                if (even_criterion_centers(e.w) != e.report.invariants.is_even) ++criterion_bad;
            }
            if (e.report.invariants.is_even) {
                ++even_count;
                if (e.report.invariants.center_dim != 2 * e.report.invariants.center_dim_quadratic)
                    ++halving_bad;
            }
        }
        const bool ok = criterion_bad == 0 && halving_bad == 0 && isotypic > 0 && even_count > 0;
        std::ostringstream msg;
        msg << "center criterion = evenness on " << isotypic << " isotypic classes ("
            << criterion_bad << " exceptions); center halving on " << even_count
            << " even classes including non-isotypic ones (" << halving_bad << " exceptions)";
        report(7, ok, msg.str());
    }

    // --- Criterion 8: functoriality, Euler involution, boundary class. ------
    {
        bool ok = true;
        std::size_t checked = 0;
        for (const CorpusEntry& e : corpus) {
            if (checked >= 200) break;
            ++checked;
            for (unsigned r = 1; r <= 3 && ok; ++r)
                for (unsigned s = 1; s <= 3 && ok; ++s)
                    ok = power_map(power_map(e.w.polynomial(), r), s) ==
                         power_map(e.w.polynomial(), r * s);
            const std::vector<Int> euler = euler_factor(e.w);
            ok = ok && IntPolynomial(std::vector<Int>(euler)).reverse() == e.w.polynomial();
            if (!ok) break;
        }

        try {
            const WeilPolynomial bdry = WeilPolynomial::validate(IntPolynomial{9, 0, -6, 0, 1}, 3);
            const SatakeParameter sp = satake_parameter(bdry);
            ok = ok && sp.angles[0] == 0.5 && sp.angles[1] == 0.0;
            ok = ok && component_group_exact(bdry).order == 2 &&
                 component_group_alcove(bdry).order == 2 && component_group_brute(bdry).order == 2;
        } catch (...) {
            ok = false;
        }
        std::ostringstream msg;
        msg << "(P^(r))^(s) = P^(rs) for r,s<=3 on " << checked
            << " classes; Euler reversal involution; boundary (T^2-3)^2 validates with angles "
               "(0.5, 0.0) and all three routes order 2";
        report(8, ok, msg.str());
    }

    std::printf("%d of 8 criteria passed\n", 8 - failures);
    return failures;
}
