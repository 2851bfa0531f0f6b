// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "spinpacket/commands.hpp"

#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "spinpacket/io.hpp"

namespace spinpacket {

namespace {

using nlohmann::json;

WeilPolynomial validate_options(const CommandOptions& opt) {
    return WeilPolynomial::validate(IntPolynomial(std::vector<Int>(opt.coeffs)), opt.q);
}

std::string angle_string(double a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12f", a);
    return std::string(buf);
}

void print_report_human(const PacketReport& rep, std::ostream& out) {
    out << "class: " << rep.p.to_string() << "  over F_" << rep.q.get_str()
        << " (g=" << rep.g << ")\n";
    out << "even: " << (rep.invariants.is_even ? "true" : "false")
        << "   isotypic: " << (rep.invariants.is_isotypic ? "true" : "false") << "\n";
    out << "center dims: " << rep.invariants.center_dim << " over F_q, "
        << rep.invariants.center_dim_quadratic << " over F_{q^2}\n";
    out << "radical: " << rep.invariants.radical.to_string() << "\n";
    out << "twist:   " << rep.invariants.twist.to_string() << "\n";
    if (rep.satake_ok) {
        out << "satake angles:";
        for (double a : rep.angles) out << " " << angle_string(a);
        out << "  (residual " << std::scientific << std::setprecision(2) << rep.residual
            << std::defaultfloat << ")\n";
    } else {
        out << "satake angles: unavailable (numerical failure; exact routes only)\n";
    }
    out << "component group: exact=" << rep.notes.exact;
    if (rep.notes.alcove) out << " alcove=" << *rep.notes.alcove;
    if (rep.notes.brute) out << " brute=" << *rep.notes.brute;
    out << (rep.notes.agree ? "  (agree)" : "  (DISAGREE)") << "\n";
    if (!rep.notes.diagnostic.empty()) out << "diagnostic: " << rep.notes.diagnostic << "\n";
    IntPolynomial euler(std::vector<Int>(rep.euler_denominator));
    out << "euler denominator: " << euler.to_string("u") << "   (u = q^-s)\n";
    out << "packet sizes: GSpin " << rep.packet_size_gspin << ", Spin " << rep.packet_size_spin
        << "; restriction components: " << rep.restriction_components << "\n";
    out << "good reduction assumed: " << (rep.good_reduction_assumed ? "yes" : "no") << "\n";
}

}  // namespace

std::vector<Int> parse_coeff_list(const std::string& text) {
    std::vector<Int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        // trim blanks
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw DomainError("empty coefficient in list");
        item = item.substr(b, e - b + 1);
        try {
            out.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw DomainError("bad integer '" + item + "' in coefficient list");
        }
    }
    if (out.empty()) throw DomainError("empty coefficient list");
    return out;
}

int cmd_validate(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const WeilPolynomial w = validate_options(opt);
        out << "valid, g=" << w.g() << "\n";
        return kExitOk;
    } catch (const ValidationError& e) {
        out << validation_failure_name(e.kind());
        if (e.kind() == ValidationFailure::FunctionalEquationFailed)
            out << " k=" << e.witness_index();
        out << ": " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}

int cmd_analyze(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const WeilPolynomial w = validate_options(opt);
        const PacketReport rep = analyze(w, opt.tol);
        if (opt.json)
            out << report_to_json(rep).dump(2) << "\n";
        else
            print_report_human(rep, out);
        return kExitOk;
    } catch (const ValidationError& e) {
        out << validation_failure_name(e.kind()) << ": " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}

int cmd_basechange(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const WeilPolynomial w = validate_options(opt);
        const WeilPolynomial ext = base_change(w, opt.r);
        if (opt.json) {
            json j;
            j["q"] = ext.q().get_str();
            j["r"] = opt.r;
            j["coeffs"] = json::array();
            for (const Int& c : ext.polynomial().coeffs()) j["coeffs"].push_back(c.get_str());
            out << j.dump(2) << "\n";
        } else {
            out << "base change r=" << opt.r << ": " << ext.polynomial().to_string()
                << "  over F_" << ext.q().get_str() << "\n";
        }
        return kExitOk;
    } catch (const ValidationError& e) {
        out << validation_failure_name(e.kind()) << ": " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}

int cmd_invariants(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const WeilPolynomial w = validate_options(opt);
        const IsogenyClassInvariants inv = invariants(w);
        if (opt.json) {
            json j;
            j["radical"] = json::array();
            for (const Int& c : inv.radical.coeffs()) j["radical"].push_back(c.get_str());
            j["center_dim"] = inv.center_dim;
            j["is_isotypic"] = inv.is_isotypic;
            j["is_even"] = inv.is_even;
            j["twist"] = json::array();
            for (const Int& c : inv.twist.coeffs()) j["twist"].push_back(c.get_str());
            j["center_dim_quadratic"] = inv.center_dim_quadratic;
            out << j.dump(2) << "\n";
        } else {
            out << "radical: " << inv.radical.to_string() << "\n"
                << "center_dim: " << inv.center_dim
                << "  center_dim_quadratic: " << inv.center_dim_quadratic << "\n"
                << "isotypic: " << (inv.is_isotypic ? "true" : "false")
                << "  even: " << (inv.is_even ? "true" : "false") << "\n"
                << "twist: " << inv.twist.to_string() << "\n";
        }
        return kExitOk;
    } catch (const ValidationError& e) {
        out << validation_failure_name(e.kind()) << ": " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}

int cmd_gen(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const auto records = generate_corpus(opt.q, opt.g, opt.count, opt.seed);
        for (const InputRecord& rec : records) out << input_record_to_json(rec).dump() << "\n";
        return kExitOk;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}

int cmd_corpus(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    std::ifstream in(opt.file);
    if (!in) {
        err << "error: cannot open corpus file '" << opt.file << "'\n";
        return kExitUsage;
    }
    std::size_t rows = 0, mismatches = 0, invalid = 0;
    std::string line;
    std::size_t lineno = 0;
    out << "label                           even  spin  verdict\n";
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        InputRecord rec;
        try {
            rec = input_record_from_json(json::parse(line));
        } catch (const std::exception& e) {
            err << "parse error at line " << lineno << ": " << e.what() << "\n";
            return kExitUsage;
        }
        ++rows;
        std::ostringstream row;
        row << std::left << std::setw(32) << rec.label;
        try {
            const WeilPolynomial w =
                WeilPolynomial::validate(IntPolynomial(std::vector<Int>(rec.coeffs)), rec.q);
            const PacketReport rep = analyze(w, opt.tol);
            row << std::setw(6) << (rep.invariants.is_even ? "true" : "false") << std::setw(6)
                << rep.packet_size_spin;
            bool ok = true;
            if (rec.expected_even && *rec.expected_even != rep.invariants.is_even) ok = false;
            if (rec.expected_spin_packet_size &&
                *rec.expected_spin_packet_size != rep.packet_size_spin)
                ok = false;
            if (ok) {
                row << "pass";
            } else {
                row << "MISMATCH (expected even="
                    << (rec.expected_even ? (*rec.expected_even ? "true" : "false") : "-")
                    << " spin="
                    << (rec.expected_spin_packet_size
                            ? std::to_string(*rec.expected_spin_packet_size)
                            : "-")
                    << ")";
                ++mismatches;
            }
        } catch (const ValidationError& e) {
            row << std::setw(6) << "-" << std::setw(6) << "-"
                << "INVALID (" << validation_failure_name(e.kind()) << ")";
            ++invalid;
        }
        out << row.str() << "\n";
    }
    out << rows << " rows, " << mismatches << " mismatches, " << invalid << " invalid\n";
    if (invalid > 0) return kExitInvalid;
    if (mismatches > 0) return kExitMismatch;
    return kExitOk;
}

}  // namespace spinpacket
