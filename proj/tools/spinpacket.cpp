// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).
//
// spinpacket: validate Weil q-polynomials, compute isogeny-class
// invariants, Satake angles, component-group orders and L-packet sizes
// for GSpin/Spin. Exit codes: 0 ok, 1 internal error, 2 invalid
// polynomial, 3 usage/parse error, 4 corpus expectation mismatch.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "spinpacket/commands.hpp"
#include "spinpacket/errors.hpp"

namespace {

struct RawOptions {
    std::string q = "0";
    std::string coeffs;
    unsigned r = 2;
    double tol = 1e-9;
    bool json = false;
    unsigned g = 1;
    std::size_t count = 10;
    std::uint64_t seed = 0;
    std::string file;
};

bool fill_polynomial(const RawOptions& raw, spinpacket::CommandOptions& opt,
                     std::ostream& err) {
    try {
        opt.q = spinpacket::Int(raw.q);
        opt.coeffs = spinpacket::parse_coeff_list(raw.coeffs);
    } catch (const std::exception& e) {
        err << "argument error: " << e.what() << "\n";
        return false;
    }
    opt.r = raw.r;
    opt.tol = raw.tol;
    opt.json = raw.json;
    return true;
}

void add_poly_flags(CLI::App* cmd, RawOptions& raw, bool with_r = false) {
    cmd->add_option("--q", raw.q, "prime power q of the base field")->required();
    cmd->add_option("--coeffs", raw.coeffs,
                    "comma-separated coefficients, low to high, monic 1 last")
        ->required();
    cmd->add_option("--tol", raw.tol, "numeric tolerance (default 1e-9)");
    cmd->add_flag("--json", raw.json, "emit JSON");
    if (with_r) cmd->add_option("--r", raw.r, "extension degree")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "spinpacket: isogeny-class invariants and Spin/GSpin L-packet data "
        "from Weil q-polynomials.\n"
        "Inputs are characteristic polynomials of Frobenius; whether a given "
        "class is realized by an abelian variety (Honda-Tate multiplicities) "
        "is not checked."};
    app.require_subcommand(1);

    RawOptions raw;

    CLI::App* validate = app.add_subcommand("validate", "check the Weil conditions");
    add_poly_flags(validate, raw);

    CLI::App* analyze = app.add_subcommand("analyze", "full packet report");
    add_poly_flags(analyze, raw);

    CLI::App* basechange = app.add_subcommand("basechange", "base change to F_{q^r}");
    add_poly_flags(basechange, raw, /*with_r=*/true);

    CLI::App* invariants = app.add_subcommand("invariants", "isogeny-class invariants");
    add_poly_flags(invariants, raw);

    CLI::App* gen = app.add_subcommand("gen", "deterministic corpus generator (JSONL)");
    gen->add_option("--q", raw.q, "prime power q")->required();
    gen->add_option("--g", raw.g, "dimension g")->required();
    gen->add_option("--count", raw.count, "number of records");
    gen->add_option("--seed", raw.seed, "PRNG seed");

    CLI::App* corpus = app.add_subcommand("corpus", "run expectations from a JSONL file");
    corpus->add_option("--file", raw.file, "JSONL input records")->required();
    corpus->add_option("--tol", raw.tol, "numeric tolerance (default 1e-9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return spinpacket::kExitUsage;
    }

    spinpacket::CommandOptions opt;
    try {
        if (validate->parsed() || analyze->parsed() || basechange->parsed() ||
            invariants->parsed()) {
            if (!fill_polynomial(raw, opt, std::cerr)) return spinpacket::kExitUsage;
            if (validate->parsed()) return spinpacket::cmd_validate(opt, std::cout, std::cerr);
            if (analyze->parsed()) return spinpacket::cmd_analyze(opt, std::cout, std::cerr);
            if (basechange->parsed()) return spinpacket::cmd_basechange(opt, std::cout, std::cerr);
            return spinpacket::cmd_invariants(opt, std::cout, std::cerr);
        }
        if (gen->parsed()) {
            try {
                opt.q = spinpacket::Int(raw.q);
            } catch (const std::exception& e) {
                std::cerr << "argument error: " << e.what() << "\n";
                return spinpacket::kExitUsage;
            }
            opt.g = raw.g;
            opt.count = raw.count;
            opt.seed = raw.seed;
            return spinpacket::cmd_gen(opt, std::cout, std::cerr);
        }
        opt.file = raw.file;
        opt.tol = raw.tol;
        return spinpacket::cmd_corpus(opt, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return spinpacket::kExitInternal;
    }
}
