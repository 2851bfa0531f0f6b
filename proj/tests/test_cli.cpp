// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "spinpacket/commands.hpp"
#include "spinpacket/io.hpp"

using namespace spinpacket;
using nlohmann::json;

namespace {

CommandOptions poly_options(const std::string& coeffs, long q) {
    CommandOptions opt;
    opt.q = Int(q);
    opt.coeffs = parse_coeff_list(coeffs);
    return opt;
}

std::string run(int (*cmd)(const CommandOptions&, std::ostream&, std::ostream&),
                const CommandOptions& opt, int expect_code) {
    std::ostringstream out, err;
    const int code = cmd(opt, out, err);
    CHECK(code == expect_code);
    return out.str();
}

std::string temp_file(const std::string& name, const std::string& contents) {
    const std::string path = std::string("/tmp/spinpacket_test_") + name;
    std::ofstream f(path);
    f << contents;
    return path;
}

}  // namespace

TEST_CASE("parse_coeff_list") {
    CHECK(parse_coeff_list("3,-1,1") == std::vector<Int>{3, -1, 1});
    CHECK(parse_coeff_list(" 3 , -1 , 1 ") == std::vector<Int>{3, -1, 1});
    CHECK_THROWS_AS(parse_coeff_list("3,,1"), DomainError);
    CHECK_THROWS_AS(parse_coeff_list("3,x,1"), DomainError);
    CHECK_THROWS_AS(parse_coeff_list(""), DomainError);
}

TEST_CASE("cmd_validate: stated examples") {
    CHECK(run(cmd_validate, poly_options("3,-1,1", 3), kExitOk) == "valid, g=1\n");

    const std::string fe = run(cmd_validate, poly_options("-4,0,1", 4), kExitInvalid);
    CHECK(fe.find("FunctionalEquationFailed k=1") == 0);

    const std::string circle = run(cmd_validate, poly_options("3,-5,1", 3), kExitInvalid);
    CHECK(circle.find("RootsOffWeilCircle") == 0);
}

TEST_CASE("cmd_analyze: human and JSON output") {
    CommandOptions opt = poly_options("7,0,1", 7);
    const std::string human = run(cmd_analyze, opt, kExitOk);
    CHECK(human.find("even: true") != std::string::npos);
    CHECK(human.find("Spin 2") != std::string::npos);

    opt.json = true;
    const std::string text = run(cmd_analyze, opt, kExitOk);
    const json j = json::parse(text);
    CHECK(j["invariants"]["is_even"] == true);
    CHECK(j["packet_size_spin"] == 2);
    CHECK(j["packet_size_gspin"] == 1);
    CHECK(j["satake"]["angles"][0] == "0.250000000000");
    CHECK(j["notes"]["routes_agree"] == true);

    // The degree-6 dimension-criterion class.
    CommandOptions big = poly_options("27,-9,24,-5,8,-1,1", 3);
    big.json = true;
    const json j6 = json::parse(run(cmd_analyze, big, kExitOk));
    CHECK(j6["invariants"]["is_isotypic"] == false);
    CHECK(j6["invariants"]["is_even"] == false);
    CHECK(j6["invariants"]["center_dim"] == 4);
    CHECK(j6["invariants"]["center_dim_quadratic"] == 2);
}

TEST_CASE("report JSON round-trips for the whole bundled corpus") {
    std::ifstream in(std::string(SPINPACKET_DATA_DIR) + "/corpus.jsonl");
    REQUIRE(in.good());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const InputRecord rec = input_record_from_json(json::parse(line));
        const WeilPolynomial w =
            WeilPolynomial::validate(IntPolynomial(std::vector<Int>(rec.coeffs)), rec.q);
        const PacketReport rep = analyze(w);
        const json serialized = report_to_json(rep);
        const PacketReport parsed = report_from_json(serialized);
        // Parse -> re-serialize is the identity on the wire format.
        CHECK(report_to_json(parsed) == serialized);
        CHECK(parsed.p == rep.p);
        CHECK(parsed.q == rep.q);
        CHECK(parsed.packet_size_spin == rep.packet_size_spin);
        CHECK(parsed.invariants.is_even == rep.invariants.is_even);
        CHECK(parsed.euler_denominator == rep.euler_denominator);
        ++rows;
    }
    CHECK(rows == 5);
}

TEST_CASE("cmd_basechange and cmd_invariants") {
    CommandOptions opt = poly_options("7,0,1", 7);
    opt.r = 2;
    const std::string bc = run(cmd_basechange, opt, kExitOk);
    CHECK(bc.find("T^2 + 14*T + 49") != std::string::npos);
    CHECK(bc.find("F_49") != std::string::npos);

    opt.json = true;
    const json j = json::parse(run(cmd_invariants, opt, kExitOk));
    CHECK(j["center_dim"] == 2);
    CHECK(j["center_dim_quadratic"] == 1);
    CHECK(j["is_even"] == true);
}

TEST_CASE("cmd_gen: determinism and validity") {
    CommandOptions opt;
    opt.q = 7;
    opt.g = 3;
    opt.count = 25;
    opt.seed = 9;
    const std::string first = run(cmd_gen, opt, kExitOk);
    const std::string second = run(cmd_gen, opt, kExitOk);
    CHECK(first == second);  // byte-identical for identical flags

    std::istringstream lines(first);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        const InputRecord rec = input_record_from_json(json::parse(line));
        const WeilPolynomial w =
            WeilPolynomial::validate(IntPolynomial(std::vector<Int>(rec.coeffs)), rec.q);
        CHECK(w.g() == 3);
        ++rows;
    }
    CHECK(rows == 25);

    opt.seed = 10;
    CHECK(run(cmd_gen, opt, kExitOk) != first);

    CommandOptions bad;
    bad.q = 6;
    bad.g = 1;
    std::ostringstream out, err;
    CHECK(cmd_gen(bad, out, err) == kExitUsage);
}

TEST_CASE("cmd_corpus: bundled corpus passes") {
    CommandOptions opt;
    opt.file = std::string(SPINPACKET_DATA_DIR) + "/corpus.jsonl";
    const std::string table = run(cmd_corpus, opt, kExitOk);
    CHECK(table.find("5 rows, 0 mismatches, 0 invalid") != std::string::npos);
}

TEST_CASE("cmd_corpus: mismatch, empty file, missing file") {
    CommandOptions opt;
    opt.file = temp_file("bad.jsonl",
                         R"({"label": "wrong", "q": 7, "coeffs": [7, 0, 1], )"
                         R"("expected": {"even": false, "spin_packet_size": 1}})"
                         "\n");
    std::ostringstream out, err;
    CHECK(cmd_corpus(opt, out, err) == kExitMismatch);
    CHECK(out.str().find("MISMATCH") != std::string::npos);

    opt.file = temp_file("empty.jsonl", "");
    CHECK(run(cmd_corpus, opt, kExitOk).find("0 rows") != std::string::npos);

    opt.file = "/tmp/spinpacket_test_does_not_exist.jsonl";
    std::ostringstream out2, err2;
    CHECK(cmd_corpus(opt, out2, err2) == kExitUsage);

    opt.file = temp_file("junk.jsonl", "not json\n");
    std::ostringstream out3, err3;
    CHECK(cmd_corpus(opt, out3, err3) == kExitUsage);

    // A syntactically fine record that fails validation.
    opt.file = temp_file("invalid.jsonl", R"({"label": "nope", "q": 4, "coeffs": [-4, 0, 1]})"
                                          "\n");
    std::ostringstream out4, err4;
    CHECK(cmd_corpus(opt, out4, err4) == kExitInvalid);
    CHECK(out4.str().find("INVALID (FunctionalEquationFailed)") != std::string::npos);
}

TEST_CASE("spinpacket binary: exit codes and smoke output") {
    const std::string bin = SPINPACKET_BIN;
    auto run_bin = [&bin](const std::string& args) {
        const std::string cmd = bin + " " + args + " 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string output;
        char buf[512];
        while (fgets(buf, sizeof buf, pipe)) output += buf;
        const int status = pclose(pipe);
        return std::make_pair(WEXITSTATUS(status), output);
    };

    auto [code, out] = run_bin("validate --q 3 --coeffs 3,-1,1");
    CHECK(code == 0);
    CHECK(out == "valid, g=1\n");

    std::tie(code, out) = run_bin("validate --q 4 --coeffs -4,0,1");
    CHECK(code == 2);
    CHECK(out.find("FunctionalEquationFailed k=1") == 0);

    std::tie(code, out) = run_bin("analyze --q 7 --coeffs 7,0,1 --json");
    CHECK(code == 0);
    CHECK(json::parse(out)["packet_size_spin"] == 2);

    std::tie(code, out) = run_bin("gen --q 3 --g 1 --count 5 --seed 1");
    CHECK(code == 0);

    std::tie(code, out) = run_bin("validate --q 3");  // missing --coeffs
    CHECK(code == 3);

    std::tie(code, out) = run_bin("corpus --file /tmp/spinpacket_test_does_not_exist.jsonl");
    CHECK(code == 3);
}
