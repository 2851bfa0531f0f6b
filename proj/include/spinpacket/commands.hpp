// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef SPINPACKET_COMMANDS_HPP
#define SPINPACKET_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spinpacket/polycore.hpp"

namespace spinpacket {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUsage = 3;
inline constexpr int kExitMismatch = 4;

struct CommandOptions {
    Int q;
    std::vector<Int> coeffs;
    unsigned r = 2;
    double tol = 1e-9;
    bool json = false;
    unsigned g = 1;
    std::size_t count = 10;
    std::uint64_t seed = 0;
    std::string file;
};

// "3,-1,1" -> {3, -1, 1}; throws DomainError on malformed input.
std::vector<Int> parse_coeff_list(const std::string& text);

int cmd_validate(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_analyze(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_basechange(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_invariants(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_gen(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_corpus(const CommandOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace spinpacket

#endif  // SPINPACKET_COMMANDS_HPP
