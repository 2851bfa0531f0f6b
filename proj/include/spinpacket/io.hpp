// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef SPINPACKET_IO_HPP
#define SPINPACKET_IO_HPP

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "spinpacket/lpacket.hpp"

namespace spinpacket {

/// One batch-input line: a labeled candidate polynomial with optional
/// expected values for corpus assertions. Coefficients are low-to-high and
/// must end with the explicit monic 1.
struct InputRecord {
    std::string label;
    Int q;
    std::vector<Int> coeffs;
    std::optional<bool> expected_even;
    std::optional<int> expected_spin_packet_size;
};

nlohmann::json input_record_to_json(const InputRecord& rec);
InputRecord input_record_from_json(const nlohmann::json& j);

/// PacketReport JSON: fixed schema, angles as 12-digit decimal strings.
nlohmann::json report_to_json(const PacketReport& report);
PacketReport report_from_json(const nlohmann::json& j);

/// Deterministic pseudorandom stream of valid Weil classes over F_q of
/// dimension g: products of quadratics T^2 - aT + q with a^2 <= 4q,
/// occasionally substituting a (T^2 - q)^2 block when q is not a square.
std::vector<InputRecord> generate_corpus(const Int& q, unsigned g,
                                         std::size_t count, std::uint64_t seed);

}  // namespace spinpacket

#endif  // SPINPACKET_IO_HPP
