#pragma once

// Machine-readable run reports.  Every big integer and rational is a
// decimal string ("n" or "n/d") so that documents round-trip exactly.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfmirror/exactnum.hpp"
#include "pfmirror/mirrorseries.hpp"

namespace pfm {

using Json = nlohmann::ordered_json;

/// Resolves "3,3", "2,4", "2,2,2,2", "2,2,3", "5" (in any order) to the
/// preset, or builds parameters for other Calabi-Yau degree lists.
HGParams parse_family(const std::string& text);

/// Parses "p1,p2,..." into primes.
std::vector<std::uint64_t> parse_primes(const std::string& text);

Json cmd_pf(const std::vector<std::uint64_t>& primes, int lambda_count, std::uint64_t seed);
Json cmd_yukawa(const HGParams& family, int d_max);
Json cmd_lines(const std::vector<int>& degrees, int n);
Json cmd_euler();

/// CSV rendering of a cmd_yukawa report: "degree,<label>" then one row per d.
std::string instantons_csv(const Json& yukawa_report);

Json error_report(const std::string& command, const std::string& kind, const std::string& message);

}  // namespace pfm
