#pragma once

#include <string>

#include "permideal/verify.hpp"

namespace permideal {

inline constexpr int kReportSchemaVersion = 1;

/// Serializes a report with keys in a fixed order. Elapsed times are written
/// as 0 unless `include_timings` is set, so identical inputs give identical bytes.
std::string report_to_json(const Report& report, bool include_timings = false);

}  // namespace permideal
