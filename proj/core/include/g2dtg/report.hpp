#pragma once

#include <string>
#include <string_view>

#include "g2dtg/pipeline.hpp"

namespace g2dtg {

enum class ReportFormat { Json, Text };

ReportFormat parse_report_format(std::string_view text);

/// Deterministic serialization. JSON numbers that may exceed 64 bits are
/// written as decimal strings.
std::string emit(const RunReport &report, ReportFormat format);

/// Inverse of emit(report, Json). Throws std::invalid_argument on malformed
/// input.
RunReport parse_report_json(std::string_view json);

} // namespace g2dtg
