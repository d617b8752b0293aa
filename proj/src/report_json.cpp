#include "permideal/report_json.hpp"

#include <nlohmann/json.hpp>

namespace permideal {

std::string report_to_json(const Report& report, bool include_timings) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["tool_version"] = report.tool_version;
  doc["shape"] = {{"m", report.shape.m}, {"n", report.shape.n}};
  doc["field"] = report.field.name();
  doc["order"] = report.order.name();
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["id"] = c.id;
    entry["status"] = to_string(c.status);
    entry["expected"] = c.expected;
    entry["actual"] = c.actual;
    entry["detail"] = c.detail;
    entry["elapsed_ms"] = include_timings ? c.elapsed.count() : 0;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

}  // namespace permideal
