#include "lietools/report.hpp"

#include <algorithm>
#include <sstream>

#include "lietools/errors.hpp"

namespace lietools {

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Pass: return "pass";
    case ReportStatus::Fail: return "fail";
    case ReportStatus::Partial: return "partial";
  }
  return "?";
}

ReportStatus Report::status() const {
  const auto passed = std::count_if(results.begin(), results.end(), [](const Record& r) { return r.pass; });
  if (!results.empty() && passed == static_cast<std::ptrdiff_t>(results.size())) return ReportStatus::Pass;
  if (passed == 0) return ReportStatus::Fail;
  return ReportStatus::Partial;
}

nlohmann::json Report::to_json() const {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : results)
    records.push_back({{"kind", r.kind}, {"anchor", r.anchor}, {"inputs", r.inputs}, {"outputs", r.outputs},
                       {"pass", r.pass}});
  return {{"version", tool_version}, {"command", command}, {"status", to_string(status())}, {"results", records}};
}

Report Report::from_json(const nlohmann::json& j) {
  try {
    Report out;
    out.tool_version = j.at("version").get<std::string>();
    out.command = j.at("command").get<std::string>();
    for (const auto& r : j.at("results"))
      out.results.push_back(Record{r.at("kind").get<std::string>(), r.at("anchor").get<std::string>(),
                                   r.at("inputs"), r.at("outputs"), r.at("pass").get<bool>()});
    if (j.at("status").get<std::string>() != to_string(out.status()))
      throw ParseError("report status does not match its records");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "lietools " << tool_version << " :: " << command << '\n';
  for (const auto& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.kind << ' ' << r.anchor << ": ";
    if (auto it = r.outputs.find("summary"); it != r.outputs.end() && it->is_string())
      os << it->get<std::string>();
    else
      os << r.outputs.dump();
    os << '\n';
  }
  os << "status: " << to_string(status()) << '\n';
  return os.str();
}

}  // namespace lietools
