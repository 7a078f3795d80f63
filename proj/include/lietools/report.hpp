#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace lietools {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ReportStatus { Pass, Fail, Partial };

std::string to_string(ReportStatus s);

/// One reproduced fact. `kind` is one of orbit-count, table-row, verdict,
/// lnd-check; `anchor` names the fact. A `summary` string in `outputs`, when
/// present, is what the text format prints.
struct Record {
  std::string kind;
  std::string anchor;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  bool pass = false;

  friend bool operator==(const Record&, const Record&) = default;
};

struct Report {
  std::string tool_version = kToolVersion;
  std::string command;
  std::vector<Record> results;

  /// Pass iff every record passed; Fail when none did (or there are none);
  /// Partial otherwise.
  ReportStatus status() const;

  nlohmann::json to_json() const;
  /// Throws ParseError on a malformed document, including a stored status
  /// that disagrees with the records.
  static Report from_json(const nlohmann::json& j);

  std::string to_text() const;

  friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace lietools
