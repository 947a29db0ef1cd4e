#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qmirror {

/// Structured pass/fail outcome of a named check, with witness lines and
/// optional tabular data.
struct VerificationReport {
  std::string check;
  std::optional<std::pair<long, long>> window;
  bool pass = true;
  std::vector<std::string> witnesses;
  nlohmann::json tables = nlohmann::json::object();

  explicit VerificationReport(std::string name) : check(std::move(name)) {}
  VerificationReport(std::string name, long k, long l)
      : check(std::move(name)), window(std::make_pair(k, l)) {}

  /// Records one assertion; a failure flips the overall result.
  void require(bool ok, const std::string& line) {
    pass = pass && ok;
    witnesses.push_back(std::string(ok ? "ok: " : "FAIL: ") + line);
  }
  void note(const std::string& line) { witnesses.push_back("note: " + line); }
  void absorb(const VerificationReport& sub) {
    require(sub.pass, sub.check);
    for (const auto& w : sub.witnesses)
      if (w.rfind("FAIL", 0) == 0) witnesses.push_back("  " + w);
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["check"] = check;
    if (window)
      j["window"] = {window->first, window->second};
    else
      j["window"] = nullptr;
    j["pass"] = pass;
    j["witnesses"] = witnesses;
    j["tables"] = tables;
    return j;
  }
};

}  // namespace qmirror
