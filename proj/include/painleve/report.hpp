#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "painleve/errors.hpp"

namespace painleve {

struct CheckResult {
  std::string identity;
  long index = 0;
  bool ok = false;
  std::string detail;
};

/// Ordered list of identity checks. Verifiers record failures here instead of throwing.
class Report {
 public:
  void add(std::string identity, long index, bool ok, std::string detail = {}) {
    entries_.push_back({std::move(identity), index, ok, std::move(detail)});
  }

  /// Runs `check`; a thrown library error counts as a failed check.
  void run(const std::string& identity, long index, const std::function<bool()>& check) {
    try {
      add(identity, index, check());
    } catch (const Error& e) {
      add(identity, index, false, e.what());
    }
  }

  void merge(const Report& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }

  const std::vector<CheckResult>& entries() const { return entries_; }
  bool all_ok() const {
    for (const auto& e : entries_)
      if (!e.ok) return false;
    return true;
  }
  std::vector<CheckResult> failures() const {
    std::vector<CheckResult> out;
    for (const auto& e : entries_)
      if (!e.ok) out.push_back(e);
    return out;
  }
  /// True when some entry with this identity name failed.
  bool failed(const std::string& identity) const {
    for (const auto& e : entries_)
      if (e.identity == identity && !e.ok) return true;
    return false;
  }
  /// True when every entry with this identity name passed and there was at least one.
  bool passed(const std::string& identity) const {
    bool any = false;
    for (const auto& e : entries_) {
      if (e.identity != identity) continue;
      if (!e.ok) return false;
      any = true;
    }
    return any;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& e : entries_) {
      nlohmann::ordered_json j = {{"identity", e.identity}, {"index", e.index}, {"ok", e.ok}};
      if (!e.detail.empty()) j["detail"] = e.detail;
      out.push_back(std::move(j));
    }
    return out;
  }

 private:
  std::vector<CheckResult> entries_;
};

}  // namespace painleve
