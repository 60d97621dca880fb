#pragma once

#include <string>
#include <utility>
#include <vector>

namespace frook {

/// One verified claim. `anchor` states the mathematical identity or formula
/// being checked, so a failure names the exact claim that broke.
struct Check {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, std::string anchor, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), std::move(anchor), pass, std::move(detail)});
  }
  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& c : other.checks)
      checks.push_back({prefix.empty() ? c.name : prefix + "/" + c.name, c.anchor, c.pass, c.detail});
  }
};

std::string report_to_json(const Report& r);
std::string report_to_csv(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace frook
