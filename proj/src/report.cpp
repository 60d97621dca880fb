#include "frook/report.hpp"

#include <sstream>

#include <json.hpp>

namespace frook {

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) p[k] = v;
  j["params"] = p;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["anchor"] = c.anchor;
    jc["status"] = c.pass ? "pass" : "fail";
    jc["detail"] = c.detail;
    j["checks"].push_back(jc);
  }
  j["all_pass"] = r.all_pass();
  return j.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
  bool need = s.find_first_of(",\"\n") != std::string::npos;
  if (!need) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << "suite,name,anchor,status,detail\n";
  for (const auto& c : r.checks)
    os << csv_escape(r.suite) << "," << csv_escape(c.name) << "," << csv_escape(c.anchor) << ","
       << (c.pass ? "pass" : "fail") << "," << csv_escape(c.detail) << "\n";
  return os.str();
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "suite: " << r.suite;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << "\n";
  for (const auto& c : r.checks) {
    os << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name << "  --  " << c.anchor;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << (r.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << " (" << r.checks.size()
     << " checks)\n";
  return os.str();
}

}  // namespace frook
