#include "codeg/report.hpp"

#include "json.hpp"

#include <sstream>

namespace codeg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

Verdict ScanReport::verdict() const {
  bool undecided = inconclusive > 0;
  for (auto const& c : claims) {
    if (c.verdict == Verdict::Fail) return Verdict::Fail;
    if (c.verdict == Verdict::Inconclusive) undecided = true;
  }
  return undecided ? Verdict::Inconclusive : Verdict::Pass;
}

std::string ScanReport::verdict_line() const {
  auto v = verdict();
  if (v == Verdict::Inconclusive) return "INCONCLUSIVE(" + std::to_string(inconclusive) + ")";
  return to_string(v);
}

std::string ScanReport::to_tsv() const {
  std::ostringstream os;
  os << "# scan\t" << scan << "\n";
  for (auto const& [k, v] : params) os << "# param\t" << k << "\t" << v << "\n";
  for (auto const& n : notes) os << "# note\t" << n << "\n";
  if (!columns.empty()) {
    for (size_t i = 0; i < columns.size(); ++i) os << (i ? "\t" : "") << columns[i];
    os << "\n";
  }
  for (auto const& r : rows) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "\t" : "") << r[i];
    os << "\n";
  }
  for (auto const& c : claims) os << "# claim\t" << c.name << "\t" << to_string(c.verdict) << "\n";
  if (inconclusive) os << "# inconclusive\t" << inconclusive << "\n";
  os << verdict_line() << "\n";
  return os.str();
}

std::string ScanReport::to_json() const {
  nlohmann::ordered_json j;
  j["scan"] = scan;
  j["params"] = nlohmann::ordered_json::object();
  for (auto const& [k, v] : params) j["params"][k] = v;
  j["notes"] = notes;
  j["columns"] = columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (auto const& r : rows) {
    nlohmann::ordered_json o;
    for (size_t i = 0; i < r.size() && i < columns.size(); ++i) o[columns[i]] = r[i];
    j["rows"].push_back(o);
  }
  j["claims"] = nlohmann::ordered_json::array();
  for (auto const& c : claims) j["claims"].push_back({{"claim", c.name}, {"verdict", to_string(c.verdict)}});
  j["inconclusive"] = inconclusive;
  j["verdict"] = verdict_line();
  return j.dump(2) + "\n" + verdict_line() + "\n";
}

unsigned default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

}  // namespace codeg
