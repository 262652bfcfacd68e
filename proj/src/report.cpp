#include "sanovcat/report.hpp"

#include <iomanip>
#include <ostream>

namespace sanovcat {

void Check::fail(std::string witness) {
  passed = false;
  note(std::move(witness));
}

void Check::note(std::string witness) {
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

bool Report::all_passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed ? 0 : 1;
  return n;
}

void Report::append(Report other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
}

Check& Report::add(Check c) {
  checks.push_back(std::move(c));
  return checks.back();
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::json to_json(const Check& c) {
  return {{"name", c.name},
          {"paper_ref", c.paper_ref},
          {"status", c.passed ? "pass" : "fail"},
          {"witnesses", c.witnesses},
          {"counts", c.counts},
          {"millis", c.millis}};
}

nlohmann::json to_json(const Report& r) {
  auto arr = nlohmann::json::array();
  for (const auto& c : r.checks) arr.push_back(to_json(c));
  return arr;
}

void print_summary(std::ostream& os, const Report& r) {
  for (const auto& c : r.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << std::fixed << std::setprecision(1)
       << c.millis << " ms)\n";
    for (const auto& w : c.witnesses) os << "     " << w << '\n';
  }
  os << r.checks.size() - r.failures() << '/' << r.checks.size() << " checks passed\n";
}

}  // namespace sanovcat
