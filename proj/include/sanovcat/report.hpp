#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace sanovcat {

/// Outcome of a single named check. Witnesses are human-readable strings,
/// capped at kMaxWitnesses so exhaustive scans stay cheap to report.
struct Check {
  static constexpr std::size_t kMaxWitnesses = 8;

  std::string name;
  std::string paper_ref;
  bool passed = true;
  std::vector<std::string> witnesses;
  nlohmann::json counts = nlohmann::json::object();
  double millis = 0.0;

  void fail(std::string witness);
  /// Records a witness without changing the verdict (informational output).
  void note(std::string witness);
  void expect(bool ok, const std::string& witness) {
    if (!ok) fail(witness);
  }
};

struct Report {
  std::vector<Check> checks;

  bool all_passed() const;
  std::size_t failures() const;
  void append(Report other);
  Check& add(Check c);
  const Check* find(const std::string& name) const;
};

/// Runs body(check) and stores the elapsed wall time in check.millis.
/// An escaping exception fails the check with the exception text.
template <class F>
Check timed_check(std::string name, std::string ref, F&& body) {
  Check c;
  c.name = std::move(name);
  c.paper_ref = std::move(ref);
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  auto t1 = std::chrono::steady_clock::now();
  c.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return c;
}

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const Report& r);

/// One line per check, "PASS name (12.3 ms)" plus indented witnesses.
void print_summary(std::ostream& os, const Report& r);

}  // namespace sanovcat
