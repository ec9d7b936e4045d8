#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "sccore/common.hpp"

namespace sccore {

enum class Verdict { Holds, Fails, Mixed };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

/// One data point of a scan: usually lhs vs rhs at (t, n).
struct Witness {
  long long t = 0;
  long long n = 0;
  BigInt lhs = 0;
  BigInt rhs = 0;
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a scan. `Holds` iff there are no witnesses.
/// `Mixed` means every witness is an out-of-window anomaly (note starting with "anomaly").
struct ScanReport {
  std::string scan;
  nlohmann::json params = nlohmann::json::object();
  Verdict verdict = Verdict::Holds;
  std::vector<Witness> witnesses;
  nlohmann::json data = nlohmann::json::object();
  long long elapsed_ms = 0;

  /// Recomputes the verdict from the witness list.
  void finalize();
  bool holds() const noexcept { return verdict == Verdict::Holds; }
  /// Number of witnesses that are violations (not anomalies).
  size_t violation_count() const;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// Big integers are written as JSON numbers when they fit in 64 bits, else as decimal strings.
nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ScanReport& r, bool include_timing = true);
ScanReport report_from_json(const nlohmann::json& j);

/// Measures wall time into report.elapsed_ms on destruction.
class ScanTimer {
 public:
  explicit ScanTimer(ScanReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ScanTimer() {
    report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
  }
  ScanTimer(const ScanTimer&) = delete;
  ScanTimer& operator=(const ScanTimer&) = delete;

 private:
  ScanReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace sccore
