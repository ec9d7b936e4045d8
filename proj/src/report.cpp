#include "sccore/report.hpp"

#include <limits>

namespace sccore {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Mixed: return "mixed";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "holds") return Verdict::Holds;
  if (s == "fails") return Verdict::Fails;
  if (s == "mixed") return Verdict::Mixed;
  throw Error(ErrorCode::InvalidArgument, "unknown verdict '" + std::string(s) + "'");
}

namespace {
bool is_anomaly(const Witness& w) { return w.note.rfind("anomaly", 0) == 0; }
}  // namespace

size_t ScanReport::violation_count() const {
  size_t c = 0;
  for (const auto& w : witnesses) c += is_anomaly(w) ? 0 : 1;
  return c;
}

void ScanReport::finalize() {
  if (witnesses.empty()) {
    verdict = Verdict::Holds;
  } else if (violation_count() == 0) {
    verdict = Verdict::Mixed;
  } else {
    verdict = Verdict::Fails;
  }
}

nlohmann::json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error(ErrorCode::InvalidArgument, "expected an integer or a decimal string");
}

nlohmann::json to_json(const ScanReport& r, bool include_timing) {
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : r.witnesses) {
    ws.push_back({{"t", w.t}, {"n", w.n}, {"lhs", bigint_to_json(w.lhs)}, {"rhs", bigint_to_json(w.rhs)}, {"note", w.note}});
  }
  return {
      {"scan", r.scan},
      {"params", r.params},
      {"verdict", std::string(to_string(r.verdict))},
      {"witnesses", ws},
      {"data", r.data},
      {"elapsed_ms", include_timing ? r.elapsed_ms : 0},
  };
}

ScanReport report_from_json(const nlohmann::json& j) {
  ScanReport r;
  r.scan = j.at("scan").get<std::string>();
  r.params = j.at("params");
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  for (const auto& w : j.at("witnesses")) {
    r.witnesses.push_back({w.at("t").get<long long>(), w.at("n").get<long long>(), bigint_from_json(w.at("lhs")),
                           bigint_from_json(w.at("rhs")), w.value("note", std::string())});
  }
  r.data = j.value("data", nlohmann::json::object());
  r.elapsed_ms = j.value("elapsed_ms", 0LL);
  return r;
}

}  // namespace sccore
