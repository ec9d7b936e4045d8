#include "sccore/analytics.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "sccore/parallel.hpp"
#include "sccore/partition.hpp"

namespace sccore {

// ------------------------------------------------------------------ helpers

Rational parse_rational(std::string_view s) {
  auto bad = [&] { return Error(ErrorCode::InvalidArgument, "not a rational number: '" + std::string(s) + "'"); };
  std::string str(s);
  if (str.empty()) throw bad();
  try {
    if (auto slash = str.find('/'); slash != std::string::npos) {
      BigInt num(str.substr(0, slash)), den(str.substr(slash + 1));
      if (den == 0) throw bad();
      return Rational(num, den);
    }
    bool neg = str[0] == '-';
    size_t start = (neg || str[0] == '+') ? 1 : 0;
    std::string digits;
    BigInt den = 1;
    bool seen_point = false;
    for (size_t i = start; i < str.size(); ++i) {
      char c = str[i];
      if (c == '.' && !seen_point) {
        seen_point = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (seen_point) den *= 10;
      } else {
        throw bad();
      }
    }
    if (digits.empty()) throw bad();
    BigInt num(digits);
    return Rational(neg ? BigInt(-num) : num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

BigInt sc_t_value(int t, int n) {
  if (n < 0) return 0;
  if (t <= 1) return n == 0 ? 1 : 0;
  return (*default_store().sc_t(t, n))[n];
}

BigInt c_t_value(int t, int n) {
  if (n < 0) return 0;
  if (t <= 1) return n == 0 ? 1 : 0;
  return (*default_store().c_t(t, n))[n];
}

namespace {

std::shared_ptr<const TruncatedSeries> sc_row(int t, int order) {
  if (t <= 1) {
    auto s = TruncatedSeries::one(order);
    return std::make_shared<const TruncatedSeries>(std::move(s));
  }
  return default_store().sc_t(t, order);
}

std::shared_ptr<const TruncatedSeries> c_row(int t, int order) {
  if (t <= 1) return std::make_shared<const TruncatedSeries>(TruncatedSeries::one(order));
  return default_store().c_t(t, order);
}

nlohmann::json int_list(const std::vector<int>& v) { return nlohmann::json(v); }

}  // namespace

// ------------------------------------------------------------------ positivity

std::vector<int> zero_set(int t, int n_max) {
  if (t < 2) throw Error(ErrorCode::UnsupportedT, "zero sets need t >= 2");
  std::vector<int> out;
  if (n_max < 0) return out;
  auto s = default_store().sc_t(t, n_max);
  for (int n = 0; n <= n_max; ++n) {
    if ((*s)[n] == 0) out.push_back(n);
  }
  return out;
}

bool has_odd_power_of_3mod4_prime(long long m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "factorization needs m >= 1");
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (p % 4 == 3 && e % 2 == 1) return true;
  }
  return m > 1 && m % 4 == 3;
}

namespace {

bool is_triangular(long long n) {
  for (long long k = 0; k * (k + 1) / 2 <= n; ++k) {
    if (k * (k + 1) / 2 == n) return true;
  }
  return false;
}

bool is_3d2_pm_2d(long long n) {
  for (long long d = 0; 3 * d * d - 2 * d <= n; ++d) {
    if (3 * d * d + 2 * d == n || 3 * d * d - 2 * d == n) return true;
  }
  return false;
}

/// n = (8m + 1) 4^k - 2.
bool is_seven_core_gap(long long n) {
  long long v = n + 2;
  if (v < 1) return false;
  while (v % 4 == 0) v /= 4;
  return v % 8 == 1;
}

/// n = (4^k - 10) / 3 with k >= 2.
bool is_nine_core_gap(long long n) {
  long long v = 3 * n + 10;
  if (v < 16) return false;
  while (v % 4 == 0) v /= 4;
  return v == 1;
}

}  // namespace

bool predicted_zero(int t, long long n, FiveCoreReading reading) {
  if (t < 2) throw Error(ErrorCode::NoKnownCharacterization, "no characterization for t = " + std::to_string(t));
  if (n < 0) return true;
  switch (t) {
    case 2: return !is_triangular(n);
    case 3: return !is_3d2_pm_2d(n);
    case 4: return has_odd_power_of_3mod4_prime(8 * n + 5);
    case 5: {
      long long m = reading == FiveCoreReading::OnN ? n : n + 1;
      return m >= 1 && has_odd_power_of_3mod4_prime(m);
    }
    case 6: return n == 2 || n == 12 || n == 13 || n == 73;
    case 7: return is_seven_core_gap(n);
    case 9: return is_nine_core_gap(n);
    default: return n == 2;
  }
}

namespace {

std::vector<Witness> characterization_diff(int t, const TruncatedSeries& s, int n_max, FiveCoreReading reading) {
  std::vector<Witness> out;
  for (int n = 0; n <= n_max; ++n) {
    bool zero = s[n] == 0;
    bool predicted = predicted_zero(t, n, reading);
    if (zero != predicted) {
      out.push_back({t, n, s[n], predicted ? 1 : 0,
                     zero ? "zero but the criterion predicts a core exists" : "criterion predicts no core but one exists"});
    }
  }
  return out;
}

}  // namespace

ScanReport characterization_check(int t, int n_max) {
  if (t < 2) throw Error(ErrorCode::NoKnownCharacterization, "no characterization for t = " + std::to_string(t));
  ScanReport report;
  report.scan = "characterization";
  report.params = {{"t", t}, {"n_max", n_max}};
  ScanTimer timer(report);
  auto s = default_store().sc_t(t, std::max(n_max, 0));
  auto zeros = zero_set(t, n_max);
  report.data["zero_set_size"] = zeros.size();
  report.data["zero_set"] = int_list(zeros);

  if (t == 5) {
    auto on_n = characterization_diff(t, *s, n_max, FiveCoreReading::OnN);
    auto on_n1 = characterization_diff(t, *s, n_max, FiveCoreReading::OnNPlusOne);
    report.data["mismatches_reading_n"] = on_n.size();
    report.data["mismatches_reading_n_plus_1"] = on_n1.size();
    std::string winner = "none";
    if (on_n.empty() != on_n1.empty()) winner = on_n.empty() ? "n" : "n+1";
    if (on_n.empty() && on_n1.empty()) winner = "both";
    report.data["matching_reading"] = winner;
    if (winner == "n+1") {
      report.data["discrepancy"] = "the criterion applied to n disagrees with the counts; applied to n+1 it matches";
      report.data["reading_n_first_mismatches"] = nlohmann::json::array();
      for (size_t i = 0; i < std::min<size_t>(on_n.size(), 10); ++i) {
        report.data["reading_n_first_mismatches"].push_back(on_n[i].n);
      }
      report.witnesses = std::move(on_n1);
    } else {
      report.witnesses = std::move(on_n);
    }
  } else {
    report.data["criterion"] = t == 6 ? "conjectured finite set {2,12,13,73}"
                               : (t == 8 || t >= 10) ? "positive except n = 2" : "closed-form predicate";
    report.witnesses = characterization_diff(t, *s, n_max, FiveCoreReading::OnNPlusOne);
  }
  report.finalize();
  return report;
}

// ------------------------------------------------------------------ monotonicity

std::string_view to_string(MonotoneFamily f) {
  switch (f) {
    case MonotoneFamily::ScEven: return "sc-even";
    case MonotoneFamily::ScOdd: return "sc-odd";
    case MonotoneFamily::C: return "c";
    case MonotoneFamily::NscOdd: return "nsc-odd";
  }
  return "?";
}

std::optional<MonotoneFamily> monotone_family_from_string(std::string_view s) {
  for (auto f : {MonotoneFamily::ScEven, MonotoneFamily::ScOdd, MonotoneFamily::C, MonotoneFamily::NscOdd}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

namespace {

struct MonoCell {
  int t;
  bool in_window;
  bool strict;  // required relation: strict > (true) or >= (false)
};

/// The (t, n) pairs a scan looks at for one n, in ascending t.
std::vector<MonoCell> mono_cells(MonotoneFamily f, int n) {
  std::vector<MonoCell> out;
  switch (f) {
    case MonotoneFamily::ScEven: {
      int hi = 2 * (n / 4) - 4;
      for (int t = 4; t <= hi; t += 2) out.push_back({t, n >= 20 && t >= 6, true});
      break;
    }
    case MonotoneFamily::ScOdd: {
      for (int t = 7; t <= n - 17; t += 2) out.push_back({t, n >= 56 && t >= 9, true});
      break;
    }
    case MonotoneFamily::C:
      for (int t = 4; t <= n - 1; ++t) out.push_back({t, true, false});
      break;
    case MonotoneFamily::NscOdd:
      for (int t = 3; t + 2 <= n; t += 2) out.push_back({t, true, true});
      break;
  }
  return out;
}

int mono_step(MonotoneFamily f) { return f == MonotoneFamily::C ? 1 : 2; }

}  // namespace

ScanReport monotonicity_scan(MonotoneFamily family, int n_max, int workers) {
  ScanReport report;
  report.scan = "monotonicity";
  report.params = {{"family", std::string(to_string(family))}, {"n_max", n_max}};
  ScanTimer timer(report);
  if (n_max < 0) {
    report.finalize();
    return report;
  }

  // Rows needed: every index that appears plus the step.
  int step = mono_step(family);
  int t_top = std::max(n_max + 2, 2);
  size_t rows = static_cast<size_t>(t_top + 1);
  std::vector<std::shared_ptr<const TruncatedSeries>> sc(rows), c(rows);
  bool need_sc = family != MonotoneFamily::C;
  bool need_c = family == MonotoneFamily::C || family == MonotoneFamily::NscOdd;
  std::vector<int> ts;
  for (int t = 2; t <= t_top; ++t) {
    if (family == MonotoneFamily::ScEven && t % 2 != 0) continue;
    if ((family == MonotoneFamily::ScOdd || family == MonotoneFamily::NscOdd) && t % 2 == 0) continue;
    ts.push_back(t);
  }
  parallel_for(ts.size(), workers, [&](size_t i) {
    int t = ts[i];
    if (need_sc) sc[static_cast<size_t>(t)] = default_store().sc_t(t, n_max);
    if (need_c) c[static_cast<size_t>(t)] = default_store().c_t(t, n_max);
  });
  auto value = [&](int t, int n) -> BigInt {
    switch (family) {
      case MonotoneFamily::C: return (*c[static_cast<size_t>(t)])[n];
      case MonotoneFamily::NscOdd: return (*c[static_cast<size_t>(t)])[n] - (*sc[static_cast<size_t>(t)])[n];
      default: return (*sc[static_cast<size_t>(t)])[n];
    }
  };

  size_t count = static_cast<size_t>(n_max + 1);
  std::vector<std::vector<Witness>> found(count);
  std::vector<long long> compared(count, 0);
  parallel_for(count, workers, [&](size_t idx) {
    int n = static_cast<int>(idx);
    for (const auto& cell : mono_cells(family, n)) {
      ++compared[idx];
      BigInt big = value(cell.t + step, n), small = value(cell.t, n);
      bool ok = cell.strict ? big > small : big >= small;
      if (ok) continue;
      std::string rel = big == small ? "equal" : "less";
      found[idx].push_back({cell.t, n, big, small, cell.in_window ? rel : "anomaly: " + rel});
    }
  });

  long long total = 0;
  for (size_t i = 0; i < count; ++i) {
    total += compared[i];
    for (auto& w : found[i]) report.witnesses.push_back(std::move(w));
  }
  report.finalize();
  report.data = {{"comparisons", total},
                 {"violations", report.violation_count()},
                 {"anomalies", report.witnesses.size() - report.violation_count()}};
  return report;
}

ScanReport large_window_check(bool odd, int n_max) {
  ScanReport report;
  report.scan = odd ? "large-window-odd" : "large-window-even";
  report.params = {{"n_max", n_max}};
  ScanTimer timer(report);
  long long compared = 0;
  for (int n = odd ? 48 : 1; n <= n_max; ++n) {
    int lo = odd ? 3 : 2;
    for (int T = lo; ; T += 2) {
      bool in_range = odd ? (T <= n - 17) : (T <= 2 * (n / 4) - 4);
      if (!in_range) break;
      bool above = odd ? 3 * T > n : 4 * T > n;
      if (!above) continue;
      ++compared;
      BigInt big = sc_t_value(T + 2, n), small = sc_t_value(T, n);
      if (!(big > small)) report.witnesses.push_back({T, n, big, small, big == small ? "equal" : "less"});
    }
  }
  report.data = {{"comparisons", compared}};
  report.finalize();
  return report;
}

std::vector<Witness> small_n_odd_anomalies(int n_hi) {
  std::vector<Witness> out;
  for (int n = 0; n <= n_hi; ++n) {
    for (int T = 11; 2 * T <= n; T += 2) {
      BigInt big = sc_t_value(T + 2, n), small = sc_t_value(T, n);
      if (big <= small) out.push_back({T, n, big, small, big == small ? "anomaly: equal" : "anomaly: less"});
    }
  }
  return out;
}

PairComparison compare_pair(int t_small, int t_big, int n_lo, int n_hi) {
  PairComparison out;
  if (n_hi < 0) return out;
  auto a = sc_row(t_small, n_hi), b = sc_row(t_big, n_hi);
  for (int n = std::max(n_lo, 0); n <= n_hi; ++n) {
    if ((*b)[n] == (*a)[n]) out.equal.push_back(n);
    if ((*b)[n] < (*a)[n]) out.less.push_back(n);
  }
  return out;
}

// ------------------------------------------------------------------ distributions

std::string_view to_string(DistFamily f) {
  switch (f) {
    case DistFamily::Pi: return "pi";
    case DistFamily::SigmaEven: return "sigma-even";
    case DistFamily::SigmaOdd: return "sigma-odd";
  }
  return "?";
}

std::optional<DistFamily> dist_family_from_string(std::string_view s) {
  for (auto f : {DistFamily::Pi, DistFamily::SigmaEven, DistFamily::SigmaOdd}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

namespace {

/// Numerators (differences) of a distribution row for t = first, first + step, ..., <= last.
BigInt dist_numerator(DistFamily f, int t, int n) {
  if (f == DistFamily::Pi) return c_t_value(t + 1, n) - c_t_value(t, n);
  return sc_t_value(t + 2, n) - sc_t_value(t, n);
}

BigInt dist_denominator(DistFamily f, int n) {
  if (f == DistFamily::Pi) return (*default_store().p(n))[n];
  return (*default_store().sc(n))[n];
}

int dist_first(DistFamily f) { return f == DistFamily::SigmaEven ? 0 : 1; }
int dist_step(DistFamily f) { return f == DistFamily::Pi ? 1 : 2; }

}  // namespace

DistributionRow distribution_row(DistFamily family, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "distribution rows need n >= 1");
  BigInt den = dist_denominator(family, n);
  if (den == 0) throw Error(ErrorCode::UndefinedAtN, "sc(" + std::to_string(n) + ") = 0");
  DistributionRow row{n, family, {}};
  // Past t = n every term vanishes: c_t(n) = p(n) and sc_t(n) = sc(n) once t > n.
  for (int t = dist_first(family); t <= n; t += dist_step(family)) {
    row.values.emplace_back(t, Rational(dist_numerator(family, t, n), den));
  }
  return row;
}

std::vector<DistributionRow> distribution_table(int n) {
  std::vector<DistributionRow> rows{distribution_row(DistFamily::Pi, n)};
  if ((*default_store().sc(n))[n] != 0) {
    rows.push_back(distribution_row(DistFamily::SigmaEven, n));
    rows.push_back(distribution_row(DistFamily::SigmaOdd, n));
  }
  return rows;
}

std::array<bool, 3> telescoping_check(int n) {
  if (n >= 1 && (*default_store().sc(n))[n] == 0) {
    throw Error(ErrorCode::UndefinedAtN, "sigma is undefined when sc(" + std::to_string(n) + ") = 0");
  }
  std::array<bool, 3> out{};
  const DistFamily fams[] = {DistFamily::Pi, DistFamily::SigmaEven, DistFamily::SigmaOdd};
  for (size_t i = 0; i < 3; ++i) {
    Rational sum = 0;
    for (const auto& [t, v] : distribution_row(fams[i], n).values) sum += v;
    out[i] = sum == 1;
  }
  return out;
}

ScanReport distribution_scan(int n_lo, int n_hi) {
  ScanReport report;
  report.scan = "distribution";
  report.params = {{"n_lo", n_lo}, {"n_hi", n_hi}};
  ScanTimer timer(report);
  std::vector<int> skipped;
  long long checked = 0;
  if (n_hi >= 1) {
    // Warm the store once at the top order so every row reads the same series.
    for (int t = 2; t <= n_hi + 2; ++t) {
      default_store().sc_t(t, n_hi);
      default_store().c_t(t, n_hi);
    }
    default_store().p(n_hi);
  }
  const char* names[] = {"pi", "sigma-even", "sigma-odd"};
  for (int n = std::max(n_lo, 1); n <= n_hi; ++n) {
    if ((*default_store().sc(n))[n] == 0) {
      skipped.push_back(n);
      continue;
    }
    ++checked;
    auto ok = telescoping_check(n);
    for (size_t i = 0; i < 3; ++i) {
      if (!ok[i]) report.witnesses.push_back({0, n, 0, 1, std::string(names[i]) + " row does not sum to 1"});
    }
  }
  report.data = {{"checked", checked}, {"skipped_sc_zero", skipped}};
  report.finalize();
  return report;
}

std::vector<int> unimodality_window(DistFamily family, int n) {
  std::vector<int> out;
  switch (family) {
    case DistFamily::Pi:
      if (n >= 63) for (int t = 4; t <= n - 7; ++t) out.push_back(t);
      break;
    case DistFamily::SigmaEven:
      if (n >= 139) for (int t = 8; t <= 2 * (n / 4) - 8; t += 2) out.push_back(t);
      break;
    case DistFamily::SigmaOdd:
      if (n >= 213) for (int t = 9; t <= n / 2; t += 2) out.push_back(t);
      break;
  }
  return out;
}

ScanReport unimodality_scan(DistFamily family, int n_lo, int n_hi, int workers) {
  ScanReport report;
  report.scan = "unimodality";
  report.params = {{"family", std::string(to_string(family))}, {"n_lo", n_lo}, {"n_hi", n_hi}};
  ScanTimer timer(report);
  if (n_hi < std::max(n_lo, 0)) {
    report.finalize();
    return report;
  }
  std::vector<int> ts;
  for (int t = 2; t <= n_hi + 2; ++t) ts.push_back(t);
  parallel_for(ts.size(), workers, [&](size_t i) {
    if (family == DistFamily::Pi) {
      default_store().c_t(ts[i], n_hi);
    } else {
      default_store().sc_t(ts[i], n_hi);
    }
  });

  size_t count = static_cast<size_t>(n_hi - std::max(n_lo, 0) + 1);
  std::vector<std::optional<Witness>> found(count);
  std::vector<int> lengths(count, 0);
  parallel_for(count, workers, [&](size_t idx) {
    int n = std::max(n_lo, 0) + static_cast<int>(idx);
    auto window = unimodality_window(family, n);
    lengths[idx] = static_cast<int>(window.size());
    // The denominator p(n) or sc(n) is shared and positive, so numerators decide.
    std::vector<BigInt> x;
    x.reserve(window.size());
    for (int t : window) x.push_back(dist_numerator(family, t, n));
    if (auto brk = unimodal_break(x)) {
      size_t i = *brk;
      found[idx] = Witness{window[i], n, x[i], x[i + 1], "rises again after a descent"};
    }
  });
  long long nonempty = 0;
  for (size_t i = 0; i < count; ++i) {
    if (lengths[i] > 0) ++nonempty;
    if (found[i]) report.witnesses.push_back(std::move(*found[i]));
  }
  report.data = {{"windows_checked", nonempty}};
  report.finalize();
  return report;
}

// ------------------------------------------------------------------ identities

std::string IdentitySpec::label() const {
  auto arg = [](int a, int b) {
    std::string s = (a == 1 ? "" : std::to_string(a)) + "n";
    if (b != 0) s += "+" + std::to_string(b);
    return s;
  };
  return "sc_" + std::to_string(t) + "(" + arg(a, b) + ") = sc_" + std::to_string(t) + "(" + arg(a2, b2) + ")";
}

std::vector<IdentitySpec> identity_catalog() {
  return {{5, 2, 1, 1, 0}, {5, 5, 4, 1, 0}, {7, 4, 6, 1, 0}, {3, 4, 1, 1, 0}, {9, 8, 10, 2, 0}};
}

ScanReport identity_check(const IdentitySpec& spec, int n_max) {
  ScanReport report;
  report.scan = "identity";
  report.params = {{"identity", spec.label()}, {"t", spec.t}, {"a", spec.a}, {"b", spec.b},
                   {"a2", spec.a2}, {"b2", spec.b2}, {"n_max", n_max}};
  ScanTimer timer(report);
  if (spec.a < 0 || spec.a2 < 0) throw Error(ErrorCode::InvalidArgument, "coefficients must be non-negative");
  long long top = std::max<long long>({0, 1LL * spec.a * n_max + spec.b, 1LL * spec.a2 * n_max + spec.b2});
  auto s = sc_row(spec.t, static_cast<int>(top));
  long long checked = 0;
  for (int n = 0; n <= n_max; ++n) {
    long long x = 1LL * spec.a * n + spec.b, y = 1LL * spec.a2 * n + spec.b2;
    if (x < 0 || y < 0) continue;
    ++checked;
    const BigInt& l = (*s)[static_cast<int>(x)];
    const BigInt& r = (*s)[static_cast<int>(y)];
    if (l != r) report.witnesses.push_back({spec.t, n, l, r, "identity fails"});
  }
  report.data = {{"checked", checked}};
  report.finalize();
  return report;
}

std::string InequalitySpec::label() const {
  std::string f = (family == Family::CT ? "c_" : "sc_") + std::to_string(t);
  std::string arg = (a == 1 ? "" : std::to_string(a)) + "n" + (b != 0 ? "+" + std::to_string(b) : "");
  return f + "(" + arg + ") " + (strict ? ">" : ">=") + " " + to_string(alpha) + " " + f + "(n), n >= " +
         std::to_string(n_lo);
}

std::vector<InequalitySpec> inequality_catalog() {
  return {
      {Family::CT, 7, 2, 2, Rational(2), 0, false},
      {Family::CT, 7, 4, 6, Rational(10), 0, false},
      {Family::ScT, 9, 4, 0, Rational(3), 49, true},
      {Family::ScT, 9, 4, 1, Rational(19, 10), 1, true},
      {Family::ScT, 9, 4, 3, Rational(19, 10), 17, true},
      {Family::ScT, 9, 4, 4, Rational(13, 5), 1, true},
  };
}

ScanReport inequality_check(const InequalitySpec& spec, int n_max) {
  if (spec.family != Family::ScT && spec.family != Family::CT) {
    throw Error(ErrorCode::InvalidArgument, "inequalities are defined for sc_t and c_t");
  }
  ScanReport report;
  report.scan = "inequality";
  report.params = {{"inequality", spec.label()}, {"family", std::string(to_string(spec.family))}, {"t", spec.t},
                   {"a", spec.a}, {"b", spec.b}, {"alpha", to_string(spec.alpha)}, {"n_lo", spec.n_lo},
                   {"strict", spec.strict}, {"n_max", n_max}};
  ScanTimer timer(report);
  long long top = std::max<long long>({0, 1LL * spec.a * n_max + spec.b, n_max});
  auto s = spec.family == Family::CT ? c_row(spec.t, static_cast<int>(top)) : sc_row(spec.t, static_cast<int>(top));
  BigInt num = boost::multiprecision::numerator(spec.alpha);
  BigInt den = boost::multiprecision::denominator(spec.alpha);
  long long checked = 0;
  for (int n = std::max(spec.n_lo, 0); n <= n_max; ++n) {
    long long x = 1LL * spec.a * n + spec.b;
    if (x < 0) continue;
    ++checked;
    // f(an + b) > (num / den) f(n)  <=>  den f(an + b) > num f(n), den > 0.
    BigInt lhs = den * (*s)[static_cast<int>(x)];
    BigInt rhs = num * (*s)[n];
    bool ok = spec.strict ? lhs > rhs : lhs >= rhs;
    if (!ok) report.witnesses.push_back({spec.t, n, lhs, rhs, "inequality fails (den*lhs vs num*rhs)"});
  }
  report.data = {{"checked", checked}};
  report.finalize();
  return report;
}

// ------------------------------------------------------------------ simultaneous cores

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Partition from_first_column_hooks(const std::vector<int>& hooks_desc) {
  std::vector<int> parts;
  int k = static_cast<int>(hooks_desc.size());
  for (int i = 0; i < k; ++i) parts.push_back(hooks_desc[static_cast<size_t>(i)] - (k - 1 - i));
  return Partition(std::move(parts));
}

}  // namespace

SimultaneousCounts simultaneous_counts(int s, int t, int brute_force_limit) {
  if (s < 2 || t < 2) throw Error(ErrorCode::InvalidArgument, "s and t must be >= 2");
  if (std::gcd(s, t) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(s) + ", " + std::to_string(t) + ") != 1");
  }
  SimultaneousCounts out;
  out.s = s;
  out.t = t;
  out.count = binomial(s + t, t) / (s + t);
  out.sc_count = binomial(s / 2 + t / 2, t / 2);
  out.max_size = (1LL * s * s - 1) * (1LL * t * t - 1) / 24;

  // Gaps of the semigroup generated by s and t; the largest is st - s - t.
  int frobenius = s * t - s - t;
  std::vector<bool> representable(static_cast<size_t>(std::max(frobenius, 0) + 1), false);
  representable[0] = true;
  for (int v = 1; v <= frobenius; ++v) {
    representable[static_cast<size_t>(v)] =
        (v >= s && representable[static_cast<size_t>(v - s)]) || (v >= t && representable[static_cast<size_t>(v - t)]);
  }
  std::vector<int> gaps;
  for (int v = 1; v <= frobenius; ++v) {
    if (!representable[static_cast<size_t>(v)]) gaps.push_back(v);
  }
  if (gaps.size() > 24) throw Error(ErrorCode::ResourceLimit, "too many gaps to enumerate subsets");

  // A first-column hook set H gives an (s,t)-core iff every h in H with h >= s (resp. t)
  // has h - s (resp. h - t) in H as well. Candidates pass that test; each survivor is then
  // checked directly against its hook lengths.
  using Mask = unsigned long long;
  std::set<Partition> cores;
  size_t g = gaps.size();
  for (unsigned long long bits = 0; bits < (1ULL << g); ++bits) {
    Mask h = 0;
    for (size_t i = 0; i < g; ++i) {
      if (bits >> i & 1) h |= Mask(1) << gaps[i];
    }
    // s and t are not gaps, so h >> s never carries a bit for 0.
    if (((h >> s) & ~h) != 0 || ((h >> t) & ~h) != 0) continue;
    std::vector<int> desc;
    for (int v = frobenius; v >= 1; --v) {
      if (h >> v & 1) desc.push_back(v);
    }
    Partition p = from_first_column_hooks(desc);
    if (is_t_core(p, s) && is_t_core(p, t)) cores.insert(p);
  }

  long long sc = 0, biggest = 0;
  for (const auto& p : cores) {
    if (is_self_conjugate(p)) ++sc;
    biggest = std::max<long long>(biggest, p.size());
  }
  out.enumerated_count = static_cast<long long>(cores.size());
  out.enumerated_sc_count = sc;
  out.enumerated_max_size = biggest;

  if (out.max_size <= brute_force_limit && out.max_size <= oracle_cap()) {
    long long all = 0, all_sc = 0;
    for (int n = 0; n <= out.max_size; ++n) {
      for (const auto& p : enumerate_partitions(n)) {
        if (!is_t_core(p, s) || !is_t_core(p, t)) continue;
        ++all;
        if (is_self_conjugate(p)) ++all_sc;
        if (!cores.count(p)) throw Error(ErrorCode::InvalidArgument, "subset enumeration missed " + p.to_string());
      }
    }
    if (all != static_cast<long long>(cores.size()) || all_sc != sc) {
      throw Error(ErrorCode::InvalidArgument, "brute force and subset enumeration disagree");
    }
    out.brute_force = true;
  }
  return out;
}

ScanReport simultaneous_scan(int t_max, int brute_force_limit) {
  ScanReport report;
  report.scan = "simultaneous";
  report.params = {{"t_max", t_max}, {"brute_force_limit", brute_force_limit}};
  ScanTimer timer(report);
  nlohmann::json rows = nlohmann::json::array();
  for (int t = 3; t <= t_max; ++t) {
    for (int s = 2; s < t; ++s) {
      if (std::gcd(s, t) != 1) continue;
      auto r = simultaneous_counts(s, t, brute_force_limit);
      if (BigInt(*r.enumerated_count) != r.count) {
        report.witnesses.push_back({t, s, *r.enumerated_count, r.count, "core count differs from binom(s+t,t)/(s+t)"});
      }
      if (BigInt(*r.enumerated_sc_count) != r.sc_count) {
        report.witnesses.push_back({t, s, *r.enumerated_sc_count, r.sc_count, "self-conjugate count differs"});
      }
      if (*r.enumerated_max_size != r.max_size) {
        report.witnesses.push_back({t, s, *r.enumerated_max_size, r.max_size, "largest core size differs"});
      }
      rows.push_back({{"s", s}, {"t", t}, {"count", bigint_to_json(r.count)}, {"sc_count", bigint_to_json(r.sc_count)},
                      {"max_size", r.max_size}, {"brute_force", r.brute_force}});
    }
  }
  report.data = {{"pairs", rows}};
  report.finalize();
  return report;
}

}  // namespace sccore
