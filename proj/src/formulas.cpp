#include "sccore/formulas.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sccore/parallel.hpp"
#include "sccore/partition.hpp"

namespace sccore {

// ---------------------------------------------------------------- CountTable

CountTable::CountTable(Family family, int t_min, int t_max, int n_max)
    : family_(family), t_min_(t_min), t_max_(t_max), n_max_(n_max) {
  if (t_min > t_max || n_max < 0) throw Error(ErrorCode::InvalidArgument, "empty table range");
  cells_.resize(static_cast<size_t>(t_max - t_min + 1) * static_cast<size_t>(n_max + 1));
}

size_t CountTable::index(int t, int n) const {
  if (t < t_min_ || t > t_max_ || n < 0 || n > n_max_) {
    throw Error(ErrorCode::OutOfRange, "cell (" + std::to_string(t) + ", " + std::to_string(n) + ") outside table");
  }
  return static_cast<size_t>(t - t_min_) * static_cast<size_t>(n_max_ + 1) + static_cast<size_t>(n);
}

void CountTable::set(int t, int n, BigInt v) { cells_[index(t, n)] = std::move(v); }

const std::optional<BigInt>& CountTable::at(int t, int n) const { return cells_[index(t, n)]; }

CountTable build_sc_table(int t_max, int n_max) {
  if (t_max < 2) throw Error(ErrorCode::UnsupportedT, "table needs t_max >= 2");
  CountTable table(Family::ScT, 2, t_max, n_max);
  for (int t = 2; t <= t_max; ++t) {
    auto s = default_store().sc_t(t, n_max);
    for (int n = std::max(0, t - 2); n <= n_max; ++n) table.set(t, n, (*s)[n]);
  }
  return table;
}

// ---------------------------------------------------------------- recursions

RecursionTables recursion_tables(int half_t, int n) {
  if (half_t < 1) throw Error(ErrorCode::UnsupportedT, "recursions need core size >= 2");
  int order = std::max(n, 0);
  return {default_store().sc(order), default_store().phat(half_t, order)};
}

ScRecursion::ScRecursion(int core_size, RecursionTables tables) : core_(core_size), tables_(std::move(tables)) {
  if (core_size < 2) throw Error(ErrorCode::UnsupportedT, "core size must be >= 2");
  if (!tables_.sc || !tables_.phat) throw Error(ErrorCode::MissingTable, "lookup tables not provided");
}

namespace {
void require(const TruncatedSeries& s, int index, const char* what) {
  if (index > s.order()) {
    throw Error(ErrorCode::MissingTable, std::string(what) + " table stops at " + std::to_string(s.order()) +
                                             ", need index " + std::to_string(index));
  }
}
}  // namespace

BigInt ScRecursion::step(int n) const {
  const auto& sc = *tables_.sc;
  const auto& ph = *tables_.phat;
  require(sc, n, "sc");
  BigInt value = sc[n];
  if (core_ % 2 == 0) {
    int stride = 2 * core_;  // 4t
    int top = n / stride;
    if (top > 0) require(ph, top, "phat");
    for (int i = 1; i <= top; ++i) value -= memo_[static_cast<size_t>(n - i * stride)] * ph[i];
  } else {
    int top = n / core_;
    if (top > 0) require(ph, top / 2, "phat");
    for (int i = 0; 2 * i <= top; ++i) {
      for (int j = (i == 0 ? 1 : 0); 2 * i + j <= top; ++j) {
        if (sc[j] == 0) continue;
        value -= memo_[static_cast<size_t>(n - (2 * i + j) * core_)] * ph[i] * sc[j];
      }
    }
  }
  return value;
}

const BigInt& ScRecursion::operator()(int n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "n must be non-negative");
  while (static_cast<int>(memo_.size()) <= n) {
    BigInt v = step(static_cast<int>(memo_.size()));
    memo_.push_back(std::move(v));
  }
  return memo_[static_cast<size_t>(n)];
}

BigInt sc_even_recursive(int t, int n, const RecursionTables& tables) {
  ScRecursion rec(2 * t, tables);
  return rec(n);
}
BigInt sc_even_recursive(int t, int n) { return sc_even_recursive(t, n, recursion_tables(t, n)); }

BigInt sc_odd_recursive(int t, int n, const RecursionTables& tables) {
  ScRecursion rec(2 * t + 1, tables);
  return rec(n);
}
BigInt sc_odd_recursive(int t, int n) { return sc_odd_recursive(t, n, recursion_tables(t, n)); }

// ---------------------------------------------------------------- closed forms

int closed_form_depth(int core_size, int n) {
  if (core_size < 2) throw Error(ErrorCode::UnsupportedT, "core size must be >= 2");
  if (n < 0) return 0;
  return core_size % 2 == 0 ? n / (2 * core_size) : n / core_size;
}

namespace {
void check_budget(int depth, int budget) {
  if (depth > budget) {
    throw Error(ErrorCode::ResourceLimit, "composition total " + std::to_string(depth) + " exceeds budget " +
                                              std::to_string(budget));
  }
}
}  // namespace

BigInt sc_even_closed(int t, int n, int budget) {
  if (t < 1) throw Error(ErrorCode::UnsupportedT, "t must be >= 1");
  if (n < 0) return 0;
  int depth = n / (4 * t);
  check_budget(depth, budget);
  auto sc = default_store().sc(n);
  auto ph = default_store().phat(t, std::max(depth, 1));

  // weight[s] = sum over compositions I of s of (-1)^k prod phat_t(i_l)
  BigInt total = 0;
  std::function<void(int, int, const BigInt&)> walk = [&](int used, int sign, const BigInt& prod) {
    total += sign * prod * (*sc)[n - 4 * used * t];
    for (int i = 1; used + i <= depth; ++i) walk(used + i, -sign, prod * (*ph)[i]);
  };
  walk(0, 1, BigInt(1));
  return total;
}

BigInt sc_odd_closed(int t, int n, int budget) {
  if (t < 1) throw Error(ErrorCode::UnsupportedT, "t must be >= 1");
  if (n < 0) return 0;
  int core = 2 * t + 1;
  int depth = n / core;
  check_budget(depth, budget);
  auto sc = default_store().sc(std::max(n, depth));
  auto ph = default_store().phat(t, std::max(depth, 1));

  BigInt total = 0;
  std::function<void(int, int, const BigInt&)> walk = [&](int used, int sign, const BigInt& prod) {
    total += sign * prod * (*sc)[n - used * core];
    for (int i = 0; used + 2 * i <= depth; ++i) {
      for (int j = (i == 0 ? 1 : 0); used + 2 * i + j <= depth; ++j) {
        // Pairs with sc(j) = 0 contribute nothing, nor does anything extending them.
        if ((*sc)[j] == 0) continue;
        walk(used + 2 * i + j, -sign, prod * (*ph)[i] * (*sc)[j]);
      }
    }
  };
  walk(0, 1, BigInt(1));
  return total;
}

// ---------------------------------------------------------------- large t

std::string_view to_string(LargeFormula f) {
  switch (f) {
    case LargeFormula::ExceedsSize: return "exceeds-size";
    case LargeFormula::EvenAboveHalf: return "even-above-half";
    case LargeFormula::EvenQuarterFloor: return "even-quarter-floor";
    case LargeFormula::EvenQuarterFloorM2: return "even-quarter-floor-minus-2";
    case LargeFormula::EvenQuarterToHalf: return "even-quarter-to-half";
    case LargeFormula::OddHalfToFull: return "odd-half-to-full";
    case LargeFormula::OddThirdToHalf: return "odd-third-to-half";
  }
  return "?";
}

bool large_applies(LargeFormula f, int T, int n) {
  if (T < 2 || n < 0) return false;
  bool even = T % 2 == 0;
  switch (f) {
    case LargeFormula::ExceedsSize: return T > n;
    case LargeFormula::EvenAboveHalf: return even && 2 * T > n;
    case LargeFormula::EvenQuarterFloor: return n >= 4 && T == 2 * (n / 4);
    case LargeFormula::EvenQuarterFloorM2: return n >= 12 && T == 2 * (n / 4) - 2;
    case LargeFormula::EvenQuarterToHalf: return even && n >= 1 && 4 * T > n && 2 * T <= n;
    case LargeFormula::OddHalfToFull: return !even && n < 2 * T && T <= n;
    case LargeFormula::OddThirdToHalf: return !even && n < 3 * T && 2 * T <= n;
  }
  return false;
}

BigInt evaluate_large(LargeFormula f, int T, int n) {
  if (!large_applies(f, T, n)) {
    throw Error(ErrorCode::OutOfRange, std::string(to_string(f)) + " does not cover (" + std::to_string(T) + ", " +
                                           std::to_string(n) + ")");
  }
  auto s = default_store().sc(n);
  const auto& sc = *s;
  switch (f) {
    case LargeFormula::ExceedsSize:
    case LargeFormula::EvenAboveHalf:
      return sc[n];
    case LargeFormula::EvenQuarterFloor:
      return n % 4 == 2 ? sc[n] : BigInt(sc[n] - n / 4);
    case LargeFormula::EvenQuarterFloorM2:
      return sc[n] - (n / 4 - 1);
    case LargeFormula::EvenQuarterToHalf:
      return sc[n] - (T / 2) * sc[n - 2 * T];
    case LargeFormula::OddHalfToFull:
      return sc[n] - sc[n - T];
    case LargeFormula::OddThirdToHalf:
      return sc[n] - sc[n - T] - ((T - 1) / 2 - 1) * sc[n - 2 * T];
  }
  return 0;
}

LargeResult sc_large(int T, int n) {
  static constexpr LargeFormula order[] = {
      LargeFormula::EvenQuarterFloor, LargeFormula::EvenQuarterFloorM2, LargeFormula::EvenAboveHalf,
      LargeFormula::EvenQuarterToHalf, LargeFormula::OddHalfToFull,     LargeFormula::OddThirdToHalf,
      LargeFormula::ExceedsSize};
  if (T < 2) throw Error(ErrorCode::UnsupportedT, "core size must be >= 2");
  for (auto f : order) {
    if (large_applies(f, T, n)) return {evaluate_large(f, T, n), f};
  }
  throw Error(ErrorCode::OutOfRange,
              "no large-t formula covers (" + std::to_string(T) + ", " + std::to_string(n) + ")");
}

// ---------------------------------------------------------------- cross validation

namespace {

/// For every self-conjugate partition of n <= max_n, the set of hook lengths it contains.
struct HookSets {
  // sets[n][k][h] is true when the k-th partition of n has a hook of length h.
  std::vector<std::vector<std::vector<bool>>> sets;

  explicit HookSets(int max_n) {
    for (int n = 0; n <= max_n; ++n) {
      auto& per_n = sets.emplace_back();
      for (const auto& p : enumerate_self_conjugate(n)) {
        std::vector<bool> has(static_cast<size_t>(n + 1), false);
        HookGrid g(p);
        for (int i = 1; i <= g.rows(); ++i) {
          for (int h : g.row(i)) has[static_cast<size_t>(h)] = true;
        }
        per_n.push_back(std::move(has));
      }
    }
  }

  BigInt count(int n, int T) const {
    long long c = 0;
    for (const auto& has : sets[static_cast<size_t>(n)]) {
      if (T >= static_cast<int>(has.size()) || !has[static_cast<size_t>(T)]) ++c;
    }
    return c;
  }
};

struct CellTally {
  long long cells = 0, recursive = 0, closed = 0, large = 0, oracle = 0;
};

}  // namespace

ScanReport cross_validate(int t_max, int n_max, const CrossValidateOptions& opts) {
  ScanReport report;
  report.scan = "cross-validate";
  report.params = {{"t_max", t_max}, {"n_max", n_max}, {"oracle_max_n", opts.oracle_max_n},
                   {"composition_budget", opts.composition_budget}};
  ScanTimer timer(report);
  if (t_max < 2 || n_max < 0) {
    report.finalize();
    return report;
  }

  int oracle_n = std::min({opts.oracle_max_n, oracle_cap(), n_max});
  HookSets hooks(std::max(oracle_n, -1));
  auto sc = default_store().sc(n_max);

  size_t rows = static_cast<size_t>(t_max - 1);
  std::vector<std::vector<Witness>> found(rows);
  std::vector<CellTally> tallies(rows);

  parallel_for(rows, opts.workers, [&](size_t idx) {
    int T = static_cast<int>(idx) + 2;
    auto series = default_store().sc_t(T, n_max);
    ScRecursion rec(T, recursion_tables(T / 2, n_max));
    auto& out = found[idx];
    auto& tally = tallies[idx];
    auto mismatch = [&](int n, const BigInt& other, const std::string& method) {
      out.push_back({T, n, (*series)[n], other, method + " disagrees with series"});
    };
    for (int n = 0; n <= n_max; ++n) {
      ++tally.cells;
      const BigInt& want = (*series)[n];
      ++tally.recursive;
      if (rec(n) != want) mismatch(n, rec(n), "recursive");
      if (closed_form_depth(T, n) <= opts.composition_budget) {
        ++tally.closed;
        BigInt v = T % 2 == 0 ? sc_even_closed(T / 2, n, opts.composition_budget)
                              : sc_odd_closed(T / 2, n, opts.composition_budget);
        if (v != want) mismatch(n, v, "closed");
      }
      for (auto f : kAllLargeFormulas) {
        if (!large_applies(f, T, n)) continue;
        ++tally.large;
        BigInt v = evaluate_large(f, T, n);
        if (v != want) mismatch(n, v, "large/" + std::string(to_string(f)));
      }
      if (n <= oracle_n) {
        ++tally.oracle;
        BigInt v = hooks.count(n, T);
        if (v != want) mismatch(n, v, "oracle");
      }
    }
  });

  CellTally total;
  for (size_t i = 0; i < rows; ++i) {
    for (auto& w : found[i]) report.witnesses.push_back(std::move(w));
    total.cells += tallies[i].cells;
    total.recursive += tallies[i].recursive;
    total.closed += tallies[i].closed;
    total.large += tallies[i].large;
    total.oracle += tallies[i].oracle;
  }
  report.data = {{"cells", total.cells},         {"recursive_checks", total.recursive},
                 {"closed_checks", total.closed}, {"large_checks", total.large},
                 {"oracle_checks", total.oracle}, {"oracle_max_n", oracle_n}};
  report.finalize();
  return report;
}

}  // namespace sccore
