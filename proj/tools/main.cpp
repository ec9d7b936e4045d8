// sccore command line: counts, tables, scans and the coefficient cache.
//
// Exit codes: 0 ok, 1 usage, 2 internal disagreement, 3 scan violations.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sccore/abacus.hpp"
#include "sccore/analytics.hpp"
#include "sccore/cache.hpp"
#include "sccore/formulas.hpp"
#include "sccore/growth.hpp"
#include "sccore/partition.hpp"
#include "sccore/report.hpp"
#include "sccore/series.hpp"

using namespace sccore;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kUsage = 1, kDisagree = 2, kViolations = 3;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  int nmax = -1;
  int tmax = -1;
  std::string format;
  std::string method = "series";
  std::string json_out;
  std::string cache_dir;
  int workers = 0;
  int oracle_cap = -1;
};

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    int a = std::stoi(s.substr(0, dots)), b = std::stoi(s.substr(dots + 2));
    if (a > b) throw Usage("empty range " + s);
    return {a, b};
  } catch (const std::logic_error&) {
    throw Usage("bad range '" + s + "' (expected N or A..B)");
  }
}

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::logic_error&) {
      throw Usage("bad integer list '" + s + "'");
    }
  }
  return out;
}

/// Writes to the file, or stdout when path is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) throw Usage("cannot write " + path);
}

// ------------------------------------------------------------------ count

/// The count families: the series ones plus c_t - sc_t.
struct CountFamily {
  std::string name;
  std::optional<Family> series;  // empty for nsc_t
  bool needs_t;
};

CountFamily parse_count_family(const std::string& s) {
  if (s == "nsc_t") return {s, std::nullopt, true};
  auto f = family_from_string(s);
  if (!f) throw Usage("unknown family '" + s + "' (sc, c, sc_t, c_t, phat, p, nsc_t)");
  return {std::string(to_string(*f)), *f, family_has_t(*f)};
}

BigInt count_series(const CountFamily& fam, int t, int n) {
  if (!fam.series) return (*default_store().c_t(t, n))[n] - (*default_store().sc_t(t, n))[n];
  return (*default_store().get(*fam.series, t, n))[n];
}

BigInt count_oracle(const CountFamily& fam, int t, int n) {
  if (fam.series == Family::Sc) return BigInt(enumerate_self_conjugate(n).size());
  if (fam.series == Family::ScT) return BigInt(enumerate_self_conjugate_t_core(n, t).size());
  if (fam.series == Family::P) return BigInt(enumerate_partitions(n).size());
  if (fam.series == Family::Phat) throw Usage("no oracle for phat");
  auto parts = enumerate_partitions(n);
  long long cores = std::count_if(parts.begin(), parts.end(), [t](const Partition& p) { return is_t_core(p, t); });
  if (fam.series == Family::CT) return cores;
  return cores - static_cast<long long>(enumerate_self_conjugate_t_core(n, t).size());
}

/// Value by one method; nullopt when the method does not apply to this cell.
std::optional<BigInt> count_by(const std::string& method, const CountFamily& fam, int t, int n) {
  bool sc_t = fam.series == Family::ScT && t >= 2;
  if (method == "series") return count_series(fam, t, n);
  if (method == "oracle") {
    if (fam.series == Family::Phat) return std::nullopt;
    try {
      return count_oracle(fam, t, n);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ResourceLimit) return std::nullopt;
      throw;
    }
  }
  if (!sc_t) return std::nullopt;
  if (method == "recursive") return t % 2 == 0 ? sc_even_recursive(t / 2, n) : sc_odd_recursive(t / 2, n);
  if (method == "closed") {
    try {
      return t % 2 == 0 ? sc_even_closed(t / 2, n) : sc_odd_closed(t / 2, n);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ResourceLimit) return std::nullopt;
      throw;
    }
  }
  if (method == "large") {
    try {
      return sc_large(t, n).value;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::OutOfRange) return std::nullopt;
      throw;
    }
  }
  throw Usage("unknown method '" + method + "'");
}

int cmd_count(const Globals& g, const std::string& family, int t, const std::string& n_arg, const std::string& out) {
  auto fam = parse_count_family(family);
  if (fam.needs_t && t < 1) throw Usage("--t is required for " + fam.name);
  if (fam.name == "sc_t" || fam.name == "nsc_t") {
    if (t < 2) throw Usage("t >= 2 required for " + fam.name);
  }
  auto [lo, hi] = parse_range(n_arg);
  if (lo < 0) throw Usage("n must be non-negative");
  if (!fam.needs_t) t = 0;

  static const std::vector<std::string> kMethods = {"series", "recursive", "closed", "large", "oracle"};
  std::vector<std::string> methods;
  if (g.method == "all") {
    methods = kMethods;
  } else if (std::find(kMethods.begin(), kMethods.end(), g.method) != kMethods.end()) {
    methods = {g.method};
  } else {
    throw Usage("unknown method '" + g.method + "'");
  }

  // One series to the top of the range, instead of one per n.
  if (fam.series) {
    default_store().get(*fam.series, t, hi);
  } else {
    default_store().c_t(t, hi);
    default_store().sc_t(t, hi);
  }
  std::vector<BigInt> values;
  std::vector<std::string> used;
  for (int n = lo; n <= hi; ++n) {
    std::optional<BigInt> agreed;
    std::string first;
    for (const auto& m : methods) {
      auto v = count_by(m, fam, t, n);
      if (!v) {
        if (g.method != "all") throw Usage("method " + m + " does not apply to " + fam.name + " at n=" + std::to_string(n));
        continue;
      }
      if (std::find(used.begin(), used.end(), m) == used.end()) used.push_back(m);
      if (!agreed) {
        agreed = v;
        first = m;
      } else if (*v != *agreed) {
        std::cerr << "disagreement at n=" << n << ": " << first << " gives " << *agreed << ", " << m << " gives " << *v
                  << "\n";
        return kDisagree;
      }
    }
    values.push_back(*agreed);
  }

  std::string fmt = g.format.empty() ? "plain" : g.format;
  std::ostringstream os;
  if (fmt == "plain") {
    for (const auto& v : values) os << v << "\n";
  } else if (fmt == "csv" || fmt == "tsv") {
    char sep = fmt == "csv" ? ',' : '\t';
    os << "t" << sep << "n" << sep << "value\n";
    for (int n = lo; n <= hi; ++n) os << t << sep << n << sep << values[static_cast<size_t>(n - lo)] << "\n";
  } else if (fmt == "json") {
    json j = {{"family", fam.name}, {"t", t}, {"method", g.method}, {"values", json::array()}};
    for (int n = lo; n <= hi; ++n) j["values"].push_back({{"n", n}, {"value", bigint_to_json(values[static_cast<size_t>(n - lo)])}});
    os << j.dump(2) << "\n";
  } else if (fmt == "md") {
    os << "| n | value |\n|---:|---:|\n";
    for (int n = lo; n <= hi; ++n) os << "| " << n << " | " << values[static_cast<size_t>(n - lo)] << " |\n";
  } else {
    throw Usage("unknown format '" + fmt + "'");
  }
  emit(out, os.str());
  if (g.method == "all") {
    std::cerr << "agreement:";
    for (size_t i = 0; i < used.size(); ++i) std::cerr << (i ? ", " : " ") << used[i];
    std::cerr << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------------ table

struct Grid {
  std::string kind;
  int n_max = 0, t_max = 0;
  struct Row {
    int t;
    int start;
    std::vector<BigInt> values;
  };
  std::vector<Row> rows;
};

Grid build_grid(const std::string& kind, int n_max, int t_max) {
  Grid g{kind, n_max, t_max, {}};
  if (kind == "sc") {
    auto table = build_sc_table(t_max, n_max);
    for (int t = 2; t <= t_max; ++t) {
      Grid::Row row{t, std::max(0, t - 2), {}};
      for (int n = row.start; n <= n_max; ++n) row.values.push_back(*table.at(t, n));
      if (!row.values.empty()) g.rows.push_back(std::move(row));
    }
    return g;
  }
  int first;
  if (kind == "sc-diff-even") {
    first = 2;
  } else if (kind == "sc-diff-odd") {
    first = 3;
  } else {
    throw Usage("unknown table '" + kind + "' (sc, sc-diff-even, sc-diff-odd)");
  }
  // Row T holds sc_{T+2}(n) - sc_T(n), populated from n = T - 2 like row T of the sc grid.
  for (int T = first; T + 2 <= t_max; T += 2) {
    Grid::Row row{T, std::max(0, T - 2), {}};
    auto hi = default_store().sc_t(T + 2, n_max);
    auto lo = default_store().sc_t(T, n_max);
    for (int n = row.start; n <= n_max; ++n) row.values.push_back((*hi)[n] - (*lo)[n]);
    if (!row.values.empty()) g.rows.push_back(std::move(row));
  }
  return g;
}

std::string render_grid(const Grid& g, const std::string& fmt) {
  std::ostringstream os;
  if (fmt == "csv" || fmt == "tsv") {
    char sep = fmt == "csv" ? ',' : '\t';
    os << "t" << sep << "n" << sep << "value\n";
    for (const auto& r : g.rows) {
      for (size_t i = 0; i < r.values.size(); ++i) os << r.t << sep << r.start + static_cast<int>(i) << sep << r.values[i] << "\n";
    }
  } else if (fmt == "json") {
    json j = {{"kind", g.kind}, {"n_max", g.n_max}, {"t_max", g.t_max}, {"rows", json::array()}};
    for (const auto& r : g.rows) {
      json vals = json::array();
      for (const auto& v : r.values) vals.push_back(bigint_to_json(v));
      j["rows"].push_back({{"t", r.t}, {"start", r.start}, {"values", vals}});
    }
    os << j.dump(2) << "\n";
  } else if (fmt == "md") {
    // Rows start at their first populated column with blanks before, as in the printed grids.
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header = {"t \\ n"};
    for (int n = 0; n <= g.n_max; ++n) header.push_back(std::to_string(n));
    cells.push_back(header);
    for (const auto& r : g.rows) {
      std::vector<std::string> line = {std::to_string(r.t)};
      for (int n = 0; n <= g.n_max; ++n) line.push_back(n < r.start ? "" : r.values[static_cast<size_t>(n - r.start)].str());
      cells.push_back(std::move(line));
    }
    std::vector<size_t> width(header.size(), 3);
    for (const auto& line : cells) {
      for (size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    }
    auto put = [&](const std::vector<std::string>& line) {
      os << "|";
      for (size_t c = 0; c < line.size(); ++c) os << " " << std::string(width[c] - line[c].size(), ' ') << line[c] << " |";
      os << "\n";
    };
    put(cells[0]);
    os << "|";
    for (size_t c = 0; c < width.size(); ++c) os << std::string(width[c] + 1, '-') << ":|";
    os << "\n";
    for (size_t i = 1; i < cells.size(); ++i) put(cells[i]);
  } else {
    throw Usage("unknown format '" + fmt + "'");
  }
  return os.str();
}

int cmd_table(const Globals& g, const std::string& kind, const std::string& out) {
  int n_max = g.nmax < 0 ? 60 : g.nmax;
  int t_max = g.tmax < 0 ? n_max + 2 : g.tmax;
  if (t_max < 2) throw Usage("--tmax must be at least 2");
  auto grid = build_grid(kind, n_max, t_max);
  emit(out, render_grid(grid, g.format.empty() ? "csv" : g.format));
  return kOk;
}

// ------------------------------------------------------------------ scan

/// Concatenates reports; witness notes get the part label appended.
ScanReport merge_reports(const std::string& scan, const std::vector<std::pair<std::string, ScanReport>>& parts) {
  ScanReport r;
  r.scan = scan;
  r.params = {{"parts", json::array()}};
  for (const auto& [label, part] : parts) {
    r.params["parts"].push_back({{"label", label}, {"params", part.params}});
    r.data[label] = part.data;
    for (auto w : part.witnesses) {
      w.note += " [" + label + "]";
      r.witnesses.push_back(std::move(w));
    }
    r.elapsed_ms += part.elapsed_ms;
  }
  r.finalize();
  return r;
}

struct ScanArgs {
  std::string name;
  int t = -1;
  std::string family;
  std::string range;
  std::string index;
  std::string spec;
  bool no_timing = false;
};

IdentitySpec parse_identity_spec(const std::string& s) {
  auto v = split_ints(s);
  if (v.size() != 5) throw Usage("identity spec is t,a,b,a2,b2");
  return {v[0], v[1], v[2], v[3], v[4]};
}

InequalitySpec parse_inequality_spec(const std::string& s) {
  std::vector<std::string> tok;
  std::stringstream ss(s);
  std::string x;
  while (std::getline(ss, x, ',')) tok.push_back(x);
  if (tok.size() != 6 && tok.size() != 7) throw Usage("inequality spec is family,t,a,b,alpha,n_lo[,strict|weak]");
  auto f = family_from_string(tok[0]);
  if (!f || (*f != Family::ScT && *f != Family::CT)) throw Usage("inequality family must be sc_t or c_t");
  try {
    InequalitySpec spec{*f, std::stoi(tok[1]), std::stoi(tok[2]), std::stoi(tok[3]), parse_rational(tok[4]),
                        std::stoi(tok[5]), true};
    if (tok.size() == 7) {
      if (tok[6] != "strict" && tok[6] != "weak") throw Usage("last field must be strict or weak");
      spec.strict = tok[6] == "strict";
    }
    return spec;
  } catch (const std::logic_error&) {
    throw Usage("bad inequality spec '" + s + "'");
  }
}

template <class T>
std::vector<T> pick_catalog(const std::vector<T>& catalog, const std::string& index) {
  if (index.empty() || index == "all") return catalog;
  std::vector<T> out;
  for (int i : split_ints(index)) {
    if (i < 1 || i > static_cast<int>(catalog.size())) throw Usage("catalog index out of range: " + std::to_string(i));
    out.push_back(catalog[static_cast<size_t>(i - 1)]);
  }
  return out;
}

ScanReport run_scan(const Globals& g, const ScanArgs& a, int workers) {
  auto nmax_or = [&](int d) { return g.nmax < 0 ? d : g.nmax; };
  const auto& name = a.name;
  if (name == "positivity" || name == "characterization") {
    if (a.t < 0) throw Usage("--t is required for " + name);
    auto r = characterization_check(a.t, nmax_or(10000));
    r.scan = name;
    return r;
  }
  if (name == "monotonicity") {
    std::string fam = a.family.empty() ? "all" : a.family;
    int n_max = nmax_or(1000);
    if (fam == "all" || fam == "sc") {
      std::vector<MonotoneFamily> fams = {MonotoneFamily::ScEven, MonotoneFamily::ScOdd};
      if (fam == "all") fams = {MonotoneFamily::ScEven, MonotoneFamily::ScOdd, MonotoneFamily::C, MonotoneFamily::NscOdd};
      std::vector<std::pair<std::string, ScanReport>> parts;
      for (auto f : fams) parts.emplace_back(std::string(to_string(f)), monotonicity_scan(f, n_max, workers));
      return merge_reports("monotonicity", parts);
    }
    auto f = monotone_family_from_string(fam);
    if (!f) throw Usage("unknown monotonicity family '" + fam + "' (sc-even, sc-odd, c, nsc-odd, sc, all)");
    return monotonicity_scan(*f, n_max, workers);
  }
  if (name == "large-window") {
    std::string parity = a.family.empty() ? "both" : a.family;
    int n_max = nmax_or(1000);
    if (parity == "even") return large_window_check(false, n_max);
    if (parity == "odd") return large_window_check(true, n_max);
    if (parity != "both") throw Usage("--family for large-window is even, odd or both");
    return merge_reports("large-window", {{"even", large_window_check(false, n_max)}, {"odd", large_window_check(true, n_max)}});
  }
  if (name == "unimodality") {
    auto [lo, hi] = a.range.empty() ? std::pair{1, nmax_or(400)} : parse_range(a.range);
    std::string fam = a.family.empty() ? "all" : a.family;
    if (fam == "all") {
      std::vector<std::pair<std::string, ScanReport>> parts;
      for (auto f : {DistFamily::Pi, DistFamily::SigmaEven, DistFamily::SigmaOdd}) {
        parts.emplace_back(std::string(to_string(f)), unimodality_scan(f, lo, hi, workers));
      }
      return merge_reports("unimodality", parts);
    }
    auto f = dist_family_from_string(fam);
    if (!f) throw Usage("unknown distribution family '" + fam + "' (pi, sigma-even, sigma-odd, all)");
    return unimodality_scan(*f, lo, hi, workers);
  }
  if (name == "distribution") {
    auto [lo, hi] = a.range.empty() ? std::pair{3, nmax_or(400)} : parse_range(a.range);
    return distribution_scan(lo, hi);
  }
  if (name == "identity") {
    int n_max = nmax_or(2000);
    std::vector<IdentitySpec> specs =
        a.spec.empty() ? pick_catalog(identity_catalog(), a.index) : std::vector{parse_identity_spec(a.spec)};
    if (specs.size() == 1) return identity_check(specs[0], n_max);
    std::vector<std::pair<std::string, ScanReport>> parts;
    for (const auto& s : specs) parts.emplace_back(s.label(), identity_check(s, n_max));
    return merge_reports("identity", parts);
  }
  if (name == "inequality") {
    int n_max = nmax_or(2000);
    std::vector<InequalitySpec> specs =
        a.spec.empty() ? pick_catalog(inequality_catalog(), a.index) : std::vector{parse_inequality_spec(a.spec)};
    if (specs.size() == 1) return inequality_check(specs[0], n_max);
    std::vector<std::pair<std::string, ScanReport>> parts;
    for (const auto& s : specs) parts.emplace_back(s.label(), inequality_check(s, n_max));
    return merge_reports("inequality", parts);
  }
  if (name == "growth") {
    auto [lo, hi] = a.range.empty() ? std::pair{19, 150} : parse_range(a.range);
    return verify_growth(lo, hi, workers);
  }
  if (name == "simultaneous") return simultaneous_scan(g.tmax < 0 ? 8 : g.tmax);
  if (name == "cross-validate") {
    CrossValidateOptions opts;
    opts.workers = workers;
    return cross_validate(g.tmax < 0 ? 62 : g.tmax, nmax_or(60), opts);
  }
  throw Usage("unknown scan '" + name + "'");
}

int cmd_scan(const Globals& g, const ScanArgs& a, int workers) {
  auto report = run_scan(g, a, workers);
  if (a.no_timing) report.elapsed_ms = 0;
  std::string text = to_json(report, !a.no_timing).dump(2) + "\n";
  if (g.json_out.empty() || g.json_out == "-") {
    std::cout << text;
  } else {
    emit(g.json_out, text);
    std::cout << report.scan << ": " << to_string(report.verdict) << " (" << report.witnesses.size() << " witnesses, "
              << report.violation_count() << " violations)\n";
  }
  if (report.verdict != Verdict::Fails) return kOk;
  return report.scan == "cross-validate" ? kDisagree : kViolations;
}

// ------------------------------------------------------------------ cache

int cmd_cache(const Globals& g, const std::string& action, const std::string& family, const std::string& t_range) {
  auto dir = resolve_cache_dir(g.cache_dir);
  if (!dir) throw Usage("no cache directory: pass --cache-dir or set SCCORE_CACHE_DIR");
  DiskCache cache(*dir);
  if (action == "build") {
    auto f = family_from_string(family.empty() ? "sc_t" : family);
    if (!f) throw Usage("unknown family '" + family + "'");
    int n_max = g.nmax < 0 ? 10000 : g.nmax;
    std::vector<int> ts = {0};
    if (family_has_t(*f)) {
      auto [lo, hi] = parse_range(t_range.empty() ? "2..30" : t_range);
      ts.clear();
      for (int t = std::max(lo, *f == Family::ScT ? 2 : 1); t <= hi; ++t) ts.push_back(t);
    }
    for (int t : ts) {
      if (cache.load(*f, t, n_max)) continue;
      cache.store(*f, t, compute_family(*f, t, n_max));
    }
    std::cout << "cached " << ts.size() << " series of " << to_string(*f) << " to N=" << n_max << " in "
              << dir->string() << "\n";
    return kOk;
  }
  if (action == "verify") {
    auto results = cache.verify();
    size_t bad = 0;
    for (const auto& r : results) {
      if (!r.ok) {
        ++bad;
        std::cout << "FAIL " << r.file.filename().string() << ": " << r.problem << "\n";
      }
    }
    std::cout << results.size() - bad << "/" << results.size() << " cache files ok\n";
    return bad == 0 ? kOk : kDisagree;
  }
  if (action == "purge") {
    std::cout << "removed " << cache.purge() << " cache files\n";
    return kOk;
  }
  throw Usage("unknown cache action '" + action + "' (build, verify, purge)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-conjugate t-core counts, tables and conjecture scans"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--nmax", g.nmax, "Largest n");
  app.add_option("--tmax", g.tmax, "Largest t");
  app.add_option("--format", g.format, "csv, tsv, json, md (count also takes plain)");
  app.add_option("--method", g.method, "series, recursive, closed, large, oracle or all");
  app.add_option("--json", g.json_out, "Write the scan report here instead of stdout");
  app.add_option("--cache-dir", g.cache_dir, "Coefficient cache directory (overrides SCCORE_CACHE_DIR)");
  app.add_option("--workers", g.workers, "Worker threads (default: hardware parallelism)");
  app.add_option("--oracle-cap", g.oracle_cap, "Largest n for brute-force oracles");

  std::string family, n_arg, out;
  int t = -1;
  auto* count = app.add_subcommand("count", "Print counts for one n or a range A..B")->fallthrough();
  count->add_option("family", family, "sc, c, sc_t, c_t, phat, p, nsc_t")->required();
  count->add_option("--t", t, "Index t");
  count->add_option("--n", n_arg, "n or A..B")->required();
  count->add_option("-o,--out", out, "Output file");

  std::string kind;
  auto* table = app.add_subcommand("table", "Emit a grid of sc_t(n) or of differences")->fallthrough();
  table->add_option("kind", kind, "sc, sc-diff-even, sc-diff-odd")->required();
  table->add_option("-o,--out", out, "Output file");

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "Run a scan and emit a JSON report")->fallthrough();
  scan->add_option("name", sa.name,
                   "positivity, characterization, monotonicity, unimodality, identity, inequality, growth, "
                   "distribution, simultaneous, cross-validate, large-window")
      ->required();
  scan->add_option("--t", sa.t, "Index t (positivity, characterization)");
  scan->add_option("--family", sa.family, "Scan family (monotonicity, unimodality, large-window)");
  scan->add_option("--range", sa.range, "n range A..B (growth, unimodality, distribution)");
  scan->add_option("--index", sa.index, "Catalog entries, 1-based, comma separated, or all");
  scan->add_option("--spec", sa.spec, "Custom identity t,a,b,a2,b2 or inequality family,t,a,b,alpha,n_lo[,strict|weak]");
  scan->add_flag("--no-timing", sa.no_timing, "Write elapsed_ms = 0 for byte-identical reports");

  std::string action, t_range;
  auto* cache = app.add_subcommand("cache", "Build, verify or purge the coefficient cache")->fallthrough();
  cache->add_option("action", action, "build, verify, purge")->required();
  cache->add_option("--family", family, "Family to build (default sc_t)");
  cache->add_option("--t", t_range, "t or A..B to build (default 2..30)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (g.oracle_cap >= 0) set_oracle_cap(g.oracle_cap);
    int workers = g.workers > 0 ? g.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (auto dir = resolve_cache_dir(g.cache_dir); dir && !cache->parsed()) {
      set_default_backend(std::make_shared<DiskCache>(*dir));
    }
    if (count->parsed()) return cmd_count(g, family, t, n_arg, out);
    if (table->parsed()) return cmd_table(g, kind, out);
    if (scan->parsed()) return cmd_scan(g, sa, workers);
    return cmd_cache(g, action, family, t_range);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
