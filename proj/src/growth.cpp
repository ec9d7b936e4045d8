#include "sccore/growth.hpp"

#include <algorithm>
#include <map>

#include "sccore/parallel.hpp"
#include "sccore/series.hpp"

namespace sccore {

std::string_view to_string(GrowthClass c) {
  switch (c) {
    case GrowthClass::A: return "A";
    case GrowthClass::B: return "B";
    case GrowthClass::C: return "C";
  }
  return "?";
}

std::string_view to_string(GBranch b) {
  switch (b) {
    case GBranch::SingleHook: return "single-hook";
    case GBranch::Insertion: return "insertion";
    case GBranch::TwoHookFallback: return "two-hook-fallback";
    case GBranch::ShiftFallback: return "shift-fallback";
    case GBranch::Undefined: return "undefined";
  }
  return "?";
}

namespace {

/// The k x k square has hooks (2k-1, 2k-3, ..., 1).
bool is_square_hooks(const DiagonalHooks& d) {
  auto h = d.hooks();
  if (h.empty() || h.back() != 1) return false;
  for (size_t i = 0; i + 1 < h.size(); ++i) {
    if (h[i] != h[i + 1] + 2) return false;
  }
  return true;
}

}  // namespace

GrowthClass classify_hooks(const DiagonalHooks& d, int n) {
  auto h = d.hooks();
  if (h.size() == 1) return (n % 2 == 1 && h[0] == n) ? GrowthClass::A : GrowthClass::C;
  if (h.size() < 2) return GrowthClass::C;
  if (h[0] - h[1] >= 4) return GrowthClass::A;
  if (h[0] == h[1] + 2 && !is_square_hooks(d)) return GrowthClass::B;
  return GrowthClass::C;
}

ClassifiedSC classify(const Partition& p, int n) {
  if (p.size() != n) throw Error(ErrorCode::InvalidArgument, "partition size differs from n");
  return {p, classify_hooks(diagonal_hooks(p), n)};
}

DiagonalHooks map_f_hooks(const DiagonalHooks& d) {
  std::vector<int> h(d.hooks().begin(), d.hooks().end());
  if (h.empty()) return DiagonalHooks({1});
  h[0] += 2;
  return DiagonalHooks(std::move(h));
}

Partition map_f(const Partition& p) {
  if (!is_self_conjugate(p)) throw Error(ErrorCode::NotSelfConjugate, p.to_string());
  std::vector<int> parts(p.parts().begin(), p.parts().end());
  if (parts.empty()) return Partition({1});
  parts[0] += 1;
  parts.push_back(1);
  return Partition(std::move(parts));
}

GResult map_g_hooks(const DiagonalHooks& d, int n) {
  if (n < 27) throw Error(ErrorCode::OutOfDomain, "g is defined for n >= 27");
  if (d.sum() != n - 2) throw Error(ErrorCode::InvalidArgument, "input must have size n - 2");
  auto h = d.hooks();
  if (h.size() == 1) {
    if (n % 4 == 1) return {DiagonalHooks({(n + 1) / 2, (n - 3) / 2, 1}), GBranch::SingleHook};
    if (n % 4 == 3) return {DiagonalHooks({(n - 1) / 2, (n - 5) / 2, 3}), GBranch::SingleHook};
    return {std::nullopt, GBranch::Undefined};  // unreachable: one hook forces n odd
  }

  std::vector<int> p(h.begin(), h.end());
  int s = (p[0] + p[1]) / 2;
  int spread = s % 2 == 1 ? 2 : 1;
  p[0] = s + spread;
  p[1] = s - spread;
  // The averaged hooks must stay strictly decreasing for the rest of the rules to make sense.
  DiagonalHooks averaged(p);

  for (size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] >= p[i + 1] + 4) {
      p[i + 1] += 2;
      return {DiagonalHooks(std::move(p)), GBranch::Insertion};
    }
  }
  if (p.size() == 2) return {DiagonalHooks({(n - 4) / 2, (n - 8) / 2, 5, 1}), GBranch::TwoHookFallback};
  if (p.back() == 1) return {std::nullopt, GBranch::Undefined};
  p[0] += 2;
  p[1] += 2;
  p.back() -= 2;
  return {DiagonalHooks(std::move(p)), GBranch::ShiftFallback};
}

Partition map_g(const Partition& p, int n) {
  auto r = map_g_hooks(diagonal_hooks(p), n);
  if (!r.image) throw Error(ErrorCode::OutOfDomain, "g has no image for " + p.to_string());
  return from_diagonal_hooks(*r.image);
}

Partition map_h(const Partition& b) {
  if (classify(b, b.size()).cls != GrowthClass::B) throw Error(ErrorCode::NotInB, b.to_string());
  std::vector<int> parts(b.parts().begin(), b.parts().end());
  int last = b.length();                    // last row; equals the first row's length
  int corner_row = parts[static_cast<size_t>(last - 1)];  // the last column ends in this row
  parts[static_cast<size_t>(last - 1)] -= 1;
  parts[static_cast<size_t>(corner_row - 1)] -= 1;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

DiagonalHooks beta_star(int n) {
  switch (n % 4) {
    case 0: return DiagonalHooks({(n + 2) / 2, (n - 2) / 2});
    case 1: return DiagonalHooks({(n + 1) / 2, (n - 3) / 2, 1});
    case 2: return DiagonalHooks({(n - 4) / 2, (n - 8) / 2, 5, 1});
    default: return DiagonalHooks({(n - 1) / 2, (n - 5) / 2, 3});
  }
}

namespace {

struct GrowthRow {
  std::vector<Witness> witnesses;
  nlohmann::json data;
};

GrowthRow check_n(int n, const TruncatedSeries& sc) {
  GrowthRow row;
  auto add = [&](BigInt lhs, BigInt rhs, std::string note) {
    row.witnesses.push_back({0, n, std::move(lhs), std::move(rhs), std::move(note)});
  };

  auto smaller = enumerate_diagonal_hooks(n - 2);
  auto current = enumerate_diagonal_hooks(n);

  long long a = 0, b = 0, c = 0;
  std::vector<DiagonalHooks> in_b;
  for (const auto& d : current) {
    switch (classify_hooks(d, n)) {
      case GrowthClass::A: ++a; break;
      case GrowthClass::B: ++b; in_b.push_back(d); break;
      case GrowthClass::C: ++c; break;
    }
  }
  if (BigInt(a + b + c) != sc[n]) add(a + b + c, sc[n], "class sizes do not sum to sc(n)");

  // f is injective into A_n and |A_n| = sc(n-2).
  std::map<std::vector<int>, int> f_image;
  for (const auto& d : smaller) {
    auto img = map_f_hooks(d);
    if (classify_hooks(img, n) != GrowthClass::A) add(0, 0, "f image " + img.to_string() + " not in A_n");
    ++f_image[{img.hooks().begin(), img.hooks().end()}];
  }
  if (static_cast<long long>(f_image.size()) != a || BigInt(a) != sc[n - 2]) {
    add(a, sc[n - 2], "|A_n| differs from sc(n-2) or f is not onto A_n");
  }
  if (b == 0) add(0, 1, "B_n is empty");

  // Growth inequality, cross-multiplied.
  BigInt lhs = sc[n - 2] * (n + 2), rhs = sc[n] * n;
  if (!(lhs < rhs)) add(lhs, rhs, "sc(n-2)(n+2) < sc(n) n fails");

  row.data = {{"n", n}, {"A", a}, {"B", b}, {"C", c}};
  if (n < 27) {
    row.data["g"] = "not defined below 27";
    return row;
  }

  std::map<std::vector<int>, long long> fibers;
  std::map<std::string, long long> branches;
  long long undefined = 0, single_hook = 0;
  for (const auto& d : smaller) {
    auto r = map_g_hooks(d, n);
    ++branches[std::string(to_string(r.branch))];
    if (d.count() == 1) ++single_hook;
    if (!r.image) {
      ++undefined;
      add(0, 0, "anomaly: g undefined on " + d.to_string());
      continue;
    }
    if (r.image->sum() != n || classify_hooks(*r.image, n) != GrowthClass::B) {
      add(0, 0, "g image " + r.image->to_string() + " not in B_n");
      continue;
    }
    ++fibers[{r.image->hooks().begin(), r.image->hooks().end()}];
  }
  if (n % 2 == 0 && single_hook > 0) add(single_hook, 0, "single-hook input at even n");

  long long gh_fail = 0;
  for (const auto& beta : in_b) {
    Partition back = map_h(from_diagonal_hooks(beta));
    auto r = map_g_hooks(diagonal_hooks(back), n);
    if (!r.image || *r.image != beta) {
      ++gh_fail;
      add(0, 0, "g(h(b)) != b for b = " + beta.to_string());
    }
  }

  long long max_fiber = 0;
  std::vector<int> argmax;
  for (const auto& [img, count] : fibers) {
    if (count > max_fiber) {
      max_fiber = count;
      argmax = img;
    }
  }
  DiagonalHooks argmax_hooks(argmax);
  if (!(2 * max_fiber < n)) add(2 * max_fiber, n, "fiber of " + argmax_hooks.to_string() + " is not below n/2");
  DiagonalHooks star = beta_star(n);
  long long star_fiber = fibers.count({star.hooks().begin(), star.hooks().end()})
                             ? fibers[{star.hooks().begin(), star.hooks().end()}]
                             : 0;
  bool star_is_max = star_fiber == max_fiber;
  if (!star_is_max) add(max_fiber, star_fiber, "anomaly: beta* fiber is not the largest");

  row.data["max_fiber"] = max_fiber;
  row.data["argmax"] = argmax_hooks.to_string();
  row.data["beta_star"] = star.to_string();
  row.data["beta_star_fiber"] = star_fiber;
  row.data["beta_star_is_max"] = star_is_max;
  row.data["g_undefined"] = undefined;
  row.data["gh_failures"] = gh_fail;
  row.data["branches"] = branches;
  return row;
}

}  // namespace

ScanReport verify_growth(int n_lo, int n_hi, int workers) {
  ScanReport report;
  report.scan = "growth";
  report.params = {{"n_lo", n_lo}, {"n_hi", n_hi}};
  ScanTimer timer(report);
  if (n_lo < 19) throw Error(ErrorCode::OutOfDomain, "growth checks start at n = 19");
  if (n_hi < n_lo) {
    report.finalize();
    return report;
  }
  auto sc = default_store().sc(n_hi);
  size_t count = static_cast<size_t>(n_hi - n_lo + 1);
  std::vector<GrowthRow> rows(count);
  parallel_for(count, workers, [&](size_t i) { rows[i] = check_n(n_lo + static_cast<int>(i), *sc); });

  nlohmann::json per_n = nlohmann::json::array();
  std::vector<int> two_hook_fallback;
  for (auto& r : rows) {
    for (auto& w : r.witnesses) report.witnesses.push_back(std::move(w));
    if (r.data.contains("branches") && r.data["branches"].contains("two-hook-fallback")) {
      two_hook_fallback.push_back(r.data["n"].get<int>());
    }
    per_n.push_back(std::move(r.data));
  }
  report.data = {{"per_n", per_n}, {"two_hook_fallback_n", two_hook_fallback}};
  report.finalize();
  return report;
}

}  // namespace sccore
