#pragma once

#include <optional>
#include <string_view>

#include "sccore/partition.hpp"
#include "sccore/report.hpp"

namespace sccore {

/// A: delta_1 - delta_2 >= 4, or a single hook of odd size n.
/// B: delta_1 = delta_2 + 2, excluding the k x k square.
/// C: everything else.
enum class GrowthClass { A, B, C };

std::string_view to_string(GrowthClass c);

struct ClassifiedSC {
  Partition partition;
  GrowthClass cls;
};

/// Throws NotSelfConjugate, or InvalidArgument if |p| != n.
ClassifiedSC classify(const Partition& p, int n);
GrowthClass classify_hooks(const DiagonalHooks& d, int n);

/// Adds a box to the first row and the first column: SC(n-2) -> A_n.
Partition map_f(const Partition& p);
DiagonalHooks map_f_hooks(const DiagonalHooks& d);

/// Which rule of g produced the image.
enum class GBranch {
  SingleHook,      // one diagonal hook: fixed image depending on n mod 4
  Insertion,       // first gap of >= 4 after averaging: grow hook i+1 by 2
  TwoHookFallback, // two hooks and no gap: ((n-4)/2, (n-8)/2, 5, 1)
  ShiftFallback,   // three or more hooks, no gap: (d1'+2, d2'+2, ..., dd'-2)
  Undefined,       // shift fallback with last averaged hook 1; no valid image
};

std::string_view to_string(GBranch b);

struct GResult {
  std::optional<DiagonalHooks> image;
  GBranch branch;
};

/// g on diagonal hooks of a self-conjugate partition of n - 2. n >= 27 (OutOfDomain otherwise).
/// Never throws for shapes the rules do not cover; returns Undefined instead.
GResult map_g_hooks(const DiagonalHooks& d, int n);
/// Partition form; throws OutOfDomain for n < 27 or when g is undefined on p.
Partition map_g(const Partition& p, int n);

/// Removes the last box of the last row and of the last column. Throws NotInB.
Partition map_h(const Partition& b);

/// Diagonal hooks of the fiber maximizer claimed for each n mod 4.
DiagonalHooks beta_star(int n);

/// Checks, per n in [n_lo, n_hi]: |A_n| = sc(n-2); B_n nonempty; classes cover SC(n);
/// for n >= 27 that g lands in B_n, g(h(b)) = b on B_n, every fiber is below n/2, and the
/// argmax fiber against beta_star; sc(n-2)(n+2) < sc(n) n. Parallel over n.
ScanReport verify_growth(int n_lo, int n_hi, int workers = 1);

}  // namespace sccore
