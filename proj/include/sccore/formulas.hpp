#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "sccore/common.hpp"
#include "sccore/report.hpp"
#include "sccore/series.hpp"

namespace sccore {

/// Grid of counts indexed by (t, n) for t in [t_min, t_max], n in [0, n_max].
/// Cells outside the populated region (n < t - 2 for the sc_t table) are empty.
class CountTable {
 public:
  CountTable(Family family, int t_min, int t_max, int n_max);

  Family family() const noexcept { return family_; }
  int t_min() const noexcept { return t_min_; }
  int t_max() const noexcept { return t_max_; }
  int n_max() const noexcept { return n_max_; }

  void set(int t, int n, BigInt v);
  /// Empty optional for unpopulated cells; OutOfRange outside the grid.
  const std::optional<BigInt>& at(int t, int n) const;

 private:
  size_t index(int t, int n) const;
  Family family_;
  int t_min_, t_max_, n_max_;
  std::vector<std::optional<BigInt>> cells_;
};

/// sc_t(n) for 2 <= t <= t_max, with row t populated from n = max(0, t - 2) through n_max.
CountTable build_sc_table(int t_max, int n_max);

/// Lookup tables needed by the recursions: sc(m) and phat_h(m) for h = half of the core size.
struct RecursionTables {
  std::shared_ptr<const TruncatedSeries> sc;
  std::shared_ptr<const TruncatedSeries> phat;
};

/// Tables from the default store covering sc up to n and phat_{half_t} up to n.
RecursionTables recursion_tables(int half_t, int n);

/// Memoized dynamic program for sc_T(m), m = 0, 1, ... where T = 2h (even) or 2h + 1 (odd).
class ScRecursion {
 public:
  /// core_size >= 2. Tables must belong to half_t = core_size / 2.
  ScRecursion(int core_size, RecursionTables tables);

  /// MissingTable if the lookup tables do not reach the indices needed for n.
  const BigInt& operator()(int n);
  int core_size() const noexcept { return core_; }

 private:
  BigInt step(int n) const;
  int core_;
  RecursionTables tables_;
  std::vector<BigInt> memo_;
};

/// sc_{2t}(n) by  sc(n) - sum_{1<=i<=n/4t} sc_{2t}(n - 4it) phat_t(i).
BigInt sc_even_recursive(int t, int n, const RecursionTables& tables);
BigInt sc_even_recursive(int t, int n);
/// sc_{2t+1}(n) by  sc(n) - sum_{1<=2i+j<=n/(2t+1)} sc_{2t+1}(n-(2i+j)(2t+1)) phat_t(i) sc(j).
BigInt sc_odd_recursive(int t, int n, const RecursionTables& tables);
BigInt sc_odd_recursive(int t, int n);

/// Default cap on the composition total (floor(n/4t) or floor(n/(2t+1))) in the closed forms.
inline constexpr int kDefaultCompositionBudget = 12;

/// Signed sum over compositions I with |I| <= n/4t of (-1)^k prod phat_t(i_l) sc(n - 4|I|t).
BigInt sc_even_closed(int t, int n, int budget = kDefaultCompositionBudget);
/// Signed sum over paired sequences (I, J), i_l + j_l >= 1, 2|I| + |J| <= n/(2t+1).
BigInt sc_odd_closed(int t, int n, int budget = kDefaultCompositionBudget);
/// Composition total the closed form for core size T would need at n.
int closed_form_depth(int core_size, int n);

enum class LargeFormula {
  ExceedsSize,        // T > n: no hook of length T fits
  EvenAboveHalf,      // T even, T > n/2: sc(n)
  EvenQuarterFloor,   // T = 2 floor(n/4), n >= 4
  EvenQuarterFloorM2, // T = 2 floor(n/4) - 2, n >= 12
  EvenQuarterToHalf,  // T even, n/4 < T <= n/2: sc(n) - (T/2) sc(n - 2T)
  OddHalfToFull,      // T odd, n/2 < T <= n: sc(n) - sc(n - T)
  OddThirdToHalf,     // T odd, n/3 < T <= n/2: sc(n) - sc(n - T) - (t - 1) sc(n - 2T), T = 2t + 1
};

std::string_view to_string(LargeFormula f);
inline constexpr LargeFormula kAllLargeFormulas[] = {
    LargeFormula::ExceedsSize,        LargeFormula::EvenAboveHalf,    LargeFormula::EvenQuarterFloor,
    LargeFormula::EvenQuarterFloorM2, LargeFormula::EvenQuarterToHalf, LargeFormula::OddHalfToFull,
    LargeFormula::OddThirdToHalf};

struct LargeResult {
  BigInt value;
  LargeFormula formula;
};

/// Whether the formula's validity range contains (T, n).
bool large_applies(LargeFormula f, int core_size, int n);
/// Evaluates one specific formula; OutOfRange if (T, n) is outside its range.
BigInt evaluate_large(LargeFormula f, int core_size, int n);
/// Tries the quarter-floor special cases first, then the even ranges, the odd ranges
/// and finally T > n. Reports the formula used; OutOfRange if none applies.
LargeResult sc_large(int core_size, int n);

struct CrossValidateOptions {
  int workers = 1;
  /// Largest n for the brute-force oracle; further capped by oracle_cap().
  int oracle_max_n = 60;
  int composition_budget = kDefaultCompositionBudget;
};

/// Compares series, recursion, closed form, large-t formulas and the oracle on every
/// cell 2 <= T <= t_max, 0 <= n <= n_max. Disagreements become witnesses.
ScanReport cross_validate(int t_max, int n_max, const CrossValidateOptions& opts = {});

}  // namespace sccore
