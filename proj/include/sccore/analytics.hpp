#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sccore/common.hpp"
#include "sccore/report.hpp"
#include "sccore/series.hpp"

namespace sccore {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "19/10", "1.9", "3" or "-2.25" exactly. InvalidArgument otherwise.
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& r);

/// sc_t(n) extended with sc_0 = sc_1 = [n = 0]. Reads the default store.
BigInt sc_t_value(int t, int n);
/// c_t(n) with c_1 = [n = 0] (which the series gives anyway).
BigInt c_t_value(int t, int n);

// ------------------------------------------------------------------ positivity

/// {n <= n_max : sc_t(n) = 0}.
std::vector<int> zero_set(int t, int n_max);

/// True when n has a prime p = 3 (mod 4) to an odd power. m >= 1.
bool has_odd_power_of_3mod4_prime(long long m);

/// Which argument the 5-core criterion is applied to.
enum class FiveCoreReading { OnN, OnNPlusOne };

/// Whether the known (or conjectured) characterization predicts sc_t(n) = 0.
/// t = 6 uses the conjectured set {2, 12, 13, 73}; t = 8 and t >= 10 use {2}.
/// NoKnownCharacterization for t < 2.
bool predicted_zero(int t, long long n, FiveCoreReading reading = FiveCoreReading::OnNPlusOne);

/// Compares zero_set(t, n_max) with the predicate. Witnesses are the symmetric difference
/// (lhs = sc_t(n), rhs = predicted-zero flag). For t = 5 both readings are tested; data
/// records which one matches and the witnesses come from the matching one (or from the
/// printed reading if neither or both match).
ScanReport characterization_check(int t, int n_max);

// ------------------------------------------------------------------ monotonicity

enum class MonotoneFamily { ScEven, ScOdd, C, NscOdd };
std::string_view to_string(MonotoneFamily f);
std::optional<MonotoneFamily> monotone_family_from_string(std::string_view s);

/// Scans the conjectured window of the family up to n_max. Violations are witnesses with
/// t = the smaller index, lhs = value at the larger index, rhs = value at the smaller one.
/// For sc families, comparisons outside the window (t >= 4 even / t >= 7 odd, below the
/// same upper bound) where the larger index does not win are reported as anomalies.
ScanReport monotonicity_scan(MonotoneFamily family, int n_max, int workers = 1);

/// The large-t windows with proven formulas: sc_{T+2}(n) > sc_T(n) for even T with
/// n/4 < T <= 2 floor(n/4) - 4, and for odd T with n >= 48, n/3 < T <= n - 17.
ScanReport large_window_check(bool odd, int n_max);

/// Odd T >= 11, 2T <= n, n <= n_hi, where sc_{T+2}(n) <= sc_T(n). Notes are
/// "anomaly: equal" or "anomaly: less".
std::vector<Witness> small_n_odd_anomalies(int n_hi);

/// Where sc_big(n) = sc_small(n) and where sc_big(n) < sc_small(n), n in [n_lo, n_hi].
struct PairComparison {
  std::vector<int> equal;
  std::vector<int> less;
};
PairComparison compare_pair(int t_small, int t_big, int n_lo, int n_hi);

// ------------------------------------------------------------------ distributions

enum class DistFamily { Pi, SigmaEven, SigmaOdd };
std::string_view to_string(DistFamily f);
std::optional<DistFamily> dist_family_from_string(std::string_view s);

/// pi_t(n) = (c_{t+1} - c_t)(n) / p(n) for t >= 1; sigma_t(n) = (sc_{t+2} - sc_t)(n) / sc(n),
/// with even t from 0 or odd t from 1. Indices run until the terms vanish (t > n).
struct DistributionRow {
  int n = 0;
  DistFamily family = DistFamily::Pi;
  std::vector<std::pair<int, Rational>> values;
};

/// The pi row, plus the sigma rows when sc(n) > 0. n >= 1.
std::vector<DistributionRow> distribution_table(int n);
DistributionRow distribution_row(DistFamily family, int n);

/// Whether each of the three rows sums to exactly 1. UndefinedAtN when sc(n) = 0.
std::array<bool, 3> telescoping_check(int n);
/// telescoping_check over [n_lo, n_hi], skipping n with sc(n) = 0 (recorded in data).
ScanReport distribution_scan(int n_lo, int n_hi);

/// Weak single-peak test: x_0 <= ... <= x_T >= ... >= x_r. Returns the first index i
/// where the shape breaks (x_i < x_{i+1} after a descent), or nullopt if unimodal.
template <class T>
std::optional<size_t> unimodal_break(const std::vector<T>& x) {
  size_t i = 0;
  while (i + 1 < x.size() && x[i] <= x[i + 1]) ++i;
  while (i + 1 < x.size() && x[i] >= x[i + 1]) ++i;
  if (i + 1 >= x.size()) return std::nullopt;
  return i;
}

/// Index window of the unimodality conjecture for the family at n (empty if n is below
/// the family's starting n): pi 4..n-7 (n >= 63); sigma_even 8..2 floor(n/4) - 8 (n >= 139);
/// sigma_odd 9..floor(n/2) (n >= 213), odd indices only.
std::vector<int> unimodality_window(DistFamily family, int n);
ScanReport unimodality_scan(DistFamily family, int n_lo, int n_hi, int workers = 1);

// ------------------------------------------------------------------ identities

/// sc_t(a n + b) = sc_t(a2 n + b2).
struct IdentitySpec {
  int t, a, b, a2, b2;
  std::string label() const;
};
/// The five known sc identities.
std::vector<IdentitySpec> identity_catalog();
/// Checks every 0 <= n <= n_max where both arguments are non-negative.
ScanReport identity_check(const IdentitySpec& spec, int n_max);

/// f_t(a n + b) > alpha f_t(n) (or >= when !strict) for n in [n_lo, n_max], f = sc_t or c_t.
struct InequalitySpec {
  Family family;
  int t, a, b;
  Rational alpha;
  int n_lo;
  bool strict;
  std::string label() const;
};
std::vector<InequalitySpec> inequality_catalog();
ScanReport inequality_check(const InequalitySpec& spec, int n_max);

// ------------------------------------------------------------------ simultaneous cores

struct SimultaneousCounts {
  int s = 0, t = 0;
  BigInt count;     // binom(s + t, t) / (s + t)
  BigInt sc_count;  // binom(floor(s/2) + floor(t/2), floor(t/2))
  long long max_size = 0;  // (s^2 - 1)(t^2 - 1) / 24
  /// Filled when the enumeration ran.
  std::optional<long long> enumerated_count, enumerated_sc_count, enumerated_max_size;
  /// True when every partition up to max_size was also checked directly.
  bool brute_force = false;
};

/// NotCoprime unless gcd(s, t) = 1; InvalidArgument unless s, t >= 2.
/// Enumerates subsets of the gaps of the semigroup generated by s and t, keeps those
/// closed under subtracting s and t, and checks each resulting partition's hooks
/// directly. When max_size <= brute_force_limit every partition up to max_size is
/// also tested. ResourceLimit if there are more than 24 gaps.
SimultaneousCounts simultaneous_counts(int s, int t, int brute_force_limit = 30);
/// All coprime 2 <= s < t <= t_max; witnesses on any mismatch.
ScanReport simultaneous_scan(int t_max, int brute_force_limit = 30);

}  // namespace sccore
