#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sccore/common.hpp"

namespace sccore {

/// Integer power series truncated after q^order.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(int order);
  /// Order is coeffs.size() - 1; coeffs must be non-empty.
  explicit TruncatedSeries(std::vector<BigInt> coeffs);

  static TruncatedSeries one(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of q^n; zero for n < 0, OutOfRange for n > order().
  const BigInt& operator[](int n) const;

  /// Multiply in place by (1 + sign q^k). O(order).
  TruncatedSeries& mul_binomial(int k, int sign);
  /// Divide in place by (1 + sign q^k), i.e. multiply by its truncated inverse. O(order).
  TruncatedSeries& div_binomial(int k, int sign);

  /// Multiply / divide in place by prod_{n>=1} (1 - q^{m n}), using the pentagonal expansion.
  TruncatedSeries& mul_euler(int m);
  TruncatedSeries& div_euler(int m);
  /// Multiply in place by prod_{n>=1} (1 - q^{m n})^e for any integer e.
  TruncatedSeries& mul_euler_power(int m, int e);

  TruncatedSeries truncated(int order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Exact convolution truncated at the common order; orders must match.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// prod_{n>=1} (1 + sign q^{step n + offset})^exponent, truncated at order.
/// Requires step >= 1 and step + offset >= 1; exponent may be negative.
TruncatedSeries binomial_factor(int sign, int step, int offset, int exponent, int order);

/// Nonzero terms (exponent, sign) of prod_{n>=1} (1 - q^{m n}) up to q^order.
std::vector<std::pair<int, int>> pentagonal_terms(int m, int order);

/// prod_{n>=1} (1 - q^{m n})^e truncated at order.
TruncatedSeries euler_power(int m, int e, int order);

/// Self-conjugate partition counts: prod (1 + q^{2n-1}).
TruncatedSeries sc_coeffs(int order);
/// t-core counts: prod (1 - q^{nt})^t / (1 - q^n). t >= 1.
TruncatedSeries c_t_coeffs(int t, int order);
/// Self-conjugate t-core counts, t >= 2 (UnsupportedT otherwise).
TruncatedSeries sc_t_coeffs(int t, int order);
/// Number of t-tuples of partitions of total size n: prod (1 - q^n)^{-t}. t >= 1.
TruncatedSeries phat_coeffs(int t, int order);
/// Partition numbers.
TruncatedSeries p_coeffs(int order);

/// The same self-conjugate t-core series built literally factor by factor from
/// prod (1 - q^{2tn})^e (1 + q^{2n-1}) [/ (1 + q^{t(2n-1)})]. Quadratic; used as a
/// second route in tests and cross-validation.
TruncatedSeries sc_t_coeffs_factorwise(int t, int order);

enum class Family { Sc, ScT, CT, Phat, P };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view s);
/// True for families indexed by t.
bool family_has_t(Family f);

/// Computes a family's series directly (no caching).
TruncatedSeries compute_family(Family f, int t, int order);

/// Optional persistent layer consulted by SeriesStore.
class SeriesBackend {
 public:
  virtual ~SeriesBackend() = default;
  virtual std::optional<TruncatedSeries> load(Family f, int t, int min_order) = 0;
  virtual void store(Family f, int t, const TruncatedSeries& s) = 0;
};

/// Thread-safe memo of computed series. get() returns a series of order >= requested.
class SeriesStore {
 public:
  SeriesStore() = default;
  explicit SeriesStore(std::shared_ptr<SeriesBackend> backend) : backend_(std::move(backend)) {}

  std::shared_ptr<const TruncatedSeries> get(Family f, int t, int order);

  std::shared_ptr<const TruncatedSeries> sc(int order) { return get(Family::Sc, 0, order); }
  std::shared_ptr<const TruncatedSeries> sc_t(int t, int order) { return get(Family::ScT, t, order); }
  std::shared_ptr<const TruncatedSeries> c_t(int t, int order) { return get(Family::CT, t, order); }
  std::shared_ptr<const TruncatedSeries> phat(int t, int order) { return get(Family::Phat, t, order); }
  std::shared_ptr<const TruncatedSeries> p(int order) { return get(Family::P, 0, order); }

  void clear();
  void set_backend(std::shared_ptr<SeriesBackend> backend);

 private:
  std::mutex mu_;
  std::map<std::pair<Family, int>, std::shared_ptr<const TruncatedSeries>> memo_;
  std::shared_ptr<SeriesBackend> backend_;
};

/// Process-wide store used by the analytics and formulas modules.
SeriesStore& default_store();
/// Replace the default store's backend (e.g. with an on-disk cache). Clears the memo.
void set_default_backend(std::shared_ptr<SeriesBackend> backend);

}  // namespace sccore
