#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sccore/common.hpp"

namespace sccore {

/// A weakly decreasing sequence of positive integers. Immutable once built.
class Partition {
 public:
  Partition() = default;

  /// Throws InvalidPartition unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Row length, 1-based; rows past the end have length 0.
  int row(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
  }

  /// True iff (i, j) is a cell of the Young diagram (1-based).
  bool contains(int i, int j) const noexcept { return j >= 1 && j <= row(i); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Diagonal hook lengths of a self-conjugate partition: strictly decreasing odd integers.
class DiagonalHooks {
 public:
  DiagonalHooks() = default;

  /// Throws InvalidHooks unless strictly decreasing, positive and odd.
  explicit DiagonalHooks(std::vector<int> hooks);

  std::span<const int> hooks() const noexcept { return hooks_; }
  int count() const noexcept { return static_cast<int>(hooks_.size()); }
  int sum() const noexcept;
  int operator[](size_t i) const { return hooks_.at(i); }

  std::string to_string() const;

  friend bool operator==(const DiagonalHooks&, const DiagonalHooks&) = default;

 private:
  std::vector<int> hooks_;
};

/// Hook lengths h[i][j] for every cell, stored row by row (0-based storage).
class HookGrid {
 public:
  explicit HookGrid(const Partition& p);

  /// 1-based access; throws OutOfDiagram.
  int at(int i, int j) const;
  std::span<const int> row(int i) const;
  int rows() const noexcept { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::vector<int>> rows_;
};

Partition conjugate(const Partition& p);
bool is_self_conjugate(const Partition& p);

/// Throws NotSelfConjugate.
DiagonalHooks diagonal_hooks(const Partition& p);
Partition from_diagonal_hooks(const DiagonalHooks& dh);

/// Arm + leg + 1 at the 1-based cell (i, j); throws OutOfDiagram.
int hook_length(const Partition& p, int i, int j);
HookGrid hook_grid(const Partition& p);

/// True iff no cell has hook length exactly t.
bool is_t_core(const Partition& p, int t);

/// All partitions of n in reverse lexicographic order. Bounded by oracle_cap().
std::vector<Partition> enumerate_partitions(int n);

/// Self-conjugate partitions of n, generated from distinct odd part sets.
/// Ordered reverse-lexicographically by diagonal hooks. Bounded by oracle_cap().
std::vector<Partition> enumerate_self_conjugate(int n);
std::vector<Partition> enumerate_self_conjugate_t_core(int n, int t);

/// All strictly decreasing odd sequences summing to n, largest first.
std::vector<DiagonalHooks> enumerate_diagonal_hooks(int n);

/// n! / product of hook lengths.
BigInt character_degree(const Partition& p);

}  // namespace sccore
