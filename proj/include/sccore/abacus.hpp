#pragma once

#include <span>
#include <string>
#include <vector>

#include "sccore/partition.hpp"

namespace sccore {

/// Strictly decreasing bead positions on an abacus.
class BetaSet {
 public:
  BetaSet() = default;
  /// Throws InvalidArgument unless strictly decreasing and non-negative.
  explicit BetaSet(std::vector<int> beads);

  std::span<const int> beads() const noexcept { return beads_; }
  int length() const noexcept { return static_cast<int>(beads_.size()); }
  bool has_bead(int position) const;

  friend bool operator==(const BetaSet&, const BetaSet&) = default;

 private:
  std::vector<int> beads_;
};

/// A t-quotient: one partition per runner, runner order.
class Quotient {
 public:
  Quotient() = default;
  explicit Quotient(std::vector<Partition> components);

  std::span<const Partition> components() const noexcept { return components_; }
  int t() const noexcept { return static_cast<int>(components_.size()); }
  const Partition& operator[](size_t k) const { return components_.at(k); }
  int total_size() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Quotient&, const Quotient&) = default;

 private:
  std::vector<Partition> components_;
};

/// beads[k] = parts[k] + m - 1 - k, parts padded with zeros to length m.
/// Throws LengthTooSmall if m < p.length().
BetaSet beta_set(const Partition& p, int m);
Partition partition_of(const BetaSet& b);

/// Removes the rim hook through the 1-based cell (i, j); throws OutOfDiagram.
Partition remove_hook(const Partition& p, int i, int j);

Partition t_core(const Partition& p, int t);

/// Runner k of a beta-set whose length is a multiple of t carries
/// the beads congruent to k mod t; component k is the partition read off runner k.
/// With this convention the 5-quotient of the partition with diagonal hooks
/// (29,15) is ((1,1), (), (2,1), (), (2)).
Quotient t_quotient(const Partition& p, int t);

/// Inverse of (t_core, t_quotient). Throws NotACore, InvalidArgument.
Partition assemble(const Partition& core, const Quotient& q, int t);

/// True iff component k is the conjugate of component t-1-k for every k.
bool quotient_is_self_symmetric(const Quotient& q);

struct HookCell {
  int row = 0;
  int col = 0;
  friend bool operator==(const HookCell&, const HookCell&) = default;
};

enum class ReductionKind { OffDiagonalPair, DiagonalHook };

struct ReductionStep {
  Partition result;
  ReductionKind kind = ReductionKind::OffDiagonalPair;
  /// Cells of the removed hooks, each in the partition it was removed from.
  /// Two entries for a pair (second refers to the intermediate partition), one for a diagonal hook.
  std::vector<HookCell> cells;
};

/// Removes either a conjugate pair of off-diagonal t-hooks or (odd t) one diagonal
/// t-hook, keeping the result self-conjugate. Diagonal removal is preferred when
/// available; otherwise the pair with the smallest row index is used.
/// Throws NotSelfConjugate, AlreadyCore.
ReductionStep sc_reduction_step(const Partition& p, int t);

}  // namespace sccore
