#include "sccore/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sccore {

namespace {

// p(80) is about 1.6e7; anything past this is not a sensible oracle.
constexpr int kAllPartitionsHardCap = 80;

std::string join(std::span<const int> xs) {
  std::ostringstream os;
  os << '(';
  for (size_t k = 0; k < xs.size(); ++k) {
    if (k) os << ',';
    os << xs[k];
  }
  os << ')';
  return os.str();
}

void check_cap(int n, int cap, const char* what) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": negative n");
  if (n > cap) {
    throw Error(ErrorCode::ResourceLimit,
                std::string(what) + ": n = " + std::to_string(n) + " exceeds oracle cap " +
                    std::to_string(cap));
  }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

void odd_distinct_rec(int remaining, int max_part, std::vector<int>& cur,
                      std::vector<DiagonalHooks>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  int k = std::min(remaining, max_part);
  if (k % 2 == 0) --k;
  for (; k >= 1; k -= 2) {
    cur.push_back(k);
    odd_distinct_rec(remaining - k, k - 2, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw Error(ErrorCode::InvalidPartition, "non-positive part in " + join(parts_));
    if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1]) {
      throw Error(ErrorCode::InvalidPartition, "parts not weakly decreasing in " + join(parts_));
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const { return join(parts_); }

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

DiagonalHooks::DiagonalHooks(std::vector<int> hooks) : hooks_(std::move(hooks)) {
  for (size_t k = 0; k < hooks_.size(); ++k) {
    if (hooks_[k] < 1 || hooks_[k] % 2 == 0) {
      throw Error(ErrorCode::InvalidHooks, "diagonal hooks must be positive odd: " + join(hooks_));
    }
    if (k + 1 < hooks_.size() && hooks_[k] <= hooks_[k + 1]) {
      throw Error(ErrorCode::InvalidHooks, "diagonal hooks must strictly decrease: " + join(hooks_));
    }
  }
}

int DiagonalHooks::sum() const noexcept { return std::accumulate(hooks_.begin(), hooks_.end(), 0); }

std::string DiagonalHooks::to_string() const { return join(hooks_); }

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> cols(static_cast<size_t>(p.row(1)), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++cols[static_cast<size_t>(j)];
  }
  return Partition(std::move(cols));
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

DiagonalHooks diagonal_hooks(const Partition& p) {
  if (!is_self_conjugate(p)) {
    throw Error(ErrorCode::NotSelfConjugate, p.to_string() + " is not self-conjugate");
  }
  std::vector<int> hooks;
  for (int i = 1; p.row(i) >= i; ++i) hooks.push_back(2 * (p.row(i) - i) + 1);
  return DiagonalHooks(std::move(hooks));
}

Partition from_diagonal_hooks(const DiagonalHooks& dh) {
  const int d = dh.count();
  std::vector<int> rows;
  rows.reserve(static_cast<size_t>(d));
  for (int i = 1; i <= d; ++i) rows.push_back(i + (dh[static_cast<size_t>(i - 1)] - 1) / 2);
  // Rows below the Durfee square are the column lengths of the arms.
  for (int i = d + 1;; ++i) {
    int c = 0;
    for (int k = 0; k < d; ++k) c += rows[static_cast<size_t>(k)] >= i ? 1 : 0;
    if (c == 0) break;
    rows.push_back(c);
  }
  return Partition(std::move(rows));
}

int hook_length(const Partition& p, int i, int j) {
  if (!p.contains(i, j)) {
    throw Error(ErrorCode::OutOfDiagram, "(" + std::to_string(i) + "," + std::to_string(j) +
                                             ") is not a cell of " + p.to_string());
  }
  int leg = 0;
  while (p.row(i + leg + 1) >= j) ++leg;
  return (p.row(i) - j) + leg + 1;
}

HookGrid::HookGrid(const Partition& p) {
  const Partition c = conjugate(p);
  rows_.resize(static_cast<size_t>(p.length()));
  for (int i = 1; i <= p.length(); ++i) {
    auto& r = rows_[static_cast<size_t>(i - 1)];
    r.reserve(static_cast<size_t>(p.row(i)));
    for (int j = 1; j <= p.row(i); ++j) r.push_back((p.row(i) - j) + (c.row(j) - i) + 1);
  }
}

int HookGrid::at(int i, int j) const {
  if (i < 1 || i > rows() || j < 1 || j > static_cast<int>(rows_[static_cast<size_t>(i - 1)].size())) {
    throw Error(ErrorCode::OutOfDiagram, "cell outside hook grid");
  }
  return rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
}

std::span<const int> HookGrid::row(int i) const {
  if (i < 1 || i > rows()) throw Error(ErrorCode::OutOfDiagram, "row outside hook grid");
  return rows_[static_cast<size_t>(i - 1)];
}

HookGrid hook_grid(const Partition& p) { return HookGrid(p); }

bool is_t_core(const Partition& p, int t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  const HookGrid grid(p);
  for (int i = 1; i <= grid.rows(); ++i) {
    for (int h : grid.row(i)) {
      if (h == t) return false;
    }
  }
  return true;
}

std::vector<Partition> enumerate_partitions(int n) {
  check_cap(n, std::min(oracle_cap(), kAllPartitionsHardCap), "enumerate_partitions");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<DiagonalHooks> enumerate_diagonal_hooks(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative n");
  std::vector<DiagonalHooks> out;
  std::vector<int> cur;
  odd_distinct_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> enumerate_self_conjugate(int n) {
  check_cap(n, oracle_cap(), "enumerate_self_conjugate");
  std::vector<Partition> out;
  for (const auto& dh : enumerate_diagonal_hooks(n)) out.push_back(from_diagonal_hooks(dh));
  return out;
}

std::vector<Partition> enumerate_self_conjugate_t_core(int n, int t) {
  std::vector<Partition> out;
  for (auto& p : enumerate_self_conjugate(n)) {
    if (is_t_core(p, t)) out.push_back(std::move(p));
  }
  return out;
}

BigInt character_degree(const Partition& p) {
  BigInt num = 1;
  for (int k = 2; k <= p.size(); ++k) num *= k;
  BigInt den = 1;
  const HookGrid grid(p);
  for (int i = 1; i <= grid.rows(); ++i) {
    for (int h : grid.row(i)) den *= h;
  }
  return num / den;
}

}  // namespace sccore
