#include "sccore/abacus.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sccore {

BetaSet::BetaSet(std::vector<int> beads) : beads_(std::move(beads)) {
  for (size_t k = 0; k < beads_.size(); ++k) {
    if (beads_[k] < 0 || (k + 1 < beads_.size() && beads_[k] <= beads_[k + 1])) {
      throw Error(ErrorCode::InvalidArgument, "beads must be strictly decreasing and non-negative");
    }
  }
}

bool BetaSet::has_bead(int position) const {
  return std::binary_search(beads_.begin(), beads_.end(), position, std::greater<>());
}

Quotient::Quotient(std::vector<Partition> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorCode::InvalidArgument, "a quotient needs t >= 1 components");
}

int Quotient::total_size() const noexcept {
  int s = 0;
  for (const auto& c : components_) s += c.size();
  return s;
}

std::string Quotient::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t k = 0; k < components_.size(); ++k) {
    if (k) os << ',';
    os << components_[k];
  }
  os << ')';
  return os.str();
}

BetaSet beta_set(const Partition& p, int m) {
  if (m < p.length()) {
    throw Error(ErrorCode::LengthTooSmall,
                "beta-set length " + std::to_string(m) + " < " + std::to_string(p.length()) + " parts");
  }
  std::vector<int> beads(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) beads[static_cast<size_t>(k)] = p.row(k + 1) + m - 1 - k;
  return BetaSet(std::move(beads));
}

Partition partition_of(const BetaSet& b) {
  const int m = b.length();
  std::vector<int> parts;
  for (int k = 0; k < m; ++k) {
    const int part = b.beads()[static_cast<size_t>(k)] - (m - 1 - k);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Partition remove_hook(const Partition& p, int i, int j) {
  const int h = hook_length(p, i, j);
  const BetaSet b = beta_set(p, p.length());
  std::vector<int> beads(b.beads().begin(), b.beads().end());
  // With m = #parts the bead of row i sits at h_{i1}, so the target is never negative.
  beads[static_cast<size_t>(i - 1)] -= h;
  std::sort(beads.begin(), beads.end(), std::greater<>());
  return partition_of(BetaSet(std::move(beads)));
}

Partition t_core(const Partition& p, int t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  const BetaSet b = beta_set(p, p.length());
  std::vector<int> per_runner(static_cast<size_t>(t), 0);
  for (int x : b.beads()) ++per_runner[static_cast<size_t>(x % t)];
  std::vector<int> beads;
  for (int r = 0; r < t; ++r) {
    for (int level = 0; level < per_runner[static_cast<size_t>(r)]; ++level) beads.push_back(r + t * level);
  }
  std::sort(beads.begin(), beads.end(), std::greater<>());
  return partition_of(BetaSet(std::move(beads)));
}

Quotient t_quotient(const Partition& p, int t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  const int m = (p.length() + t - 1) / t * t;
  const BetaSet b = beta_set(p, m);
  std::vector<Partition> comps;
  comps.reserve(static_cast<size_t>(t));
  for (int r = 0; r < t; ++r) {
    std::vector<int> levels;
    for (int x : b.beads()) {
      if (x % t == r) levels.push_back((x - r) / t);
    }
    comps.push_back(partition_of(BetaSet(std::move(levels))));
  }
  return Quotient(std::move(comps));
}

Partition assemble(const Partition& core, const Quotient& q, int t) {
  if (q.t() != t) {
    throw Error(ErrorCode::InvalidArgument, "quotient has " + std::to_string(q.t()) + " components, expected " +
                                                std::to_string(t));
  }
  if (!is_t_core(core, t)) throw Error(ErrorCode::NotACore, core.to_string() + " is not a " + std::to_string(t) + "-core");

  int longest = 0;
  for (const auto& c : q.components()) longest = std::max(longest, c.length());
  const int m = t * ((core.length() + t - 1) / t + longest);
  const BetaSet b = beta_set(core, m);

  std::vector<int> beads;
  beads.reserve(static_cast<size_t>(m));
  for (int r = 0; r < t; ++r) {
    int count = 0;
    for (int x : b.beads()) count += (x % t == r) ? 1 : 0;
    const Partition& comp = q[static_cast<size_t>(r)];
    // A core's runners are packed from level 0, so `count` beads rebuild any
    // component of length <= count.
    for (int k = 0; k < count; ++k) beads.push_back(r + t * (comp.row(k + 1) + count - 1 - k));
  }
  std::sort(beads.begin(), beads.end(), std::greater<>());
  return partition_of(BetaSet(std::move(beads)));
}

bool quotient_is_self_symmetric(const Quotient& q) {
  const int t = q.t();
  for (int k = 0; k < t; ++k) {
    if (q[static_cast<size_t>(k)] != conjugate(q[static_cast<size_t>(t - 1 - k)])) return false;
  }
  return true;
}

ReductionStep sc_reduction_step(const Partition& p, int t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  if (!is_self_conjugate(p)) throw Error(ErrorCode::NotSelfConjugate, p.to_string() + " is not self-conjugate");
  if (is_t_core(p, t)) throw Error(ErrorCode::AlreadyCore, p.to_string() + " is already a " + std::to_string(t) + "-core");

  const HookGrid grid(p);
  if (t % 2 == 1) {
    for (int i = 1; p.row(i) >= i; ++i) {
      if (grid.at(i, i) == t) {
        Partition r = remove_hook(p, i, i);
        if (is_self_conjugate(r)) return {std::move(r), ReductionKind::DiagonalHook, {{i, i}}};
      }
    }
  }
  for (int i = 1; i <= p.length(); ++i) {
    for (int j = i + 1; j <= p.row(i); ++j) {
      if (grid.at(i, j) != t) continue;
      const Partition mid = remove_hook(p, i, j);
      const HookGrid mid_grid(mid);
      for (int k = 1; k <= mid.length(); ++k) {
        for (int l = 1; l <= mid.row(k); ++l) {
          if (mid_grid.at(k, l) != t) continue;
          Partition r = remove_hook(mid, k, l);
          if (is_self_conjugate(r)) {
            return {std::move(r), ReductionKind::OffDiagonalPair, {{i, j}, {k, l}}};
          }
        }
      }
    }
  }
  throw Error(ErrorCode::InvalidArgument,
              "no self-conjugate " + std::to_string(t) + "-hook reduction exists for " + p.to_string());
}

}  // namespace sccore
