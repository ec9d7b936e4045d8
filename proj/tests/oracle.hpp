#pragma once
// Brute-force reference implementations for tests. Deliberately share no code with the
// library: partitions are plain vectors, hooks are counted cell by cell, and series are
// multiplied out factor by factor.

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Parts = std::vector<int>;

inline void partitions_rec(int n, int max_part, Parts& cur, const std::function<void(const Parts&)>& emit) {
  if (n == 0) {
    emit(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, emit);
    cur.pop_back();
  }
}

inline void for_each_partition(int n, const std::function<void(const Parts&)>& emit) {
  Parts cur;
  partitions_rec(n, n, cur, emit);
}

inline std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  for_each_partition(n, [&](const Parts& p) { out.push_back(p); });
  return out;
}

inline Parts conjugate(const Parts& p) {
  Parts c;
  for (int j = 1; !p.empty() && j <= p[0]; ++j) {
    int len = 0;
    for (int r : p) len += r >= j;
    c.push_back(len);
  }
  return c;
}

/// Hook length of the 1-based cell (i, j).
inline int hook(const Parts& p, const Parts& conj, int i, int j) {
  return (p[static_cast<size_t>(i - 1)] - j) + (conj[static_cast<size_t>(j - 1)] - i) + 1;
}

inline std::vector<int> all_hooks(const Parts& p) {
  Parts c = conjugate(p);
  std::vector<int> h;
  for (int i = 1; i <= static_cast<int>(p.size()); ++i) {
    for (int j = 1; j <= p[static_cast<size_t>(i - 1)]; ++j) h.push_back(hook(p, c, i, j));
  }
  return h;
}

inline bool is_core(const Parts& p, int t) {
  auto h = all_hooks(p);
  return std::find(h.begin(), h.end(), t) == h.end();
}

inline bool is_sc(const Parts& p) { return conjugate(p) == p; }

/// Counts partitions of n with a property by full enumeration.
inline long long count_if(int n, const std::function<bool(const Parts&)>& pred) {
  long long c = 0;
  for_each_partition(n, [&](const Parts& p) { c += pred(p) ? 1 : 0; });
  return c;
}

inline long long sc_count(int n) { return count_if(n, is_sc); }
inline long long sc_core_count(int n, int t) {
  return count_if(n, [t](const Parts& p) { return is_sc(p) && is_core(p, t); });
}
inline long long core_count(int n, int t) {
  return count_if(n, [t](const Parts& p) { return is_core(p, t); });
}

/// Polynomial truncated at degree N, multiplied naively.
struct Poly {
  std::vector<Big> c;
  explicit Poly(int N) : c(static_cast<size_t>(N) + 1, 0) { c[0] = 1; }
  int N() const { return static_cast<int>(c.size()) - 1; }
  /// times (1 + s q^k)^e for e >= 0, or divided by it for e < 0.
  void factor(int k, int s, int e) {
    for (int rep = 0; rep < std::abs(e); ++rep) {
      if (e > 0) {
        for (int n = N(); n >= k; --n) c[static_cast<size_t>(n)] += s * c[static_cast<size_t>(n - k)];
      } else {
        for (int n = k; n <= N(); ++n) c[static_cast<size_t>(n)] -= s * c[static_cast<size_t>(n - k)];
      }
    }
  }
};

/// Self-conjugate partitions: prod (1 + q^{2k-1}).
inline std::vector<Big> sc_series(int N) {
  Poly p(N);
  for (int k = 1; 2 * k - 1 <= N; ++k) p.factor(2 * k - 1, 1, 1);
  return p.c;
}

/// p(n): prod (1 - q^k)^{-1}.
inline std::vector<Big> p_series(int N) {
  Poly p(N);
  for (int k = 1; k <= N; ++k) p.factor(k, -1, -1);
  return p.c;
}

/// t-cores: prod (1 - q^{tk})^t / (1 - q^k).
inline std::vector<Big> c_t_series(int t, int N) {
  Poly p(N);
  for (int k = 1; k <= N; ++k) p.factor(k, -1, -1);
  for (int k = 1; t * k <= N; ++k) p.factor(t * k, -1, t);
  return p.c;
}

/// Sums of n over t-tuples of partitions: prod (1 - q^k)^{-t}.
inline std::vector<Big> phat_series(int t, int N) {
  Poly p(N);
  for (int k = 1; k <= N; ++k) p.factor(k, -1, -t);
  return p.c;
}

// ------------------------------------------------------------------ fixtures

struct GridRow {
  int hi = 0, lo = 0;  // row labels; lo is 0 for single-index rows
  int start = 0;
  std::vector<long long> values;
};

/// Reads "label [label2] start v..." lines. `two_labels` selects the difference-grid layout.
inline std::vector<GridRow> read_grid(const std::string& path, bool two_labels) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<GridRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    GridRow r;
    ss >> r.hi;
    if (two_labels) ss >> r.lo;
    ss >> r.start;
    long long v;
    while (ss >> v) r.values.push_back(v);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace oracle
