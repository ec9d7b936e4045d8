#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "sccore/abacus.hpp"

using namespace sccore;

namespace {

std::vector<int> vec(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

/// Removes t-hooks one at a time via the oracle's hook counts until none remain.
oracle::Parts oracle_core(oracle::Parts p, int t) {
  for (;;) {
    auto conj = oracle::conjugate(p);
    bool removed = false;
    for (int i = 1; i <= static_cast<int>(p.size()) && !removed; ++i) {
      for (int j = 1; j <= p[static_cast<size_t>(i - 1)] && !removed; ++j) {
        if (oracle::hook(p, conj, i, j) != t) continue;
        // rim hook from (i, row end) down to (leg end, j): shift rows up along the rim
        int bottom = conj[static_cast<size_t>(j - 1)];
        oracle::Parts q = p;
        for (int r = i; r < bottom; ++r) q[static_cast<size_t>(r - 1)] = p[static_cast<size_t>(r)] - 1;
        q[static_cast<size_t>(bottom - 1)] = j - 1;
        while (!q.empty() && q.back() == 0) q.pop_back();
        p = q;
        removed = true;
      }
    }
    if (!removed) return p;
  }
}

}  // namespace

TEST_CASE("beta set and its inverse") {
  Partition p({4, 3, 1, 1});
  auto b = beta_set(p, 6);
  CHECK(std::vector<int>(b.beads().begin(), b.beads().end()) == std::vector<int>{9, 7, 4, 3, 1, 0});
  CHECK(partition_of(b) == p);
  CHECK_THROWS_AS(beta_set(p, 3), Error);
}

TEST_CASE("worked example: hooks (29, 15) with t = 5") {
  auto p = from_diagonal_hooks(DiagonalHooks({29, 15}));
  CHECK(p.size() == 44);
  CHECK(vec(t_core(p, 5)) == std::vector<int>{5, 1, 1, 1, 1});
  auto q = t_quotient(p, 5);
  REQUIRE(q.t() == 5);
  CHECK(vec(q[0]) == std::vector<int>{1, 1});
  CHECK(q[1].empty());
  CHECK(vec(q[2]) == std::vector<int>{2, 1});
  CHECK(q[3].empty());
  CHECK(vec(q[4]) == std::vector<int>{2});
  CHECK(quotient_is_self_symmetric(q));
  CHECK(assemble(t_core(p, 5), q, 5) == p);
}

TEST_CASE("core agrees with repeated rim-hook removal") {
  for (int n = 0; n <= 16; ++n) {
    for (const auto& parts : oracle::partitions(n)) {
      for (int t = 2; t <= 5; ++t) CHECK(vec(t_core(Partition(parts), t)) == oracle_core(parts, t));
    }
  }
}

TEST_CASE("size identity and round trip") {
  for (int n = 0; n <= 18; ++n) {
    for (const auto& parts : oracle::partitions(n)) {
      Partition p(parts);
      for (int t = 2; t <= 6; ++t) {
        auto core = t_core(p, t);
        auto q = t_quotient(p, t);
        CHECK(is_t_core(core, t));
        CHECK(p.size() == core.size() + t * q.total_size());
        CHECK(assemble(core, q, t) == p);
        if (is_self_conjugate(p)) CHECK(quotient_is_self_symmetric(q));
      }
    }
  }
}

TEST_CASE("assemble rejects non-cores") {
  Quotient q({Partition(), Partition()});
  CHECK_THROWS_AS(assemble(Partition({2}), q, 2), Error);
}

TEST_CASE("remove_hook matches the oracle's rim removal") {
  Partition p({4, 3, 1, 1});
  auto r = remove_hook(p, 1, 2);  // hook length 4
  CHECK(vec(r) == std::vector<int>{2, 1, 1, 1});
  CHECK_THROWS_AS(remove_hook(p, 3, 2), Error);
}

TEST_CASE("self-conjugate reduction keeps self-conjugacy and reaches the core") {
  for (int n = 1; n <= 24; ++n) {
    for (const auto& p : enumerate_self_conjugate(n)) {
      for (int t = 2; t <= 6; ++t) {
        auto cur = p;
        int guard = 0;
        while (!is_t_core(cur, t) && guard++ < 100) {
          auto step = sc_reduction_step(cur, t);
          CHECK(is_self_conjugate(step.result));
          int removed = step.kind == ReductionKind::DiagonalHook ? t : 2 * t;
          CHECK(step.result.size() == cur.size() - removed);
          if (step.kind == ReductionKind::DiagonalHook) CHECK(t % 2 == 1);
          cur = step.result;
        }
        CHECK(cur == t_core(p, t));
        CHECK_THROWS_AS(sc_reduction_step(cur, t), Error);
      }
    }
  }
  CHECK_THROWS_AS(sc_reduction_step(Partition({3}), 2), Error);
}
