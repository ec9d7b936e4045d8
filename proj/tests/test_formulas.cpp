#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "sccore/formulas.hpp"

using namespace sccore;

namespace {

BigInt series(int t, int n) { return (*default_store().sc_t(t, n))[n]; }
BigInt sc(int n) { return n < 0 ? BigInt(0) : (*default_store().sc(std::max(n, 0)))[n]; }

}  // namespace

// The recursive and closed forms take the half index: t gives core size 2t or 2t + 1.
TEST_CASE("recursion: worked cells") {
  CHECK(sc_even_recursive(2, 10) == 2);   // sc_4(10)
  CHECK(sc_even_recursive(3, 13) == 0);   // sc_6(13)
  CHECK(sc_even_recursive(3, 20) == 1);   // sc_6(20)
  CHECK(sc_even_recursive(4, 7) == sc(7));
  CHECK(sc_odd_recursive(5, 20) == 5);    // sc_11(20)
  CHECK(sc_odd_recursive(6, 9) == sc(9));
  CHECK(sc_odd_recursive(1, 8) == oracle::sc_core_count(8, 3));
}

TEST_CASE("closed forms: worked cells") {
  CHECK(sc_even_closed(2, 10) == 2);
  CHECK(sc_even_closed(3, 13) == 0);
  CHECK(sc_even_closed(3, 20) == 1);
  CHECK(sc_even_closed(10, 17) == sc(17));
  CHECK(sc_odd_closed(5, 20) == 5);
  CHECK(sc_odd_closed(1, 8) == oracle::sc_core_count(8, 3));
}

TEST_CASE("large-t formulas: worked cells and tags") {
  auto r = sc_large(6, 20);
  CHECK(r.value == 1);
  CHECK(r.formula == LargeFormula::EvenQuarterToHalf);
  r = sc_large(11, 20);
  CHECK(r.value == 5);
  CHECK(r.formula == LargeFormula::OddHalfToFull);
  r = sc_large(9, 20);
  CHECK(r.value == 5);
  CHECK(r.formula == LargeFormula::OddThirdToHalf);
  CHECK(sc_large(10, 20).formula == LargeFormula::EvenQuarterFloor);
  CHECK(sc_large(8, 20).formula == LargeFormula::EvenQuarterFloorM2);
  CHECK(sc_large(14, 20).formula == LargeFormula::EvenAboveHalf);
  CHECK(sc_large(25, 20).formula == LargeFormula::ExceedsSize);
  CHECK_THROWS_AS(sc_large(4, 40), Error);
  CHECK_THROWS_AS(evaluate_large(LargeFormula::EvenQuarterToHalf, 4, 40), Error);
}

TEST_CASE("recursion equals the series, t <= 30, n <= 500") {
  for (int t = 2; t <= 30; ++t) {
    auto tables = recursion_tables(t / 2, 500);
    ScRecursion rec(t, tables);
    for (int n = 0; n <= 500; ++n) {
      INFO("t = " << t << ", n = " << n);
      CHECK(rec(n) == series(t, n));
    }
  }
}

TEST_CASE("recursion needs long enough tables") {
  RecursionTables tables{std::make_shared<const TruncatedSeries>(compute_family(Family::Sc, 0, 20)),
                         std::make_shared<const TruncatedSeries>(compute_family(Family::Phat, 2, 20))};
  ScRecursion rec(4, tables);
  CHECK_NOTHROW(rec(20));
  CHECK_THROWS_AS(rec(200), Error);
}

TEST_CASE("closed forms equal the series where the budget allows") {
  for (int t = 2; t <= 16; ++t) {
    for (int n = 0; n <= 160; ++n) {
      if (closed_form_depth(t, n) > kDefaultCompositionBudget) continue;
      INFO("t = " << t << ", n = " << n);
      CHECK((t % 2 == 0 ? sc_even_closed(t / 2, n) : sc_odd_closed(t / 2, n)) == series(t, n));
    }
  }
  CHECK_THROWS_AS(sc_even_closed(2, 400, 3), Error);
}

TEST_CASE("every large-t formula agrees with the series on its whole region, n <= 1000") {
  long long checked = 0;
  for (int n = 0; n <= 1000; ++n) {
    for (int T = 2; T <= n + 3; ++T) {
      for (auto f : kAllLargeFormulas) {
        if (!large_applies(f, T, n)) continue;
        ++checked;
        if (evaluate_large(f, T, n) != series(T, n)) FAIL("formula " << to_string(f) << " at T=" << T << " n=" << n);
      }
    }
  }
  CHECK(checked > 100000);
}

TEST_CASE("quarter-floor special cases") {
  for (int n = 12; n <= 400; ++n) {
    int q = n / 4;
    BigInt want = n % 4 == 2 ? sc(n) : sc(n) - q;
    CHECK(series(2 * q, n) == want);
    CHECK(series(2 * q - 2, n) == sc(n) - (q - 1));
  }
}

TEST_CASE("count table layout") {
  auto table = build_sc_table(8, 10);
  CHECK_FALSE(table.at(6, 3).has_value());
  CHECK(*table.at(6, 4) == 1);
  CHECK(*table.at(4, 10) == 2);
  CHECK_THROWS_AS(table.at(9, 0), Error);
}

TEST_CASE("cross validation agrees on small grids") {
  CHECK(cross_validate(2, 3).holds());
  CrossValidateOptions opts;
  opts.workers = 3;
  opts.oracle_max_n = 24;
  auto r = cross_validate(12, 60, opts);
  CHECK(r.holds());
  CHECK(r.scan == "cross-validate");
  CHECK(r.data.at("cells").get<long long>() == 11 * 61);
}

TEST_CASE("oracle column of cross validation agrees with brute force") {
  for (int t = 2; t <= 6; ++t) {
    for (int n = 0; n <= 16; ++n) CHECK(series(t, n) == oracle::sc_core_count(n, t));
  }
}
