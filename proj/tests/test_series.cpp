#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "oracle.hpp"
#include "sccore/series.hpp"

using namespace sccore;

namespace {

void check_equal(const TruncatedSeries& s, const std::vector<oracle::Big>& want) {
  REQUIRE(s.order() + 1 >= static_cast<int>(want.size()));
  for (size_t n = 0; n < want.size(); ++n) {
    INFO("n = " << n);
    CHECK(s[static_cast<int>(n)] == want[n]);
  }
}

}  // namespace

TEST_CASE("self-conjugate counts: printed prefix") {
  const long long prefix[] = {1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 5, 5, 5, 6, 7, 8, 8, 9, 11, 12, 12, 14};
  auto s = sc_coeffs(27);
  for (int n = 0; n <= 27; ++n) CHECK(s[n] == prefix[n]);
}

TEST_CASE("pairs of partitions of 2") { CHECK(phat_coeffs(2, 5)[2] == 5); }

TEST_CASE("series match naive products") {
  const int N = 150;
  check_equal(sc_coeffs(N), oracle::sc_series(N));
  check_equal(p_coeffs(N), oracle::p_series(N));
  for (int t = 1; t <= 9; ++t) {
    check_equal(c_t_coeffs(t, N), oracle::c_t_series(t, N));
    check_equal(phat_coeffs(t, N), oracle::phat_series(t, N));
  }
}

TEST_CASE("self-conjugate cores match enumeration") {
  for (int t = 2; t <= 9; ++t) {
    auto s = sc_t_coeffs(t, 22);
    for (int n = 0; n <= 22; ++n) {
      INFO("t = " << t << ", n = " << n);
      CHECK(s[n] == oracle::sc_core_count(n, t));
    }
  }
}

TEST_CASE("t-cores match enumeration") {
  for (int t = 2; t <= 6; ++t) {
    auto s = c_t_coeffs(t, 18);
    for (int n = 0; n <= 18; ++n) CHECK(s[n] == oracle::core_count(n, t));
  }
}

TEST_CASE("eta-quotient route equals the literal product") {
  for (int t = 2; t <= 24; ++t) {
    INFO("t = " << t);
    CHECK(sc_t_coeffs(t, 400) == sc_t_coeffs_factorwise(t, 400));
  }
}

TEST_CASE("sc_t stabilises to sc for t > n") {
  auto sc = sc_coeffs(60);
  for (int t = 2; t <= 62; ++t) {
    auto s = sc_t_coeffs(t, 60);
    for (int n = 0; n < t && n <= 60; ++n) CHECK(s[n] == sc[n]);
  }
}

TEST_CASE("sc_t rejects t < 2") { CHECK_THROWS_AS(sc_t_coeffs(1, 10), Error); }

TEST_CASE("truncated series arithmetic") {
  auto s = sc_coeffs(50);
  auto copy = s;
  copy.mul_binomial(3, -1).div_binomial(3, -1);
  CHECK(copy == s);
  copy.mul_euler(4).div_euler(4);
  CHECK(copy == s);
  copy.mul_euler_power(5, 3).mul_euler_power(5, -3);
  CHECK(copy == s);
  CHECK(s[-1] == 0);
  CHECK_THROWS_AS(s[51], Error);
  CHECK(s.truncated(10).order() == 10);
  auto one = TruncatedSeries::one(8);
  CHECK(multiply(one, s.truncated(8)) == s.truncated(8));
}

TEST_CASE("pentagonal terms") {
  auto terms = pentagonal_terms(1, 15);
  std::vector<std::pair<int, int>> want = {{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}, {12, -1}, {15, -1}};
  CHECK(terms == want);
}

TEST_CASE("binomial_factor with negative exponent inverts") {
  auto a = binomial_factor(1, 2, -1, 3, 40);
  auto b = binomial_factor(1, 2, -1, -3, 40);
  CHECK(multiply(a, b) == TruncatedSeries::one(40));
}

TEST_CASE("family names") {
  for (auto f : {Family::Sc, Family::ScT, Family::CT, Family::Phat, Family::P}) {
    CHECK(family_from_string(to_string(f)) == f);
  }
  CHECK(family_from_string("c") == Family::CT);
  CHECK_FALSE(family_from_string("nope"));
}

TEST_CASE("store returns at least the requested order and is safe across threads") {
  SeriesStore store;
  auto a = store.sc_t(7, 100);
  CHECK(a->order() >= 100);
  auto b = store.sc_t(7, 50);
  CHECK(b->order() >= 50);
  CHECK((*b)[50] == (*a)[50]);

  std::vector<std::thread> threads;
  std::vector<BigInt> got(8);
  for (int k = 0; k < 8; ++k) {
    threads.emplace_back([&, k] { got[static_cast<size_t>(k)] = (*store.sc_t(3 + k % 3, 300 + 10 * k))[300]; });
  }
  for (auto& th : threads) th.join();
  for (int k = 0; k < 8; ++k) CHECK(got[static_cast<size_t>(k)] == sc_t_coeffs(3 + k % 3, 300)[300]);
}

namespace {

struct CountingBackend : SeriesBackend {
  int loads = 0, stores = 0;
  std::optional<TruncatedSeries> saved;
  std::optional<TruncatedSeries> load(Family, int, int min_order) override {
    ++loads;
    if (saved && saved->order() >= min_order) return saved;
    return std::nullopt;
  }
  void store(Family, int, const TruncatedSeries& s) override {
    ++stores;
    saved = s;
  }
};

}  // namespace

TEST_CASE("store consults its backend") {
  auto backend = std::make_shared<CountingBackend>();
  {
    SeriesStore store(backend);
    store.sc(40);
  }
  CHECK(backend->stores == 1);
  SeriesStore again(backend);
  CHECK((*again.sc(30))[27] == 14);
  CHECK(backend->stores == 1);
}
