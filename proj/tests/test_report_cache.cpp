#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "sccore/cache.hpp"
#include "sccore/parallel.hpp"
#include "sccore/report.hpp"

using namespace sccore;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("sccore-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("verdicts") {
  ScanReport r;
  r.finalize();
  CHECK(r.verdict == Verdict::Holds);
  r.witnesses.push_back({1, 2, 3, 4, "anomaly: equal"});
  r.finalize();
  CHECK(r.verdict == Verdict::Mixed);
  CHECK(r.violation_count() == 0);
  r.witnesses.push_back({1, 2, 3, 4, "less"});
  r.finalize();
  CHECK(r.verdict == Verdict::Fails);
  CHECK(r.violation_count() == 1);
  CHECK(verdict_from_string("mixed") == Verdict::Mixed);
  CHECK_THROWS(verdict_from_string("maybe"));
}

TEST_CASE("big integers in JSON") {
  CHECK(bigint_to_json(BigInt(42)).is_number_integer());
  BigInt huge = BigInt(1) << 100;
  auto j = bigint_to_json(huge);
  CHECK(j.is_string());
  CHECK(bigint_from_json(j) == huge);
  CHECK(bigint_from_json(bigint_to_json(-huge)) == -huge);
}

TEST_CASE("reports round trip through JSON") {
  ScanReport r;
  r.scan = "demo";
  r.params = {{"n_max", 10}};
  r.witnesses.push_back({3, 7, BigInt(1) << 80, -5, "less"});
  r.data = {{"k", {1, 2, 3}}};
  r.elapsed_ms = 17;
  r.finalize();
  CHECK(report_from_json(to_json(r)) == r);
  auto quiet = to_json(r, false);
  CHECK(quiet.at("elapsed_ms") == 0);
  CHECK(to_json(r, false).dump() == to_json(r, false).dump());
}

TEST_CASE("parallel_for covers every index once and rethrows") {
  std::vector<int> hits(101, 0);
  parallel_for(hits.size(), 4, [&](size_t i) { hits[i] += 1; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(10, 3, [](size_t i) {
                    if (i == 7) throw std::runtime_error("seven");
                  }),
                  std::runtime_error);
}

TEST_CASE("cache file encoding round trips both widths") {
  auto s = compute_family(Family::ScT, 7, 300);
  CacheHeader h;
  auto back = decode_cache_file(encode_cache_file(Family::ScT, 7, s), &h);
  CHECK(back == s);
  CHECK(h.width == 0);
  CHECK(h.t == 7);
  CHECK(h.order == 300);

  auto wide = compute_family(Family::P, 0, 500);  // p(500) has 22 digits
  auto bytes = encode_cache_file(Family::P, 0, wide);
  CHECK(decode_cache_file(bytes, &h) == wide);
  CHECK(h.width == 1);

  bytes[bytes.size() / 2] ^= 0x40;
  CHECK_THROWS_AS(decode_cache_file(bytes), Error);
  bytes.resize(10);
  CHECK_THROWS_AS(decode_cache_file(bytes), Error);
}

TEST_CASE("disk cache stores, loads, verifies and purges") {
  auto dir = scratch("cache");
  DiskCache cache(dir);
  CHECK_FALSE(cache.load(Family::Sc, 0, 10));
  auto s = compute_family(Family::Sc, 0, 200);
  cache.store(Family::Sc, 0, s);
  CHECK(cache.files().size() == 1);
  auto loaded = cache.load(Family::Sc, 0, 150);
  REQUIRE(loaded);
  CHECK(*loaded == s);
  CHECK_FALSE(cache.load(Family::Sc, 0, 201));
  CHECK_FALSE(cache.load(Family::ScT, 5, 10));

  auto results = cache.verify();
  REQUIRE(results.size() == 1);
  CHECK(results[0].ok);
  CHECK(cache.purge() == 1);
  CHECK(cache.files().empty());
  fs::remove_all(dir);
}

TEST_CASE("a corrupt cache file is dropped with a warning and recomputed") {
  auto dir = scratch("corrupt");
  auto cache = std::make_shared<DiskCache>(dir);
  std::vector<std::string> warnings;
  cache->set_warning_hook([&](const std::string& m) { warnings.push_back(m); });
  auto s = compute_family(Family::ScT, 9, 400);
  cache->store(Family::ScT, 9, s);
  auto path = cache->path_for(Family::ScT, 9, 400);
  {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(100);
    f.put('\x7f');
  }
  CHECK_FALSE(cache->verify()[0].ok);

  SeriesStore store(cache);
  auto got = store.sc_t(9, 400);
  CHECK(*got == s);
  CHECK(warnings.size() == 1);
  CHECK(cache->verify()[0].ok);  // rewritten after recompute
  fs::remove_all(dir);
}

TEST_CASE("cache directory precedence") {
  ::setenv("SCCORE_CACHE_DIR", "/tmp/from-env", 1);
  CHECK(resolve_cache_dir("/tmp/from-flag") == fs::path("/tmp/from-flag"));
  CHECK(resolve_cache_dir("") == fs::path("/tmp/from-env"));
  ::unsetenv("SCCORE_CACHE_DIR");
  CHECK_FALSE(resolve_cache_dir(""));
}
