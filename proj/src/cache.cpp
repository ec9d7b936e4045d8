#include "sccore/cache.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>

#include <zlib.h>

namespace sccore {

namespace fs = std::filesystem;

namespace {

constexpr char kMagic[4] = {'S', 'C', 'C', 'F'};
constexpr const char* kSuffix = ".sccache";

void put_u32(std::vector<unsigned char>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}
void put_u64(std::vector<unsigned char>& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

class Reader {
 public:
  explicit Reader(const std::vector<unsigned char>& b, size_t end) : b_(b), end_(end) {}
  uint32_t u32() { return static_cast<uint32_t>(take(4)); }
  uint64_t u64() { return take(8); }
  uint8_t u8() { return static_cast<uint8_t>(take(1)); }
  void bytes(size_t n, std::vector<unsigned char>& out) {
    need(n);
    out.assign(b_.begin() + static_cast<long>(pos_), b_.begin() + static_cast<long>(pos_ + n));
    pos_ += n;
  }
  size_t pos() const { return pos_; }

 private:
  void need(size_t n) const {
    if (pos_ + n > end_) throw Error(ErrorCode::InvalidArgument, "cache file truncated");
  }
  uint64_t take(int n) {
    need(static_cast<size_t>(n));
    uint64_t v = 0;
    for (int i = 0; i < n; ++i) v |= static_cast<uint64_t>(b_[pos_ + static_cast<size_t>(i)]) << (8 * i);
    pos_ += static_cast<size_t>(n);
    return v;
  }
  const std::vector<unsigned char>& b_;
  size_t end_;
  size_t pos_ = 0;
};

uint32_t checksum(const unsigned char* data, size_t n) {
  uLong c = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks.
  while (n > 0) {
    uInt chunk = static_cast<uInt>(std::min<size_t>(n, std::numeric_limits<uInt>::max()));
    c = crc32(c, data, chunk);
    data += chunk;
    n -= chunk;
  }
  return static_cast<uint32_t>(c);
}

bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max();
}

}  // namespace

std::vector<unsigned char> encode_cache_file(Family f, int t, const TruncatedSeries& s) {
  bool narrow = true;
  for (const auto& c : s.coeffs()) narrow = narrow && fits_int64(c);

  std::vector<unsigned char> out(kMagic, kMagic + 4);
  put_u32(out, kCacheVersion);
  out.push_back(static_cast<unsigned char>(f));
  out.push_back(narrow ? 0 : 1);
  out.push_back(0);
  out.push_back(0);
  put_u32(out, static_cast<uint32_t>(t));
  put_u32(out, static_cast<uint32_t>(s.order()));
  for (const auto& c : s.coeffs()) {
    if (narrow) {
      put_u64(out, static_cast<uint64_t>(c.convert_to<int64_t>()));
    } else {
      std::vector<unsigned char> mag;
      BigInt m = abs(c);
      export_bits(m, std::back_inserter(mag), 8, false);  // little-endian bytes
      out.push_back(c < 0 ? 1 : 0);
      put_u32(out, static_cast<uint32_t>(mag.size()));
      out.insert(out.end(), mag.begin(), mag.end());
    }
  }
  put_u32(out, checksum(out.data(), out.size()));
  return out;
}

TruncatedSeries decode_cache_file(const std::vector<unsigned char>& bytes, CacheHeader* header) {
  if (bytes.size() < 24 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw Error(ErrorCode::InvalidArgument, "not a cache file");
  }
  size_t body = bytes.size() - 4;
  Reader trailer(bytes, bytes.size());
  for (size_t i = 0; i < body; ++i) trailer.u8();
  if (trailer.u32() != checksum(bytes.data(), body)) throw Error(ErrorCode::InvalidArgument, "checksum mismatch");

  Reader r(bytes, body);
  r.u32();  // magic
  CacheHeader h;
  h.version = r.u32();
  if (h.version != kCacheVersion) throw Error(ErrorCode::InvalidArgument, "cache version mismatch");
  uint8_t fam = r.u8();
  if (fam > static_cast<uint8_t>(Family::P)) throw Error(ErrorCode::InvalidArgument, "unknown family tag");
  h.family = static_cast<Family>(fam);
  h.width = r.u8();
  r.u8();
  r.u8();
  h.t = static_cast<int32_t>(r.u32());
  h.order = static_cast<int32_t>(r.u32());
  if (h.order < 0 || h.width > 1) throw Error(ErrorCode::InvalidArgument, "bad cache header");

  std::vector<BigInt> coeffs;
  coeffs.reserve(static_cast<size_t>(h.order) + 1);
  std::vector<unsigned char> mag;
  for (int i = 0; i <= h.order; ++i) {
    if (h.width == 0) {
      coeffs.emplace_back(static_cast<int64_t>(r.u64()));
    } else {
      bool neg = r.u8() != 0;
      uint32_t len = r.u32();
      r.bytes(len, mag);
      BigInt v = 0;
      if (len > 0) import_bits(v, mag.begin(), mag.end(), 8, false);
      coeffs.push_back(neg ? BigInt(-v) : v);
    }
  }
  if (r.pos() != body) throw Error(ErrorCode::InvalidArgument, "trailing bytes in cache file");
  if (header) *header = h;
  return TruncatedSeries(std::move(coeffs));
}

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {
  warn_ = [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; };
}

fs::path DiskCache::path_for(Family f, int t, int order) const {
  return dir_ / (std::string(to_string(f)) + "-t" + std::to_string(family_has_t(f) ? t : 0) + "-N" +
                 std::to_string(order) + kSuffix);
}

std::vector<fs::path> DiskCache::files() const {
  std::vector<fs::path> out;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return out;
  for (const auto& e : fs::directory_iterator(dir_, ec)) {
    if (e.is_regular_file() && e.path().extension() == kSuffix) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::optional<std::vector<unsigned char>> read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  return std::vector<unsigned char>(std::istreambuf_iterator<char>(in), {});
}

/// Parses "<family>-t<t>-N<order>.sccache".
std::optional<std::tuple<std::string, int, int>> parse_name(const fs::path& p) {
  std::string stem = p.stem().string();
  auto tpos = stem.rfind("-t");
  auto npos = stem.rfind("-N");
  if (tpos == std::string::npos || npos == std::string::npos || npos < tpos) return std::nullopt;
  try {
    return std::make_tuple(stem.substr(0, tpos), std::stoi(stem.substr(tpos + 2, npos - tpos - 2)),
                           std::stoi(stem.substr(npos + 2)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<TruncatedSeries> DiskCache::load(Family f, int t, int min_order) {
  if (!family_has_t(f)) t = 0;
  std::optional<fs::path> best;
  int best_order = 0;
  for (const auto& p : files()) {
    auto parsed = parse_name(p);
    if (!parsed) continue;
    auto [fam, ft, order] = *parsed;
    if (fam != to_string(f) || ft != t || order < min_order) continue;
    if (!best || order < best_order) {
      best = p;
      best_order = order;
    }
  }
  if (!best) return std::nullopt;
  auto bytes = read_all(*best);
  try {
    if (!bytes) throw Error(ErrorCode::InvalidArgument, "unreadable");
    CacheHeader h;
    auto s = decode_cache_file(*bytes, &h);
    if (h.family != f || h.t != t || h.order != best_order) throw Error(ErrorCode::InvalidArgument, "header mismatch");
    return s;
  } catch (const Error& e) {
    if (warn_) warn_("corrupt cache file " + best->string() + " (" + e.what() + "); recomputing");
    std::error_code ec;
    fs::remove(*best, ec);
    return std::nullopt;
  }
}

void DiskCache::store(Family f, int t, const TruncatedSeries& s) {
  if (!family_has_t(f)) t = 0;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  fs::path target = path_for(f, t, s.order());
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  auto bytes = encode_cache_file(f, t, s);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      if (warn_) warn_("cannot write cache file " + tmp.string());
      return;
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      if (warn_) warn_("short write to " + tmp.string());
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    if (warn_) warn_("cannot rename into " + target.string() + ": " + ec.message());
    fs::remove(tmp, ec);
  }
}

std::vector<DiskCache::VerifyResult> DiskCache::verify(unsigned seed) const {
  std::vector<VerifyResult> out;
  std::mt19937 rng(seed);
  for (const auto& p : files()) {
    VerifyResult res{p, true, ""};
    try {
      auto bytes = read_all(p);
      if (!bytes) throw Error(ErrorCode::InvalidArgument, "unreadable");
      CacheHeader h;
      auto s = decode_cache_file(*bytes, &h);
      auto fresh = compute_family(h.family, h.t, h.order);
      int samples = std::max(1, (h.order + 1) / 100);
      std::uniform_int_distribution<int> pick(0, h.order);
      for (int i = 0; i < samples; ++i) {
        int n = pick(rng);
        if (s[n] != fresh[n]) {
          res.ok = false;
          res.problem = "coefficient " + std::to_string(n) + " differs from recomputation";
          break;
        }
      }
    } catch (const Error& e) {
      res.ok = false;
      res.problem = e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

size_t DiskCache::purge() {
  size_t n = 0;
  std::error_code ec;
  for (const auto& p : files()) n += fs::remove(p, ec) ? 1 : 0;
  return n;
}

std::optional<fs::path> resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return fs::path(flag_value);
  if (const char* env = std::getenv("SCCORE_CACHE_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

}  // namespace sccore
