#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sccore/series.hpp"

namespace sccore {

/// On-disk layout, all integers little-endian:
///   magic "SCCF", u32 version, u8 family, u8 width (0: int64 records, 1: sign + length + bytes),
///   u16 reserved, i32 t, i32 N, then N + 1 coefficient records, then u32 crc32 of everything before.
struct CacheHeader {
  uint32_t version = 0;
  Family family = Family::Sc;
  uint8_t width = 0;
  int32_t t = 0;
  int32_t order = 0;
};

inline constexpr uint32_t kCacheVersion = 1;

std::vector<unsigned char> encode_cache_file(Family f, int t, const TruncatedSeries& s);
/// Throws InvalidArgument on bad magic, version, truncation or checksum.
TruncatedSeries decode_cache_file(const std::vector<unsigned char>& bytes, CacheHeader* header = nullptr);

/// Series cache in one directory, one file per (family, t, N). Writes go to a temp file
/// that is renamed into place. A corrupt or outdated file is deleted and reported through
/// the warning hook, and the caller recomputes.
class DiskCache : public SeriesBackend {
 public:
  explicit DiskCache(std::filesystem::path dir);

  std::optional<TruncatedSeries> load(Family f, int t, int min_order) override;
  void store(Family f, int t, const TruncatedSeries& s) override;

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(Family f, int t, int order) const;
  std::vector<std::filesystem::path> files() const;

  struct VerifyResult {
    std::filesystem::path file;
    bool ok;
    std::string problem;
  };
  /// Checks every file's checksum and recomputes a deterministic ~1% sample of coefficients.
  std::vector<VerifyResult> verify(unsigned seed = 12345) const;
  /// Removes every cache file; returns how many.
  size_t purge();

  void set_warning_hook(std::function<void(const std::string&)> hook) { warn_ = std::move(hook); }

 private:
  std::filesystem::path dir_;
  std::function<void(const std::string&)> warn_;
};

/// Directory precedence: explicit flag, then SCCORE_CACHE_DIR. Empty if neither is set.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag_value);

}  // namespace sccore
