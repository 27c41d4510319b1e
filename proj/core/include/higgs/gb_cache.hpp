#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "higgs/groebner.hpp"

namespace higgs {

/// Content key of a Groebner computation: order descriptor, cap and the
/// canonical text of every generator.
struct GbCacheKey {
  std::string text;
  std::string hex;  // 16 hex digits of the FNV-1a hash of text

  static GbCacheKey of(const IdealPresentation& ideal, std::optional<long> cap);
};

struct GbCacheEntry {
  std::string key;
  std::filesystem::path path;
  std::uintmax_t bytes = 0;
};

struct GbCacheStat {
  std::size_t entries = 0;
  std::uintmax_t bytes = 0;
};

/// On-disk store of reduced bases, one file per key ("gb-<hex>.txt").
/// Readers take a shared advisory lock on the directory's lock file and
/// writers an exclusive one, so concurrent processes can share a directory.
class GbCache {
 public:
  explicit GbCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<GroebnerBasis> load(const GbCacheKey& key, const RingPtr& ring) const;
  void store(const GbCacheKey& key, const GroebnerBasis& gb) const;

  std::vector<GbCacheEntry> list() const;
  /// Removes only files matching the cache naming schema; returns the count.
  std::size_t clear() const;
  GbCacheStat stat() const;

  static bool isEntryName(const std::string& filename);

  /// Environment variable HIGGSC_CACHE_DIR or ".higgsc-cache".
  static std::filesystem::path defaultDir();

 private:
  std::filesystem::path dir_;
};

std::string serializeBasis(const GroebnerBasis& gb, const GbCacheKey& key);
GroebnerBasis deserializeBasis(const std::string& text, const RingPtr& ring, const GbCacheKey* expected = nullptr);

/// Runs buchberger, consulting and filling the cache when one is given.
GroebnerBasis cachedBuchberger(const IdealPresentation& ideal, const BuchbergerOptions& options,
                               const GbCache* cache, GbCacheKey* keyOut = nullptr, bool* hit = nullptr);

}  // namespace higgs
