#include "higgs/gb_cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

namespace higgs {

namespace fs = std::filesystem;

namespace {

std::string fnv1a64Hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class DirLock {
 public:
  DirLock(const fs::path& dir, bool exclusive) {
    const fs::path lockPath = dir / ".lock";
    fd_ = ::open(lockPath.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) throw Error(ErrorKind::Io, "cannot open lock file " + lockPath.string());
    if (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
      ::close(fd_);
      throw Error(ErrorKind::Io, "cannot lock " + lockPath.string());
    }
  }
  ~DirLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

 private:
  int fd_ = -1;
};

constexpr const char* kMagic = "# higgs groebner basis v1";

}  // namespace

GbCacheKey GbCacheKey::of(const IdealPresentation& ideal, std::optional<long> cap) {
  std::string text = ideal.order().descriptor() + "\ncap " + (cap ? std::to_string(*cap) : "none") + "\n";
  for (const auto& g : ideal.generators()) text += g.to_string() + "\n";
  return GbCacheKey{text, fnv1a64Hex(text)};
}

GbCache::GbCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) throw Error(ErrorKind::Io, "cannot create cache directory " + dir_.string());
}

fs::path GbCache::defaultDir() {
  if (const char* env = std::getenv("HIGGSC_CACHE_DIR"); env && *env) return fs::path(env);
  return fs::path(".higgsc-cache");
}

bool GbCache::isEntryName(const std::string& filename) {
  static const std::regex re("^gb-[0-9a-f]{16}\\.txt$");
  return std::regex_match(filename, re);
}

std::string serializeBasis(const GroebnerBasis& gb, const GbCacheKey& key) {
  std::ostringstream os;
  os << kMagic << '\n';
  os << "order " << gb.order().descriptor() << '\n';
  os << "cap " << (gb.degreeCap() ? std::to_string(*gb.degreeCap()) : "none") << '\n';
  os << "key " << key.hex << '\n';
  std::size_t keyLines = 0;
  for (char c : key.text)
    if (c == '\n') ++keyLines;
  os << "input " << keyLines << '\n' << key.text;
  os << "basis " << gb.size() << '\n';
  for (const auto& g : gb.elements()) os << g.to_string() << '\n';
  return os.str();
}

GroebnerBasis deserializeBasis(const std::string& text, const RingPtr& ring, const GbCacheKey* expected) {
  std::istringstream is(text);
  std::string line;
  auto next = [&]() -> std::string {
    if (!std::getline(is, line)) throw Error(ErrorKind::Parse, "truncated Groebner basis file");
    return line;
  };
  auto field = [&](const std::string& name) {
    std::string l = next();
    if (l.rfind(name + " ", 0) != 0) throw Error(ErrorKind::Parse, "expected '" + name + "' line, got '" + l + "'");
    return l.substr(name.size() + 1);
  };
  if (next() != kMagic) throw Error(ErrorKind::Parse, "not a Groebner basis file");
  const std::string order = field("order");
  if (order != MonomialOrder{ring}.descriptor())
    throw Error(ErrorKind::Parse, "basis order " + order + " does not match ring");
  const std::string capText = field("cap");
  std::optional<long> cap;
  if (capText != "none") cap = std::stol(capText);
  const std::string hex = field("key");
  const long inputLines = std::stol(field("input"));
  std::string keyText;
  for (long i = 0; i < inputLines; ++i) keyText += next() + "\n";
  if (expected && (expected->hex != hex || expected->text != keyText))
    throw Error(ErrorKind::Parse, "cache entry key mismatch");
  const long count = std::stol(field("basis"));
  std::vector<MultiPoly> basis;
  for (long i = 0; i < count; ++i) basis.push_back(parsePoly(ring, next()));
  return GroebnerBasis(ring, std::move(basis), cap);
}

std::optional<GroebnerBasis> GbCache::load(const GbCacheKey& key, const RingPtr& ring) const {
  DirLock lock(dir_, false);
  const fs::path path = dir_ / ("gb-" + key.hex + ".txt");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return deserializeBasis(buf.str(), ring, &key);
  } catch (const Error&) {
    return std::nullopt;
  }
}

void GbCache::store(const GbCacheKey& key, const GroebnerBasis& gb) const {
  DirLock lock(dir_, true);
  const fs::path path = dir_ / ("gb-" + key.hex + ".txt");
  const fs::path tmp = dir_ / (".gb-" + key.hex + ".tmp." + std::to_string(::getpid()) + "." +
                                 std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
    out << serializeBasis(gb, key);
    if (!out) throw Error(ErrorKind::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot move cache entry into place at " + path.string());
}

std::vector<GbCacheEntry> GbCache::list() const {
  DirLock lock(dir_, false);
  std::vector<GbCacheEntry> out;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    const std::string name = entry.path().filename().string();
    if (!entry.is_regular_file() || !isEntryName(name)) continue;
    out.push_back(GbCacheEntry{name.substr(3, 16), entry.path(), entry.file_size()});
  }
  std::sort(out.begin(), out.end(), [](const GbCacheEntry& a, const GbCacheEntry& b) { return a.key < b.key; });
  return out;
}

std::size_t GbCache::clear() const {
  DirLock lock(dir_, true);
  std::size_t removed = 0;
  std::vector<fs::path> victims;
  for (const auto& entry : fs::directory_iterator(dir_))
    if (entry.is_regular_file() && isEntryName(entry.path().filename().string())) victims.push_back(entry.path());
  for (const auto& p : victims) {
    std::error_code ec;
    if (fs::remove(p, ec)) ++removed;
    else if (ec) throw Error(ErrorKind::Io, "cannot remove " + p.string() + ": " + ec.message());
  }
  return removed;
}

GbCacheStat GbCache::stat() const {
  GbCacheStat s;
  for (const auto& e : list()) {
    ++s.entries;
    s.bytes += e.bytes;
  }
  return s;
}

GroebnerBasis cachedBuchberger(const IdealPresentation& ideal, const BuchbergerOptions& options, const GbCache* cache,
                               GbCacheKey* keyOut, bool* hit) {
  const GbCacheKey key = GbCacheKey::of(ideal, options.degreeCap);
  if (keyOut) *keyOut = key;
  if (hit) *hit = false;
  if (cache) {
    if (auto gb = cache->load(key, ideal.ring())) {
      if (hit) *hit = true;
      return *gb;
    }
  }
  GroebnerBasis gb = buchberger(ideal, options);
  if (cache) cache->store(key, gb);
  return gb;
}

}  // namespace higgs
