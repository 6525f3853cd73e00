#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "isolat/poset.hpp"
#include "isolat/subgroups.hpp"

namespace isolat {

inline constexpr int kCacheVersion = 1;

struct CachedResult {
  SubgroupLattice lattice;
  IsoPoset iso;
};

std::string sha256_hex(const std::string& data);

// Digest of the poset's labels and order matrix.
std::string poset_digest(const Poset& p);

// On-disk store of computed lattices and Iso posets, one versioned JSON file
// per key. The key digests the spec, the caps and the format version; the
// file carries a digest of its payload so truncation or edits are detected.
class ResultCache {
 public:
  explicit ResultCache(std::string dir, int version = kCacheVersion);

  const std::string& dir() const { return dir_; }
  std::string key(const GroupSpec& spec, const Caps& caps) const;
  std::string path(const GroupSpec& spec, const Caps& caps) const;

  // Written to a temporary file, then renamed into place.
  void store(const GroupSpec& spec, const Caps& caps, const SubgroupLattice& l,
             const IsoPoset& iso) const;

  // nullopt when absent or written by another format version. Throws
  // CorruptEntry when the file is unreadable or its digest does not match.
  std::optional<CachedResult> load(const GroupSpec& spec, const Caps& caps) const;

  // load, falling back to computing (and storing) on a miss or a corrupt
  // entry; corruption is reported on `warn` when given.
  CachedResult get_or_compute(const GroupSpec& spec, const Caps& caps, GroupNamer* namer = nullptr,
                              std::ostream* warn = nullptr) const;

 private:
  std::string dir_;
  int version_;
};

}  // namespace isolat
