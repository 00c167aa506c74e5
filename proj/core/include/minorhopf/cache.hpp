#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minorhopf/matroid.hpp"
#include "minorhopf/weak_order.hpp"

namespace minorhopf {

/// On-disk memo for enumeration results. Strictly an optimization: every
/// payload is reproducible from scratch bit-for-bit and is validated by
/// checksum (and full key comparison) on load; anything suspect is
/// recomputed and rewritten.
class Cache {
 public:
  /// Disabled when the directory is empty.
  explicit Cache(std::filesystem::path directory);

  bool enabled() const { return !directory_.empty(); }
  const std::filesystem::path& directory() const { return directory_; }

  /// Matroids of one (ground, rank) stratum; recomputes on miss.
  std::vector<Matroid> stratum(const GroundSet& ground, int rank);

  /// The order filter of M with its reducible split; the cached payload
  /// holds the element list and Hasse edges.
  FilterTriple filter(const Matroid& m);

  /// Number of cache files written by this instance (for tests).
  int stores() const { return stores_; }

 private:
  std::optional<std::vector<Matroid>> load(const std::string& file,
                                           const std::string& key_dump);
  void store(const std::string& file, const std::string& key_dump,
             const std::vector<Matroid>& matroids,
             const std::vector<std::pair<int, int>>& hasse);

  std::filesystem::path directory_;
  int stores_ = 0;
};

/// FNV-1a 64-bit checksum, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace minorhopf
