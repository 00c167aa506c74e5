#include "minorhopf/cache.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "minorhopf/json_io.hpp"

namespace minorhopf {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xf);
  return out.str();
}

Cache::Cache(std::filesystem::path directory) : directory_(std::move(directory)) {
  if (enabled()) std::filesystem::create_directories(directory_);
}

namespace {

Json payload_json(const std::vector<Matroid>& matroids,
                  const std::vector<std::pair<int, int>>& hasse) {
  Json ms = Json::array();
  for (const Matroid& m : matroids) ms.push_back(matroid_to_json(m));
  Json hs = Json::array();
  for (auto [x, y] : hasse) hs.push_back(Json::array({x, y}));
  return Json{{"matroids", std::move(ms)}, {"hasse", std::move(hs)}};
}

}  // namespace

std::optional<std::vector<Matroid>> Cache::load(const std::string& file,
                                                const std::string& key_dump) {
  if (!enabled()) return std::nullopt;
  const auto path = directory_ / file;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Json doc;
  try {
    in >> doc;
    if (doc.at("key").dump() != key_dump) return std::nullopt;
    if (doc.at("checksum").get<std::string>() !=
        fnv1a_hex(doc.at("payload").dump()))
      return std::nullopt;
    std::vector<Matroid> out;
    for (const Json& j : doc.at("payload").at("matroids"))
      out.push_back(matroid_from_json(j));
    return out;
  } catch (...) {
    return std::nullopt;  // stale or foreign file: fall back to recompute
  }
}

void Cache::store(const std::string& file, const std::string& key_dump,
                  const std::vector<Matroid>& matroids,
                  const std::vector<std::pair<int, int>>& hasse) {
  if (!enabled()) return;
  Json payload = payload_json(matroids, hasse);
  Json doc{{"key", Json::parse(key_dump)},
           {"checksum", fnv1a_hex(payload.dump())},
           {"payload", std::move(payload)}};
  std::ofstream out(directory_ / file);
  out << doc.dump(1) << "\n";
  ++stores_;
}

std::vector<Matroid> Cache::stratum(const GroundSet& ground, int rank) {
  const Json key{{"kind", "stratum"}, {"ground", ground.labels()}, {"rank", rank}};
  const std::string key_dump = key.dump();
  const std::string file =
      "stratum_n" + std::to_string(ground.size()) + "_r" + std::to_string(rank) +
      "_" + fnv1a_hex(key_dump) + ".json";
  if (auto hit = load(file, key_dump)) return *hit;
  std::vector<Matroid> fresh = enumerate_matroids(ground, rank);
  store(file, key_dump, fresh, {});
  return fresh;
}

FilterTriple Cache::filter(const Matroid& m) {
  // Keyed by the full encoding of M (ground, rank, bases).
  const Json key{{"kind", "filter"}, {"matroid", matroid_to_json(m)}};
  const std::string key_dump = key.dump();
  const std::string file = "filter_n" + std::to_string(m.size()) + "_" +
                           fnv1a_hex(key_dump) + ".json";
  if (auto hit = load(file, key_dump)) {
    FilterTriple ft;
    ft.wfilter.elements = std::move(*hit);
    ft.wfilter.order = Poset::from_relation_unchecked(
        static_cast<int>(ft.wfilter.elements.size()), [&ft](int i, int j) {
          return weak_leq(ft.wfilter.elements[static_cast<size_t>(i)],
                          ft.wfilter.elements[static_cast<size_t>(j)]);
        });
    std::vector<int> reducible_idx;
    for (size_t i = 0; i < ft.wfilter.elements.size(); ++i) {
      const bool irr = ft.wfilter.elements[i].size() > 0 &&
                       is_irreducible(ft.wfilter.elements[i]);
      if (irr && i != 0) ft.iset.push_back(ft.wfilter.elements[i]);
      if (!irr || i == 0) reducible_idx.push_back(static_cast<int>(i));
    }
    for (int i : reducible_idx)
      ft.rfilter.elements.push_back(ft.wfilter.elements[static_cast<size_t>(i)]);
    ft.rfilter.order = ft.wfilter.order.induced(reducible_idx);
    return ft;
  }
  FilterTriple fresh = order_filter(m);
  store(file, key_dump, fresh.wfilter.elements,
        fresh.wfilter.order.hasse_edges());
  return fresh;
}

}  // namespace minorhopf
