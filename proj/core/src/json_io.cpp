#include "minorhopf/json_io.hpp"

#include <algorithm>
#include <vector>

namespace minorhopf {

namespace {

// Bases as position lists, sorted lexicographically.
std::vector<std::vector<int>> sorted_position_lists(const Matroid& m) {
  std::vector<std::vector<int>> lists;
  lists.reserve(m.bases().size());
  for (SetMask b : m.bases()) {
    std::vector<int> positions;
    for (int i = 0; i < m.size(); ++i)
      if (b >> i & 1) positions.push_back(i);
    lists.push_back(std::move(positions));
  }
  std::sort(lists.begin(), lists.end());
  return lists;
}

}  // namespace

Json matroid_to_json(const Matroid& m) {
  Json bases = Json::array();
  for (const auto& positions : sorted_position_lists(m)) {
    Json basis = Json::array();
    for (int i : positions) basis.push_back(m.ground().label(i));
    bases.push_back(std::move(basis));
  }
  return Json{{"ground", m.ground().labels()},
              {"rank", m.rank()},
              {"bases", std::move(bases)}};
}

Matroid matroid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("bases"))
    fail(Errc::ParseError, "matroid document needs 'ground' and 'bases'");
  std::vector<Label> labels;
  for (const Json& l : j.at("ground")) labels.push_back(l.get<std::string>());
  std::vector<std::vector<Label>> bases;
  for (const Json& b : j.at("bases")) {
    std::vector<Label> basis;
    for (const Json& l : b) basis.push_back(l.get<std::string>());
    bases.push_back(std::move(basis));
  }
  Matroid m = Matroid::from_label_bases(GroundSet(std::move(labels)), bases);
  if (j.contains("rank") && j.at("rank").get<int>() != m.rank())
    fail(Errc::ParseError,
         "rank field " + j.at("rank").dump() + " disagrees with the bases");
  return m;
}

Json formal_sum_to_json(const FormalSum& x) {
  Json out = Json::array();
  for (const auto& [m, c] : x.terms())
    out.push_back(Json{{"coef", format_rational(c)}, {"matroid", matroid_to_json(m)}});
  return out;
}

Json iso_sum_to_json(const IsoSum& x) {
  Json out = Json::array();
  for (const auto& [c, k] : x.terms())
    out.push_back(
        Json{{"coef", format_rational(k)}, {"matroid", matroid_to_json(c.canonical())}});
  return out;
}

Json rational_matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dimension(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dimension(); ++j)
      row.push_back(format_rational(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json phi_to_json(const PhiResult& result) {
  Json classes = Json::array();
  for (const IsoClass& c : result.classes)
    classes.push_back(matroid_to_json(c.canonical()));
  return Json{{"classes", std::move(classes)},
              {"phi", rational_matrix_to_json(result.phi)},
              {"phi_inv",
               rational_matrix_to_json(result.phi.inverse_upper_triangular())}};
}

Json filter_to_json(const WeakPoset& poset) {
  Json elements = Json::array();
  for (size_t i = 0; i < poset.elements.size(); ++i)
    elements.push_back(
        Json{{"matroid", matroid_to_json(poset.elements[i])},
             {"mobius", poset.order.mobius(0, static_cast<int>(i))}});
  Json hasse = Json::array();
  for (auto [x, y] : poset.order.hasse_edges())
    hasse.push_back(Json::array({x, y}));
  return Json{{"elements", std::move(elements)}, {"hasse", std::move(hasse)}};
}

std::string matroid_to_text(const Matroid& m) {
  std::string out = "M(";
  for (int i = 0; i < m.size(); ++i) {
    if (i) out += ",";
    out += m.ground().label(i);
  }
  out += "; r=" + std::to_string(m.rank()) + "; bases";
  for (const auto& positions : sorted_position_lists(m)) {
    out += " {";
    for (size_t i = 0; i < positions.size(); ++i) {
      if (i) out += ",";
      out += m.ground().label(positions[i]);
    }
    out += "}";
  }
  return out + ")";
}

}  // namespace minorhopf
