#include "hss/serialization.hpp"

#include <stdexcept>

namespace hss {

using nlohmann::json;

json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) throw std::invalid_argument("rational: expected string");
  return rat_from_string(j.get<std::string>());
}

json vec_to_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& c : v) out.push_back(rat_to_json(c));
  return out;
}

RatVec vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector: expected array");
  RatVec out;
  for (const auto& c : j) out.push_back(rat_from_json(c));
  return out;
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(j[i][c]);
  }
  return m;
}

json oct_to_json(const Oct& o) {
  return json{{"a", rat_to_json(o.a)},
              {"b", rat_to_json(o.b)},
              {"u", json::array({rat_to_json(o.u[0]), rat_to_json(o.u[1]), rat_to_json(o.u[2])})},
              {"v", json::array({rat_to_json(o.v[0]), rat_to_json(o.v[1]), rat_to_json(o.v[2])})}};
}

Oct oct_from_json(const json& j) {
  Oct o;
  o.a = rat_from_json(j.at("a"));
  o.b = rat_from_json(j.at("b"));
  for (int i = 0; i < 3; ++i) {
    o.u[i] = rat_from_json(j.at("u").at(i));
    o.v[i] = rat_from_json(j.at("v").at(i));
  }
  return o;
}

json jordan_to_json(const JordanElem& m) {
  return json{
      {"c", json::array({rat_to_json(m.c[0]), rat_to_json(m.c[1]), rat_to_json(m.c[2])})},
      {"x", oct_to_json(m.x)},
      {"y", oct_to_json(m.y)},
      {"z", oct_to_json(m.z)}};
}

JordanElem jordan_from_json(const json& j) {
  JordanElem m;
  for (int i = 0; i < 3; ++i) m.c[i] = rat_from_json(j.at("c").at(i));
  m.x = oct_from_json(j.at("x"));
  m.y = oct_from_json(j.at("y"));
  m.z = oct_from_json(j.at("z"));
  return m;
}

json family_to_json(const HSSFamily& f) {
  json out;
  switch (f.tag) {
    case FamilyTag::Grassmann:
      out["family"] = "grassmann";
      out["p"] = f.p;
      out["q"] = f.q;
      break;
    case FamilyTag::OrthGrassmann:
      out["family"] = "orth-grassmann";
      out["n"] = f.n;
      break;
    case FamilyTag::LagGrassmann:
      out["family"] = "lag-grassmann";
      out["n"] = f.n;
      break;
    case FamilyTag::Quadric:
      out["family"] = "quadric";
      out["n"] = f.n;
      out["form"] = f.form == QuadricForm::Split ? "split" : "sum-squares";
      break;
    case FamilyTag::CayleyPlane:
      out["family"] = "cayley-plane";
      break;
    case FamilyTag::Freudenthal:
      out["family"] = "freudenthal";
      break;
  }
  return out;
}

HSSFamily family_from_json(const json& j) {
  const std::string tag = j.at("family").get<std::string>();
  if (tag == "grassmann")
    return HSSFamily::grassmann(j.at("p").get<std::size_t>(), j.at("q").get<std::size_t>());
  if (tag == "orth-grassmann") return HSSFamily::orth_grassmann(j.at("n").get<std::size_t>());
  if (tag == "lag-grassmann") return HSSFamily::lag_grassmann(j.at("n").get<std::size_t>());
  if (tag == "quadric") {
    QuadricForm form = QuadricForm::Split;
    if (j.contains("form") && j.at("form").get<std::string>() == "sum-squares")
      form = QuadricForm::SumSquares;
    return HSSFamily::quadric(j.at("n").get<std::size_t>(), form);
  }
  if (tag == "cayley-plane") return HSSFamily::cayley_plane();
  if (tag == "freudenthal") return HSSFamily::freudenthal();
  throw std::invalid_argument("unknown family tag: " + tag);
}

json tangent_to_json(const TangentVec& v) {
  json out = family_to_json(v.family);
  std::visit(
      [&out](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, RatMatrix>) out["payload"] = matrix_to_json(payload);
        if constexpr (std::is_same_v<T, RatVec>) out["payload"] = vec_to_json(payload);
        if constexpr (std::is_same_v<T, OctPair>)
          out["payload"] =
              json{{"u", oct_to_json(payload.first)}, {"w", oct_to_json(payload.second)}};
        if constexpr (std::is_same_v<T, JordanElem>) out["payload"] = jordan_to_json(payload);
      },
      v.payload);
  return out;
}

TangentVec tangent_from_json(const json& j) {
  const HSSFamily f = family_from_json(j);
  const json& payload = j.at("payload");
  TangentVec v = zero_tangent(f);
  switch (f.tag) {
    case FamilyTag::Grassmann:
    case FamilyTag::OrthGrassmann:
    case FamilyTag::LagGrassmann:
      v.payload = matrix_from_json(payload);
      break;
    case FamilyTag::Quadric:
      v.payload = vec_from_json(payload);
      break;
    case FamilyTag::CayleyPlane:
      v.payload = OctPair{oct_from_json(payload.at("u")), oct_from_json(payload.at("w"))};
      break;
    case FamilyTag::Freudenthal:
      v.payload = jordan_from_json(payload);
      break;
  }
  validate_tangent(v);
  return v;
}

json proj_point_to_json(const ProjPoint& z) {
  json out;
  out["point"] = vec_to_json(z.coords());
  if (z.has_blocks()) {
    json blocks = json::array();
    for (std::size_t b : *z.blocks()) blocks.push_back(b);
    out["blocks"] = std::move(blocks);
  }
  return out;
}

ProjPoint proj_point_from_json(const json& j) {
  RatVec coords = vec_from_json(j.at("point"));
  std::optional<std::vector<std::size_t>> blocks;
  if (j.contains("blocks")) blocks = j.at("blocks").get<std::vector<std::size_t>>();
  return proj_point(std::move(coords), std::move(blocks));
}

}  // namespace hss
