#include "k3walls/serialize.hpp"

#include <sstream>

#include "k3walls/errors.hpp"

namespace k3walls {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "JSON schema mismatch: " + what);
}

json optional_int(const std::optional<std::int64_t>& value) {
  return value ? json(*value) : json(nullptr);
}

json stratum_json(const BNStratum& st) {
  return {{"r", st.r},
          {"rho", st.rho},
          {"w_r", to_json(st.w)},
          {"w_r_sq", st.w_sq},
          {"moduli_dim_wr", optional_int(st.moduli_dim_w)},
          {"ext1_dim", st.ext1_dim},
          {"grassmannian_dim", st.grassmannian_dim},
          {"dim_Vrd_linear_system", optional_int(st.dim_Vrd_linear_system)}};
}

}  // namespace

json to_json(const Rational& value) { return to_string(value); }

json to_json(const ExtRational& value) { return to_string(value); }

json to_json(const MukaiVector& v) { return json::array({v.r, v.c, v.s}); }

json to_json(const RationalMukaiVector& v) {
  return json::array({to_string(v.r), to_string(v.c), to_string(v.s)});
}

json to_json(const ChargeValue& z) {
  return {{"re", to_string(z.re)}, {"im_over_alpha", to_string(z.im_over_alpha)}};
}

json to_json(const WallShape& shape) {
  if (const auto* arc = std::get_if<Semicircle>(&shape)) {
    return {{"type", "semicircle"},
            {"center", to_string(arc->center)},
            {"radius_sq", to_string(arc->radius_sq)}};
  }
  return {{"type", "vline"}, {"beta", to_string(std::get<VerticalLine>(shape).beta)}};
}

json to_json(const Wall& wall) {
  json destabilizers = json::array();
  for (const auto& a : wall.destabilizers) destabilizers.push_back(to_json(a));
  return {{"shape", to_json(wall.shape)},
          {"destabilizers", destabilizers},
          {"for_vector", to_json(wall.for_vector)},
          {"candidate_only", wall.candidate_only}};
}

json to_json(const BNReport& report) {
  json strata = json::array();
  for (const auto& st : report.strata) strata.push_back(stratum_json(st));
  json out = {{"g", report.input.g},
              {"d", report.input.d},
              {"r", report.input.r},
              {"rho", report.rho},
              {"v", to_json(report.v)},
              {"w_r", to_json(report.w)},
              {"w_r_sq", report.w_sq},
              {"moduli_dim_v", report.moduli_dim_v},
              {"moduli_dim_wr", optional_int(report.moduli_dim_w)},
              {"ext1_dim", report.ext1_dim},
              {"grassmannian_dim", report.grassmannian_dim},
              {"dim_Vrd_linear_system", optional_int(report.dim_Vrd_linear_system)},
              {"verdict_VrdC", verdict_string(report)},
              {"strata", strata}};
  if (report.warning) out["warning"] = *report.warning;
  return out;
}

json to_json(const DivisorClass& d) {
  return {{"coords", json::array({to_string(d.coords[0]), to_string(d.coords[1])})}};
}

json to_json(const HyperplaneEntry& entry) {
  json witnesses = json::array();
  for (const auto& a : entry.witnesses) witnesses.push_back(to_json(a));
  return {{"coords", json::array({std::to_string(entry.ray.coords[0]),
                                  std::to_string(entry.ray.coords[1])})},
          {"generator", to_json(entry.ray.generator)},
          {"square", std::to_string(entry.generator_square)},
          {"class", ray_class_name(entry.ray_class)},
          {"witnesses", witnesses}};
}

json to_json(const HyperplaneArrangement& arrangement) {
  auto list = [](const std::vector<HyperplaneEntry>& entries) {
    json out = json::array();
    for (const auto& e : entries) out.push_back(to_json(e));
    return out;
  };
  return {{"v", to_json(arrangement.v)},
          {"search_bound", arrangement.search_bound},
          {"complete_within_bound_only", true},
          {"cutting", list(arrangement.cutting)},
          {"boundary", list(arrangement.boundary)},
          {"non_cutting", list(arrangement.non_cutting)}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) schema_error("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

MukaiVector mukai_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) schema_error("vector must be [r, c, s]");
  for (const auto& x : j) {
    if (!x.is_number_integer()) schema_error("vector entries must be integers");
  }
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()};
}

ChargeValue charge_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im_over_alpha")) {
    schema_error("charge needs re and im_over_alpha");
  }
  return {rational_from_json(j["re"]), rational_from_json(j["im_over_alpha"])};
}

Wall wall_from_json(const json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("destabilizers")) {
    schema_error("wall needs shape and destabilizers");
  }
  const json& shape = j["shape"];
  Wall wall;
  const std::string type = shape.value("type", "");
  if (type == "semicircle") {
    wall.shape = Semicircle{rational_from_json(shape.at("center")),
                            rational_from_json(shape.at("radius_sq"))};
  } else if (type == "vline") {
    wall.shape = VerticalLine{rational_from_json(shape.at("beta"))};
  } else {
    schema_error("unknown wall type '" + type + "'");
  }
  for (const auto& a : j["destabilizers"]) wall.destabilizers.push_back(mukai_from_json(a));
  if (j.contains("for_vector")) wall.for_vector = mukai_from_json(j["for_vector"]);
  wall.candidate_only = j.value("candidate_only", true);
  return wall;
}

std::string bn_csv_header() { return "g,d,r,rho,w_sq,ext1,grass,dimV,verdict"; }

std::string bn_csv_row(const BNReport& report) {
  std::ostringstream row;
  row << report.input.g << ',' << report.input.d << ',' << report.input.r << ','
      << report.rho << ',' << report.w_sq << ',' << report.ext1_dim << ','
      << report.grassmannian_dim << ',';
  if (report.dim_Vrd_linear_system) row << *report.dim_Vrd_linear_system;
  row << ',' << verdict_string(report);
  return row.str();
}

}  // namespace k3walls
