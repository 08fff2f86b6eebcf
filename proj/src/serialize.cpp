#include "ecat/serialize.hpp"

#include <stdexcept>

namespace ecat {

namespace {

Json optional_long(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<long> read_optional_long(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<long>();
}

}  // namespace

Json to_json(const std::vector<ExactCount>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

Json to_json(const AlcovedSpec& spec) {
  Json bounds = Json::array();
  for (const auto& [interval, bound] : spec.bounds()) {
    bounds.push_back({{"i", interval.first},
                      {"j", interval.second},
                      {"b", optional_long(bound.lower)},
                      {"c", optional_long(bound.upper)}});
  }
  return {{"ambient_n", spec.ambient_n()}, {"level_k", spec.level_k()}, {"bounds", bounds}};
}

AlcovedSpec alcoved_spec_from_json(const Json& j) {
  AlcovedSpec spec(j.at("ambient_n").get<int>(), j.at("level_k").get<int>());
  for (const auto& b : j.value("bounds", Json::array())) {
    spec.add_bound(b.at("i").get<int>(), b.at("j").get<int>(), read_optional_long(b, "b"),
                   read_optional_long(b, "c"));
  }
  return spec;
}

Json to_json(const EhrhartRecord& record) {
  Json coefficients = Json::array();
  for (const auto& c : record.coefficients) coefficients.push_back(to_fraction_string(c));
  return {{"dimension", record.dimension},
          {"evaluations", to_json(record.evaluations)},
          {"coefficients", coefficients},
          {"normalized_volume", to_decimal(record.normalized_volume)}};
}

EhrhartRecord ehrhart_record_from_json(const Json& j) {
  EhrhartRecord record;
  record.dimension = j.at("dimension").get<int>();
  for (const auto& e : j.at("evaluations")) record.evaluations.push_back(parse_decimal(e.get<std::string>()));
  for (const auto& c : j.at("coefficients")) record.coefficients.push_back(parse_fraction(c.get<std::string>()));
  record.normalized_volume = parse_decimal(j.at("normalized_volume").get<std::string>());
  return record;
}

Json to_json(const OrbitCertificate& cert) {
  Json shifts = Json::array();
  for (std::size_t i = 0; i < cert.shifts.size(); ++i) {
    shifts.push_back({{"start", cert.shifts[i].start},
                      {"permutation", cert.shifts[i].permutation.to_string()},
                      {"exceedance", cert.exceedances.at(i)}});
  }
  return {{"base", cert.base.to_string()},
          {"n", cert.n},
          {"case", to_string(cert.case_tag)},
          {"shifts", shifts},
          {"exceedances", cert.exceedances}};
}

OrbitCertificate orbit_certificate_from_json(const Json& j) {
  OrbitCertificate cert{Permutation::parse(j.at("base").get<std::string>()), j.at("n").get<int>(),
                        parse_orbit_case(j.at("case").get<std::string>()), {}, {}};
  for (const auto& s : j.at("shifts")) {
    cert.shifts.push_back({s.at("start").get<int>(), Permutation::parse(s.at("permutation").get<std::string>())});
  }
  cert.exceedances = j.at("exceedances").get<std::vector<int>>();
  if (cert.exceedances.size() != cert.shifts.size()) {
    throw std::invalid_argument("certificate lists " + std::to_string(cert.shifts.size()) +
                                " shifts but " + std::to_string(cert.exceedances.size()) +
                                " exceedances");
  }
  return cert;
}

Json to_json(const EquidistributionReport& r) {
  return {{"target", "equidistribution"},
          {"n", r.n},
          {"census", to_json(r.census)},
          {"orbit_census", to_json(r.orbit_census)},
          {"expected_per_bucket", to_decimal(r.expected_per_bucket)},
          {"expected_total", to_decimal(r.expected_total)},
          {"passed", r.passed},
          {"witness", r.witness}};
}

Json to_json(const SubdivisionReport& r) {
  return {{"target", "subdivision"},
          {"k", r.k},
          {"n", r.n},
          {"piece_volumes", to_json(r.piece_volumes)},
          {"hypersimplex_volume", to_decimal(r.hypersimplex_volume)},
          {"expected_total", to_decimal(r.expected_total)},
          {"expected_piece", to_decimal(r.expected_piece)},
          {"samples", r.samples},
          {"uncovered", r.uncovered},
          {"overlaps", r.overlaps},
          {"interior_hits", r.interior_hits},
          {"passed", r.passed},
          {"witness", r.witness}};
}

Json to_json(const AlcovedDyckReport& r) {
  return {{"target", "alcoved-vs-dyck"},
          {"k", r.k},
          {"n", r.n},
          {"w_set_count", to_decimal(r.w_set)},
          {"dyck_count", to_decimal(r.dyck)},
          {"fuss", to_decimal(r.fuss)},
          {"passed", r.passed},
          {"witness", r.witness}};
}

Json to_json(const CensusVolumeReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"T", subset_key(row.flipped)},
                    {"census", to_decimal(row.census)},
                    {"volume", to_decimal(row.volume)},
                    {"w_set_count", to_decimal(row.w_set)}});
  }
  return {{"target", "census-vs-volumes"},
          {"n", r.n},
          {"rows", rows},
          {"volume_by_size", to_json(r.volume_by_size)},
          {"expected_per_size", to_decimal(r.expected_per_size)},
          {"expected_total", to_decimal(r.expected_total)},
          {"passed", r.passed},
          {"witness", r.witness}};
}

Json to_json(const BijectionReport& r) {
  return {{"target", "bijection"},
          {"n", r.n},
          {"domain_size", to_decimal(r.domain_size)},
          {"image_size", to_decimal(r.image_size)},
          {"expected_size", to_decimal(r.expected_size)},
          {"passed", r.passed},
          {"witness", r.witness}};
}

}  // namespace ecat
