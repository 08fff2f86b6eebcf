#pragma once

// JSON schemas shared by the CLI, golden files and the Python binding.
// Exact counts are decimal strings, rationals are "p/q" strings.
//
//   AlcovedSpec      {"ambient_n", "level_k", "bounds": [{"i", "j", "b", "c"}]}
//                    with b / c null for a missing side
//   EhrhartRecord    {"dimension", "evaluations", "coefficients", "normalized_volume"}
//   OrbitCertificate {"base", "n", "case", "shifts": [{"start", "permutation",
//                    "exceedance"}], "exceedances"}

#include "json.hpp"

#include "ecat/alcoved.hpp"
#include "ecat/geometry.hpp"
#include "ecat/orbit.hpp"

namespace ecat {

using Json = nlohmann::json;

Json to_json(const AlcovedSpec& spec);
AlcovedSpec alcoved_spec_from_json(const Json& j);

Json to_json(const EhrhartRecord& record);
EhrhartRecord ehrhart_record_from_json(const Json& j);

Json to_json(const OrbitCertificate& cert);
OrbitCertificate orbit_certificate_from_json(const Json& j);

Json to_json(const EquidistributionReport& report);
Json to_json(const SubdivisionReport& report);
Json to_json(const AlcovedDyckReport& report);
Json to_json(const CensusVolumeReport& report);
Json to_json(const BijectionReport& report);

Json to_json(const std::vector<ExactCount>& values);

}  // namespace ecat
