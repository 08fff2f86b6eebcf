#include <random>

#include "doctest.h"
#include "ecat/permcore.hpp"
#include "ecat/serialize.hpp"
#include "oracles.hpp"

using ecat::Json;

TEST_CASE("AlcovedSpec JSON shape") {
  const auto j = ecat::to_json(ecat::spec_for_Pkn(2, 1));
  CHECK(j["ambient_n"] == 4);
  CHECK(j["level_k"] == 2);
  REQUIRE(j["bounds"].size() == 5);
  const auto& prefix = j["bounds"][1];  // (0, 2) sorts right after (0, 1)
  CHECK(prefix["i"] == 0);
  CHECK(prefix["j"] == 2);
  CHECK(prefix["b"].is_null());
  CHECK(prefix["c"] == 1);
  // Keys come out sorted, so dumps are stable.
  CHECK(j.dump() == ecat::to_json(ecat::spec_for_Pkn(2, 1)).dump());
  CHECK(j.dump().find("\"ambient_n\"") < j.dump().find("\"bounds\""));
}

TEST_CASE("AlcovedSpec round trip") {
  std::vector<ecat::AlcovedSpec> specs{ecat::spec_for_hypersimplex(3, 7), ecat::spec_for_Pkn(3, 2),
                                       ecat::spec_for_P2n_flipped(3, {1, 3}), ecat::spec_for_Pkni(2, 3, 1).spec};
  ecat::AlcovedSpec custom(5, 2);
  custom.add_bound(1, 4, 1, std::nullopt);
  specs.push_back(custom);
  for (const auto& spec : specs) {
    CHECK(ecat::alcoved_spec_from_json(ecat::to_json(spec)) == spec);
    CHECK(ecat::alcoved_spec_from_json(Json::parse(ecat::to_json(spec).dump())) == spec);
  }
}

TEST_CASE("AlcovedSpec parse errors") {
  CHECK_THROWS_AS(ecat::alcoved_spec_from_json(Json::parse(R"({"ambient_n": 4})")), Json::exception);
  CHECK_THROWS_AS(ecat::alcoved_spec_from_json(Json::parse(R"({"ambient_n": 4, "level_k": 4})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(ecat::alcoved_spec_from_json(Json::parse(
                      R"({"ambient_n": 4, "level_k": 2, "bounds": [{"i": 0, "j": 2, "b": null, "c": null}]})")),
                  std::invalid_argument);
}

TEST_CASE("EhrhartRecord round trip") {
  for (const auto& spec : {ecat::spec_for_Pkn(2, 1), ecat::spec_for_hypersimplex(2, 5), ecat::spec_for_Pkn(3, 1)}) {
    const auto record = ecat::ehrhart_volume(spec);
    const auto j = ecat::to_json(record);
    CHECK(j["normalized_volume"].is_string());
    for (const auto& c : j["coefficients"]) CHECK(c.get<std::string>().find('/') != std::string::npos);
    CHECK(ecat::ehrhart_record_from_json(Json::parse(j.dump())) == record);
  }
  const auto j = ecat::to_json(ecat::ehrhart_volume(ecat::spec_for_Pkn(2, 1)));
  CHECK(j["coefficients"] == Json::array({"1/1", "13/6", "3/2", "1/3"}));
  CHECK(j["evaluations"] == Json::array({"1", "5", "14", "30"}));
}

TEST_CASE("OrbitCertificate round trip over S_5 with 2 descents") {
  for (const auto& w : oracle::all_permutations(5)) {
    if (oracle::descents(w) != 2) continue;
    const auto cert = ecat::analyze_orbit(ecat::Permutation(w));
    const auto j = ecat::to_json(cert);
    CHECK(j["shifts"].size() == 3);
    CHECK(ecat::orbit_certificate_from_json(Json::parse(j.dump())) == cert);
  }
  auto broken = ecat::to_json(ecat::analyze_orbit(ecat::Permutation({2, 1, 3})));
  broken["exceedances"].push_back(5);
  CHECK_THROWS_AS(ecat::orbit_certificate_from_json(broken), std::invalid_argument);
  broken = ecat::to_json(ecat::analyze_orbit(ecat::Permutation({2, 1, 3})));
  broken["case"] = "sideways";
  CHECK_THROWS_AS(ecat::orbit_certificate_from_json(broken), std::invalid_argument);
}

TEST_CASE("count vectors serialize as decimal strings") {
  CHECK(ecat::to_json(std::vector<ecat::ExactCount>{1, 22, ecat::ExactCount("123456789012345678901234567890")}) ==
        Json::array({"1", "22", "123456789012345678901234567890"}));
}
