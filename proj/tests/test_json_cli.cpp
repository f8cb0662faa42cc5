#include <doctest.h>

#include <algorithm>

#include "qrf/json_io.hpp"
#include "qrf/random.hpp"
#include "qrf/scenarios.hpp"
#include "qrf/suites.hpp"

using namespace qrf;

TEST_CASE("operator JSON round trip") {
  Rng rng(81);
  const Operator a(rng.ginibre(3, 3));
  const Json j = to_json(a);
  CHECK(j["dim"] == 3);
  const Operator back = operator_from_json(j);
  CHECK(max_abs_diff(a, back) == 0.0);  // doubles survive shortest-form dump

  Json broken = j;
  broken.erase("im");
  CHECK_THROWS_AS(operator_from_json(broken), ParseError);
}

TEST_CASE("group and rep JSON round trips") {
  const FiniteGroup s3 = make_preset("symmetric3");
  const FiniteGroup back = group_from_json(to_json(s3));
  CHECK(back == s3);

  const UnitaryRep rep = regular_rep(make_preset("cyclic:3"));
  const UnitaryRep rep_back = rep_from_json(to_json(rep));
  for (int g = 0; g < 3; ++g)
    CHECK(max_abs_diff(rep.matrix(g), rep_back.matrix(g)) == 0.0);

  // a corrupted table fails verification on parse
  Json bad = to_json(s3);
  bad["cayley"][1][1] = 1;
  CHECK_THROWS_AS(group_from_json(bad), NotAGroup);
}

TEST_CASE("frame JSON round trip validates invariants") {
  const QuantumFrame frame =
      canonical_frame(make_preset("cyclic:3"), FrameConvention::inverse);
  const Json j = to_json(frame);
  const QuantumFrame back = frame_from_json(j);
  CHECK(back.flags().sharp);
  CHECK(back.flags().complete);
  for (int x = 0; x < 3; ++x)
    CHECK(max_abs_diff(back.povm().effects()[x].op(),
                       frame.povm().effects()[x].op()) == 0.0);

  // effects that no longer sum to the identity are rejected on parse
  Json corrupt = j;
  corrupt["effects"][0]["re"][0][0] = 0.5;
  CHECK_THROWS_AS(frame_from_json(corrupt), InvariantViolation);

  // coherent seeds survive the trip
  const QuantumFrame soft = lab::unsharp_coherent_z3();
  const QuantumFrame soft_back = frame_from_json(to_json(soft));
  CHECK(soft_back.coherent_seed().has_value());
  CHECK_FALSE(soft_back.flags().localizable);
}

TEST_CASE("scenario JSON") {
  Json j{{"group", "cyclic:3"},
         {"convention", "inverse"},
         {"frames", Json::array({"canonical", "canonical"})},
         {"system", "inverse"}};
  const FrameChangeScenario scenario = scenario_from_json(j);
  CHECK(scenario.total_dim() == 27);
  CHECK(scenario.frames() == 2);

  Json bad = j;
  bad["frames"] = Json::array({"canonical"});
  CHECK_THROWS_AS(scenario_from_json(bad), ConfigError);
  bad = j;
  bad["convention"] = "upside-down";
  CHECK_THROWS_AS(scenario_from_json(bad), ConfigError);
  bad = j;
  bad.erase("system");
  CHECK_THROWS_AS(scenario_from_json(bad), ParseError);
}

TEST_CASE("signature serialization") {
  const ObservableSet trace_only =
      build_observable_set("trace", {Operator::identity(2)});
  const Json j = to_json(signature(Operator::identity(2), trace_only));
  CHECK(j["relation"] == "trace");
  CHECK(j["span_dim"] == 1);
  CHECK(j["coords"].size() == 1);
}

TEST_CASE("curve CSV schema") {
  LocalizationCurve curve;
  curve.points.push_back({2, 2, "half", 0.75, 0.25});
  curve.points.push_back({4, 4, "half", 0.875, 0.125});
  const std::string csv = curve_to_csv(curve);
  CHECK(csv.rfind("d,n,set_id,probability,deviation\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("suite runner determinism and failure reporting") {
  SuiteConfig config{7, 5};
  const SuiteReport a = run_suite(SuiteName::comparison, config);
  const SuiteReport b = run_suite(SuiteName::comparison, config);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(a.pass);

  CHECK_THROWS_AS(parse_suite("nonsense"), ConfigError);
  CHECK(suite_label(parse_suite("phase")) == "phase");
  CHECK(all_suites().size() == 5);
}
