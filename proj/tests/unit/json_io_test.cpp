#include <cstdio>
#include <filesystem>
#include <fstream>

#include "povm_robust/json_io.hpp"
#include "support.hpp"

namespace povm {
namespace {

using io::json;
using testing::matrices_near;
using testing::throws_code;

TEST(Json, CanonicalNumberFormatting) {
  EXPECT_EQ(io::canonical_dump(json{{"rom", 1.0}}), R"({"rom":1.0})");
  EXPECT_EQ(io::canonical_dump(json{{"rom", 0.0}}), R"({"rom":0.0})");
  EXPECT_EQ(io::canonical_dump(json(-0.0)), "0.0");
  EXPECT_EQ(io::canonical_dump(json(1e-20)), "1e-20");
  EXPECT_EQ(io::canonical_dump(json(0.1 + 0.2)), "0.3");
  EXPECT_EQ(io::canonical_dump(json(1.0 / 3.0)), "0.333333333333333");
  EXPECT_EQ(io::canonical_dump(json(3)), "3");
  EXPECT_EQ(io::canonical_dump(json{{"b", 1}, {"a", nullptr}, {"c", "x"}}), R"({"a":null,"b":1,"c":"x"})");
}

TEST(Json, PovmRoundTrip) {
  const auto m = random_povm(3, 4, std::uint64_t{101});
  const auto back = io::povm_from_json(json::parse(io::canonical_dump(io::to_json(m))));
  ASSERT_EQ(back.outcomes(), m.outcomes());
  for (std::size_t a = 0; a < m.outcomes(); ++a) EXPECT_TRUE(matrices_near(back[a], m[a], 1e-14));
  EXPECT_EQ(io::canonical_dump(io::to_json(back)), io::canonical_dump(io::to_json(m)));
}

TEST(Json, EnsembleMapJointGroupStateRoundTrip) {
  const auto e = random_ensemble(2, 3, std::uint64_t{102});
  const auto e2 = io::ensemble_from_json(io::to_json(e));
  EXPECT_EQ(e2.priors(), e.priors());
  EXPECT_TRUE(matrices_near(e2.states()[2], e.states()[2], 0.0));

  const auto map = random_stochastic_map(3, 2, std::uint64_t{103});
  EXPECT_EQ(io::map_from_json(io::to_json(map)).rows(), map.rows());

  const JointDistribution joint({{0.25, 0.25}, {0.5, 0.0}});
  EXPECT_EQ(io::joint_from_json(io::to_json(joint)).rows(), joint.rows());

  const auto g = dephasing_group(3);
  EXPECT_EQ(io::group_from_json(io::to_json(g)).unitaries(), g.unitaries());

  const ComplexMatrix rho{{0.5, Complex(0.0, 0.5)}, {Complex(0.0, -0.5), 0.5}};
  EXPECT_EQ(io::state_from_json(io::state_to_json(rho)), rho);
}

TEST(Json, ReportRoundTrips) {
  const auto m = random_povm(2, 3, std::uint64_t{104});
  const auto report = rom_report(m);
  const auto text = io::canonical_dump(io::to_json(report));
  const auto back = io::robustness_report_from_json(json::parse(text));
  EXPECT_EQ(io::canonical_dump(io::to_json(back)), text);

  const std::vector<double> q{1.0};
  const auto trivial = rom_report(trivial_povm(q, 2));
  EXPECT_TRUE(io::robustness_report_from_json(io::to_json(trivial)).trivial());

  const auto sim = is_simulable(computational_basis_povm(2), qubit_x_povm());
  const auto sim_text = io::canonical_dump(io::to_json(sim));
  EXPECT_EQ(io::canonical_dump(io::to_json(io::simulability_from_json(json::parse(sim_text)))), sim_text);

  const auto roc_report = roc(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}});
  const auto roc_text = io::canonical_dump(io::to_json(roc_report));
  EXPECT_EQ(io::canonical_dump(io::to_json(io::asymmetry_report_from_json(json::parse(roc_text)))), roc_text);
}

TEST(Json, SchemaErrorsAreParseErrors) {
  const auto parse = ErrorCode::ParseError;
  EXPECT_TRUE(throws_code([] { io::povm_from_json(json::parse(R"({"elements":[]})")); }, parse));
  EXPECT_TRUE(throws_code([] { io::povm_from_json(json::parse(R"({"dimension":2,"elements":[[[1,0]]]})")); }, parse));
  EXPECT_TRUE(throws_code([] { io::povm_from_json(json::parse(R"({"dimension":1,"elements":[[[[1,"a"]]]]})")); }, parse));
  EXPECT_TRUE(throws_code([] { io::povm_from_json(json::parse(R"({"dimension":0,"elements":[]})")); }, parse));
  EXPECT_TRUE(throws_code([] { io::map_from_json(json::parse(R"({"rows":2,"cols":1,"p":[[1]]})")); }, parse));
  EXPECT_TRUE(throws_code([] { io::matrix_from_json(json::parse("[[[1,0],[0,0]],[[0,0]]]")); }, parse));
  EXPECT_TRUE(throws_code([] { io::simulability_from_json(json::parse(
                              R"({"verdict":"Maybe","map":null,"witness":null,"gap":null})")); },
                          parse));
}

TEST(Json, DomainErrorsPassThrough) {
  EXPECT_TRUE(throws_code([] { io::povm_from_json(json::parse(R"({"dimension":1,"elements":[[[[0.5,0]]]]})")); },
                          ErrorCode::CompletenessViolation));
  io::ReadTolerances loose;
  loose.completeness = 0.6;
  EXPECT_NO_THROW(io::povm_from_json(json::parse(R"({"dimension":1,"elements":[[[[0.5,0]]]]})"), loose));
}

TEST(Json, ReadFileErrors) {
  EXPECT_TRUE(throws_code([] { io::read_json_file("/nonexistent/file.json"); }, ErrorCode::ParseError));
  const auto path = std::filesystem::temp_directory_path() / "povm_robust_bad.json";
  std::ofstream(path) << "{\"dimension\": ";
  EXPECT_TRUE(throws_code([&] { io::read_json_file(path.string()); }, ErrorCode::ParseError));
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace povm
