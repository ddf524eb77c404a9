#include <cmath>
#include <sstream>

#include <json.hpp>

#include "povm_robust/domsdp.hpp"
#include "povm_robust/rom.hpp"
#include "support.hpp"

namespace povm {
namespace {

using testing::throws_code;

ComplexMatrix ket_projector(ComplexVector v) { return ComplexMatrix::outer(v); }

TEST(Sdp, HelstromForZeroAndPlus) {
  const double s = 1.0 / std::sqrt(2.0);
  const Ensemble e({ket_projector({1.0, 0.0}), ket_projector({s, s})}, {0.5, 0.5});
  EXPECT_NEAR(min_error_guess_value(e), 0.5 * (1.0 + s), 1e-7);
}

TEST(Sdp, OrthogonalAndIdenticalStates) {
  const Ensemble orth({ket_projector({1.0, 0.0, 0.0}), ket_projector({0.0, 1.0, 0.0}),
                       ket_projector({0.0, 0.0, 1.0})},
                      {0.2, 0.3, 0.5});
  EXPECT_NEAR(min_error_guess_value(orth), 1.0, 1e-7);
  Rng rng(51);
  const auto rho = random_density_matrix(3, rng);
  const Ensemble same({rho, rho, rho}, {0.2, 0.5, 0.3});
  EXPECT_NEAR(min_error_guess_value(same), 0.5, 1e-7);
}

TEST(Sdp, GuessValueBoundsEveryMeasurement) {
  Rng rng(52);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const auto e = random_ensemble(d, 2 + rep % 4, rng);
    const double best = min_error_guess_value(e);
    for (int k = 0; k < 20; ++k)
      EXPECT_LE(p_guess_with_measurement(e, random_povm(d, e.size(), rng)), best + 1e-7);
    EXPECT_GE(best, p_guess_classical(e) - 1e-9);
  }
}

TEST(Sdp, RomViaSdpMatchesClosedForm) {
  Rng rng(53);
  for (int rep = 0; rep < 30; ++rep) {
    const auto m = random_povm(2 + rep % 3, 2 + rep % 5, rng);
    EXPECT_NEAR(rom_via_sdp(m), rom(m), 1e-6);
  }
  EXPECT_NEAR(rom_via_sdp(computational_basis_povm(3)), 2.0, 1e-9);
}

TEST(Sdp, SolutionDiagnostics) {
  Rng rng(54);
  const auto e = random_ensemble(3, 4, rng);
  DominanceProgram program{3, hermitian_basis(3), {}};
  for (std::size_t x = 0; x < e.size(); ++x) program.constraints.push_back(e.states()[x] * e.priors()[x]);
  std::ostringstream trace;
  SdpOptions options;
  options.trace = &trace;
  const auto sol = solve_dominating(program, options);
  ASSERT_EQ(sol.status, SdpStatus::Optimal);
  EXPECT_GE(sol.min_slack, -options.slack_tol);
  for (const auto& k : program.constraints) EXPECT_GE(min_eigenvalue(sol.optimizer - k), -1e-7);
  EXPECT_NEAR(sol.optimizer.trace().real(), sol.value, 1e-12);
  EXPECT_TRUE(std::is_sorted(sol.value_history.begin(), sol.value_history.end(),
                             [](double a, double b) { return a < b - 1e-12; }) ||
              sol.value_history.size() <= 1);
  std::istringstream lines(trace.str());
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("iteration") && j.contains("value") && j.contains("worst_slack"));
    ++count;
  }
  EXPECT_EQ(count, sol.rounds);
}

TEST(Sdp, ValueHistoryIsNondecreasing) {
  Rng rng(55);
  for (int rep = 0; rep < 10; ++rep) {
    const auto e = random_ensemble(3, 3, rng);
    DominanceProgram program{3, hermitian_basis(3), {}};
    for (std::size_t x = 0; x < e.size(); ++x)
      program.constraints.push_back(e.states()[x] * e.priors()[x]);
    const auto sol = solve_dominating(program);
    for (std::size_t i = 1; i < sol.value_history.size(); ++i)
      EXPECT_GE(sol.value_history[i], sol.value_history[i - 1] - 1e-10);
  }
}

TEST(Sdp, InfeasibleSubspace) {
  const double s = 1.0 / std::sqrt(2.0);
  DominanceProgram program{2, {ComplexMatrix{{0.0, s}, {s, 0.0}}}, {ComplexMatrix::identity(2)}};
  EXPECT_EQ(solve_dominating(program).status, SdpStatus::Infeasible);
}

TEST(Sdp, CutCapGivesIterationLimit) {
  Rng rng(56);
  const auto e = random_ensemble(4, 5, rng);
  DominanceProgram program{4, hermitian_basis(4), {}};
  for (std::size_t x = 0; x < e.size(); ++x) program.constraints.push_back(e.states()[x] * e.priors()[x]);
  SdpOptions options;
  options.max_cuts = 1;
  EXPECT_EQ(solve_dominating(program, options).status, SdpStatus::IterationLimit);
  EXPECT_TRUE(throws_code([&] { min_error_guess_value(e, options); }, ErrorCode::IterationLimit));
}

TEST(Sdp, ValidatesProgram) {
  const auto eye = ComplexMatrix::identity(2);
  DominanceProgram dependent{2, {eye, eye * 2.0}, {eye}};
  EXPECT_TRUE(throws_code([&] { solve_dominating(dependent); }, ErrorCode::SizeMismatch));
  DominanceProgram skew{2, {eye}, {ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}}};
  EXPECT_TRUE(throws_code([&] { solve_dominating(skew); }, ErrorCode::NotHermitian));
  DominanceProgram empty{2, {eye}, {}};
  EXPECT_TRUE(throws_code([&] { solve_dominating(empty); }, ErrorCode::SizeMismatch));
}

}  // namespace
}  // namespace povm
