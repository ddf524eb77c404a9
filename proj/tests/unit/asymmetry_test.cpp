#include <cmath>
#include <numbers>

#include "povm_robust/asymmetry.hpp"
#include "povm_robust/single_shot_info.hpp"
#include "support.hpp"

namespace povm {
namespace {

using testing::matrices_near;
using testing::throws_code;

ComplexMatrix diagonal_part(const ComplexMatrix& rho) {
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < rho.rows(); ++i) out(i, i) = rho(i, i);
  return out;
}

TEST(Group, Validation) {
  const auto eye = ComplexMatrix::identity(2);
  const ComplexMatrix z{{1.0, 0.0}, {0.0, -1.0}};
  const ComplexMatrix x{{0.0, 1.0}, {1.0, 0.0}};
  EXPECT_NO_THROW(GroupRepresentation({eye, z}));
  EXPECT_TRUE(throws_code([&] { GroupRepresentation({z}); }, ErrorCode::InvalidGroup));
  EXPECT_TRUE(throws_code([&] { GroupRepresentation({eye, x * 2.0}); }, ErrorCode::InvalidGroup));
  EXPECT_TRUE(throws_code([&] { GroupRepresentation({eye, x, z}); }, ErrorCode::InvalidGroup));
  EXPECT_TRUE(throws_code([] { GroupRepresentation({}); }, ErrorCode::InvalidGroup));
  // Pauli group closes up to phase.
  EXPECT_NO_THROW(GroupRepresentation({eye, x, z, x * z}));
}

TEST(Group, DephasingTwirlIsDiagonalPart) {
  Rng rng(91);
  for (std::size_t d = 1; d <= 5; ++d) {
    const auto g = dephasing_group(d);
    EXPECT_EQ(g.order(), d);
    const auto rho = random_density_matrix(d, rng);
    EXPECT_TRUE(matrices_near(twirl(rho, g), diagonal_part(rho), 1e-14));
    EXPECT_TRUE(is_symmetric(diagonal_part(rho), g));
    const auto basis = symmetric_subspace_basis(g);
    EXPECT_EQ(basis.size(), d);
    for (const auto& b : basis) EXPECT_TRUE(matrices_near(b, diagonal_part(b), 1e-14));
  }
}

TEST(Robustness, IncoherentStatesAreFree) {
  const std::vector<double> p{0.2, 0.3, 0.5};
  const auto r = roc(ComplexMatrix::diagonal(p));
  EXPECT_NEAR(r.value, 0.0, 1e-9);
  EXPECT_NEAR(r.game_advantage, 1.0, 1e-6);
}

// For qubits the robustness of coherence equals 2|rho_01|.
TEST(Robustness, QubitCoherenceIsTwiceOffDiagonal) {
  Rng rng(92);
  for (int rep = 0; rep < 40; ++rep) {
    const auto rho = random_density_matrix(2, rng);
    EXPECT_NEAR(roc(rho).value, 2.0 * std::abs(rho(0, 1)), 1e-6);
  }
}

// For pure states the robustness of coherence is (sum_i |psi_i|)^2 - 1.
TEST(Robustness, PureStateCoherenceMatchesL1Norm) {
  Rng rng(93);
  for (std::size_t d = 2; d <= 4; ++d)
    for (int rep = 0; rep < 15; ++rep) {
      const auto psi = random_pure_state(d, rng);
      double l1 = 0.0;
      for (const auto& c : psi) l1 += std::abs(c);
      EXPECT_NEAR(roc(ComplexMatrix::outer(psi)).value, l1 * l1 - 1.0, 1e-5);
    }
}

TEST(Robustness, MaximallyCoherentStates) {
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto rho = ComplexMatrix::outer(ComplexVector(d, Complex(1.0 / std::sqrt(double(d)))));
    const auto r = roc(rho);
    EXPECT_NEAR(r.value, double(d) - 1.0, 1e-5);
    EXPECT_NEAR(r.min_info, std::log2(double(d)), 1e-5);
  }
}

TEST(Robustness, DominatingOperatorCertificate) {
  Rng rng(94);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t d = 2 + rep % 2;
    const auto g = dephasing_group(d);
    const auto rho = random_density_matrix(d, rng);
    const auto r = roa(rho, g);
    EXPECT_TRUE(is_symmetric(r.dominating_operator, g, 1e-9));
    EXPECT_GE(min_eigenvalue(r.dominating_operator - rho), -1e-7);
    EXPECT_NEAR(r.dominating_operator.trace().real(), 1.0 + r.value, 1e-9);
    EXPECT_NEAR(1.0 + r.value, r.game_advantage, 1e-5);
    EXPECT_NEAR(std::log2(1.0 + r.value), r.min_info, 1e-5);
  }
}

TEST(Robustness, TrivialGroupMeansNoAsymmetry) {
  Rng rng(95);
  const GroupRepresentation trivial({ComplexMatrix::identity(3)});
  EXPECT_NEAR(roa(random_density_matrix(3, rng), trivial).value, 0.0, 1e-9);
}

TEST(Robustness, OrbitEnsembleAndErrors) {
  const auto g = dephasing_group(2);
  const ComplexMatrix plus{{0.5, 0.5}, {0.5, 0.5}};
  const auto orbit = orbit_ensemble(plus, g);
  ASSERT_EQ(orbit.size(), 2u);
  EXPECT_TRUE(matrices_near(orbit.states()[1], ComplexMatrix{{0.5, -0.5}, {-0.5, 0.5}}, 1e-15));
  EXPECT_TRUE(throws_code([&] { roa(ComplexMatrix::identity(3) * (1.0 / 3), g); }, ErrorCode::DimensionMismatch));
  EXPECT_TRUE(throws_code([&] { roa(ComplexMatrix::identity(2), g); }, ErrorCode::InvalidEnsemble));
}

}  // namespace
}  // namespace povm
