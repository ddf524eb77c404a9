#include <cmath>

#include "povm_robust/simulability.hpp"
#include "support.hpp"

namespace povm {
namespace {

using testing::matrices_near;
using testing::throws_code;

void expect_reconstructs(const Povm& source, const Povm& target, const SimulabilityResult& r) {
  ASSERT_EQ(r.verdict, Verdict::Simulable);
  ASSERT_TRUE(r.map.has_value());
  const auto rebuilt = post_process(source, *r.map);
  for (std::size_t b = 0; b < target.outcomes(); ++b)
    EXPECT_TRUE(matrices_near(rebuilt[b], target[b], 1e-7));
  EXPECT_FALSE(r.witness.has_value());
}

void expect_separated(const Povm& source, const Povm& target, const SimulabilityResult& r) {
  ASSERT_EQ(r.verdict, Verdict::NotSimulable);
  ASSERT_TRUE(r.witness.has_value());
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_FALSE(r.map.has_value());
  EXPECT_GT(r.certificate->residual, 0.0);
  EXPECT_NEAR(*r.gap, guessing_gap(*r.witness, source, target), 1e-12);
  EXPECT_GE(guessing_gap(*r.witness, source, target), 1e-9);
}

TEST(Simulability, CoarseGrainingIsSimulable) {
  const auto z = computational_basis_povm(2);
  const Povm merged({ComplexMatrix::identity(2)});
  expect_reconstructs(z, merged, is_simulable(z, merged));
}

TEST(Simulability, SelfAndPermutation) {
  const auto m = random_povm(3, 4, std::uint64_t{81});
  expect_reconstructs(m, m, is_simulable(m, m));
  const Povm shuffled({m[2], m[0], m[3], m[1]});
  expect_reconstructs(m, shuffled, is_simulable(m, shuffled));
}

TEST(Simulability, TrivialTargetsAreAlwaysSimulable) {
  Rng rng(82);
  const std::vector<double> q{0.2, 0.5, 0.3};
  for (int rep = 0; rep < 10; ++rep) {
    const auto m = random_povm(2 + rep % 3, 2 + rep % 3, rng);
    const auto t = trivial_povm(q, m.dimension());
    expect_reconstructs(m, t, is_simulable(m, t));
  }
}

TEST(Simulability, ZCannotSimulateX) {
  const auto z = computational_basis_povm(2);
  const auto x = qubit_x_povm();
  const auto r = is_simulable(z, x);
  expect_separated(z, x, r);
  EXPECT_GE(*r.gap, 0.05);
}

TEST(Simulability, TrivialCannotSimulateInformative) {
  const std::vector<double> q{0.5, 0.5};
  const auto t = trivial_povm(q, 2);
  const auto z = computational_basis_povm(2);
  expect_separated(t, z, is_simulable(t, z));
}

TEST(Simulability, DepolarizingIsOneWay) {
  const auto z = computational_basis_povm(3);
  const auto noisy = depolarize_povm(z, 0.4);
  expect_reconstructs(z, noisy, is_simulable(z, noisy));
  expect_separated(noisy, z, is_simulable(noisy, z));
}

TEST(Simulability, RandomPostProcessingsAreRecovered) {
  Rng rng(83);
  for (int rep = 0; rep < 60; ++rep) {
    const auto m = random_povm(2 + rep % 3, 2 + rep % 5, rng);
    const auto t = post_process(m, random_stochastic_map(m.outcomes(), 1 + rep % 6, rng));
    const auto r = is_simulable(m, t);
    expect_reconstructs(m, t, r);
    EXPECT_LE(r.reconstruction_residual, 1e-7);
    EXPECT_TRUE(monotone_suite(m, t, 50, std::uint64_t(rep)));
  }
}

TEST(Simulability, RandomPairsAreSeparatedWithWitnesses) {
  Rng rng(84);
  int separated = 0;
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const auto m = random_povm(d, 2 + rep % 3, rng);
    const auto t = random_povm(d, 2 + rep % 4, rng);
    const auto r = is_simulable(m, t);
    if (r.verdict == Verdict::NotSimulable) {
      ++separated;
      expect_separated(m, t, r);
    }
  }
  EXPECT_GT(separated, 20);
}

TEST(Simulability, CertificateYieldsWitness) {
  const auto z = computational_basis_povm(2);
  const auto sic = qubit_sic_povm();
  const auto r = is_simulable(z, sic);
  ASSERT_EQ(r.verdict, Verdict::NotSimulable);
  const auto w = witness_from_certificate(z, sic, *r.certificate);
  EXPECT_GE(guessing_gap(w, z, sic), 1e-9);
  const SimulabilityCertificate wrong{{}, {}, 1.0};
  EXPECT_TRUE(throws_code([&] { witness_from_certificate(z, sic, wrong); }, ErrorCode::ShapeMismatch));
}

TEST(Simulability, DimensionMismatch) {
  EXPECT_TRUE(throws_code([] { is_simulable(computational_basis_povm(2), computational_basis_povm(3)); },
                          ErrorCode::DimensionMismatch));
}

TEST(Simulability, VerdictNames) {
  EXPECT_EQ(to_string(Verdict::Simulable), "Simulable");
  EXPECT_EQ(to_string(Verdict::NotSimulable), "NotSimulable");
}

}  // namespace
}  // namespace povm
