#include <cmath>
#include <numbers>

#include "povm_robust/numerics.hpp"
#include "support.hpp"

namespace povm {
namespace {

using testing::matrices_near;
using testing::random_hermitian;
using testing::throws_code;

TEST(Eigen, TwoByTwoMatchesQuadraticFormula) {
  Rng rng(11);
  std::normal_distribution<double> n;
  for (int i = 0; i < 200; ++i) {
    const double a = n(rng), d = n(rng);
    const Complex b(n(rng), n(rng));
    const ComplexMatrix h{{a, b}, {std::conj(b), d}};
    const double mid = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
    const auto eig = eig_hermitian(h);
    EXPECT_NEAR(eig.eigenvalues[0], mid - rad, 1e-12);
    EXPECT_NEAR(eig.eigenvalues[1], mid + rad, 1e-12);
  }
}

TEST(Eigen, ReconstructsRandomHermitian) {
  Rng rng(12);
  for (std::size_t d = 1; d <= 8; ++d)
    for (int rep = 0; rep < 20; ++rep) {
      const auto h = random_hermitian(d, rng);
      const auto eig = eig_hermitian(h);
      ASSERT_EQ(eig.eigenvalues.size(), d);
      EXPECT_TRUE(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
      EXPECT_TRUE(matrices_near(reconstruct(eig), h, 1e-11));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          EXPECT_NEAR(std::abs(inner(eig.eigenvectors[i], eig.eigenvectors[j])), i == j ? 1.0 : 0.0,
                      1e-11);
    }
}

TEST(Eigen, TraceAndDeterminantInvariants) {
  Rng rng(13);
  for (int rep = 0; rep < 50; ++rep) {
    const auto h = random_hermitian(5, rng);
    double sum = 0.0, sq = 0.0;
    for (double l : eig_hermitian(h).eigenvalues) sum += l, sq += l * l;
    EXPECT_NEAR(sum, h.trace().real(), 1e-11);
    EXPECT_NEAR(sq, hs_inner(h, h).real(), 1e-10);
  }
}

TEST(Eigen, DegenerateSpectra) {
  const auto eig = eig_hermitian(ComplexMatrix::identity(4) * 3.0);
  for (double l : eig.eigenvalues) EXPECT_DOUBLE_EQ(l, 3.0);
  const std::vector<double> diag{2.0, -1.0, 2.0, 0.5};
  const auto e2 = eig_hermitian(ComplexMatrix::diagonal(diag));
  EXPECT_EQ(e2.eigenvalues, (std::vector<double>{-1.0, 0.5, 2.0, 2.0}));
}

TEST(Eigen, RejectsNonHermitianInput) {
  const ComplexMatrix m{{1.0, 1.0}, {0.0, 1.0}};
  EXPECT_TRUE(throws_code([&] { eig_hermitian(m); }, ErrorCode::NotHermitian));
  EXPECT_TRUE(throws_code([&] { require_hermitian(ComplexMatrix(2, 3)); }, ErrorCode::NotSquare));
}

TEST(Eigen, NormsAndPsd) {
  const std::vector<double> diag{-0.5, 0.25, 2.0};
  const auto h = ComplexMatrix::diagonal(diag);
  EXPECT_DOUBLE_EQ(operator_norm(h), 2.0);
  EXPECT_DOUBLE_EQ(min_eigenvalue(h), -0.5);
  EXPECT_FALSE(is_psd(h));
  EXPECT_TRUE(is_psd(ComplexMatrix::identity(3)));
  EXPECT_TRUE(is_psd(ComplexMatrix::diagonal(std::vector<double>{1.0, -1e-12})));
}

TEST(Eigen, ApplySpectralSquareRoot) {
  Rng rng(14);
  const auto g = complex_gaussian_matrix(4, 4, rng);
  const auto psd = (g * g.adjoint()).hermitian_part();
  const auto root = apply_spectral(eig_hermitian(psd), [](double l) { return std::sqrt(std::max(l, 0.0)); });
  EXPECT_TRUE(matrices_near(root * root, psd, 1e-10));
}

TEST(HermitianBasis, OrthonormalAndComplete) {
  Rng rng(15);
  for (std::size_t d = 1; d <= 5; ++d) {
    const auto basis = hermitian_basis(d);
    ASSERT_EQ(basis.size(), d * d);
    EXPECT_TRUE(matrices_near(basis.front(), ComplexMatrix::identity(d) * (1.0 / std::sqrt(double(d))), 1e-15));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      EXPECT_LE(hermiticity_defect(basis[i]), 1e-15);
      for (std::size_t j = 0; j < basis.size(); ++j)
        EXPECT_NEAR(std::abs(hs_inner(basis[i], basis[j])), i == j ? 1.0 : 0.0, 1e-14);
    }
    const auto h = random_hermitian(d, rng);
    const auto x = hermitian_coordinates(h, basis);
    ComplexMatrix back(d, d);
    for (std::size_t k = 0; k < basis.size(); ++k) back += basis[k] * x[k];
    EXPECT_TRUE(matrices_near(back, h, 1e-13));
  }
}

TEST(Qr, FactorsSquareMatrices) {
  Rng rng(16);
  for (std::size_t d = 1; d <= 6; ++d) {
    const auto a = complex_gaussian_matrix(d, d, rng);
    const auto [q, r] = qr_decompose(a);
    EXPECT_LE(unitarity_defect(q), 1e-12);
    EXPECT_TRUE(matrices_near(q * r, a, 1e-12));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(r(i, j), Complex(0.0));
  }
}

TEST(Haar, UnitaryAndSeedDeterministic) {
  for (std::size_t d = 1; d <= 6; ++d) {
    const auto u = haar_random_unitary(d, std::uint64_t{99});
    EXPECT_LE(unitarity_defect(u), 1e-12);
    EXPECT_EQ(u, haar_random_unitary(d, std::uint64_t{99}));
  }
  EXPECT_NE(haar_random_unitary(3, std::uint64_t{1}), haar_random_unitary(3, std::uint64_t{2}));
}

// For Haar U, |U_00|^2 ~ Beta(1, d-1): mean 1/d, second moment 2/(d(d+1)).
TEST(Haar, FirstEntryMoments) {
  Rng rng(17);
  const std::size_t d = 3, n = 20000;
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = std::norm(haar_random_unitary(d, rng)(0, 0));
    m1 += p / n;
    m2 += p * p / n;
  }
  EXPECT_NEAR(m1, 1.0 / d, 0.01);
  EXPECT_NEAR(m2, 2.0 / (d * (d + 1.0)), 0.01);
}

// The phase of det U is uniform for Haar measure; without the diag(R) phase
// fix it is not.
TEST(Haar, DiagonalPhaseIsUniform) {
  Rng rng(18);
  const std::size_t n = 20000;
  Complex mean(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = haar_random_unitary(2, rng);
    mean += u(0, 0) / std::max(std::abs(u(0, 0)), 1e-300) / double(n);
  }
  EXPECT_LT(std::abs(mean), 0.03);
}

TEST(Matrix, ArithmeticAndFiniteness) {
  const ComplexMatrix a{{1.0, Complex(0, 2)}, {3.0, 4.0}};
  EXPECT_EQ(a.adjoint()(0, 1), 3.0);
  EXPECT_EQ(a.adjoint()(1, 0), Complex(0, -2));
  EXPECT_EQ(a.trace(), Complex(5.0));
  EXPECT_EQ((a * ComplexMatrix::identity(2)), a);
  EXPECT_EQ(hs_inner(a, a).real(), 1.0 + 4.0 + 9.0 + 16.0);
  auto b = a;
  b(1, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_TRUE(a.all_finite());
  EXPECT_FALSE(b.all_finite());
}

}  // namespace
}  // namespace povm
