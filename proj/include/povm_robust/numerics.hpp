#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace povm {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using Rng = std::mt19937_64;

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kPsd = 1e-9;
inline constexpr double kJacobiOffDiagonal = 1e-12;
inline constexpr double kUnitary = 1e-10;
}  // namespace tol

/// Dense row-major complex matrix. Sized for desk-scale quantum operators
/// (dimension up to a few dozen), so every operation is a plain loop.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |v><v|
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  ComplexVector column(std::size_t c) const;

  /// Largest |A_ij - B_ij|; shapes must agree.
  double max_abs_diff(const ComplexMatrix& other) const;
  double max_abs() const;
  double frobenius_norm() const;
  bool all_finite() const;
  /// Projects onto the Hermitian part, (A + A^dagger) / 2.
  ComplexMatrix hermitian_part() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(ComplexMatrix m, double s) { return m *= Complex(s); }
  friend ComplexMatrix operator*(double s, ComplexMatrix m) { return m *= Complex(s); }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v);

/// tr(A^dagger B)
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
/// <u|v>
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
/// <v|A|v>, real part only (A Hermitian).
double expectation(const ComplexMatrix& a, std::span<const Complex> v);

/// Max entry deviation of H from its conjugate transpose.
double hermiticity_defect(const ComplexMatrix& h);
/// Throws NotSquare / NotHermitian.
void require_hermitian(const ComplexMatrix& h, double tol = tol::kHermitian);

struct EigenDecomposition {
  std::vector<double> eigenvalues;    // ascending
  std::vector<ComplexVector> eigenvectors;  // orthonormal, same order

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

/// Cyclic complex Jacobi rotations; stops when the off-diagonal Frobenius
/// mass falls below `off_diagonal_tol * ||H||_F`.
EigenDecomposition eig_hermitian(const ComplexMatrix& h,
                                 double hermitian_tol = tol::kHermitian,
                                 double off_diagonal_tol = tol::kJacobiOffDiagonal);

/// V diag(f(lambda)) V^dagger
ComplexMatrix reconstruct(const EigenDecomposition& eig);
template <class F>
ComplexMatrix apply_spectral(const EigenDecomposition& eig, F&& f) {
  const std::size_t n = eig.eigenvalues.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = f(eig.eigenvalues[k]);
    const auto& v = eig.eigenvectors[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += w * v[i] * std::conj(v[j]);
  }
  return out;
}

double operator_norm(const ComplexMatrix& h);
double min_eigenvalue(const ComplexMatrix& h);
bool is_psd(const ComplexMatrix& h, double tol = tol::kPsd);

/// Orthonormal (Hilbert-Schmidt) basis of d x d Hermitian matrices: I/sqrt(d)
/// first, then the generalized Gell-Mann matrices scaled by 1/sqrt(2).
std::vector<ComplexMatrix> hermitian_basis(std::size_t d);

/// Real coordinates tr(G_k H) of a Hermitian H in hermitian_basis(d).
std::vector<double> hermitian_coordinates(const ComplexMatrix& h,
                                          std::span<const ComplexMatrix> basis);

struct QrDecomposition {
  ComplexMatrix q;
  ComplexMatrix r;
};

/// Modified Gram-Schmidt with one reorthogonalization pass; square input of
/// full rank.
QrDecomposition qr_decompose(const ComplexMatrix& a);

ComplexMatrix complex_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed unitary from the QR decomposition of a complex Gaussian
/// matrix, with the phases of diag(R) absorbed into Q.
ComplexMatrix haar_random_unitary(std::size_t d, Rng& rng);
ComplexMatrix haar_random_unitary(std::size_t d, std::uint64_t seed);

/// Max entry of |U^dagger U - I|.
double unitarity_defect(const ComplexMatrix& u);

}  // namespace povm
