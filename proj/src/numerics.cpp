#include "povm_robust/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "povm_robust/error.hpp"

namespace povm {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_)
      throw Error(ErrorCode::ShapeMismatch, "ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  ComplexMatrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
  ComplexVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::ShapeMismatch, "max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k)
    m = std::max(m, std::abs(data_[k] - other.data_[k]));
  return m;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorCode::ShapeMismatch, "matrix addition: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorCode::ShapeMismatch, "matrix subtraction: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::ShapeMismatch, "matrix product: inner dimensions differ");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size())
    throw Error(ErrorCode::ShapeMismatch, "matrix-vector product: size mismatch");
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::ShapeMismatch, "hs_inner: shape mismatch");
  Complex s = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t k = 0; k < da.size(); ++k) s += std::conj(da[k]) * db[k];
  return s;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double expectation(const ComplexMatrix& a, std::span<const Complex> v) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex row = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += a(i, j) * v[j];
    s += (std::conj(v[i]) * row).real();
  }
  return s;
}

double hermiticity_defect(const ComplexMatrix& h) {
  double m = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = i; j < h.cols(); ++j)
      m = std::max(m, std::abs(h(i, j) - std::conj(h(j, i))));
  return m;
}

void require_hermitian(const ComplexMatrix& h, double tol) {
  if (!h.is_square())
    throw Error(ErrorCode::NotSquare, "expected a square matrix, got " +
                                          std::to_string(h.rows()) + "x" +
                                          std::to_string(h.cols()));
  if (!h.all_finite()) throw Error(ErrorCode::NotFinite, "matrix has non-finite entries");
  const double defect = hermiticity_defect(h);
  if (defect > tol)
    throw Error(ErrorCode::NotHermitian,
                "matrix deviates from its adjoint by " + std::to_string(defect));
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Zeroes a(p,q) with a unitary J = diag(1, e^{-i phi}) * R(c, s) acting on
// the (p,q) plane: a <- J^dagger a J, v <- v J.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex phase = std::conj(apq / g);
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * phase;
  const Complex jqq = c * phase;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix& h, double hermitian_tol,
                                 double off_diagonal_tol) {
  require_hermitian(h, hermitian_tol);
  const std::size_t n = h.rows();
  ComplexMatrix a = h.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = off_diagonal_tol * a.frobenius_norm();
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= threshold || off == 0.0) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t k : order) {
    out.eigenvalues.push_back(a(k, k).real());
    out.eigenvectors.push_back(v.column(k));
  }
  return out;
}

ComplexMatrix reconstruct(const EigenDecomposition& eig) {
  return apply_spectral(eig, [](double x) { return x; });
}

double operator_norm(const ComplexMatrix& h) {
  const auto eig = eig_hermitian(h);
  if (eig.eigenvalues.empty()) return 0.0;
  return std::max(std::abs(eig.min()), std::abs(eig.max()));
}

double min_eigenvalue(const ComplexMatrix& h) { return eig_hermitian(h).min(); }

bool is_psd(const ComplexMatrix& h, double tol) { return min_eigenvalue(h) >= -tol; }

std::vector<ComplexMatrix> hermitian_basis(std::size_t d) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(d * d);
  basis.push_back(ComplexMatrix::identity(d) * (1.0 / std::sqrt(double(d))));
  const double r2 = 1.0 / std::sqrt(2.0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      ComplexMatrix sym(d, d);
      sym(j, k) = r2;
      sym(k, j) = r2;
      basis.push_back(std::move(sym));
      ComplexMatrix anti(d, d);
      anti(j, k) = Complex(0.0, -r2);
      anti(k, j) = Complex(0.0, r2);
      basis.push_back(std::move(anti));
    }
  for (std::size_t l = 1; l < d; ++l) {
    ComplexMatrix diag(d, d);
    const double scale = 1.0 / std::sqrt(double(l * (l + 1)));
    for (std::size_t j = 0; j < l; ++j) diag(j, j) = scale;
    diag(l, l) = -double(l) * scale;
    basis.push_back(std::move(diag));
  }
  return basis;
}

std::vector<double> hermitian_coordinates(const ComplexMatrix& h,
                                          std::span<const ComplexMatrix> basis) {
  std::vector<double> x;
  x.reserve(basis.size());
  for (const auto& g : basis) x.push_back(hs_inner(g, h).real());
  return x;
}

QrDecomposition qr_decompose(const ComplexMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "qr_decompose: square input required");
  const std::size_t n = a.rows();
  std::vector<ComplexVector> q;
  ComplexMatrix r(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    ComplexVector v = a.column(j);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t i = 0; i < j; ++i) {
        const Complex proj = inner(q[i], v);
        r(i, j) += proj;
        for (std::size_t k = 0; k < n; ++k) v[k] -= proj * q[i][k];
      }
    const double norm = std::sqrt(inner(v, v).real());
    if (norm == 0.0) throw Error(ErrorCode::SolverFailure, "qr_decompose: rank deficient input");
    r(j, j) = norm;
    for (auto& z : v) z /= norm;
    q.push_back(std::move(v));
  }
  ComplexMatrix qm(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) qm(i, j) = q[j][i];
  return {std::move(qm), std::move(r)};
}

ComplexMatrix complex_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re * s, im * s);
    }
  return g;
}

ComplexMatrix haar_random_unitary(std::size_t d, Rng& rng) {
  if (d == 0) throw Error(ErrorCode::SizeMismatch, "haar_random_unitary: d must be >= 1");
  auto [q, r] = qr_decompose(complex_gaussian_matrix(d, d, rng));
  for (std::size_t j = 0; j < d; ++j) {
    const Complex phase = r(j, j) / std::abs(r(j, j));
    for (std::size_t i = 0; i < d; ++i) q(i, j) *= phase;
  }
  return q;
}

ComplexMatrix haar_random_unitary(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_unitary(d, rng);
}

double unitarity_defect(const ComplexMatrix& u) {
  return (u.adjoint() * u).max_abs_diff(ComplexMatrix::identity(u.rows()));
}

}  // namespace povm
