#include "povm_robust/rom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "povm_robust/error.hpp"

namespace povm {

namespace {

// Index of the first eigenvector (ascending order) whose eigenvalue is
// maximal up to a relative tolerance.
std::size_t top_eigenvector_index(const EigenDecomposition& eig) {
  const double top = eig.max();
  const double slack = 1e-12 * std::max(1.0, std::abs(top));
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k)
    if (eig.eigenvalues[k] >= top - slack) return k;
  return eig.eigenvalues.size() - 1;
}

// Noise elements are (w_a I - M_a)/r with w_a I - M_a singular, so rounding
// errors get amplified by 1/r.
double noise_tolerance(double base, double r) {
  return std::max(base, 1e3 * std::numeric_limits<double>::epsilon() / r);
}

}  // namespace

double rom(const Povm& m) {
  double total = 0.0;
  for (const auto& e : m.elements()) total += operator_norm(e);
  return std::max(0.0, total - 1.0);
}

RobustnessReport rom_report(const Povm& m) {
  const std::size_t d = m.dimension();
  RobustnessReport report;
  double total = 0.0;
  for (const auto& e : m.elements()) {
    const auto eig = eig_hermitian(e);
    const std::size_t k = top_eigenvector_index(eig);
    report.primal_weights.push_back(eig.max());
    report.dual_states.push_back(ComplexMatrix::outer(eig.eigenvectors[k]));
    total += eig.max();
  }
  report.value = std::max(0.0, total - 1.0);
  if (report.value <= tol::kTrivialRobustness) return report;

  const double r = report.value;
  std::vector<ComplexMatrix> noise;
  std::vector<double> q;
  for (std::size_t a = 0; a < m.outcomes(); ++a) {
    const double w = report.primal_weights[a];
    noise.push_back((ComplexMatrix::identity(d) * w - m[a]) * (1.0 / r));
    q.push_back(w / (1.0 + r));
  }
  report.pseudo_mixture = PseudoMixture{
      r, Povm(std::move(noise), noise_tolerance(tol::kCompleteness, r),
              noise_tolerance(tol::kPsd, r)),
      std::move(q)};
  return report;
}

PseudoMixture uniform_noise_mixture(const Povm& m) {
  const std::size_t d = m.dimension();
  if (d < 2) throw Error(ErrorCode::DimensionOne, "uniform noise mixture needs d >= 2");
  std::vector<ComplexMatrix> noise;
  std::vector<double> q;
  for (const auto& e : m.elements()) {
    const double t = e.trace().real();
    noise.push_back((ComplexMatrix::identity(d) * t - e) * (1.0 / double(d - 1)));
    q.push_back(t / double(d));
  }
  return PseudoMixture{double(d - 1), Povm(std::move(noise)), std::move(q)};
}

bool verify_pseudo_mixture(const Povm& m, const Povm& noise, const std::vector<double>& q,
                           double r, double tol) {
  if (m.dimension() != noise.dimension() || m.outcomes() != noise.outcomes() ||
      q.size() != m.outcomes())
    throw Error(ErrorCode::ShapeMismatch, "pseudo-mixture components have inconsistent shapes");
  const std::size_t d = m.dimension();
  for (std::size_t a = 0; a < m.outcomes(); ++a) {
    const auto mixed = (m[a] + noise[a] * r) * (1.0 / (1.0 + r));
    if (mixed.max_abs_diff(ComplexMatrix::identity(d) * q[a]) > tol) return false;
  }
  return true;
}

}  // namespace povm
