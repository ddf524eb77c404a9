#include "povm_robust/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "povm_robust/error.hpp"
#include "povm_robust/rom.hpp"

namespace povm {

void require_density_matrix(const ComplexMatrix& rho, double tol) {
  if (!rho.is_square() || rho.rows() == 0)
    throw Error(ErrorCode::InvalidEnsemble, "state must be a nonempty square matrix");
  if (!rho.all_finite()) throw Error(ErrorCode::InvalidEnsemble, "state has non-finite entries");
  if (hermiticity_defect(rho) > tol::kHermitian)
    throw Error(ErrorCode::InvalidEnsemble, "state is not Hermitian");
  const double lo = min_eigenvalue(rho);
  if (lo < -tol)
    throw Error(ErrorCode::InvalidEnsemble, "state has eigenvalue " + std::to_string(lo));
  const double t = rho.trace().real();
  if (std::abs(t - 1.0) > tol)
    throw Error(ErrorCode::InvalidEnsemble, "state has trace " + std::to_string(t));
}

Ensemble::Ensemble(std::vector<ComplexMatrix> states, std::vector<double> priors,
                   double state_tol, double prior_tol) {
  if (states.empty()) throw Error(ErrorCode::InvalidEnsemble, "ensemble is empty");
  if (states.size() != priors.size())
    throw Error(ErrorCode::InvalidEnsemble, "ensemble has " + std::to_string(states.size()) +
                                                " states but " + std::to_string(priors.size()) +
                                                " priors");
  const std::size_t d = states.front().rows();
  for (auto& s : states) {
    if (s.rows() != d || s.cols() != d)
      throw Error(ErrorCode::InvalidEnsemble, "ensemble states differ in dimension");
    require_density_matrix(s, state_tol);
    s = s.hermitian_part() * (1.0 / s.trace().real());
  }
  try {
    require_distribution(priors, prior_tol);
  } catch (const Error& err) {
    throw Error(ErrorCode::InvalidEnsemble, std::string("ensemble priors: ") + err.what());
  }
  double total = 0.0;
  for (double p : priors) total += p;
  for (double& p : priors) p /= total;
  states_ = std::move(states);
  priors_ = std::move(priors);
}

double p_guess_classical(const Ensemble& e) {
  return *std::max_element(e.priors().begin(), e.priors().end());
}

namespace {

void require_same_dimension(const Ensemble& e, const Povm& m) {
  if (e.dimension() != m.dimension())
    throw Error(ErrorCode::DimensionMismatch,
                "ensemble dimension " + std::to_string(e.dimension()) +
                    " differs from POVM dimension " + std::to_string(m.dimension()));
}

}  // namespace

std::vector<std::size_t> optimal_guesses(const Ensemble& e, const Povm& m) {
  require_same_dimension(e, m);
  std::vector<std::size_t> guesses(m.outcomes(), 0);
  for (std::size_t a = 0; a < m.outcomes(); ++a) {
    double best = -1.0;
    for (std::size_t x = 0; x < e.size(); ++x) {
      const double w = e.priors()[x] * hs_inner(e.states()[x], m[a]).real();
      if (w > best) {
        best = w;
        guesses[a] = x;
      }
    }
  }
  return guesses;
}

double p_guess_with_measurement(const Ensemble& e, const Povm& m) {
  const auto guesses = optimal_guesses(e, m);
  double total = 0.0;
  for (std::size_t a = 0; a < m.outcomes(); ++a) {
    const std::size_t x = guesses[a];
    total += e.priors()[x] * hs_inner(e.states()[x], m[a]).real();
  }
  return total;
}

double advantage(const Ensemble& e, const Povm& m) {
  return p_guess_with_measurement(e, m) / p_guess_classical(e);
}

Ensemble optimal_ensemble(const Povm& m) {
  auto report = rom_report(m);
  const std::size_t o = m.outcomes();
  return Ensemble(std::move(report.dual_states), std::vector<double>(o, 1.0 / double(o)));
}

ComplexVector random_pure_state(std::size_t d, Rng& rng) {
  auto g = complex_gaussian_matrix(d, 1, rng).column(0);
  const double norm = std::sqrt(inner(g, g).real());
  for (auto& z : g) z /= norm;
  return g;
}

ComplexMatrix random_density_matrix(std::size_t d, Rng& rng) {
  std::uniform_int_distribution<std::size_t> rank_dist(1, d);
  const auto g = complex_gaussian_matrix(d, rank_dist(rng), rng);
  auto rho = (g * g.adjoint()).hermitian_part();
  return rho * (1.0 / rho.trace().real());
}

Ensemble random_ensemble(std::size_t d, std::size_t n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<ComplexMatrix> states;
  std::vector<double> priors;
  double total = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    states.push_back(random_density_matrix(d, rng));
    priors.push_back(expo(rng));
    total += priors.back();
  }
  for (double& p : priors) p /= total;
  return Ensemble(std::move(states), std::move(priors));
}

Ensemble random_ensemble(std::size_t d, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_ensemble(d, n, rng);
}

}  // namespace povm
