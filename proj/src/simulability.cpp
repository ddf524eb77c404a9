#include "povm_robust/simulability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "povm_robust/error.hpp"

namespace povm {

std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::Simulable ? "Simulable" : "NotSimulable";
}

double guessing_gap(const Ensemble& e, const Povm& source, const Povm& target) {
  return p_guess_with_measurement(e, target) - p_guess_with_measurement(e, source);
}

namespace {

StochasticMap clean_map(std::span<const double> p, std::size_t o, std::size_t o_target) {
  std::vector<std::vector<double>> rows(o, std::vector<double>(o_target));
  for (std::size_t a = 0; a < o; ++a) {
    double total = 0.0;
    for (std::size_t b = 0; b < o_target; ++b)
      total += rows[a][b] = std::max(0.0, p[a * o_target + b]);
    for (auto& v : rows[a]) v /= total;
  }
  return StochasticMap(std::move(rows));
}

double reconstruction_residual(const Povm& source, const Povm& target, const StochasticMap& map) {
  const auto simulated = post_process(source, map);
  double worst = 0.0;
  for (std::size_t b = 0; b < target.outcomes(); ++b)
    worst = std::max(worst, simulated[b].max_abs_diff(target[b]));
  return worst;
}

std::optional<Ensemble> shifted_certificate_ensemble(const SimulabilityCertificate& cert,
                                                     std::size_t d) {
  double lowest = 0.0;
  bool first = true;
  for (const auto& z : cert.operators) {
    const double lo = min_eigenvalue(z);
    lowest = first ? lo : std::min(lowest, lo);
    first = false;
  }
  std::vector<ComplexMatrix> shifted;
  double total = 0.0;
  for (const auto& z : cert.operators) {
    shifted.push_back((z - ComplexMatrix::identity(d) * lowest).hermitian_part());
    total += shifted.back().trace().real();
  }
  if (!(total > 1e-12)) return std::nullopt;
  std::vector<ComplexMatrix> states;
  std::vector<double> priors;
  for (auto& s : shifted) {
    const double t = s.trace().real();
    if (t > 1e-14 * total) {
      // Eigenvalues of s sit at >= -rounding; clip them so the state is PSD.
      const auto clipped =
          apply_spectral(eig_hermitian(s), [](double x) { return std::max(0.0, x); });
      states.push_back(clipped * (1.0 / clipped.trace().real()));
      priors.push_back(t / total);
    } else {
      states.push_back(ComplexMatrix::identity(d) * (1.0 / double(d)));
      priors.push_back(0.0);
    }
  }
  double psum = 0.0;
  for (double p : priors) psum += p;
  for (double& p : priors) p /= psum;
  return Ensemble(std::move(states), std::move(priors));
}

}  // namespace

Ensemble witness_from_certificate(const Povm& source, const Povm& target,
                                  const SimulabilityCertificate& certificate,
                                  const SimulabilityOptions& options) {
  const std::size_t d = source.dimension();
  if (certificate.operators.size() != target.outcomes() ||
      certificate.offsets.size() != source.outcomes())
    throw Error(ErrorCode::ShapeMismatch, "certificate does not match the measurement pair");

  if (auto e = shifted_certificate_ensemble(certificate, d);
      e && guessing_gap(*e, source, target) > options.min_gap)
    return *e;

  // Randomized fallback seeded by the certificate's eigenvectors.
  std::vector<EigenDecomposition> spectra;
  std::vector<ComplexVector> pool;
  for (const auto& z : certificate.operators) {
    spectra.push_back(eig_hermitian(z));
    for (const auto& v : spectra.back().eigenvectors) pool.push_back(v);
  }
  Rng rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::bernoulli_distribution use_top(0.5);
  std::exponential_distribution<double> expo(1.0);
  for (std::size_t trial = 0; trial < options.witness_trials; ++trial) {
    std::vector<ComplexMatrix> states;
    std::vector<double> priors;
    double total = 0.0;
    for (const auto& spectrum : spectra) {
      const auto& v = use_top(rng) ? spectrum.eigenvectors.back() : pool[pick(rng)];
      states.push_back(ComplexMatrix::outer(v));
      priors.push_back(expo(rng));
      total += priors.back();
    }
    for (double& p : priors) p /= total;
    Ensemble e(std::move(states), std::move(priors));
    if (guessing_gap(e, source, target) > options.min_gap) return e;
  }
  throw Error(ErrorCode::WitnessSearchExhausted,
              "no ensemble separates the pair after " + std::to_string(options.witness_trials) +
                  " trials");
}

SimulabilityResult is_simulable(const Povm& source, const Povm& target,
                                const SimulabilityOptions& options) {
  if (source.dimension() != target.dimension())
    throw Error(ErrorCode::DimensionMismatch, "simulability needs equal dimensions");
  const std::size_t d = source.dimension();
  const std::size_t o = source.outcomes();
  const std::size_t ot = target.outcomes();
  const auto basis = hermitian_basis(d);
  const std::size_t k_count = basis.size();

  std::vector<std::vector<double>> source_coords, target_coords;
  for (const auto& e : source.elements()) source_coords.push_back(hermitian_coordinates(e, basis));
  for (const auto& e : target.elements()) target_coords.push_back(hermitian_coordinates(e, basis));

  // Variables: p(b|a) at a*ot + b, then slack pairs s+ / s- per (b, k).
  const std::size_t n_map = o * ot;
  const std::size_t n_slack = ot * k_count;
  LpProblem lp;
  lp.objective.assign(n_map + 2 * n_slack, 0.0);
  for (std::size_t j = n_map; j < lp.objective.size(); ++j) lp.objective[j] = 1.0;
  for (std::size_t a = 0; a < o; ++a) {
    std::vector<double> row(lp.objective.size(), 0.0);
    for (std::size_t b = 0; b < ot; ++b) row[a * ot + b] = 1.0;
    lp.eq_rows.push_back(std::move(row));
    lp.eq_rhs.push_back(1.0);
  }
  for (std::size_t b = 0; b < ot; ++b)
    for (std::size_t k = 0; k < k_count; ++k) {
      std::vector<double> row(lp.objective.size(), 0.0);
      for (std::size_t a = 0; a < o; ++a) row[a * ot + b] = source_coords[a][k];
      row[n_map + b * k_count + k] = 1.0;
      row[n_map + n_slack + b * k_count + k] = -1.0;
      lp.eq_rows.push_back(std::move(row));
      lp.eq_rhs.push_back(target_coords[b][k]);
    }

  const auto sol = solve_lp(lp, options.lp);
  if (sol.status != LpStatus::Optimal)
    throw Error(ErrorCode::SolverFailure,
                std::string("simulation LP ended with status ") + std::string(to_string(sol.status)));

  double worst_slack = 0.0;
  for (std::size_t j = n_map; j < sol.x.size(); ++j)
    worst_slack = std::max(worst_slack, std::abs(sol.x[j]));

  SimulabilityResult result;
  if (worst_slack <= options.equality_tol) {
    auto map = clean_map(std::span(sol.x).first(n_map), o, ot);
    result.reconstruction_residual = reconstruction_residual(source, target, map);
    if (result.reconstruction_residual > options.reconstruction_tol)
      throw Error(ErrorCode::SolverFailure,
                  "simulation map reconstructs the target only within " +
                      std::to_string(result.reconstruction_residual));
    result.verdict = Verdict::Simulable;
    result.map = std::move(map);
    return result;
  }

  SimulabilityCertificate cert;
  cert.residual = sol.value;
  cert.offsets.assign(sol.eq_duals.begin(), sol.eq_duals.begin() + std::ptrdiff_t(o));
  for (std::size_t b = 0; b < ot; ++b) {
    ComplexMatrix z(d, d);
    for (std::size_t k = 0; k < k_count; ++k) z += basis[k] * sol.eq_duals[o + b * k_count + k];
    cert.operators.push_back(z.hermitian_part());
  }
  auto witness = witness_from_certificate(source, target, cert, options);
  result.verdict = Verdict::NotSimulable;
  result.gap = guessing_gap(witness, source, target);
  result.witness = std::move(witness);
  result.certificate = std::move(cert);
  return result;
}

bool monotone_suite(const Povm& source, const Povm& target, std::size_t n_ensembles,
                    std::uint64_t seed) {
  if (source.dimension() != target.dimension())
    throw Error(ErrorCode::DimensionMismatch, "monotone_suite needs equal dimensions");
  Rng rng(seed);
  const std::size_t max_size = std::max(source.outcomes(), target.outcomes()) + 1;
  std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
  for (std::size_t i = 0; i < n_ensembles; ++i) {
    const auto e = random_ensemble(source.dimension(), size_dist(rng), rng);
    if (guessing_gap(e, source, target) > 1e-9) return false;
  }
  return true;
}

}  // namespace povm
