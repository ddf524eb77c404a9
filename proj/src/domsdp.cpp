#include "povm_robust/domsdp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include "povm_robust/error.hpp"

namespace povm {

std::string_view to_string(SdpStatus status) noexcept {
  switch (status) {
    case SdpStatus::Optimal:
      return "Optimal";
    case SdpStatus::IterationLimit:
      return "IterationLimit";
    case SdpStatus::Infeasible:
      return "Infeasible";
  }
  return "Unknown";
}

void DominanceProgram::validate() const {
  if (dimension == 0) throw Error(ErrorCode::SizeMismatch, "dominance program has dimension 0");
  if (basis.empty()) throw Error(ErrorCode::SizeMismatch, "dominance program has an empty basis");
  if (constraints.empty())
    throw Error(ErrorCode::SizeMismatch, "dominance program has no constraints");
  for (const auto* list : {&basis, &constraints})
    for (const auto& h : *list) {
      if (h.rows() != dimension || h.cols() != dimension)
        throw Error(ErrorCode::SizeMismatch, "dominance program operator has the wrong size");
      require_hermitian(h);
    }
  const std::size_t n = basis.size();
  ComplexMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = hs_inner(basis[i], basis[j]).real();
  const auto eig = eig_hermitian(gram);
  if (eig.min() <= 1e-9 * std::max(1.0, eig.max()))
    throw Error(ErrorCode::SizeMismatch, "dominance program basis is linearly dependent");
}

namespace {

struct Cut {
  std::vector<double> normal;  // v^dagger B_j v
  double rhs;                  // v^dagger K v
};

Cut make_cut(std::span<const ComplexMatrix> basis, const ComplexMatrix& k,
             std::span<const Complex> v) {
  Cut cut;
  cut.normal.reserve(basis.size());
  for (const auto& b : basis) cut.normal.push_back(expectation(b, v));
  cut.rhs = expectation(k, v);
  return cut;
}

ComplexMatrix combine(std::span<const ComplexMatrix> basis, std::span<const double> x) {
  ComplexMatrix y(basis.front().rows(), basis.front().cols());
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (x[j] != 0.0) y += basis[j] * x[j];
  return y.hermitian_part();
}

void emit_trace(std::ostream& os, std::size_t round, double value, double worst) {
  char line[160];
  std::snprintf(line, sizeof line, "{\"iteration\":%zu,\"value\":%.17g,\"worst_slack\":%.17g}\n",
                round, value, worst);
  os << line;
}

}  // namespace

SdpSolution solve_dominating(const DominanceProgram& program, const SdpOptions& options) {
  program.validate();
  const std::size_t n = program.basis.size();
  std::vector<double> objective(n);
  for (std::size_t j = 0; j < n; ++j) objective[j] = program.basis[j].trace().real();

  std::vector<Cut> cuts;
  for (const auto& k : program.constraints) {
    const auto eig = eig_hermitian(k);
    for (const auto& v : eig.eigenvectors) cuts.push_back(make_cut(program.basis, k, v));
  }

  SdpSolution sol;
  for (std::size_t round = 0;; ++round) {
    // The master  min c.x s.t. G x >= h  is solved through its dual
    //   min -h.y  s.t.  G^T y = c, y >= 0,
    // whose equality multipliers z give x = -z.
    LpProblem dual;
    dual.objective.resize(cuts.size());
    dual.eq_rows.assign(n, std::vector<double>(cuts.size()));
    dual.eq_rhs = objective;
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      dual.objective[k] = -cuts[k].rhs;
      for (std::size_t j = 0; j < n; ++j) dual.eq_rows[j][k] = cuts[k].normal[j];
    }
    const auto lp = solve_lp(dual, options.lp);
    if (lp.status == LpStatus::Unbounded) {
      sol.status = SdpStatus::Infeasible;
      sol.cuts = cuts.size();
      sol.rounds = round;
      return sol;
    }
    if (lp.status == LpStatus::Infeasible)
      throw Error(ErrorCode::SolverFailure, "cutting-plane master is unbounded below");
    if (lp.status == LpStatus::IterationLimit)
      throw Error(ErrorCode::SolverFailure, "cutting-plane master LP hit its pivot limit");

    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = -lp.eq_duals[j];
    double value = 0.0;
    for (std::size_t j = 0; j < n; ++j) value += objective[j] * x[j];
    double scale = 1.0, violated = 0.0;
    for (const auto& cut : cuts) {
      double lhs = 0.0;
      for (std::size_t j = 0; j < n; ++j) lhs += cut.normal[j] * x[j];
      scale = std::max(scale, std::abs(cut.rhs));
      violated = std::max(violated, cut.rhs - lhs);
    }
    if (violated > 1e-6 * scale)
      throw Error(ErrorCode::SolverFailure,
                  "cutting-plane master returned a point violating its own cuts by " +
                      std::to_string(violated));
    const auto y = combine(program.basis, x);

    double worst = std::numeric_limits<double>::infinity();
    std::vector<Cut> fresh;
    for (const auto& k : program.constraints) {
      const auto eig = eig_hermitian((y - k).hermitian_part());
      worst = std::min(worst, eig.min());
      for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i)
        if (eig.eigenvalues[i] < -options.slack_tol)
          fresh.push_back(make_cut(program.basis, k, eig.eigenvectors[i]));
    }

    sol.optimizer = y;
    sol.coordinates = x;
    sol.value = value;
    sol.min_slack = worst;
    sol.rounds = round + 1;
    sol.value_history.push_back(value);
    if (options.trace) emit_trace(*options.trace, round, value, worst);

    if (fresh.empty()) {
      sol.status = SdpStatus::Optimal;
      sol.cuts = cuts.size();
      return sol;
    }
    if (cuts.size() + fresh.size() > options.max_cuts) {
      sol.status = SdpStatus::IterationLimit;
      sol.cuts = cuts.size();
      return sol;
    }
    cuts.insert(cuts.end(), std::make_move_iterator(fresh.begin()),
                std::make_move_iterator(fresh.end()));
  }
}

namespace {

double require_optimal(const SdpSolution& sol, const char* what) {
  if (sol.status == SdpStatus::IterationLimit)
    throw Error(ErrorCode::IterationLimit, std::string(what) + ": cutting-plane cap reached");
  if (sol.status == SdpStatus::Infeasible)
    throw Error(ErrorCode::InfeasibleSubspace, std::string(what) + ": no dominating operator");
  return sol.value;
}

}  // namespace

double rom_via_sdp(const Povm& m, const SdpOptions& options) {
  const std::size_t d = m.dimension();
  const std::size_t o = m.outcomes();
  const std::size_t big = d * o;
  DominanceProgram program;
  program.dimension = big;
  ComplexMatrix k(big, big);
  for (std::size_t a = 0; a < o; ++a) {
    ComplexMatrix block(big, big);
    for (std::size_t i = 0; i < d; ++i) {
      block(a * d + i, a * d + i) = 1.0 / double(d);
      for (std::size_t j = 0; j < d; ++j) k(a * d + i, a * d + j) = m[a](i, j) / double(d);
    }
    program.basis.push_back(std::move(block));
  }
  program.constraints.push_back(std::move(k));
  return require_optimal(solve_dominating(program, options), "rom_via_sdp") - 1.0;
}

double min_error_guess_value(const Ensemble& e, const SdpOptions& options) {
  DominanceProgram program;
  program.dimension = e.dimension();
  program.basis = hermitian_basis(e.dimension());
  for (std::size_t x = 0; x < e.size(); ++x)
    program.constraints.push_back(e.states()[x] * e.priors()[x]);
  return require_optimal(solve_dominating(program, options), "min_error_guess_value");
}

}  // namespace povm
