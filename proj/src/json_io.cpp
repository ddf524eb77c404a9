#include "povm_robust/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "povm_robust/error.hpp"

namespace povm::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) parse_fail(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) parse_fail(std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
  return j.get<double>();
}

std::size_t count(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    parse_fail(std::string(what) + " must be a positive integer");
  return j.get<std::size_t>();
}

std::vector<double> real_list(const json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(number(v, what));
  return out;
}

std::vector<std::vector<double>> real_table(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) parse_fail(std::string(what) + " must be a nonempty array");
  std::vector<std::vector<double>> out;
  for (const auto& row : j) out.push_back(real_list(row, what));
  return out;
}

std::vector<ComplexMatrix> matrix_list(const json& j, std::size_t d, const char* what) {
  if (!j.is_array() || j.empty()) parse_fail(std::string(what) + " must be a nonempty array");
  std::vector<ComplexMatrix> out;
  for (const auto& m : j) {
    out.push_back(matrix_from_json(m));
    if (out.back().rows() != d || out.back().cols() != d)
      parse_fail(std::string(what) + " entries must be " + std::to_string(d) + "x" +
                 std::to_string(d));
  }
  return out;
}

json real_json(const std::vector<double>& v) { return json(v); }

}  // namespace

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty())
    parse_fail("matrix must be a nonempty array of nonempty rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().size();
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != cols) parse_fail("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& z = row[c];
      if (!z.is_array() || z.size() != 2) parse_fail("complex entries must be [re, im] pairs");
      m(i, c) = Complex(number(z[0], "real part"), number(z[1], "imaginary part"));
    }
  }
  if (!m.all_finite()) parse_fail("matrix has non-finite entries");
  return m;
}

json to_json(const Povm& m) {
  json elements = json::array();
  for (const auto& e : m.elements()) elements.push_back(to_json(e));
  return {{"dimension", m.dimension()}, {"elements", std::move(elements)}};
}

Povm povm_from_json(const json& j, const ReadTolerances& tol) {
  const std::size_t d = count(field(j, "dimension"), "dimension");
  return Povm(matrix_list(field(j, "elements"), d, "elements"), tol.completeness, tol.psd);
}

json to_json(const StochasticMap& map) {
  return {{"rows", map.inputs()}, {"cols", map.outputs()}, {"p", map.rows()}};
}

StochasticMap map_from_json(const json& j, const ReadTolerances& tol) {
  const std::size_t rows = count(field(j, "rows"), "rows");
  const std::size_t cols = count(field(j, "cols"), "cols");
  auto p = real_table(field(j, "p"), "p");
  if (p.size() != rows) parse_fail("stochastic map 'p' must have 'rows' rows");
  for (const auto& r : p)
    if (r.size() != cols) parse_fail("stochastic map rows must have 'cols' entries");
  return StochasticMap(std::move(p), tol.distribution);
}

json to_json(const Ensemble& e) {
  json states = json::array();
  for (const auto& s : e.states()) states.push_back(to_json(s));
  return {{"dimension", e.dimension()}, {"priors", real_json(e.priors())}, {"states", std::move(states)}};
}

Ensemble ensemble_from_json(const json& j, const ReadTolerances& tol) {
  const std::size_t d = count(field(j, "dimension"), "dimension");
  return Ensemble(matrix_list(field(j, "states"), d, "states"), real_list(field(j, "priors"), "priors"),
                  tol.state, tol.distribution);
}

json to_json(const JointDistribution& p) { return {{"p", p.rows()}}; }

JointDistribution joint_from_json(const json& j, const ReadTolerances& tol) {
  return JointDistribution(real_table(field(j, "p"), "p"), tol.distribution);
}

json to_json(const GroupRepresentation& g) {
  json unitaries = json::array();
  for (const auto& u : g.unitaries()) unitaries.push_back(to_json(u));
  return {{"dimension", g.dimension()}, {"unitaries", std::move(unitaries)}};
}

GroupRepresentation group_from_json(const json& j) {
  const std::size_t d = count(field(j, "dimension"), "dimension");
  return GroupRepresentation(matrix_list(field(j, "unitaries"), d, "unitaries"));
}

json state_to_json(const ComplexMatrix& rho) {
  return {{"dimension", rho.rows()}, {"state", to_json(rho)}};
}

ComplexMatrix state_from_json(const json& j, const ReadTolerances& tol) {
  const std::size_t d = count(field(j, "dimension"), "dimension");
  auto rho = matrix_from_json(field(j, "state"));
  if (rho.rows() != d || rho.cols() != d) parse_fail("state must be dimension x dimension");
  require_density_matrix(rho, tol.state);
  return rho;
}

json to_json(const RobustnessReport& r) {
  json duals = json::array();
  for (const auto& s : r.dual_states) duals.push_back(to_json(s));
  json mixture = nullptr;
  if (r.pseudo_mixture)
    mixture = {{"r", r.pseudo_mixture->r},
               {"q", real_json(r.pseudo_mixture->q)},
               {"noise", to_json(r.pseudo_mixture->noise)}};
  return {{"rom", r.value},
          {"primal_weights", real_json(r.primal_weights)},
          {"dual_states", std::move(duals)},
          {"pseudo_mixture", std::move(mixture)}};
}

RobustnessReport robustness_report_from_json(const json& j) {
  RobustnessReport r;
  r.value = number(field(j, "rom"), "rom");
  r.primal_weights = real_list(field(j, "primal_weights"), "primal_weights");
  const auto& duals = field(j, "dual_states");
  if (!duals.is_array()) parse_fail("dual_states must be an array");
  for (const auto& s : duals) r.dual_states.push_back(matrix_from_json(s));
  const auto& mix = field(j, "pseudo_mixture");
  if (!mix.is_null()) {
    const double rr = number(field(mix, "r"), "r");
    // Noise elements carry rounding amplified by 1/r; see rom_report.
    const double loose = std::max(tol::kCompleteness, 1e-12 / rr);
    const auto& noise = field(mix, "noise");
    const std::size_t d = count(field(noise, "dimension"), "dimension");
    r.pseudo_mixture = PseudoMixture{
        rr, Povm(matrix_list(field(noise, "elements"), d, "elements"), loose, loose),
        real_list(field(mix, "q"), "q")};
  }
  return r;
}

json to_json(const SimulabilityResult& r) {
  json out = {{"verdict", std::string(to_string(r.verdict))},
              {"map", nullptr},
              {"witness", nullptr},
              {"gap", nullptr}};
  if (r.map) out["map"] = to_json(*r.map);
  if (r.witness) out["witness"] = to_json(*r.witness);
  if (r.gap) out["gap"] = *r.gap;
  return out;
}

SimulabilityResult simulability_from_json(const json& j) {
  SimulabilityResult r;
  const auto& verdict = field(j, "verdict");
  if (verdict == "Simulable")
    r.verdict = Verdict::Simulable;
  else if (verdict == "NotSimulable")
    r.verdict = Verdict::NotSimulable;
  else
    parse_fail("verdict must be Simulable or NotSimulable");
  if (const auto& m = field(j, "map"); !m.is_null()) r.map = map_from_json(m);
  if (const auto& w = field(j, "witness"); !w.is_null()) r.witness = ensemble_from_json(w);
  if (const auto& g = field(j, "gap"); !g.is_null()) r.gap = number(g, "gap");
  return r;
}

json to_json(const AsymmetryReport& r) {
  return {{"value", r.value},
          {"dominating_operator", to_json(r.dominating_operator)},
          {"game_advantage", r.game_advantage},
          {"min_info", r.min_info}};
}

AsymmetryReport asymmetry_report_from_json(const json& j) {
  AsymmetryReport r;
  r.value = number(field(j, "value"), "value");
  r.dominating_operator = matrix_from_json(field(j, "dominating_operator"));
  r.game_advantage = number(field(j, "game_advantage"), "game_advantage");
  r.min_info = number(field(j, "min_info"), "min_info");
  return r;
}

namespace {

void dump_to(std::string& out, const json& j) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += json(key).dump();
        out += ':';
        dump_to(out, value);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        dump_to(out, value);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.15g", v == 0.0 ? 0.0 : v);
      std::string s(buf);
      if (s.find_first_of(".e") == std::string::npos) s += ".0";
      out += s;
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string canonical_dump(const json& j) {
  std::string out;
  dump_to(out, j);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    parse_fail(path + ": " + ex.what());
  }
}

}  // namespace povm::io
