#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "acceptance/criteria.hpp"
#include "povm_robust/error.hpp"
#include "povm_robust/json_io.hpp"

namespace {

using povm::io::json;

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitDomain = 4;

json error_json(std::string_view code, const std::string& message) {
  return {{"error", {{"code", std::string(code)}, {"message", message}}}};
}

// POVM_ROBUST_TOL replaces every input-validation tolerance with one value.
povm::io::ReadTolerances read_tolerances() {
  povm::io::ReadTolerances tol;
  const char* env = std::getenv("POVM_ROBUST_TOL");
  if (!env || !*env) return tol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0.0))
    throw povm::Error(povm::ErrorCode::UsageError,
                      std::string("POVM_ROBUST_TOL must be a positive number, got '") + env + "'");
  tol.completeness = tol.psd = tol.state = tol.distribution = v;
  return tol;
}

struct Context {
  std::string output;
  int exit_code = 0;

  void emit(const json& j) const { emit_text(povm::io::canonical_dump(j) + "\n"); }

  void emit_text(const std::string& text) const {
    if (output.empty() || output == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(output);
    if (!out) throw povm::Error(povm::ErrorCode::UsageError, output + ": cannot open for writing");
    out << text;
  }
};

povm::Povm load_povm(const std::string& path) {
  return povm::io::povm_from_json(povm::io::read_json_file(path), read_tolerances());
}

povm::Ensemble load_ensemble(const std::string& path) {
  return povm::io::ensemble_from_json(povm::io::read_json_file(path), read_tolerances());
}

povm::ComplexMatrix load_state(const std::string& path) {
  return povm::io::state_from_json(povm::io::read_json_file(path), read_tolerances());
}

// Schema errors inside a file are reported against that file.
template <typename F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const povm::Error& e) {
    if (e.code() != povm::ErrorCode::ParseError || std::string(e.what()).starts_with(path)) throw;
    throw povm::Error(povm::ErrorCode::ParseError, path + ": " + e.what());
  }
}

void run_selftest(Context& ctx, bool quick, bool as_json, std::uint64_t seed) {
  povm::acceptance::Config config;
  config.quick = quick;
  config.seed = seed;
  json rows = json::array();
  std::string table;
  bool all = true;
  for (const auto& r : povm::acceptance::run_all(config)) {
    all = all && r.passed;
    table += povm::acceptance::format_line(r) + "\n";
    rows.push_back({{"id", r.id},
                    {"name", r.name},
                    {"passed", r.passed},
                    {"detail", r.detail},
                    {"seconds", r.seconds}});
  }
  if (as_json)
    ctx.emit({{"criteria", rows}, {"passed", all}});
  else
    ctx.emit_text(table + (all ? "all criteria passed\n" : "some criteria FAILED\n"));
  ctx.exit_code = all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robustness of measurement toolkit"};
  app.require_subcommand(1);
  Context ctx;
  app.add_option("-o,--output", ctx.output, "Write JSON here instead of standard output");

  std::function<void()> action;
  std::string povm_path, ensemble_path, from_path, to_path, state_path, group_path;

  auto* rom_cmd = app.add_subcommand("rom", "Robustness of a POVM");
  rom_cmd->add_option("povm", povm_path, "POVM file")->required();
  rom_cmd->callback([&] {
    action = [&] {
      const auto m = with_path(povm_path, [&] { return load_povm(povm_path); });
      ctx.emit({{"rom", povm::rom(m)}});
    };
  });

  auto* report_cmd = app.add_subcommand("rom-report", "Robustness with primal and dual certificates");
  report_cmd->add_option("povm", povm_path, "POVM file")->required();
  report_cmd->callback([&] {
    action = [&] {
      const auto m = with_path(povm_path, [&] { return load_povm(povm_path); });
      ctx.emit(povm::io::to_json(povm::rom_report(m)));
    };
  });

  auto* disc_cmd = app.add_subcommand("discriminate", "Play a discrimination game with a POVM");
  disc_cmd->add_option("--ensemble", ensemble_path, "Ensemble file")->required();
  disc_cmd->add_option("--povm", povm_path, "POVM file")->required();
  disc_cmd->callback([&] {
    action = [&] {
      const auto e = with_path(ensemble_path, [&] { return load_ensemble(ensemble_path); });
      const auto m = with_path(povm_path, [&] { return load_povm(povm_path); });
      if (e.dimension() != m.dimension())
        throw povm::Error(povm::ErrorCode::DimensionMismatch,
                          "ensemble and POVM act on different dimensions");
      ctx.emit({{"p_guess", povm::p_guess_with_measurement(e, m)},
                {"p_guess_classical", povm::p_guess_classical(e)},
                {"advantage", povm::advantage(e, m)},
                {"guesses", povm::optimal_guesses(e, m)}});
    };
  });

  auto* opt_cmd = app.add_subcommand("optimal-ensemble", "Ensemble attaining the maximal advantage");
  opt_cmd->add_option("povm", povm_path, "POVM file")->required();
  opt_cmd->callback([&] {
    action = [&] {
      const auto m = with_path(povm_path, [&] { return load_povm(povm_path); });
      ctx.emit(povm::io::to_json(povm::optimal_ensemble(m)));
    };
  });

  auto* accm_cmd = app.add_subcommand("accinfo-measurement", "Accessible min-information of a POVM");
  accm_cmd->add_option("povm", povm_path, "POVM file")->required();
  accm_cmd->callback([&] {
    action = [&] {
      const auto m = with_path(povm_path, [&] { return load_povm(povm_path); });
      const auto info = povm::acc_min_info_measurement(m);
      ctx.emit({{"value", info.value}, {"witness", povm::io::to_json(info.witness)}});
    };
  });

  auto* acce_cmd = app.add_subcommand("accinfo-ensemble", "Accessible min-information of an ensemble");
  acce_cmd->add_option("ensemble", ensemble_path, "Ensemble file")->required();
  acce_cmd->callback([&] {
    action = [&] {
      const auto e = with_path(ensemble_path, [&] { return load_ensemble(ensemble_path); });
      ctx.emit({{"value", povm::acc_min_info_ensemble(e)}});
    };
  });

  auto* sim_cmd = app.add_subcommand("simulable", "Decide post-processing simulability");
  sim_cmd->add_option("--from", from_path, "Source POVM file")->required();
  sim_cmd->add_option("--to", to_path, "Target POVM file")->required();
  sim_cmd->callback([&] {
    action = [&] {
      const auto source = with_path(from_path, [&] { return load_povm(from_path); });
      const auto target = with_path(to_path, [&] { return load_povm(to_path); });
      ctx.emit(povm::io::to_json(povm::is_simulable(source, target)));
    };
  });

  auto* roa_cmd = app.add_subcommand("roa", "Robustness of asymmetry of a state");
  roa_cmd->add_option("--state", state_path, "State file")->required();
  roa_cmd->add_option("--group", group_path, "Group representation file")->required();
  roa_cmd->callback([&] {
    action = [&] {
      const auto rho = with_path(state_path, [&] { return load_state(state_path); });
      const auto g = with_path(group_path, [&] {
        return povm::io::group_from_json(povm::io::read_json_file(group_path));
      });
      ctx.emit(povm::io::to_json(povm::roa(rho, g)));
    };
  });

  auto* roc_cmd = app.add_subcommand("roc", "Robustness of coherence in the computational basis");
  roc_cmd->add_option("--state", state_path, "State file")->required();
  roc_cmd->callback([&] {
    action = [&] {
      const auto rho = with_path(state_path, [&] { return load_state(state_path); });
      ctx.emit(povm::io::to_json(povm::roc(rho)));
    };
  });

  std::size_t dim = 0, outcomes = 0;
  std::uint64_t seed = 0;
  auto* rand_cmd = app.add_subcommand("random-povm", "Sample a random POVM");
  rand_cmd->add_option("--dim", dim, "Hilbert space dimension")->required()->check(CLI::PositiveNumber);
  rand_cmd->add_option("--outcomes", outcomes, "Number of outcomes")->required()->check(CLI::PositiveNumber);
  rand_cmd->add_option("--seed", seed, "RNG seed")->required();
  rand_cmd->callback([&] {
    action = [&] { ctx.emit(povm::io::to_json(povm::random_povm(dim, outcomes, seed))); };
  });

  bool quick = false, as_json = false;
  std::uint64_t selftest_seed = povm::acceptance::Config{}.seed;
  auto* self_cmd = app.add_subcommand("selftest", "Run the invariant suites and print a pass/fail table");
  self_cmd->add_flag("--quick", quick, "Shrink randomized sweeps");
  self_cmd->add_flag("--json", as_json, "Emit the table as JSON");
  self_cmd->add_option("--seed", selftest_seed, "Base seed");
  self_cmd->callback([&] { action = [&] { run_selftest(ctx, quick, as_json, selftest_seed); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << povm::io::canonical_dump(error_json("UsageError", e.what())) << "\n";
    return kExitUsage;
  }

  try {
    action();
  } catch (const povm::Error& e) {
    std::cout << povm::io::canonical_dump(error_json(povm::to_string(e.code()), e.what())) << "\n";
    switch (e.code()) {
      case povm::ErrorCode::UsageError: return kExitUsage;
      case povm::ErrorCode::ParseError: return kExitParse;
      default: return kExitDomain;
    }
  } catch (const std::exception& e) {
    std::cout << povm::io::canonical_dump(error_json("InternalError", e.what())) << "\n";
    return kExitDomain;
  }
  return ctx.exit_code;
}
