#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "qwalk2/commands.hpp"
#include "qwalk2/errors.hpp"
#include "qwalk2/io.hpp"
#include "qwalk2/parallel.hpp"

namespace qwalk2 {

namespace {

struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> preset;
  // Ordered key/value overrides applied after the config file.
  std::vector<std::pair<std::string, std::optional<std::string>>> settings{
      {"statistics", {}}, {"L", {}},    {"J", {}},        {"V", {}},       {"tmax", {}},    {"nt", {}},
      {"init", {}},       {"out", {}},  {"boundary", {}}, {"outputs", {}}, {"heatmaps", {}},
  };

  std::optional<std::string>& slot(std::string_view key) {
    for (auto& [k, v] : settings) {
      if (k == key) return v;
    }
    throw std::logic_error("unknown flag slot");
  }
};

void add_common(CLI::App& cmd, Flags& f, bool with_boundary) {
  cmd.add_option("--statistics", f.slot("statistics"), "bose, fermi or hcb");
  cmd.add_option("--L", f.slot("L"), "half extent; sites -L..L");
  cmd.add_option("--J", f.slot("J"), "hopping");
  cmd.add_option("--V", f.slot("V"), "nearest-neighbour interaction");
  cmd.add_option("--tmax", f.slot("tmax"), "final time in units of Jt");
  cmd.add_option("--nt", f.slot("nt"), "number of time points");
  cmd.add_option("--init", f.slot("init"), "initial sites l1,l2");
  cmd.add_option("--out", f.slot("out"), "output directory");
  cmd.add_option("--outputs", f.slot("outputs"), "comma list of outputs");
  cmd.add_option("--heatmaps", f.slot("heatmaps"), "also write PGM heatmaps (true/false)");
  cmd.add_option("--config", f.config, "key = value configuration file");
  if (with_boundary) cmd.add_option("--boundary", f.slot("boundary"), "periodic or open (layout export)");
}

RunConfig resolve(const Flags& f) {
  RunConfig cfg;
  if (f.config) {
    try {
      apply_config_text(cfg, read_file(*f.config));
    } catch (const ParseError& e) {
      throw ParseError(e.line(), std::string(*f.config) + ": " + e.what());
    }
  }
  for (const auto& [key, value] : f.settings) {
    if (value) apply_setting(cfg, key, *value);
  }
  return cfg;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  apply_thread_limit_from_env();

  CLI::App app{"Two-particle continuous-time quantum walks on a ring"};
  app.require_subcommand(1);
  Flags run_f, oracle_f, effective_f, waveguide_f;
  auto* run = app.add_subcommand("run", "evolve a walk and write correlations and traces");
  add_common(*run, run_f, false);
  run->add_option("--preset", run_f.preset, "fig1, fig2 or fig3 parameter grid");
  auto* oracle = app.add_subcommand("oracle", "compare V = 0 correlations with free-walk formulas");
  add_common(*oracle, oracle_f, false);
  auto* effective = app.add_subcommand("effective", "strong-coupling co-walking versus effective model");
  add_common(*effective, effective_f, false);
  auto* waveguide = app.add_subcommand("waveguide", "export the waveguide array and check equivalence");
  add_common(*waveguide, waveguide_f, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (run->parsed()) {
      const RunConfig cfg = resolve(run_f);
      return run_f.preset ? run_preset(*run_f.preset, cfg, out) : run_scenario(cfg, out);
    }
    if (oracle->parsed()) return run_oracle(resolve(oracle_f), out);
    if (effective->parsed()) {
      RunConfig cfg = resolve(effective_f);
      return run_effective(cfg, out);
    }
    return run_waveguide(resolve(waveguide_f), out);
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ParseError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoFailure& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DoubleOccupancyForbidden& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const OutOfRange& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ZeroInteraction& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitTolerance;
  }
}

}  // namespace qwalk2
