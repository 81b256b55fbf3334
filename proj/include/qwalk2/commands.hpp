#pragma once

#include <ostream>

#include "qwalk2/config.hpp"

namespace qwalk2 {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitTolerance = 2,
  kExitIo = 3,
};

// Evolves the configured walk and writes the requested artifacts under
// cfg.out_dir together with a run.jsonl index.
int run_scenario(const RunConfig& cfg, std::ostream& log);
int run_preset(std::string_view preset, const RunConfig& base, std::ostream& log);

// V = 0 only: compares simulated correlations with the free-walk formulas.
int run_oracle(const RunConfig& cfg, std::ostream& log);

// Full versus effective co-walking for all three statistics; reports the
// Bose:Fermi speed ratio and fails unless it lies within 5% of 3.
int run_effective(const RunConfig& cfg, std::ostream& log);

// Exports the layout and runs the quantum/classical equivalence check.
int run_waveguide(const RunConfig& cfg, std::ostream& log);

// Full command-line entry point (subcommands run, oracle, effective, waveguide).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwalk2
