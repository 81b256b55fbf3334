#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk2/lattice.hpp"

namespace qwalk2 {

enum class Output { PositionCorr, MomentumCorr, Density, MinorDiag, Cowalk, WaveguideCheck };

std::string_view to_string(Output o);
Output parse_output(std::string_view text);

struct RunConfig {
  LatticeSpec spec;
  SitePair initial{0, 1};
  double time_max = 4.0;  // in units of Jt
  int n_times = 201;
  std::set<Output> outputs{Output::PositionCorr, Output::MomentumCorr, Output::Density,
                           Output::MinorDiag};
  std::filesystem::path out_dir = "qwalk2_out";
  Boundary waveguide_boundary = Boundary::Open;
  bool heatmaps = false;

  // Throws ValidationError naming the field.
  void validate() const;
  // Physical evolution times t = (Jt) / J.
  std::vector<double> times() const;
};

// Applies one `key = value` setting. Keys: statistics, L, J, V, tmax, nt,
// init, out, boundary, outputs, heatmaps. Throws ValidationError for unknown
// keys or malformed values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

// Plain-text config: `key = value` per line, `#` comments, blank lines
// ignored. Throws ParseError carrying the 1-based line number.
void apply_config_text(RunConfig& cfg, std::string_view text);

// Named parameter grids. Each entry carries
// the sub-directory its outputs go to.
struct PresetRun {
  std::string name;
  RunConfig config;
};

// "fig1": Bose/Fermi/HCB x |V/2J| = 0, 0.5, 2 at Jt = 4, 4.5, 7.5, L = 10,
//         position and momentum correlations.
// "fig3": Bose/Fermi/HCB at |V/2J| = 40, Jt <= 40, minor-diagonal and
//         co-walk traces.
std::vector<PresetRun> expand_preset(std::string_view name, const RunConfig& base);

}  // namespace qwalk2
