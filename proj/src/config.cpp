#include "qwalk2/config.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "qwalk2/errors.hpp"
#include "qwalk2/evolution.hpp"

namespace qwalk2 {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T to_number(std::string_view key, std::string_view text) {
  T value{};
  text = trim(text);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ValidationError(std::string(key), "not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view to_string(Output o) {
  switch (o) {
    case Output::PositionCorr:
      return "position_corr";
    case Output::MomentumCorr:
      return "momentum_corr";
    case Output::Density:
      return "density";
    case Output::MinorDiag:
      return "minor_diag";
    case Output::Cowalk:
      return "cowalk";
    case Output::WaveguideCheck:
      return "waveguide_check";
  }
  return "unknown";
}

Output parse_output(std::string_view text) {
  for (const auto o : {Output::PositionCorr, Output::MomentumCorr, Output::Density, Output::MinorDiag,
                       Output::Cowalk, Output::WaveguideCheck}) {
    if (to_string(o) == text) return o;
  }
  throw ValidationError("outputs", "unknown output '" + std::string(text) + "'");
}

void RunConfig::validate() const {
  spec.validate();
  if (!(time_max > 0.0) || !std::isfinite(time_max)) throw ValidationError("tmax", "must be positive");
  if (n_times < 2) throw ValidationError("nt", "must be >= 2");
  if (!spec.contains(initial.first) || !spec.contains(initial.second)) {
    throw ValidationError("init", "sites must lie in -L..L");
  }
  if (initial.first == initial.second && spec.statistics != Statistics::Bose) {
    throw ValidationError("init", "double occupancy is forbidden for fermions and hard-core bosons");
  }
}

std::vector<double> RunConfig::times() const {
  auto t = uniform_times(time_max, n_times);
  for (auto& v : t) v /= spec.J;
  return t;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "statistics") {
    cfg.spec.statistics = parse_statistics(value);
  } else if (key == "L") {
    cfg.spec.L = to_number<int>(key, value);
  } else if (key == "J") {
    cfg.spec.J = to_number<double>(key, value);
  } else if (key == "V") {
    cfg.spec.V = to_number<double>(key, value);
  } else if (key == "tmax") {
    cfg.time_max = to_number<double>(key, value);
  } else if (key == "nt") {
    cfg.n_times = to_number<int>(key, value);
  } else if (key == "init") {
    const auto comma = value.find(',');
    if (comma == std::string_view::npos) throw ValidationError("init", "expected l1,l2");
    cfg.initial = {to_number<int>(key, value.substr(0, comma)), to_number<int>(key, value.substr(comma + 1))};
  } else if (key == "out") {
    if (value.empty()) throw ValidationError("out", "must not be empty");
    cfg.out_dir = std::string(value);
  } else if (key == "boundary") {
    cfg.waveguide_boundary = parse_boundary(value);
  } else if (key == "outputs") {
    std::set<Output> outs;
    std::size_t pos = 0;
    while (pos <= value.size()) {
      const auto comma = std::min(value.find(',', pos), value.size());
      const auto item = trim(value.substr(pos, comma - pos));
      if (!item.empty()) outs.insert(parse_output(item));
      pos = comma + 1;
    }
    if (outs.empty()) throw ValidationError("outputs", "must name at least one output");
    cfg.outputs = std::move(outs);
  } else if (key == "heatmaps") {
    if (value == "true" || value == "1") {
      cfg.heatmaps = true;
    } else if (value == "false" || value == "0") {
      cfg.heatmaps = false;
    } else {
      throw ValidationError("heatmaps", "expected true or false");
    }
  } else {
    throw ValidationError(std::string(key), "unknown configuration key");
  }
}

void apply_config_text(RunConfig& cfg, std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    try {
      apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
    } catch (const ValidationError& e) {
      throw ParseError(line_no, e.what());
    }
  }
}

std::vector<PresetRun> expand_preset(std::string_view name, const RunConfig& base) {
  std::vector<PresetRun> runs;
  const Statistics all[] = {Statistics::Bose, Statistics::Fermi, Statistics::HardCoreBose};
  if (name == "fig1" || name == "fig2") {
    // |V/2J| = 0, 0.5, 2, each sampled at Jt = 4, 4.5, 7.5 respectively.
    const double ratios[] = {0.0, 0.5, 2.0};
    const double jt[] = {4.0, 4.5, 7.5};
    for (int row = 0; row < 3; ++row) {
      for (const auto s : all) {
        RunConfig cfg = base;
        cfg.spec.L = 10;
        cfg.spec.statistics = s;
        cfg.spec.V = 2.0 * ratios[row] * cfg.spec.J;
        cfg.initial = {0, 1};
        cfg.time_max = jt[row];
        cfg.n_times = 2;
        cfg.outputs = {Output::PositionCorr, Output::MomentumCorr};
        std::string ratio = std::to_string(ratios[row]);
        ratio.erase(ratio.find_last_not_of('0') + 1);
        if (ratio.back() == '.') ratio.pop_back();
        runs.push_back({std::string(to_string(s)) + "_v2j_" + ratio, std::move(cfg)});
      }
    }
  } else if (name == "fig3") {
    for (const auto s : all) {
      RunConfig cfg = base;
      cfg.spec.L = 10;
      cfg.spec.statistics = s;
      cfg.spec.V = 80.0 * cfg.spec.J;
      cfg.initial = {0, 1};
      cfg.time_max = 40.0;
      cfg.n_times = 201;
      cfg.outputs = {Output::MinorDiag, Output::Cowalk};
      runs.push_back({std::string(to_string(s)) + "_v2j_40", std::move(cfg)});
    }
  } else {
    throw ValidationError("preset", "unknown preset '" + std::string(name) + "' (fig1, fig2, fig3)");
  }
  for (auto& r : runs) r.config.out_dir = base.out_dir / r.name;
  return runs;
}

}  // namespace qwalk2
