#include "qwalk2/commands.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwalk2/effective_model.hpp"
#include "qwalk2/errors.hpp"
#include "qwalk2/evolution.hpp"
#include "qwalk2/free_walk.hpp"
#include "qwalk2/hamiltonian.hpp"
#include "qwalk2/io.hpp"
#include "qwalk2/observables.hpp"
#include "qwalk2/waveguide.hpp"

namespace qwalk2 {

namespace {

using json = nlohmann::ordered_json;

constexpr double kOracleTolerance = 1e-10;
constexpr double kSpeedRatioTolerance = 0.05;

// Collects artifacts of one run and writes them with a run.jsonl index.
class ArtifactWriter {
 public:
  ArtifactWriter(std::filesystem::path root, Statistics s) : root_(std::move(root)), statistics_(s) {}

  void emit(std::string_view kind, std::optional<double> jt, const std::string& rel, const std::string& bytes,
            std::optional<double> gamma_max = std::nullopt) {
    write_file(root_ / rel, bytes);
    json rec;
    rec["kind"] = kind;
    rec["statistics"] = to_string(statistics_);
    rec["Jt"] = jt ? json(*jt) : json(nullptr);
    rec["file"] = rel;
    rec["sha256"] = sha256_hex(bytes);
    if (gamma_max) rec["gamma_max"] = *gamma_max;
    index_ += rec.dump() + "\n";
  }

  void finish() { write_file(root_ / "run.jsonl", index_); }

 private:
  std::filesystem::path root_;
  Statistics statistics_;
  std::string index_;
};

std::string snapshot_name(std::string_view dir, std::size_t k, std::string_view ext) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "/t%04zu.", k);
  return std::string(dir) + buf + std::string(ext);
}

std::string site_header(std::string_view first, int L) {
  std::string out(first);
  for (int q = -L; q <= L; ++q) out += "," + std::to_string(q);
  return out + "\n";
}

std::string trace_row(double jt, const Eigen::VectorXd& v) {
  std::string out = format_double(jt);
  for (Eigen::Index i = 0; i < v.size(); ++i) out += "," + format_double(v(i));
  return out + "\n";
}

void emit_correlation(ArtifactWriter& w, const RunConfig& cfg, const CorrelationMatrix& gamma, double jt,
                      std::size_t k) {
  const std::string dir = gamma.space == Space::Position ? "position_corr" : "momentum_corr";
  const std::string_view kind = gamma.space == Space::Position ? "position_corr" : "momentum_corr";
  w.emit(kind, jt, snapshot_name(dir, k, "csv"), format_correlation_csv(gamma));
  if (cfg.heatmaps) {
    double vmax = 0.0;
    const std::string pgm = format_pgm(gamma.values, &vmax);
    w.emit(std::string(kind) + "_heatmap", jt, snapshot_name(dir, k, "pgm"), pgm, vmax);
  }
}

}  // namespace

int run_scenario(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const LatticeSpec& spec = cfg.spec;
  const auto h = build_two_particle_hamiltonian(spec);
  const auto psi0 = initial_pair_state(h.basis, cfg.initial.first, cfg.initial.second);
  const auto times = cfg.times();
  const auto states = evolve(decompose(h), psi0, times);
  const auto has = [&](Output o) { return cfg.outputs.contains(o); };
  int status = kExitOk;

  ArtifactWriter w(cfg.out_dir, spec.statistics);
  std::string density_csv = site_header("Jt", spec.L);
  std::string minor_csv = site_header("Jt", spec.L);
  std::string cowalk_csv = site_header("Jt,P_bound", spec.L);
  std::vector<CoWalkAmplitudes> cowalk;

  for (std::size_t k = 0; k < states.size(); ++k) {
    const double jt = times[k] * spec.J;
    const auto& psi = states[k];
    if (has(Output::PositionCorr) || has(Output::MomentumCorr)) {
      const PairAmplitude phi = pair_amplitude(psi);
      if (has(Output::PositionCorr)) emit_correlation(w, cfg, position_correlation(phi), jt, k);
      if (has(Output::MomentumCorr)) emit_correlation(w, cfg, momentum_correlation(phi), jt, k);
    }
    if (has(Output::Density)) density_csv += trace_row(jt, density(psi));
    if (has(Output::MinorDiag)) minor_csv += trace_row(jt, minor_diagonal(psi));
    if (has(Output::Cowalk)) {
      cowalk.push_back(cowalk_projection(psi));
      cowalk_csv += format_double(jt) + "," + trace_row(cowalk.back().bound_probability(),
                                                        cowalk.back().probabilities());
    }
  }
  if (has(Output::Density)) w.emit("density", std::nullopt, "density.csv", density_csv);
  if (has(Output::MinorDiag)) w.emit("minor_diag", std::nullopt, "minor_diag.csv", minor_csv);
  if (has(Output::Cowalk)) {
    w.emit("cowalk", std::nullopt, "cowalk.csv", cowalk_csv);
    if (spec.V != 0.0) {
      const auto params = effective_params(spec);
      const auto eff = evolve_effective(params, spec, cfg.initial.first, times);
      const auto cmp = compare_effective(cowalk, eff);
      std::string csv = "Jt,l1_distance,overlap\n";
      for (std::size_t k = 0; k < cmp.times.size(); ++k) {
        csv += format_double(cmp.times[k] * spec.J) + "," + format_double(cmp.l1_distance[k]) + "," +
               format_double(cmp.overlap[k]) + "\n";
      }
      w.emit("effective_compare", std::nullopt, "effective_compare.csv", csv);
      log << to_string(spec.statistics) << ": J_eff=" << format_double(params.hopping)
          << " max L1(full, effective)=" << format_double(cmp.max_l1) << "\n";
    }
  }
  if (has(Output::WaveguideCheck)) {
    const auto report = quantum_equivalence_check(spec, times, cfg.initial);
    std::string csv = "Jt,deviation\n";
    for (std::size_t k = 0; k < report.times.size(); ++k) {
      csv += format_double(report.times[k] * spec.J) + "," + format_double(report.deviation[k]) + "\n";
    }
    w.emit("waveguide_check", std::nullopt, "waveguide_check.csv", csv);
    w.emit("layout", std::nullopt, "layout.txt", format_layout(build_layout(spec, cfg.waveguide_boundary)));
    log << "waveguide equivalence max deviation " << format_double(report.max_deviation)
        << (report.pass() ? " PASS" : " FAIL") << "\n";
    if (!report.pass()) status = kExitTolerance;
  }
  w.finish();
  log << "wrote " << (cfg.out_dir / "run.jsonl").string() << "\n";
  return status;
}

int run_preset(std::string_view preset, const RunConfig& base, std::ostream& log) {
  int status = kExitOk;
  for (const auto& run : expand_preset(preset, base)) {
    log << "[" << run.name << "] ";
    status = std::max(status, run_scenario(run.config, log));
  }
  return status;
}

int run_oracle(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const LatticeSpec& spec = cfg.spec;
  if (spec.V != 0.0) throw ValidationError("V", "the free-walk oracle requires V = 0");
  const auto h = build_two_particle_hamiltonian(spec);
  const auto psi0 = initial_pair_state(h.basis, cfg.initial.first, cfg.initial.second);
  const auto times = cfg.times();
  const auto states = evolve(decompose(h), psi0, times);
  const bool momentum = spec.statistics != Statistics::HardCoreBose;

  double pos_dev = 0.0;
  double mom_dev = 0.0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const PairAmplitude phi = pair_amplitude(states[k]);
    const Eigen::MatrixXd expect = free_position_correlation(spec, cfg.initial, times[k]);
    pos_dev = std::max(pos_dev, (position_correlation(phi).values - expect).cwiseAbs().maxCoeff());
    if (momentum) {
      const Eigen::MatrixXd mexpect = free_momentum_correlation(spec, cfg.initial, times[k]);
      mom_dev = std::max(mom_dev, (momentum_correlation(phi).values - mexpect).cwiseAbs().maxCoeff());
    }
  }
  const bool ok = pos_dev <= kOracleTolerance && mom_dev <= kOracleTolerance;
  log << to_string(spec.statistics) << " L=" << spec.L << " Jt<=" << format_double(cfg.time_max)
      << " samples=" << times.size() << "\n";
  log << "max |Gamma_qr - " << (spec.statistics == Statistics::Bose ? "permanent" : "determinant")
      << "| = " << format_double(pos_dev) << "\n";
  if (momentum) log << "max |Gamma_ab - plane-wave| = " << format_double(mom_dev) << "\n";
  log << (ok ? "PASS" : "FAIL") << " (tolerance " << format_double(kOracleTolerance) << ")\n";
  return ok ? kExitOk : kExitTolerance;
}

int run_effective(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const Statistics all[] = {Statistics::Bose, Statistics::Fermi, Statistics::HardCoreBose};
  double speeds[3] = {0.0, 0.0, 0.0};
  int status = kExitOk;
  ArtifactWriter w(cfg.out_dir, cfg.spec.statistics);
  std::string summary = "statistics,J_eff,mu_eff,min_P_bound,max_L1,speed_full,speed_effective,two_J_eff\n";

  for (int i = 0; i < 3; ++i) {
    LatticeSpec spec = cfg.spec;
    spec.statistics = all[i];
    const auto params = effective_params(spec);
    if (!params.strong_coupling) {
      log << "warning: |V/J| = " << format_double(std::abs(spec.V / spec.J))
          << " is below 10; the effective model is a strong-coupling approximation\n";
    }
    const auto h = build_two_particle_hamiltonian(spec);
    const auto dec = decompose(h);
    const auto psi0 = initial_pair_state(h.basis, cfg.initial.first, cfg.initial.second);
    const Site q0 = cfg.initial.first;
    if (spec.wrap(q0 + 1) != cfg.initial.second) {
      throw ValidationError("init", "co-walking starts from a neighbour pair (q, q+1)");
    }

    // Comparison window: the configured time grid.
    const auto times = cfg.times();
    const auto states = evolve(dec, psi0, times);
    std::vector<CoWalkAmplitudes> full;
    double min_bound = 1.0;
    for (const auto& s : states) {
      full.push_back(cowalk_projection(s));
      min_bound = std::min(min_bound, full.back().bound_probability());
    }
    const auto cmp = compare_effective(full, evolve_effective(params, spec, q0, times));

    // Speed window: long enough for the composite front to cross the lattice.
    const double horizon = 1.25 * (spec.L - 1) / (2.0 * std::abs(params.hopping));
    const auto speed_times = uniform_times(horizon, 801);
    const auto far = evolve(dec, psi0, speed_times);
    FrontSpeedOptions opts;
    opts.center = q0;
    const auto fit = front_speed(minor_diagonal_trace(far), opts);
    MinorDiagonalTrace eff_trace;
    eff_trace.L = spec.L;
    for (const auto& c : evolve_effective(params, spec, q0, speed_times)) eff_trace.push(c.time, c.probabilities());
    const auto eff_fit = front_speed(eff_trace, opts);
    speeds[i] = fit.speed;

    summary += std::string(to_string(spec.statistics)) + "," + format_double(params.hopping) + "," +
               format_double(params.chemical_potential) + "," + format_double(min_bound) + "," +
               format_double(cmp.max_l1) + "," + format_double(fit.speed) + "," + format_double(eff_fit.speed) +
               "," + format_double(2.0 * std::abs(params.hopping)) + "\n";
    log << to_string(spec.statistics) << ": J_eff=" << format_double(params.hopping)
        << " mu_eff=" << format_double(params.chemical_potential) << " min P_bound=" << format_double(min_bound)
        << " max L1=" << format_double(cmp.max_l1) << " speed=" << format_double(fit.speed)
        << " (effective " << format_double(eff_fit.speed) << ", 2 J_eff " << format_double(2.0 * std::abs(params.hopping))
        << ")\n";
  }
  const double ratio_bf = speeds[0] / speeds[1];
  const double ratio_fh = speeds[1] / speeds[2];
  const bool ok = std::abs(ratio_bf / 3.0 - 1.0) <= kSpeedRatioTolerance;
  summary += "ratio_bose_fermi," + format_double(ratio_bf) + "\nratio_fermi_hcb," + format_double(ratio_fh) + "\n";
  w.emit("effective_summary", std::nullopt, "effective_summary.csv", summary);
  w.finish();
  log << "speed ratio Bose:Fermi = " << format_double(ratio_bf) << " (expected 3), Fermi:HCB = "
      << format_double(ratio_fh) << "\n";
  log << (ok ? "PASS" : "FAIL") << "\n";
  if (!ok) status = kExitTolerance;
  return status;
}

int run_waveguide(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const auto layout = build_layout(cfg.spec, cfg.waveguide_boundary);
  ArtifactWriter w(cfg.out_dir, cfg.spec.statistics);
  w.emit("layout", std::nullopt, "layout.txt", format_layout(layout));
  log << "layout: " << layout.size() << " guides, " << layout.couplings.size() << " couplings ("
      << to_string(layout.boundary) << ")\n";

  const auto times = cfg.times();
  const auto report = quantum_equivalence_check(cfg.spec, times, cfg.initial);
  std::string csv = "Jt,deviation\n";
  for (std::size_t k = 0; k < report.times.size(); ++k) {
    csv += format_double(report.times[k] * cfg.spec.J) + "," + format_double(report.deviation[k]) + "\n";
  }
  w.emit("waveguide_check", std::nullopt, "waveguide_check.csv", csv);
  w.finish();
  log << "max |sqrt(2) E - Phi| = " << format_double(report.max_deviation) << " "
      << (report.pass() ? "PASS" : "FAIL") << "\n";
  return report.pass() ? kExitOk : kExitTolerance;
}

}  // namespace qwalk2
