#include "qwalk2/effective_model.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "qwalk2/errors.hpp"
#include "qwalk2/evolution.hpp"

namespace qwalk2 {

EffectiveParams effective_params(const LatticeSpec& spec) {
  spec.validate();
  if (spec.V == 0.0) throw ZeroInteraction("effective co-walking model needs V != 0");
  const double j2v = spec.J * spec.J / spec.V;
  const bool strong = std::abs(spec.V / spec.J) >= 10.0;
  if (spec.statistics == Statistics::Bose) {
    return {spec.statistics, 3.0 * j2v, spec.V + 6.0 * j2v, strong};
  }
  return {spec.statistics, j2v, spec.V + 2.0 * j2v, strong};
}

Eigen::MatrixXd effective_hamiltonian(const EffectiveParams& params, const LatticeSpec& spec) {
  const int n = spec.sites();
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) * params.chemical_potential;
  for (int q = 0; q < n; ++q) {
    const int next = (q + 1) % n;
    h(q, next) = params.hopping;
    h(next, q) = params.hopping;
  }
  return h;
}

std::vector<CoWalkAmplitudes> evolve_effective(const EffectiveParams& params, const LatticeSpec& spec,
                                               Site q0, std::span<const double> times) {
  spec.validate();
  if (!spec.contains(q0)) throw OutOfRange("composite start site " + std::to_string(q0));
  const auto dec = decompose(effective_hamiltonian(params, spec));
  Eigen::VectorXcd c0 = Eigen::VectorXcd::Zero(spec.sites());
  c0(spec.offset(q0)) = 1.0;
  auto vectors = propagate_all(dec, c0, times);
  std::vector<CoWalkAmplitudes> out;
  out.reserve(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) out.push_back({spec.L, times[k], std::move(vectors[k])});
  return out;
}

CoWalkAmplitudes cowalk_projection(const TwoParticleState& state) {
  const BasisMap& basis = *state.basis;
  const int L = basis.L();
  const int n = basis.sites();
  CoWalkAmplitudes out{L, state.time, Eigen::VectorXcd::Zero(n)};
  for (Site q = -L; q <= L; ++q) {
    const Site next = q == L ? -L : q + 1;
    const auto slot = basis.locate(q, next);
    out.c(q + L) = slot->sign * state.amplitudes(static_cast<Eigen::Index>(slot->index));
  }
  return out;
}

EffectiveComparison compare_effective(std::span<const CoWalkAmplitudes> full,
                                      std::span<const CoWalkAmplitudes> effective) {
  if (full.size() != effective.size()) {
    throw GridMismatch("full and effective series have " + std::to_string(full.size()) + " and " +
                       std::to_string(effective.size()) + " samples");
  }
  EffectiveComparison report;
  for (std::size_t k = 0; k < full.size(); ++k) {
    const auto& f = full[k];
    const auto& e = effective[k];
    if (f.L != e.L || std::abs(f.time - e.time) > 1e-12 * std::max(1.0, std::abs(f.time))) {
      throw GridMismatch("sample " + std::to_string(k) + " differs in lattice size or time");
    }
    const double p_bound = f.bound_probability();
    const Eigen::VectorXd pf = f.probabilities() / p_bound;
    const Eigen::VectorXd pe = e.probabilities();
    const double l1 = (pf - pe).cwiseAbs().sum();
    const double overlap = std::abs(e.c.dot(f.c)) / std::sqrt(p_bound);
    report.times.push_back(f.time);
    report.l1_distance.push_back(l1);
    report.overlap.push_back(overlap);
    report.max_l1 = std::max(report.max_l1, l1);
    report.min_overlap = std::min(report.min_overlap, overlap);
  }
  return report;
}

}  // namespace qwalk2
