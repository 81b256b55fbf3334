#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qwalk2/lattice.hpp"

namespace qwalk2 {

// Strong-coupling model of a bound neighbour pair b†_q <-> a†_q a†_{q+1}:
//   H_eff = J_eff sum_q (b†_q b_{q+1} + h.c.) + mu_eff sum_q b†_q b_q
// Bose:      J_eff = 3 J^2 / V, mu_eff = V + 6 J^2 / V
// Fermi/HCB: J_eff =   J^2 / V, mu_eff = V + 2 J^2 / V
struct EffectiveParams {
  Statistics statistics;
  double hopping;
  double chemical_potential;
  // False when |V/J| < 10, outside the regime where the expansion is trusted.
  bool strong_coupling;
};

// Throws ZeroInteraction when V == 0.
EffectiveParams effective_params(const LatticeSpec& spec);

// L_t x L_t ring matrix with +J_eff hopping and mu_eff on the diagonal.
Eigen::MatrixXd effective_hamiltonian(const EffectiveParams& params, const LatticeSpec& spec);

// Amplitudes on the neighbour-pair states |n_q = 1, n_{q+1} = 1>, q = -L..L
// (q = L pairs with -L across the seam).
struct CoWalkAmplitudes {
  int L = 0;
  double time = 0.0;
  Eigen::VectorXcd c;

  double bound_probability() const { return c.squaredNorm(); }
  Eigen::VectorXd probabilities() const { return c.cwiseAbs2(); }
};

std::vector<CoWalkAmplitudes> evolve_effective(const EffectiveParams& params, const LatticeSpec& spec,
                                               Site q0, std::span<const double> times);

// c_q = <a†_q a†_{q+1} 0 | psi>; for q = L this is the canonical (-L, L)
// element with the exchange sign of the statistics.
CoWalkAmplitudes cowalk_projection(const TwoParticleState& state);

struct EffectiveComparison {
  std::vector<double> times;
  // L1 distance between |c_q|^2 distributions, the full model renormalised
  // by its bound probability.
  std::vector<double> l1_distance;
  // |<c_eff|c_full>| / |c_full|; insensitive to global phase.
  std::vector<double> overlap;
  double max_l1 = 0.0;
  double min_overlap = 1.0;
};

// Throws GridMismatch unless both series share lattice size and time grid.
EffectiveComparison compare_effective(std::span<const CoWalkAmplitudes> full,
                                      std::span<const CoWalkAmplitudes> effective);

}  // namespace qwalk2
