#pragma once

#include <memory>

#include <Eigen/Dense>

#include "qwalk2/lattice.hpp"

namespace qwalk2 {

// Dense real-symmetric H^(2) in the two-particle sector.
struct HamiltonianMatrix {
  LatticeSpec spec;
  std::shared_ptr<const BasisMap> basis;
  Eigen::MatrixXd entries;

  Eigen::Index dim() const noexcept { return entries.rows(); }
};

// Matrix of
//   H = -J sum_l (a†_l a_{l+1} + h.c.) + V sum_l n_l n_{l+1}
// on the periodic ring, restricted to two particles of the basis statistics.
//
// Diagonal: V on ring-neighbour pairs (the wrap pair (-L, L) included),
// zero elsewhere, including Bose doublons.
// Off-diagonal: -J per single-particle hop, times sqrt(2) whenever a Bose
// hop creates or empties a doublon. A fermion crossing the seam L <-> -L
// reverses canonical order and so contributes +J; hard-core bosons commute
// on distinct sites and keep -J.
HamiltonianMatrix build_two_particle_hamiltonian(const LatticeSpec& spec,
                                                 std::shared_ptr<const BasisMap> basis);

HamiltonianMatrix build_two_particle_hamiltonian(const LatticeSpec& spec);

// L_t x L_t ring hopping matrix: -J between ring neighbours, zero diagonal.
Eigen::MatrixXd build_single_particle_hamiltonian(const LatticeSpec& spec);

// <psi|H|psi> for a normalised state.
double energy(const HamiltonianMatrix& h, const TwoParticleState& state);

}  // namespace qwalk2
