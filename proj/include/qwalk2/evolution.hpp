#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "qwalk2/hamiltonian.hpp"
#include "qwalk2/lattice.hpp"

namespace qwalk2 {

// H = Q diag(lambda) Q^T with ascending eigenvalues and orthonormal columns.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  Eigen::Index dim() const noexcept { return eigenvalues.size(); }

  // exp(-i H t) v, evaluated as Q diag(exp(-i lambda t)) Q^T v.
  Eigen::VectorXcd propagate(const Eigen::VectorXcd& v, double t) const;
};

// Throws ConvergenceFailure when the symmetric eigensolver does not converge.
SpectralDecomposition decompose(const Eigen::MatrixXd& symmetric);
SpectralDecomposition decompose(const HamiltonianMatrix& h);

// psi(t) for each entry of `times`; each returned state carries its own time
// stamp. Time points are independent and computed in parallel.
std::vector<TwoParticleState> evolve(const SpectralDecomposition& dec, const TwoParticleState& psi0,
                                     std::span<const double> times);

// Single-threaded reference for evolve().
std::vector<TwoParticleState> evolve_serial(const SpectralDecomposition& dec,
                                            const TwoParticleState& psi0,
                                            std::span<const double> times);

// Generic vector form used by the effective model and the waveguide.
std::vector<Eigen::VectorXcd> propagate_all(const SpectralDecomposition& dec,
                                            const Eigen::VectorXcd& v0,
                                            std::span<const double> times);

// exp(-i H t) v for sparse symmetric H by Chebyshev expansion on the
// Gershgorin interval; the series stops once the Bessel coefficients fall
// below 1e-16. Used for arrays too large to diagonalise densely.
Eigen::VectorXcd chebyshev_propagate(const Eigen::SparseMatrix<double>& h, const Eigen::VectorXcd& v, double t);

// G(t) = exp(-i H_1 t) from the plane-wave sum
//   G_{q,l} = (1/L_t) sum_alpha exp(i p_alpha (q - l)) exp(2 i J cos(p_alpha) t).
Eigen::MatrixXcd single_particle_propagator(const LatticeSpec& spec, double t);

// The same propagator from a numerical eigendecomposition of H_1.
Eigen::MatrixXcd single_particle_propagator_spectral(const LatticeSpec& spec, double t);

// n >= 2 equally spaced points on [0, t_max].
std::vector<double> uniform_times(double t_max, int n);

}  // namespace qwalk2
