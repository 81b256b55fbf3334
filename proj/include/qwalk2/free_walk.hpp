#pragma once

#include <Eigen/Dense>

#include "qwalk2/lattice.hpp"

namespace qwalk2 {

// Closed-form correlations of two non-interacting walkers launched from
// a†_{l1} a†_{l2}|0>, built from single-particle amplitudes alone. Used by the
// `oracle` command as an independent check of the two-particle engine.
//
// Position: Gamma_qr = |G_{q,l1} G_{r,l2} +/- G_{q,l2} G_{r,l1}|^2 with + for
// bosons (permanent) and - for fermions (determinant). Hard-core bosons at
// V = 0 share the fermionic position correlations: they map to fermions with
// antiperiodic boundaries, whose propagator on an odd ring is
// (-1)^(q-l) conj(G_{q,l}), leaving the modulus of the determinant unchanged.
Eigen::MatrixXd free_position_correlation(const LatticeSpec& spec, SitePair init, double t);

// Momentum: each plane-wave mode only acquires the phase exp(2 i J cos(p) t),
// so Gamma_ab = |A_ab +/- A_ba|^2 with
//   A_ab = (1/L_t) exp(i p_a l1 + i p_b l2) exp(2 i J (cos p_a + cos p_b) t).
// Valid for bosons and fermions only (standard commutation relations).
Eigen::MatrixXd free_momentum_correlation(const LatticeSpec& spec, SitePair init, double t);

}  // namespace qwalk2
