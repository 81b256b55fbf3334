#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qwalk2/lattice.hpp"

namespace qwalk2 {

// Phi(l, m) = <0| a_l a_m |psi>, indexed by (l + L, m + L). All two-particle
// correlations are quadratic in Phi, so the statistics enter only here.
struct PairAmplitude {
  Statistics statistics;
  double time;
  int L;
  Eigen::MatrixXcd phi;

  std::complex<double> at(Site l, Site m) const { return phi(l + L, m + L); }
};

enum class Space { Position, Momentum };

struct CorrelationMatrix {
  Space space;
  Statistics statistics;
  double time;
  int L;
  Eigen::MatrixXd values;

  double at(int q, int r) const { return values(q + L, r + L); }
  double total() const { return values.sum(); }
};

PairAmplitude pair_amplitude(const TwoParticleState& state);

// Gamma_qr = <a†_q a†_r a_r a_q> = |Phi(q, r)|^2.
CorrelationMatrix position_correlation(const TwoParticleState& state);
CorrelationMatrix position_correlation(const PairAmplitude& phi);

// Unitary 2D DFT of Phi:
//   Phi~(a, b) = (1/L_t) sum_{l,m} exp(i p_a l) exp(i p_b m) Phi(l, m).
// Evaluated as F Phi F^T with rows in parallel.
Eigen::MatrixXcd momentum_pair_amplitude(const PairAmplitude& phi);
// Direct quadruple sum; single-threaded reference.
Eigen::MatrixXcd momentum_pair_amplitude_serial(const PairAmplitude& phi);

// Gamma_ab = |Phi~(a, b)|^2.
CorrelationMatrix momentum_correlation(const TwoParticleState& state);
CorrelationMatrix momentum_correlation(const PairAmplitude& phi);
CorrelationMatrix momentum_correlation_serial(const PairAmplitude& phi);

// <n_l>, counting a doublon twice.
Eigen::VectorXd density(const TwoParticleState& state);

// Gamma_{q, q+1} for q = -L..L with q + 1 wrapped onto the ring.
Eigen::VectorXd minor_diagonal(const TwoParticleState& state);

// Minor-diagonal vectors sampled over time.
struct MinorDiagonalTrace {
  int L = 0;
  std::vector<double> times;
  std::vector<Eigen::VectorXd> rows;

  void push(double t, Eigen::VectorXd row) {
    times.push_back(t);
    rows.push_back(std::move(row));
  }
};

MinorDiagonalTrace minor_diagonal_trace(std::span<const TwoParticleState> states);

// Half-width of a minor-diagonal distribution around `center`: each site is a
// unit bin, and the result is the radius at which the cumulative mass inside
// the symmetric window first reaches `fraction` of the total (linear within
// the outermost bin).
double half_width(const Eigen::VectorXd& minor, int L, double fraction = 0.9, Site center = 0);

struct FrontSpeedOptions {
  double mass_fraction = 0.9;
  Site center = 0;
  // The fit starts at the first sample whose half-width reaches fit_from and
  // stops before the first sample beyond fit_until (default L - 2).
  double fit_from = 2.0;
  std::optional<double> fit_until;
  std::size_t min_samples = 10;
};

struct FrontSpeedFit {
  double speed = 0.0;      // sites per unit time
  double intercept = 0.0;
  std::size_t first = 0;   // fitted sample range [first, last)
  std::size_t last = 0;
  std::vector<double> half_widths;
};

// Least-squares slope of the half-width over the ballistic window.
// Throws InsufficientSamples when the window holds fewer than min_samples,
// FrontHitBoundary when the front reaches |q| = L - 1 inside it.
FrontSpeedFit front_speed(const MinorDiagonalTrace& trace, const FrontSpeedOptions& options = {});

}  // namespace qwalk2
