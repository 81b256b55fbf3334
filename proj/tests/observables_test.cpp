#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "qwalk2/effective_model.hpp"
#include "qwalk2/errors.hpp"
#include "qwalk2/evolution.hpp"
#include "qwalk2/free_walk.hpp"
#include "qwalk2/hamiltonian.hpp"
#include "qwalk2/observables.hpp"

namespace qwalk2 {
namespace {

using cd = std::complex<double>;
const Statistics kAll[] = {Statistics::Bose, Statistics::Fermi, Statistics::HardCoreBose};

LatticeSpec make_spec(int L, Statistics s, double V = 0.0) {
  LatticeSpec spec;
  spec.L = L;
  spec.V = V;
  spec.statistics = s;
  return spec;
}

std::vector<TwoParticleState> walk(const LatticeSpec& spec, std::span<const double> times, SitePair init = {0, 1}) {
  const auto h = build_two_particle_hamiltonian(spec);
  return evolve(decompose(h), initial_pair_state(h.basis, init.first, init.second), times);
}

TEST(PairAmplitude, BoseInitialState) {
  const auto phi = pair_amplitude(initial_pair_state(build_basis(make_spec(3, Statistics::Bose)), 0, 1));
  EXPECT_EQ(phi.at(0, 1), cd(1.0));
  EXPECT_EQ(phi.at(1, 0), cd(1.0));
  EXPECT_EQ(phi.phi.cwiseAbs().sum(), 2.0);
}

// <0|a_1 a_0 a†_0 a†_1|0> = 1 fixes which ordering carries the plus sign.
TEST(PairAmplitude, FermiInitialStateSign) {
  const auto phi = pair_amplitude(initial_pair_state(build_basis(make_spec(3, Statistics::Fermi)), 0, 1));
  EXPECT_EQ(phi.at(1, 0), cd(1.0));
  EXPECT_EQ(phi.at(0, 1), cd(-1.0));
  EXPECT_EQ(phi.phi.cwiseAbs().sum(), 2.0);
}

TEST(PairAmplitude, BoseDoublon) {
  const auto phi = pair_amplitude(initial_pair_state(build_basis(make_spec(3, Statistics::Bose)), 0, 0));
  EXPECT_EQ(phi.at(0, 0), cd(std::numbers::sqrt2));
}

TEST(PairAmplitude, SymmetryAndMassAtEvolvedTimes) {
  const auto times = uniform_times(6.0, 13);
  for (auto s : kAll) {
    for (double V : {0.0, 1.0, -4.0}) {
      for (const auto& psi : walk(make_spec(6, s, V), times)) {
        const Eigen::MatrixXcd& phi = pair_amplitude(psi).phi;
        switch (s) {
          case Statistics::Bose:
            EXPECT_EQ((phi - phi.transpose()).cwiseAbs().maxCoeff(), 0.0);
            break;
          case Statistics::Fermi:
            EXPECT_EQ((phi + phi.transpose()).cwiseAbs().maxCoeff(), 0.0);
            break;
          case Statistics::HardCoreBose:
            EXPECT_EQ((phi - phi.transpose()).cwiseAbs().maxCoeff(), 0.0);
            EXPECT_EQ(phi.diagonal().cwiseAbs().maxCoeff(), 0.0);
            break;
        }
        EXPECT_NEAR(phi.cwiseAbs2().sum(), 2.0, 1e-10);
      }
    }
  }
}

TEST(PositionCorrelation, InitialState) {
  for (auto s : kAll) {
    const auto gamma = position_correlation(initial_pair_state(build_basis(make_spec(10, s)), 0, 1));
    EXPECT_EQ(gamma.at(0, 1), 1.0);
    EXPECT_EQ(gamma.at(1, 0), 1.0);
    EXPECT_EQ(gamma.total(), 2.0);
  }
}

TEST(PositionCorrelation, FreeBosonsFollowPermanent) {
  const auto spec = make_spec(10, Statistics::Bose);
  const auto times = uniform_times(4.0, 5);
  for (const auto& psi : walk(spec, times)) {
    const Eigen::MatrixXd expect = free_position_correlation(spec, {0, 1}, psi.time);
    EXPECT_LE((position_correlation(psi).values - expect).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(PositionCorrelation, FreeFermionsFollowDeterminant) {
  const auto spec = make_spec(10, Statistics::Fermi);
  const auto times = uniform_times(4.0, 5);
  for (const auto& psi : walk(spec, times)) {
    const auto gamma = position_correlation(psi);
    const Eigen::MatrixXd expect = free_position_correlation(spec, {0, 1}, psi.time);
    EXPECT_LE((gamma.values - expect).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_EQ(gamma.values.diagonal().cwiseAbs().maxCoeff(), 0.0);
  }
}

// Exact agreement at V = 0 on the odd ring; see free_walk.hpp.
TEST(PositionCorrelation, FermiAndHardCoreAgreeWithoutInteraction) {
  const auto times = uniform_times(4.0, 9);
  const auto f = walk(make_spec(10, Statistics::Fermi), times);
  const auto b = walk(make_spec(10, Statistics::HardCoreBose), times);
  for (std::size_t k = 0; k < times.size(); ++k) {
    EXPECT_LE((position_correlation(f[k]).values - position_correlation(b[k]).values).cwiseAbs().maxCoeff(), 1e-10);
  }
}

// With interaction the two differ only through amplitude that has wound
// through the seam; a ring wide enough that the light cone stays clear of it
// reproduces the agreement.
TEST(PositionCorrelation, FermiAndHardCoreAgreeBeforeSeam) {
  const auto times = uniform_times(4.0, 5);
  const auto f = walk(make_spec(28, Statistics::Fermi, 1.0), times);
  const auto b = walk(make_spec(28, Statistics::HardCoreBose, 1.0), times);
  for (std::size_t k = 0; k < times.size(); ++k) {
    EXPECT_LE((position_correlation(f[k]).values - position_correlation(b[k]).values).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(MomentumCorrelation, SumRuleAndFermiDiagonal) {
  const auto times = uniform_times(8.0, 9);
  for (auto s : kAll) {
    for (const auto& psi : walk(make_spec(7, s, 1.0), times)) {
      const auto gamma = momentum_correlation(psi);
      EXPECT_NEAR(gamma.total(), 2.0, 1e-10);
      EXPECT_GE(gamma.values.minCoeff(), 0.0);
      EXPECT_LE((gamma.values - gamma.values.transpose()).cwiseAbs().maxCoeff(), 1e-12);
      if (s == Statistics::Fermi) EXPECT_LE(gamma.values.diagonal().maxCoeff(), 1e-30);
    }
  }
}

TEST(MomentumCorrelation, FreeWalkPlaneWaveOracle) {
  for (auto s : {Statistics::Bose, Statistics::Fermi}) {
    const auto spec = make_spec(10, s);
    for (const auto& psi : walk(spec, uniform_times(4.0, 5))) {
      const Eigen::MatrixXd expect = free_momentum_correlation(spec, {0, 1}, psi.time);
      EXPECT_LE((momentum_correlation(psi).values - expect).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

// Jordan-Wigner route: two hard-core bosons on an odd ring at V = 0 are free
// fermions with antiperiodic boundaries (momenta 2 pi (k + 1/2) / L_t), and
// Phi_HCB(l, m) = sign(m - l) Phi_F(l, m).
Eigen::MatrixXd hard_core_momentum_oracle(int L, double t) {
  const int n = 2 * L + 1;
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double p = 2.0 * std::numbers::pi * (k + 0.5) / n;
    const cd phase = std::exp(cd(0.0, 2.0 * std::cos(p) * t));
    for (int q = 0; q < n; ++q) {
      for (int l = 0; l < n; ++l) g(q, l) += std::exp(cd(0.0, p * (q - l))) * phase / double(n);
    }
  }
  Eigen::MatrixXcd phi(n, n);
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      const double sign = m > l ? 1.0 : (m < l ? -1.0 : 0.0);
      phi(l, m) = sign * (g(l, L) * g(m, L + 1) - g(l, L + 1) * g(m, L));
    }
  }
  Eigen::MatrixXcd f(n, n);
  for (int a = 0; a < n; ++a) {
    for (int l = 0; l < n; ++l) f(a, l) = std::exp(cd(0.0, 2.0 * std::numbers::pi * (a - L) * (l - L) / n));
  }
  return (f * phi * f.transpose() / double(n)).cwiseAbs2();
}

TEST(MomentumCorrelation, HardCoreMatchesJordanWignerOracle) {
  const auto spec = make_spec(10, Statistics::HardCoreBose);
  for (const auto& psi : walk(spec, uniform_times(6.0, 7))) {
    EXPECT_LE((momentum_correlation(psi).values - hard_core_momentum_oracle(10, psi.time)).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

TEST(MomentumCorrelation, HardCoreBunchesWhereFermionsCannot) {
  const std::vector<double> t{4.0};
  const auto b = momentum_correlation(walk(make_spec(10, Statistics::HardCoreBose), t)[0]);
  const auto f = momentum_correlation(walk(make_spec(10, Statistics::Fermi), t)[0]);
  // Peak is 0.006354 at Jt = 4; the diagonal of a unit-normalised 21 x 21
  // grid holding total weight 2 cannot exceed a few times 1 / 441.
  EXPECT_NEAR(b.values.diagonal().maxCoeff(), 0.0063537, 1e-6);
  EXPECT_LE(f.values.diagonal().maxCoeff(), 1e-30);
}

TEST(MomentumCorrelation, FactoredTransformMatchesDirectSum) {
  for (auto s : kAll) {
    const auto psi = walk(make_spec(5, s, 2.0), std::vector<double>{1.7})[0];
    const auto phi = pair_amplitude(psi);
    EXPECT_LE((momentum_pair_amplitude(phi) - momentum_pair_amplitude_serial(phi)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Density, InitialAndDoublon) {
  const auto psi = initial_pair_state(build_basis(make_spec(4, Statistics::Bose)), 0, 1);
  const Eigen::VectorXd n = density(psi);
  EXPECT_EQ(n(4), 1.0);
  EXPECT_EQ(n(5), 1.0);
  EXPECT_EQ(n.sum(), 2.0);
  const Eigen::VectorXd d = density(initial_pair_state(build_basis(make_spec(4, Statistics::Bose)), 0, 0));
  EXPECT_EQ(d(4), 2.0);
}

TEST(Density, ParticleNumberConserved) {
  for (auto s : kAll) {
    for (const auto& psi : walk(make_spec(8, s, 1.0), uniform_times(20.0, 11))) {
      EXPECT_NEAR(density(psi).sum(), 2.0, 1e-10);
      // Marginal of the position correlation reproduces the density.
      const auto gamma = position_correlation(psi);
      const Eigen::VectorXd marginal = gamma.values.rowwise().sum();
      EXPECT_LE((marginal - density(psi)).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(MinorDiagonal, InitialStateAndBoundMass) {
  const auto spec = make_spec(10, Statistics::Bose, 80.0);
  const auto h = build_two_particle_hamiltonian(spec);
  const auto psi0 = initial_pair_state(h.basis, 0, 1);
  const Eigen::VectorXd m0 = minor_diagonal(psi0);
  EXPECT_EQ(m0(10), 1.0);
  EXPECT_EQ(m0.sum(), 1.0);
  for (const auto& psi : evolve(decompose(h), psi0, uniform_times(40.0, 41))) {
    const double p_bound = cowalk_projection(psi).bound_probability();
    const double one_line = minor_diagonal(psi).sum();
    EXPECT_NEAR(one_line, p_bound, 1e-14);
    // Both minor diagonals together carry twice the bound mass.
    const auto gamma = position_correlation(psi);
    double both = 0.0;
    for (int q = -10; q <= 10; ++q) both += gamma.at(q, spec.wrap(q + 1)) + gamma.at(spec.wrap(q + 1), q);
    EXPECT_GE(both, 0.99 * 2.0 * p_bound);
  }
}

TEST(MinorDiagonal, FreeWalkersDoNotCoWalk) {
  const auto psi = walk(make_spec(10, Statistics::Bose), std::vector<double>{4.0})[0];
  // Measured 0.086 at Jt = 4 (V = 0).
  EXPECT_LT(minor_diagonal(psi).sum(), 0.2);
}

MinorDiagonalTrace synthetic_trace(int L, double speed, int samples) {
  MinorDiagonalTrace trace;
  trace.L = L;
  for (int k = 0; k < samples; ++k) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(2 * L + 1);
    const int q = static_cast<int>(std::lround(speed * k));
    row(L + q) += 0.5;
    row(L - q) += 0.5;
    trace.push(static_cast<double>(k), row);
  }
  return trace;
}

TEST(HalfWidth, BinInterpolation) {
  Eigen::VectorXd row = Eigen::VectorXd::Zero(7);
  row(3) = 1.0;
  EXPECT_DOUBLE_EQ(half_width(row, 3), 0.45);
  row.setZero();
  row(1) = row(5) = 0.5;
  EXPECT_DOUBLE_EQ(half_width(row, 3), 2.4);
}

TEST(FrontSpeed, SyntheticUnitSpeed) {
  const auto fit = front_speed(synthetic_trace(30, 1.0, 26));
  EXPECT_NEAR(fit.speed, 1.0, 0.1);
}

TEST(FrontSpeed, Errors) {
  EXPECT_THROW(front_speed(synthetic_trace(30, 1.0, 8)), InsufficientSamples);
  FrontSpeedOptions opts;
  opts.fit_until = 40.0;
  EXPECT_THROW(front_speed(synthetic_trace(30, 1.0, 31), opts), FrontHitBoundary);
}

}  // namespace
}  // namespace qwalk2
