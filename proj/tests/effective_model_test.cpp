#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "qwalk2/effective_model.hpp"
#include "qwalk2/errors.hpp"
#include "qwalk2/evolution.hpp"
#include "qwalk2/hamiltonian.hpp"
#include "qwalk2/observables.hpp"

namespace qwalk2 {
namespace {

LatticeSpec make_spec(int L, Statistics s, double V, double J = 1.0) {
  LatticeSpec spec;
  spec.L = L;
  spec.J = J;
  spec.V = V;
  spec.statistics = s;
  return spec;
}

TEST(EffectiveParams, Values) {
  const auto b = effective_params(make_spec(10, Statistics::Bose, 80.0));
  EXPECT_DOUBLE_EQ(b.hopping, 0.0375);
  EXPECT_DOUBLE_EQ(b.chemical_potential, 80.075);
  EXPECT_TRUE(b.strong_coupling);
  for (auto s : {Statistics::Fermi, Statistics::HardCoreBose}) {
    const auto p = effective_params(make_spec(10, s, 80.0));
    EXPECT_DOUBLE_EQ(p.hopping, 0.0125);
    EXPECT_DOUBLE_EQ(p.chemical_potential, 80.025);
  }
  const auto weak = effective_params(make_spec(10, Statistics::Bose, 4.0));
  EXPECT_FALSE(weak.strong_coupling);
  EXPECT_DOUBLE_EQ(weak.hopping, 0.75);
}

TEST(EffectiveParams, ZeroInteractionRejected) {
  EXPECT_THROW(effective_params(make_spec(10, Statistics::Bose, 0.0)), ZeroInteraction);
}

TEST(EffectiveHamiltonian, PlaneWaveDispersion) {
  const auto spec = make_spec(6, Statistics::Bose, 50.0);
  const auto p = effective_params(spec);
  const Eigen::MatrixXd h = effective_hamiltonian(p, spec);
  const MomentumGrid grid(spec);
  const int n = spec.sites();
  for (int a = 0; a < n; ++a) {
    Eigen::VectorXcd v(n);
    for (int k = 0; k < n; ++k) v(k) = std::exp(std::complex<double>(0.0, grid(a) * (k - spec.L)));
    const double e = p.chemical_potential + 2.0 * p.hopping * std::cos(grid(a));
    EXPECT_LE((h.cast<std::complex<double>>() * v - e * v).cwiseAbs().maxCoeff(), 1e-12);
  }
}

// mu only contributes a global phase to the bound-pair wavefunction.
TEST(EvolveEffective, ChemicalPotentialIsGlobalPhase) {
  const auto spec = make_spec(10, Statistics::Fermi, 80.0);
  auto p = effective_params(spec);
  const auto times = uniform_times(40.0, 9);
  const auto a = evolve_effective(p, spec, 0, times);
  p.chemical_potential = 0.0;
  const auto b = evolve_effective(p, spec, 0, times);
  for (std::size_t k = 0; k < times.size(); ++k) {
    // mu t reaches 3200 here; rounding in the phase sets the floor.
    EXPECT_LE((a[k].probabilities() - b[k].probabilities()).cwiseAbs().maxCoeff(), 1e-11);
    EXPECT_NEAR(a[k].bound_probability(), 1.0, 1e-12);
  }
}

TEST(CoWalkProjection, InitialPairAndSeamSign) {
  const auto spec = make_spec(3, Statistics::Fermi, 80.0);
  const auto basis = build_basis(spec);
  const auto c = cowalk_projection(initial_pair_state(basis, 0, 1));
  EXPECT_EQ(c.c(3), std::complex<double>(1.0));
  EXPECT_DOUBLE_EQ(c.bound_probability(), 1.0);
  // (-3, 3) is the neighbour pair across the seam: a†_3 a†_{-3} = -a†_{-3} a†_3.
  const auto seam = cowalk_projection(initial_pair_state(basis, -3, 3));
  EXPECT_EQ(seam.c(6), std::complex<double>(-1.0));
  const auto hcb = cowalk_projection(initial_pair_state(build_basis(make_spec(3, Statistics::HardCoreBose, 80.0)), -3, 3));
  EXPECT_EQ(hcb.c(6), std::complex<double>(1.0));
}

struct Comparison {
  EffectiveComparison cmp;
  double min_bound;
};

Comparison compare(const LatticeSpec& spec, const EffectiveParams& params) {
  const auto times = uniform_times(40.0 / spec.J, 201);
  const auto h = build_two_particle_hamiltonian(spec);
  const auto states = evolve(decompose(h), initial_pair_state(h.basis, 0, 1), times);
  std::vector<CoWalkAmplitudes> full;
  double min_bound = 1.0;
  for (const auto& s : states) {
    full.push_back(cowalk_projection(s));
    min_bound = std::min(min_bound, full.back().bound_probability());
  }
  const auto eff = evolve_effective(params, spec, 0, times);
  return {compare_effective(full, eff), min_bound};
}

class StrongCoupling : public ::testing::TestWithParam<Statistics> {};

TEST_P(StrongCoupling, FullModelFollowsEffectiveModel) {
  const auto spec = make_spec(10, GetParam(), 80.0);
  const auto r = compare(spec, effective_params(spec));
  EXPECT_GE(r.min_bound, 0.99);
  EXPECT_LE(r.cmp.max_l1, 0.05);
  EXPECT_GE(r.cmp.min_overlap, 0.99);
}

TEST_P(StrongCoupling, WrongHoppingIsDetected) {
  const auto spec = make_spec(10, GetParam(), 80.0);
  auto params = effective_params(spec);
  params.hopping = GetParam() == Statistics::Bose ? 1.0 / 80.0 : 3.0 / 80.0;
  EXPECT_GT(compare(spec, params).cmp.max_l1, 0.5);
}

INSTANTIATE_TEST_SUITE_P(AllStatistics, StrongCoupling,
                         ::testing::Values(Statistics::Bose, Statistics::Fermi, Statistics::HardCoreBose),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(CompareEffective, GridMismatch) {
  const auto spec = make_spec(4, Statistics::Bose, 80.0);
  const auto p = effective_params(spec);
  const std::vector<double> t1{0.0, 1.0};
  const std::vector<double> t2{0.0, 2.0};
  const auto a = evolve_effective(p, spec, 0, t1);
  const auto b = evolve_effective(p, spec, 0, t2);
  EXPECT_THROW(compare_effective(a, b), GridMismatch);
  const auto c = evolve_effective(p, make_spec(5, Statistics::Bose, 80.0), 0, t1);
  EXPECT_THROW(compare_effective(a, c), GridMismatch);
  EXPECT_NO_THROW(compare_effective(a, a));
}

}  // namespace
}  // namespace qwalk2
