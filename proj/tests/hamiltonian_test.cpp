#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fock_oracle.hpp"
#include "qwalk2/errors.hpp"
#include "qwalk2/evolution.hpp"
#include "qwalk2/hamiltonian.hpp"

namespace qwalk2 {
namespace {

LatticeSpec make_spec(int L, Statistics s, double J = 1.0, double V = 0.0) {
  LatticeSpec spec;
  spec.L = L;
  spec.J = J;
  spec.V = V;
  spec.statistics = s;
  return spec;
}

class FockOracle : public ::testing::TestWithParam<std::tuple<int, Statistics>> {};

TEST_P(FockOracle, MatchesBruteForceProjectionExactly) {
  const auto [L, s] = GetParam();
  for (const auto [J, V] : {std::pair{1.0, 0.0}, std::pair{1.0, 2.0}, std::pair{0.7, -1.3}}) {
    const auto spec = make_spec(L, s, J, V);
    const auto h = build_two_particle_hamiltonian(spec);
    const Eigen::MatrixXd oracle = testing::fock_projected_hamiltonian(spec, *h.basis);
    ASSERT_EQ(oracle.rows(), h.dim());
    for (Eigen::Index i = 0; i < h.dim(); ++i) {
      for (Eigen::Index j = 0; j < h.dim(); ++j) {
        EXPECT_EQ(h.entries(i, j), oracle(i, j)) << "entry " << i << "," << j;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllStatistics, FockOracle,
                         ::testing::Combine(::testing::Values(1, 2),
                                            ::testing::Values(Statistics::Bose, Statistics::Fermi,
                                                              Statistics::HardCoreBose)));

TEST(TwoParticleHamiltonian, BoseDoublonHopping) {
  const auto spec = make_spec(3, Statistics::Bose, 1.25, 0.5);
  const auto h = build_two_particle_hamiltonian(spec);
  for (int l = -3; l < 3; ++l) {
    const auto i = static_cast<Eigen::Index>(h.basis->index_of(l, l));
    const auto j = static_cast<Eigen::Index>(h.basis->index_of(l, l + 1));
    EXPECT_EQ(h.entries(i, j), -std::numbers::sqrt2 * 1.25);
  }
  // Across the seam the neighbour pair is (-L, L).
  const auto i = static_cast<Eigen::Index>(h.basis->index_of(3, 3));
  const auto j = static_cast<Eigen::Index>(h.basis->index_of(-3, 3));
  EXPECT_EQ(h.entries(i, j), -std::numbers::sqrt2 * 1.25);
}

TEST(TwoParticleHamiltonian, InteractionOnNeighbourPairs) {
  for (auto s : {Statistics::Bose, Statistics::Fermi, Statistics::HardCoreBose}) {
    const auto spec = make_spec(2, s, 1.0, 3.0);
    const auto h = build_two_particle_hamiltonian(spec);
    for (std::size_t i = 0; i < h.basis->dim(); ++i) {
      const auto [a, b] = h.basis->pair(i);
      const double expect = spec.ring_neighbours(a, b) ? 3.0 : 0.0;
      EXPECT_EQ(h.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)), expect);
    }
    const auto n01 = static_cast<Eigen::Index>(h.basis->index_of(0, 1));
    EXPECT_EQ(h.entries(n01, n01), 3.0);
    const auto wrap = static_cast<Eigen::Index>(h.basis->index_of(-2, 2));
    EXPECT_EQ(h.entries(wrap, wrap), 3.0);
  }
}

TEST(TwoParticleHamiltonian, FermionSeamSign) {
  const auto spec = make_spec(2, Statistics::Fermi, 1.0, 0.0);
  const auto h = build_two_particle_hamiltonian(spec);
  for (int l = -1; l <= 1; ++l) {
    const auto i = static_cast<Eigen::Index>(h.basis->index_of(-2, l));
    const auto j = static_cast<Eigen::Index>(h.basis->index_of(l, 2));
    EXPECT_EQ(h.entries(i, j), 1.0) << "l=" << l;
  }
  const auto hcb = build_two_particle_hamiltonian(make_spec(2, Statistics::HardCoreBose));
  for (int l = -1; l <= 1; ++l) {
    const auto i = static_cast<Eigen::Index>(hcb.basis->index_of(-2, l));
    const auto j = static_cast<Eigen::Index>(hcb.basis->index_of(l, 2));
    EXPECT_EQ(hcb.entries(i, j), -1.0);
  }
}

TEST(TwoParticleHamiltonian, SymmetricWithSparseRows) {
  for (auto s : {Statistics::Bose, Statistics::Fermi, Statistics::HardCoreBose}) {
    const auto h = build_two_particle_hamiltonian(make_spec(10, s, 1.0, 2.0));
    EXPECT_EQ((h.entries - h.entries.transpose()).cwiseAbs().maxCoeff(), 0.0);
    for (Eigen::Index i = 0; i < h.dim(); ++i) {
      int hops = 0;
      for (Eigen::Index j = 0; j < h.dim(); ++j) hops += (j != i && h.entries(i, j) != 0.0);
      EXPECT_LE(hops, 4);
    }
  }
}

// Fermi and HCB matrices differ only on hops across the seam.
TEST(TwoParticleHamiltonian, FermiAndHardCoreDifferOnlyAtSeam) {
  const auto f = build_two_particle_hamiltonian(make_spec(4, Statistics::Fermi, 1.0, 1.5));
  const auto b = build_two_particle_hamiltonian(make_spec(4, Statistics::HardCoreBose, 1.0, 1.5));
  Eigen::MatrixXd diff = f.entries - b.entries;
  int seam_entries = 0;
  for (Eigen::Index i = 0; i < f.dim(); ++i) {
    for (Eigen::Index j = 0; j < f.dim(); ++j) {
      if (diff(i, j) == 0.0) continue;
      const auto pi = f.basis->pair(static_cast<std::size_t>(i));
      const auto pj = f.basis->pair(static_cast<std::size_t>(j));
      // A seam hop moves one particle between -L and L.
      const bool seam = (pi.first == -4 && pj.second == 4) || (pi.second == 4 && pj.first == -4);
      EXPECT_TRUE(seam) << i << "," << j;
      ++seam_entries;
    }
  }
  EXPECT_GT(seam_entries, 0);
}

// One-site translation (with the fermionic reordering sign) commutes with H.
TEST(TwoParticleHamiltonian, TranslationInvariance) {
  for (auto s : {Statistics::Bose, Statistics::Fermi, Statistics::HardCoreBose}) {
    const auto spec = make_spec(3, s, 1.0, 0.8);
    const auto h = build_two_particle_hamiltonian(spec);
    const auto dim = h.dim();
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const auto [a, b] = h.basis->pair(static_cast<std::size_t>(i));
      const auto slot = h.basis->locate(spec.wrap(a + 1), spec.wrap(b + 1));
      t(static_cast<Eigen::Index>(slot->index), i) = slot->sign;
    }
    EXPECT_EQ((t * h.entries * t.transpose() - h.entries).cwiseAbs().maxCoeff(), 0.0) << to_string(s);
  }
}

TEST(SingleParticleHamiltonian, ThreeSiteRing) {
  const Eigen::MatrixXd h = build_single_particle_hamiltonian(make_spec(1, Statistics::Bose, 0.5));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(h(i, j), i == j ? 0.0 : -0.5);
  }
}

TEST(SingleParticleHamiltonian, RowSums) {
  const Eigen::MatrixXd h = build_single_particle_hamiltonian(make_spec(10, Statistics::Bose, 1.5));
  for (Eigen::Index i = 0; i < h.rows(); ++i) EXPECT_EQ(h.row(i).sum(), -3.0);
}

TEST(SingleParticleHamiltonian, PlaneWaveDispersion) {
  const auto spec = make_spec(6, Statistics::Bose, 1.3);
  const auto dec = decompose(build_single_particle_hamiltonian(spec));
  std::vector<double> expect;
  const MomentumGrid grid(spec);
  for (double p : grid.values()) expect.push_back(-2.0 * spec.J * std::cos(p));
  std::sort(expect.begin(), expect.end());
  for (std::size_t k = 0; k < expect.size(); ++k) {
    EXPECT_NEAR(dec.eigenvalues(static_cast<Eigen::Index>(k)), expect[k], 1e-12);
  }
}

TEST(TwoParticleHamiltonian, RejectsMismatchedBasis) {
  const auto basis = build_basis(make_spec(2, Statistics::Fermi));
  EXPECT_THROW(build_two_particle_hamiltonian(make_spec(2, Statistics::Bose), basis), ValidationError);
  EXPECT_THROW(build_two_particle_hamiltonian(make_spec(3, Statistics::Fermi), basis), ValidationError);
}

}  // namespace
}  // namespace qwalk2
