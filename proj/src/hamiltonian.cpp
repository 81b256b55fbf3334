#include "qwalk2/hamiltonian.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "qwalk2/errors.hpp"

namespace qwalk2 {

HamiltonianMatrix build_two_particle_hamiltonian(const LatticeSpec& spec,
                                                 std::shared_ptr<const BasisMap> basis) {
  spec.validate();
  if (basis->statistics() != spec.statistics || basis->L() != spec.L) {
    throw ValidationError("basis", "does not match the lattice specification");
  }
  const auto dim = static_cast<Eigen::Index>(basis->dim());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const bool bose = spec.statistics == Statistics::Bose;

  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto [a, b] = basis->pair(static_cast<std::size_t>(i));
    if (spec.ring_neighbours(a, b)) h(i, i) += spec.V;

    const std::array<Site, 2> slots{a, b};
    // A doublon has a single movable occupation number; hopping from slot 1
    // would double count it.
    const int n_slots = (a == b) ? 1 : 2;
    for (int s = 0; s < n_slots; ++s) {
      const Site src = slots[s];
      const Site other = slots[1 - s];
      for (const int step : {-1, +1}) {
        const Site dst = spec.wrap(src + step);
        // Slot order is preserved by a†_dst a_src, so the moved particle
        // stays in slot s; locate() supplies the reordering sign.
        const Site x = s == 0 ? dst : other;
        const Site y = s == 0 ? other : dst;
        const auto slot = basis->locate(x, y);
        if (!slot) continue;  // Pauli or hard-core exclusion
        double amp = -spec.J * slot->sign;
        if (bose) {
          const int n_src = (a == b) ? 2 : 1;
          const int n_dst = (dst == other) ? 1 : 0;
          if (n_src == 2 || n_dst == 1) amp *= std::numbers::sqrt2;
        }
        h(static_cast<Eigen::Index>(slot->index), i) += amp;
      }
    }
  }
  return {spec, std::move(basis), std::move(h)};
}

HamiltonianMatrix build_two_particle_hamiltonian(const LatticeSpec& spec) {
  return build_two_particle_hamiltonian(spec, build_basis(spec));
}

Eigen::MatrixXd build_single_particle_hamiltonian(const LatticeSpec& spec) {
  spec.validate();
  const int n = spec.sites();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int right = (i + 1) % n;
    h(i, right) = -spec.J;
    h(right, i) = -spec.J;
  }
  return h;
}

double energy(const HamiltonianMatrix& h, const TwoParticleState& state) {
  const Eigen::VectorXcd& c = state.amplitudes;
  const Eigen::VectorXcd hc = h.entries.cast<std::complex<double>>() * c;
  return c.dot(hc).real();
}

}  // namespace qwalk2
