#include "qwalk2/free_walk.hpp"

#include <cmath>
#include <complex>

#include "qwalk2/errors.hpp"
#include "qwalk2/evolution.hpp"

namespace qwalk2 {

namespace {

double exchange_sign(Statistics s) { return s == Statistics::Bose ? 1.0 : -1.0; }

}  // namespace

Eigen::MatrixXd free_position_correlation(const LatticeSpec& spec, SitePair init, double t) {
  if (!spec.contains(init.first) || !spec.contains(init.second)) {
    throw OutOfRange("initial sites outside the lattice");
  }
  const Eigen::MatrixXcd g = single_particle_propagator(spec, t);
  const int n = spec.sites();
  const int i1 = spec.offset(init.first);
  const int i2 = spec.offset(init.second);
  const double sign = exchange_sign(spec.statistics);
  Eigen::MatrixXd gamma(n, n);
  for (int q = 0; q < n; ++q) {
    for (int r = 0; r < n; ++r) {
      gamma(q, r) = std::norm(g(q, i1) * g(r, i2) + sign * g(q, i2) * g(r, i1));
    }
  }
  return gamma;
}

Eigen::MatrixXd free_momentum_correlation(const LatticeSpec& spec, SitePair init, double t) {
  if (spec.statistics == Statistics::HardCoreBose) {
    throw ValidationError("statistics", "plane-wave momentum oracle needs standard commutation relations");
  }
  const MomentumGrid grid(spec);
  const int n = spec.sites();
  Eigen::MatrixXcd amp(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double pa = grid.values()[static_cast<std::size_t>(a)];
      const double pb = grid.values()[static_cast<std::size_t>(b)];
      amp(a, b) = std::polar(1.0 / n, pa * init.first + pb * init.second +
                                          2.0 * spec.J * (std::cos(pa) + std::cos(pb)) * t);
    }
  }
  const double sign = exchange_sign(spec.statistics);
  Eigen::MatrixXd gamma(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) gamma(a, b) = std::norm(amp(a, b) + sign * amp(b, a));
  }
  return gamma;
}

}  // namespace qwalk2
