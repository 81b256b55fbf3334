#include "qwalk2/evolution.hpp"

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

#include "qwalk2/errors.hpp"

namespace qwalk2 {

namespace {

using cd = std::complex<double>;

Eigen::VectorXcd propagate_from_modes(const SpectralDecomposition& dec, const Eigen::VectorXcd& modes,
                                      double t) {
  // Q is real: apply it to the real and imaginary parts separately.
  Eigen::VectorXcd phased(modes.size());
  for (Eigen::Index k = 0; k < modes.size(); ++k) {
    phased(k) = modes(k) * std::polar(1.0, -dec.eigenvalues(k) * t);
  }
  const Eigen::VectorXd re = dec.eigenvectors * phased.real();
  const Eigen::VectorXd im = dec.eigenvectors * phased.imag();
  Eigen::VectorXcd out(re.size());
  out.real() = re;
  out.imag() = im;
  return out;
}

Eigen::VectorXcd to_modes(const SpectralDecomposition& dec, const Eigen::VectorXcd& v) {
  Eigen::VectorXcd modes(v.size());
  modes.real() = dec.eigenvectors.transpose() * v.real();
  modes.imag() = dec.eigenvectors.transpose() * v.imag();
  return modes;
}

}  // namespace

Eigen::VectorXcd SpectralDecomposition::propagate(const Eigen::VectorXcd& v, double t) const {
  if (t == 0.0) return v;
  return propagate_from_modes(*this, to_modes(*this, v), t);
}

SpectralDecomposition decompose(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() != symmetric.cols()) {
    throw ValidationError("matrix", "must be square");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("symmetric eigensolver failed (Eigen info code " +
                             std::to_string(static_cast<int>(solver.info())) + ")");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

SpectralDecomposition decompose(const HamiltonianMatrix& h) { return decompose(h.entries); }

std::vector<Eigen::VectorXcd> propagate_all(const SpectralDecomposition& dec,
                                            const Eigen::VectorXcd& v0,
                                            std::span<const double> times) {
  const Eigen::VectorXcd modes = to_modes(dec, v0);
  std::vector<Eigen::VectorXcd> out(times.size());
  const auto n = static_cast<std::ptrdiff_t>(times.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const double t = times[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k)] = t == 0.0 ? v0 : propagate_from_modes(dec, modes, t);
  }
  return out;
}

std::vector<TwoParticleState> evolve(const SpectralDecomposition& dec, const TwoParticleState& psi0,
                                     std::span<const double> times) {
  auto vectors = propagate_all(dec, psi0.amplitudes, times);
  std::vector<TwoParticleState> out;
  out.reserve(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    out.push_back({psi0.basis, std::move(vectors[k]), psi0.time + times[k]});
  }
  return out;
}

std::vector<TwoParticleState> evolve_serial(const SpectralDecomposition& dec,
                                            const TwoParticleState& psi0,
                                            std::span<const double> times) {
  std::vector<TwoParticleState> out;
  out.reserve(times.size());
  for (const double t : times) {
    out.push_back({psi0.basis, dec.propagate(psi0.amplitudes, t), psi0.time + t});
  }
  return out;
}

Eigen::MatrixXcd single_particle_propagator(const LatticeSpec& spec, double t) {
  spec.validate();
  const MomentumGrid grid(spec);
  const int n = spec.sites();
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
  for (int q = 0; q < n; ++q) {
    for (int l = 0; l < n; ++l) {
      cd sum = 0.0;
      for (const double p : grid.values()) {
        sum += std::polar(1.0, p * (q - l) + 2.0 * spec.J * std::cos(p) * t);
      }
      g(q, l) = sum / static_cast<double>(n);
    }
  }
  return g;
}

Eigen::MatrixXcd single_particle_propagator_spectral(const LatticeSpec& spec, double t) {
  const auto dec = decompose(build_single_particle_hamiltonian(spec));
  Eigen::VectorXcd phases(dec.dim());
  for (Eigen::Index k = 0; k < dec.dim(); ++k) phases(k) = std::polar(1.0, -dec.eigenvalues(k) * t);
  const Eigen::MatrixXcd q = dec.eigenvectors.cast<cd>();
  return q * phases.asDiagonal() * q.transpose();
}

Eigen::VectorXcd chebyshev_propagate(const Eigen::SparseMatrix<double>& h, const Eigen::VectorXcd& v, double t) {
  if (h.rows() != h.cols() || h.rows() != v.size()) throw ValidationError("h", "dimension mismatch");
  if (t == 0.0 || v.size() == 0) return v;
  double lo = 0.0;
  double hi = 0.0;
  for (Eigen::Index j = 0; j < h.outerSize(); ++j) {
    double diag = 0.0;
    double radius = 0.0;
    for (Eigen::SparseMatrix<double>::InnerIterator it(h, j); it; ++it) {
      if (it.row() == j) {
        diag += it.value();
      } else {
        radius += std::abs(it.value());
      }
    }
    lo = j == 0 ? diag - radius : std::min(lo, diag - radius);
    hi = j == 0 ? diag + radius : std::max(hi, diag + radius);
  }
  const double half = std::max(0.5 * (hi - lo), 1e-300) * (1.0 + 1e-12);
  const double mid = 0.5 * (hi + lo);
  const double x = half * t;
  Eigen::SparseMatrix<double> shift(h.rows(), h.cols());
  shift.setIdentity();
  const Eigen::SparseMatrix<cd> scaled = ((h - mid * shift) / half).cast<cd>();

  Eigen::VectorXcd prev = v;
  Eigen::VectorXcd curr = scaled * v;
  Eigen::VectorXcd sum = std::cyl_bessel_j(0.0, std::abs(x)) * prev;
  const cd minus_i(0.0, t > 0.0 ? -1.0 : 1.0);
  cd phase = minus_i;
  for (int k = 1;; ++k) {
    const double c = std::cyl_bessel_j(static_cast<double>(k), std::abs(x));
    sum += 2.0 * c * phase * curr;
    if (k > std::abs(x) && std::abs(c) < 1e-16) break;
    Eigen::VectorXcd next = 2.0 * (scaled * curr) - prev;
    prev = std::move(curr);
    curr = std::move(next);
    phase *= minus_i;
  }
  return std::polar(1.0, -mid * t) * sum;
}

std::vector<double> uniform_times(double t_max, int n) {
  if (n < 2) throw ValidationError("nt", "need at least 2 time points");
  std::vector<double> times(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) times[static_cast<std::size_t>(k)] = t_max * k / (n - 1);
  return times;
}

}  // namespace qwalk2
