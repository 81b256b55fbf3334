#include "qwalk2/observables.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qwalk2/errors.hpp"

namespace qwalk2 {

namespace {

using cd = std::complex<double>;

// F(alpha, l) = exp(i p_alpha l); the product alpha*l is reduced modulo L_t
// before scaling so the phase stays exact for large arguments.
Eigen::MatrixXcd fourier_matrix(int L) {
  const int n = 2 * L + 1;
  Eigen::MatrixXcd f(n, n);
  for (int a = -L; a <= L; ++a) {
    for (int l = -L; l <= L; ++l) {
      int k = (a * l) % n;
      if (k < 0) k += n;
      f(a + L, l + L) = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    }
  }
  return f;
}

CorrelationMatrix squared_moduli(const Eigen::MatrixXcd& amp, Space space, Statistics s, double time,
                                 int L) {
  return {space, s, time, L, amp.cwiseAbs2()};
}

}  // namespace

PairAmplitude pair_amplitude(const TwoParticleState& state) {
  const BasisMap& basis = *state.basis;
  const int L = basis.L();
  const int n = basis.sites();
  Eigen::MatrixXcd phi = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const auto [a, b] = basis.pair(i);
    const cd c = state.amplitudes(static_cast<Eigen::Index>(i));
    const int ia = a + L;
    const int ib = b + L;
    switch (basis.statistics()) {
      case Statistics::Bose:
        if (a == b) {
          phi(ia, ia) = std::numbers::sqrt2 * c;
        } else {
          phi(ia, ib) = c;
          phi(ib, ia) = c;
        }
        break;
      case Statistics::Fermi:
        // <0|a_b a_a a†_a a†_b|0> = +1, so the reversed index carries C.
        phi(ib, ia) = c;
        phi(ia, ib) = -c;
        break;
      case Statistics::HardCoreBose:
        phi(ia, ib) = c;
        phi(ib, ia) = c;
        break;
    }
  }
  return {basis.statistics(), state.time, L, std::move(phi)};
}

CorrelationMatrix position_correlation(const PairAmplitude& phi) {
  return squared_moduli(phi.phi, Space::Position, phi.statistics, phi.time, phi.L);
}

CorrelationMatrix position_correlation(const TwoParticleState& state) {
  return position_correlation(pair_amplitude(state));
}

Eigen::MatrixXcd momentum_pair_amplitude(const PairAmplitude& phi) {
  const int n = 2 * phi.L + 1;
  const Eigen::MatrixXcd f = fourier_matrix(phi.L);
  // Y = Phi F^T, then Phi~ = F Y / L_t; each row is independent.
  Eigen::MatrixXcd y(n, n);
#pragma omp parallel for schedule(static)
  for (int l = 0; l < n; ++l) y.row(l) = phi.phi.row(l) * f.transpose();
  Eigen::MatrixXcd out(n, n);
#pragma omp parallel for schedule(static)
  for (int a = 0; a < n; ++a) out.row(a) = f.row(a) * y / static_cast<double>(n);
  return out;
}

Eigen::MatrixXcd momentum_pair_amplitude_serial(const PairAmplitude& phi) {
  const int L = phi.L;
  const int n = 2 * L + 1;
  const double scale = 2.0 * std::numbers::pi / n;
  Eigen::MatrixXcd out(n, n);
  for (int a = -L; a <= L; ++a) {
    for (int b = -L; b <= L; ++b) {
      cd sum = 0.0;
      for (int l = -L; l <= L; ++l) {
        for (int m = -L; m <= L; ++m) {
          sum += std::polar(1.0, scale * (a * l + b * m)) * phi.phi(l + L, m + L);
        }
      }
      out(a + L, b + L) = sum / static_cast<double>(n);
    }
  }
  return out;
}

CorrelationMatrix momentum_correlation(const PairAmplitude& phi) {
  return squared_moduli(momentum_pair_amplitude(phi), Space::Momentum, phi.statistics, phi.time,
                        phi.L);
}

CorrelationMatrix momentum_correlation_serial(const PairAmplitude& phi) {
  return squared_moduli(momentum_pair_amplitude_serial(phi), Space::Momentum, phi.statistics,
                        phi.time, phi.L);
}

CorrelationMatrix momentum_correlation(const TwoParticleState& state) {
  return momentum_correlation(pair_amplitude(state));
}

Eigen::VectorXd density(const TwoParticleState& state) {
  const BasisMap& basis = *state.basis;
  const int L = basis.L();
  Eigen::VectorXd n = Eigen::VectorXd::Zero(basis.sites());
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const auto [a, b] = basis.pair(i);
    const double w = std::norm(state.amplitudes(static_cast<Eigen::Index>(i)));
    n(a + L) += w;
    n(b + L) += w;
  }
  return n;
}

Eigen::VectorXd minor_diagonal(const TwoParticleState& state) {
  const PairAmplitude phi = pair_amplitude(state);
  const int L = phi.L;
  const int n = 2 * L + 1;
  Eigen::VectorXd out(n);
  for (int q = 0; q < n; ++q) out(q) = std::norm(phi.phi(q, (q + 1) % n));
  return out;
}

MinorDiagonalTrace minor_diagonal_trace(std::span<const TwoParticleState> states) {
  MinorDiagonalTrace trace;
  if (states.empty()) return trace;
  trace.L = states.front().basis->L();
  for (const auto& s : states) trace.push(s.time, minor_diagonal(s));
  return trace;
}

double half_width(const Eigen::VectorXd& minor, int L, double fraction, Site center) {
  const int n = 2 * L + 1;
  const double total = minor.sum();
  if (!(total > 0.0)) return 0.0;
  const double target = fraction * total;
  auto at = [&](int site) {
    int k = (site + L) % n;
    if (k < 0) k += n;
    return minor(k);
  };
  double cum = at(center);
  if (cum >= target) return 0.5 * target / cum;
  for (int k = 1; k <= L; ++k) {
    const double shell = at(center + k) + at(center - k);
    if (cum + shell >= target) return (k - 0.5) + (target - cum) / shell;
    cum += shell;
  }
  return L + 0.5;
}

FrontSpeedFit front_speed(const MinorDiagonalTrace& trace, const FrontSpeedOptions& options) {
  if (trace.times.size() != trace.rows.size()) {
    throw GridMismatch("minor-diagonal trace has mismatched time and row counts");
  }
  FrontSpeedFit fit;
  fit.half_widths.reserve(trace.rows.size());
  for (const auto& row : trace.rows) {
    fit.half_widths.push_back(half_width(row, trace.L, options.mass_fraction, options.center));
  }
  const auto& h = fit.half_widths;
  const double until = options.fit_until.value_or(trace.L - 2.0);

  std::size_t first = 0;
  while (first < h.size() && h[first] < options.fit_from) ++first;
  std::size_t last = first;
  while (last < h.size() && h[last] <= until) ++last;

  const std::size_t count = last - first;
  if (count < options.min_samples) {
    throw InsufficientSamples("front-speed window holds " + std::to_string(count) +
                              " samples, need " + std::to_string(options.min_samples));
  }
  for (std::size_t k = first; k < last; ++k) {
    if (h[k] >= trace.L - 1.0) {
      throw FrontHitBoundary("front reached |q| = L - 1 at t = " + std::to_string(trace.times[k]));
    }
  }

  double st = 0.0, sh = 0.0;
  for (std::size_t k = first; k < last; ++k) {
    st += trace.times[k];
    sh += h[k];
  }
  const double mt = st / count;
  const double mh = sh / count;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = first; k < last; ++k) {
    const double dt = trace.times[k] - mt;
    sxy += dt * (h[k] - mh);
    sxx += dt * dt;
  }
  if (!(sxx > 0.0)) throw InsufficientSamples("front-speed window spans zero time");
  fit.speed = sxy / sxx;
  fit.intercept = mh - fit.speed * mt;
  fit.first = first;
  fit.last = last;
  return fit;
}

}  // namespace qwalk2
