#include "qwalk2/lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwalk2/errors.hpp"

namespace qwalk2 {

std::string_view to_string(Statistics s) {
  switch (s) {
    case Statistics::Bose:
      return "bose";
    case Statistics::Fermi:
      return "fermi";
    case Statistics::HardCoreBose:
      return "hcb";
  }
  return "unknown";
}

std::string_view to_string(Boundary b) {
  return b == Boundary::Periodic ? "periodic" : "open";
}

Statistics parse_statistics(std::string_view text) {
  if (text == "bose") return Statistics::Bose;
  if (text == "fermi") return Statistics::Fermi;
  if (text == "hcb") return Statistics::HardCoreBose;
  throw ValidationError("statistics", "expected bose, fermi or hcb, got '" + std::string(text) + "'");
}

Boundary parse_boundary(std::string_view text) {
  if (text == "periodic") return Boundary::Periodic;
  if (text == "open") return Boundary::Open;
  throw ValidationError("boundary", "expected periodic or open, got '" + std::string(text) + "'");
}

Site LatticeSpec::wrap(int l) const noexcept {
  const int n = sites();
  int k = (l + L) % n;
  if (k < 0) k += n;
  return k - L;
}

int LatticeSpec::ring_distance(Site a, Site b) const noexcept {
  const int n = sites();
  int d = std::abs(a - b) % n;
  return std::min(d, n - d);
}

void LatticeSpec::validate() const {
  if (L < 1) throw ValidationError("L", "must be >= 1, got " + std::to_string(L));
  if (!(J > 0.0) || !std::isfinite(J)) throw ValidationError("J", "must be a finite positive number");
  if (!std::isfinite(V)) throw ValidationError("V", "must be finite");
  if (boundary != Boundary::Periodic) {
    throw ValidationError("boundary", "the two-particle lattice is periodic; open boundaries exist only for waveguides");
  }
}

MomentumGrid::MomentumGrid(const LatticeSpec& spec) : L_(spec.L) {
  const double n = spec.sites();
  p_.reserve(static_cast<std::size_t>(spec.sites()));
  for (int alpha = -L_; alpha <= L_; ++alpha) {
    p_.push_back(2.0 * std::numbers::pi * alpha / n);
  }
}

BasisMap::BasisMap(Statistics s, int L) : statistics_(s), L_(L) {}

BasisMap BasisMap::build(const LatticeSpec& spec) {
  spec.validate();
  BasisMap basis(spec.statistics, spec.L);
  const int n = spec.sites();
  const bool allow_double = spec.statistics == Statistics::Bose;
  basis.lookup_.assign(static_cast<std::size_t>(n) * n, -1);
  for (Site l1 = -spec.L; l1 <= spec.L; ++l1) {
    for (Site l2 = allow_double ? l1 : l1 + 1; l2 <= spec.L; ++l2) {
      basis.lookup_[static_cast<std::size_t>((l1 + spec.L) * n + (l2 + spec.L))] =
          static_cast<std::ptrdiff_t>(basis.pairs_.size());
      basis.pairs_.push_back({l1, l2});
    }
  }
  return basis;
}

std::size_t BasisMap::index_of(Site l1, Site l2) const {
  if (l1 < -L_ || l1 > L_ || l2 < -L_ || l2 > L_) {
    throw OutOfRange("site pair (" + std::to_string(l1) + ", " + std::to_string(l2) +
                     ") outside -" + std::to_string(L_) + ".." + std::to_string(L_));
  }
  const auto idx = lookup_[static_cast<std::size_t>((l1 + L_) * sites() + (l2 + L_))];
  if (idx < 0) {
    throw OutOfRange("site pair (" + std::to_string(l1) + ", " + std::to_string(l2) +
                     ") is not in canonical order for " + std::string(to_string(statistics_)));
  }
  return static_cast<std::size_t>(idx);
}

std::optional<BasisSlot> BasisMap::locate(Site a, Site b) const {
  if (a == b && statistics_ != Statistics::Bose) {
    if (a < -L_ || a > L_) throw OutOfRange("site " + std::to_string(a) + " outside the lattice");
    return std::nullopt;
  }
  if (a <= b) return BasisSlot{index_of(a, b), 1.0};
  const double sign = statistics_ == Statistics::Fermi ? -1.0 : 1.0;
  return BasisSlot{index_of(b, a), sign};
}

std::shared_ptr<const BasisMap> build_basis(const LatticeSpec& spec) {
  return std::make_shared<const BasisMap>(BasisMap::build(spec));
}

TwoParticleState initial_pair_state(std::shared_ptr<const BasisMap> basis, Site l1, Site l2) {
  const int L = basis->L();
  if (l1 < -L || l1 > L || l2 < -L || l2 > L) {
    throw OutOfRange("initial sites (" + std::to_string(l1) + ", " + std::to_string(l2) +
                     ") outside the lattice");
  }
  const auto slot = basis->locate(l1, l2);
  if (!slot) {
    throw DoubleOccupancyForbidden("site " + std::to_string(l1) + " cannot hold two " +
                                   std::string(to_string(basis->statistics())) + " particles");
  }
  TwoParticleState state{basis, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->dim())), 0.0};
  state.amplitudes(static_cast<Eigen::Index>(slot->index)) = slot->sign;
  return state;
}

}  // namespace qwalk2
