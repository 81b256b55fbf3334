#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qwalk2 {

enum class Statistics { Bose, Fermi, HardCoreBose };
enum class Boundary { Periodic, Open };

std::string_view to_string(Statistics s);
std::string_view to_string(Boundary b);
// Accepts the CLI spellings "bose", "fermi", "hcb".
Statistics parse_statistics(std::string_view text);
Boundary parse_boundary(std::string_view text);

// Lattice sites carry their physical label -L..L; arrays use l + L.
using Site = int;

struct SitePair {
  Site first = 0;
  Site second = 0;
  auto operator<=>(const SitePair&) const = default;
};

// Ring of 2L+1 sites with hopping J and nearest-neighbour interaction V.
struct LatticeSpec {
  int L = 10;
  double J = 1.0;
  double V = 0.0;
  Statistics statistics = Statistics::Bose;
  Boundary boundary = Boundary::Periodic;

  int sites() const noexcept { return 2 * L + 1; }
  int offset(Site l) const noexcept { return l + L; }
  Site site_at(int offset) const noexcept { return offset - L; }
  bool contains(Site l) const noexcept { return l >= -L && l <= L; }
  // Maps any integer onto -L..L modulo the ring length.
  Site wrap(int l) const noexcept;
  // Distance along the ring.
  int ring_distance(Site a, Site b) const noexcept;
  bool ring_neighbours(Site a, Site b) const noexcept { return ring_distance(a, b) == 1; }

  // Throws ValidationError naming the field that breaks an invariant.
  void validate() const;
};

// Quasi-momenta p_alpha = 2*pi*alpha / L_t for alpha = -L..L.
class MomentumGrid {
 public:
  explicit MomentumGrid(const LatticeSpec& spec);

  int L() const noexcept { return L_; }
  std::size_t size() const noexcept { return p_.size(); }
  double operator()(int alpha) const { return p_[static_cast<std::size_t>(alpha + L_)]; }
  const std::vector<double>& values() const noexcept { return p_; }

 private:
  int L_;
  std::vector<double> p_;
};

// Basis element for an ordered operator product a†_a a†_b|0>, together with
// the exchange sign picked up when reordering into canonical order.
struct BasisSlot {
  std::size_t index;
  double sign;
};

// Bijection between canonically ordered site pairs and state-vector indices.
// Bose pairs satisfy l1 <= l2, Fermi and hard-core pairs l1 < l2; pairs are
// linearised lexicographically.
class BasisMap {
 public:
  static BasisMap build(const LatticeSpec& spec);

  Statistics statistics() const noexcept { return statistics_; }
  int L() const noexcept { return L_; }
  int sites() const noexcept { return 2 * L_ + 1; }
  std::size_t dim() const noexcept { return pairs_.size(); }
  const std::vector<SitePair>& pairs() const noexcept { return pairs_; }
  const SitePair& pair(std::size_t i) const { return pairs_.at(i); }

  // Index of a canonically ordered pair; throws OutOfRange for anything else.
  std::size_t index_of(Site l1, Site l2) const;
  std::size_t index_of(SitePair p) const { return index_of(p.first, p.second); }

  // Basis element and exchange sign for a†_a a†_b|0> with the sites in
  // either order. Empty when the product vanishes (a == b for Fermi/HCB).
  // Throws OutOfRange for sites outside the lattice.
  std::optional<BasisSlot> locate(Site a, Site b) const;

 private:
  BasisMap(Statistics s, int L);

  Statistics statistics_;
  int L_;
  std::vector<SitePair> pairs_;
  std::vector<std::ptrdiff_t> lookup_;  // (l1+L)*L_t + (l2+L) -> index or -1
};

std::shared_ptr<const BasisMap> build_basis(const LatticeSpec& spec);

// Complex amplitudes C_{l1,l2} over a two-particle basis at time `time`
// (units of 1/J when J = 1).
struct TwoParticleState {
  std::shared_ptr<const BasisMap> basis;
  Eigen::VectorXcd amplitudes;
  double time = 0.0;

  double norm() const { return amplitudes.norm(); }
  std::complex<double> amplitude(Site l1, Site l2) const {
    return amplitudes(static_cast<Eigen::Index>(basis->index_of(l1, l2)));
  }
};

// The normalised state a†_{l1} a†_{l2}|0> at t = 0. For fermions the
// exchange sign is kept, so (1, 0) gives amplitude -1 on pair (0, 1).
TwoParticleState initial_pair_state(std::shared_ptr<const BasisMap> basis, Site l1, Site l2);

}  // namespace qwalk2
