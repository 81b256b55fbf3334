#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "qwalk2/lattice.hpp"
#include "qwalk2/observables.hpp"

namespace qwalk2 {

// One waveguide at grid coordinate (l1, l2). A nonzero detuning marks the
// guides with a shifted refractive index (ring-neighbour coordinates).
struct WaveguideSite {
  Site l1;
  Site l2;
  double detuning;
  bool operator==(const WaveguideSite&) const = default;
};

// Evanescent coupling between sites[a] and sites[b], a < b.
struct Coupling {
  std::size_t a;
  std::size_t b;
  double strength;
  bool operator==(const Coupling&) const = default;
};

// 2D array realising
//   i dE_{l1,l2}/dz = -J (E_{l1,l2+1} + E_{l1,l2-1} + E_{l1+1,l2} + E_{l1-1,l2})
//                     + V_{l1,l2} E_{l1,l2},  V_{l1,l2} = V delta_{l1, l2 +/- 1}.
// Bose arrays keep the diagonal guides; Fermi/HCB arrays drop them.
struct WaveguideLayout {
  LatticeSpec spec;
  Boundary boundary = Boundary::Periodic;
  bool include_diagonal = true;
  std::vector<WaveguideSite> sites;   // lexicographic in (l1, l2)
  std::vector<Coupling> couplings;    // lexicographic in (a, b)

  std::size_t size() const noexcept { return sites.size(); }
  std::optional<std::size_t> find(Site l1, Site l2) const;
  // Coupled-mode generator: -strength on couplings, detuning on the diagonal.
  Eigen::MatrixXd generator() const;
  Eigen::SparseMatrix<double> sparse_generator() const;

  bool operator==(const WaveguideLayout& other) const;
};

WaveguideLayout build_layout(const LatticeSpec& spec, Boundary boundary);

struct FieldState {
  Eigen::VectorXcd E;  // indexed like WaveguideLayout::sites
  double z = 0.0;
};

// Field from an L_t x L_t grid of amplitudes indexed (l1 + L, l2 + L).
// Throws UnsupportedSite when the grid has weight on a guide the layout lacks.
FieldState field_from_grid(const WaveguideLayout& layout, const Eigen::MatrixXcd& grid,
                           double z = 0.0);
Eigen::MatrixXcd field_to_grid(const WaveguideLayout& layout, const FieldState& field);

std::vector<FieldState> propagate_field(const WaveguideLayout& layout, const FieldState& e0,
                                        std::span<const double> z_points);
std::vector<FieldState> propagate_field_serial(const WaveguideLayout& layout, const FieldState& e0,
                                               std::span<const double> z_points);

struct EquivalenceReport {
  std::vector<double> times;
  std::vector<double> deviation;  // max over sites |sqrt(2) E - Phi|
  double max_deviation = 0.0;
  double tolerance = 1e-9;
  bool pass() const { return max_deviation <= tolerance; }
};

// Runs the quantum walk from `init` and the periodic array launched with
// E0 = Phi(t = 0) / sqrt(2); compares sqrt(2) E(z = t) with Phi(t).
EquivalenceReport quantum_equivalence_check(const LatticeSpec& spec, std::span<const double> times,
                                            SitePair init = {0, 1});

// Largest |E_open - E_periodic| over sites and z for the same launch field.
double boundary_deviation(const LatticeSpec& spec, std::span<const double> z_points,
                          SitePair init = {0, 1});

// Plain-text layout format:
//   qwalk2-layout v1 L=<L> statistics=<s> boundary=<b> J=<J> V=<V>
//   S <l1> <l2> <detuning>
//   C <l1a> <l2a> <l1b> <l2b> <strength>
// Floats with 17 significant digits, LF line endings.
std::string format_layout(const WaveguideLayout& layout);
// Throws ParseError with the offending line number.
WaveguideLayout parse_layout(std::string_view text);

// Throws IoFailure.
void export_layout(const WaveguideLayout& layout, const std::filesystem::path& path);
WaveguideLayout import_layout(const std::filesystem::path& path);

}  // namespace qwalk2
