#include "qwalk2/waveguide.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "qwalk2/errors.hpp"
#include "qwalk2/evolution.hpp"
#include "qwalk2/hamiltonian.hpp"
#include "qwalk2/io.hpp"

namespace qwalk2 {

std::optional<std::size_t> WaveguideLayout::find(Site l1, Site l2) const {
  const WaveguideSite key{l1, l2, 0.0};
  const auto it = std::lower_bound(sites.begin(), sites.end(), key, [](const auto& a, const auto& b) {
    return std::pair(a.l1, a.l2) < std::pair(b.l1, b.l2);
  });
  if (it == sites.end() || it->l1 != l1 || it->l2 != l2) return std::nullopt;
  return static_cast<std::size_t>(it - sites.begin());
}

Eigen::MatrixXd WaveguideLayout::generator() const {
  const auto n = static_cast<Eigen::Index>(sites.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = sites[static_cast<std::size_t>(i)].detuning;
  for (const auto& c : couplings) {
    const auto a = static_cast<Eigen::Index>(c.a);
    const auto b = static_cast<Eigen::Index>(c.b);
    h(a, b) -= c.strength;
    h(b, a) -= c.strength;
  }
  return h;
}

Eigen::SparseMatrix<double> WaveguideLayout::sparse_generator() const {
  const auto n = static_cast<Eigen::Index>(sites.size());
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(sites.size() + 2 * couplings.size());
  for (Eigen::Index i = 0; i < n; ++i) entries.emplace_back(i, i, sites[static_cast<std::size_t>(i)].detuning);
  for (const auto& c : couplings) {
    const auto a = static_cast<Eigen::Index>(c.a);
    const auto b = static_cast<Eigen::Index>(c.b);
    entries.emplace_back(a, b, -c.strength);
    entries.emplace_back(b, a, -c.strength);
  }
  Eigen::SparseMatrix<double> h(n, n);
  h.setFromTriplets(entries.begin(), entries.end());
  return h;
}

bool WaveguideLayout::operator==(const WaveguideLayout& other) const {
  return spec.L == other.spec.L && spec.J == other.spec.J && spec.V == other.spec.V &&
         spec.statistics == other.spec.statistics && boundary == other.boundary &&
         include_diagonal == other.include_diagonal && sites == other.sites &&
         couplings == other.couplings;
}

WaveguideLayout build_layout(const LatticeSpec& spec, Boundary boundary) {
  spec.validate();
  WaveguideLayout layout;
  layout.spec = spec;
  layout.boundary = boundary;
  layout.include_diagonal = spec.statistics == Statistics::Bose;
  const bool periodic = boundary == Boundary::Periodic;

  for (Site l1 = -spec.L; l1 <= spec.L; ++l1) {
    for (Site l2 = -spec.L; l2 <= spec.L; ++l2) {
      if (l1 == l2 && !layout.include_diagonal) continue;
      const int dist = periodic ? spec.ring_distance(l1, l2) : std::abs(l1 - l2);
      layout.sites.push_back({l1, l2, dist == 1 ? spec.V : 0.0});
    }
  }

  // Forward neighbours along each axis enumerate every grid edge once.
  for (std::size_t i = 0; i < layout.sites.size(); ++i) {
    const auto& s = layout.sites[i];
    for (const auto& [d1, d2] : {std::pair{1, 0}, std::pair{0, 1}}) {
      int n1 = s.l1 + d1;
      int n2 = s.l2 + d2;
      if (periodic) {
        n1 = spec.wrap(n1);
        n2 = spec.wrap(n2);
      } else if (!spec.contains(n1) || !spec.contains(n2)) {
        continue;
      }
      if (const auto j = layout.find(n1, n2)) {
        layout.couplings.push_back({std::min(i, *j), std::max(i, *j), spec.J});
      }
    }
  }
  std::sort(layout.couplings.begin(), layout.couplings.end(),
            [](const Coupling& x, const Coupling& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
  return layout;
}

FieldState field_from_grid(const WaveguideLayout& layout, const Eigen::MatrixXcd& grid, double z) {
  const int L = layout.spec.L;
  const int n = layout.spec.sites();
  if (grid.rows() != n || grid.cols() != n) {
    throw ValidationError("field", "grid must be L_t x L_t");
  }
  FieldState field{Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(layout.size())), z};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto idx = layout.find(i - L, j - L);
      if (idx) {
        field.E(static_cast<Eigen::Index>(*idx)) = grid(i, j);
      } else if (grid(i, j) != 0.0) {
        throw UnsupportedSite("launch field has weight on absent guide (" + std::to_string(i - L) +
                              ", " + std::to_string(j - L) + ")");
      }
    }
  }
  return field;
}

Eigen::MatrixXcd field_to_grid(const WaveguideLayout& layout, const FieldState& field) {
  const int L = layout.spec.L;
  const int n = layout.spec.sites();
  Eigen::MatrixXcd grid = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t k = 0; k < layout.size(); ++k) {
    grid(layout.sites[k].l1 + L, layout.sites[k].l2 + L) = field.E(static_cast<Eigen::Index>(k));
  }
  return grid;
}

std::vector<FieldState> propagate_field(const WaveguideLayout& layout, const FieldState& e0,
                                        std::span<const double> z_points) {
  if (static_cast<std::size_t>(e0.E.size()) != layout.size()) {
    throw UnsupportedSite("field has " + std::to_string(e0.E.size()) + " amplitudes for " +
                          std::to_string(layout.size()) + " guides");
  }
  const auto dec = decompose(layout.generator());
  auto vectors = propagate_all(dec, e0.E, z_points);
  std::vector<FieldState> out;
  out.reserve(z_points.size());
  for (std::size_t k = 0; k < z_points.size(); ++k) out.push_back({std::move(vectors[k]), e0.z + z_points[k]});
  return out;
}

std::vector<FieldState> propagate_field_serial(const WaveguideLayout& layout, const FieldState& e0,
                                               std::span<const double> z_points) {
  if (static_cast<std::size_t>(e0.E.size()) != layout.size()) {
    throw UnsupportedSite("field size does not match the layout");
  }
  const auto dec = decompose(layout.generator());
  std::vector<FieldState> out;
  out.reserve(z_points.size());
  for (const double z : z_points) out.push_back({dec.propagate(e0.E, z), e0.z + z});
  return out;
}

namespace {

Eigen::MatrixXcd launch_grid(const LatticeSpec& spec, SitePair init) {
  const auto basis = build_basis(spec);
  return pair_amplitude(initial_pair_state(basis, init.first, init.second)).phi / std::numbers::sqrt2;
}

}  // namespace

EquivalenceReport quantum_equivalence_check(const LatticeSpec& spec, std::span<const double> times,
                                            SitePair init) {
  const auto h = build_two_particle_hamiltonian(spec);
  const auto psi0 = initial_pair_state(h.basis, init.first, init.second);
  const auto states = evolve(decompose(h), psi0, times);

  const auto layout = build_layout(spec, Boundary::Periodic);
  const FieldState e0 = field_from_grid(layout, pair_amplitude(psi0).phi / std::numbers::sqrt2);
  const auto fields = propagate_field(layout, e0, times);

  EquivalenceReport report;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const Eigen::MatrixXcd phi = pair_amplitude(states[k]).phi;
    const Eigen::MatrixXcd e = field_to_grid(layout, fields[k]);
    const double dev = (std::numbers::sqrt2 * e - phi).cwiseAbs().maxCoeff();
    report.times.push_back(times[k]);
    report.deviation.push_back(dev);
    report.max_deviation = std::max(report.max_deviation, dev);
  }
  return report;
}

double boundary_deviation(const LatticeSpec& spec, std::span<const double> z_points, SitePair init) {
  const auto periodic = build_layout(spec, Boundary::Periodic);
  const auto open = build_layout(spec, Boundary::Open);
  const Eigen::MatrixXcd grid = launch_grid(spec, init);
  const FieldState ep = field_from_grid(periodic, grid);
  const FieldState eo = field_from_grid(open, grid);
  const Eigen::SparseMatrix<double> hp = periodic.sparse_generator();
  const Eigen::SparseMatrix<double> ho = open.sparse_generator();
  std::vector<double> dev(z_points.size(), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < z_points.size(); ++k) {
    const FieldState fp{chebyshev_propagate(hp, ep.E, z_points[k]), z_points[k]};
    const FieldState fo{chebyshev_propagate(ho, eo.E, z_points[k]), z_points[k]};
    dev[k] = (field_to_grid(periodic, fp) - field_to_grid(open, fo)).cwiseAbs().maxCoeff();
  }
  return dev.empty() ? 0.0 : *std::max_element(dev.begin(), dev.end());
}

std::string format_layout(const WaveguideLayout& layout) {
  std::string out = "qwalk2-layout v1 L=" + std::to_string(layout.spec.L) +
                    " statistics=" + std::string(to_string(layout.spec.statistics)) +
                    " boundary=" + std::string(to_string(layout.boundary)) +
                    " J=" + format_double(layout.spec.J) + " V=" + format_double(layout.spec.V) + "\n";
  for (const auto& s : layout.sites) {
    out += "S " + std::to_string(s.l1) + " " + std::to_string(s.l2) + " " + format_double(s.detuning) + "\n";
  }
  for (const auto& c : layout.couplings) {
    const auto& a = layout.sites[c.a];
    const auto& b = layout.sites[c.b];
    out += "C " + std::to_string(a.l1) + " " + std::to_string(a.l2) + " " + std::to_string(b.l1) + " " +
           std::to_string(b.l2) + " " + format_double(c.strength) + "\n";
  }
  return out;
}

namespace {

template <typename T>
T parse_number(std::string_view token, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "bad number '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_words(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ') ++pos;
    if (pos > start) words.push_back(text.substr(start, pos - start));
  }
  return words;
}

}  // namespace

WaveguideLayout parse_layout(std::string_view text) {
  WaveguideLayout layout;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    const auto words = split_words(line);
    if (!have_header) {
      if (words.size() != 7 || words[0] != "qwalk2-layout" || words[1] != "v1") {
        throw ParseError(line_no, "expected 'qwalk2-layout v1' header");
      }
      std::map<std::string_view, std::string_view> kv;
      for (std::size_t i = 2; i < words.size(); ++i) {
        const auto eq = words[i].find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "malformed header field");
        kv[words[i].substr(0, eq)] = words[i].substr(eq + 1);
      }
      try {
        layout.spec.L = parse_number<int>(kv.at("L"), line_no);
        layout.spec.statistics = parse_statistics(kv.at("statistics"));
        layout.boundary = parse_boundary(kv.at("boundary"));
        layout.spec.J = parse_number<double>(kv.at("J"), line_no);
        layout.spec.V = parse_number<double>(kv.at("V"), line_no);
      } catch (const std::out_of_range&) {
        throw ParseError(line_no, "header is missing a field");
      } catch (const ValidationError& e) {
        throw ParseError(line_no, e.what());
      }
      layout.include_diagonal = layout.spec.statistics == Statistics::Bose;
      have_header = true;
    } else if (words[0] == "S" && words.size() == 4) {
      if (!layout.couplings.empty()) throw ParseError(line_no, "site record after coupling records");
      layout.sites.push_back({parse_number<int>(words[1], line_no), parse_number<int>(words[2], line_no),
                              parse_number<double>(words[3], line_no)});
    } else if (words[0] == "C" && words.size() == 6) {
      const auto a = layout.find(parse_number<int>(words[1], line_no), parse_number<int>(words[2], line_no));
      const auto b = layout.find(parse_number<int>(words[3], line_no), parse_number<int>(words[4], line_no));
      if (!a || !b) throw ParseError(line_no, "coupling references an unknown site");
      layout.couplings.push_back({*a, *b, parse_number<double>(words[5], line_no)});
    } else {
      throw ParseError(line_no, "unrecognised record");
    }
  }
  if (!have_header) throw ParseError(line_no, "empty layout file");
  return layout;
}

void export_layout(const WaveguideLayout& layout, const std::filesystem::path& path) {
  write_file(path, format_layout(layout));
}

WaveguideLayout import_layout(const std::filesystem::path& path) { return parse_layout(read_file(path)); }

}  // namespace qwalk2
