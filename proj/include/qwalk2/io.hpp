#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qwalk2/observables.hpp"

namespace qwalk2 {

// "%.17g": round-trips every double and is byte-stable.
std::string format_double(double value);

// CSV with site (or alpha) labels -L..L in the first row and column.
std::string format_correlation_csv(const CorrelationMatrix& gamma);

// Plain numeric CSV without labels (debug dump of H^(2)).
std::string format_matrix_csv(const Eigen::MatrixXd& m);

// Binary P5 greyscale, maxval 255, pixel = round(255 * v / max); row q = -L
// first. `max_value` receives the normalising maximum.
std::string format_pgm(const Eigen::MatrixXd& values, double* max_value = nullptr);

std::string sha256_hex(std::string_view bytes);

// Throws IoFailure.
void write_file(const std::filesystem::path& path, std::string_view bytes);
std::string read_file(const std::filesystem::path& path);

}  // namespace qwalk2
