#pragma once

#include <filesystem>
#include <span>

#include <Eigen/Dense>

namespace framekit {

/// Writes a complex matrix as CSV: header row with column indices, one row per
/// matrix row labelled by its index, each complex cell quoted as "re,im".
void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXcd& m);

/// One quoted "re,im" cell per line, with an index column.
void write_vector_csv(const std::filesystem::path& path, const Eigen::VectorXcd& v);

/// Plot-ready two-column CSV: index,value.
void write_values_csv(const std::filesystem::path& path, std::span<const double> values);

} // namespace framekit
