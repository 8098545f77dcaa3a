#include "framekit/export.hpp"

#include <fstream>
#include <iomanip>

#include "framekit/errors.hpp"

namespace framekit {

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write '" + path.string() + "'");
    }
    out << std::setprecision(17);
    return out;
}

void write_cell(std::ofstream& out, const std::complex<double>& z) {
    out << '"' << z.real() << ',' << z.imag() << '"';
}

} // namespace

void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXcd& m) {
    auto out = open_csv(path);
    out << "row";
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << ',' << c;
    out << '\n';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out << r;
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out << ',';
            write_cell(out, m(r, c));
        }
        out << '\n';
    }
}

void write_vector_csv(const std::filesystem::path& path, const Eigen::VectorXcd& v) {
    auto out = open_csv(path);
    out << "index,value\n";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out << i << ',';
        write_cell(out, v[i]);
        out << '\n';
    }
}

void write_values_csv(const std::filesystem::path& path, std::span<const double> values) {
    auto out = open_csv(path);
    out << "index,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << i << ',' << values[i] << '\n';
    }
}

} // namespace framekit
