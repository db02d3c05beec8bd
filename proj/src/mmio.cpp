#include "jspectra/mmio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace jspectra::mmio {

namespace {

[[noreturn]] void fail(const std::string& path, int line, const std::string& what) {
    throw Error(ErrorCode::ParseError, path + ":" + std::to_string(line) + ": " + what);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

struct LineReader {
    std::istream& in;
    const std::string& path;
    int line_no = 0;

    // Next content line, comments and blanks skipped.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            std::size_t start = raw.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (raw[start] == '%') continue;
            out = raw;
            return true;
        }
        return false;
    }
};

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Matrix read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");

    std::string header;
    int header_line = 1;
    if (!std::getline(in, header)) fail(path, 1, "empty file");
    std::istringstream hs(lower(header));
    std::string banner, object, format, field, symmetry;
    hs >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%matrixmarket" || object != "matrix")
        fail(path, header_line, "not a MatrixMarket matrix header");
    const bool coordinate = format == "coordinate";
    if (!coordinate && format != "array") fail(path, header_line, "format must be array or coordinate");
    if (field != "real" && field != "integer") fail(path, header_line, "field must be real or integer");
    const bool symmetric = symmetry == "symmetric";
    if (!symmetric && symmetry != "general") fail(path, header_line, "symmetry must be general or symmetric");

    LineReader reader{in, path, header_line};
    std::string sizes;
    if (!reader.next(sizes)) fail(path, reader.line_no, "missing size line");
    std::istringstream ss(sizes);
    long rows = 0, cols = 0, nnz = 0;
    if (!(ss >> rows >> cols)) fail(path, reader.line_no, "malformed size line");
    if (coordinate && !(ss >> nnz)) fail(path, reader.line_no, "coordinate size line needs nnz");
    if (rows <= 0 || cols <= 0) fail(path, reader.line_no, "non-positive dimensions");
    if (symmetric && rows != cols) fail(path, reader.line_no, "symmetric matrix must be square");

    Matrix m = Matrix::Zero(rows, cols);
    std::string entry;
    if (coordinate) {
        for (long k = 0; k < nnz; ++k) {
            if (!reader.next(entry)) fail(path, reader.line_no, "unexpected end of entries");
            std::istringstream es(entry);
            long i = 0, j = 0;
            double v = 0.0;
            if (!(es >> i >> j >> v)) fail(path, reader.line_no, "malformed entry");
            if (i < 1 || i > rows || j < 1 || j > cols)
                fail(path, reader.line_no, "index out of range");
            if (symmetric && i < j)
                fail(path, reader.line_no, "symmetric storage holds the lower triangle only");
            m(i - 1, j - 1) = v;
            if (symmetric) m(j - 1, i - 1) = v;
        }
    } else {
        // Column-major dense listing; symmetric files carry the lower triangle.
        for (long j = 0; j < cols; ++j) {
            for (long i = symmetric ? j : 0; i < rows; ++i) {
                if (!reader.next(entry)) fail(path, reader.line_no, "unexpected end of entries");
                std::istringstream es(entry);
                double v = 0.0;
                if (!(es >> v)) fail(path, reader.line_no, "malformed value");
                m(i, j) = v;
                if (symmetric) m(j, i) = v;
            }
        }
    }
    return m;
}

void write_matrix(const std::string& path, const Matrix& m, bool symmetric, Layout layout) {
    if (symmetric && !is_symmetric(m, Tolerances::global().sym))
        throw Error(ErrorCode::NotSymmetric, "symmetric storage requested for " + path);

    std::ostringstream out;
    const bool coordinate = layout == Layout::Coordinate;
    out << "%%MatrixMarket matrix " << (coordinate ? "coordinate" : "array") << " real "
        << (symmetric ? "symmetric" : "general") << "\n";

    if (coordinate) {
        long nnz = 0;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = symmetric ? j : 0; i < m.rows(); ++i)
                if (m(i, j) != 0.0) ++nnz;
        out << m.rows() << " " << m.cols() << " " << nnz << "\n";
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = symmetric ? j : 0; i < m.rows(); ++i)
                if (m(i, j) != 0.0)
                    out << (i + 1) << " " << (j + 1) << " " << fmt17(m(i, j)) << "\n";
    } else {
        out << m.rows() << " " << m.cols() << "\n";
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = symmetric ? j : 0; i < m.rows(); ++i)
                out << fmt17(m(i, j)) << "\n";
    }

    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream file(tmp);
        if (!file) throw Error(ErrorCode::ParseError, "cannot write " + tmp.string());
        file << out.str();
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace jspectra::mmio
