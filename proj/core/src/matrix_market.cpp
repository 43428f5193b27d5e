#include "mmipm/matrix_market.hpp"

#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mmipm {

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

void format_value(char* buf, std::size_t len, double v) {
    std::snprintf(buf, len, "%.17g", v);
}

}  // namespace

SparseSymMatrix read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw MatrixMarketError("empty input");

    std::istringstream header(line);
    std::string banner, object, fmt, field, symmetry;
    header >> banner >> object >> fmt >> field >> symmetry;
    if (banner != "%%MatrixMarket")
        throw MatrixMarketError("missing %%MatrixMarket banner");
    if (lower(object) != "matrix" || lower(fmt) != "coordinate" || lower(field) != "real" ||
        lower(symmetry) != "symmetric")
        throw MatrixMarketError("expected 'matrix coordinate real symmetric', got '" + line + "'");

    // Skip comments and blank lines up to the size line.
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        break;
    }
    std::istringstream size_line(line);
    long long rows = -1, cols = -1, entries = -1;
    size_line >> rows >> cols >> entries;
    if (rows <= 0 || cols <= 0 || entries < 0)
        throw MatrixMarketError("malformed size line: '" + line + "'");
    if (rows != cols) throw MatrixMarketError("matrix must be square");

    const std::size_t n = static_cast<std::size_t>(rows);
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(entries));
    long long seen = 0;
    while (seen < entries && std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        std::istringstream es(line);
        long long i = 0, j = 0;
        double v = 0.0;
        if (!(es >> i >> j >> v))
            throw MatrixMarketError("malformed entry line: '" + line + "'");
        if (i < 1 || j < 1 || i > rows || j > cols)
            throw MatrixMarketError("index out of range in line: '" + line + "'");
        if (j > i)
            throw MatrixMarketError("symmetric format requires lower-triangle entries, got (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
        triplets.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), v});
        ++seen;
    }
    if (seen != entries)
        throw MatrixMarketError("expected " + std::to_string(entries) + " entries, found " +
                                std::to_string(seen));

    try {
        return SparseSymMatrix::from_lower_triplets(n, triplets);
    } catch (const std::invalid_argument& e) {
        throw MatrixMarketError(e.what());
    }
}

SparseSymMatrix read_matrix_market_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MatrixMarketError("cannot open '" + path + "'");
    return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const SparseSymMatrix& a) {
    std::size_t lower_count = 0;
    const auto& rs = a.row_starts();
    const auto& ci = a.col_indices();
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t k = rs[i]; k < rs[i + 1]; ++k)
            if (ci[k] <= i) ++lower_count;

    out << "%%MatrixMarket matrix coordinate real symmetric\n";
    out << a.n() << " " << a.n() << " " << lower_count << "\n";
    char buf[64];
    for (std::size_t i = 0; i < a.n(); ++i) {
        for (std::size_t k = rs[i]; k < rs[i + 1]; ++k) {
            const std::size_t j = ci[k];
            if (j > i) continue;
            format_value(buf, sizeof(buf), a.values()[k]);
            out << (i + 1) << " " << (j + 1) << " " << buf << "\n";
        }
    }
}

void write_matrix_market_file(const std::string& path, const SparseSymMatrix& a) {
    std::ofstream out(path);
    if (!out) throw MatrixMarketError("cannot open '" + path + "' for writing");
    write_matrix_market(out, a);
}

DenseVector read_vector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MatrixMarketError("cannot open '" + path + "'");
    DenseVector v;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '%' || line[0] == '#') continue;
        std::istringstream ls(line);
        double x = 0.0;
        if (!(ls >> x)) throw MatrixMarketError("malformed vector line: '" + line + "'");
        v.push_back(x);
    }
    return v;
}

void write_vector_file(const std::string& path, const DenseVector& v) {
    std::ofstream out(path);
    if (!out) throw MatrixMarketError("cannot open '" + path + "' for writing");
    char buf[64];
    for (double x : v) {
        format_value(buf, sizeof(buf), x);
        out << buf << "\n";
    }
}

}  // namespace mmipm
