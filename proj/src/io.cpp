#include "roap/io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace roap {

PathInstance read_points(std::istream& in, MetricKind kind, Cmp cmp) {
    int n = 0, d = 0;
    if (!(in >> n >> d)) throw ParseError("points file: expected header 'n d'");
    if (n < 1 || d < 1) throw ParseError("points file: invalid n or d");
    std::vector<std::vector<double>> pts(static_cast<std::size_t>(n),
                                         std::vector<double>(static_cast<std::size_t>(d)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < d; ++c) {
            if (!(in >> pts[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])) {
                throw ParseError("points file: truncated coordinate data");
            }
        }
    }
    return build_from_points(pts, kind, cmp);
}

PathInstance read_matrix(std::istream& in, Cmp cmp) {
    int n = 0;
    if (!(in >> n)) throw ParseError("matrix file: expected header 'n'");
    if (n < 1) throw ParseError("matrix file: invalid n");
    std::vector<std::vector<double>> m(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (!(in >> m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])) {
                throw ParseError("matrix file: truncated row data");
            }
        }
    }
    return build_from_matrix(m, cmp);
}

void write_points(std::ostream& out, const PathInstance& inst) {
    if (inst.metric() == MetricKind::Matrix) {
        throw Error("matrix instance has no point coordinates");
    }
    const int n = inst.n();
    const int d = inst.dim();
    out << n << ' ' << d << '\n';
    out << std::setprecision(17);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < d; ++c) {
            if (c) out << ' ';
            out << inst.coords()[static_cast<std::size_t>(r) * d + c];
        }
        out << '\n';
    }
}

void write_matrix(std::ostream& out, const PathInstance& inst) {
    const int n = inst.n();
    out << n << '\n';
    out << std::setprecision(17);
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            if (c > 1) out << ' ';
            out << inst.dist(r, c);
        }
        out << '\n';
    }
}

PathInstance read_instance_file(const std::string& path, const std::string& format,
                                MetricKind kind, Cmp cmp) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    if (format == "points") return read_points(in, kind, cmp);
    if (format == "matrix") return read_matrix(in, cmp);
    throw ParseError("unknown format: " + format);
}

} // namespace roap
