#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <centro/centro.hpp>

namespace centro::testfix {

inline std::string fixture_path(const std::string& name) {
    return std::string(CENTRO_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing fixture " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// The 6x6 alternating centrosymmetric Kasteleyn-Percus matrix of the paper's
// worked labeling example; det = 10, certificate 3^2 + 1^2.
inline Matrix<Rational> figure3_matrix() {
    auto q = [](int v) { return Rational(v); };
    return Matrix<Rational>::from_rows({
        {q(0), q(0), q(0), q(1), q(1), q(-1)},
        {q(0), q(0), q(0), q(0), q(1), q(1)},
        {q(0), q(1), q(1), q(0), q(1), q(0)},
        {q(0), q(1), q(0), q(1), q(-1), q(0)},
        {q(1), q(-1), q(0), q(0), q(0), q(0)},
        {q(1), q(1), q(-1), q(0), q(0), q(0)},
    });
}

inline Matrix<Rational> rational_matrix(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (int v : row) r.back().emplace_back(v);
    }
    return Matrix<Rational>::from_rows(r);
}

inline LatticeGraph figure3_graph() {
    return parse_lattice_graph(read_file(fixture_path("figure3_graph.txt")));
}

inline Region figure3_region() {
    return parse_region(read_file(fixture_path("figure3_region.txt")));
}

// 4-cycle around the origin, the smallest 2-even symmetric graph.
inline LatticeGraph four_cycle() {
    return parse_lattice_graph("v 1 1\nv -1 1\nv -1 -1\nv 1 -1\n"
                               "e -1 1 1 1\ne -1 -1 1 -1\ne -1 1 -1 -1\ne 1 1 1 -1\n");
}

} // namespace centro::testfix
