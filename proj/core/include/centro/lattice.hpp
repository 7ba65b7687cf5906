#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "centro/integer_sos.hpp"
#include "centro/matrix.hpp"

namespace centro {

// A vertex of the square lattice in doubled coordinates: both a and b are
// odd, so the rotation center (0,0) is the center of a unit lattice square.
// Color is derived: white iff k+l is even for (a,b) = (2k+1, 2l+1).
struct LatticeVertex {
    std::int64_t x;
    std::int64_t y;

    friend bool operator==(const LatticeVertex& a, const LatticeVertex& b) {
        return a.x == b.x && a.y == b.y;
    }
    // Canonical scan order: decreasing y, then increasing x.
    friend bool operator<(const LatticeVertex& a, const LatticeVertex& b) {
        if (a.y != b.y) return a.y > b.y;
        return a.x < b.x;
    }
};

inline bool vertex_is_white(const LatticeVertex& v) {
    std::int64_t k = (v.x - 1) / 2, l = (v.y - 1) / 2;
    return ((k + l) % 2 + 2) % 2 == 0;
}

// Bipartite graph embedded in the odd lattice. Edges join vertices at
// L1-distance 2 differing in exactly one coordinate, hence always one white
// and one black endpoint. Vertices are kept in canonical scan order.
class LatticeGraph {
public:
    LatticeGraph(std::vector<LatticeVertex> vertices,
                 std::vector<std::pair<LatticeVertex, LatticeVertex>> edges);

    const std::vector<LatticeVertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
    std::optional<std::size_t> index_of(std::int64_t x, std::int64_t y) const;

    std::size_t white_count() const { return white_count_; }
    std::size_t black_count() const { return vertices_.size() - white_count_; }

private:
    std::vector<LatticeVertex> vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_; // index pairs, first < second
    std::vector<std::vector<std::size_t>> adjacency_;
    std::size_t white_count_ = 0;
};

// Kasteleyn signing of the lattice: horizontal edges +1; vertical edges -1
// exactly when the bottom endpoint is black. Equivalently, orient vertical
// edges southward and horizontal edges black-to-white, +1 when the edge runs
// black-to-white. Every unit-square face then has sign product -1.
int edge_sign(const LatticeVertex& a, const LatticeVertex& b);

bool is_connected(const LatticeGraph& g);

// 180-degree rotational symmetry about the origin with color preservation
// (on the doubled odd lattice, R2 always preserves colors, which is what
// makes the 2-even path-parity condition automatic). Errors on disconnected
// input.
bool check_two_even_symmetric(const LatticeGraph& g);

// Per-color labels 1..m (m vertices of each color). Row-parity holds only
// for labelings produced by symmetric_labeling.
struct VertexLabeling {
    std::vector<std::size_t> label_of;       // vertex index -> 1-based label within color
    std::vector<std::size_t> white_of_label; // label-1 -> vertex index
    std::vector<std::size_t> black_of_label;
};

// Any bijective labeling (canonical scan order); suitable for counting.
VertexLabeling scan_labeling(const LatticeGraph& g);

// The labeling of the theorem: upper-half vertices labeled in scan order,
// counterparts get 2m+1-i, then labels are swapped with their counterparts
// row by row (top-down) until each lattice row carries a single label parity,
// odd in the top row and alternating downward.
VertexLabeling symmetric_labeling(const LatticeGraph& g);

// Rows = white vertices by label, columns = black vertices by label; entry is
// the edge sign or 0.
Matrix<Rational> build_kasteleyn(const LatticeGraph& g, const VertexLabeling& labeling);

// |det| of the Kasteleyn-Percus matrix; independent of the labeling.
Integer count_matchings(const LatticeGraph& g);

struct MatchingCertificate {
    Integer count;
    TwoSquares squares;
    VertexLabeling labeling;
    Matrix<Rational> kasteleyn;
};

// For a 2-even symmetric graph: builds the symmetric labeling, checks the
// Kasteleyn-Percus matrix is alternating centrosymmetric, and extracts
// integers (x, y) with x^2 + y^2 = number of perfect matchings.
MatchingCertificate matching_certificate(const LatticeGraph& g);

// Test support: product of the four edge signs around every complete unit
// face must be -1.
bool unit_faces_have_negative_sign(const LatticeGraph& g);

// Text format: `v <a> <b>` and `e <a1> <b1> <a2> <b2>` lines, `#` comments.
LatticeGraph parse_lattice_graph(std::istream& in);
LatticeGraph parse_lattice_graph(const std::string& text);
std::string print_lattice_graph(const LatticeGraph& g);

} // namespace centro
