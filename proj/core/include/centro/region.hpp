#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "centro/lattice.hpp"

namespace centro {

// A finite, edge-connected set of unit squares, identified by their centers
// in doubled coordinates (odd integer pairs). Cells are kept in canonical
// scan order (decreasing y, increasing x).
class Region {
public:
    explicit Region(std::vector<std::pair<std::int64_t, std::int64_t>> cells);

    const std::vector<std::pair<std::int64_t, std::int64_t>>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

    friend bool operator==(const Region& a, const Region& b) { return a.cells_ == b.cells_; }

private:
    std::vector<std::pair<std::int64_t, std::int64_t>> cells_;
};

// One row of a region or of a generalized-pillow central band: doubled y and
// a doubled inclusive x-interval (all odd).
struct BandRow {
    std::int64_t y;
    std::int64_t xmin;
    std::int64_t xmax;
};

// The 2n(n+1) unit squares with |x|+|y| <= n+1 at integral vertices; in
// doubled center coordinates, odd (u,v) with |u|+|v| <= 2n.
Region aztec_diamond(std::int64_t n);

// Order-n Aztec pillow: centered even-width rows; the upper row at y = 2j+1
// spans [-(2n-1)+6j, 2n-1-2j] (doubled), the lower half is the 180-degree
// rotation. NW/SE boundary steps are 1x3, NE/SW steps are 1x1; order 1
// coincides with the order-1 Aztec diamond. See README for the diagram and
// the pinned cell counts.
Region aztec_pillow(std::int64_t n);

// Rows stacked above (below) a central band. Going up, each step moves the
// west edge east by the given odd length and the east edge west by 1; going
// down mirrors this (SW 1x1, SE steps from down_steps). With down_steps
// omitted the lower half is the 180-degree rotation of the upper stack, so a
// symmetric band yields a rotationally symmetric region. Step lengths all 1
// give Aztec diamonds, all 3 give Aztec pillows.
Region generalized_pillow(const std::vector<std::int64_t>& up_steps,
                          const std::vector<BandRow>& band,
                          const std::optional<std::vector<std::int64_t>>& down_steps = std::nullopt);

// True iff negating both doubled coordinates maps cells onto cells.
bool is_rotationally_symmetric(const Region& r);

// One vertex per cell at the cell center; edges between side-adjacent cells.
LatticeGraph dual_graph(const Region& r);

// Text format: `row <y>: <xmin>..<xmax>[,<xmin>..<xmax>]*` in doubled
// coordinates, rows emitted top-down.
Region parse_region(std::istream& in);
Region parse_region(const std::string& text);
std::string print_region(const Region& r);

// CLI band syntax: `y:xmin..xmax[;y:xmin..xmax]*` (doubled coordinates).
std::vector<BandRow> parse_band_spec(const std::string& spec);

} // namespace centro
