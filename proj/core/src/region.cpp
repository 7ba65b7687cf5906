#include "centro/region.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace centro {

namespace {

void require_odd_pair(std::int64_t x, std::int64_t y, std::size_t lineno = 0) {
    if (x % 2 == 0 || y % 2 == 0) {
        std::string msg = "cell (" + std::to_string(x) + "," + std::to_string(y) +
                          ") must have odd doubled coordinates";
        if (lineno) throw parse_error(msg, lineno);
        throw contract_error(msg);
    }
}

} // namespace

Region::Region(std::vector<std::pair<std::int64_t, std::int64_t>> cells) {
    if (cells.empty()) throw contract_error("region must be nonempty");
    for (const auto& [x, y] : cells) require_odd_pair(x, y);
    std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw contract_error("duplicate cell in region");
    cells_ = std::move(cells);

    // edge-connectivity over side adjacency
    std::set<std::pair<std::int64_t, std::int64_t>> cellset(cells_.begin(), cells_.end());
    std::vector<std::pair<std::int64_t, std::int64_t>> stack{cells_.front()};
    std::set<std::pair<std::int64_t, std::int64_t>> seen{cells_.front()};
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (auto [dx, dy] : {std::pair<int, int>{2, 0}, {-2, 0}, {0, 2}, {0, -2}}) {
            std::pair<std::int64_t, std::int64_t> next{x + dx, y + dy};
            if (cellset.count(next) && !seen.count(next)) {
                seen.insert(next);
                stack.push_back(next);
            }
        }
    }
    if (seen.size() != cells_.size()) throw contract_error("region is not edge-connected");
}

Region aztec_diamond(std::int64_t n) {
    if (n < 1) throw contract_error("Aztec diamond order must be >= 1");
    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    for (std::int64_t y = -(2 * n - 1); y <= 2 * n - 1; y += 2)
        for (std::int64_t x = -(2 * n - 1); x <= 2 * n - 1; x += 2)
            if (std::llabs(x) + std::llabs(y) <= 2 * n) cells.emplace_back(x, y);
    return Region(std::move(cells));
}

Region aztec_pillow(std::int64_t n) {
    if (n < 1) throw contract_error("Aztec pillow order must be >= 1");
    std::vector<BandRow> band{{1, -(2 * n - 1), 2 * n - 1}, {-1, -(2 * n - 1), 2 * n - 1}};
    // rows shrink by 4 squares each; keep stacking while at least one cell is left
    std::vector<std::int64_t> steps;
    for (std::int64_t width = 2 * n - 4; width >= 1; width -= 4) steps.push_back(3);
    return generalized_pillow(steps, band);
}

Region generalized_pillow(const std::vector<std::int64_t>& up_steps,
                          const std::vector<BandRow>& band,
                          const std::optional<std::vector<std::int64_t>>& down_steps) {
    if (band.empty()) throw contract_error("central band must be nonempty");
    std::vector<BandRow> rows = band;
    std::sort(rows.begin(), rows.end(), [](const BandRow& a, const BandRow& b) { return a.y > b.y; });
    for (const auto& r : rows) {
        require_odd_pair(r.xmin, r.y);
        require_odd_pair(r.xmax, r.y);
        if (r.xmin > r.xmax) throw contract_error("band row has empty interval");
    }
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i].y - rows[i + 1].y != 2)
            throw contract_error("band rows must occupy consecutive lattice rows");
        if (rows[i].xmin > rows[i + 1].xmax || rows[i + 1].xmin > rows[i].xmax)
            throw contract_error("consecutive band rows do not overlap");
    }

    auto check_steps = [](const std::vector<std::int64_t>& steps) {
        for (std::int64_t s : steps)
            if (s < 1 || s % 2 == 0)
                throw contract_error("step length " + std::to_string(s) +
                                     " is invalid: steps off the central band must have odd length");
    };
    check_steps(up_steps);
    const std::vector<std::int64_t>& down = down_steps ? *down_steps : up_steps;
    if (down_steps) check_steps(down);

    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    auto emit = [&](std::int64_t y, std::int64_t xmin, std::int64_t xmax) {
        for (std::int64_t x = xmin; x <= xmax; x += 2) cells.emplace_back(x, y);
    };
    for (const auto& r : rows) emit(r.y, r.xmin, r.xmax);

    // upward: west edge moves east by the step, east edge moves west by 1
    {
        std::int64_t y = rows.front().y, xmin = rows.front().xmin, xmax = rows.front().xmax;
        for (std::int64_t s : up_steps) {
            y += 2;
            xmin += 2 * s;
            xmax -= 2;
            if (xmin > xmax)
                throw contract_error("steps exhaust the row width above the band");
            emit(y, xmin, xmax);
        }
    }
    // downward mirror: east edge moves west by the step, west edge east by 1
    {
        std::int64_t y = rows.back().y, xmin = rows.back().xmin, xmax = rows.back().xmax;
        for (std::int64_t s : down) {
            y -= 2;
            xmax -= 2 * s;
            xmin += 2;
            if (xmin > xmax)
                throw contract_error("steps exhaust the row width below the band");
            emit(y, xmin, xmax);
        }
    }
    return Region(std::move(cells));
}

bool is_rotationally_symmetric(const Region& r) {
    std::set<std::pair<std::int64_t, std::int64_t>> cellset(r.cells().begin(), r.cells().end());
    for (const auto& [x, y] : r.cells())
        if (!cellset.count({-x, -y})) return false;
    return true;
}

LatticeGraph dual_graph(const Region& r) {
    std::vector<LatticeVertex> vertices;
    vertices.reserve(r.size());
    for (const auto& [x, y] : r.cells()) vertices.push_back({x, y});
    std::set<std::pair<std::int64_t, std::int64_t>> cellset(r.cells().begin(), r.cells().end());
    std::vector<std::pair<LatticeVertex, LatticeVertex>> edges;
    for (const auto& [x, y] : r.cells()) {
        if (cellset.count({x + 2, y})) edges.push_back({{x, y}, {x + 2, y}});
        if (cellset.count({x, y - 2})) edges.push_back({{x, y}, {x, y - 2}});
    }
    return LatticeGraph(std::move(vertices), std::move(edges));
}

Region parse_region(std::istream& in) {
    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag != "row") throw parse_error("expected `row <y>: <xmin>..<xmax>[,...]`", lineno);
        std::int64_t y;
        char colon;
        if (!(ls >> y >> colon) || colon != ':')
            throw parse_error("expected `row <y>:`", lineno);
        std::string rest;
        std::getline(ls, rest);
        std::istringstream intervals(rest);
        std::string interval;
        bool any = false;
        while (std::getline(intervals, interval, ',')) {
            auto dots = interval.find("..");
            if (dots == std::string::npos)
                throw parse_error("interval '" + interval + "' must be `<xmin>..<xmax>`", lineno);
            try {
                std::int64_t xmin = std::stoll(interval.substr(0, dots));
                std::int64_t xmax = std::stoll(interval.substr(dots + 2));
                require_odd_pair(xmin, y, lineno);
                require_odd_pair(xmax, y, lineno);
                if (xmin > xmax) throw parse_error("empty interval", lineno);
                for (std::int64_t x = xmin; x <= xmax; x += 2) cells.emplace_back(x, y);
                any = true;
            } catch (const parse_error&) {
                throw;
            } catch (const std::exception&) {
                throw parse_error("malformed interval '" + interval + "'", lineno);
            }
        }
        if (!any) throw parse_error("row without intervals", lineno);
    }
    try {
        return Region(std::move(cells));
    } catch (const contract_error& e) {
        throw parse_error(e.what());
    }
}

Region parse_region(const std::string& text) {
    std::istringstream in(text);
    return parse_region(in);
}

std::string print_region(const Region& r) {
    std::ostringstream out;
    std::size_t i = 0;
    const auto& cells = r.cells();
    while (i < cells.size()) {
        std::int64_t y = cells[i].second;
        out << "row " << y << ":";
        bool first = true;
        while (i < cells.size() && cells[i].second == y) {
            std::int64_t xmin = cells[i].first, xmax = xmin;
            while (i + 1 < cells.size() && cells[i + 1].second == y &&
                   cells[i + 1].first == xmax + 2) {
                xmax += 2;
                ++i;
            }
            out << (first ? " " : ",") << xmin << ".." << xmax;
            first = false;
            ++i;
        }
        out << "\n";
    }
    return out.str();
}

std::vector<BandRow> parse_band_spec(const std::string& spec) {
    std::vector<BandRow> rows;
    std::istringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto colon = part.find(':');
        auto dots = part.find("..");
        if (colon == std::string::npos || dots == std::string::npos || dots < colon)
            throw parse_error("band row '" + part + "' must be `y:xmin..xmax`");
        try {
            BandRow r;
            r.y = std::stoll(part.substr(0, colon));
            r.xmin = std::stoll(part.substr(colon + 1, dots - colon - 1));
            r.xmax = std::stoll(part.substr(dots + 2));
            rows.push_back(r);
        } catch (const std::exception&) {
            throw parse_error("malformed band row '" + part + "'");
        }
    }
    if (rows.empty()) throw parse_error("empty band spec");
    return rows;
}

} // namespace centro
