#include "centro/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "centro/alt_centro.hpp"
#include "centro/structure.hpp"

namespace centro {

namespace {

bool lattice_adjacent(const LatticeVertex& a, const LatticeVertex& b) {
    std::int64_t dx = std::llabs(a.x - b.x), dy = std::llabs(a.y - b.y);
    return (dx == 2 && dy == 0) || (dx == 0 && dy == 2);
}

std::string vertex_str(const LatticeVertex& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

} // namespace

LatticeGraph::LatticeGraph(std::vector<LatticeVertex> vertices,
                           std::vector<std::pair<LatticeVertex, LatticeVertex>> edges) {
    if (vertices.empty()) throw contract_error("graph must have at least one vertex");
    for (const auto& v : vertices) {
        if (v.x % 2 == 0 || v.y % 2 == 0)
            throw contract_error("vertex " + vertex_str(v) + " does not have odd coordinates");
    }
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw contract_error("duplicate vertex in graph");
    vertices_ = std::move(vertices);
    for (const auto& v : vertices_)
        if (vertex_is_white(v)) ++white_count_;

    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> index;
    for (std::size_t i = 0; i < vertices_.size(); ++i) index[{vertices_[i].x, vertices_[i].y}] = i;

    adjacency_.assign(vertices_.size(), {});
    for (const auto& [a, b] : edges) {
        if (!lattice_adjacent(a, b))
            throw contract_error("edge " + vertex_str(a) + "-" + vertex_str(b) +
                                 " is not a lattice edge");
        auto ia = index.find({a.x, a.y});
        auto ib = index.find({b.x, b.y});
        if (ia == index.end() || ib == index.end())
            throw contract_error("edge " + vertex_str(a) + "-" + vertex_str(b) +
                                 " references an undeclared vertex");
        std::size_t u = ia->second, v = ib->second;
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw contract_error("duplicate edge in graph");
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
}

std::optional<std::size_t> LatticeGraph::index_of(std::int64_t x, std::int64_t y) const {
    LatticeVertex probe{x, y};
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), probe);
    if (it != vertices_.end() && *it == probe)
        return static_cast<std::size_t>(it - vertices_.begin());
    return std::nullopt;
}

int edge_sign(const LatticeVertex& a, const LatticeVertex& b) {
    if (!lattice_adjacent(a, b))
        throw contract_error("edge " + vertex_str(a) + "-" + vertex_str(b) +
                             " is not a lattice edge");
    if (a.y == b.y) return 1; // horizontal
    const LatticeVertex& bottom = a.y < b.y ? a : b;
    return vertex_is_white(bottom) ? 1 : -1;
}

bool is_connected(const LatticeGraph& g) {
    const std::size_t n = g.vertices().size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                ++visited;
                stack.push_back(w);
            }
    }
    return visited == n;
}

bool check_two_even_symmetric(const LatticeGraph& g) {
    if (!is_connected(g)) throw contract_error("graph is disconnected");
    for (const auto& v : g.vertices()) {
        auto img = g.index_of(-v.x, -v.y);
        if (!img) return false;
        if (vertex_is_white(v) != vertex_is_white(g.vertices()[*img])) return false;
    }
    for (const auto& [u, v] : g.edges()) {
        const auto& a = g.vertices()[u];
        const auto& b = g.vertices()[v];
        std::size_t iu = *g.index_of(-a.x, -a.y);
        std::size_t iv = *g.index_of(-b.x, -b.y);
        if (iu > iv) std::swap(iu, iv);
        if (!std::binary_search(g.edges().begin(), g.edges().end(), std::make_pair(iu, iv)))
            return false;
    }
    return true;
}

namespace {

void require_equal_colors(const LatticeGraph& g) {
    if (g.white_count() != g.black_count())
        throw contract_error("no perfect matching possible: " + std::to_string(g.white_count()) +
                             " white vs " + std::to_string(g.black_count()) + " black vertices");
}

} // namespace

VertexLabeling scan_labeling(const LatticeGraph& g) {
    VertexLabeling l;
    l.label_of.assign(g.vertices().size(), 0);
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        if (vertex_is_white(g.vertices()[i])) {
            l.white_of_label.push_back(i);
            l.label_of[i] = l.white_of_label.size();
        } else {
            l.black_of_label.push_back(i);
            l.label_of[i] = l.black_of_label.size();
        }
    }
    return l;
}

VertexLabeling symmetric_labeling(const LatticeGraph& g) {
    if (!check_two_even_symmetric(g))
        throw contract_error("graph is not 2-even symmetric about the origin");
    require_equal_colors(g);
    const std::size_t n2m = g.white_count(); // 2m of each color
    if (n2m % 2 != 0) throw contract_error("symmetry requires an even number of each color");
    const std::size_t m = n2m / 2;

    VertexLabeling l;
    l.label_of.assign(g.vertices().size(), 0);
    l.white_of_label.assign(n2m, 0);
    l.black_of_label.assign(n2m, 0);

    auto counterpart = [&](std::size_t v) {
        return *g.index_of(-g.vertices()[v].x, -g.vertices()[v].y);
    };

    // Initial labels: upper-half vertices in scan order get 1..m per color,
    // counterparts get 2m+1-i. Vertices are already in scan order.
    std::size_t next_white = 0, next_black = 0;
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        if (g.vertices()[i].y < 0) continue;
        std::size_t& next = vertex_is_white(g.vertices()[i]) ? next_white : next_black;
        l.label_of[i] = ++next;
        l.label_of[counterpart(i)] = 2 * m + 1 - l.label_of[i];
    }
    if (next_white != m || next_black != m)
        throw contract_error("upper half does not hold half of each color");

    // Parity fixing: walk the upper rows top-down; the top row's target
    // parity is odd and it alternates downward. A mismatched label is
    // swapped with its counterpart, which lives in the (unprocessed) lower
    // half, so completed rows stay fixed and the lower rows come for free.
    std::vector<std::int64_t> rows;
    for (const auto& v : g.vertices())
        if (rows.empty() || rows.back() != v.y) rows.push_back(v.y);
    for (std::size_t r = 0; r + 1 < rows.size(); ++r)
        if (rows[r] - rows[r + 1] != 2)
            throw contract_error("occupied lattice rows are not contiguous");

    for (std::size_t r = 0; r < rows.size() && rows[r] > 0; ++r) {
        const bool want_odd = r % 2 == 0;
        for (std::size_t i = 0; i < g.vertices().size(); ++i) {
            if (g.vertices()[i].y != rows[r]) continue;
            if ((l.label_of[i] % 2 == 1) != want_odd)
                std::swap(l.label_of[i], l.label_of[counterpart(i)]);
        }
    }

    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        if (vertex_is_white(g.vertices()[i]))
            l.white_of_label[l.label_of[i] - 1] = i;
        else
            l.black_of_label[l.label_of[i] - 1] = i;
    }
    return l;
}

Matrix<Rational> build_kasteleyn(const LatticeGraph& g, const VertexLabeling& labeling) {
    require_equal_colors(g);
    const std::size_t n = g.white_count();
    Matrix<Rational> a(n, n, Rational(0));
    for (const auto& [u, v] : g.edges()) {
        std::size_t w = vertex_is_white(g.vertices()[u]) ? u : v;
        std::size_t b = w == u ? v : u;
        int sign = edge_sign(g.vertices()[u], g.vertices()[v]);
        a(labeling.label_of[w] - 1, labeling.label_of[b] - 1) = Rational(sign);
    }
    return a;
}

Integer count_matchings(const LatticeGraph& g) {
    require_equal_colors(g);
    Rational det = det_exact(build_kasteleyn(g, scan_labeling(g)));
    return abs_int(integer_value(det));
}

MatchingCertificate matching_certificate(const LatticeGraph& g) {
    VertexLabeling labeling = symmetric_labeling(g);
    Matrix<Rational> a = build_kasteleyn(g, labeling);
    if (!is_alternating_centrosymmetric(a))
        throw std::logic_error("internal error: symmetric labeling did not produce an "
                               "alternating centrosymmetric Kasteleyn-Percus matrix");

    const std::size_t n = a.rows();
    Matrix<Rational> alt = alternating_exchange_matrix(n, Rational(0));
    SimpleFormK<Rational> simple(block(alt, 0, n / 2, n / 2, n));
    auto [b, c] = extract_bc(a, simple, CommutationKind::PseudoCentro);
    HalfDetResult<Rational> half = det_via_half(b, c, CommutationKind::PseudoCentro);

    Integer x = abs_int(integer_value(half.certificate.x));
    Integer y = abs_int(integer_value(half.certificate.y));
    if (x < y) std::swap(x, y);
    Integer count = integer_value(half.det); // = x^2 + y^2 >= 0
    return MatchingCertificate{count, TwoSquares(x, y, count), std::move(labeling), std::move(a)};
}

bool unit_faces_have_negative_sign(const LatticeGraph& g) {
    for (const auto& v : g.vertices()) {
        auto e = g.index_of(v.x + 2, v.y);
        auto n = g.index_of(v.x, v.y + 2);
        auto ne = g.index_of(v.x + 2, v.y + 2);
        if (!e || !n || !ne) continue;
        // all four corners present; require all four edges too
        LatticeVertex ve{v.x + 2, v.y}, vn{v.x, v.y + 2}, vne{v.x + 2, v.y + 2};
        int product = edge_sign(v, ve) * edge_sign(v, vn) * edge_sign(ve, vne) * edge_sign(vn, vne);
        if (product != -1) return false;
    }
    return true;
}

LatticeGraph parse_lattice_graph(std::istream& in) {
    std::vector<LatticeVertex> vertices;
    std::vector<std::pair<LatticeVertex, LatticeVertex>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        try {
            if (tag == "v") {
                std::int64_t x, y;
                if (!(ls >> x >> y)) throw parse_error("expected `v <a> <b>`", lineno);
                vertices.push_back({x, y});
            } else if (tag == "e") {
                std::int64_t x1, y1, x2, y2;
                if (!(ls >> x1 >> y1 >> x2 >> y2))
                    throw parse_error("expected `e <a1> <b1> <a2> <b2>`", lineno);
                edges.push_back({{x1, y1}, {x2, y2}});
            } else {
                throw parse_error("unknown directive '" + tag + "'", lineno);
            }
            std::string rest;
            if (ls >> rest) throw parse_error("trailing tokens '" + rest + "'", lineno);
        } catch (const contract_error& e) {
            throw parse_error(e.what(), lineno);
        }
    }
    try {
        return LatticeGraph(std::move(vertices), std::move(edges));
    } catch (const contract_error& e) {
        throw parse_error(e.what());
    }
}

LatticeGraph parse_lattice_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_lattice_graph(in);
}

std::string print_lattice_graph(const LatticeGraph& g) {
    std::ostringstream out;
    for (const auto& v : g.vertices()) out << "v " << v.x << " " << v.y << "\n";
    for (const auto& [u, v] : g.edges())
        out << "e " << g.vertices()[u].x << " " << g.vertices()[u].y << " " << g.vertices()[v].x
            << " " << g.vertices()[v].y << "\n";
    return out.str();
}

} // namespace centro
