#include "centro/oracle.hpp"

namespace centro::oracle {

namespace {

Integer count_from(const LatticeGraph& g, std::vector<bool>& matched) {
    std::size_t v = 0;
    while (v < matched.size() && matched[v]) ++v;
    if (v == matched.size()) return 1;
    matched[v] = true;
    Integer total = 0;
    for (std::size_t w : g.neighbors(v)) {
        if (matched[w]) continue;
        matched[w] = true;
        total += count_from(g, matched);
        matched[w] = false;
    }
    matched[v] = false;
    return total;
}

} // namespace

Integer enumerate_matchings(const LatticeGraph& g) {
    if (g.vertices().size() > kMatchingGuard)
        throw guard_error("matching oracle limited to " + std::to_string(kMatchingGuard) +
                          " vertices");
    if (g.vertices().size() % 2 != 0) return 0;
    std::vector<bool> matched(g.vertices().size(), false);
    return count_from(g, matched);
}

std::optional<TwoSquares> two_squares_exhaustive(long n) {
    if (n < 0 || n > kTwoSquaresGuard)
        throw guard_error("exhaustive search limited to n <= " + std::to_string(kTwoSquaresGuard));
    for (long x = static_cast<long>(boost::multiprecision::sqrt(Integer(n)).convert_to<long>());
         x >= 0 && x * x * 2 >= n; --x) {
        long rest = n - x * x;
        long y = static_cast<long>(boost::multiprecision::sqrt(Integer(rest)).convert_to<long>());
        if (y * y == rest) return TwoSquares(x, y, n);
    }
    return std::nullopt;
}

} // namespace centro::oracle
