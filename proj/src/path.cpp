#include "nonosc/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace nonosc {

namespace {

double held_karp(std::span<const Complex> pts) {
    const std::size_t n = pts.size();
    const std::size_t full = (std::size_t{1} << n);
    constexpr double inf = std::numeric_limits<double>::infinity();
    // best[mask * n + last]: shortest path covering `mask`, ending at `last`.
    std::vector<double> best(full * n, inf);
    for (std::size_t i = 0; i < n; ++i) best[(std::size_t{1} << i) * n + i] = 0.0;
    for (std::size_t mask = 1; mask < full; ++mask) {
        for (std::size_t last = 0; last < n; ++last) {
            const double here = best[mask * n + last];
            if (here == inf) continue;
            for (std::size_t next = 0; next < n; ++next) {
                if (mask & (std::size_t{1} << next)) continue;
                const std::size_t m2 = mask | (std::size_t{1} << next);
                double& slot = best[m2 * n + next];
                slot = std::min(slot, here + std::abs(pts[last] - pts[next]));
            }
        }
    }
    double answer = inf;
    for (std::size_t last = 0; last < n; ++last) answer = std::min(answer, best[(full - 1) * n + last]);
    return answer;
}

double tour_length(std::span<const Complex> pts, const std::vector<std::size_t>& order) {
    double len = 0.0;
    for (std::size_t i = 1; i < order.size(); ++i) len += std::abs(pts[order[i]] - pts[order[i - 1]]);
    return len;
}

double nearest_neighbour_two_opt(std::span<const Complex> pts) {
    const std::size_t n = pts.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t start = 0; start < n; ++start) {
        std::vector<std::size_t> order{start};
        std::vector<bool> used(n, false);
        used[start] = true;
        while (order.size() < n) {
            std::size_t pick = n;
            double d = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < n; ++j)
                if (!used[j] && std::abs(pts[j] - pts[order.back()]) < d) {
                    d = std::abs(pts[j] - pts[order.back()]);
                    pick = j;
                }
            used[pick] = true;
            order.push_back(pick);
        }
        // 2-opt on an open path: reversing order[i..j] changes at most two edges.
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t i = 0; i + 1 < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    std::vector<std::size_t> cand = order;
                    std::reverse(cand.begin() + static_cast<std::ptrdiff_t>(i),
                                 cand.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                    if (tour_length(pts, cand) < tour_length(pts, order) - 1e-12) {
                        order = std::move(cand);
                        improved = true;
                    }
                }
        }
        best = std::min(best, tour_length(pts, order));
    }
    return best;
}

}  // namespace

PathLength shortest_path_length(std::span<const Complex> points) {
    if (points.size() <= 1) return {0.0, false};
    if (points.size() <= kExactPathLimit) return {held_karp(points), false};
    return {nearest_neighbour_two_opt(points), true};
}

}  // namespace nonosc
