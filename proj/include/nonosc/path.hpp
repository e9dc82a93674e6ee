#pragma once

#include <span>

#include "nonosc/polynomial.hpp"

namespace nonosc {

struct PathLength {
    double length = 0.0;
    bool heuristic = false;  // true when the point count exceeded the exact limit
};

inline constexpr std::size_t kExactPathLimit = 10;

/// Length of the shortest open polygonal path visiting every point once.
///
/// Exact (Held-Karp over subsets) for at most `kExactPathLimit` points;
/// beyond that, nearest-neighbour starts from every point improved by 2-opt,
/// flagged heuristic.
PathLength shortest_path_length(std::span<const Complex> points);

}  // namespace nonosc
