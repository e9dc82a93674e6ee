#pragma once

#include <span>
#include <vector>

#include "nonosc/polynomial.hpp"
#include "nonosc/tolerances.hpp"

namespace nonosc {

struct Root {
    Complex location;
    int multiplicity = 1;
};

/// Distinct roots with multiplicities, sorted by (real, imag).
struct RootSet {
    std::vector<Root> entries;

    int total_multiplicity() const noexcept;
    bool empty() const noexcept { return entries.empty(); }
    std::size_t size() const noexcept { return entries.size(); }
};

/// All roots of `p` via Aberth-Ehrlich simultaneous iteration.
///
/// Raw roots are grouped first by union within `tol.cluster_radius`; groups
/// that are still close are then merged when the Taylor coefficients of p at
/// the merged centroid vanish up to the merged multiplicity (see
/// `multiplicity_at`). Exact zero roots are split off by valuation.
///
/// Throws NonConvergence if the iteration cap is reached with a residual
/// above `tol.root_tol`, and InvalidArgument for the zero polynomial.
RootSet poly_roots(const Polynomial& p, const Tolerances& tol = {});

/// Number of leading Taylor coefficients of p at z that are negligible:
/// |p^(i)(z)/i!| <= root_tol * (rounding scale of that coefficient).
/// Returns a large sentinel (`kInfiniteMultiplicity`) for the zero polynomial.
int multiplicity_at(const Polynomial& p, Complex z, const Tolerances& tol = {});

inline constexpr int kInfiniteMultiplicity = 1 << 20;

/// Roots shared by every nonzero polynomial of `ps`, with the minimum multiplicity.
RootSet common_roots(std::span<const Polynomial> ps, const Tolerances& tol = {});

/// |p(r)| <= root_tol * max|coeff| * max(1, |r|)^deg for every entry.
bool residuals_within(const Polynomial& p, const RootSet& roots, const Tolerances& tol = {});

}  // namespace nonosc
