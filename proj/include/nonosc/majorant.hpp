#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nonosc/quasi_polynomial.hpp"

namespace nonosc {

struct MajorantPoint {
    double mu = 0.0;
    double phi = 0.0;
};

/// Least concave majorant of a finite point family, as a piecewise linear
/// graph over [min mu, max mu].
struct ConcaveMajorant {
    std::vector<MajorantPoint> points;       // all inputs, sorted by mu
    std::vector<std::size_t> hull;           // indices into `points` of the breakpoints
    std::vector<double> slopes;              // one per segment, strictly decreasing

    std::vector<MajorantPoint> breakpoints() const;
    /// Graph value at mu; mu must lie in [points.front().mu, points.back().mu].
    double eval(double mu) const;
};

/// Monotone-chain upper hull. Collinear middle points are dropped, so the
/// slopes are strictly decreasing. Throws DuplicateAbscissa on repeated mu and
/// InvalidArgument on an empty family.
ConcaveMajorant least_concave_majorant(std::span<const MajorantPoint> points);

/// phi(mu) -> phi(mu) + u mu.
ConcaveMajorant shift_majorant(const ConcaveMajorant& m, double u);

/// Index into m.points of the global maximum; ties go to the largest mu.
std::size_t central_index(const ConcaveMajorant& m);

/// The family (Re lambda_j, ln|a_j| - v Im lambda_j) of a simple quasi-polynomial.
/// Throws NotSimpleExponents.
std::vector<MajorantPoint> majorant_family(const QuasiPolynomial& qp, double v = 0.0);

}  // namespace nonosc
