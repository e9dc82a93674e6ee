#pragma once

#include <vector>

#include "nonosc/quasi_polynomial.hpp"

namespace nonosc {

/// Axis-aligned rectangle [u_lo, u_hi] x [v_lo, v_hi] in z = u + i v.
struct Box {
    double u_lo = 0.0;
    double u_hi = 0.0;
    double v_lo = 0.0;
    double v_hi = 0.0;

    double width() const noexcept { return u_hi - u_lo; }
    double height() const noexcept { return v_hi - v_lo; }
    double diagonal() const noexcept;
    bool contains(Complex z, double slack = 0.0) const noexcept;
    Box inflated(double by) const noexcept { return {u_lo - by, u_hi + by, v_lo - by, v_hi + by}; }

    friend bool operator==(const Box&, const Box&) = default;
};

struct ContourOptions {
    int initial_pieces = 16;  // per edge, before adaptive halving
    int max_depth = 48;       // halvings below one initial piece
    double nudge = 1e-7;      // inflation step, relative to 1 + the longer side
    int max_nudges = 3;
};

struct ZeroCount {
    int count = 0;
    Box box;         // the box actually integrated over (after nudges)
    int nudges = 0;
    double winding = 0.0;  // total argument change / 2 pi before rounding
};

/// Zeros of qp inside `box`, with multiplicity, from the winding number of
/// qp along the boundary.
///
/// Each edge is split into pieces that are halved until the two-point and
/// three-point trapezoid estimates of the integral of Im(f'/f dz) agree and
/// stay small; the accepted piece contributes the principal argument of
/// f(end)/f(start). If the boundary passes through (or numerically touches) a
/// zero the box is inflated and retried. Throws BoundaryZero or
/// NonIntegerWinding when the retries are exhausted.
ZeroCount count_zeros_detailed(const QuasiPolynomial& qp, const Box& box, const Tolerances& tol = {},
                               const ContourOptions& opts = {});

int count_zeros_rect(const QuasiPolynomial& qp, const Box& box, const Tolerances& tol = {});

struct LocatedZero {
    Complex location;
    int multiplicity = 1;  // or the number of zeros merged into one tiny box
};

/// Isolates zeros by recursive bisection with the winding count, then polishes
/// isolated simple zeros with Newton's method. Clusters that survive down to
/// `min_size` are reported as one entry at the box centre.
std::vector<LocatedZero> locate_zeros(const QuasiPolynomial& qp, const Box& box, const Tolerances& tol = {},
                                      double min_size = 1e-7);

}  // namespace nonosc
