#pragma once

#include <vector>

#include "nonosc/polynomial.hpp"
#include "nonosc/tolerances.hpp"

namespace nonosc {

/// P_k(z) y^(k) + ... + P_1(z) y' + P_0(z) y = 0, stored as coeffs()[j] = P_j.
class LinearODE {
public:
    /// Trailing zero coefficients are dropped. Throws OrderZero when every
    /// coefficient is the zero polynomial.
    explicit LinearODE(std::vector<Polynomial> coeffs);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Polynomial>& coeffs() const noexcept { return coeffs_; }
    const Polynomial& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
    const Polynomial& leading() const noexcept { return coeffs_.back(); }

    LinearODE scaled(Complex factor) const;
    /// Largest coefficient modulus over all P_j.
    double scale() const noexcept;

    friend bool operator==(const LinearODE&, const LinearODE&) = default;

private:
    std::vector<Polynomial> coeffs_;
};

/// A point of the Riemann sphere: a finite complex number or infinity.
class Point {
public:
    static Point finite(Complex z) { return Point(false, z); }
    static Point infinity() { return Point(true, {}); }

    bool is_infinity() const noexcept { return infinite_; }
    /// The finite location; meaningless for infinity.
    Complex value() const noexcept { return z_; }

    friend bool operator==(const Point&, const Point&) = default;

private:
    Point(bool infinite, Complex z) : infinite_(infinite), z_(z) {}

    bool infinite_;
    Complex z_;
};

/// Singular points sorted by (real, imag) with infinity last.
struct SingularSet {
    std::vector<Point> points;

    std::size_t cardinality() const noexcept { return points.size(); }
    bool contains_infinity() const noexcept { return !points.empty() && points.back().is_infinity(); }
};

/// Deflates every common root of the coefficients, so that their GCD is 1.
LinearODE normalize(const LinearODE& ode, const Tolerances& tol = {});

/// The equation satisfied by u(w) = y(1/w). The common power of w is divided out.
LinearODE moebius_invert(const LinearODE& ode);

/// The equation satisfied by u(t) = y(a t + b), a != 0.
LinearODE affine_pullback(const LinearODE& ode, Complex a, Complex b);

/// Distinct roots of the leading coefficient, plus infinity when w = 0 is not
/// an ordinary point of `moebius_invert(ode)`. Expects a normalized equation.
SingularSet singular_points(const LinearODE& ode, const Tolerances& tol = {});

/// Divides every coefficient by the leading coefficient of P_k, so the
/// result is comparable across constant rescalings.
LinearODE monic_form(const LinearODE& ode);

}  // namespace nonosc
