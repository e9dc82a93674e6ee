#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonosc/ode.hpp"

namespace nonosc {

enum class PointKind { Ordinary, RegularSingular, Irregular };

const char* to_string(PointKind kind) noexcept;

struct PointClassification {
    PointKind kind = PointKind::Ordinary;
    /// pole_orders[j-1] = order of the pole of P_{k-j}/P_k at the point, j = 1..k.
    std::vector<int> pole_orders;
};

struct Exponent {
    Complex value;
    int multiplicity = 1;
};

/// Characteristic exponents sorted by (real, imag).
struct ExponentSet {
    std::vector<Exponent> exponents;

    int total_multiplicity() const noexcept;
    Complex sum() const noexcept;
};

/// Pole orders at p from root multiplicities; at infinity, w = 0 of `moebius_invert`.
PointClassification classify_point(const LinearODE& ode, const Point& p, const Tolerances& tol = {});

/// I(lambda) = sum_j beta_j lambda(lambda-1)...(lambda-(k-j)+1) with
/// beta_j = lim (z-p)^j P_{k-j}/P_k, computed from Taylor coefficients at p.
/// Throws NotFuchsianAtPoint at an irregular point.
Polynomial indicial_polynomial(const LinearODE& ode, const Point& p, const Tolerances& tol = {});

ExponentSet characteristic_exponents(const LinearODE& ode, const Point& p, const Tolerances& tol = {});

enum class Verdict { GloballyNonOscillating, Oscillating, Indeterminate };

const char* to_string(Verdict v) noexcept;

/// Two exponents a + b1 i and a + b2 i with a shared real part.
struct TiedPair {
    double real_part = 0.0;
    double imag_first = 0.0;
    double imag_second = 0.0;
};

struct PointEvidence {
    Point point = Point::infinity();
    PointClassification classification;
    std::optional<ExponentSet> exponents;
    /// Smallest |Re difference| over pairs of distinct exponents.
    std::optional<double> min_real_gap;
    /// The tie band actually used: real_part_tie_tol * max(1, exponent spread).
    double tie_band = 0.0;
    std::optional<TiedPair> tie;
    bool indeterminate = false;
    std::string note;
};

struct NonOscillationVerdict {
    Verdict verdict = Verdict::GloballyNonOscillating;
    std::vector<PointEvidence> evidence;
    /// Sum of all exponents minus (d-2)k(k-1)/2; only set when every point is Fuchsian.
    std::optional<double> fuchs_relation_residual;
    bool fuchs_relation_warning = false;
};

/// Global non-oscillation: every singular point regular singular, and at each
/// one all distinct exponents have pairwise distinct real parts.
NonOscillationVerdict decide(const LinearODE& ode, const Tolerances& tol = {});

/// exp((2n+1) pi / (b1 - b2)) for n in [n_lo, n_hi]: zeros of cos(((b1-b2)/2) ln z).
std::vector<Complex> witness_zeros(double b1, double b2, int n_lo, int n_hi);

/// z^(a + i(b1+b2)/2) cos(((b1-b2)/2) ln z), principal branch.
Complex witness_leading_term(double a, double b1, double b2, Complex z);

}  // namespace nonosc
