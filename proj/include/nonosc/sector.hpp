#pragma once

#include <optional>
#include <vector>

#include "nonosc/fuchs.hpp"

namespace nonosc {

/// The equation near a Fuchsian point p rewritten for y(p + e^zeta):
/// sum_m b_m(t) d^m y / d zeta^m = 0 with t = e^zeta and b_k = 1.
class LogChart {
public:
    LogChart(const LinearODE& ode, const Point& p, const Tolerances& tol = {});

    int order() const noexcept { return k_; }
    /// b_0(t) .. b_{k-1}(t).
    std::vector<Complex> coefficients(Complex t) const;
    /// Values at t = 0 (zeta -> -infinity): the constant-coefficient limit.
    std::vector<Complex> limits() const { return coefficients(Complex{}); }
    /// Zeros of the normalised leading coefficient in t; other singular points.
    const std::vector<Complex>& obstacles() const noexcept { return obstacles_; }

private:
    int k_ = 0;
    std::vector<Polynomial> numer_;  // t^{k-j} P_j(p+t) / t^{m_k}
    Polynomial denom_;               // P_k(p+t) / t^{m_k}
    std::vector<std::vector<Complex>> stirling_;  // falling factorial coefficients
    std::vector<Complex> obstacles_;
};

struct SectorOptions {
    int grid = 64;           // samples per axis of the chart rectangle
    double depth = 40.0;     // sampled u range is [beta - depth, beta]
    std::optional<double> coefficient_bound;  // replaces the sampled C
    std::optional<double> decay_constant;     // replaces the sampled C_eps
};

struct SectorBound {
    double bound = 0.0;
    int k = 0;
    std::vector<Exponent> exponents;
    double theta = 0.0;
    double xi = 0.0;
    double coefficient_bound = 0.0;  // C
    double decay_constant = 0.0;     // C_eps with |b_m(t) - b_m(0)| <= C_eps |t|
    double c_eq = 0.0;
    double cover_width = 0.0;
    double ell = 0.0;
    bool coefficient_bound_sampled = true;  // C (and C_eps) came from sampling: not rigorous
};

/// Zero bound for solutions in {|z - p| <= e^beta, |arg(z - p)| <= alpha}.
/// Throws NotFuchsianAtPoint, EqualRealPartsError, and BetaNotNegative when the
/// perturbation is nonzero and beta >= 0.
SectorBound sector_zero_bound(const LinearODE& ode, const Point& p, double alpha, double beta,
                              const Tolerances& tol = {}, const SectorOptions& opts = {});

}  // namespace nonosc
