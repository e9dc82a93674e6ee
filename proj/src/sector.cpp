#include "nonosc/sector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nonosc/cover.hpp"
#include "nonosc/errors.hpp"
#include "nonosc/roots.hpp"

namespace nonosc {

LogChart::LogChart(const LinearODE& ode, const Point& p, const Tolerances& tol) {
    if (classify_point(ode, p, tol).kind == PointKind::Irregular)
        throw Error(ErrorKind::NotFuchsianAtPoint, "the point is an irregular singular point");
    const LinearODE chart = p.is_infinity() ? moebius_invert(ode) : ode;
    const Complex center = p.is_infinity() ? Complex{} : p.value();
    k_ = chart.order();

    const auto local = [&](const Polynomial& q) {
        if (q.is_zero()) return std::pair{Polynomial{}, 0};
        const int m = multiplicity_at(q, center, tol);
        std::vector<Complex> c = q.taylor_at(center);
        for (int i = 0; i < m && i < static_cast<int>(c.size()); ++i) c[static_cast<std::size_t>(i)] = Complex{};
        return std::pair{Polynomial(std::move(c)), m};
    };
    const auto [lead, m_k] = local(chart.leading());
    denom_ = lead.shift_down(static_cast<std::size_t>(m_k));
    for (int j = 0; j < k_; ++j) {
        const Polynomial pj = local(chart.coeff(j)).first;
        // t^{k-j} P_j / t^{m_k}; the shift is non-negative at a Fuchsian point.
        const int shift = k_ - j - m_k;
        numer_.push_back(shift >= 0 ? pj * Polynomial::monomial(1.0, static_cast<std::size_t>(shift))
                                    : pj.shift_down(static_cast<std::size_t>(-shift)));
    }
    for (int j = 0; j <= k_; ++j) stirling_.push_back(falling_factorial(static_cast<std::size_t>(j)).coeffs());
    if (denom_.degree() >= 1)
        for (const auto& r : poly_roots(denom_, tol).entries) obstacles_.push_back(r.location);
}

std::vector<Complex> LogChart::coefficients(Complex t) const {
    std::vector<Complex> b(static_cast<std::size_t>(k_), Complex{});
    const Complex d = denom_(t);
    for (int j = 0; j < k_; ++j) {
        const Complex q = numer_[static_cast<std::size_t>(j)](t) / d;
        const auto& s = stirling_[static_cast<std::size_t>(j)];
        for (std::size_t m = 0; m < s.size(); ++m) b[m] += q * s[m];
    }
    // theta^m coefficients of the leading falling factorial, below theta^k.
    const auto& s = stirling_[static_cast<std::size_t>(k_)];
    for (std::size_t m = 0; m < b.size(); ++m) b[m] += s[m];
    return b;
}

SectorBound sector_zero_bound(const LinearODE& ode, const Point& p, double alpha, double beta, const Tolerances& tol,
                              const SectorOptions& opts) {
    if (alpha < 0.0) throw Error(ErrorKind::InvalidArgument, "alpha must be non-negative");
    if (opts.grid < 2 || !(opts.depth > 0.0)) throw Error(ErrorKind::InvalidArgument, "invalid sampling options");
    const LogChart chart(ode, p, tol);
    const ExponentSet exps = characteristic_exponents(ode, p, tol);

    SectorBound out;
    out.k = chart.order();
    out.exponents = exps.exponents;

    // Distinct exponents sorted by real part; ties within the band are fatal.
    std::vector<Exponent> sorted = exps.exponents;
    std::sort(sorted.begin(), sorted.end(),
              [](const Exponent& a, const Exponent& b) { return a.value.real() < b.value.real(); });
    double spread = 0.0;
    for (const auto& a : sorted)
        for (const auto& b : sorted) spread = std::max(spread, std::abs(a.value - b.value));
    const double band = tol.real_part_tie_tol * std::max(1.0, spread);
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const Complex d = sorted[i].value - sorted[i - 1].value;
        if (std::abs(d.real()) <= band)
            throw EqualRealPartsError(i - 1, i, "exponents share a real part at the point");
        out.theta = std::max(out.theta, 1.0 / std::abs(d.real()));
        out.xi = std::max(out.xi, std::abs(d.imag() / d.real()));
    }

    const double radius = std::exp(beta);
    for (Complex r : chart.obstacles())
        if (std::abs(r) <= radius && (alpha >= std::numbers::pi || std::abs(std::arg(r)) <= alpha))
            throw Error(ErrorKind::InvalidArgument, "the sector contains another singular point");

    const std::vector<Complex> limit = chart.limits();
    double c = 0.0;
    double c_eps = 0.0;
    for (Complex b : limit) c = std::max(c, std::abs(b));
    const int nv = alpha == 0.0 ? 1 : opts.grid;
    for (int iu = 0; iu < opts.grid; ++iu) {
        const double u = beta - opts.depth + opts.depth * iu / (opts.grid - 1);
        for (int iv = 0; iv < nv; ++iv) {
            const double v = nv == 1 ? 0.0 : -alpha + 2.0 * alpha * iv / (nv - 1);
            const Complex t = std::exp(Complex{u, v});
            const std::vector<Complex> b = chart.coefficients(t);
            for (std::size_t m = 0; m < b.size(); ++m) {
                c = std::max(c, std::abs(b[m]));
                c_eps = std::max(c_eps, std::abs(b[m] - limit[m]) / std::abs(t));
            }
        }
    }
    out.coefficient_bound_sampled = !(opts.coefficient_bound && opts.decay_constant);
    out.coefficient_bound = opts.coefficient_bound.value_or(c);
    out.decay_constant = opts.decay_constant.value_or(c_eps);
    out.c_eq = out.decay_constant == 0.0 ? 0.0 : perturbation_constant(out.k, out.theta, alpha, beta, out.decay_constant);

    const double k = out.k;
    out.cover_width = k * k * (k + 1) *
                          (4.0 * out.theta * std::log(k) + 4.0 * alpha * out.xi + 4.0 * alpha +
                           4.0 * std::max(1.0, out.theta) * out.c_eq) +
                      8.0 * k * k * out.theta;
    out.ell = 2.0 * out.cover_width + 4.0 * (k + k * k + k * k * k) * alpha;
    out.bound = vallee_poussin_box_bound(out.k, out.ell, out.coefficient_bound);
    return out;
}

}  // namespace nonosc
