#include "nonosc/cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nonosc/errors.hpp"
#include "nonosc/roots.hpp"

namespace nonosc {

namespace {

const double kLn4 = std::log(4.0);
constexpr double kInf = std::numeric_limits<double>::infinity();

double union_width(const std::vector<Box>& boxes) {
    double w = 0.0;
    for (const auto& b : boxes) w += b.width();
    return w;
}

std::vector<Box> strip_boxes(const std::vector<Interval>& us, double alpha) {
    std::vector<Box> out;
    for (const auto& i : merge_intervals(us)) out.push_back({i.lo, i.hi, 0.0 - alpha, alpha});
    return out;
}

}  // namespace

std::optional<std::size_t> is_dominant_at(const QuasiPolynomial& qp, Complex z) {
    const std::vector<double> logs = qp_term_logmods(qp, z);
    const double top = *std::max_element(logs.begin(), logs.end());
    if (top == -kInf) return std::nullopt;
    std::vector<double> mods;
    for (double l : logs) mods.push_back(std::exp(l - top));
    const auto j = static_cast<std::size_t>(std::max_element(mods.begin(), mods.end()) - mods.begin());
    double others = 0.0;
    for (std::size_t i = 0; i < mods.size(); ++i)
        if (i != j) others += mods[i];
    if (mods[j] > 0.0 && mods[j] >= others) return j;
    return std::nullopt;
}

bool gap_dominance_check(const QuasiPolynomial& qp, double u) {
    if (!qp.simple()) throw Error(ErrorKind::NotSimpleExponents, "gap dominance needs constant coefficients");
    spectrum_stats(qp);
    const std::vector<MajorantPoint> family = majorant_family(qp);
    const ConcaveMajorant m = shift_majorant(least_concave_majorant(family), u);
    for (std::size_t i = 0; i + 1 < m.points.size(); ++i)
        if (!(std::abs(m.eval(m.points[i + 1].mu) - m.eval(m.points[i].mu)) >= kLn4)) return false;
    return true;
}

std::vector<Interval> merge_intervals(std::vector<Interval> in) {
    std::sort(in.begin(), in.end(), [](const Interval& a, const Interval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });
    std::vector<Interval> out;
    for (const auto& i : in) {
        if (!out.empty() && i.lo <= out.back().hi + 1e-12 * (1.0 + std::abs(out.back().hi)))
            out.back().hi = std::max(out.back().hi, i.hi);
        else
            out.push_back(i);
    }
    return out;
}

SlopeSet slope_set(const QuasiPolynomial& qp, double alpha, double grid_step) {
    if (alpha < 0.0) throw Error(ErrorKind::InvalidArgument, "alpha must be non-negative");
    if (!(grid_step > 0.0)) throw Error(ErrorKind::InvalidArgument, "grid_step must be positive");
    if (!qp.simple()) throw Error(ErrorKind::NotSimpleExponents, "slope set needs constant coefficients");
    const SpectrumStats stats = spectrum_stats(qp);

    SlopeSet out;
    const int k = static_cast<int>(qp.size());
    if (k == 1) return out;
    const int n = alpha == 0.0 ? 0 : static_cast<int>(std::ceil(2.0 * alpha / grid_step));
    const double h = n == 0 ? 0.0 : 2.0 * alpha / n;
    const double pad = 0.5 * stats.xi * h;

    std::vector<Interval> raw;
    for (int i = 0; i <= n; ++i) {
        const double v = n == 0 ? 0.0 : -alpha + i * h;
        const std::vector<MajorantPoint> family = majorant_family(qp, v);
        for (double s : least_concave_majorant(family).slopes) raw.push_back({s - pad, s + pad});
    }
    out.intervals = merge_intervals(std::move(raw));
    out.grid_step = h;
    out.padding = (k - 1) * stats.xi * h;
    return out;
}

const char* to_string(CoverKind kind) {
    switch (kind) {
        case CoverKind::Simple: return "Simple";
        case CoverKind::Multiple: return "Multiple";
        case CoverKind::Perturbed: return "Perturbed";
    }
    return "?";
}

bool BoxCover::contains(Complex z, double slack) const noexcept {
    return std::any_of(boxes.begin(), boxes.end(), [&](const Box& b) { return b.contains(z, slack); });
}

BoxCover excluded_boxes_simple(const QuasiPolynomial& qp, double alpha, double grid_step) {
    const SlopeSet slopes = slope_set(qp, alpha, grid_step);
    const SpectrumStats stats = spectrum_stats(qp);
    const int k = static_cast<int>(qp.size());
    const double reach = kLn4 * stats.theta;

    std::vector<Interval> us;
    for (const auto& s : slopes.intervals) us.push_back({-s.hi - reach, -s.lo + reach});

    BoxCover c;
    c.kind = CoverKind::Simple;
    c.boxes = strip_boxes(us, alpha);
    c.total_width = union_width(c.boxes);
    c.count_bound = k - 1;
    c.width_bound = 2.0 * alpha * (k - 1) * stats.xi + 2.0 * (k - 1) * stats.theta * kLn4;
    c.padding = slopes.padding;
    return c;
}

double RatioDecomposition::log_ratio(Complex z) const {
    return std::log(std::abs(num(z))) - std::log(std::abs(den(z))) + theta * z.real() - z.imag() * xi * theta;
}

RatioDecomposition ratio_decomposition(const QuasiPolynomial& qp, std::size_t j, std::size_t jp,
                                       const Tolerances& tol) {
    if (j >= qp.size() || jp >= qp.size() || j == jp)
        throw Error(ErrorKind::InvalidArgument, "ratio_decomposition needs two distinct term indices");
    const ExpTerm& a = qp.terms()[j];
    const ExpTerm& b = qp.terms()[jp];
    RatioDecomposition r;
    r.first = j;
    r.second = jp;
    const Complex gap = a.lambda - b.lambda;
    r.theta = gap.real();
    if (r.theta == 0.0)
        throw EqualRealPartsError(j, jp, "terms " + std::to_string(j) + " and " + std::to_string(jp) +
                                             " have equal real parts");
    r.xi = gap.imag() / gap.real();
    r.num = a.coeff;
    r.den = b.coeff;
    const auto roots_of = [&](const Polynomial& p) {
        std::vector<Complex> out;
        if (p.degree() < 1) return out;
        for (const auto& root : poly_roots(p, tol).entries)
            for (int m = 0; m < root.multiplicity; ++m) out.push_back(root.location);
        return out;
    };
    r.num_roots = roots_of(a.coeff);
    r.den_roots = roots_of(b.coeff);
    r.log_lead_diff = std::log(std::abs(a.coeff.leading())) - std::log(std::abs(b.coeff.leading()));
    return r;
}

namespace {

// First point of (a, b) where the increasing function g reaches `target`,
// bracketed from the growth bound g' >= rate; `outer_left` picks the side of
// the final bracket that keeps the sublevel/superlevel set covered.
double crossing(const auto& g, double a, double b, double target, double rate, bool outer_left) {
    double u0 = std::isfinite(a) ? a : (std::isfinite(b) ? b : 0.0);
    double lo = u0;
    double hi = u0;
    const double g0 = g(u0);
    if (g0 < target) {
        double step = (target - g0) / rate * (1.0 + 1e-9) + 1e-12;
        hi = std::min(u0 + step, b);
        for (int i = 0; i < 200 && hi < b && g(hi) < target; ++i) {
            step *= 2.0;
            hi = std::min(u0 + step, b);
        }
        if (g(hi) < target) return b;
    } else {
        if (std::isfinite(a) && u0 == a) return a;
        double step = (g0 - target) / rate * (1.0 + 1e-9) + 1e-12;
        lo = std::max(u0 - step, a);
        for (int i = 0; i < 200 && lo > a && g(lo) >= target; ++i) {
            step *= 2.0;
            lo = std::max(u0 - step, a);
        }
        if (g(lo) >= target) return a;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-9; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < target ? lo : hi) = mid;
    }
    return outer_left ? lo : hi;
}

BoxCover multiple_cover(const QuasiPolynomial& qp, double alpha, double extra, const Tolerances& tol) {
    if (alpha < 0.0) throw Error(ErrorKind::InvalidArgument, "alpha must be non-negative");
    const SpectrumStats stats = spectrum_stats(qp);
    const int k = qp.dimension();
    const double half_strip = 4.0 * k * stats.theta;

    std::vector<Interval> w;
    for (const auto& t : qp.terms()) {
        if (t.coeff.degree() < 1) continue;
        for (const auto& r : poly_roots(t.coeff, tol).entries)
            w.push_back({r.location.real() - half_strip, r.location.real() + half_strip});
    }
    w = merge_intervals(std::move(w));

    std::vector<std::pair<double, double>> components;
    double left = -kInf;
    for (const auto& s : w) {
        if (left < s.lo) components.push_back({left, s.lo});
        left = std::max(left, s.hi);
    }
    components.push_back({left, kInf});

    std::vector<Interval> us = w;
    for (std::size_t j = 0; j < qp.size(); ++j)
        for (std::size_t jp = j + 1; jp < qp.size(); ++jp) {
            const RatioDecomposition r = ratio_decomposition(qp, j, jp, tol);
            const double threshold =
                std::log(static_cast<double>(k)) + alpha * std::abs(r.xi * r.theta) + alpha * std::abs(r.theta) + extra;
            const double sign = r.theta > 0.0 ? 1.0 : -1.0;
            const auto g = [&](double u) { return sign * r.log_ratio(Complex{u, 0.0}); };
            const double rate = 0.5 * std::abs(r.theta);
            for (const auto& [a, b] : components) {
                if (std::isfinite(a) && g(a) > threshold) continue;
                if (std::isfinite(b) && g(b) < -threshold) continue;
                const double lo = crossing(g, a, b, -threshold, rate, true);
                const double hi = crossing(g, a, b, threshold, rate, false);
                if (lo <= hi) us.push_back({lo, hi});
            }
        }

    BoxCover c;
    c.kind = CoverKind::Multiple;
    c.boxes = strip_boxes(us, alpha);
    c.total_width = union_width(c.boxes);
    c.count_bound = k + k * k + k * k * k;
    c.width_bound = double(k) * k * (k + 1) *
                        (4.0 * stats.theta * std::log(static_cast<double>(k)) + 4.0 * alpha * stats.xi + 4.0 * alpha) +
                    8.0 * k * k * stats.theta;
    return c;
}

}  // namespace

BoxCover excluded_boxes_multiple(const QuasiPolynomial& qp, double alpha, const Tolerances& tol) {
    return multiple_cover(qp, alpha, 0.0, tol);
}

double exp_power_sup(int l, double alpha, double beta) {
    if (l < 0) throw Error(ErrorKind::InvalidArgument, "exponent must be non-negative");
    const auto value = [&](double u) { return std::exp(u) * std::pow(u * u + alpha * alpha, 0.5 * l); };
    if (l == 0) return std::exp(beta);
    double best = value(beta);
    // Critical points of u + (l/2) ln(u^2 + alpha^2): u^2 + l u + alpha^2 = 0.
    const double disc = double(l) * l - 4.0 * alpha * alpha;
    if (disc >= 0.0)
        for (double u : {0.5 * (-l - std::sqrt(disc)), 0.5 * (-l + std::sqrt(disc))})
            if (u <= beta) best = std::max(best, value(u));
    return best;
}

double perturbation_constant(int k, double theta, double alpha, double beta, double C) {
    if (!(beta < 0.0)) throw Error(ErrorKind::BetaNotNegative, "perturbation constant needs beta < 0");
    if (k < 1 || theta < 0.0 || alpha < 0.0 || C < 0.0)
        throw Error(ErrorKind::InvalidArgument, "perturbation constant needs k >= 1 and non-negative theta, alpha, C");
    if (C == 0.0) return 0.0;
    const int l_max = theta > 0.0 ? k : 0;
    double best = 0.0;
    for (int l = 0; l <= l_max; ++l) {
        const double factor = l == 0 ? 1.0 : std::pow(3.0 / (4.0 * k * theta), l);
        best = std::max(best, factor * std::pow(3.0, k - l) * exp_power_sup(l, alpha, beta));
    }
    return C * best;
}

double perturbation_constant(const QuasiPolynomial& qp, double alpha, double beta, double C) {
    return perturbation_constant(qp.dimension(), spectrum_stats(qp).theta, alpha, beta, C);
}

BoxCover excluded_boxes_perturbed(const QuasiPolynomial& qp, double alpha, double beta, double C,
                                  const Tolerances& tol) {
    const double c_eq = perturbation_constant(qp, alpha, beta, C);
    BoxCover c = multiple_cover(qp, alpha, c_eq, tol);
    c.kind = CoverKind::Perturbed;
    std::vector<Box> clipped;
    for (Box b : c.boxes) {
        if (b.u_lo > beta) continue;
        b.u_hi = std::min(b.u_hi, beta);
        clipped.push_back(b);
    }
    c.boxes = std::move(clipped);
    c.total_width = union_width(c.boxes);
    const SpectrumStats stats = spectrum_stats(qp);
    const int k = qp.dimension();
    c.width_bound += double(k) * k * (k + 1) * 4.0 * std::max(1.0, stats.theta) * c_eq;
    return c;
}

}  // namespace nonosc
