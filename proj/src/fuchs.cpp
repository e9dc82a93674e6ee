#include "nonosc/fuchs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nonosc/errors.hpp"
#include "nonosc/roots.hpp"

namespace nonosc {

const char* to_string(PointKind kind) noexcept {
    switch (kind) {
        case PointKind::Ordinary: return "Ordinary";
        case PointKind::RegularSingular: return "RegularSingular";
        case PointKind::Irregular: return "Irregular";
    }
    return "Unknown";
}

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::GloballyNonOscillating: return "GloballyNonOscillating";
        case Verdict::Oscillating: return "Oscillating";
        case Verdict::Indeterminate: return "Indeterminate";
    }
    return "Unknown";
}

int ExponentSet::total_multiplicity() const noexcept {
    int total = 0;
    for (const auto& e : exponents) total += e.multiplicity;
    return total;
}

Complex ExponentSet::sum() const noexcept {
    Complex s{};
    for (const auto& e : exponents) s += e.value * static_cast<double>(e.multiplicity);
    return s;
}

namespace {

// The equation and the finite point at which to analyse it.
struct LocalView {
    LinearODE ode;
    Complex center;
};

LocalView local_view(const LinearODE& ode, const Point& p) {
    if (p.is_infinity()) return {moebius_invert(ode), Complex{}};
    return {ode, p.value()};
}

}  // namespace

PointClassification classify_point(const LinearODE& ode, const Point& p, const Tolerances& tol) {
    const LocalView view = local_view(ode, p);
    const int k = view.ode.order();
    const int lead_mult = multiplicity_at(view.ode.leading(), view.center, tol);

    PointClassification out;
    bool singular = false;
    bool irregular = false;
    for (int j = 1; j <= k; ++j) {
        const int m = multiplicity_at(view.ode.coeff(k - j), view.center, tol);
        const int pole = std::max(0, lead_mult - m);
        out.pole_orders.push_back(pole);
        if (pole > 0) singular = true;
        if (pole > j) irregular = true;
    }
    out.kind = irregular ? PointKind::Irregular : singular ? PointKind::RegularSingular : PointKind::Ordinary;
    return out;
}

Polynomial indicial_polynomial(const LinearODE& ode, const Point& p, const Tolerances& tol) {
    if (classify_point(ode, p, tol).kind == PointKind::Irregular)
        throw Error(ErrorKind::NotFuchsianAtPoint, "indicial polynomial requested at an irregular singular point");

    const LocalView view = local_view(ode, p);
    const int k = view.ode.order();
    const int lead_mult = multiplicity_at(view.ode.leading(), view.center, tol);
    const Complex lead_taylor = view.ode.leading().taylor_at(view.center)[static_cast<std::size_t>(lead_mult)];

    Polynomial out = falling_factorial(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
        const Polynomial& pj = view.ode.coeff(k - j);
        if (pj.is_zero()) continue;
        const int m = multiplicity_at(pj, view.center, tol);
        // (z-p)^j P_{k-j}/P_k ~ (z-p)^(j + m - lead_mult); only exponent 0 survives the limit.
        if (j + m - lead_mult != 0) continue;
        const Complex beta = pj.taylor_at(view.center)[static_cast<std::size_t>(m)] / lead_taylor;
        out += falling_factorial(static_cast<std::size_t>(k - j)) * beta;
    }
    return out;
}

ExponentSet characteristic_exponents(const LinearODE& ode, const Point& p, const Tolerances& tol) {
    const Polynomial ind = indicial_polynomial(ode, p, tol);
    ExponentSet out;
    if (ind.degree() < 1) return out;
    for (const auto& r : poly_roots(ind, tol).entries) out.exponents.push_back({r.location, r.multiplicity});
    return out;
}

namespace {

PointEvidence analyse_point(const LinearODE& ode, const Point& p, const Tolerances& tol) {
    PointEvidence ev;
    ev.point = p;
    ev.classification = classify_point(ode, p, tol);
    if (ev.classification.kind == PointKind::Irregular) {
        ev.note = p.is_infinity() ? "irregular singular point at infinity" : "irregular singular point";
        return ev;
    }
    ev.exponents = characteristic_exponents(ode, p, tol);
    const auto& ex = ev.exponents->exponents;

    double spread = 0.0;
    for (std::size_t i = 0; i < ex.size(); ++i)
        for (std::size_t j = i + 1; j < ex.size(); ++j) spread = std::max(spread, std::abs(ex[i].value - ex[j].value));
    ev.tie_band = tol.real_part_tie_tol * std::max(1.0, spread);

    for (std::size_t i = 0; i < ex.size(); ++i)
        for (std::size_t j = i + 1; j < ex.size(); ++j) {
            const double dre = std::abs(ex[i].value.real() - ex[j].value.real());
            const double dim = std::abs(ex[i].value.imag() - ex[j].value.imag());
            ev.min_real_gap = ev.min_real_gap ? std::min(*ev.min_real_gap, dre) : dre;
            if (dre > ev.tie_band) continue;
            if (dim > ev.tie_band) {
                if (!ev.tie) {
                    ev.tie = TiedPair{ex[i].value.real(), ex[i].value.imag(), ex[j].value.imag()};
                    ev.note = "distinct exponents share a real part";
                }
            } else {
                ev.indeterminate = true;
                if (ev.note.empty()) ev.note = "exponents indistinguishable within the tie band";
            }
        }
    return ev;
}

}  // namespace

NonOscillationVerdict decide(const LinearODE& ode, const Tolerances& tol) {
    tol.validate();
    NonOscillationVerdict out;
    const SingularSet sing = singular_points(ode, tol);

    bool oscillating = false;
    bool indeterminate = false;
    bool fuchsian = true;
    Complex exponent_total{};
    double exponent_abs_total = 0.0;
    for (const auto& p : sing.points) {
        PointEvidence ev = analyse_point(ode, p, tol);
        if (ev.classification.kind == PointKind::Irregular) {
            oscillating = true;
            fuchsian = false;
        } else {
            if (ev.tie) oscillating = true;
            if (ev.indeterminate) indeterminate = true;
            exponent_total += ev.exponents->sum();
            for (const auto& e : ev.exponents->exponents) exponent_abs_total += std::abs(e.value) * e.multiplicity;
        }
        out.evidence.push_back(std::move(ev));
    }

    out.verdict = oscillating      ? Verdict::Oscillating
                  : indeterminate ? Verdict::Indeterminate
                                  : Verdict::GloballyNonOscillating;

    if (fuchsian) {
        const double k = ode.order();
        const double d = static_cast<double>(sing.cardinality());
        const double expected = (d - 2.0) * k * (k - 1.0) / 2.0;
        const double residual = std::abs(exponent_total - Complex{expected, 0.0});
        out.fuchs_relation_residual = residual;
        out.fuchs_relation_warning = residual > 1e-6 * std::max(1.0, exponent_abs_total);
    }
    return out;
}

std::vector<Complex> witness_zeros(double b1, double b2, int n_lo, int n_hi) {
    if (b1 == b2) throw Error(ErrorKind::DegenerateExponents, "witness_zeros: b1 and b2 coincide");
    std::vector<Complex> out;
    for (int n = n_lo; n <= n_hi; ++n)
        out.emplace_back(std::exp((2.0 * n + 1.0) * std::numbers::pi / (b1 - b2)), 0.0);
    return out;
}

Complex witness_leading_term(double a, double b1, double b2, Complex z) {
    const Complex log_z = std::log(z);
    const Complex power = std::exp(Complex{a, (b1 + b2) / 2.0} * log_z);
    return power * std::cos((b1 - b2) / 2.0 * log_z);
}

}  // namespace nonosc
