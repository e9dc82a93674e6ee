#include "nonosc/ode.hpp"

#include <algorithm>
#include <limits>

#include "nonosc/errors.hpp"
#include "nonosc/fuchs.hpp"
#include "nonosc/roots.hpp"

namespace nonosc {

LinearODE::LinearODE(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) throw Error(ErrorKind::OrderZero, "equation has no nonzero coefficient");
}

LinearODE LinearODE::scaled(Complex factor) const {
    std::vector<Polynomial> c = coeffs_;
    for (auto& p : c) p *= factor;
    return LinearODE(std::move(c));
}

double LinearODE::scale() const noexcept {
    double m = 0.0;
    for (const auto& p : coeffs_) m = std::max(m, p.max_abs_coeff());
    return m;
}

LinearODE normalize(const LinearODE& ode, const Tolerances& tol) {
    const RootSet common = common_roots(ode.coeffs(), tol);
    if (common.empty()) return ode;
    std::vector<Polynomial> c = ode.coeffs();
    for (const auto& r : common.entries)
        for (int i = 0; i < r.multiplicity; ++i)
            for (auto& p : c) p = p.deflate(r.location);
    return LinearODE(std::move(c));
}

LinearODE moebius_invert(const LinearODE& ode) {
    const auto k = static_cast<std::size_t>(ode.order());
    const Polynomial minus_w2 = Polynomial::monomial(Complex{-1.0, 0.0}, 2);

    // ops[j][m]: coefficient of d^m/dw^m in d^j/dz^j, using d/dz = -w^2 d/dw.
    std::vector<std::vector<Polynomial>> ops(k + 1, std::vector<Polynomial>(k + 1));
    ops[0][0] = Polynomial{Complex{1.0, 0.0}};
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t m = 0; m <= j; ++m) {
            if (ops[j][m].is_zero()) continue;
            ops[j + 1][m] += minus_w2 * ops[j][m].derivative();
            ops[j + 1][m + 1] += minus_w2 * ops[j][m];
        }

    int top_degree = 0;
    for (const auto& p : ode.coeffs()) top_degree = std::max(top_degree, p.degree());

    const auto moduli = [](const Polynomial& p) {
        std::vector<Complex> c;
        for (Complex a : p.coeffs()) c.emplace_back(std::abs(a), 0.0);
        return Polynomial(std::move(c));
    };
    std::vector<Polynomial> out(k + 1), magnitude(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
        const Polynomial& pj = ode.coeffs()[j];
        if (pj.is_zero()) continue;
        // w^D P_j(1/w)
        const Polynomial lifted =
            pj.reversed() * Polynomial::monomial(Complex{1.0, 0.0}, static_cast<std::size_t>(top_degree - pj.degree()));
        for (std::size_t m = 0; m <= j; ++m)
            if (!ops[j][m].is_zero()) {
                out[m] += lifted * ops[j][m];
                magnitude[m] += moduli(lifted) * moduli(ops[j][m]);
            }
    }
    // Coefficients that cancelled down to rounding are exact zeros.
    for (std::size_t m = 0; m <= k; ++m) {
        std::vector<Complex> c = out[m].coeffs();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (std::abs(c[i]) <= 64.0 * std::numeric_limits<double>::epsilon() * magnitude[m][i].real()) c[i] = 0.0;
        out[m] = Polynomial(std::move(c));
    }

    int common_power = std::numeric_limits<int>::max();
    for (const auto& q : out)
        if (!q.is_zero()) common_power = std::min(common_power, q.valuation());
    for (auto& q : out) q = q.shift_down(static_cast<std::size_t>(common_power));
    return LinearODE(std::move(out));
}

LinearODE affine_pullback(const LinearODE& ode, Complex a, Complex b) {
    if (a == Complex{}) throw Error(ErrorKind::InvalidArgument, "affine_pullback: a must be nonzero");
    std::vector<Polynomial> c;
    Complex inv_power{1.0, 0.0};
    for (const auto& p : ode.coeffs()) {
        c.push_back(p.compose_affine(a, b) * inv_power);
        inv_power /= a;
    }
    return LinearODE(std::move(c));
}

SingularSet singular_points(const LinearODE& ode, const Tolerances& tol) {
    SingularSet out;
    if (ode.leading().degree() >= 1)
        for (const auto& r : poly_roots(ode.leading(), tol).entries) out.points.push_back(Point::finite(r.location));
    if (classify_point(ode, Point::infinity(), tol).kind != PointKind::Ordinary)
        out.points.push_back(Point::infinity());
    return out;
}

LinearODE monic_form(const LinearODE& ode) { return ode.scaled(1.0 / ode.leading().leading()); }

}  // namespace nonosc
