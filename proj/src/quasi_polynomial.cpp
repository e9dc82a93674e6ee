#include "nonosc/quasi_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "nonosc/errors.hpp"
#include "nonosc/path.hpp"
#include "nonosc/roots.hpp"

namespace nonosc {

QuasiPolynomial::QuasiPolynomial(std::vector<ExpTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "quasi-polynomial needs at least one term");
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff.is_zero()) throw Error(ErrorKind::InvalidArgument, "quasi-polynomial term with zero coefficient");
        for (std::size_t j = 0; j < i; ++j)
            if (terms_[i].lambda == terms_[j].lambda)
                throw Error(ErrorKind::InvalidArgument, "quasi-polynomial with repeated exponent");
        derivs_.push_back(terms_[i].coeff.derivative());
    }
}

int QuasiPolynomial::dimension() const noexcept {
    int k = 0;
    for (const auto& t : terms_) k += t.coeff.degree() + 1;
    return k;
}

bool QuasiPolynomial::simple() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const ExpTerm& t) { return t.coeff.degree() == 0; });
}

std::vector<Complex> QuasiPolynomial::lambdas() const {
    std::vector<Complex> out;
    for (const auto& t : terms_) out.push_back(t.lambda);
    return out;
}

Complex QuasiPolynomial::operator()(Complex z) const {
    Complex acc{};
    for (const auto& t : terms_) acc += t.coeff(z) * std::exp(t.lambda * z);
    return acc;
}

QuasiPolynomial::Scaled QuasiPolynomial::scaled(Complex z) const {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms_) m = std::max(m, (t.lambda * z).real());
    Scaled out{Complex{}, Complex{}, m, 0.0};
    for (std::size_t j = 0; j < terms_.size(); ++j) {
        const ExpTerm& t = terms_[j];
        const Complex e = std::exp(t.lambda * z - m);
        const Complex a = t.coeff(z);
        out.value += a * e;
        out.derivative += (derivs_[j](z) + t.lambda * a) * e;
        out.abs_sum += std::abs(a) * std::abs(e);
    }
    return out;
}

QuasiPolynomial QuasiPolynomial::conjugated() const {
    std::vector<ExpTerm> out;
    for (const auto& t : terms_) {
        std::vector<Complex> c;
        for (const auto& a : t.coeff.coeffs()) c.push_back(std::conj(a));
        out.push_back({std::conj(t.lambda), Polynomial(std::move(c))});
    }
    return QuasiPolynomial(std::move(out));
}

QuasiPolynomial from_characteristic(std::span<const Complex> eq_coeffs, std::span<const Complex> basis_weights,
                                    const Tolerances& tol) {
    const Polynomial chi(std::vector<Complex>(eq_coeffs.begin(), eq_coeffs.end()));
    if (chi.degree() < 0) throw Error(ErrorKind::InvalidArgument, "characteristic polynomial is zero");
    const auto k = static_cast<std::size_t>(chi.degree());
    if (basis_weights.size() != k)
        throw Error(ErrorKind::InvalidArgument, "basis_weights must have one entry per solution basis element");
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "order-zero equation has no nontrivial solutions");

    std::vector<ExpTerm> terms;
    std::size_t w = 0;
    for (const auto& r : poly_roots(chi, tol).entries) {
        std::vector<Complex> a(basis_weights.begin() + static_cast<std::ptrdiff_t>(w),
                               basis_weights.begin() + static_cast<std::ptrdiff_t>(w) + r.multiplicity);
        w += static_cast<std::size_t>(r.multiplicity);
        Polynomial coeff(std::move(a));
        if (!coeff.is_zero()) terms.push_back({r.location, std::move(coeff)});
    }
    if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "all basis weights are zero");
    return QuasiPolynomial(std::move(terms));
}

std::vector<double> qp_term_logmods(const QuasiPolynomial& qp, Complex z) {
    std::vector<double> out;
    for (const auto& t : qp.terms()) {
        const double a = std::abs(t.coeff(z));
        out.push_back(a == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(a) + (t.lambda * z).real());
    }
    return out;
}

SpectrumStats spectrum_stats(std::span<const Complex> lambdas) {
    std::vector<std::size_t> order(lambdas.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lambdas[a].real() != lambdas[b].real()) return lambdas[a].real() < lambdas[b].real();
        return lambdas[a].imag() < lambdas[b].imag();
    });

    SpectrumStats s;
    for (std::size_t i = 0; i < order.size(); ++i) {
        s.sorted_real_parts.push_back(lambdas[order[i]].real());
        if (i == 0) continue;
        const Complex d = lambdas[order[i]] - lambdas[order[i - 1]];
        if (d.real() == 0.0)
            throw EqualRealPartsError(order[i - 1], order[i],
                                      "exponents " + std::to_string(order[i - 1]) + " and " + std::to_string(order[i]) +
                                          " have equal real parts");
        s.theta = std::max(s.theta, 1.0 / std::abs(d.real()));
        s.xi = std::max(s.xi, std::abs(d.imag() / d.real()));
    }
    const PathLength path = shortest_path_length(lambdas);
    s.path_length = path.length;
    s.path_heuristic = path.heuristic;
    return s;
}

SpectrumStats spectrum_stats(const QuasiPolynomial& qp) {
    const std::vector<Complex> l = qp.lambdas();
    return spectrum_stats(std::span<const Complex>(l));
}

double strip_bound_simple(const QuasiPolynomial& qp, double alpha) {
    if (!qp.simple()) throw Error(ErrorKind::NotSimpleExponents, "strip bound requires simple exponents");
    if (alpha < 0.0) throw Error(ErrorKind::InvalidArgument, "alpha must be non-negative");
    const SpectrumStats s = spectrum_stats(qp);
    const double km1 = qp.dimension() - 1;
    return km1 * km1 +
           (2.0 / std::numbers::pi) * km1 * s.path_length * (alpha * (s.xi + 2.0) + s.theta * std::log(4.0));
}

double ky_bound(const QuasiPolynomial& qp, double diam) {
    if (diam < 0.0) throw Error(ErrorKind::InvalidArgument, "diameter must be non-negative");
    const std::vector<Complex> l = qp.lambdas();
    return (qp.dimension() - 1) + shortest_path_length(l).length * diam / std::numbers::pi;
}

double vallee_poussin_box_bound(int k, double ell, double C) {
    if (k < 1 || ell < 0.0 || C < 0.0)
        throw Error(ErrorKind::InvalidArgument, "vallee_poussin_box_bound needs k >= 1, ell >= 0, C >= 0");
    return 2.0 * (k + 1) + (k + 1) * ell * C / std::log(9.0 / 4.0);
}

}  // namespace nonosc
