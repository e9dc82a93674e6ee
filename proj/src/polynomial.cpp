#include "nonosc/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace nonosc {

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(Complex c) { return Polynomial{c}; }

Polynomial Polynomial::monomial(Complex c, std::size_t power) {
    std::vector<Complex> v(power + 1, Complex{});
    v[power] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(Complex root) { return Polynomial{-root, Complex{1.0, 0.0}}; }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Complex Polynomial::operator()(Complex z) const noexcept {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double Polynomial::max_abs_coeff() const noexcept {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double Polynomial::abs_eval(double r) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

int Polynomial::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != Complex{}) return static_cast<int>(i);
    return -1;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
}

std::vector<Complex> Polynomial::taylor_at(Complex center) const {
    // Repeated synthetic division (Horner shift).
    std::vector<Complex> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) c[j - 1] += center * c[j];
    return c;
}

Polynomial Polynomial::shifted(Complex center) const { return Polynomial(taylor_at(center)); }

Polynomial Polynomial::compose_affine(Complex a, Complex b) const {
    // p(a t + b) = sum_i taylor_i(b) (a t)^i
    std::vector<Complex> c = taylor_at(b);
    Complex power{1.0, 0.0};
    for (auto& ci : c) {
        ci *= power;
        power *= a;
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::reversed() const {
    std::vector<Complex> c(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(c));
}

Polynomial Polynomial::shift_down(std::size_t n) const {
    if (n >= coeffs_.size()) return {};
    return Polynomial(std::vector<Complex>(coeffs_.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.end()));
}

Polynomial Polynomial::deflate(Complex root) const {
    if (coeffs_.size() <= 1) return {};
    const std::size_t n = coeffs_.size() - 1;
    std::vector<Complex> q(n);
    Complex acc = coeffs_[n];
    for (std::size_t i = n; i-- > 0;) {
        q[i] = acc;
        acc = acc * root + coeffs_[i];
    }
    return Polynomial(std::move(q));
}

Polynomial Polynomial::trimmed(double eps) const {
    const double cut = eps * max_abs_coeff();
    std::vector<Complex> c = coeffs_;
    for (auto& ci : c)
        if (std::abs(ci) <= cut) ci = Complex{};
    return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Complex> r(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * other.coeffs_[j];
    coeffs_ = std::move(r);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(Complex scale) {
    for (auto& c : coeffs_) c *= scale;
    trim();
    return *this;
}

Polynomial falling_factorial(std::size_t n) {
    Polynomial p{Complex{1.0, 0.0}};
    for (std::size_t i = 0; i < n; ++i) p *= Polynomial::linear_factor(Complex{static_cast<double>(i), 0.0});
    return p;
}

bool approx_equal(const Polynomial& a, const Polynomial& b, double tol) {
    const double scale = std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(a[i] - b[i]) > tol * scale) return false;
    return true;
}

}  // namespace nonosc
