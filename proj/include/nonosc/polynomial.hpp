#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace nonosc {

using Complex = std::complex<double>;

/// Dense univariate polynomial with complex coefficients.
///
/// `coeffs()[i]` multiplies z^i. The zero polynomial has no coefficients, so
/// the last stored coefficient is always nonzero. Trimming removes exact
/// zeros only; callers that need a numerical cut-off use `trimmed(eps)`.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Complex> coeffs);
    explicit Polynomial(std::vector<Complex> coeffs);

    static Polynomial constant(Complex c);
    static Polynomial monomial(Complex c, std::size_t power);
    /// (z - root)
    static Polynomial linear_factor(Complex root);

    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Complex leading() const noexcept { return coeffs_.empty() ? Complex{} : coeffs_.back(); }
    Complex operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Complex{}; }

    /// Horner evaluation.
    Complex operator()(Complex z) const noexcept;

    /// Largest |coefficient|; 0 for the zero polynomial.
    double max_abs_coeff() const noexcept;
    /// Sum |a_i| r^i, the natural rounding scale for evaluation at |z| = r.
    double abs_eval(double r) const noexcept;
    /// Lowest power with a nonzero coefficient; -1 for the zero polynomial.
    int valuation() const noexcept;

    Polynomial derivative() const;
    /// Taylor coefficients at `center`: p(center + t) = sum_i out[i] t^i.
    std::vector<Complex> taylor_at(Complex center) const;
    /// p(center + t) as a polynomial in t.
    Polynomial shifted(Complex center) const;
    /// p(a t + b) as a polynomial in t.
    Polynomial compose_affine(Complex a, Complex b) const;
    /// z^deg p(1/z) with deg = degree().
    Polynomial reversed() const;
    /// Divide by z^n, dropping the n lowest coefficients.
    Polynomial shift_down(std::size_t n) const;
    /// Synthetic division by (z - root), discarding the remainder.
    Polynomial deflate(Complex root) const;
    /// Zero every coefficient whose modulus is at most eps * max_abs_coeff().
    Polynomial trimmed(double eps) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(Complex scale);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, Complex s) { return a *= s; }
    friend Polynomial operator*(Complex s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= Complex{-1.0, 0.0}; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Complex> coeffs_;
};

/// Falling factorial x(x-1)...(x-n+1) as a polynomial in x.
Polynomial falling_factorial(std::size_t n);

/// True when every coefficient pair agrees within `tol * max(1, scale)`.
bool approx_equal(const Polynomial& a, const Polynomial& b, double tol);

}  // namespace nonosc
