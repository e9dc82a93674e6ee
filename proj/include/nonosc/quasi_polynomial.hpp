#pragma once

#include <span>
#include <vector>

#include "nonosc/polynomial.hpp"
#include "nonosc/tolerances.hpp"

namespace nonosc {

/// One summand A(z) e^{lambda z}.
struct ExpTerm {
    Complex lambda;
    Polynomial coeff;
};

/// Exponential polynomial sum_j A_j(z) e^{lambda_j z} with pairwise distinct
/// lambdas and nonzero A_j. Its dimension is k = sum_j (deg A_j + 1).
class QuasiPolynomial {
public:
    /// Throws InvalidArgument on an empty list, a zero A_j or repeated lambdas.
    explicit QuasiPolynomial(std::vector<ExpTerm> terms);

    const std::vector<ExpTerm>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    int dimension() const noexcept;
    /// Every A_j is a constant.
    bool simple() const noexcept;
    std::vector<Complex> lambdas() const;

    Complex operator()(Complex z) const;

    /// f(z) and f'(z), both multiplied by e^{-M} with M = max_j Re(lambda_j z).
    /// The common positive factor cancels in f'/f and in arg f.
    struct Scaled {
        Complex value;
        Complex derivative;
        double log_scale;  // M
        double abs_sum;    // sum_j |A_j(z)| e^{Re(lambda_j z) - M}
    };
    Scaled scaled(Complex z) const;

    /// Conjugate function: z -> conj(f(conj z)).
    QuasiPolynomial conjugated() const;

private:
    std::vector<ExpTerm> terms_;
    std::vector<Polynomial> derivs_;  // A_j'
};

/// Roots of sum_j eq_coeffs[j] lambda^j give the exponents; basis_weights are
/// spread over z^0 .. z^{n_j} e^{lambda_j z} in ascending (real, imag) order
/// of the roots.
QuasiPolynomial from_characteristic(std::span<const Complex> eq_coeffs, std::span<const Complex> basis_weights,
                                    const Tolerances& tol = {});

/// ln|A_j(z)| + Re(lambda_j z) per term; -infinity where A_j(z) = 0.
std::vector<double> qp_term_logmods(const QuasiPolynomial& qp, Complex z);

struct SpectrumStats {
    double theta = 0.0;        // max 1/|Re gap| over consecutive exponents
    double xi = 0.0;           // max |Im gap / Re gap| over consecutive exponents
    double path_length = 0.0;  // shortest polygonal path through all exponents
    bool path_heuristic = false;
    std::vector<double> sorted_real_parts;
};

/// Statistics over the distinct lambdas sorted by real part. Throws
/// EqualRealPartsError naming the offending pair (indices into qp.terms()).
SpectrumStats spectrum_stats(const QuasiPolynomial& qp);
SpectrumStats spectrum_stats(std::span<const Complex> lambdas);

/// (k-1)^2 + (2/pi)(k-1) L [alpha(Xi+2) + Theta ln 4], simple exponents only.
double strip_bound_simple(const QuasiPolynomial& qp, double alpha);

/// k - 1 + L diam / pi for any convex domain of diameter `diam`.
double ky_bound(const QuasiPolynomial& qp, double diam);

/// 2(k+1) + (k+1) ell C / ln(9/4).
double vallee_poussin_box_bound(int k, double ell, double C);

}  // namespace nonosc
