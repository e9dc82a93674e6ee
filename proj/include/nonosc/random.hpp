#pragma once

#include <cstdint>
#include <random>

#include "nonosc/quasi_polynomial.hpp"

namespace nonosc {

struct RandomSpec {
    std::uint64_t seed = 0;
    int k_min = 1;
    int k_max = 4;
    double re_lo = -3.0, re_hi = 3.0;  // exponent box
    double im_lo = -3.0, im_hi = 3.0;
    double min_gap = 0.3;              // between consecutive real parts
    double log_mod_lo = -1.0, log_mod_hi = 1.0;  // ln|coefficient|
    int count = 100;

    /// Throws InvalidArgument on empty ranges or a non-positive gap.
    void validate() const;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// mt19937_64 with distribution code written out, so draws are identical on
/// every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, 1) from the top 53 bits.
    double unit();
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    /// Uniform integer in [lo, hi].
    int integer(int lo, int hi);
    Complex complex_in(double re_lo, double re_hi, double im_lo, double im_hi);
    /// Modulus e^{U(log_lo, log_hi)} with a uniform phase.
    Complex coefficient(double log_lo, double log_hi);

private:
    std::mt19937_64 engine_;
};

/// Simple exponents drawn uniformly in the box, rejection-sampled until the
/// sorted real parts are at least min_gap apart.
QuasiPolynomial random_simple_qp(Rng& rng, const RandomSpec& spec);

/// Distinct exponents with polynomial coefficients of degree up to 2; total
/// dimension between spec.k_min and spec.k_max.
QuasiPolynomial random_multiple_qp(Rng& rng, const RandomSpec& spec);

/// Degree exactly `degree`, coefficients uniform in the unit square.
Polynomial random_polynomial(Rng& rng, int degree);

}  // namespace nonosc
