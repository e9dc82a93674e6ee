#include "nonosc/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nonosc/errors.hpp"

namespace nonosc {

void RandomSpec::validate() const {
    if (k_min < 1 || k_max < k_min) throw Error(ErrorKind::InvalidArgument, "need 1 <= k_min <= k_max");
    if (!(re_lo <= re_hi) || !(im_lo <= im_hi) || !(log_mod_lo <= log_mod_hi))
        throw Error(ErrorKind::InvalidArgument, "empty sampling range");
    if (!(min_gap > 0.0)) throw Error(ErrorKind::InvalidArgument, "min_gap must be positive");
    if ((k_max - 1) * min_gap > re_hi - re_lo)
        throw Error(ErrorKind::InvalidArgument, "real-part range too narrow for k_max exponents at min_gap");
    if (count < 0) throw Error(ErrorKind::InvalidArgument, "count must be non-negative");
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

int Rng::integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

Complex Rng::complex_in(double re_lo, double re_hi, double im_lo, double im_hi) {
    const double re = uniform(re_lo, re_hi);
    return {re, uniform(im_lo, im_hi)};
}

Complex Rng::coefficient(double log_lo, double log_hi) {
    const double r = std::exp(uniform(log_lo, log_hi));
    return std::polar(r, uniform(-std::numbers::pi, std::numbers::pi));
}

namespace {

std::vector<Complex> gapped_exponents(Rng& rng, const RandomSpec& spec, int n) {
    for (;;) {
        std::vector<Complex> l;
        for (int i = 0; i < n; ++i) l.push_back(rng.complex_in(spec.re_lo, spec.re_hi, spec.im_lo, spec.im_hi));
        std::vector<double> re;
        for (Complex z : l) re.push_back(z.real());
        std::sort(re.begin(), re.end());
        bool ok = true;
        for (std::size_t i = 1; i < re.size(); ++i) ok = ok && re[i] - re[i - 1] >= spec.min_gap;
        if (ok) return l;
    }
}

}  // namespace

QuasiPolynomial random_simple_qp(Rng& rng, const RandomSpec& spec) {
    const int k = rng.integer(spec.k_min, spec.k_max);
    std::vector<ExpTerm> terms;
    for (Complex l : gapped_exponents(rng, spec, k))
        terms.push_back({l, Polynomial{rng.coefficient(spec.log_mod_lo, spec.log_mod_hi)}});
    return QuasiPolynomial(std::move(terms));
}

QuasiPolynomial random_multiple_qp(Rng& rng, const RandomSpec& spec) {
    const int k = rng.integer(std::max(2, spec.k_min), std::max(2, spec.k_max));
    std::vector<int> dims;
    for (int left = k; left > 0;) {
        const int d = rng.integer(1, std::min(3, left));
        dims.push_back(d);
        left -= d;
    }
    if (std::all_of(dims.begin(), dims.end(), [](int d) { return d == 1; })) {
        dims.pop_back();
        dims.front() = 2;
    }
    std::vector<ExpTerm> terms;
    const std::vector<Complex> l = gapped_exponents(rng, spec, static_cast<int>(dims.size()));
    for (std::size_t j = 0; j < dims.size(); ++j) {
        std::vector<Complex> c;
        for (int i = 0; i < dims[j]; ++i) c.push_back(rng.coefficient(spec.log_mod_lo, spec.log_mod_hi));
        terms.push_back({l[j], Polynomial(std::move(c))});
    }
    return QuasiPolynomial(std::move(terms));
}

Polynomial random_polynomial(Rng& rng, int degree) {
    if (degree < 0) throw Error(ErrorKind::InvalidArgument, "degree must be non-negative");
    std::vector<Complex> c;
    for (int i = 0; i <= degree; ++i) c.push_back(rng.complex_in(-1.0, 1.0, -1.0, 1.0));
    if (c.back() == Complex{}) c.back() = 1.0;
    return Polynomial(std::move(c));
}

}  // namespace nonosc
