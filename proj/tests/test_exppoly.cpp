#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nonosc/errors.hpp"
#include "nonosc/quasi_polynomial.hpp"
#include "nonosc/random.hpp"
#include "nonosc/roots.hpp"
#include "nonosc/zero_count.hpp"

using namespace nonosc;

namespace {

const Complex I{0.0, 1.0};
const double pi = std::numbers::pi;

QuasiPolynomial simple(std::vector<Complex> lambdas, std::vector<Complex> coeffs = {}) {
    std::vector<ExpTerm> t;
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        t.push_back({lambdas[i], Polynomial{coeffs.empty() ? Complex{1.0} : coeffs[i]}});
    return QuasiPolynomial(std::move(t));
}

QuasiPolynomial sine() { return simple({I, -I}, {1.0 / (2.0 * I), -1.0 / (2.0 * I)}); }
QuasiPolynomial cosh_qp() { return simple({1.0, -1.0}, {0.5, 0.5}); }
QuasiPolynomial poly_qp(const Polynomial& p) { return QuasiPolynomial({{0.0, p}}); }

int roots_inside(const RootSet& r, const Box& b) {
    int n = 0;
    for (const auto& e : r.entries)
        if (b.contains(e.location)) n += e.multiplicity;
    return n;
}

double boundary_distance(Complex z, const Box& b) {
    const double du = std::min(std::abs(z.real() - b.u_lo), std::abs(z.real() - b.u_hi));
    const double dv = std::min(std::abs(z.imag() - b.v_lo), std::abs(z.imag() - b.v_hi));
    return std::min(du, dv);
}

}  // namespace

TEST_CASE("construction rejects degenerate term lists") {
    CHECK_THROWS_AS(QuasiPolynomial({}), Error);
    CHECK_THROWS_AS(simple({1.0, 1.0}), Error);
    CHECK_THROWS_AS(QuasiPolynomial({{1.0, Polynomial{0.0}}}), Error);
    const QuasiPolynomial q({{1.0, Polynomial{1.0, 2.0}}, {I, Polynomial{3.0}}});
    CHECK(q.dimension() == 3);
    CHECK_FALSE(q.simple());
    CHECK(simple({0.0, 1.0, 2.0}).simple());
}

TEST_CASE("evaluation and scaled evaluation agree with the direct sum") {
    const QuasiPolynomial q({{Complex{1.0, 2.0}, Polynomial{1.0, I}}, {-0.5, Polynomial{2.0}}, {3.0 * I, Polynomial{0.0, 0.0, 1.0}}});
    for (Complex z : {Complex{0.3, -0.2}, Complex{-2.0, 1.5}, Complex{4.0, 4.0}}) {
        const Complex direct = (1.0 + I * z) * std::exp(Complex{1.0, 2.0} * z) + 2.0 * std::exp(-0.5 * z) +
                               z * z * std::exp(3.0 * I * z);
        CHECK(std::abs(q(z) - direct) <= 1e-12 * std::abs(direct));
        const auto s = q.scaled(z);
        CHECK(std::abs(s.value * std::exp(s.log_scale) - direct) <= 1e-12 * std::abs(direct));
        const double h = 1e-6;
        const Complex fd = (q(z + h) - q(z - h)) / (2 * h);
        CHECK(std::abs(s.derivative * std::exp(s.log_scale) - fd) <= 1e-6 * std::abs(fd));
    }
    const auto lm = qp_term_logmods(QuasiPolynomial({{1.0, Polynomial{-1.0, 1.0}}, {0.0, Polynomial{2.0}}}), 1.0);
    CHECK(std::isinf(lm[0]));
    CHECK(lm[1] == doctest::Approx(std::log(2.0)));
}

TEST_CASE("conjugated function") {
    const QuasiPolynomial q = simple({Complex{1.0, 2.0}, -I}, {Complex{0.5, 1.0}, 2.0});
    const Complex z{0.7, -1.3};
    CHECK(std::abs(q.conjugated()(z) - std::conj(q(std::conj(z)))) < 1e-12);
}

TEST_CASE("from_characteristic builds the solution basis") {
    const std::vector<Complex> eq{-1.0, 0.0, 1.0}, w{2.0, 3.0};
    const QuasiPolynomial q = from_characteristic(eq, w);
    CHECK(std::abs(q(0.4) - (2.0 * std::exp(-0.4) + 3.0 * std::exp(0.4))) < 1e-12);

    const std::vector<Complex> eq2{1.0, -2.0, 1.0}, w2{1.0, 2.0};
    const QuasiPolynomial d = from_characteristic(eq2, w2);
    REQUIRE(d.size() == 1);
    CHECK(d.dimension() == 2);
    CHECK(std::abs(d(0.5) - 2.0 * std::exp(0.5)) < 1e-6);

    const std::vector<Complex> bad{1.0};
    CHECK_THROWS_AS(from_characteristic(eq, bad), Error);
}

TEST_CASE("spectrum statistics") {
    const std::vector<Complex> a{0.0, 1.0, 3.0};
    SpectrumStats s = spectrum_stats(a);
    CHECK(s.theta == doctest::Approx(1.0));
    CHECK(s.xi == doctest::Approx(0.0));
    CHECK(s.path_length == doctest::Approx(3.0));

    const std::vector<Complex> b{3.0, Complex{1.0, 1.0}, 0.0};
    s = spectrum_stats(b);
    CHECK(s.theta == doctest::Approx(1.0));
    CHECK(s.xi == doctest::Approx(1.0));
    CHECK(s.path_length == doctest::Approx(std::sqrt(2.0) + std::sqrt(5.0)));

    const std::vector<Complex> c{0.0, I};
    CHECK_THROWS_AS(spectrum_stats(c), EqualRealPartsError);
    const std::vector<Complex> one{Complex{2.0, 1.0}};
    CHECK(spectrum_stats(one).theta == 0.0);
}

TEST_CASE("strip bound anchors") {
    CHECK(strip_bound_simple(simple({0.0, 1.0}), 0.0) == doctest::Approx(1.0 + 4.0 * std::log(2.0) / pi));
    const double expected = 1.0 + (2.0 / pi) * std::sqrt(5.0) * (4.0 + std::log(4.0));
    CHECK(strip_bound_simple(simple({0.0, Complex{1.0, 2.0}}), 1.0) == doctest::Approx(expected));
    CHECK(strip_bound_simple(simple({Complex{1.0, 1.0}}), 3.0) == 0.0);
    CHECK_THROWS_AS(strip_bound_simple(QuasiPolynomial({{0.0, Polynomial{1.0, 1.0}}}), 1.0), Error);
}

TEST_CASE("Khovanskii-Yakovenko and box bound anchors") {
    CHECK(ky_bound(simple({0.0, pi}), 2.0) == doctest::Approx(3.0));
    CHECK(ky_bound(simple({0.0, pi, 2.0 * pi}), 1.5) == doctest::Approx(5.0));
    CHECK(ky_bound(simple({Complex{1.0, 1.0}}), 10.0) == doctest::Approx(0.0));
    CHECK(vallee_poussin_box_bound(1, 0.0, 1.0) == doctest::Approx(4.0));
    CHECK(vallee_poussin_box_bound(2, 1.0, 1.0) == doctest::Approx(6.0 + 3.0 / std::log(2.25)));
}

TEST_CASE("zero counts on known functions") {
    CHECK(count_zeros_rect(sine(), {-1.0, 10.0, -1.0, 1.0}) == 4);
    CHECK(count_zeros_rect(sine(), {0.5, 4.0, -2.0, 2.0}) == 1);
    CHECK(count_zeros_rect(cosh_qp(), {-1.0, 1.0, 0.0, 2.0}) == 1);
    CHECK(count_zeros_rect(cosh_qp(), {-1.0, 1.0, -10.0, 10.0}) == 6);
    CHECK(count_zeros_rect(simple({0.0, 1.0}, {1.0, -1.0}), {-0.5, 0.5, -0.5, 0.5}) == 1);
    CHECK(count_zeros_rect(simple({2.0}), {-5.0, 5.0, -5.0, 5.0}) == 0);
    CHECK_THROWS_AS(count_zeros_rect(sine(), {1.0, 1.0, -1.0, 1.0}), Error);
}

TEST_CASE("winding count equals the root count for polynomials") {
    Rng rng(77);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial p = random_polynomial(rng, rng.integer(1, 8));
        const RootSet r = poly_roots(p);
        const double u0 = rng.uniform(-2.0, 1.0), v0 = rng.uniform(-2.0, 1.0);
        const Box b{u0, u0 + rng.uniform(0.3, 2.0), v0, v0 + rng.uniform(0.3, 2.0)};
        bool near = false;
        for (const auto& e : r.entries) near = near || boundary_distance(e.location, b) < 1e-3;
        if (near) continue;
        ++checked;
        CHECK(count_zeros_rect(poly_qp(p), b) == roots_inside(r, b));
    }
    CHECK(checked > 150);
}

TEST_CASE("counts add over a split and respect conjugation") {
    Rng rng(91);
    RandomSpec spec;
    spec.k_max = 5;
    for (int trial = 0; trial < 30; ++trial) {
        const QuasiPolynomial q = random_simple_qp(rng, spec);
        const Box b{-4.0, 4.0, -3.0, 3.0};
        const double cut = rng.uniform(-3.0, 3.0);
        const ZeroCount whole = count_zeros_detailed(q, b);
        const ZeroCount left = count_zeros_detailed(q, {b.u_lo, cut, b.v_lo, b.v_hi});
        const ZeroCount right = count_zeros_detailed(q, {cut, b.u_hi, b.v_lo, b.v_hi});
        if (whole.nudges + left.nudges + right.nudges == 0) CHECK(whole.count == left.count + right.count);
        CHECK(count_zeros_rect(q.conjugated(), {b.u_lo, b.u_hi, -b.v_hi, -b.v_lo}) == whole.count);
    }
}

TEST_CASE("a zero on the boundary triggers a nudge") {
    const ZeroCount z = count_zeros_detailed(sine(), {0.0, 1.0, -1.0, 1.0});
    CHECK(z.nudges >= 1);
    CHECK(z.count == 1);
    CHECK(z.box.u_lo < 0.0);
    ContourOptions none;
    none.max_nudges = 0;
    try {
        count_zeros_detailed(sine(), {0.0, 1.0, -1.0, 1.0}, {}, none);
        FAIL("expected BoundaryZero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BoundaryZero);
    }
}

TEST_CASE("locate_zeros") {
    const auto z = locate_zeros(cosh_qp(), {-1.0, 1.0, -1.0, 5.0});
    REQUIRE(z.size() == 2);
    std::vector<double> ims{z[0].location.imag(), z[1].location.imag()};
    std::sort(ims.begin(), ims.end());
    CHECK(ims[0] == doctest::Approx(pi / 2).epsilon(1e-10));
    CHECK(ims[1] == doctest::Approx(3 * pi / 2).epsilon(1e-10));
    for (const auto& e : z) CHECK(std::abs(e.location.real()) < 1e-9);

    const auto d = locate_zeros(poly_qp(Polynomial{1.0, -2.0, 1.0}), {0.0, 3.0, -1.0, 1.0});
    int total = 0;
    for (const auto& e : d) {
        total += e.multiplicity;
        CHECK(std::abs(e.location - 1.0) < 1e-6);
    }
    CHECK(total == 2);
}
