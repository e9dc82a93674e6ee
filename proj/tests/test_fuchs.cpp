#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nonosc/errors.hpp"
#include "nonosc/fuchs.hpp"
#include "nonosc/ode_io.hpp"

using namespace nonosc;

namespace {

const Complex I{0.0, 1.0};

LinearODE hypergeometric(double a, double b, double c) {
    // z(1-z) y'' + (c - (a+b+1) z) y' - a b y = 0
    return LinearODE({Polynomial{-a * b}, Polynomial{c, -(a + b + 1.0)}, Polynomial{0.0, 1.0, -1.0}});
}

// z^2 y'' + (1 - r1 - r2) z y' + r1 r2 y = 0 has solutions z^r1, z^r2.
LinearODE euler_with(Complex r1, Complex r2) {
    return LinearODE({Polynomial{r1 * r2}, Polynomial{0.0, 1.0 - r1 - r2}, Polynomial{0.0, 0.0, 1.0}});
}

std::vector<Complex> values(const ExponentSet& s) {
    std::vector<Complex> out;
    for (const auto& e : s.exponents)
        for (int m = 0; m < e.multiplicity; ++m) out.push_back(e.value);
    return out;
}

bool same_values(const std::vector<Complex>& a, std::vector<Complex> b, double eps) {
    if (a.size() != b.size()) return false;
    for (Complex x : a) {
        const auto hit = std::find_if(b.begin(), b.end(), [&](Complex y) { return std::abs(x - y) <= eps; });
        if (hit == b.end()) return false;
        b.erase(hit);
    }
    return true;
}

}  // namespace

TEST_CASE("pole orders and classification") {
    const LinearODE euler = parse_ode("z^2*y'' + z*y' - y = 0");
    PointClassification c = classify_point(euler, Point::finite(0.0));
    CHECK(c.kind == PointKind::RegularSingular);
    CHECK(c.pole_orders == std::vector<int>{1, 2});

    // w^5 u'' + 2 w^4 u' - u = 0 after z = 1/w.
    c = classify_point(parse_ode("y'' - z*y = 0"), Point::infinity());
    CHECK(c.kind == PointKind::Irregular);
    CHECK(c.pole_orders == std::vector<int>{1, 5});

    CHECK(classify_point(parse_ode("y'' + y = 0"), Point::finite(0.0)).kind == PointKind::Ordinary);
    CHECK(classify_point(parse_ode("y'' + y = 0"), Point::infinity()).kind == PointKind::Irregular);
}

TEST_CASE("indicial polynomials") {
    CHECK(approx_equal(indicial_polynomial(parse_ode("z^2*y'' + z*y' - y = 0"), Point::finite(0.0)),
                       Polynomial{-1.0, 0.0, 1.0}, 1e-14));
    CHECK(approx_equal(indicial_polynomial(parse_ode("z^2*y'' + z*y' + y = 0"), Point::finite(0.0)),
                       Polynomial{1.0, 0.0, 1.0}, 1e-14));
    const LinearODE third = parse_ode("y''' + z*y' + y = 0");
    CHECK(approx_equal(indicial_polynomial(third, Point::finite(2.0)), falling_factorial(3), 1e-14));
    CHECK_THROWS_AS(indicial_polynomial(parse_ode("y'' - z*y = 0"), Point::infinity()), Error);
}

TEST_CASE("ordinary points have exponents 0 .. k-1") {
    const ExponentSet e = characteristic_exponents(parse_ode("y''' + z*y' + y = 0"), Point::finite(1.0 + I));
    CHECK(same_values(values(e), {0.0, 1.0, 2.0}, 1e-9));
}

TEST_CASE("characteristic exponents") {
    CHECK(same_values(values(characteristic_exponents(parse_ode("z^2*y'' + z*y' - y = 0"), Point::finite(0.0))),
                      {-1.0, 1.0}, 1e-12));
    CHECK(same_values(values(characteristic_exponents(parse_ode("z^2*y'' + z*y' + y = 0"), Point::finite(0.0))),
                      {-I, I}, 1e-12));
    const double a = 0.2, b = 1.1, c = 1.7;
    const LinearODE h = hypergeometric(a, b, c);
    CHECK(same_values(values(characteristic_exponents(h, Point::finite(0.0))), {0.0, 1.0 - c}, 1e-9));
    CHECK(same_values(values(characteristic_exponents(h, Point::finite(1.0))), {0.0, c - a - b}, 1e-9));
    CHECK(same_values(values(characteristic_exponents(h, Point::infinity())), {a, b}, 1e-9));
}

TEST_CASE("double exponent keeps its multiplicity") {
    const ExponentSet e = characteristic_exponents(euler_with(0.5, 0.5), Point::finite(0.0));
    REQUIRE(e.exponents.size() == 1);
    CHECK(e.exponents[0].multiplicity == 2);
    CHECK(e.total_multiplicity() == 2);
}

TEST_CASE("verdicts on the standard equations") {
    NonOscillationVerdict v = decide(parse_ode("z^2*y'' + z*y' - y = 0"));
    CHECK(v.verdict == Verdict::GloballyNonOscillating);
    REQUIRE(v.evidence.size() == 2);
    CHECK(*v.evidence[0].min_real_gap == doctest::Approx(2.0));

    v = decide(parse_ode("z^2*y'' + z*y' + y = 0"));
    CHECK(v.verdict == Verdict::Oscillating);
    REQUIRE(v.evidence[0].tie.has_value());
    CHECK(std::abs(v.evidence[0].tie->imag_first - v.evidence[0].tie->imag_second) == doctest::Approx(2.0));

    v = decide(parse_ode("y'' - z*y = 0"));
    CHECK(v.verdict == Verdict::Oscillating);
    CHECK(v.evidence.back().note == "irregular singular point at infinity");

    CHECK(decide(hypergeometric(0.25, 0.75, 0.5)).verdict == Verdict::GloballyNonOscillating);
    CHECK(decide(parse_ode("z^2*y'' + z*y' + (z^2 - 0.25)*y = 0")).verdict == Verdict::Oscillating);
    CHECK(decide(euler_with(Complex{0.5, 2.0}, Complex{0.5, -2.0})).verdict == Verdict::Oscillating);
    // A double exponent is one distinct exponent: nothing to compare.
    CHECK(decide(euler_with(0.5, 0.5)).verdict == Verdict::GloballyNonOscillating);
}

TEST_CASE("exponents inside the tie band are indeterminate") {
    Tolerances tol;
    tol.root_tol = 1e-14;
    tol.cluster_radius = 1e-12;
    tol.real_part_tie_tol = 1e-6;
    const NonOscillationVerdict v = decide(euler_with(1.0, Complex{1.0 + 5e-7, 5e-7}), tol);
    CHECK(v.verdict == Verdict::Indeterminate);
    CHECK(v.evidence[0].indeterminate);
}

TEST_CASE("verdict is invariant under affine maps and constant factors") {
    const std::vector<LinearODE> catalog{
        parse_ode("z^2*y'' + z*y' - y = 0"), parse_ode("z^2*y'' + z*y' + y = 0"), hypergeometric(0.25, 0.75, 0.5),
        hypergeometric(0.2, 1.1, 1.7), parse_ode("y'' - z*y = 0")};
    const std::vector<std::pair<Complex, Complex>> maps{{2.0, 1.0}, {Complex{0.5, 1.5}, -I}, {-3.0, Complex{2.0, 2.0}}};
    for (const auto& ode : catalog) {
        const NonOscillationVerdict base = decide(ode);
        CHECK(decide(ode.scaled(Complex{-2.5, 0.5})).verdict == base.verdict);
        for (const auto& [a, b] : maps) {
            const LinearODE pulled = affine_pullback(ode, a, b);
            const NonOscillationVerdict v = decide(pulled);
            CHECK(v.verdict == base.verdict);
            for (const auto& e : base.evidence) {
                if (!e.exponents) continue;
                const Point q = e.point.is_infinity() ? e.point : Point::finite((e.point.value() - b) / a);
                CHECK(same_values(values(characteristic_exponents(pulled, q)), values(*e.exponents), 1e-7));
            }
        }
    }
}

TEST_CASE("Fuchs relation holds on Fuchsian equations") {
    for (const auto& ode : {parse_ode("z^2*y'' + z*y' - y = 0"), hypergeometric(0.25, 0.75, 0.5),
                            hypergeometric(0.2, 1.1, 1.7), parse_ode("z^2*y'' + z*y' + y = 0")}) {
        const NonOscillationVerdict v = decide(ode);
        REQUIRE(v.fuchs_relation_residual.has_value());
        CHECK(*v.fuchs_relation_residual < 1e-8);
        CHECK_FALSE(v.fuchs_relation_warning);
    }
    CHECK_FALSE(decide(parse_ode("y'' - z*y = 0")).fuchs_relation_residual.has_value());
}

TEST_CASE("witness zeros") {
    std::vector<Complex> z = witness_zeros(1.0, -1.0, 0, 2);
    REQUIRE(z.size() == 3);
    for (int n = 0; n < 3; ++n) CHECK(z[n].real() == doctest::Approx(std::exp((2 * n + 1) * std::numbers::pi / 2)));

    z = witness_zeros(2.0 * std::numbers::pi, 0.0, -1, 1);
    REQUIRE(z.size() == 3);
    CHECK(z[1].real() / z[0].real() == doctest::Approx(std::exp(1.0)));
    CHECK(z[2].real() / z[1].real() == doctest::Approx(std::exp(1.0)));

    CHECK(witness_zeros(1.0, 3.0, 4, 4).size() == 1);
    CHECK_THROWS_AS(witness_zeros(1.0, 1.0, 0, 1), Error);
}

TEST_CASE("the leading term vanishes at witness zeros") {
    // Ties found by decide provide a, b1, b2.
    for (const auto& ode : {parse_ode("z^2*y'' + z*y' + y = 0"), euler_with(Complex{0.5, 2.0}, Complex{0.5, -2.0})}) {
        const NonOscillationVerdict v = decide(ode);
        REQUIRE(v.evidence[0].tie.has_value());
        const TiedPair t = *v.evidence[0].tie;
        for (Complex z : witness_zeros(t.imag_first, t.imag_second, -6, 3)) {
            const double scale = std::pow(z.real(), t.real_part);
            CHECK(std::abs(witness_leading_term(t.real_part, t.imag_first, t.imag_second, z)) <= 1e-9 * scale);
        }
    }
}
