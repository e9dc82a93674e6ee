#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "nonosc/errors.hpp"
#include "nonosc/path.hpp"
#include "nonosc/polynomial.hpp"
#include "nonosc/random.hpp"
#include "nonosc/roots.hpp"
#include "nonosc/tolerances.hpp"

using namespace nonosc;

namespace {

const Complex I{0.0, 1.0};

Polynomial from_roots(const std::vector<Complex>& roots) {
    Polynomial p{1.0};
    for (Complex r : roots) p *= Polynomial::linear_factor(r);
    return p;
}

// Every expected root is matched by a returned root within `eps`, with equal
// total multiplicity.
bool matches(const RootSet& got, const std::vector<Complex>& expected, double eps) {
    if (got.total_multiplicity() != static_cast<int>(expected.size())) return false;
    std::vector<int> left;
    for (const auto& r : got.entries) left.push_back(r.multiplicity);
    for (Complex e : expected) {
        bool found = false;
        for (std::size_t i = 0; i < got.entries.size() && !found; ++i)
            if (left[i] > 0 && std::abs(got.entries[i].location - e) <= eps) {
                --left[i];
                found = true;
            }
        if (!found) return false;
    }
    return true;
}

double path_through(const std::vector<Complex>& pts, const std::vector<std::size_t>& order) {
    double len = 0.0;
    for (std::size_t i = 1; i < order.size(); ++i) len += std::abs(pts[order[i]] - pts[order[i - 1]]);
    return len;
}

double brute_force_path(const std::vector<Complex>& pts) {
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    double best = path_through(pts, order);
    while (std::next_permutation(order.begin(), order.end())) best = std::min(best, path_through(pts, order));
    return best;
}

double diameter(const std::vector<Complex>& pts) {
    double d = 0.0;
    for (Complex a : pts)
        for (Complex b : pts) d = std::max(d, std::abs(a - b));
    return d;
}

}  // namespace

TEST_CASE("Horner evaluation") {
    CHECK(std::abs(Polynomial{1.0, 0.0, 1.0}(I)) == 0.0);
    CHECK(Polynomial{}(5.0) == Complex{});
    CHECK(Polynomial{-1.0, 0.0, 1.0}(3.0) == Complex{8.0});
}

TEST_CASE("polynomial storage trims exact zeros") {
    const Polynomial p{1.0, 2.0, 0.0, 0.0};
    CHECK(p.degree() == 1);
    CHECK(Polynomial{0.0, 0.0}.is_zero());
    CHECK(Polynomial{}.degree() == -1);
    CHECK(Polynomial{0.0, 0.0, 3.0}.valuation() == 2);
}

TEST_CASE("taylor coefficients match derivatives") {
    const Polynomial p{2.0, -1.0, 0.5 + I, 3.0, -0.25};
    const Complex c{0.3, -1.2};
    const std::vector<Complex> t = p.taylor_at(c);
    Polynomial d = p;
    double factorial = 1.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i > 0) factorial *= static_cast<double>(i);
        CHECK(std::abs(t[i] - d(c) / factorial) < 1e-12);
        d = d.derivative();
    }
    const Polynomial s = p.shifted(c);
    CHECK(std::abs(s(0.7) - p(c + 0.7)) < 1e-12);
    CHECK(std::abs(p.compose_affine(2.0, -1.0)(0.4) - p(-0.2)) < 1e-12);
}

TEST_CASE("falling factorials") {
    CHECK(falling_factorial(0) == Polynomial{1.0});
    CHECK(falling_factorial(3) == Polynomial{0.0, 2.0, -3.0, 1.0});
}

TEST_CASE("roots of z^2 - 1") {
    const RootSet r = poly_roots(Polynomial{-1.0, 0.0, 1.0});
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r.entries[0].location - Complex{-1.0}) < 1e-12);
    CHECK(std::abs(r.entries[1].location - Complex{1.0}) < 1e-12);
    CHECK(r.entries[0].multiplicity == 1);
}

TEST_CASE("triple root is reported once with multiplicity 3") {
    const Polynomial p = from_roots({2.0, 2.0, 2.0});
    CHECK(p == Polynomial{-8.0, 12.0, -6.0, 1.0});
    const RootSet r = poly_roots(p);
    REQUIRE(r.size() == 1);
    CHECK(r.entries[0].multiplicity == 3);
    CHECK(std::abs(r.entries[0].location - Complex{2.0}) < 1e-6);
}

TEST_CASE("constant and zero polynomials") {
    CHECK(poly_roots(Polynomial{7.0}).empty());
    CHECK_THROWS_AS(poly_roots(Polynomial{}), Error);
}

TEST_CASE("zero roots are split off exactly") {
    const RootSet r = poly_roots(Polynomial{0.0, 0.0, -1.0, 1.0});
    REQUIRE(r.size() == 2);
    CHECK(r.entries[0].location == Complex{});
    CHECK(r.entries[0].multiplicity == 2);
}

TEST_CASE("roots of random products are the union of the factors' roots") {
    Rng rng(20260101);
    for (int trial = 0; trial < 100; ++trial) {
        const int n1 = rng.integer(1, 4);
        const int n2 = rng.integer(1, 4);
        std::vector<Complex> roots;
        for (int i = 0; i < n1 + n2; ++i) roots.push_back(rng.complex_in(-2.0, 2.0, -2.0, 2.0));
        const Polynomial p = from_roots({roots.begin(), roots.begin() + n1});
        const Polynomial q = from_roots({roots.begin() + n1, roots.end()});
        const RootSet r = poly_roots(p * Complex{1.5, -0.5} * q);
        CHECK(matches(r, roots, 1e-7));
        CHECK(residuals_within(p * q, r));
    }
}

TEST_CASE("residuals of random polynomials are within tolerance") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = random_polynomial(rng, rng.integer(1, 10));
        const RootSet r = poly_roots(p);
        CHECK(r.total_multiplicity() == p.degree());
        CHECK(residuals_within(p, r));
    }
}

TEST_CASE("multiplicity at a point") {
    const Polynomial p = from_roots({1.0, 1.0, -3.0});
    CHECK(multiplicity_at(p, 1.0) == 2);
    CHECK(multiplicity_at(p, -3.0) == 1);
    CHECK(multiplicity_at(p, 0.0) == 0);
    CHECK(multiplicity_at(Polynomial{}, 0.0) == kInfiniteMultiplicity);
}

TEST_CASE("common roots") {
    const std::vector<Polynomial> a{Polynomial{-1.0, 0.0, 1.0}, Polynomial{-1.0, 1.0}};
    RootSet r = common_roots(a);
    REQUIRE(r.size() == 1);
    CHECK(std::abs(r.entries[0].location - Complex{1.0}) < 1e-9);
    CHECK(r.entries[0].multiplicity == 1);

    const std::vector<Polynomial> b{Polynomial{0.0, 1.0}, Polynomial{1.0, 1.0}};
    CHECK(common_roots(b).empty());

    const std::vector<Polynomial> c{from_roots({1.0, 1.0, -2.0}), from_roots({1.0, -3.0})};
    r = common_roots(c);
    REQUIRE(r.size() == 1);
    CHECK(std::abs(r.entries[0].location - Complex{1.0}) < 1e-9);
    CHECK(r.entries[0].multiplicity == 1);
}

TEST_CASE("shortest path examples") {
    const std::vector<Complex> collinear{0.0, 1.0, 3.0};
    CHECK(shortest_path_length(collinear).length == doctest::Approx(3.0).epsilon(1e-15));
    const std::vector<Complex> single{0.0};
    CHECK(shortest_path_length(single).length == 0.0);
    const std::vector<Complex> corner{0.0, 1.0, I};
    CHECK(shortest_path_length(corner).length == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_FALSE(shortest_path_length(corner).heuristic);
}

TEST_CASE("exact path length agrees with brute force") {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.integer(1, 8);
        std::vector<Complex> pts;
        for (int i = 0; i < n; ++i) pts.push_back(rng.complex_in(-3.0, 3.0, -3.0, 3.0));
        const PathLength got = shortest_path_length(pts);
        CHECK_FALSE(got.heuristic);
        CHECK(got.length == doctest::Approx(brute_force_path(pts)).epsilon(1e-12));
    }
}

TEST_CASE("path length is rigid-motion invariant and at least the diameter") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.integer(2, 13);
        std::vector<Complex> pts;
        for (int i = 0; i < n; ++i) pts.push_back(rng.complex_in(-3.0, 3.0, -3.0, 3.0));
        const Complex rot = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
        const Complex shift = rng.complex_in(-10.0, 10.0, -10.0, 10.0);
        std::vector<Complex> moved;
        for (Complex p : pts) moved.push_back(rot * p + shift);
        const double a = shortest_path_length(pts).length;
        const double b = shortest_path_length(moved).length;
        CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, a));
        CHECK(a >= diameter(pts) - 1e-12);
    }
}

TEST_CASE("more than ten points are flagged heuristic") {
    std::vector<Complex> line;
    for (int i = 0; i < 12; ++i) line.push_back(Complex{static_cast<double>((i * 7) % 12), 0.0});
    const PathLength got = shortest_path_length(line);
    CHECK(got.heuristic);
    CHECK(got.length == doctest::Approx(11.0));
}

TEST_CASE("tolerances must be positive") {
    CHECK_NOTHROW(Tolerances{}.validate());
    Tolerances t;
    t.cluster_radius = 0.0;
    CHECK_THROWS_AS(t.validate(), Error);
    t = Tolerances{};
    t.root_tol = -1.0;
    CHECK_THROWS_AS(t.validate(), Error);
}
