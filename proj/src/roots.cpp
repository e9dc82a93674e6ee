#include "nonosc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "nonosc/errors.hpp"

namespace nonosc {

int RootSet::total_multiplicity() const noexcept {
    int total = 0;
    for (const auto& r : entries) total += r.multiplicity;
    return total;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxAberthIterations = 1000;

bool canonical_less(const Root& a, const Root& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
}

// Roots of q with q(0) != 0 and degree >= 1.
std::vector<Complex> aberth(const Polynomial& q, const Tolerances& tol) {
    const int n = q.degree();
    if (n == 1) return {-q[0] / q[1]};

    const Polynomial dq = q.derivative();
    const double radius = std::pow(std::abs(q[0] / q.leading()), 1.0 / n);
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / n + 0.4;
        z[static_cast<std::size_t>(j)] = std::polar(radius, angle);
    }

    std::vector<bool> done(z.size(), false);
    for (int iter = 0; iter < kMaxAberthIterations; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (done[i]) continue;
            const Complex pz = q(z[i]);
            if (std::abs(pz) <= 4.0 * kEps * q.abs_eval(std::abs(z[i]))) {
                done[i] = true;
                continue;
            }
            const Complex ratio = pz / dq(z[i]);
            Complex repulsion{};
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) repulsion += 1.0 / (z[i] - z[j]);
            const Complex step = ratio / (1.0 - ratio * repulsion);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                // Collided with another approximation; nudge apart.
                z[i] += Complex{1e-8, 1e-8} * std::max(1.0, std::abs(z[i]));
                all_done = false;
                continue;
            }
            z[i] -= step;
            if (std::abs(step) <= 2.0 * kEps * std::abs(z[i])) done[i] = true;
            else all_done = false;
        }
        if (all_done) break;
    }

    for (const auto& zi : z) {
        const double scale = q.abs_eval(std::abs(zi));
        if (!(std::abs(q(zi)) <= tol.root_tol * scale))
            throw Error(ErrorKind::NonConvergence, "Aberth iteration did not converge");
    }
    return z;
}

struct Cluster {
    Complex sum{};
    int count = 0;
    Complex centroid() const { return sum / static_cast<double>(count); }
};

double scaled_radius(double radius, Complex z) { return radius * std::max(1.0, std::abs(z)); }

std::vector<Cluster> cluster_by_radius(const std::vector<Complex>& raw, double radius) {
    // Union-find over pairs within the radius.
    std::vector<std::size_t> parent(raw.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t j = i + 1; j < raw.size(); ++j)
            if (std::abs(raw[i] - raw[j]) <= scaled_radius(radius, raw[i])) parent[find(i)] = find(j);

    std::vector<Cluster> clusters;
    std::vector<std::size_t> slot(raw.size(), raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::size_t r = find(i);
        if (slot[r] == raw.size()) {
            slot[r] = clusters.size();
            clusters.emplace_back();
        }
        clusters[slot[r]].sum += raw[i];
        clusters[slot[r]].count += 1;
    }
    return clusters;
}

// Newton on q^(m-1), which has a simple root at a root of multiplicity m.
Complex polish_multiple(const Polynomial& q, Complex c, int m, double reach) {
    Polynomial d = q;
    for (int i = 1; i < m; ++i) d = d.derivative();
    const Polynomial dd = d.derivative();
    Complex z = c;
    double last = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 30; ++iter) {
        const Complex slope = dd(z);
        if (slope == Complex{}) break;
        const Complex step = d(z) / slope;
        if (!(std::abs(step) < last)) break;
        last = std::abs(step);
        z -= step;
        if (last <= 2.0 * kEps * std::max(1.0, std::abs(z))) break;
    }
    return std::abs(z - c) <= reach ? z : c;
}

// Merge nearby clusters whose polished centroid passes the Taylor multiplicity test.
void merge_multiple(const Polynomial& q, std::vector<Cluster>& clusters, const Tolerances& tol) {
    bool merged = true;
    while (merged && clusters.size() > 1) {
        merged = false;
        struct Candidate {
            double distance;
            std::size_t a, b;
        };
        std::vector<Candidate> candidates;
        for (std::size_t a = 0; a < clusters.size(); ++a)
            for (std::size_t b = a + 1; b < clusters.size(); ++b) {
                const int m = clusters[a].count + clusters[b].count;
                const Complex c = (clusters[a].sum + clusters[b].sum) / static_cast<double>(m);
                const double gate = scaled_radius(std::max(tol.cluster_radius, 10.0 * std::pow(tol.root_tol, 1.0 / m)), c);
                const double d = std::abs(clusters[a].centroid() - clusters[b].centroid());
                if (d <= gate) candidates.push_back({d, a, b});
            }
        std::sort(candidates.begin(), candidates.end(),
                  [](const Candidate& x, const Candidate& y) { return x.distance < y.distance; });
        for (const auto& cand : candidates) {
            const int m = clusters[cand.a].count + clusters[cand.b].count;
            const Complex centroid = (clusters[cand.a].sum + clusters[cand.b].sum) / static_cast<double>(m);
            const Complex c = polish_multiple(q, centroid, m, std::max(cand.distance, scaled_radius(tol.cluster_radius, centroid)));
            if (multiplicity_at(q, c, tol) >= m) {
                clusters[cand.a].sum = c * static_cast<double>(m);
                clusters[cand.a].count = m;
                clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(cand.b));
                merged = true;
                break;
            }
        }
    }
}

}  // namespace

int multiplicity_at(const Polynomial& p, Complex z, const Tolerances& tol) {
    if (p.is_zero()) return kInfiniteMultiplicity;
    const std::vector<Complex> t = p.taylor_at(z);
    std::vector<Complex> abs_coeffs;
    abs_coeffs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) abs_coeffs.emplace_back(std::abs(c), 0.0);
    const std::vector<Complex> scale = Polynomial(abs_coeffs).taylor_at(Complex{std::abs(z), 0.0});
    int m = 0;
    while (m < static_cast<int>(t.size()) &&
           std::abs(t[static_cast<std::size_t>(m)]) <= tol.root_tol * scale[static_cast<std::size_t>(m)].real())
        ++m;
    return m;
}

RootSet poly_roots(const Polynomial& p, const Tolerances& tol) {
    if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "poly_roots: zero polynomial");
    RootSet out;
    const int v = p.valuation();
    if (v > 0) out.entries.push_back({Complex{}, v});
    const Polynomial q = p.shift_down(static_cast<std::size_t>(v));
    if (q.degree() >= 1) {
        std::vector<Cluster> clusters = cluster_by_radius(aberth(q, tol), tol.cluster_radius);
        merge_multiple(q, clusters, tol);
        for (const auto& c : clusters) out.entries.push_back({c.centroid(), c.count});
    }
    std::sort(out.entries.begin(), out.entries.end(), canonical_less);
    return out;
}

RootSet common_roots(std::span<const Polynomial> ps, const Tolerances& tol) {
    const Polynomial* base = nullptr;
    for (const auto& p : ps)
        if (!p.is_zero() && (base == nullptr || p.degree() < base->degree())) base = &p;
    if (base == nullptr) throw Error(ErrorKind::InvalidArgument, "common_roots: all polynomials are zero");

    RootSet out;
    if (base->degree() < 1) return out;
    for (const auto& r : poly_roots(*base, tol).entries) {
        int m = r.multiplicity;
        for (const auto& p : ps) {
            if (&p == base || p.is_zero()) continue;
            m = std::min(m, multiplicity_at(p, r.location, tol));
        }
        if (m > 0) out.entries.push_back({r.location, m});
    }
    return out;
}

bool residuals_within(const Polynomial& p, const RootSet& roots, const Tolerances& tol) {
    const double scale = p.max_abs_coeff();
    for (const auto& r : roots.entries) {
        const double growth = std::pow(std::max(1.0, std::abs(r.location)), p.degree());
        if (std::abs(p(r.location)) > tol.root_tol * scale * growth) return false;
    }
    return true;
}

}  // namespace nonosc
