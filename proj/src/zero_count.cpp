#include "nonosc/zero_count.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "nonosc/errors.hpp"

namespace nonosc {

double Box::diagonal() const noexcept { return std::hypot(width(), height()); }

bool Box::contains(Complex z, double slack) const noexcept {
    return z.real() >= u_lo - slack && z.real() <= u_hi + slack && z.imag() >= v_lo - slack &&
           z.imag() <= v_hi + slack;
}

namespace {

enum class Failure { None, SmallModulus, DepthExhausted };

struct Sample {
    Complex f;  // scaled value
    Complex g;  // f'/f
    bool tiny;
};

class EdgeIntegrator {
public:
    EdgeIntegrator(const QuasiPolynomial& qp, const Tolerances& tol, const ContourOptions& opts)
        : qp_(qp), tol_(tol), opts_(opts) {}

    // Argument change of qp along the segment a -> b.
    double run(Complex a, Complex b) {
        const Complex dz = b - a;
        double total = 0.0;
        Sample prev = sample(a);
        for (int i = 1; i <= opts_.initial_pieces; ++i) {
            const double s1 = static_cast<double>(i) / opts_.initial_pieces;
            const Sample next = sample(a + dz * s1);
            total += piece(a, dz, static_cast<double>(i - 1) / opts_.initial_pieces, s1, prev, next, 0);
            if (failure_ != Failure::None) return 0.0;
            prev = next;
        }
        return total;
    }

    Failure failure() const noexcept { return failure_; }

private:
    Sample sample(Complex z) {
        const auto s = qp_.scaled(z);
        const bool tiny = !(std::abs(s.value) > tol_.contour_min_modulus * s.abs_sum);
        if (tiny) failure_ = Failure::SmallModulus;
        return {s.value, tiny ? Complex{} : s.derivative / s.value, tiny};
    }

    double piece(Complex a, Complex dz, double s0, double s1, const Sample& p0, const Sample& p1, int depth) {
        if (failure_ != Failure::None) return 0.0;
        const double sm = 0.5 * (s0 + s1);
        const Sample pm = sample(a + dz * sm);
        if (failure_ != Failure::None) return 0.0;

        const Complex h = dz * (s1 - s0);
        const double coarse = ((p0.g + p1.g) * 0.5 * h).imag();
        const double fine = ((p0.g + 2.0 * pm.g + p1.g) * 0.25 * h).imag();
        const double principal = std::arg(p1.f * std::conj(p0.f));
        if (std::abs(fine - coarse) <= 0.05 && std::abs(fine) <= 1.0 && std::abs(principal - fine) <= 0.1)
            return principal;
        if (depth >= opts_.max_depth) {
            failure_ = Failure::DepthExhausted;
            return 0.0;
        }
        return piece(a, dz, s0, sm, p0, pm, depth + 1) + piece(a, dz, sm, s1, pm, p1, depth + 1);
    }

    const QuasiPolynomial& qp_;
    const Tolerances& tol_;
    const ContourOptions& opts_;
    Failure failure_ = Failure::None;
};

struct Attempt {
    Failure failure = Failure::None;
    double winding = 0.0;
};

Attempt wind(const QuasiPolynomial& qp, const Box& box, const Tolerances& tol, const ContourOptions& opts) {
    const std::array<Complex, 4> corners{Complex{box.u_lo, box.v_lo}, Complex{box.u_hi, box.v_lo},
                                         Complex{box.u_hi, box.v_hi}, Complex{box.u_lo, box.v_hi}};
    // Dense pre-sampling of the boundary.
    constexpr int kProbe = 64;
    for (int e = 0; e < 4; ++e)
        for (int i = 0; i < kProbe; ++i) {
            const Complex z = corners[e] + (corners[(e + 1) % 4] - corners[e]) * (static_cast<double>(i) / kProbe);
            const auto s = qp.scaled(z);
            if (!(std::abs(s.value) > tol.contour_min_modulus * s.abs_sum)) return {Failure::SmallModulus, 0.0};
        }

    double total = 0.0;
    for (int e = 0; e < 4; ++e) {
        EdgeIntegrator edge(qp, tol, opts);
        total += edge.run(corners[e], corners[(e + 1) % 4]);
        if (edge.failure() != Failure::None) return {edge.failure(), 0.0};
    }
    return {Failure::None, total / (2.0 * std::numbers::pi)};
}

}  // namespace

ZeroCount count_zeros_detailed(const QuasiPolynomial& qp, const Box& box, const Tolerances& tol,
                               const ContourOptions& opts) {
    if (!(box.u_lo < box.u_hi) || !(box.v_lo < box.v_hi))
        throw Error(ErrorKind::InvalidArgument, "count_zeros_rect needs a box with positive width and height");
    const double step = opts.nudge * (1.0 + std::max(box.width(), box.height()));
    Failure last = Failure::None;
    for (int attempt = 0; attempt <= opts.max_nudges; ++attempt) {
        const Box current = box.inflated(step * attempt);
        const Attempt a = wind(qp, current, tol, opts);
        last = a.failure;
        if (a.failure != Failure::None) continue;
        const double nearest = std::round(a.winding);
        if (std::abs(a.winding - nearest) >= 0.25 || nearest < 0)
            throw Error(ErrorKind::NonIntegerWinding, "winding number is not a non-negative integer");
        return {static_cast<int>(nearest), current, attempt, a.winding};
    }
    if (last == Failure::SmallModulus)
        throw Error(ErrorKind::BoundaryZero, "quasi-polynomial vanishes on the box boundary");
    throw Error(ErrorKind::NonIntegerWinding, "adaptive contour integration exhausted its budget");
}

int count_zeros_rect(const QuasiPolynomial& qp, const Box& box, const Tolerances& tol) {
    return count_zeros_detailed(qp, box, tol).count;
}

namespace {

class Locator {
public:
    Locator(const QuasiPolynomial& qp, const Tolerances& tol, double min_size)
        : qp_(qp), tol_(tol), min_size_(min_size) {
        strict_.max_nudges = 0;
    }

    void run(const Box& box, int count) {
        if (count == 0) return;
        if (count == 1) {
            if (auto z = newton(box)) {
                found_.push_back({*z, 1});
                return;
            }
        }
        if (std::max(box.width(), box.height()) <= min_size_) {
            found_.push_back({Complex{0.5 * (box.u_lo + box.u_hi), 0.5 * (box.v_lo + box.v_hi)}, count});
            return;
        }
        // Off-centre split fractions, tried in turn if a zero sits on the cut.
        for (double frac : {0.5123, 0.4711, 0.5389, 0.4417, 0.5702}) {
            const bool split_u = box.width() >= box.height();
            Box lo = box;
            Box hi = box;
            if (split_u) lo.u_hi = hi.u_lo = box.u_lo + frac * box.width();
            else lo.v_hi = hi.v_lo = box.v_lo + frac * box.height();
            try {
                const int n_lo = count_zeros_detailed(qp_, lo, tol_, strict_).count;
                const int n_hi = count_zeros_detailed(qp_, hi, tol_, strict_).count;
                if (n_lo + n_hi != count) continue;
                run(lo, n_lo);
                run(hi, n_hi);
                return;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::BoundaryZero && e.kind() != ErrorKind::NonIntegerWinding) throw;
            }
        }
        throw Error(ErrorKind::NonIntegerWinding, "zero isolation failed: inconsistent sub-box counts");
    }

    std::vector<LocatedZero> take() { return std::move(found_); }

private:
    std::optional<Complex> newton(const Box& box) const {
        Complex z{0.5 * (box.u_lo + box.u_hi), 0.5 * (box.v_lo + box.v_hi)};
        const double slack = 1e-9 * (1.0 + std::max(box.width(), box.height()));
        for (int it = 0; it < 60; ++it) {
            const auto s = qp_.scaled(z);
            if (s.value == Complex{}) return z;
            const Complex step = s.value / s.derivative;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return std::nullopt;
            z -= step;
            if (!box.contains(z, slack)) return std::nullopt;
            if (std::abs(step) <= 4e-16 * (1.0 + std::abs(z))) return z;
        }
        return std::nullopt;
    }

    const QuasiPolynomial& qp_;
    const Tolerances& tol_;
    double min_size_;
    ContourOptions strict_;
    std::vector<LocatedZero> found_;
};

}  // namespace

std::vector<LocatedZero> locate_zeros(const QuasiPolynomial& qp, const Box& box, const Tolerances& tol,
                                      double min_size) {
    const ZeroCount top = count_zeros_detailed(qp, box, tol);
    Locator loc(qp, tol, min_size);
    loc.run(top.box, top.count);
    return loc.take();
}

}  // namespace nonosc
