#pragma once

#include <optional>
#include <vector>

#include "nonosc/majorant.hpp"
#include "nonosc/quasi_polynomial.hpp"
#include "nonosc/zero_count.hpp"

namespace nonosc {

/// Index j with |A_j(z) e^{lambda_j z}| >= sum of the other term moduli, if
/// any. Ties go to the lowest index; a vanishing candidate never dominates.
std::optional<std::size_t> is_dominant_at(const QuasiPolynomial& qp, Complex z);

/// True iff consecutive values of the u-shifted majorant, taken at the sorted
/// real parts, all differ by at least ln 4. Throws NotSimpleExponents and
/// EqualRealPartsError.
bool gap_dominance_check(const QuasiPolynomial& qp, double u);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const noexcept { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorts and merges intervals that overlap or touch.
std::vector<Interval> merge_intervals(std::vector<Interval> in);

struct SlopeSet {
    std::vector<Interval> intervals;
    double grid_step = 0.0;  // the step h actually used
    double padding = 0.0;    // (k-1) Xi h, the most the grid padding can add
};

/// Superset of the slopes of the majorant of (Re lambda_j, ln|a_j| - v Im lambda_j)
/// over |v| <= alpha: slopes sampled on a v-grid and padded by Xi h / 2.
SlopeSet slope_set(const QuasiPolynomial& qp, double alpha, double grid_step = 1e-2);

enum class CoverKind { Simple, Multiple, Perturbed };
const char* to_string(CoverKind kind);

struct BoxCover {
    std::vector<Box> boxes;  // disjoint, sorted by u_lo, all spanning v in [-alpha, alpha]
    CoverKind kind = CoverKind::Simple;
    double total_width = 0.0;
    int count_bound = 0;
    double width_bound = 0.0;
    double padding = 0.0;

    bool contains(Complex z, double slack = 1e-9) const noexcept;
};

/// Boxes outside of which one term dominates in the strip |Im z| <= alpha.
BoxCover excluded_boxes_simple(const QuasiPolynomial& qp, double alpha, double grid_step = 1e-2);

/// Per-pair data for ln|A_j e^{lambda_j z} / (A_j' e^{lambda_j' z})|.
struct RatioDecomposition {
    std::size_t first = 0;
    std::size_t second = 0;
    double theta = 0.0;  // Re(lambda_j - lambda_j')
    double xi = 0.0;     // Im(lambda_j - lambda_j') / theta
    Polynomial num;      // A_j
    Polynomial den;      // A_j'
    std::vector<Complex> num_roots;
    std::vector<Complex> den_roots;
    double log_lead_diff = 0.0;  // ln|lead A_j| - ln|lead A_j'|

    /// ln r(z) = ln|A_j(z)/A_j'(z)| - v xi theta + theta u.
    double log_ratio(Complex z) const;
};

RatioDecomposition ratio_decomposition(const QuasiPolynomial& qp, std::size_t j, std::size_t jp,
                                       const Tolerances& tol = {});

/// Near-root strips |u - Re z_i| <= 4 k Theta plus, for each pair of terms,
/// the u-interval where |ln r| stays below ln k + alpha|Im gap| + alpha|theta|.
BoxCover excluded_boxes_multiple(const QuasiPolynomial& qp, double alpha, const Tolerances& tol = {});

/// C max_{0<=l<=k} (3/(4 k Theta))^l 3^{k-l} M_l with
/// M_l = sup_{u<=beta} e^u (u^2 + alpha^2)^{l/2}. Only l = 0 is used when
/// Theta = 0. Throws BetaNotNegative.
double perturbation_constant(int k, double theta, double alpha, double beta, double C);
double perturbation_constant(const QuasiPolynomial& qp, double alpha, double beta, double C);

/// sup_{u<=beta} e^u (u^2 + alpha^2)^{l/2}, by its critical points.
double exp_power_sup(int l, double alpha, double beta);

/// The multiple-exponent cover with thresholds raised by C_EQ, clipped to u <= beta.
BoxCover excluded_boxes_perturbed(const QuasiPolynomial& qp, double alpha, double beta, double C,
                                  const Tolerances& tol = {});

}  // namespace nonosc
