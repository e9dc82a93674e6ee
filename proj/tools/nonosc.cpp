// Command-line front end: analyze, bound, count, verify.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nonosc/cover.hpp"
#include "nonosc/errors.hpp"
#include "nonosc/ode_io.hpp"
#include "nonosc/path.hpp"
#include "nonosc/report.hpp"
#include "nonosc/sector.hpp"
#include "nonosc/verify.hpp"
#include "nonosc/zero_count.hpp"

using namespace nonosc;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kNonConvergence = 3, kIndeterminate = 4, kPrecondition = 5, kContour = 6 };

std::string read_input(const std::string& arg) {
    std::ifstream in(arg);
    if (!in) return arg;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

QuasiPolynomial build_qp(const std::vector<std::string>& lambdas, const std::vector<std::string>& polys) {
    if (lambdas.empty()) throw Error(ErrorKind::InvalidArgument, "at least one --lambda is required");
    if (!polys.empty() && polys.size() != lambdas.size())
        throw Error(ErrorKind::InvalidArgument, "--poly must be given once per --lambda (or not at all)");
    std::vector<ExpTerm> terms;
    for (std::size_t j = 0; j < lambdas.size(); ++j)
        terms.push_back({parse_complex(lambdas[j]), polys.empty() ? Polynomial{1.0} : parse_polynomial(polys[j])});
    return QuasiPolynomial(std::move(terms));
}

Point parse_point(const std::string& s) {
    if (s == "inf" || s == "infinity") return Point::infinity();
    return Point::finite(parse_complex(s));
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int error_exit(const Error& e, int fallback) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
        case ErrorKind::Parse:
        case ErrorKind::OrderZero: return kParse;
        case ErrorKind::NonConvergence: return kNonConvergence;
        default: return fallback;
    }
}

struct QpArgs {
    std::vector<std::string> lambdas;
    std::vector<std::string> polys;

    void attach(CLI::App* app) {
        app->add_option("--lambda", lambdas, "exponent, e.g. 1, -1, 2+3i (repeatable)")->required();
        app->add_option("--poly", polys, "coefficient polynomial in z per exponent, default 1 (repeatable)");
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero bounds and non-oscillation analysis for linear ODEs and quasi-polynomials"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Decide global non-oscillation of an equation");
    std::string equation;
    bool analyze_json = false;
    Tolerances tol;
    analyze_cmd->add_option("equation", equation, "inline equation or path to a .txt/.json file")->required();
    analyze_cmd->add_flag("--json", analyze_json, "emit the JSON report");
    analyze_cmd->add_option("--tol-real-tie", tol.real_part_tie_tol, "relative band for equal real parts");
    analyze_cmd->add_option("--tol-root", tol.root_tol, "root residual tolerance");

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "Zero-count bounds with their intermediate statistics");
    bound_cmd->require_subcommand(1);
    bool bound_json = false;
    bound_cmd->add_flag("--json", bound_json, "emit JSON");

    QpArgs strip_qp;
    double strip_alpha = 0.0;
    auto* strip_cmd = bound_cmd->add_subcommand("strip", "bound in the strip |Im z| <= alpha (simple exponents)");
    strip_qp.attach(strip_cmd);
    strip_cmd->add_option("--alpha", strip_alpha, "strip half-height")->required();
    strip_cmd->add_flag("--json", bound_json, "emit JSON");

    QpArgs ky_qp;
    double ky_diam = 0.0;
    auto* ky_cmd = bound_cmd->add_subcommand("ky", "bound in any convex domain of the given diameter");
    ky_qp.attach(ky_cmd);
    ky_cmd->add_option("--diam", ky_diam, "domain diameter")->required();
    ky_cmd->add_flag("--json", bound_json, "emit JSON");

    QpArgs cover_qp;
    double cover_alpha = 0.0, cover_beta = -1.0, cover_c = 0.0, cover_step = 1e-2;
    std::string cover_kind = "auto";
    auto* cover_cmd = bound_cmd->add_subcommand("cover", "boxes containing every zero in the strip");
    cover_qp.attach(cover_cmd);
    cover_cmd->add_option("--alpha", cover_alpha, "strip half-height")->required();
    cover_cmd->add_option("--kind", cover_kind, "simple | multiple | perturbed | auto")
        ->check(CLI::IsMember({"auto", "simple", "multiple", "perturbed"}));
    cover_cmd->add_option("--beta", cover_beta, "right edge of the semistrip (perturbed)");
    cover_cmd->add_option("--C", cover_c, "perturbation size (perturbed)");
    cover_cmd->add_option("--grid-step", cover_step, "v-grid step for the slope set (simple)");
    cover_cmd->add_flag("--json", bound_json, "emit JSON");

    std::string sector_eq, sector_point = "0";
    double sector_alpha = 0.0, sector_beta = 0.0;
    SectorOptions sector_opts;
    auto* sector_cmd = bound_cmd->add_subcommand("sector", "bound near a Fuchsian point");
    sector_cmd->add_option("equation", sector_eq, "inline equation or file")->required();
    sector_cmd->add_option("--point", sector_point, "the point p, or inf");
    sector_cmd->add_option("--alpha", sector_alpha, "half-opening of the sector")->required();
    sector_cmd->add_option("--beta", sector_beta, "log of the sector radius")->required();
    sector_cmd->add_option("--C", sector_opts.coefficient_bound, "override the sampled coefficient bound");
    sector_cmd->add_option("--C-eps", sector_opts.decay_constant, "override the sampled decay constant");
    sector_cmd->add_flag("--json", bound_json, "emit JSON");

    // count
    auto* count_cmd = app.add_subcommand("count", "Count zeros of a quasi-polynomial in a box");
    QpArgs count_qp;
    count_qp.attach(count_cmd);
    std::vector<double> box_args;
    int subdivide = 1;
    bool count_json = false;
    count_cmd->add_option("--box", box_args, "u0 u1 v0 v1")->required()->expected(4);
    count_cmd->add_option("--subdivide", subdivide, "also count over n vertical slabs and compare")
        ->check(CLI::PositiveNumber);
    count_cmd->add_flag("--json", count_json, "emit JSON");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Seeded randomized checks of every bound against the oracle");
    RandomSpec spec;
    std::string which = "all";
    bool verify_json = false;
    verify_cmd->add_option("--seed", spec.seed, "64-bit seed")->required();
    verify_cmd->add_option("--cases", spec.count, "cases per battery")->required();
    verify_cmd->add_option("--which", which, "all | strip | cover | dominance | ky")
        ->check(CLI::IsMember({"all", "strip", "cover", "dominance", "ky"}));
    verify_cmd->add_option("--k-min", spec.k_min, "smallest dimension");
    verify_cmd->add_option("--k-max", spec.k_max, "largest dimension");
    verify_cmd->add_option("--min-gap", spec.min_gap, "minimum consecutive real-part gap");
    verify_cmd->add_flag("--json", verify_json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) {
            const AnalysisReport r = analyze(read_input(equation), tol);
            if (analyze_json) print_json(to_json(r));
            else std::cout << to_text(r);
            return r.result.verdict == Verdict::Indeterminate ? kIndeterminate : kOk;
        }

        if (*bound_cmd) {
            json out;
            std::ostringstream text;
            if (*strip_cmd) {
                const QuasiPolynomial qp = build_qp(strip_qp.lambdas, strip_qp.polys);
                const double value = strip_bound_simple(qp, strip_alpha);
                out = {{"bound", "strip"}, {"alpha", strip_alpha}, {"k", qp.dimension()},
                       {"quasi_polynomial", qp_to_json(qp)}, {"statistics", spectrum_to_json(spectrum_stats(qp))},
                       {"value", value}};
                text << "strip bound: " << value << "\n";
            } else if (*ky_cmd) {
                const QuasiPolynomial qp = build_qp(ky_qp.lambdas, ky_qp.polys);
                const std::vector<Complex> l = qp.lambdas();
                const PathLength path = shortest_path_length(l);
                const double value = ky_bound(qp, ky_diam);
                out = {{"bound", "ky"}, {"diam", ky_diam}, {"k", qp.dimension()}, {"quasi_polynomial", qp_to_json(qp)},
                       {"statistics", {{"path_length", path.length}, {"path_heuristic", path.heuristic}}},
                       {"value", value}};
                text << "ky bound: " << value << "\n";
            } else if (*cover_cmd) {
                const QuasiPolynomial qp = build_qp(cover_qp.lambdas, cover_qp.polys);
                std::string kind = cover_kind;
                if (kind == "auto") kind = qp.simple() ? "simple" : "multiple";
                BoxCover c;
                if (kind == "simple") c = excluded_boxes_simple(qp, cover_alpha, cover_step);
                else if (kind == "multiple") c = excluded_boxes_multiple(qp, cover_alpha);
                else c = excluded_boxes_perturbed(qp, cover_alpha, cover_beta, cover_c);
                out = {{"bound", "cover"}, {"alpha", cover_alpha}, {"k", qp.dimension()},
                       {"quasi_polynomial", qp_to_json(qp)}, {"statistics", spectrum_to_json(spectrum_stats(qp))},
                       {"cover", cover_to_json(c)}};
                if (kind == "perturbed") {
                    out["beta"] = cover_beta;
                    out["C"] = cover_c;
                    out["C_eq"] = perturbation_constant(qp, cover_alpha, cover_beta, cover_c);
                }
                text << to_string(c.kind) << " cover: " << c.boxes.size() << " box(es), total width "
                     << c.total_width << " (bound " << c.width_bound << ", count bound " << c.count_bound << ")\n";
                for (const auto& b : c.boxes)
                    text << "  [" << b.u_lo << ", " << b.u_hi << "] x [" << b.v_lo << ", " << b.v_hi << "]\n";
            } else if (*sector_cmd) {
                const LinearODE ode = load_ode(read_input(sector_eq));
                const Point p = parse_point(sector_point);
                const SectorBound s = sector_zero_bound(ode, p, sector_alpha, sector_beta, {}, sector_opts);
                out = {{"bound", "sector"}, {"equation", format_ode(ode)}, {"point", sector_point},
                       {"alpha", sector_alpha}, {"beta", sector_beta}, {"value", s.bound},
                       {"diagnostics", sector_to_json(s)}};
                text << "sector bound: " << s.bound << "  (C=" << s.coefficient_bound << ", C_eq=" << s.c_eq
                     << ", ell=" << s.ell << (s.coefficient_bound_sampled ? ", C sampled: not rigorous" : "")
                     << ")\n";
            }
            if (bound_json) print_json(out);
            else std::cout << text.str();
            return kOk;
        }

        if (*count_cmd) {
            const QuasiPolynomial qp = build_qp(count_qp.lambdas, count_qp.polys);
            const Box box{box_args[0], box_args[1], box_args[2], box_args[3]};
            const ZeroCount total = count_zeros_detailed(qp, box);
            json pieces = json::array();
            int piece_sum = 0;
            if (subdivide > 1) {
                // Interior cuts must avoid zeros; shift them all until every slab counts without nudging.
                ContourOptions strict;
                strict.max_nudges = 0;
                const double step = total.box.width() / subdivide;
                for (double shift : {0.0, 0.0123, -0.0217, 0.0311, -0.0405, 0.0499}) {
                    pieces = json::array();
                    piece_sum = 0;
                    try {
                        for (int s = 0; s < subdivide; ++s) {
                            Box slab = total.box;
                            if (s > 0) slab.u_lo = total.box.u_lo + step * (s + shift);
                            if (s + 1 < subdivide) slab.u_hi = total.box.u_lo + step * (s + 1 + shift);
                            const ZeroCount zc = count_zeros_detailed(qp, slab, {}, strict);
                            piece_sum += zc.count;
                            pieces.push_back({{"box", box_to_json(zc.box)}, {"count", zc.count}});
                        }
                        break;
                    } catch (const Error& e) {
                        if (e.kind() != ErrorKind::BoundaryZero && e.kind() != ErrorKind::NonIntegerWinding) throw;
                    }
                }
            }
            if (count_json) {
                json out = {{"count", total.count}, {"box", box_to_json(box)}, {"box_used", box_to_json(total.box)},
                            {"nudges", total.nudges}};
                if (subdivide > 1) out["pieces"] = pieces;
                print_json(out);
            } else {
                std::cout << total.count << "\n";
            }
            if (total.nudges > 0) std::cerr << "note: box inflated " << total.nudges << " time(s) to clear a zero\n";
            if (subdivide > 1 && piece_sum != total.count) {
                std::cerr << "error: slab counts sum to " << piece_sum << ", whole box gives " << total.count << "\n";
                return kContour;
            }
            return kOk;
        }

        if (*verify_cmd) {
            const VerificationResult r = run_verify(spec, which);
            if (verify_json) {
                print_json(to_json(r));
            } else {
                for (const auto& b : r.batteries)
                    std::cout << b.name << ": " << b.cases.size() - static_cast<std::size_t>(b.failures()) << "/"
                              << b.cases.size() << " passed\n";
                std::cout << (r.passed() ? "PASS" : "FAIL") << "\n";
            }
            for (const auto& b : r.batteries)
                for (const auto& c : b.cases)
                    if (!c.passed)
                        std::cerr << "failed: battery " << b.name << ", seed " << spec.seed << ", case " << c.index
                                  << ": " << c.detail << "\n";
            return r.passed() ? kOk : kFailed;
        }
    } catch (const Error& e) {
        const int fallback = *count_cmd ? kContour : (*bound_cmd ? kPrecondition : kFailed);
        return error_exit(e, fallback);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kOk;
}
