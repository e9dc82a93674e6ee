#include "nonosc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <thread>

#include "nonosc/cover.hpp"
#include "nonosc/errors.hpp"

namespace nonosc {

namespace {

enum Salt : std::uint64_t { kStripSalt = 1, kMultipleSalt = 2, kDominanceSalt = 3, kKySalt = 4 };

constexpr double kAlphas[] = {0.0, 0.5, 1.0};

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t salt, int index) {
    return splitmix64(splitmix64(seed + salt) ^ static_cast<std::uint64_t>(index));
}

std::string describe(const std::exception& e) {
    if (const auto* err = dynamic_cast<const Error*>(&e)) return std::string(to_string(err->kind())) + ": " + e.what();
    return e.what();
}

int total_multiplicity(const std::vector<LocatedZero>& zs) {
    int n = 0;
    for (const auto& z : zs) n += z.multiplicity;
    return n;
}

std::string check_cover(const BoxCover& c, const QuasiPolynomial& qp, const std::vector<LocatedZero>& zeros,
                        std::optional<double> beta = std::nullopt) {
    std::ostringstream err;
    if (static_cast<int>(c.boxes.size()) > c.count_bound)
        err << to_string(c.kind) << ": " << c.boxes.size() << " boxes > " << c.count_bound << "; ";
    if (c.total_width > c.width_bound + c.padding + 1e-9 * (1.0 + c.width_bound))
        err << to_string(c.kind) << ": width " << c.total_width << " > " << c.width_bound + c.padding << "; ";
    for (const auto& z : zeros) {
        if (beta && z.location.real() > *beta) continue;
        if (c.contains(z.location, 1e-9) || is_common_zero(qp, z.location)) continue;
        err << to_string(c.kind) << ": zero " << z.location.real() << (z.location.imag() < 0 ? "" : "+")
            << z.location.imag() << "i outside the cover; ";
    }
    return err.str();
}

CaseRecord strip_case(const RandomSpec& spec, const VerifyOptions& opts, int i) {
    CaseRecord r{i, case_seed(spec.seed, kStripSalt, i)};
    Rng rng(r.case_seed);
    const QuasiPolynomial qp = random_simple_qp(rng, spec);
    const double alpha = kAlphas[i % 3];
    const double bound = strip_bound_simple(qp, alpha);
    const int count = total_multiplicity(zeros_in_strip(qp, opts.strip_radius, alpha));
    r.bound = bound;
    r.oracle_count = count;
    r.passed = count <= std::floor(bound);
    if (!r.passed) r.detail = "oracle count exceeds the strip bound";
    return r;
}

CaseRecord cover_case(const RandomSpec& spec, const VerifyOptions& opts, int i) {
    CaseRecord r;
    r.index = i;
    std::string problems;
    if (i < spec.count) {
        r.case_seed = case_seed(spec.seed, kStripSalt, i);
        Rng rng(r.case_seed);
        const QuasiPolynomial qp = random_simple_qp(rng, spec);
        const double alpha = kAlphas[i % 3];
        const auto zeros = zeros_in_strip(qp, opts.strip_radius, alpha);
        r.oracle_count = total_multiplicity(zeros);
        problems += check_cover(excluded_boxes_simple(qp, alpha), qp, zeros);
        problems += check_cover(excluded_boxes_multiple(qp, alpha), qp, zeros);
    } else {
        r.case_seed = case_seed(spec.seed, kMultipleSalt, i);
        Rng rng(r.case_seed);
        const QuasiPolynomial qp = random_multiple_qp(rng, spec);
        const double alpha = kAlphas[i % 3];
        const auto zeros = zeros_in_strip(qp, opts.strip_radius, alpha);
        r.oracle_count = total_multiplicity(zeros);
        problems += check_cover(excluded_boxes_multiple(qp, alpha), qp, zeros);
        problems += check_cover(excluded_boxes_perturbed(qp, alpha, -1.0, 0.05), qp, zeros, -1.0);
    }
    r.cover_ok = problems.empty();
    r.passed = problems.empty();
    r.detail = problems;
    return r;
}

CaseRecord dominance_case(const RandomSpec& spec, const VerifyOptions& opts, int i) {
    CaseRecord r{i, case_seed(spec.seed, kDominanceSalt, i)};
    Rng rng(r.case_seed);
    const QuasiPolynomial qp = random_simple_qp(rng, spec);
    const SpectrumStats stats = spectrum_stats(qp);
    const ConcaveMajorant base = least_concave_majorant(majorant_family(qp));
    const double reach = std::log(4.0) * stats.theta;

    std::ostringstream err;
    int checked = 0;
    const int steps = static_cast<int>(std::lround(2.0 * opts.strip_radius / opts.dominance_step));
    for (int s = 0; s <= steps; ++s) {
        const double u = -opts.strip_radius + s * opts.dominance_step;
        const std::optional<std::size_t> dom = is_dominant_at(qp, Complex{u, 0.0});

        bool outside = true;
        for (double slope : base.slopes) outside = outside && std::abs(-u - slope) > reach;
        if (outside && !dom) err << "u=" << u << ": outside the slope neighbourhood but no term dominates; ";

        if (!gap_dominance_check(qp, u)) continue;
        ++checked;
        const ConcaveMajorant m = shift_majorant(base, u);
        const double mu = m.points[central_index(m)].mu;
        std::size_t j = 0;
        while (qp.terms()[j].lambda.real() != mu) ++j;
        const std::vector<double> logs = qp_term_logmods(qp, Complex{u, 0.0});
        double others = 0.0;
        for (std::size_t t = 0; t < logs.size(); ++t)
            if (t != j) others += std::exp(logs[t] - logs[j]);
        if (!(others <= 2.0 / 3.0)) err << "u=" << u << ": margin " << others << " > 2/3; ";
        if (dom != j) err << "u=" << u << ": dominance does not report the central term; ";
    }
    r.oracle_count = checked;
    r.detail = err.str();
    r.passed = r.detail.empty();
    return r;
}

CaseRecord ky_case(const RandomSpec& spec, const VerifyOptions&, int i) {
    CaseRecord r{i, case_seed(spec.seed, kKySalt, i)};
    Rng rng(r.case_seed);
    const QuasiPolynomial qp = i % 2 == 0 ? random_simple_qp(rng, spec) : random_multiple_qp(rng, spec);
    const double cu = rng.uniform(-8.0, 8.0);
    const double cv = rng.uniform(-8.0, 8.0);
    const double w = rng.uniform(0.5, 10.0);
    const double h = rng.uniform(0.5, 10.0);
    const ZeroCount zc = count_zeros_detailed(qp, {cu - w / 2, cu + w / 2, cv - h / 2, cv + h / 2});
    r.bound = ky_bound(qp, zc.box.diagonal());
    r.oracle_count = zc.count;
    r.passed = zc.count <= std::floor(*r.bound);
    if (!r.passed) r.detail = "oracle count exceeds the bound";
    return r;
}

using CaseFn = CaseRecord (*)(const RandomSpec&, const VerifyOptions&, int);

BatteryResult run_battery(const std::string& name, CaseFn fn, int n, const RandomSpec& spec,
                          const VerifyOptions& opts, int threads) {
    BatteryResult out{name, std::vector<CaseRecord>(static_cast<std::size_t>(n))};
    parallel_for(n, threads, [&](int i) {
        try {
            out.cases[static_cast<std::size_t>(i)] = fn(spec, opts, i);
        } catch (const std::exception& e) {
            CaseRecord& r = out.cases[static_cast<std::size_t>(i)];
            r.index = i;
            r.passed = false;
            r.detail = describe(e);
        }
    });
    return out;
}

}  // namespace

int BatteryResult::failures() const noexcept {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return !c.passed; }));
}

int VerificationResult::total() const noexcept {
    int n = 0;
    for (const auto& b : batteries) n += static_cast<int>(b.cases.size());
    return n;
}

int VerificationResult::passed_count() const noexcept {
    int n = 0;
    for (const auto& b : batteries) n += static_cast<int>(b.cases.size()) - b.failures();
    return n;
}

double VerificationResult::pass_rate() const noexcept {
    return total() == 0 ? 1.0 : static_cast<double>(passed_count()) / total();
}

const std::vector<std::string>& battery_names() {
    static const std::vector<std::string> names{"strip", "cover", "dominance", "ky"};
    return names;
}

VerificationResult run_verify(const RandomSpec& spec, const std::string& which, const VerifyOptions& opts) {
    spec.validate();
    const auto& names = battery_names();
    if (which != "all" && std::find(names.begin(), names.end(), which) == names.end())
        throw Error(ErrorKind::InvalidArgument, "unknown battery '" + which + "'");
    const int threads = resolve_threads(opts.threads);

    VerificationResult out;
    out.seed = spec.seed;
    out.cases = spec.count;
    out.which = which;
    const auto wanted = [&](const char* n) { return which == "all" || which == n; };
    if (wanted("strip")) out.batteries.push_back(run_battery("strip", strip_case, spec.count, spec, opts, threads));
    if (wanted("cover")) {
        const int extra = spec.count == 0 ? 0 : (opts.multiple_cases >= 0 ? opts.multiple_cases : spec.count / 2);
        out.batteries.push_back(run_battery("cover", cover_case, spec.count + extra, spec, opts, threads));
    }
    if (wanted("dominance"))
        out.batteries.push_back(run_battery("dominance", dominance_case, spec.count, spec, opts, threads));
    if (wanted("ky")) out.batteries.push_back(run_battery("ky", ky_case, spec.count, spec, opts, threads));
    return out;
}

nlohmann::json to_json(const VerificationResult& r) {
    using nlohmann::json;
    json batteries = json::array();
    for (const auto& b : r.batteries) {
        json cases = json::array();
        for (const auto& c : b.cases) {
            cases.push_back({{"index", c.index},
                             {"case_seed", c.case_seed},
                             {"passed", c.passed},
                             {"bound", c.bound ? json(*c.bound) : json(nullptr)},
                             {"oracle_count", c.oracle_count ? json(*c.oracle_count) : json(nullptr)},
                             {"cover_ok", c.cover_ok ? json(*c.cover_ok) : json(nullptr)},
                             {"detail", c.detail}});
        }
        batteries.push_back({{"name", b.name},
                             {"cases", std::move(cases)},
                             {"failures", b.failures()},
                             {"passed", b.failures() == 0}});
    }
    return {{"tool", "nonosc"},
            {"seed", r.seed},
            {"cases", r.cases},
            {"which", r.which},
            {"batteries", std::move(batteries)},
            {"total", r.total()},
            {"pass_rate", r.pass_rate()},
            {"passed", r.passed()}};
}

std::vector<LocatedZero> zeros_in_strip(const QuasiPolynomial& qp, double radius, double alpha,
                                        const Tolerances& tol) {
    // A slightly taller box keeps alpha = 0 non-degenerate; the filter restores the strip.
    constexpr double kMargin = 1e-3;
    std::vector<LocatedZero> out;
    for (const auto& z : locate_zeros(qp, {-radius, radius, -alpha - kMargin, alpha + kMargin}, tol))
        if (std::abs(z.location.imag()) <= alpha + 1e-9 && std::abs(z.location.real()) <= radius + 1e-9)
            out.push_back(z);
    return out;
}

bool is_common_zero(const QuasiPolynomial& qp, Complex z) {
    return std::all_of(qp.terms().begin(), qp.terms().end(), [&](const ExpTerm& t) {
        return std::abs(t.coeff(z)) <= 1e-8 * t.coeff.abs_eval(std::abs(z));
    });
}

int resolve_threads(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("NONOSC_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return std::max(1, n);
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    threads = std::max(1, std::min(threads, n));
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace nonosc
