#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nonosc/random.hpp"
#include "nonosc/zero_count.hpp"

namespace nonosc {

struct CaseRecord {
    int index = 0;
    std::uint64_t case_seed = 0;
    bool passed = false;
    std::optional<double> bound;
    std::optional<int> oracle_count;
    std::optional<bool> cover_ok;
    std::string detail;
};

struct BatteryResult {
    std::string name;
    std::vector<CaseRecord> cases;
    int failures() const noexcept;
};

struct VerificationResult {
    std::uint64_t seed = 0;
    int cases = 0;
    std::string which;
    std::vector<BatteryResult> batteries;

    int total() const noexcept;
    int passed_count() const noexcept;
    double pass_rate() const noexcept;  // 1 for an empty run
    bool passed() const noexcept { return passed_count() == total(); }
};

struct VerifyOptions {
    double strip_radius = 20.0;
    double dominance_step = 0.05;  // u-grid step on [-strip_radius, strip_radius]
    int multiple_cases = -1;       // extra multiple-exponent cover cases; -1 means count / 2
    int threads = 0;               // 0: hardware concurrency capped by NONOSC_THREADS
};

/// Battery names accepted by run_verify besides "all".
const std::vector<std::string>& battery_names();

/// Runs the named batteries on seeded cases. Deterministic for a given spec,
/// independent of the thread count. Throws InvalidArgument on an unknown name.
VerificationResult run_verify(const RandomSpec& spec, const std::string& which, const VerifyOptions& opts = {});

nlohmann::json to_json(const VerificationResult& r);

/// Zeros in [-R, R] x [-alpha, alpha] (also for alpha = 0), with multiplicity.
std::vector<LocatedZero> zeros_in_strip(const QuasiPolynomial& qp, double radius, double alpha,
                                        const Tolerances& tol = {});

/// All A_j vanish at z, up to rounding.
bool is_common_zero(const QuasiPolynomial& qp, Complex z);

/// Worker count: `requested` if positive, else hardware concurrency; capped by
/// NONOSC_THREADS when set.
int resolve_threads(int requested);

/// Calls fn(i) for i in [0, n) on `threads` workers.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace nonosc
