#pragma once

#include <string>

#include <json.hpp>

#include "nonosc/cover.hpp"
#include "nonosc/fuchs.hpp"
#include "nonosc/sector.hpp"

namespace nonosc {

inline constexpr const char* kToolVersion = "0.1.0";

struct AnalysisReport {
    std::string version = kToolVersion;
    std::string input;
    LinearODE equation{{Polynomial{1.0}, Polynomial{1.0}}};
    LinearODE normalized{{Polynomial{1.0}, Polynomial{1.0}}};
    Tolerances tolerances;
    NonOscillationVerdict result;
};

/// parse -> normalize -> singular points -> classification -> exponents -> verdict.
AnalysisReport analyze(const std::string& input, const Tolerances& tol = {});

nlohmann::json complex_to_json(Complex c);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport analysis_report_from_json(const nlohmann::json& j);
std::string to_text(const AnalysisReport& r);

nlohmann::json qp_to_json(const QuasiPolynomial& qp);
QuasiPolynomial qp_from_json(const nlohmann::json& j);

nlohmann::json box_to_json(const Box& b);
nlohmann::json cover_to_json(const BoxCover& c);
nlohmann::json spectrum_to_json(const SpectrumStats& s);
nlohmann::json sector_to_json(const SectorBound& s);

}  // namespace nonosc
