#include "nonosc/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "nonosc/errors.hpp"
#include "nonosc/ode_io.hpp"

namespace nonosc {

using nlohmann::json;

namespace {

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json point_to_json(const Point& p) { return p.is_infinity() ? json("infinity") : complex_to_json(p.value()); }

Point point_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "infinity") throw Error(ErrorKind::InvalidArgument, "unknown point label");
        return Point::infinity();
    }
    return Point::finite(complex_from_json(j));
}

PointKind kind_from_string(const std::string& s) {
    for (PointKind k : {PointKind::Ordinary, PointKind::RegularSingular, PointKind::Irregular})
        if (s == to_string(k)) return k;
    throw Error(ErrorKind::InvalidArgument, "unknown point kind '" + s + "'");
}

Verdict verdict_from_string(const std::string& s) {
    for (Verdict v : {Verdict::GloballyNonOscillating, Verdict::Oscillating, Verdict::Indeterminate})
        if (s == to_string(v)) return v;
    throw Error(ErrorKind::InvalidArgument, "unknown verdict '" + s + "'");
}

json exponents_to_json(const std::vector<Exponent>& e) {
    json out = json::array();
    for (const auto& x : e) out.push_back({{"value", complex_to_json(x.value)}, {"multiplicity", x.multiplicity}});
    return out;
}

json equation_to_json(const LinearODE& ode) {
    json j = ode_to_json(ode);
    j["text"] = format_ode(ode);
    return j;
}

std::string short_complex(Complex c) {
    char buf[80];
    const double re = std::abs(c.real()) < 1e-14 ? 0.0 : c.real();
    const double im = std::abs(c.imag()) < 1e-14 ? 0.0 : c.imag();
    if (im == 0.0) std::snprintf(buf, sizeof buf, "%.10g", re);
    else std::snprintf(buf, sizeof buf, "%.10g%+.10gi", re, im);
    return buf;
}

std::string point_text(const Point& p) { return p.is_infinity() ? "infinity" : short_complex(p.value()); }

}  // namespace

AnalysisReport analyze(const std::string& input, const Tolerances& tol) {
    tol.validate();
    AnalysisReport r;
    r.input = input;
    r.equation = load_ode(input);
    r.normalized = normalize(r.equation, tol);
    r.tolerances = tol;
    r.result = decide(r.normalized, tol);
    return r;
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::InvalidArgument, "complex numbers are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const AnalysisReport& r) {
    json points = json::array();
    for (const auto& e : r.result.evidence) {
        json p;
        p["point"] = point_to_json(e.point);
        p["kind"] = to_string(e.classification.kind);
        p["pole_orders"] = e.classification.pole_orders;
        p["exponents"] = e.exponents ? exponents_to_json(e.exponents->exponents) : json(nullptr);
        p["min_real_gap"] = opt(e.min_real_gap);
        p["tie_band"] = e.tie_band;
        p["tie"] = e.tie ? json{{"real_part", e.tie->real_part},
                                {"imag_first", e.tie->imag_first},
                                {"imag_second", e.tie->imag_second}}
                         : json(nullptr);
        p["indeterminate"] = e.indeterminate;
        p["note"] = e.note;
        points.push_back(std::move(p));
    }
    return {
        {"tool", "nonosc"},
        {"version", r.version},
        {"input", r.input},
        {"equation", equation_to_json(r.equation)},
        {"normalized", equation_to_json(r.normalized)},
        {"tolerances",
         {{"root_tol", r.tolerances.root_tol},
          {"cluster_radius", r.tolerances.cluster_radius},
          {"real_part_tie_tol", r.tolerances.real_part_tie_tol},
          {"contour_min_modulus", r.tolerances.contour_min_modulus}}},
        {"verdict", to_string(r.result.verdict)},
        {"singular_points", std::move(points)},
        {"fuchs_relation",
         {{"residual", opt(r.result.fuchs_relation_residual)}, {"warning", r.result.fuchs_relation_warning}}},
    };
}

AnalysisReport analysis_report_from_json(const json& j) {
    AnalysisReport r;
    r.version = j.at("version").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.equation = ode_from_json(j.at("equation"));
    r.normalized = ode_from_json(j.at("normalized"));
    const json& t = j.at("tolerances");
    r.tolerances = {t.at("root_tol").get<double>(), t.at("cluster_radius").get<double>(),
                    t.at("real_part_tie_tol").get<double>(), t.at("contour_min_modulus").get<double>()};
    r.result.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    for (const json& p : j.at("singular_points")) {
        PointEvidence e;
        e.point = point_from_json(p.at("point"));
        e.classification.kind = kind_from_string(p.at("kind").get<std::string>());
        e.classification.pole_orders = p.at("pole_orders").get<std::vector<int>>();
        if (!p.at("exponents").is_null()) {
            ExponentSet s;
            for (const json& x : p.at("exponents"))
                s.exponents.push_back({complex_from_json(x.at("value")), x.at("multiplicity").get<int>()});
            e.exponents = std::move(s);
        }
        if (!p.at("min_real_gap").is_null()) e.min_real_gap = p.at("min_real_gap").get<double>();
        e.tie_band = p.at("tie_band").get<double>();
        if (!p.at("tie").is_null()) {
            const json& tie = p.at("tie");
            e.tie = TiedPair{tie.at("real_part").get<double>(), tie.at("imag_first").get<double>(),
                             tie.at("imag_second").get<double>()};
        }
        e.indeterminate = p.at("indeterminate").get<bool>();
        e.note = p.at("note").get<std::string>();
        r.result.evidence.push_back(std::move(e));
    }
    const json& f = j.at("fuchs_relation");
    if (!f.at("residual").is_null()) r.result.fuchs_relation_residual = f.at("residual").get<double>();
    r.result.fuchs_relation_warning = f.at("warning").get<bool>();
    return r;
}

std::string to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "equation:   " << format_ode(r.equation) << "\n";
    if (!(r.normalized == r.equation)) os << "normalized: " << format_ode(r.normalized) << "\n";
    os << "singular points: " << r.result.evidence.size() << "\n";
    for (const auto& e : r.result.evidence) {
        os << "  " << point_text(e.point) << "  " << to_string(e.classification.kind);
        if (e.exponents) {
            os << "  exponents {";
            const auto& xs = e.exponents->exponents;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                os << (i ? ", " : "") << short_complex(xs[i].value);
                if (xs[i].multiplicity > 1) os << " (x" << xs[i].multiplicity << ")";
            }
            os << "}";
        }
        if (e.min_real_gap) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "  min real gap %.6g", *e.min_real_gap);
            os << buf;
        }
        if (!e.note.empty()) os << "  [" << e.note << "]";
        os << "\n";
    }
    if (r.result.fuchs_relation_warning) os << "warning: exponent sum does not match the Fuchs relation\n";
    os << "verdict: " << to_string(r.result.verdict) << "\n";
    return os.str();
}

json qp_to_json(const QuasiPolynomial& qp) {
    json terms = json::array();
    for (const auto& t : qp.terms()) {
        json c = json::array();
        for (Complex a : t.coeff.coeffs()) c.push_back(complex_to_json(a));
        terms.push_back({{"lambda", complex_to_json(t.lambda)}, {"coefficients", std::move(c)}});
    }
    return {{"terms", std::move(terms)}};
}

QuasiPolynomial qp_from_json(const json& j) {
    std::vector<ExpTerm> terms;
    for (const json& t : j.at("terms")) {
        std::vector<Complex> c;
        for (const json& a : t.at("coefficients")) c.push_back(complex_from_json(a));
        terms.push_back({complex_from_json(t.at("lambda")), Polynomial(std::move(c))});
    }
    return QuasiPolynomial(std::move(terms));
}

json box_to_json(const Box& b) { return json::array({b.u_lo, b.u_hi, b.v_lo, b.v_hi}); }

json cover_to_json(const BoxCover& c) {
    json boxes = json::array();
    for (const auto& b : c.boxes) boxes.push_back(box_to_json(b));
    return {{"kind", to_string(c.kind)},         {"boxes", std::move(boxes)},
            {"total_width", c.total_width},      {"count_bound", c.count_bound},
            {"width_bound", c.width_bound},      {"padding", c.padding}};
}

json spectrum_to_json(const SpectrumStats& s) {
    return {{"theta", s.theta}, {"xi", s.xi}, {"path_length", s.path_length}, {"path_heuristic", s.path_heuristic}};
}

json sector_to_json(const SectorBound& s) {
    return {{"value", s.bound},
            {"k", s.k},
            {"exponents", exponents_to_json(s.exponents)},
            {"theta", s.theta},
            {"xi", s.xi},
            {"C", s.coefficient_bound},
            {"C_eps", s.decay_constant},
            {"C_eq", s.c_eq},
            {"cover_width", s.cover_width},
            {"ell", s.ell},
            {"non_rigorous", s.coefficient_bound_sampled}};
}

}  // namespace nonosc
