#include "nonosc/majorant.hpp"

#include <algorithm>
#include <cmath>

#include "nonosc/errors.hpp"

namespace nonosc {

std::vector<MajorantPoint> ConcaveMajorant::breakpoints() const {
    std::vector<MajorantPoint> out;
    out.reserve(hull.size());
    for (std::size_t i : hull) out.push_back(points[i]);
    return out;
}

double ConcaveMajorant::eval(double mu) const {
    if (hull.empty()) throw Error(ErrorKind::InvalidArgument, "empty majorant");
    const MajorantPoint& first = points[hull.front()];
    const MajorantPoint& last = points[hull.back()];
    if (mu < first.mu || mu > last.mu) throw Error(ErrorKind::InvalidArgument, "mu outside the majorant's domain");
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const MajorantPoint& a = points[hull[s]];
        const MajorantPoint& b = points[hull[s + 1]];
        if (mu == a.mu) return a.phi;
        if (mu <= b.mu) return mu == b.mu ? b.phi : a.phi + slopes[s] * (mu - a.mu);
    }
    return last.phi;
}

ConcaveMajorant least_concave_majorant(std::span<const MajorantPoint> points) {
    if (points.empty()) throw Error(ErrorKind::InvalidArgument, "majorant of an empty family");
    ConcaveMajorant m;
    m.points.assign(points.begin(), points.end());
    std::sort(m.points.begin(), m.points.end(),
              [](const MajorantPoint& a, const MajorantPoint& b) { return a.mu < b.mu; });
    for (std::size_t i = 1; i < m.points.size(); ++i)
        if (m.points[i].mu == m.points[i - 1].mu)
            throw Error(ErrorKind::DuplicateAbscissa, "two points share the abscissa " + std::to_string(m.points[i].mu));

    const auto slope = [&](std::size_t a, std::size_t b) {
        return (m.points[b].phi - m.points[a].phi) / (m.points[b].mu - m.points[a].mu);
    };
    for (std::size_t i = 0; i < m.points.size(); ++i) {
        // Drop the last hull point while it lies on or below the chord to i.
        while (m.hull.size() >= 2 && slope(m.hull[m.hull.size() - 2], m.hull.back()) <= slope(m.hull.back(), i))
            m.hull.pop_back();
        m.hull.push_back(i);
    }
    for (std::size_t s = 0; s + 1 < m.hull.size(); ++s) m.slopes.push_back(slope(m.hull[s], m.hull[s + 1]));
    return m;
}

ConcaveMajorant shift_majorant(const ConcaveMajorant& m, double u) {
    ConcaveMajorant out = m;
    for (auto& p : out.points) p.phi += u * p.mu;
    for (auto& s : out.slopes) s += u;
    return out;
}

std::size_t central_index(const ConcaveMajorant& m) {
    if (m.hull.empty()) throw Error(ErrorKind::InvalidArgument, "empty majorant");
    // Concave graph: walk right while the segment does not descend.
    std::size_t s = 0;
    while (s < m.slopes.size() && m.slopes[s] >= 0.0) ++s;
    return m.hull[s];
}

std::vector<MajorantPoint> majorant_family(const QuasiPolynomial& qp, double v) {
    if (!qp.simple()) throw Error(ErrorKind::NotSimpleExponents, "majorant family needs constant coefficients");
    std::vector<MajorantPoint> out;
    for (const auto& t : qp.terms())
        out.push_back({t.lambda.real(), std::log(std::abs(t.coeff[0])) - v * t.lambda.imag()});
    return out;
}

}  // namespace nonosc
