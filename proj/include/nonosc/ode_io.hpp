#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "nonosc/ode.hpp"

namespace nonosc {

/// Parses `expr = expr` where both sides are linear in y and its derivatives
/// with polynomial-in-z multipliers. Derivatives are written y, y', y'', ...
/// or y^(n); complex literals use a trailing i (e.g. 2+3i). Repeated
/// derivative orders are summed.
///
/// Throws ParseError (with byte offset and expected tokens) or OrderZero.
LinearODE parse_ode(std::string_view text);

/// A y-free expression in z.
Polynomial parse_polynomial(std::string_view text);

/// A y-free, z-free expression such as "1-2i" or "(3+i)/2".
Complex parse_complex(std::string_view text);

/// Canonical text form; `parse_ode(format_ode(e)) == e` holds bit-exactly.
std::string format_ode(const LinearODE& ode);
std::string format_polynomial(const Polynomial& p);
std::string format_complex(Complex c);

/// {"coefficients": [[[re, im], ...] per derivative order, ascending]}
LinearODE ode_from_json(const nlohmann::json& j);
nlohmann::json ode_to_json(const LinearODE& ode);

/// JSON when the first non-blank character is '{', the text grammar otherwise.
LinearODE load_ode(std::string_view text);

}  // namespace nonosc
