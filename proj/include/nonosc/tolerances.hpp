#pragma once

namespace nonosc {

struct Tolerances {
    double root_tol = 1e-10;            // residual tolerance, relative to coefficient scale
    double cluster_radius = 1e-6;       // roots closer than this are one root
    double real_part_tie_tol = 1e-8;    // relative to the exponent spread
    double contour_min_modulus = 1e-12; // relative to the sum of term moduli

    // Throws InvalidArgument unless every field is strictly positive and finite.
    void validate() const;
};

}  // namespace nonosc
