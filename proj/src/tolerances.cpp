#include "nonosc/tolerances.hpp"

#include <cmath>

#include "nonosc/errors.hpp"

namespace nonosc {

void Tolerances::validate() const {
    for (double v : {root_tol, cluster_radius, real_part_tie_tol, contour_min_modulus})
        if (!(v > 0.0) || !std::isfinite(v))
            throw Error(ErrorKind::InvalidArgument, "tolerances must be strictly positive and finite");
}

}  // namespace nonosc
