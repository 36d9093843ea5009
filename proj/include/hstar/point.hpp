#ifndef HSTAR_POINT_HPP
#define HSTAR_POINT_HPP

#include <vector>

#include "hstar/polynomial.hpp"

namespace hstar {

/// A point of projective space P^n over the ring's coefficient field,
/// normalized so that its first nonzero coordinate is 1. The ring supplies
/// the dimension (nvars = n+1) and the field.
class ProjectivePoint {
public:
    ProjectivePoint(Ring ring, std::vector<FieldElement> coords);

    static ProjectivePoint all_ones(const Ring& r);

    const Ring& ring() const { return ring_; }
    const std::vector<FieldElement>& coords() const { return coords_; }

    bool has_no_zero_coordinate() const;

    /// Coordinate-wise inverse; requires no zero coordinate.
    ProjectivePoint inverse() const;

    /// p^alpha = prod coords[i]^alpha[i].
    FieldElement power(const Exponents& alpha) const;

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.ring_ == b.ring_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }

private:
    Ring ring_;
    std::vector<FieldElement> coords_;
};

} // namespace hstar

#endif
