#include "hstar/point.hpp"

#include "hstar/errors.hpp"

namespace hstar {

ProjectivePoint::ProjectivePoint(Ring ring, std::vector<FieldElement> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
    if (coords_.size() != ring_.nvars())
        throw validation_error("projective point has " + std::to_string(coords_.size()) +
                               " coordinates; ring has " + std::to_string(ring_.nvars()) +
                               " variables");
    if (ring_.nvars() == 0) throw validation_error("projective point needs at least one coordinate");
    size_t first = coords_.size();
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (!coords_[i].is_zero()) {
            first = i;
            break;
        }
    }
    if (first == coords_.size())
        throw validation_error("projective point cannot have all coordinates zero");
    FieldElement scale = coords_[first].inverse();
    for (auto& c : coords_) c = scale * c;
}

ProjectivePoint ProjectivePoint::all_ones(const Ring& r) {
    return ProjectivePoint(r, std::vector<FieldElement>(r.nvars(), FieldElement::one()));
}

bool ProjectivePoint::has_no_zero_coordinate() const {
    for (const auto& c : coords_)
        if (c.is_zero()) return false;
    return true;
}

ProjectivePoint ProjectivePoint::inverse() const {
    if (!has_no_zero_coordinate())
        throw validation_error("coordinate-wise inverse of a point with a zero coordinate");
    std::vector<FieldElement> inv;
    inv.reserve(coords_.size());
    for (const auto& c : coords_) inv.push_back(c.inverse());
    return ProjectivePoint(ring_, std::move(inv));
}

FieldElement ProjectivePoint::power(const Exponents& alpha) const {
    if (alpha.size() != coords_.size())
        throw validation_error("exponent vector length does not match point dimension");
    FieldElement acc = FieldElement::one();
    for (size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] != 0) acc = acc * coords_[i].pow(alpha[i]);
    return acc;
}

} // namespace hstar
