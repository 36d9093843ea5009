#include "hstar/ideal.hpp"

#include "hstar/errors.hpp"

namespace hstar {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    gens_.reserve(generators.size());
    for (auto& g : generators) {
        if (g.ring() != ring_)
            throw ring_mismatch_error("generator does not belong to the ideal's ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

bool Ideal::is_homogeneous() const {
    for (const auto& g : gens_)
        if (!g.is_homogeneous()) return false;
    return true;
}

} // namespace hstar
