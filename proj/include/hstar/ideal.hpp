#ifndef HSTAR_IDEAL_HPP
#define HSTAR_IDEAL_HPP

#include <vector>

#include "hstar/polynomial.hpp"

namespace hstar {

/// An ideal given by a finite generating set. Zero generators are dropped on
/// construction, so the zero ideal is exactly the one with no generators.
class Ideal {
public:
    explicit Ideal(Ring ring, std::vector<Polynomial> generators = {});

    static Ideal zero(const Ring& r) { return Ideal(r); }

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_homogeneous() const;

    /// Structural equality of generator lists (not ideal-theoretic equality).
    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.ring_ == b.ring_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

private:
    Ring ring_;
    std::vector<Polynomial> gens_;
};

} // namespace hstar

#endif
