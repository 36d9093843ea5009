#ifndef HSTAR_CAPS_HPP
#define HSTAR_CAPS_HPP

#include <atomic>
#include <cstdint>

namespace hstar {

/// Resource limits for the potentially expensive computations. All limits are
/// positive; exceeding one raises cap_exceeded_error. A non-null `cancel`
/// pointer is polled at S-pair boundaries and aborts with cancelled_error.
struct Caps {
    std::uint64_t spair_limit = 50000;        // S-pair reductions per Buchberger run
    std::uint64_t term_limit = 1000000;       // total terms touched per Buchberger run
    int hf_degree_cap = 50;                   // largest degree for Hilbert-function values
    std::uint64_t walk_limit = 2000000;       // enumeration steps for closed-walk search
    int cyclo_order_cap = 12;                 // largest cyclotomic order accepted
    const std::atomic<bool>* cancel = nullptr;
};

inline const Caps& default_caps() {
    static const Caps caps{};
    return caps;
}

} // namespace hstar

#endif
