#ifndef HSTAR_VERIFY_HPP
#define HSTAR_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hstar/hadamard.hpp"
#include "hstar/toricgraph.hpp"

namespace hstar {

/// Deterministic 64-bit generator (SplitMix64). The stream depends only on
/// the seed, never on the platform, so suite runs are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t n);  // uniform in [0, n), n >= 1
    long int_in(long lo, long hi);         // uniform in [lo, hi]

private:
    std::uint64_t state_;
};

/// A pair of binomial ideals with identical exponent pairs and planted
/// witness points: p lies on V(I) and q on V(J) by construction.
struct PlantedPair {
    Ideal I;
    Ideal J;
    ProjectivePoint p;
    ProjectivePoint q;
};

/// 2..5 variables, 1..3 generators of degree 2..3 with exponent entries <= 3,
/// witness coordinates small nonzero rationals.
PlantedPair random_planted_pair(Rng& rng);

struct SuiteResult {
    std::string suite;
    int checks = 0;
    int passed = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Golden binomial-pair values plus `cases` randomized witness-planted pairs:
/// fast path = elimination path = witness transform, transformed bases stay
/// Groebner, products commute, double transforms are the identity.
SuiteResult run_suite_hadamard(std::uint64_t seed, int cases, const Caps& caps = default_caps());

/// For the same planted pairs: leading-term ideals of I, J, I*J agree under
/// lex, graded-lex, and graded-reverse-lex; Hilbert functions agree up to
/// degree 10 and are order-independent; degree/dimension triples agree.
SuiteResult run_suite_hilbert(std::uint64_t seed, int cases, const Caps& caps = default_caps());

/// Fixed 8-graph corpus: walk oracle vs elimination, monomial-freeness,
/// the all-ones point, toric idempotency, and 10 subgraph product identities.
/// seed and cases are accepted for interface uniformity and ignored.
SuiteResult run_suite_toric(std::uint64_t seed, int cases, const Caps& caps = default_caps());

/// Golden fiber values plus `cases` randomized principal binomial ideals:
/// certified status, the base point on V(J), sampled fiber points, and the
/// pure-difference rescaling structure.
SuiteResult run_suite_fiber(std::uint64_t seed, int cases, const Caps& caps = default_caps());

/// Dispatch by name: "hadamard", "toric", "hilbert", "fiber", or "all".
std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed, int cases,
                                    const Caps& caps = default_caps());

/// C3, C4, C6, P3, P4, C4 plus a chord, two C4s sharing an edge, K4.
std::vector<Graph> toric_corpus();

/// Ten (G, H) index pairs into toric_corpus() with H a subgraph of G.
std::vector<std::pair<size_t, size_t>> designated_subgraph_pairs();

} // namespace hstar

#endif
