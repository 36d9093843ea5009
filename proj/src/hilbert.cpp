#include "hstar/hilbert.hpp"

#include <algorithm>

#include "hstar/errors.hpp"

namespace hstar {

namespace {

// Number of monomials of total degree exactly d in n variables: C(d+n-1, n-1).
mpz_class monomial_count(int d, size_t n) {
    if (d < 0) return 0;
    if (n == 0) return d == 0 ? 1 : 0;
    mpz_class num = 1, den = 1;
    for (size_t k = 1; k < n; ++k) {
        num *= d + static_cast<long>(k);
        den *= static_cast<long>(k);
    }
    return num / den;
}

long count_standard(const std::vector<Exponents>& gens, size_t var, int rem,
                    std::vector<const Exponents*> active, size_t nvars) {
    if (var + 1 == nvars) {
        for (const Exponents* g : active)
            if ((*g)[var] <= rem) return 0;
        return 1;
    }
    long total = 0;
    for (int e = 0; e <= rem; ++e) {
        std::vector<const Exponents*> next;
        next.reserve(active.size());
        for (const Exponents* g : active)
            if ((*g)[var] <= e) next.push_back(g);
        total += count_standard(gens, var + 1, rem - e, std::move(next), nvars);
    }
    return total;
}

} // namespace

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Exponents> gens) : ring_(std::move(ring)) {
    for (const auto& e : gens) {
        if (e.size() != ring_.nvars())
            throw validation_error("monomial ideal generator length does not match ring");
        for (int x : e)
            if (x < 0) throw validation_error("negative exponent in monomial ideal generator");
    }
    // Keep only divisibility-minimal exponents, without duplicates.
    for (size_t i = 0; i < gens.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < gens.size() && minimal; ++j) {
            if (i == j) continue;
            if (gens[j] == gens[i]) {
                if (j < i) minimal = false;
            } else if (exps_divides(gens[j], gens[i])) {
                minimal = false;
            }
        }
        if (minimal) gens_.push_back(gens[i]);
    }
    const MonomialOrder cmp = MonomialOrder::grevlex();
    std::sort(gens_.begin(), gens_.end(),
              [&](const Exponents& a, const Exponents& b) { return cmp.compare(a, b) < 0; });
}

bool MonomialIdeal::divides_some_gen(const Exponents& e) const {
    for (const auto& g : gens_)
        if (exps_divides(g, e)) return true;
    return false;
}

MonomialIdeal leading_term_ideal(const Ideal& I, const MonomialOrder& order, const Caps& caps) {
    GroebnerBasis gb = reduced_groebner_basis(I, order, caps);
    std::vector<Exponents> lms;
    lms.reserve(gb.elements.size());
    for (const auto& f : gb.elements) lms.push_back(f.leading_term(order).exps);
    return MonomialIdeal(I.ring(), std::move(lms));
}

mpz_class hilbert_function(const MonomialIdeal& M, int d, const Caps& caps) {
    if (d < 0) throw validation_error("Hilbert function degree must be non-negative");
    if (d > caps.hf_degree_cap)
        throw cap_exceeded_error("Hilbert function degree " + std::to_string(d) +
                                 " exceeds the configured cap");
    size_t n = M.ring().nvars();
    if (M.min_gens().empty()) return monomial_count(d, n);
    // A generator with all-zero exponents is the unit ideal.
    for (const auto& g : M.min_gens())
        if (total_degree(g) == 0) return 0;
    if (n == 0) return 0;
    std::vector<const Exponents*> active;
    active.reserve(M.min_gens().size());
    for (const auto& g : M.min_gens()) active.push_back(&g);
    return count_standard(M.min_gens(), 0, d, std::move(active), n);
}

mpz_class hilbert_function_inclusion_exclusion(const MonomialIdeal& M, int d, const Caps& caps) {
    if (d < 0) throw validation_error("Hilbert function degree must be non-negative");
    if (d > caps.hf_degree_cap)
        throw cap_exceeded_error("Hilbert function degree exceeds the configured cap");
    const auto& gens = M.min_gens();
    if (gens.size() > 25)
        throw cap_exceeded_error("inclusion–exclusion over " + std::to_string(gens.size()) +
                                 " generators is beyond the subset cap");
    size_t n = M.ring().nvars();
    mpz_class total = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << gens.size()); ++mask) {
        Exponents lcm(n, 0);
        int bits = 0;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (mask & (1ULL << i)) {
                ++bits;
                lcm = exps_lcm(lcm, gens[i]);
            }
        }
        mpz_class c = monomial_count(d - total_degree(lcm), n);
        total += (bits % 2 == 0) ? c : -c;
    }
    return total;
}

HilbertData hilbert_polynomial(const Ideal& I, const MonomialOrder& order, const Caps& caps) {
    if (!I.is_homogeneous())
        throw validation_error("Hilbert data requires a homogeneous ideal");
    MonomialIdeal M = leading_term_ideal(I, order, caps);
    size_t n = I.ring().nvars();

    HilbertData data;
    for (int window : {25, 50}) {
        int D = std::min(window, caps.hf_degree_cap);
        while (static_cast<int>(data.values.size()) <= D)
            data.values.push_back(hilbert_function(M, static_cast<int>(data.values.size()), caps));

        // Difference tables: diff[k][i] = k-th finite difference at i.
        std::vector<std::vector<mpz_class>> diff{data.values};
        for (size_t k = 1; k <= n + 1 && diff.back().size() > 1; ++k) {
            const auto& prev = diff.back();
            std::vector<mpz_class> next(prev.size() - 1);
            for (size_t i = 0; i + 1 < prev.size(); ++i) next[i] = prev[i + 1] - prev[i];
            diff.push_back(std::move(next));
        }

        // Least k whose differences vanish from some index on, then least
        // such index; require at least 3 degrees beyond the interpolation
        // nodes for verification.
        for (size_t k = 0; k < diff.size(); ++k) {
            const auto& row = diff[k];
            size_t s = row.size();
            while (s > 0 && row[s - 1] == 0) --s;
            if (s + 3 > row.size()) continue;  // not enough verified zero tail
            int start = static_cast<int>(s);
            if (static_cast<int>(k) + start > D) continue;

            std::vector<std::pair<Rational, Rational>> pts;
            for (int i = start; i < start + static_cast<int>(k); ++i)
                pts.emplace_back(Rational(i), Rational(mpq_class(data.values[static_cast<size_t>(i)])));
            UniPoly P = k == 0 ? UniPoly() : interpolate(pts);

            bool match = true;
            for (int i = start; i <= D && match; ++i)
                if (P.evaluate(Rational(i)) != Rational(mpq_class(data.values[static_cast<size_t>(i)])))
                    match = false;
            if (!match) continue;

            data.polynomial = P;
            data.stabilization_degree = start;
            return data;
        }
    }
    return data;  // no stabilization within the window; polynomial absent
}

DegreeDimension degree_and_dimension(const Ideal& I, const Caps& caps) {
    HilbertData data = hilbert_polynomial(I, MonomialOrder::grevlex(), caps);
    if (!data.polynomial)
        throw validation_error("Hilbert function did not stabilize within the degree window");
    const UniPoly& P = *data.polynomial;
    int dim = P.degree();
    if (dim < 0) return DegreeDimension{0, -1};  // empty variety
    Rational lead = P.leading();
    for (int k = 2; k <= dim; ++k) lead = lead * Rational(k);
    if (!lead.is_integer())
        throw validation_error("internal: degree computation did not yield an integer");
    return DegreeDimension{static_cast<long>(lead.numerator().get_si()), dim};
}

} // namespace hstar
