#include "hstar/polynomial.hpp"

#include <algorithm>
#include <map>

#include "hstar/errors.hpp"

namespace hstar {

bool exps_divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exps_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponents exps_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw validation_error("exps_sub: result has a negative exponent");
    }
    return r;
}

Exponents exps_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool exps_coprime(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

namespace {
const MonomialOrder& storage_order() {
    static const MonomialOrder o = MonomialOrder::grlex();
    return o;
}
} // namespace

void Polynomial::normalize() {
    std::map<Exponents, FieldElement> merged;
    for (auto& t : terms_) {
        if (t.exps.size() != ring_.nvars())
            throw validation_error("term exponent vector length does not match ring");
        for (int e : t.exps)
            if (e < 0) throw validation_error("negative exponent in term");
        auto [it, inserted] = merged.emplace(t.exps, t.coeff);
        if (!inserted) it->second = it->second + t.coeff;
    }
    terms_.clear();
    terms_.reserve(merged.size());
    for (auto& [e, c] : merged)
        if (!c.is_zero()) terms_.push_back(Term{c, e});
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return storage_order().compare(a.exps, b.exps) > 0;
    });
}

Polynomial Polynomial::constant(const Ring& r, FieldElement c) {
    Polynomial p(r);
    if (!c.is_zero()) p.terms_.push_back(Term{std::move(c), Exponents(r.nvars(), 0)});
    return p;
}

Polynomial Polynomial::variable(const Ring& r, size_t index) {
    if (index >= r.nvars()) throw validation_error("variable index out of range");
    Exponents e(r.nvars(), 0);
    e[index] = 1;
    Polynomial p(r);
    p.terms_.push_back(Term{FieldElement::one(), std::move(e)});
    return p;
}

Polynomial Polynomial::monomial(const Ring& r, FieldElement c, Exponents e) {
    Polynomial p(r);
    p.terms_.push_back(Term{std::move(c), std::move(e)});
    p.normalize();
    return p;
}

Polynomial Polynomial::from_terms(const Ring& r, std::vector<Term> terms) {
    Polynomial p(r);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_[0].exps) == 0;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.exps));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_[0].exps);
    for (const auto& t : terms_)
        if (total_degree(t.exps) != d) return false;
    return true;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw validation_error("leading term of the zero polynomial");
    const Term* best = &terms_[0];
    for (size_t i = 1; i < terms_.size(); ++i)
        if (order.compare(terms_[i].exps, best->exps) > 0) best = &terms_[i];
    return *best;
}

void Polynomial::check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_) throw ring_mismatch_error("polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial::check_same_ring(a, b);
    std::vector<Term> ts = a.terms_;
    ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
    return Polynomial::from_terms(a.ring_, std::move(ts));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial::check_same_ring(a, b);
    std::vector<Term> ts;
    ts.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            ts.push_back(Term{ta.coeff * tb.coeff, exps_add(ta.exps, tb.exps)});
    return Polynomial::from_terms(a.ring_, std::move(ts));
}

Polynomial operator*(const FieldElement& c, const Polynomial& p) {
    if (c.is_zero()) return Polynomial::zero(p.ring());
    Polynomial r = p;
    for (auto& t : r.terms_) t.coeff = c * t.coeff;
    return r;
}

Polynomial Polynomial::pow(long e) const {
    if (e < 0) throw validation_error("polynomial power with negative exponent");
    Polynomial acc = Polynomial::constant(ring_, FieldElement::one());
    Polynomial base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1UL) acc = acc * base;
        base = base * base;
        k >>= 1UL;
    }
    return acc;
}

Polynomial Polynomial::mul_term(const FieldElement& c, const Exponents& e) const {
    if (c.is_zero()) return Polynomial::zero(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back(Term{c * t.coeff, exps_add(t.exps, e)});
    // Multiplying every exponent by the same shift preserves the sorted order.
    return r;
}

FieldElement Polynomial::evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != ring_.nvars())
        throw validation_error("evaluation point has wrong number of coordinates");
    FieldElement acc = FieldElement::zero();
    for (const auto& t : terms_) {
        FieldElement v = t.coeff;
        for (size_t i = 0; i < point.size(); ++i)
            if (t.exps[i] != 0) v = v * point[i].pow(t.exps[i]);
        acc = acc + v;
    }
    return acc;
}

Polynomial Polynomial::map_to(const Ring& target, const std::vector<size_t>& var_map) const {
    if (var_map.size() != ring_.nvars())
        throw validation_error("variable map length does not match source ring");
    bool coeff_ok = ring_.field() == target.field() ||
                    (!ring_.field().is_cyclotomic && target.field().is_cyclotomic);
    if (!coeff_ok)
        throw ring_mismatch_error("coefficients do not embed into the target ring's field");
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponents e(target.nvars(), 0);
        for (size_t i = 0; i < var_map.size(); ++i) {
            if (var_map[i] >= target.nvars())
                throw validation_error("variable map index out of range");
            e[var_map[i]] += t.exps[i];
        }
        ts.push_back(Term{t.coeff, std::move(e)});
    }
    return Polynomial::from_terms(target, std::move(ts));
}

} // namespace hstar
