#include "hstar/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "hstar/errors.hpp"

namespace hstar {

int euler_totient(int m) {
    if (m < 1) throw validation_error("euler_totient: order must be positive");
    int result = m;
    int n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

UniPoly cyclotomic_polynomial(int m) {
    if (m < 1) throw validation_error("cyclotomic_polynomial: order must be positive");
    static std::map<int, UniPoly> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    // t^m - 1 = prod_{d | m} Phi_d, so Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d.
    std::vector<Rational> pc(static_cast<size_t>(m) + 1, Rational(0));
    pc[0] = Rational(-1);
    pc[static_cast<size_t>(m)] = Rational(1);
    UniPoly num{pc};
    UniPoly den = UniPoly::constant(Rational(1));
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) den = den * cyclotomic_polynomial(d);
    }
    auto [q, r] = divmod(num, den);
    if (r.degree() != -1)
        throw validation_error("cyclotomic_polynomial: internal division failure");
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        cache.emplace(m, q);
    }
    return q;
}

CycloElement::CycloElement(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (order < 1) throw validation_error("CycloElement: order must be positive");
    size_t phi = static_cast<size_t>(euler_totient(order));
    if (c_.size() != phi)
        throw validation_error("CycloElement: expected " + std::to_string(phi) + " coefficients, got " +
                               std::to_string(c_.size()));
}

CycloElement CycloElement::zero(int order) {
    return CycloElement(order, std::vector<Rational>(static_cast<size_t>(euler_totient(order)), Rational(0)));
}

CycloElement CycloElement::from_rational(int order, const Rational& r) {
    auto z = zero(order);
    z.c_[0] = r;
    return z;
}

CycloElement CycloElement::zeta(int order) {
    auto z = zero(order);
    if (z.c_.size() == 1) {
        // phi(order) = 1 only for order 1 or 2; zeta_1 = 1, zeta_2 = -1.
        z.c_[0] = Rational(order == 2 ? -1 : 1);
    } else {
        z.c_[1] = Rational(1);
    }
    return z;
}

bool CycloElement::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool CycloElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational CycloElement::rational_part() const {
    if (!is_rational()) throw validation_error("CycloElement: not a rational value");
    return c_[0];
}

void CycloElement::check_same_order(const CycloElement& a, const CycloElement& b) {
    if (a.order_ != b.order_)
        throw ring_mismatch_error("cyclotomic elements of different orders: " + std::to_string(a.order_) +
                                  " vs " + std::to_string(b.order_));
}

CycloElement CycloElement::operator-() const {
    CycloElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    CycloElement::check_same_order(a, b);
    CycloElement r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
    return a + (-b);
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    CycloElement::check_same_order(a, b);
    UniPoly pa{a.c_};
    UniPoly pb{b.c_};
    UniPoly prod = pa * pb;
    auto [q, rem] = divmod(prod, cyclotomic_polynomial(a.order_));
    (void)q;
    std::vector<Rational> rc(a.c_.size(), Rational(0));
    for (size_t i = 0; i < rc.size() && i < rem.coeffs.size(); ++i) rc[i] = rem.coeffs[i];
    return CycloElement(a.order_, std::move(rc));
}

CycloElement CycloElement::inverse() const {
    if (is_zero()) throw validation_error("CycloElement: division by zero");
    UniPoly self{c_};
    auto res = xgcd(self, cyclotomic_polynomial(order_));
    // Phi_m is irreducible over Q, so the gcd of a nonzero residue with it is 1.
    if (res.g.degree() != 0)
        throw validation_error("CycloElement: inverse does not exist");
    UniPoly inv = res.g.coeffs[0].inverse() * res.s;
    auto [q, rem] = divmod(inv, cyclotomic_polynomial(order_));
    (void)q;
    std::vector<Rational> rc(c_.size(), Rational(0));
    for (size_t i = 0; i < rc.size() && i < rem.coeffs.size(); ++i) rc[i] = rem.coeffs[i];
    return CycloElement(order_, std::move(rc));
}

CycloElement CycloElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloElement base = *this;
    CycloElement acc = from_rational(order_, Rational(1));
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1UL) acc = acc * base;
        base = base * base;
        k >>= 1UL;
    }
    return acc;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
}

FieldElement::FieldElement(CycloElement c) : v_(Rational(0)) {
    if (c.is_rational())
        v_ = c.rational_part();
    else
        v_ = std::move(c);
}

bool FieldElement::is_zero() const {
    if (is_rational()) return rational().is_zero();
    return false;  // non-rational cyclotomic values are never zero (zero demotes)
}

bool FieldElement::is_one() const {
    return is_rational() && rational().is_one();
}

const Rational& FieldElement::rational() const {
    if (!is_rational()) throw validation_error("FieldElement: not a rational value");
    return std::get<Rational>(v_);
}

const CycloElement& FieldElement::cyclo() const {
    if (is_rational()) throw validation_error("FieldElement: not a cyclotomic value");
    return std::get<CycloElement>(v_);
}

FieldElement FieldElement::operator-() const {
    if (is_rational()) return FieldElement(-rational());
    return FieldElement(-cyclo());
}

namespace {

// Lift both operands into Q(zeta_m) when either is cyclotomic.
CycloElement lift(const FieldElement& x, int order) {
    if (x.is_rational()) return CycloElement::from_rational(order, x.rational());
    return x.cyclo();
}

template <typename Op>
FieldElement combine(const FieldElement& a, const FieldElement& b, Op op) {
    if (a.is_rational() && b.is_rational()) return FieldElement(op(a.rational(), b.rational()));
    int order = a.is_rational() ? b.cyclo().order() : a.cyclo().order();
    return FieldElement(op(lift(a, order), lift(b, order)));
}

} // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
}

FieldElement FieldElement::inverse() const {
    if (is_rational()) return FieldElement(rational().inverse());
    return FieldElement(cyclo().inverse());
}

FieldElement FieldElement::pow(long e) const {
    if (is_rational()) return FieldElement(rational().pow(e));
    return FieldElement(cyclo().pow(e));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.is_rational() != b.is_rational()) return false;
    if (a.is_rational()) return a.rational() == b.rational();
    return a.cyclo() == b.cyclo();
}

} // namespace hstar
