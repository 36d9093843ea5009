#include "hstar/unipoly.hpp"

#include <algorithm>

namespace hstar {

UniPoly UniPoly::constant(Rational c) {
    UniPoly p;
    if (!c.is_zero()) p.coeffs.push_back(std::move(c));
    return p;
}

UniPoly UniPoly::monomial(Rational c, int degree) {
    UniPoly p;
    if (!c.is_zero()) {
        p.coeffs.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
        p.coeffs.back() = std::move(c);
    }
    return p;
}

const Rational& UniPoly::leading() const {
    if (is_zero()) throw validation_error("leading coefficient of zero polynomial");
    return coeffs.back();
}

Rational UniPoly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs.size())) return Rational(0);
    return coeffs[static_cast<std::size_t>(d)];
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void UniPoly::trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    r.trim();
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly{};
    UniPoly r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    r.trim();
    return r;
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
    if (c.is_zero()) return UniPoly{};
    UniPoly r = a;
    for (auto& x : r.coeffs) x *= c;
    return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs == b.coeffs; }

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw validation_error("univariate division by zero");
    UniPoly rem = a, quot;
    quot.coeffs.assign(a.coeffs.size(), Rational(0));
    const Rational lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational c = rem.leading() * lead_inv;
        quot.coeffs[static_cast<std::size_t>(shift)] += c;
        for (std::size_t i = 0; i < b.coeffs.size(); ++i)
            rem.coeffs[i + static_cast<std::size_t>(shift)] -= c * b.coeffs[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

XgcdResult xgcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        Rational inv = r0.leading().inverse();
        r0 = inv * r0;
        s0 = inv * s0;
        t0 = inv * t0;
    }
    return {r0, s0, t0};
}

UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    // Newton's divided differences.
    const std::size_t n = points.size();
    std::vector<Rational> coef(n);
    for (std::size_t i = 0; i < n; ++i) coef[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (points[i].first - points[i - level].first);
    UniPoly result = UniPoly::constant(coef.empty() ? Rational(0) : coef[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        UniPoly x_minus(std::vector<Rational>{-points[i].first, Rational(1)});
        result = result * x_minus + UniPoly::constant(coef[i]);
    }
    return result;
}

std::string unipoly_str(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        Rational c = p.coeff(d);
        if (c.is_zero()) continue;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        Rational mag = c.abs();
        if (d == 0) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

} // namespace hstar
