#include "hstar/order.hpp"

#include <numeric>

#include "hstar/errors.hpp"

namespace hstar {

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

MonomialOrder MonomialOrder::lex() { return MonomialOrder(Kind::lex); }
MonomialOrder MonomialOrder::grlex() { return MonomialOrder(Kind::grlex); }
MonomialOrder MonomialOrder::grevlex() { return MonomialOrder(Kind::grevlex); }

MonomialOrder MonomialOrder::block(size_t leading, MonomialOrder inner) {
    MonomialOrder o(Kind::block);
    o.leading_ = leading;
    o.inner_ = std::make_shared<const MonomialOrder>(std::move(inner));
    return o;
}

int MonomialOrder::compare_span(const int* a, const int* b, size_t n) const {
    switch (kind_) {
        case Kind::lex: {
            for (size_t i = 0; i < n; ++i) {
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            }
            return 0;
        }
        case Kind::grlex: {
            long da = 0, db = 0;
            for (size_t i = 0; i < n; ++i) {
                da += a[i];
                db += b[i];
            }
            if (da != db) return da < db ? -1 : 1;
            for (size_t i = 0; i < n; ++i) {
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            }
            return 0;
        }
        case Kind::grevlex: {
            long da = 0, db = 0;
            for (size_t i = 0; i < n; ++i) {
                da += a[i];
                db += b[i];
            }
            if (da != db) return da < db ? -1 : 1;
            for (size_t i = n; i-- > 0;) {
                // Last differing coordinate: the smaller entry belongs to the
                // larger monomial.
                if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
            }
            return 0;
        }
        case Kind::block: {
            // Graded comparison of the leading segment keeps the elimination
            // property (any monomial touching the segment beats any monomial
            // free of it) while behaving far better than lex in Buchberger.
            size_t k = leading_ < n ? leading_ : n;
            long da = 0, db = 0;
            for (size_t i = 0; i < k; ++i) {
                da += a[i];
                db += b[i];
            }
            if (da != db) return da < db ? -1 : 1;
            for (size_t i = k; i-- > 0;) {
                if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
            }
            return inner_->compare_span(a + k, b + k, n - k);
        }
    }
    return 0;
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
    if (a.size() != b.size())
        throw validation_error("monomial comparison across different variable counts");
    return compare_span(a.data(), b.data(), a.size());
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
    if (name == "lex") return lex();
    if (name == "grlex") return grlex();
    if (name == "grevlex") return grevlex();
    throw validation_error("unknown monomial order: '" + name + "'");
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::lex: return "lex";
        case Kind::grlex: return "grlex";
        case Kind::grevlex: return "grevlex";
        case Kind::block: return "block(" + std::to_string(leading_) + "," + inner_->name() + ")";
    }
    return "?";
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ != MonomialOrder::Kind::block) return true;
    return a.leading_ == b.leading_ && *a.inner_ == *b.inner_;
}

} // namespace hstar
