#ifndef HSTAR_ORDER_HPP
#define HSTAR_ORDER_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace hstar {

using Exponents = std::vector<int>;

/// Total degree of an exponent vector.
int total_degree(const Exponents& e);

/// A monomial order on exponent vectors. Supported orders:
///  - lex: larger entry in the first differing coordinate wins
///  - grlex: total degree first, ties broken by lex
///  - grevlex: total degree first, ties broken from the last coordinate
///    backwards with the smaller entry winning
///  - block(k, inner): graded reverse lex on the first k coordinates, ties
///    broken by the inner order on the remaining coordinates (an elimination
///    order for the first k variables)
class MonomialOrder {
public:
    enum class Kind { lex, grlex, grevlex, block };

    static MonomialOrder lex();
    static MonomialOrder grlex();
    static MonomialOrder grevlex();
    static MonomialOrder block(size_t leading, MonomialOrder inner);

    Kind kind() const { return kind_; }
    size_t leading() const { return leading_; }
    const MonomialOrder& inner() const { return *inner_; }

    /// Three-way comparison: negative when a < b, zero when equal, positive
    /// when a > b. Both vectors must have the same length.
    int compare(const Exponents& a, const Exponents& b) const;

    /// Parse "lex" | "grlex" | "grevlex" (CLI names). Throws validation_error
    /// on anything else.
    static MonomialOrder parse(const std::string& name);
    std::string name() const;

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);
    friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    Kind kind_;
    size_t leading_ = 0;
    std::shared_ptr<const MonomialOrder> inner_;

    int compare_span(const int* a, const int* b, size_t n) const;
};

} // namespace hstar

#endif
