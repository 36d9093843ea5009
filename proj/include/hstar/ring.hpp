#ifndef HSTAR_RING_HPP
#define HSTAR_RING_HPP

#include <optional>
#include <string>
#include <vector>

namespace hstar {

/// Coefficient field of a polynomial ring: Q, or the cyclotomic field
/// Q(zeta_m) for cyclotomic_order = m >= 1.
struct FieldSpec {
    bool is_cyclotomic = false;
    int cyclotomic_order = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec cyclotomic(int m) { return {true, m}; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.is_cyclotomic == b.is_cyclotomic &&
               (!a.is_cyclotomic || a.cyclotomic_order == b.cyclotomic_order);
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

/// A polynomial ring: an ordered list of distinct variable names over a field.
/// Variable order is significant; monomial orders refer to positions here.
class Ring {
public:
    Ring(std::vector<std::string> vars, FieldSpec field = FieldSpec::rationals());

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    const FieldSpec& field() const { return field_; }

    std::optional<size_t> index_of(const std::string& name) const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.vars_ == b.vars_ && a.field_ == b.field_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    std::vector<std::string> vars_;
    FieldSpec field_;
};

/// True when `name` is a valid variable identifier: a letter followed by
/// letters, digits, or underscores, and not a reserved word of the
/// polynomial grammar.
bool is_valid_var_name(const std::string& name);

/// Produce `count` names starting with `stem` that avoid every name in
/// `taken`: stem0, stem1, ... with the stem extended by underscores until
/// no clashes remain.
std::vector<std::string> fresh_names(const std::string& stem, size_t count,
                                     const std::vector<std::string>& taken);

} // namespace hstar

#endif
