#include "hstar/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hstar/errors.hpp"

namespace hstar {

bool is_valid_var_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return name != "zeta";
}

Ring::Ring(std::vector<std::string> vars, FieldSpec field) : vars_(std::move(vars)), field_(field) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (!is_valid_var_name(v))
            throw validation_error("invalid variable name: '" + v + "'");
        if (!seen.insert(v).second)
            throw validation_error("duplicate variable name: '" + v + "'");
    }
    if (field_.is_cyclotomic && field_.cyclotomic_order < 1)
        throw validation_error("cyclotomic order must be positive");
}

std::optional<size_t> Ring::index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<size_t>(it - vars_.begin());
}

std::vector<std::string> fresh_names(const std::string& stem, size_t count,
                                     const std::vector<std::string>& taken) {
    std::set<std::string> blocked(taken.begin(), taken.end());
    std::string base = stem;
    for (;;) {
        std::vector<std::string> out;
        out.reserve(count);
        bool ok = true;
        for (size_t i = 0; i < count; ++i) {
            std::string cand = base + std::to_string(i);
            if (blocked.count(cand)) {
                ok = false;
                break;
            }
            out.push_back(std::move(cand));
        }
        if (ok) return out;
        base += "_";
    }
}

} // namespace hstar
