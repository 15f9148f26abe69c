#include "covercheck/vartable.hpp"

#include <cctype>
#include <set>

#include "covercheck/errors.hpp"

namespace covercheck {

bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s[0]);
    if (!std::isalpha(head) && s[0] != '_') return false;
    for (char c : s.substr(1))
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

VarTable::VarTable(std::vector<std::string> names, std::size_t split)
    : names_(std::move(names)), split_(split) {}

std::shared_ptr<const VarTable> VarTable::make(std::vector<std::string> names,
                                               std::size_t split) {
    if (split > names.size()) throw InputError("variable split past end of table");
    std::set<std::string_view> seen;
    for (const auto& n : names) {
        if (!valid_identifier(n)) throw InputError("invalid variable name '" + n + "'");
        if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
    }
    return std::shared_ptr<const VarTable>(new VarTable(std::move(names), split));
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::shared_ptr<const VarTable> VarTable::base_only() const {
    return make({names_.begin() + static_cast<std::ptrdiff_t>(split_), names_.end()}, 0);
}

std::shared_ptr<const VarTable> VarTable::fiber_only() const {
    std::vector<std::string> fiber(names_.begin(),
                                   names_.begin() + static_cast<std::ptrdiff_t>(split_));
    std::size_t n = fiber.size();
    return make(std::move(fiber), n);
}

std::shared_ptr<const VarTable> VarTable::drop_front(std::size_t k) const {
    if (k > names_.size()) throw InputError("dropping more variables than the table has");
    std::vector<std::string> rest(names_.begin() + static_cast<std::ptrdiff_t>(k),
                                  names_.end());
    return make(std::move(rest), split_ > k ? split_ - k : 0);
}

std::shared_ptr<const VarTable> VarTable::prepend(
    const std::vector<std::string>& fresh) const {
    std::vector<std::string> all = fresh;
    all.insert(all.end(), names_.begin(), names_.end());
    return make(std::move(all), split_ + fresh.size());
}

}  // namespace covercheck
