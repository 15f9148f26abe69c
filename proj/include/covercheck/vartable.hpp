#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace covercheck {

// Immutable variable table for a polynomial ring. Fiber variables occupy
// indices [0, split), base variables [split, size). Names are unique
// identifiers matching [A-Za-z_][A-Za-z0-9_]*.
class VarTable {
public:
    static std::shared_ptr<const VarTable> make(std::vector<std::string> names,
                                                std::size_t split);

    std::size_t size() const { return names_.size(); }
    std::size_t split() const { return split_; }
    std::size_t fiber_count() const { return split_; }
    std::size_t base_count() const { return names_.size() - split_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool is_fiber(std::size_t i) const { return i < split_; }

    bool same(const VarTable& other) const {
        return split_ == other.split_ && names_ == other.names_;
    }

    // Base variables only, split 0 (a ring with no fiber block).
    std::shared_ptr<const VarTable> base_only() const;
    // Fiber variables only, all of them fiber (split = count).
    std::shared_ptr<const VarTable> fiber_only() const;
    // Drops the first k variables; the split shrinks accordingly.
    std::shared_ptr<const VarTable> drop_front(std::size_t k) const;
    // Prepends fresh variables (treated as fiber block extension).
    std::shared_ptr<const VarTable> prepend(const std::vector<std::string>& fresh) const;

private:
    VarTable(std::vector<std::string> names, std::size_t split);
    std::vector<std::string> names_;
    std::size_t split_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

bool valid_identifier(std::string_view s);

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && a->same(*b));
}

}  // namespace covercheck
