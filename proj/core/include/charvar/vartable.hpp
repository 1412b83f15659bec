#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charvar/errors.hpp"

namespace charvar {

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

/// Immutable ordered list of variable descriptors. The order fixes the
/// graded-lexicographic monomial order used everywhere, so two tables with the
/// same variables in a different order are distinct tables.
class VarTable {
public:
    struct Var {
        std::string name;
        bool laurent = false;
    };

    static VarTablePtr make(std::vector<Var> vars);
    static VarTablePtr empty();

    std::size_t size() const { return vars_.size(); }
    const Var& var(std::size_t i) const { return vars_[i]; }
    const std::string& name(std::size_t i) const { return vars_[i].name; }
    bool laurent(std::size_t i) const { return vars_[i].laurent; }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Like find() but throws UnknownVariableError when the name is absent.
    std::size_t index_of(std::string_view name) const;

    bool same_as(const VarTable& other) const;

    /// Union of two tables: a's variables in order, then b's new ones.
    /// Conflicting Laurent flags on a shared name are an error.
    static VarTablePtr merge(const VarTablePtr& a, const VarTablePtr& b);

private:
    explicit VarTable(std::vector<Var> vars) : vars_(std::move(vars)) {}
    std::vector<Var> vars_;
};

} // namespace charvar
