#include "charvar/vartable.hpp"

#include <unordered_set>

namespace charvar {

VarTablePtr VarTable::make(std::vector<Var> vars) {
    std::unordered_set<std::string> seen;
    for (const auto& v : vars) {
        if (v.name.empty())
            throw DomainViolationError("variable name must not be empty");
        if (!seen.insert(v.name).second)
            throw DomainViolationError("duplicate variable name: " + v.name);
    }
    return VarTablePtr(new VarTable(std::move(vars)));
}

VarTablePtr VarTable::empty() {
    static VarTablePtr instance = VarTablePtr(new VarTable({}));
    return instance;
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    return std::nullopt;
}

std::size_t VarTable::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownVariableError("unknown variable: " + std::string(name));
}

bool VarTable::same_as(const VarTable& other) const {
    if (this == &other) return true;
    if (vars_.size() != other.vars_.size()) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name != other.vars_[i].name || vars_[i].laurent != other.vars_[i].laurent)
            return false;
    return true;
}

VarTablePtr VarTable::merge(const VarTablePtr& a, const VarTablePtr& b) {
    if (a == b || a->same_as(*b)) return a;
    bool b_subset = true;
    for (const auto& v : b->vars_) {
        auto i = a->find(v.name);
        if (!i) {
            b_subset = false;
            continue;
        }
        if (a->laurent(*i) != v.laurent)
            throw DomainViolationError("conflicting Laurent flag for variable: " + v.name);
    }
    if (b_subset) return a;
    std::vector<Var> vars = a->vars_;
    for (const auto& v : b->vars_)
        if (!a->find(v.name)) vars.push_back(v);
    return make(std::move(vars));
}

} // namespace charvar
