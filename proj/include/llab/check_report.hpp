#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace llab {

struct CheckItem {
    std::string name; // the identity or axiom being checked, as a formula
    bool pass = false;
    std::string detail; // first counterexample or computed value
};

struct CheckReport {
    std::vector<CheckItem> items;

    void add(std::string name, bool pass, std::string detail = "") {
        items.push_back({std::move(name), pass, std::move(detail)});
    }

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }

    const CheckItem* find(std::string_view name) const {
        for (const auto& it : items)
            if (it.name == name) return &it;
        return nullptr;
    }

    /// Name of the first failing item, or empty when everything passed.
    std::string first_failure() const {
        for (const auto& it : items)
            if (!it.pass) return it.name;
        return {};
    }

    void merge(const CheckReport& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }
};

} // namespace llab
