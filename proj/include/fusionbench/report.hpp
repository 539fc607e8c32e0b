#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fusionbench {

struct Check {
    std::string name;
    bool pass = true;
    std::string witness;
    std::optional<double> residual;
};

struct Report {
    bool pass = true;
    std::vector<Check> checks;

    void add(Check c);
    void add(std::string name, bool ok, std::string witness = {},
             std::optional<double> residual = std::nullopt);
    // Appends every check of `other`, prefixing names with `prefix.`.
    void merge(const Report& other, const std::string& prefix = {});

    const Check* find(const std::string& name) const;
    std::string first_failure() const;
    std::string to_text() const;
};

}  // namespace fusionbench
