#include "fusionbench/report.hpp"

#include <sstream>

#include "fusionbench/format.hpp"

namespace fusionbench {

void Report::add(Check c) {
    pass = pass && c.pass;
    checks.push_back(std::move(c));
}

void Report::add(std::string name, bool ok, std::string witness, std::optional<double> residual) {
    add(Check{std::move(name), ok, std::move(witness), residual});
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks) {
        Check copy = c;
        if (!prefix.empty()) copy.name = prefix + "." + copy.name;
        add(std::move(copy));
    }
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string Report::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return c.witness.empty() ? c.name : c.name + " (" + c.witness + ")";
    return "none";
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (c.residual) os << " residual=" << format_number(*c.residual);
        if (!c.witness.empty()) os << " : " << c.witness;
        os << '\n';
    }
    os << (pass ? "overall: PASS" : "overall: FAIL") << '\n';
    return os.str();
}

}  // namespace fusionbench
