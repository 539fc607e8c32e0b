#pragma once

#include <string>
#include <vector>

#include "fusionbench/serialize.hpp"

namespace fusionbench {

// Everything `make` needs. Groups are shorthands ("C2", "C2xC2") or
// paths to group JSON files; bicharacter values are per cyclic factor.
struct MakeOptions {
    std::string kind;
    std::string group = "C2";
    std::string k_group = "C2";
    std::vector<std::string> chi;   // default: -1 on every factor
    std::vector<std::string> zeta;  // same, for the second TY factor
    int tau = 1;                    // sign of tau = ±1/sqrt|Γ|
    int upsilon = 1;
    int omega = 0;                  // exponent of the cyclic 3-cocycle on K (or the group for "pointed")
    int theta_l = 1, theta_r = 1;
    std::vector<int> phi, psi;      // automorphisms of K (ty-pointed) or H, K (ty-ty); empty = identity
    std::vector<int> gamma_perm;    // ty-pointed: φ_{g^j} = perm^j on Γ for cyclic K; empty = identity
};

std::vector<std::string> make_kinds();
Json make_object(const MakeOptions& o);

// Parses "1", "-1", "i", "-i" or "p/q" (exp(2πi p/q)).
Complex parse_root(const std::string& token);
FiniteGroup resolve_group(const std::string& spec);

struct CatalogEntry {
    std::string name;  // file stem
    std::string description;
    MakeOptions options;
};
std::vector<CatalogEntry> examples_catalog();

}  // namespace fusionbench
