#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hml/arith.hpp"
#include "hml/padic.hpp"

namespace hml {

// every field has a default; the cli binds each one to --name and to "name = value" in
// a flat config file
struct RunConfig {
    i64 D = 7;
    i64 p = 11;
    int k0 = 6;
    std::vector<int> weights{6, 16, 26}; // Hermitian weights, elliptic weight k - 1
    i64 herm_bound = 3;
    i64 qprec = 0; // 0 picks D * herm_bound^2 + 1
    int padic_M = 8;
    int padic_f = 1; // residue degree of the Galois ring used by the family
    int deg = 12;    // truncation of the A_d series in T
    std::uint64_t seed = 20;
    int anchor = 0;
    int z_root = 0;
    int embedding = 0; // root index for the Hecke field generator
    i64 match_bound = 60;
    i64 family_cap = 201;
    std::string input;
    std::string output;

    i64 effective_qprec() const { return qprec ? qprec : D * herm_bound * herm_bound + 1; }
};

// throws NotSplit, ConfigError
void validate(const RunConfig& c);
FamilyOptions family_options(const RunConfig& c);
// k0 = 8, weights 8/18/28, residue degree 2: the first configuration with a non-CM branch
RunConfig supplementary_config();

} // namespace hml
