#include "hml/config.hpp"

#include "hml/core_field.hpp"

namespace hml {

void validate(const RunConfig& c) {
    QuadField F(c.D); // UnsupportedDiscriminant
    if (c.p < 3 || !is_prime(c.p)) throw ConfigError("p must be an odd prime");
    if (F.chi(c.p) != 1) throw NotSplit("p = " + std::to_string(c.p) + " is not split in Q(sqrt(-" + std::to_string(c.D) + "))");
    // #O^x = 2 for D > 3
    if (c.p % 2 != 1) throw ConfigError("p must be 1 mod #O^x");
    if (c.k0 % 2) throw ConfigError("#O^x must divide k0");
    if (c.weights.empty()) throw ConfigError("weights must be nonempty");
    for (int k : c.weights)
        if (k < 4 || mod(k - c.k0, c.p - 1) != 0) throw ConfigError("weight " + std::to_string(k) + " is not >= 4 and = k0 mod p-1");
    if (c.herm_bound < 1) throw ConfigError("herm_bound must be positive");
    if (c.effective_qprec() < c.D * c.herm_bound * c.herm_bound)
        throw ConfigError("qprec must be at least D * herm_bound^2 = " + std::to_string(c.D * c.herm_bound * c.herm_bound));
    if (c.padic_M < 2 || c.padic_M > 16) throw ConfigError("padic_M out of range [2, 16]");
    if (c.padic_f < 1 || c.padic_f > 4) throw ConfigError("padic_f out of range [1, 4]");
    if (c.deg < 1) throw ConfigError("deg must be positive");
    if (c.family_cap <= 200) throw ConfigError("family_cap must exceed 200");
}

FamilyOptions family_options(const RunConfig& c) {
    FamilyOptions o;
    o.D = c.D;
    o.p = c.p;
    o.k0 = c.k0;
    o.M = c.padic_M;
    o.f = c.padic_f;
    o.weights = c.weights;
    o.anchor = c.anchor;
    o.z_root = c.z_root;
    o.cap = c.family_cap;
    o.match_bound = c.match_bound;
    return o;
}

RunConfig supplementary_config() {
    RunConfig c;
    c.k0 = 8;
    c.weights = {8, 18, 28};
    c.padic_f = 2;
    return c;
}

} // namespace hml
