#include "hml/jacobi.hpp"

#include <cmath>
#include <mutex>

#include "hml/theta.hpp"

namespace hml {

bool pi_twist_prerequisite(const QuadField& F, i64 p) {
    static std::mutex mu;
    static std::map<std::pair<i64, i64>, bool> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(F.D(), p);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    bool ok = true;
    if (F.chi(p) != 1) ok = false;
    else {
        const AlgInt pi = split_prime(F, p);
        for (auto& g : gamma0_generators(p))
            if (!pi_twist_check(F, g, p, pi)) {
                ok = false;
                break;
            }
    }
    cache[key] = ok;
    return ok;
}

std::vector<AlgInt> norm_ball(const QuadField& F, i64 bound) {
    // N(x + y w) = (x + y/2)^2 + D y^2 / 4
    std::vector<AlgInt> out;
    if (bound < 0) return out;
    const i64 D = F.D();
    const i64 ymax = static_cast<i64>(std::sqrt(4.0 * bound / D)) + 1;
    for (i64 y = -ymax; y <= ymax; ++y) {
        const i64 r = static_cast<i64>(std::sqrt(static_cast<double>(bound))) + 2;
        for (i64 x = -r - (y + 1) / 2 - 1; x <= r - y / 2 + 1; ++x)
            if (F.norm({x, y}) <= bound) out.push_back({x, y});
    }
    return out;
}

} // namespace hml
