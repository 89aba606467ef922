#include "hml/hermitian.hpp"

#include <algorithm>

namespace hml {

i64 det_D(const QuadField& F, const HermIndex& T) {
    return F.D() * T.n * T.m - F.norm(T.alpha);
}

i64 eps(const QuadField& F, const HermIndex& T) {
    i64 g = gcd(gcd(T.n, T.m), F.content(T.alpha));
    if (g == 0) throw ZeroIndex("eps of the zero matrix");
    return g;
}

HermIndex canonical(const QuadField& F, const HermIndex& T) {
    const AlgInt a = T.alpha, na{-a.x, -a.y}, c = F.conj(a), nc{-c.x, -c.y};
    HermIndex best = T;
    for (const HermIndex& cand : {HermIndex{T.n, T.m, na}, HermIndex{T.m, T.n, c}, HermIndex{T.m, T.n, nc}})
        if (cand < best) best = cand;
    return best;
}

std::vector<HermIndex> index_window(const QuadField& F, i64 bound) {
    std::vector<HermIndex> out;
    for (i64 n = 0; n <= bound; ++n)
        for (i64 m = n; m <= bound; ++m)
            for (auto& a : norm_ball(F, F.D() * n * m)) {
                HermIndex T{n, m, a};
                if (canonical(F, T) == T) out.push_back(T);
            }
    std::sort(out.begin(), out.end());
    return out;
}

HermIndex scaled(const HermIndex& T, i64 p) {
    return {T.n * p, T.m * p, {T.alpha.x * p, T.alpha.y * p}};
}

} // namespace hml
