// Runs criteria 1-8 once at the default configuration and once at the supplementary one
// (k0 = 8). Prints one line per criterion and run. Exit status is 0 when every supplementary
// line passes and every default failure is one of the known vacuous ones.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "hml/suites.hpp"

using namespace hml;

namespace {

// pinned tolerances
constexpr int kPadicM = 8;       // criteria 6 and 7 work mod 11^8
constexpr int kMaxTruncLoss = 2; // criterion 7: eps
// at k0 = 6 the only weight-5 form is CM, so 4, 6 and 7 have nothing nonzero to test
const std::set<int> kKnownDefaultFails{4, 6, 7};

struct Line {
    int id;
    bool pass;
    std::string what;
};

Line run(int id, const RunConfig& c, const std::function<Report(const RunConfig&)>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Line l{id, false, ""};
    try {
        Report r = fn(c);
        l.pass = r.passed();
        for (auto& ch : r.checks) {
            if (ch.name.find("truncation loss") != std::string::npos && ch.witness != "eps = 0" && ch.witness != "eps = 1" &&
                ch.witness != "eps = 2")
                l.pass = false;
            if (!ch.pass && l.what.empty()) l.what = ch.name + (ch.witness.empty() ? "" : " [" + ch.witness + "]");
        }
        if (l.what.empty()) l.what = std::to_string(r.checks.size()) + " checks";
    } catch (const std::exception& e) {
        l.what = std::string("threw ") + e.what();
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.1f s)", sec);
    l.what += buf;
    return l;
}

} // namespace

int main() {
    const std::vector<std::function<Report(const RunConfig&)>> crit{
        gauss_suite, theta_suite, elliptic_suite, roundtrip_suite, fourier_jacobi_suite, descent_suite, family_suite, negative_suite};
    RunConfig def;
    RunConfig sup = supplementary_config();
    def.padic_M = sup.padic_M = kPadicM;
    static_assert(kMaxTruncLoss == 2);
    bool ok = true;
    for (auto [tag, cfg] : {std::pair<const char*, RunConfig>{"default", def}, {"k0=8", sup}}) {
        const bool is_def = std::string(tag) == "default";
        for (int i = 0; i < 8; ++i) {
            // 1 and 2 do not depend on k0
            if (!is_def && i < 2) continue;
            Line l = run(i + 1, cfg, crit[i]);
            const bool known = is_def && kKnownDefaultFails.count(i + 1);
            if (!l.pass && !known) ok = false;
            std::printf("criterion %d %-8s %s%s  %s\n", i + 1, tag, l.pass ? "PASS" : "FAIL", !l.pass && known ? " (known)" : "", l.what.c_str());
            std::fflush(stdout);
        }
    }
    std::printf("%s\n", ok ? "acceptance: ok" : "acceptance: unexpected failure");
    return ok ? 0 : 1;
}
