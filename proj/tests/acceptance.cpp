/* Acceptance gate: runs every named verification check once, prints one
 * pass or fail line per criterion, and exits nonzero if any fail. All
 * comparisons inside the checks are exact.
 */

#include <chrono>
#include <cstdio>

#include "cpoly/verify.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();

    const auto& names = cpoly::check_names();
    int failures = 0;
    int index = 0;
    for (const auto& name : names) {
        const auto c0 = clock::now();
        const cpoly::CheckResult r = cpoly::run_check(name);
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - c0)
                .count();
        ++index;
        std::printf("criterion %2d/%zu %-18s %s (%lld ms)\n", index, names.size(),
                    name.c_str(), r.pass ? "PASS" : "FAIL",
                    static_cast<long long>(ms));
        if (!r.pass) {
            ++failures;
            if (!r.detail.empty()) {
                std::printf("    detail: %s\n", r.detail.c_str());
            }
        }
    }

    const auto total =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0)
            .count();
    std::printf("%zu criteria, %d failed, %lld ms total\n", names.size(), failures,
                static_cast<long long>(total));
    return failures == 0 ? 0 : 1;
}
