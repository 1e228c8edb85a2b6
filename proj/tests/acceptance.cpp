// One line per acceptance criterion. A criterion passes when every check holds and the run
// finishes inside its wall-clock budget.
#include "stmodal/regress.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    stmodal::RegressOptions opts;
    if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);

    int failed = 0;
    for (const auto& r : stmodal::run_regress(opts)) {
        const bool in_time = r.seconds <= r.info.budget;
        const bool ok = r.passed() && in_time;
        failed += !ok;
        std::printf("%s criterion=%d name=%s checks=%zu failures=%zu seconds=%.3f budget=%.0f%s\n", ok ? "PASS" : "FAIL",
                    r.info.id, r.info.name.c_str(), r.checks, r.failure_count, r.seconds, r.info.budget,
                    in_time ? "" : " over-budget");
        for (const auto& f : r.failures) std::printf("  failure: %s\n", f.c_str());
    }
    std::printf("%s %d/%zu\n", failed ? "FAILED" : "ALL PASS", static_cast<int>(stmodal::criteria().size()) - failed,
                stmodal::criteria().size());
    return failed ? 1 : 0;
}
