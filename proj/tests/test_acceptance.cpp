// Acceptance suite: runs every criterion end to end and prints one line per
// item, exactly as `permpat verify` does.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permpat/verify.hpp"

#include <cstdio>

using namespace permpat;

TEST_CASE("acceptance criteria") {
    for (int i = 1; i <= 12; ++i) {
        CriterionResult r = run_criterion(i);
        std::printf("[%s] %s %s (%s, %.2fs)\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                    r.name.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        INFO(r.id, ": ", r.detail);
        CHECK(r.pass);
    }
}
