/*
 * acceptance.cpp
 * --------------
 * The fifteen acceptance checks, one pass/fail line each.  Exit code 0 iff
 * every check passes.  An optional argument overrides the random seed.
 */
#include "lierine/acceptance.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
    std::uint64_t seed = 20260826;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    bool all = true;
    for (auto& r : lierine::acceptance::run_all(seed)) {
        std::printf("[%s] %2d %-28s %s\n", r.pass ? "pass" : "FAIL", r.index, r.name.c_str(),
                    r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "acceptance: all 15 checks passed"
                            : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
