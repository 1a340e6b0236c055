#include <cstdio>

#include "lg/acceptance.hpp"

// Prints one PASS/FAIL line per criterion of the reproduction suite and
// exits nonzero if any criterion fails.
int main() {
    bool all = true;
    for (const auto& r : lg::run_acceptance()) {
        std::printf("%s %s:%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
