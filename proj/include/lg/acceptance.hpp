#ifndef LG_ACCEPTANCE_HPP
#define LG_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace lg {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;  // one line; what was checked and what came out
};

// Runs the full reproduction suite on the built-in models and returns one
// result per criterion.  Never throws: failures inside a criterion are
// reported as a failed result.
std::vector<CriterionResult> run_acceptance();

}  // namespace lg

#endif
