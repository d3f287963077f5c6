#ifndef HILBNEF_VERIFY_HPP
#define HILBNEF_VERIFY_HPP

#include <string>
#include <vector>

namespace hilbnef {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail; // summary of what was covered, or the first failure
};

// The bundled verification suite: every check runs exact arithmetic end to
// end (no tolerances anywhere). Returns one result per criterion.
std::vector<CheckResult> run_verification();

bool all_passed(const std::vector<CheckResult>& results);

} // namespace hilbnef

#endif
