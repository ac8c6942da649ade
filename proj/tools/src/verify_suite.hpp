#ifndef ISQ_VERIFY_SUITE_HPP
#define ISQ_VERIFY_SUITE_HPP

#include <map>
#include <string>
#include <vector>

namespace isqcli {

struct CheckResult {
    std::string name;
    double defect = 0.0;    // measured worst-case defect
    double tolerance = 0.0; // pinned pass bound
    bool pass = false;
    bool inconclusive = false; // truncation could not be certified
};

/// Runs the full invariant suite at desk scale. tol_overrides replaces the
/// pinned tolerance of the named checks.
std::vector<CheckResult> run_verify_suite(const std::map<std::string, double>& tol_overrides);

} // namespace isqcli

#endif
