#pragma once

#include <string>
#include <vector>

namespace vtx {

struct CheckResult {
    std::string name;
    bool pass = false;
    long long checks = 0;   // individual comparisons performed
    long long time_ms = 0;
    std::string detail;     // first failure, when any
};

// Individual check suites. Each returns pass/fail with a comparison count;
// sizes are inclusive bounds.
CheckResult check_wtw_identity(int max_total_size);
CheckResult check_orthogonality(int d_max);
CheckResult check_burnside_bruteforce(int d_max, int r_max);
CheckResult check_lr_oracle(int size_max);
CheckResult check_skew_oracle(int size_max, int nvars, int order);
CheckResult check_conifold_multicover(int degree_max);
CheckResult check_degeneration();
CheckResult check_gv_local_p2(int degree_max, int genus_max);
CheckResult check_framing_consistency(int total_size_max, int order);
CheckResult check_psi();

enum class SelftestLevel { quick, full };

std::vector<CheckResult> run_selftest(SelftestLevel level);

// One line per check plus a summary; stable except for the time_ms fields.
std::string render_selftest_report(const std::vector<CheckResult>& results);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace vtx
