#pragma once
// Verification suites: closed forms against the deterministic quadrature
// oracle, nested brute-force jpdf integrals, the Monte Carlo grid, and the
// exact structural identities. Shared by the `verify` CLI subcommand and the
// acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

namespace rmt {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    long samples = 100000;       // total Monte Carlo samples per case
    double inject_error = 0.0;   // test hook: perturbs one closed-form value
    bool quick = false;          // trims the slow grids for interactive runs
};

// One function per acceptance criterion.
std::vector<CheckResult> check_beta2_quadrature_grid(const VerifyOptions& opt);   // 1
std::vector<CheckResult> check_beta41_bruteforce(const VerifyOptions& opt);       // 2
std::vector<CheckResult> check_cumulant_identities(const VerifyOptions& opt);     // 3
std::vector<CheckResult> check_known_values(const VerifyOptions& opt);            // 4
std::vector<CheckResult> check_limits(const VerifyOptions& opt);                  // 5
std::vector<CheckResult> check_phi_structure(const VerifyOptions& opt);           // 6
std::vector<CheckResult> check_structural_invariants(const VerifyOptions& opt);   // 7
std::vector<CheckResult> check_mc_grid(const VerifyOptions& opt);                 // 8

/// Named suite selector: quad | brute | mc | duality | all.
std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& opt);

inline bool all_passed(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

}  // namespace rmt
