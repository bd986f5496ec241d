#ifndef QTCAT_CHECKS_HPP
#define QTCAT_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qtcat {

struct CheckFailure {
    std::string inputs;
    std::string expected;
    std::string got;
};

struct CheckReport {
    std::string suite;
    std::string n_range;
    uint64_t cases_run = 0;
    std::vector<CheckFailure> failures;
    double elapsed_seconds = 0;

    bool passed() const { return failures.empty(); }
    std::string str() const;
    std::string to_json() const;
};

struct CheckOptions {
    uint32_t n_lo = 3;
    uint32_t n_hi = 7;
    uint64_t seed = 42;
    uint32_t trials = 200;
    bool parallel = false;
};

// suite names: lemma32, lemma34, lemma59_510, phi_dual, prop39, theta,
// census, theoremA, conjecture, corollaryB, basis
std::vector<std::string> check_suite_names();
CheckReport run_check_suite(const std::string &name, const CheckOptions &opt);
std::vector<CheckReport> check_all(const std::vector<std::string> &suites, const CheckOptions &opt);

// named checks (each clamps the range to its own validity window)
CheckReport check_lemma32(const CheckOptions &opt);
CheckReport check_lemma34(const CheckOptions &opt);
CheckReport check_lemma59_510(const CheckOptions &opt);
CheckReport check_phi_dual(const CheckOptions &opt);
CheckReport check_prop39(const CheckOptions &opt);
CheckReport check_theta(const CheckOptions &opt);
CheckReport check_census(const CheckOptions &opt);
CheckReport check_theoremA(const CheckOptions &opt);
CheckReport check_conjecture(const CheckOptions &opt);
CheckReport check_corollaryB(const CheckOptions &opt);
CheckReport check_basis(const CheckOptions &opt);

} // namespace qtcat

#endif
