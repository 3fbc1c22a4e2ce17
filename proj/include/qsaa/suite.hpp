#pragma once

// Verification battery shared by the CLI `suite` command and the acceptance
// runner: named checks grouped by topic, run on a bounded worker pool with
// results reported in declaration order.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace qsaa {

enum class Status { Pass, Fail, Undetermined };
const char* to_string(Status s) noexcept;

struct CheckResult {
    std::string name;
    Status status = Status::Undetermined;
    std::string details;
    bool guard_tripped = false;  // Resource error inside the check
};

struct Check {
    std::string name;
    std::function<CheckResult()> run;
};

/// Runs each check once on at most `workers` threads. Library errors thrown
/// by a check become a failed (or, for Resource, undetermined) result.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, unsigned workers);

/// QSAA_WORKERS if set to a positive integer, else the hardware concurrency.
unsigned worker_count_from_env();

/// 1 if any check failed, else 3 if a resource guard tripped, else 0.
int exit_status(const std::vector<CheckResult>& results);

struct SuiteOptions {
    std::size_t closure_guard = 64;        // module dimension limit for closure
    long bruteforce_guard = 10'000'000;    // enumeration limit for the PI-degree oracle
    std::size_t grid_points = 10;          // construction grid per type
    std::size_t iso_pairs = 60;            // decider/oracle pairs per type
    unsigned seed = 20240601;              // base seed of every randomized check
};

/// Expected PI degree of both algebras: l^2 for odd l, l^2/2 for even l.
long expected_pideg(int l);

std::vector<Check> pideg_checks(int l, const SuiteOptions& opt);
/// Invariant factors of the reduced 4x4 exponent matrix; independent of l.
std::vector<Check> reduced_factor_checks();
std::vector<Check> identity_checks(int l, int max_exp);
std::vector<Check> centrality_suite(int l);
std::vector<Check> construction_checks(int l, const SuiteOptions& opt);
std::vector<Check> isomorphism_checks(int l, const SuiteOptions& opt);
std::vector<Check> classification_checks(int l);
/// Odd l only; Q_{p,l} for p = 1..max_p.
std::vector<Check> verma_checks(int l, int max_p, const SuiteOptions& opt);
/// Odd l only.
std::vector<Check> smash_checks(int l, const SuiteOptions& opt);
std::vector<Check> property_checks(int l, const SuiteOptions& opt);

/// Everything above that applies to l.
std::vector<Check> full_battery(int l, const SuiteOptions& opt);

}  // namespace qsaa
