// Acceptance runner: one PASS/FAIL line per criterion, built from the shared
// verification battery. Randomized checks print their seeds.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "qsaa/suite.hpp"

using namespace qsaa;

namespace {

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;  // 0: no runtime bound
    std::vector<Check> checks;
};

void append(std::vector<Check>& to, std::vector<Check> more) {
    for (auto& c : more) to.push_back(std::move(c));
}

std::vector<Criterion> criteria(const SuiteOptions& opt) {
    std::vector<Criterion> out;

    Criterion pideg{1, "PI-degree table, invariant factors, brute-force cross-check", 10, {}};
    for (int l = 3; l <= 8; ++l)
        for (auto& c : pideg_checks(l, opt))
            if (l <= 6 || c.name.find("bruteforce") == std::string::npos) pideg.checks.push_back(std::move(c));
    append(pideg.checks, reduced_factor_checks());
    out.push_back(std::move(pideg));

    Criterion ids{2, "PBW commutation identities up to exponent 2l", 30, {}};
    for (int l : {3, 4, 5}) append(ids.checks, identity_checks(l, 2 * l));
    out.push_back(std::move(ids));

    Criterion central{3, "centrality of the listed elements", 0, {}};
    for (int l : {3, 4, 5, 6}) append(central.checks, centrality_suite(l));
    out.push_back(std::move(central));

    Criterion mods{4, "M1/M2/M3 relations, simplicity and closure", 120, {}};
    for (int l : {3, 4}) append(mods.checks, construction_checks(l, opt));
    out.push_back(std::move(mods));

    Criterion iso{5, "isomorphism deciders against the Hom oracle, intertwiners, cross-type Hom", 0, {}};
    for (int l : {3, 4}) append(iso.checks, isomorphism_checks(l, opt));
    out.push_back(std::move(iso));

    Criterion cls{6, "classification round trip", 0, {}};
    for (int l : {3, 4}) append(cls.checks, classification_checks(l));
    out.push_back(std::move(cls));

    out.push_back({7, "Verma quotients Q_{1,3}, Q_{2,3}, Q_{3,3}", 120, verma_checks(3, 3, opt)});
    out.push_back({8, "N1 over B, lift to the smash product, simplicity", 0, smash_checks(3, opt)});

    Criterion props{9, "randomized property suites", 0, {}};
    for (int l : {3, 4}) append(props.checks, property_checks(l, opt));
    out.push_back(std::move(props));
    return out;
}

}  // namespace

int main() {
    const SuiteOptions opt;
    const unsigned workers = worker_count_from_env();
    std::printf("workers %u, base seed %u\n", workers, opt.seed);
    bool all = true;
    for (const auto& c : criteria(opt)) {
        const auto start = std::chrono::steady_clock::now();
        const auto results = run_checks(c.checks, workers);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = true;
        for (const auto& r : results) ok = ok && r.status == Status::Pass;
        const bool in_time = c.budget_seconds == 0 || secs < c.budget_seconds;
        std::printf("%s criterion %d: %s (%zu checks, %.2f s", ok && in_time ? "PASS" : "FAIL", c.number, c.title.c_str(),
                    results.size(), secs);
        if (c.budget_seconds > 0) std::printf(", budget %.0f s", c.budget_seconds);
        std::printf(")\n");
        for (const auto& r : results)
            if (r.status != Status::Pass || r.details.find("seed") != std::string::npos)
                std::printf("    %s %s: %s\n", to_string(r.status), r.name.c_str(), r.details.c_str());
        if (!in_time) std::printf("    runtime over budget\n");
        all = all && ok && in_time;
    }
    return all ? 0 : 1;
}
