#pragma once

// Named commutation identities and centrality claims, evaluated exactly in
// PBW normal form. Shared by the CLI suite runner and the acceptance tests.

#include <string>
#include <vector>

#include "qsaa/pbw.hpp"

namespace qsaa {

struct IdentityCheck {
    std::string name;
    int exponent = 0;  // 0 for exponent-free checks
    bool holds = false;
};

/// E Y^i, Y E^i expansions for 1 <= i <= max_exp, both expressions of phi,
/// and phi's normality relations with X, Y, E, K.
std::vector<IdentityCheck> qsaa_identities(int l, int max_exp);

/// F X^s, X F^r, E F^s, F E^r in the smash algebra; psi^s phi and psi phi^r
/// in B; psi's PBW expansion; B relations mapped through the embedding.
std::vector<IdentityCheck> smash_identities(int l, int max_exp);

/// K^{+-l}, E^l, X^l, Y^l central in Qsaa; additionally F^l in the smash
/// algebra; phi^l, psi^l, K^{+-l}, X^l, Y^l central in B.
std::vector<IdentityCheck> centrality_checks(int l);

// Individual sides, exposed for tests and the CLI.
AlgebraElement ey_power_rhs(const Presentation& p, int i);   // q^{-i} Y^i E + [i] X Y^{i-1}
AlgebraElement ye_power_rhs(const Presentation& p, int i);   // q^i E^i Y - q(1-q^{2i})/(1-q^2) X E^{i-1}
AlgebraElement fx_power_rhs(const Presentation& p, int s);
AlgebraElement xf_power_rhs(const Presentation& p, int r);
AlgebraElement ef_power_rhs(const Presentation& p, int s);
AlgebraElement fe_power_rhs(const Presentation& p, int r);
AlgebraElement psi_power_phi_rhs(const Presentation& b, int s);
AlgebraElement psi_phi_power_rhs(const Presentation& b, int r);

}  // namespace qsaa
