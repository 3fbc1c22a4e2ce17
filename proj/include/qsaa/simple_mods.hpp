#pragma once

// The three families of simple Qsaa-modules of dimension l1*l, their
// isomorphism criteria with explicit intertwiners, and the classification of
// simple modules on which X and phi act invertibly.
//
// Basis vectors e(a1, a2), 0 <= a1 < l1 = ord(q^2), 0 <= a2 < l, sit at
// index a1*l + a2.

#include <optional>
#include <string>
#include <vector>

#include "qsaa/rep.hpp"

namespace qsaa {

struct ParamsM1 {
    CycloNum mu1, mu2, mu3, mu4;
};
struct ParamsM2 {
    CycloNum mu1, mu2, mu3;
};
struct ParamsM3 {
    CycloNum mu1, mu2;
};

ParamsM1 params_m1(const std::vector<CycloNum>& mu);
ParamsM2 params_m2(const std::vector<CycloNum>& mu);
ParamsM3 params_m3(const std::vector<CycloNum>& mu);

std::size_t basis_index(int l, int a1, int a2);

MatrixModule build_m1(int l, const ParamsM1& mu);
MatrixModule build_m2(int l, const ParamsM2& mu);
MatrixModule build_m3(int l, const ParamsM3& mu);

/// Shift exponents of an isomorphism e(0,0) -> e(r1, r2); for M3 only r2 is used.
struct IsoWitness {
    int r1 = 0;
    int r2 = 0;
    friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

/// Isomorphism deciders from the parameter relations. For even l, M1 also
/// needs (mu3 mu4)^{l/2} = (gamma3 gamma4)^{l/2} and M2 needs
/// (mu2 mu3 / mu1)^{l/2} = (gamma2 gamma3 / gamma1)^{l/2}.
std::optional<IsoWitness> iso_m1(int l, const ParamsM1& mu, const ParamsM1& gamma);
std::optional<IsoWitness> iso_m2(int l, const ParamsM2& mu, const ParamsM2& gamma);
std::optional<IsoWitness> iso_m3(int l, const ParamsM3& mu, const ParamsM3& gamma);

/// Matrices of the shift maps M(mu) -> M(gamma) for a witness. Throws
/// InvalidParameter when the witness does not satisfy the criterion.
Matrix explicit_iso_m1(int l, const ParamsM1& mu, const ParamsM1& gamma, const IsoWitness& w);
Matrix explicit_iso_m2(int l, const ParamsM2& mu, const ParamsM2& gamma, const IsoWitness& w);
Matrix explicit_iso_m3(int l, const ParamsM3& mu, const ParamsM3& gamma, const IsoWitness& w);

enum class SimpleType { M1, M2, M3 };
const char* to_string(SimpleType t) noexcept;

/// Scalars read off a module: alpha, beta, xi from E^l, Y^l, K^l (or, in B,
/// phi^l, psi^l, X^l), and eigenvalues of a chosen common eigenvector.
struct EigenData {
    CycloNum alpha, beta, xi, lambda1, lambda2;
    std::optional<CycloNum> alpha_prime, beta_prime;  // even l: E^{l/2}K^{l/2}, Y^{l/2}K^{l/2}
    std::optional<CycloNum> lambda3;                  // B-modules: psi*phi
};

struct Classification {
    SimpleType type = SimpleType::M1;
    std::vector<CycloNum> params;  // mu, in constructor order
    EigenData eigen;
    int shift = 0;                 // r with v' = v E^r in the E-nilpotent cases
    Vector eigenvector;            // the common eigenvector v
    Matrix intertwiner;            // M_type(params) -> input module
    bool direct_map = false;       // intertwiner is the spanning-vector map, not a Hom-space fallback
};

MatrixModule build_type(int l, SimpleType t, const std::vector<CycloNum>& params);

/// Requires a simple Qsaa-module with X and phi invertible. Candidate
/// eigenvalues and l-th roots come from `hints`, matrix entries times powers
/// of q, and rational roots; NeedsHints is thrown when none fits.
Classification classify(const MatrixModule& m, const std::vector<CycloNum>& hints = {});

/// Kernel of several operators at once: v with v*(A_i - t_i) = 0 for all i.
Subspace joint_eigenspace(const std::vector<Matrix>& ops, const std::vector<CycloNum>& values);

/// Candidate scalars: hints, then every nonzero entry of the given matrices
/// times q^k, deduplicated in first-seen order.
std::vector<CycloNum> scalar_candidates(int l, const std::vector<CycloNum>& hints, const std::vector<Matrix>& sources);

/// An l-th root of c from the candidates (or c's rational roots times q^k).
std::optional<CycloNum> lth_root(int l, const CycloNum& c, const std::vector<CycloNum>& candidates);

}  // namespace qsaa
