#pragma once

// Modules over the smash product A (generators X, Y, E, F, K^{+-1}) and its
// subalgebra B (generators X, Y, K^{+-1}, phi, psi): the l^2-dimensional
// B-module N1 for odd l, lifting X,Y-invertible B-modules to A, and the
// eigen-data of simple B-modules.

#include "qsaa/rep.hpp"

namespace qsaa {

/// Eigenvalues of a common eigenvector v: vK = lambda1 v, vYX = lambda2 v,
/// v psi phi = lambda3 v, with xi and alpha the scalars of X^l and phi^l.
struct BModuleParams {
    CycloNum lambda1, lambda2, lambda3, xi, alpha;
};

/// Basis e(a, b) = v phi^a X^b, 0 <= a, b < l, at index a*l + b. Requires odd
/// l and nonzero lambda1, lambda2, xi, alpha; throws InvariantViolation if a
/// relation fails.
MatrixModule build_n1(int l, const BModuleParams& p);

/// E = (q - q^-1)^-1 Y^-1 (X - phi) and F = (1 - q^2)^-1 X^-1 (psi + q^2 Y K^-1)
/// on the same space. Throws Torsion when X or Y is singular.
MatrixModule lift_to_A(const MatrixModule& m);

/// Restriction of an A-module to B along phi = EY - qYE, psi = XF - q^2 FX.
MatrixModule restrict_to_B(const MatrixModule& m);

struct BEigenData {
    BModuleParams params;
    CycloNum beta;
    Vector eigenvector;
};

/// Reads alpha, beta, xi off phi^l, psi^l, X^l (NotSimple if one is not
/// scalar) and finds a common eigenvector of K, YX and psi phi among candidate
/// eigenvalues (hints, matrix entries times powers of q).
BEigenData eigendata_of(const MatrixModule& m, const std::vector<CycloNum>& hints = {});

}  // namespace qsaa
