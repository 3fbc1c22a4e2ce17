#pragma once

// Finite quotients Q_{p,l} of the Verma module M(lambda1, lambda2) induced
// from vE = 0, vX = lambda1 v, vK^{+-l} = lambda2^{+-1} v, for odd l.
//
// Basis f(m, n), 0 <= m < p*l, 0 <= n < l, at index m*l + n.

#include <string>
#include <vector>

#include "qsaa/rep.hpp"

namespace qsaa {

struct VermaParams {
    CycloNum lambda1, lambda2;
};

std::size_t verma_index(int l, int m, int n);

/// Throws Unsupported for even l and InvalidParameter for p < 1 or zero lambdas.
MatrixModule build_q(int l, int p, const VermaParams& params);

/// The spans of {f(m, n) : m >= r*l} for r = 1..p-1, largest first.
std::vector<Subspace> chain_submodules(int l, int p);

struct VermaVerdicts {
    bool simple = false;
    bool semisimple = false;
    bool indecomposable = false;
    bool chain_invariant = false;      // every chain member is a submodule
    std::vector<bool> has_complement;  // per chain member
};

VermaVerdicts verdicts(int l, int p, const VermaParams& params);

struct CensusEntry {
    std::string label;
    std::size_t spin_dim = 0;
    int member = -1;  // 0: whole module, r: chain member r, -1: neither
};

/// Spin-up of every basis vector, matched against the chain.
std::vector<CensusEntry> spin_up_census(int l, int p, const VermaParams& params);

}  // namespace qsaa
