#include "qsaa/verma.hpp"

namespace qsaa {

std::size_t verma_index(int l, int m, int n) {
    return static_cast<std::size_t>(m) * static_cast<std::size_t>(l) + static_cast<std::size_t>(n);
}

namespace {

void check_args(int l, int p) {
    if (l < 3) fail(ErrorKind::InvalidOrder, "root order must be at least 3");
    if (l % 2 == 0) fail(ErrorKind::Unsupported, "Verma quotients are built for odd l only");
    if (p < 1) fail(ErrorKind::InvalidParameter, "quotient index p must be at least 1");
}

}  // namespace

MatrixModule build_q(int l, int p, const VermaParams& params) {
    check_args(l, p);
    if (params.lambda1.is_zero() || params.lambda2.is_zero())
        fail(ErrorKind::InvalidParameter, "lambda1 and lambda2 must be nonzero");
    const int top = p * l;
    const std::size_t dim = static_cast<std::size_t>(top * l);
    Matrix X(l, dim, dim), Y(l, dim, dim), E(l, dim, dim), K(l, dim, dim);
    std::vector<std::string> labels;
    for (int m = 0; m < top; ++m)
        for (int n = 0; n < l; ++n) {
            const std::size_t i = verma_index(l, m, n);
            labels.push_back("f(" + std::to_string(m) + "," + std::to_string(n) + ")");
            X(i, i) = params.lambda1 * q_power(l, n - m);
            // K^l acts on the inducing vector by lambda2, so the shift wraps with that factor.
            if (n + 1 < l)
                K(i, verma_index(l, m, n + 1)) = CycloField::get(l).one();
            else
                K(i, verma_index(l, m, 0)) = params.lambda2;
            if (m + 1 < top) Y(i, verma_index(l, m + 1, n)) = q_power(l, -n);
            // The lambda1 factor is what EY = X + q^-1 YE forces on f(0, n).
            if (m > 0) E(i, verma_index(l, m - 1, n)) = -(params.lambda1 * q_power(l, m + 2 * n) * q_int(l, m));
        }
    return MatrixModule(PresentationName::Qsaa, l, std::move(labels),
                        {{Gen::X, X}, {Gen::Y, Y}, {Gen::E, E}, {Gen::K, K}});
}

std::vector<Subspace> chain_submodules(int l, int p) {
    check_args(l, p);
    const std::size_t dim = static_cast<std::size_t>(p * l * l);
    std::vector<Subspace> out;
    for (int r = 1; r < p; ++r) {
        Subspace s(l, dim);
        for (int m = r * l; m < p * l; ++m)
            for (int n = 0; n < l; ++n) s.insert(unit_vector(l, dim, verma_index(l, m, n)));
        out.push_back(std::move(s));
    }
    return out;
}

VermaVerdicts verdicts(int l, int p, const VermaParams& params) {
    MatrixModule q = build_q(l, p, params);
    VermaVerdicts v;
    v.simple = is_simple(q, 64).verdict == Simplicity::Simple;
    v.chain_invariant = true;
    bool all_split = true;
    for (const auto& w : chain_submodules(l, p)) {
        if (!is_invariant(q, w)) {
            v.chain_invariant = false;
            v.has_complement.push_back(false);
            all_split = false;
            continue;
        }
        bool split = has_invariant_complement(q, w);
        v.has_complement.push_back(split);
        all_split = all_split && split;
    }
    v.semisimple = v.simple || (v.chain_invariant && all_split);
    v.indecomposable = is_indecomposable(q);
    return v;
}

std::vector<CensusEntry> spin_up_census(int l, int p, const VermaParams& params) {
    MatrixModule q = build_q(l, p, params);
    const auto chain = chain_submodules(l, p);
    std::vector<CensusEntry> out;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        Subspace s = spin_up(q, unit_vector(l, q.dim(), i));
        CensusEntry e{q.labels()[i], s.dim(), -1};
        if (s.dim() == q.dim()) {
            e.member = 0;
        } else {
            for (std::size_t r = 0; r < chain.size(); ++r)
                if (chain[r] == s) e.member = static_cast<int>(r) + 1;
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace qsaa
