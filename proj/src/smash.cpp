#include "qsaa/smash.hpp"

#include "qsaa/simple_mods.hpp"

namespace qsaa {

MatrixModule build_n1(int l, const BModuleParams& p) {
    if (l < 3) fail(ErrorKind::InvalidOrder, "root order must be at least 3");
    if (l % 2 == 0) fail(ErrorKind::Unsupported, "N1 is built for odd l only");
    if (p.lambda1.is_zero() || p.lambda2.is_zero() || p.xi.is_zero() || p.alpha.is_zero())
        fail(ErrorKind::InvalidParameter, "lambda1, lambda2, xi and alpha must be nonzero");
    auto q = [l](long k) { return q_power(l, k); };
    auto idx = [l](int a, int b) { return static_cast<std::size_t>(a * l + b); };
    const std::size_t n = static_cast<std::size_t>(l * l);
    Matrix K(l, n, n), Phi(l, n, n), Psi(l, n, n), X(l, n, n), Y(l, n, n);
    std::vector<std::string> labels;
    const CycloNum lam12 = p.lambda1 * p.lambda2;
    for (int a = 0; a < l; ++a)
        for (int b = 0; b < l; ++b) {
            const std::size_t i = idx(a, b);
            labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
            K(i, i) = q(-b - a) * p.lambda1;
            // phi^l = alpha and X^l = xi close the cycles.
            if (a + 1 < l)
                Phi(i, idx(a + 1, b)) = CycloField::get(l).one();
            else
                Phi(i, idx(0, b)) = p.alpha;
            if (b + 1 < l)
                X(i, idx(a, b + 1)) = CycloField::get(l).one();
            else
                X(i, idx(a, 0)) = p.xi;
            if (a != 0)
                Psi(i, idx(a - 1, b)) = p.lambda3 - q(3) * (q(-2 * a) - CycloField::get(l).one()) * lam12;
            else
                Psi(i, idx(l - 1, b)) = p.alpha.inv() * p.lambda3;
            if (b != 0)
                Y(i, idx(a, b - 1)) = q(b - a) * p.lambda2;
            else
                Y(i, idx(a, l - 1)) = p.xi.inv() * q(-a) * p.lambda2;
        }
    return MatrixModule(PresentationName::B, l, std::move(labels),
                        {{Gen::X, X}, {Gen::Y, Y}, {Gen::K, K}, {Gen::Phi, Phi}, {Gen::Psi, Psi}});
}

MatrixModule lift_to_A(const MatrixModule& m) {
    if (m.presentation() != PresentationName::B) fail(ErrorKind::PresentationMismatch, "lifting expects a B-module");
    const int l = m.order();
    auto xinv = m.action(Gen::X).try_inverse();
    auto yinv = m.action(Gen::Y).try_inverse();
    if (!xinv || !yinv) fail(ErrorKind::Torsion, "X and Y must act invertibly");
    const Matrix& X = m.action(Gen::X);
    const Matrix& Y = m.action(Gen::Y);
    const Matrix& Kinv = m.action(Gen::Kinv);
    const CycloNum q1 = q_power(l, 1), q2 = q_power(l, 2);
    const CycloNum one = CycloField::get(l).one();
    Matrix E = *yinv * (X - m.action(Gen::Phi)) * (q1 - q1.inv()).inv();
    Matrix F = *xinv * (m.action(Gen::Psi) + Y * Kinv * q2) * (one - q2).inv();
    return MatrixModule(PresentationName::Smash, l, m.labels(),
                        {{Gen::X, X}, {Gen::Y, Y}, {Gen::E, E}, {Gen::K, m.action(Gen::K)}, {Gen::F, F}});
}

MatrixModule restrict_to_B(const MatrixModule& m) {
    if (m.presentation() != PresentationName::Smash)
        fail(ErrorKind::PresentationMismatch, "restriction expects a module over the smash product");
    const Presentation& a = m.algebra();
    return MatrixModule(PresentationName::B, m.order(), m.labels(),
                        {{Gen::X, m.action(Gen::X)},
                         {Gen::Y, m.action(Gen::Y)},
                         {Gen::K, m.action(Gen::K)},
                         {Gen::Phi, act(m, phi_element(a))},
                         {Gen::Psi, act(m, psi_element(a))}});
}

BEigenData eigendata_of(const MatrixModule& m, const std::vector<CycloNum>& hints) {
    if (m.presentation() != PresentationName::B) fail(ErrorKind::PresentationMismatch, "eigen-data expects a B-module");
    const int l = m.order();
    const Presentation& p = m.algebra();
    auto scalar = [&](const AlgebraElement& x, const char* name) {
        auto s = act(m, x).scalar_value();
        if (!s) fail(ErrorKind::NotSimple, std::string(name) + " does not act as a scalar");
        return *s;
    };
    const CycloNum alpha = scalar(p.gen(Gen::Phi).pow(l), "phi^l");
    const CycloNum beta = scalar(p.gen(Gen::Psi).pow(l), "psi^l");
    const CycloNum xi = scalar(p.gen(Gen::X).pow(l), "X^l");
    const Matrix& k = m.action(Gen::K);
    const Matrix yx = act(m, p.gen(Gen::Y) * p.gen(Gen::X));
    const Matrix psiphi = act(m, p.gen(Gen::Psi) * p.gen(Gen::Phi));

    auto eigen_cands = [&](const Matrix& a) {
        std::vector<CycloNum> c = scalar_candidates(l, hints, {a});
        c.insert(c.begin(), CycloField::get(l).zero());
        return c;
    };
    const auto kc = scalar_candidates(l, hints, {k});
    const auto yc = scalar_candidates(l, hints, {yx});
    const auto pc = eigen_cands(psiphi);
    for (const auto& t1 : kc) {
        if (joint_eigenspace({k}, {t1}).dim() == 0) continue;
        for (const auto& t2 : yc) {
            if (joint_eigenspace({k, yx}, {t1, t2}).dim() == 0) continue;
            for (const auto& t3 : pc) {
                Subspace s = joint_eigenspace({k, yx, psiphi}, {t1, t2, t3});
                if (s.dim() == 0) continue;
                return BEigenData{{t1, t2, t3, xi, alpha}, beta, s.dense_basis().front()};
            }
        }
    }
    fail(ErrorKind::NeedsHints, "no common eigenvector of K, YX and psi phi among the candidate eigenvalues");
}

}  // namespace qsaa
