#include "qsaa/simple_mods.hpp"

#include <functional>

namespace qsaa {

namespace {

void require_nonzero(std::initializer_list<const CycloNum*> xs, const char* what) {
    int i = 1;
    for (const CycloNum* x : xs) {
        if (x->is_zero()) fail(ErrorKind::InvalidParameter, std::string(what) + ": mu" + std::to_string(i) + " must be nonzero");
        ++i;
    }
}

void require_count(const std::vector<CycloNum>& mu, std::size_t n, const char* what) {
    if (mu.size() != n)
        fail(ErrorKind::InvalidParameter,
             std::string(what) + " takes " + std::to_string(n) + " parameters, got " + std::to_string(mu.size()));
}

int mod(int a, int m) { return ((a % m) + m) % m; }

std::vector<std::string> pair_labels(int l1, int l) {
    std::vector<std::string> out;
    for (int a1 = 0; a1 < l1; ++a1)
        for (int a2 = 0; a2 < l; ++a2) out.push_back("(" + std::to_string(a1) + "," + std::to_string(a2) + ")");
    return out;
}

bool same_lth_power(int l, const CycloNum& a, const CycloNum& b) { return a.pow(l) == b.pow(l); }

// Row vector times matrix, repeated.
Vector times_pow(Vector v, const Matrix& m, int k) {
    for (int i = 0; i < k; ++i) v = m.apply(v);
    return v;
}

Vector scaled(Vector v, const CycloNum& c) {
    for (auto& x : v)
        if (!x.is_zero()) x *= c;
    return v;
}

// c with v*A == c*v, when v is an eigenvector of A.
std::optional<CycloNum> eigenvalue_of(const Vector& v, const Matrix& a) {
    Vector w = a.apply(v);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) {
            CycloNum c = w[i] / v[i];
            if (w == scaled(v, c)) return c;
            return std::nullopt;
        }
    return std::nullopt;
}

void push_unique(std::vector<CycloNum>& out, const CycloNum& c) {
    if (c.is_zero()) return;
    for (const auto& x : out)
        if (x == c) return;
    out.push_back(c);
}

}  // namespace

ParamsM1 params_m1(const std::vector<CycloNum>& mu) {
    require_count(mu, 4, "M1");
    return {mu[0], mu[1], mu[2], mu[3]};
}
ParamsM2 params_m2(const std::vector<CycloNum>& mu) {
    require_count(mu, 3, "M2");
    return {mu[0], mu[1], mu[2]};
}
ParamsM3 params_m3(const std::vector<CycloNum>& mu) {
    require_count(mu, 2, "M3");
    return {mu[0], mu[1]};
}

std::size_t basis_index(int l, int a1, int a2) { return static_cast<std::size_t>(a1) * static_cast<std::size_t>(l) + static_cast<std::size_t>(a2); }

const char* to_string(SimpleType t) noexcept {
    switch (t) {
        case SimpleType::M1: return "M1";
        case SimpleType::M2: return "M2";
        case SimpleType::M3: return "M3";
    }
    return "?";
}

MatrixModule build_m1(int l, const ParamsM1& mu) {
    require_nonzero({&mu.mu1, &mu.mu2, &mu.mu3, &mu.mu4}, "M1");
    const int l1 = ord_q2(l), h = l / 2;
    const std::size_t n = static_cast<std::size_t>(l1 * l);
    auto q = [l](long k) { return q_power(l, k); };
    const CycloNum one = CycloField::get(l).one();
    const CycloNum denom = (one - q(2)).inv();
    const CycloNum mu3inv = mu.mu3.inv();
    Matrix X(l, n, n), K(l, n, n), E(l, n, n), Y(l, n, n);
    for (int a1 = 0; a1 < l1; ++a1)
        for (int a2 = 0; a2 < l; ++a2) {
            const std::size_t i = basis_index(l, a1, a2);
            X(i, i) = mu.mu1 * q(a1 + a2);
            K(i, basis_index(l, a1, mod(a2 + 1, l))) = mu.mu4;
            const CycloNum e_coef = mu.mu3 * q(2 * a2);
            const CycloNum y_coef = mu3inv * q(-(a1 + a2)) * (q(1) * mu.mu2 - q(2 * a1 + 1) * mu.mu1) * denom;
            if (l % 2 == 1) {
                E(i, basis_index(l, mod(a1 + 1, l), a2)) = e_coef;
                Y(i, basis_index(l, mod(a1 - 1, l), a2)) = y_coef;
            } else {
                if (a1 != h - 1)
                    E(i, basis_index(l, a1 + 1, a2)) = e_coef;
                else
                    E(i, basis_index(l, 0, mod(h + a2, l))) = e_coef;
                if (a1 != 0)
                    Y(i, basis_index(l, a1 - 1, a2)) = y_coef;
                else
                    Y(i, basis_index(l, h - 1, mod(h + a2, l))) = mu3inv * q(-a2) * q(1) * (mu.mu2 - mu.mu1) * denom;
            }
        }
    return MatrixModule(PresentationName::Qsaa, l, pair_labels(l1, l),
                        {{Gen::X, X}, {Gen::Y, Y}, {Gen::E, E}, {Gen::K, K}});
}

MatrixModule build_m2(int l, const ParamsM2& mu) {
    require_nonzero({&mu.mu1, &mu.mu2, &mu.mu3}, "M2");
    const int l1 = ord_q2(l), h = l / 2;
    const std::size_t n = static_cast<std::size_t>(l1 * l);
    auto q = [l](long k) { return q_power(l, k); };
    const CycloNum mu2inv = mu.mu2.inv();
    Matrix X(l, n, n), K(l, n, n), E(l, n, n), Y(l, n, n);
    for (int a1 = 0; a1 < l1; ++a1)
        for (int a2 = 0; a2 < l; ++a2) {
            const std::size_t i = basis_index(l, a1, a2);
            X(i, i) = mu.mu1 * q(-a1 + a2);
            K(i, basis_index(l, a1, mod(a2 + 1, l))) = mu.mu3;
            if (a1 != 0) E(i, basis_index(l, a1 - 1, a2)) = -(mu2inv * mu.mu1 * q(a1 + 2 * a2) * q_int(l, a1));
            const CycloNum y_coef = mu.mu2 * q(-a2);
            if (l % 2 == 1)
                Y(i, basis_index(l, mod(a1 + 1, l), a2)) = y_coef;
            else if (a1 != h - 1)
                Y(i, basis_index(l, a1 + 1, a2)) = y_coef;
            else
                Y(i, basis_index(l, 0, mod(h + a2, l))) = y_coef;
        }
    return MatrixModule(PresentationName::Qsaa, l, pair_labels(l1, l),
                        {{Gen::X, X}, {Gen::Y, Y}, {Gen::E, E}, {Gen::K, K}});
}

MatrixModule build_m3(int l, const ParamsM3& mu) {
    require_nonzero({&mu.mu1, &mu.mu2}, "M3");
    const int l1 = ord_q2(l);
    const std::size_t n = static_cast<std::size_t>(l1 * l);
    auto q = [l](long k) { return q_power(l, k); };
    Matrix X(l, n, n), K(l, n, n), E(l, n, n), Y(l, n, n);
    for (int a1 = 0; a1 < l1; ++a1)
        for (int a2 = 0; a2 < l; ++a2) {
            const std::size_t i = basis_index(l, a1, a2);
            X(i, i) = mu.mu1 * q(-a1 + a2);
            K(i, basis_index(l, a1, mod(a2 + 1, l))) = mu.mu2;
            if (a1 != 0) E(i, basis_index(l, a1 - 1, a2)) = -(q(a1 + 2 * a2) * mu.mu1 * q_int(l, a1));
            if (a1 != l1 - 1) Y(i, basis_index(l, a1 + 1, a2)) = q(-a2);
        }
    return MatrixModule(PresentationName::Qsaa, l, pair_labels(l1, l),
                        {{Gen::X, X}, {Gen::Y, Y}, {Gen::E, E}, {Gen::K, K}});
}

MatrixModule build_type(int l, SimpleType t, const std::vector<CycloNum>& params) {
    switch (t) {
        case SimpleType::M1: return build_m1(l, params_m1(params));
        case SimpleType::M2: return build_m2(l, params_m2(params));
        case SimpleType::M3: return build_m3(l, params_m3(params));
    }
    fail(ErrorKind::InvalidParameter, "unknown module type");
}

// ---------------------------------------------------------------- criteria

namespace {

bool m1_relation(int l, const ParamsM1& mu, const ParamsM1& g, int r1, int r2) {
    return mu.mu1 == g.mu1 * q_power(l, r1 + r2) && mu.mu2 == g.mu2 * q_power(l, -r1 + r2);
}

bool m2_relation(int l, const ParamsM2& mu, const ParamsM2& g, int r1, int r2) {
    return mu.mu1 == g.mu1 * q_power(l, -r1 + r2);
}

// Even l: the half-power products below are invariants of the module, and
// the l-th power conditions alone do not force them to agree.
bool m1_half_powers_agree(int l, const ParamsM1& mu, const ParamsM1& g) {
    return l % 2 == 1 || (mu.mu3 * mu.mu4).pow(l / 2) == (g.mu3 * g.mu4).pow(l / 2);
}

bool m2_half_powers_agree(int l, const ParamsM2& mu, const ParamsM2& g) {
    return l % 2 == 1 || (mu.mu2 * mu.mu3 / mu.mu1).pow(l / 2) == (g.mu2 * g.mu3 / g.mu1).pow(l / 2);
}

}  // namespace

std::optional<IsoWitness> iso_m1(int l, const ParamsM1& mu, const ParamsM1& gamma) {
    if (!same_lth_power(l, mu.mu3, gamma.mu3) || !same_lth_power(l, mu.mu4, gamma.mu4) ||
        !m1_half_powers_agree(l, mu, gamma))
        return std::nullopt;
    const int l1 = ord_q2(l);
    for (int r1 = 0; r1 < l1; ++r1)
        for (int r2 = 0; r2 < l; ++r2)
            if (m1_relation(l, mu, gamma, r1, r2)) return IsoWitness{r1, r2};
    return std::nullopt;
}

std::optional<IsoWitness> iso_m2(int l, const ParamsM2& mu, const ParamsM2& gamma) {
    if (!same_lth_power(l, mu.mu2, gamma.mu2) || !same_lth_power(l, mu.mu3, gamma.mu3) ||
        !m2_half_powers_agree(l, mu, gamma))
        return std::nullopt;
    const int l1 = ord_q2(l);
    for (int r1 = 0; r1 < l1; ++r1)
        for (int r2 = 0; r2 < l; ++r2)
            if (m2_relation(l, mu, gamma, r1, r2)) return IsoWitness{r1, r2};
    return std::nullopt;
}

std::optional<IsoWitness> iso_m3(int l, const ParamsM3& mu, const ParamsM3& gamma) {
    if (!same_lth_power(l, mu.mu2, gamma.mu2)) return std::nullopt;
    for (int r = 0; r < l; ++r)
        if (mu.mu1 == gamma.mu1 * q_power(l, r)) return IsoWitness{0, r};
    return std::nullopt;
}

Matrix explicit_iso_m1(int l, const ParamsM1& mu, const ParamsM1& g, const IsoWitness& w) {
    const int l1 = ord_q2(l), h = l / 2;
    if (w.r1 < 0 || w.r1 >= l1 || w.r2 < 0 || w.r2 >= l || !m1_relation(l, mu, g, w.r1, w.r2) ||
        !same_lth_power(l, mu.mu3, g.mu3) || !same_lth_power(l, mu.mu4, g.mu4) || !m1_half_powers_agree(l, mu, g))
        fail(ErrorKind::InvalidParameter, "witness does not satisfy the M1 isomorphism criterion");
    const std::size_t n = static_cast<std::size_t>(l1 * l);
    const CycloNum s1 = mu.mu3.inv() * g.mu3 * q_power(l, 2 * w.r2);
    const CycloNum s2 = mu.mu4.inv() * g.mu4;
    Matrix p(l, n, n);
    for (int a1 = 0; a1 < l1; ++a1)
        for (int a2 = 0; a2 < l; ++a2) {
            const CycloNum c = s1.pow(a1) * s2.pow(a2);
            std::size_t col;
            if (l % 2 == 1)
                col = basis_index(l, mod(a1 + w.r1, l), mod(a2 + w.r2, l));
            else if (a1 <= h - w.r1 - 1)
                col = basis_index(l, a1 + w.r1, mod(a2 + w.r2, l));
            else
                col = basis_index(l, a1 + w.r1 - h, mod(h + a2 + w.r2, l));
            p(basis_index(l, a1, a2), col) = c;
        }
    return p;
}

Matrix explicit_iso_m2(int l, const ParamsM2& mu, const ParamsM2& g, const IsoWitness& w) {
    const int l1 = ord_q2(l), h = l / 2;
    if (w.r1 < 0 || w.r1 >= l1 || w.r2 < 0 || w.r2 >= l || !m2_relation(l, mu, g, w.r1, w.r2) ||
        !same_lth_power(l, mu.mu2, g.mu2) || !same_lth_power(l, mu.mu3, g.mu3) || !m2_half_powers_agree(l, mu, g))
        fail(ErrorKind::InvalidParameter, "witness does not satisfy the M2 isomorphism criterion");
    const std::size_t n = static_cast<std::size_t>(l1 * l);
    const CycloNum s1 = mu.mu2.inv() * g.mu2 * q_power(l, -w.r2);
    const CycloNum s2 = mu.mu3.inv() * g.mu3;
    Matrix p(l, n, n);
    for (int a1 = 0; a1 < l1; ++a1)
        for (int a2 = 0; a2 < l; ++a2) {
            CycloNum c = s1.pow(a1) * s2.pow(a2);
            std::size_t col;
            if (l % 2 == 1) {
                col = basis_index(l, mod(a1 + w.r1, l), mod(a2 + w.r2, l));
            } else if (a1 <= h - w.r1 - 1) {
                col = basis_index(l, a1 + w.r1, mod(a2 + w.r2, l));
            } else {
                c *= q_power(l, -static_cast<long>(h) * (a1 + w.r1 - h));
                col = basis_index(l, a1 + w.r1 - h, mod(h + a2 + w.r2, l));
            }
            p(basis_index(l, a1, a2), col) = c;
        }
    return p;
}

Matrix explicit_iso_m3(int l, const ParamsM3& mu, const ParamsM3& g, const IsoWitness& w) {
    const int l1 = ord_q2(l);
    if (w.r1 != 0 || w.r2 < 0 || w.r2 >= l || mu.mu1 != g.mu1 * q_power(l, w.r2) || !same_lth_power(l, mu.mu2, g.mu2))
        fail(ErrorKind::InvalidParameter, "witness does not satisfy the M3 isomorphism criterion");
    const std::size_t n = static_cast<std::size_t>(l1 * l);
    const CycloNum s2 = mu.mu2.inv() * g.mu2;
    Matrix p(l, n, n);
    for (int a1 = 0; a1 < l1; ++a1)
        for (int a2 = 0; a2 < l; ++a2)
            p(basis_index(l, a1, a2), basis_index(l, a1, mod(a2 + w.r2, l))) =
                q_power(l, -static_cast<long>(w.r2) * a1) * s2.pow(a2);
    return p;
}

// ----------------------------------------------------------- classification

Subspace joint_eigenspace(const std::vector<Matrix>& ops, const std::vector<CycloNum>& values) {
    if (ops.empty() || ops.size() != values.size()) fail(ErrorKind::InvalidInput, "joint_eigenspace: operator/value mismatch");
    const std::size_t n = ops.front().rows();
    const int l = ops.front().order();
    Matrix stacked(l, n, n * ops.size());
    for (std::size_t k = 0; k < ops.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CycloNum x = ops[k](i, j);
                if (i == j) x -= values[k];
                stacked(i, k * n + j) = std::move(x);
            }
    return left_kernel(stacked);
}

std::vector<CycloNum> scalar_candidates(int l, const std::vector<CycloNum>& hints, const std::vector<Matrix>& sources) {
    std::vector<CycloNum> out;
    for (const auto& h : hints) push_unique(out, h);
    for (const auto& m : sources)
        for (std::size_t i = 0; i < m.rows(); ++i) push_unique(out, m(i, i));
    std::vector<CycloNum> entries;
    for (const auto& m : sources)
        for (const auto& x : m.data()) push_unique(entries, x);
    for (const auto& x : entries)
        for (int k = 0; k < l; ++k) push_unique(out, x * q_power(l, k));
    return out;
}

std::optional<CycloNum> lth_root(int l, const CycloNum& c, const std::vector<CycloNum>& candidates) {
    for (const auto& x : candidates)
        if (x.pow(l) == c) return x;
    if (c.is_rational())
        for (const auto& r : rational_roots(c.rational_part(), l))
            for (int k = 0; k < l; ++k) {
                CycloNum x = CycloNum(l, r) * q_power(l, k);
                if (x.pow(l) == c) return x;
            }
    return std::nullopt;
}

namespace {

std::vector<CycloNum> all_lth_roots(int l, const CycloNum& c, const std::vector<CycloNum>& candidates) {
    std::vector<CycloNum> out;
    auto root = lth_root(l, c, candidates);
    if (!root) return out;
    for (int k = 0; k < l; ++k) push_unique(out, *root * q_power(l, k));
    return out;
}

CycloNum central_scalar(const MatrixModule& m, const AlgebraElement& x, const char* name) {
    auto s = act(m, x).scalar_value();
    if (!s) fail(ErrorKind::NotSimple, std::string(name) + " does not act as a scalar");
    return *s;
}

// Rows b(a1, a2) of a spanning-vector map M(params) -> N.
using RowRule = std::function<Vector(int a1, int a2)>;

Matrix rows_matrix(int l, int l1, std::size_t n, const RowRule& rule) {
    Matrix p(l, static_cast<std::size_t>(l1 * l), n);
    for (int a1 = 0; a1 < l1; ++a1)
        for (int a2 = 0; a2 < l; ++a2) {
            Vector r = rule(a1, a2);
            for (std::size_t j = 0; j < n; ++j) p(basis_index(l, a1, a2), j) = r[j];
        }
    return p;
}

bool is_iso(const MatrixModule& a, const MatrixModule& b, const Matrix& p) {
    return a.dim() == b.dim() && is_hom(a, b, p) && p.try_inverse().has_value();
}

}  // namespace

Classification classify(const MatrixModule& m, const std::vector<CycloNum>& hints) {
    if (m.presentation() != PresentationName::Qsaa)
        fail(ErrorKind::PresentationMismatch, "classification applies to Qsaa-modules");
    const int l = m.order();
    const int l1 = ord_q2(l), h = l / 2;
    const bool even = l % 2 == 0;
    const Presentation& p = m.algebra();
    const std::size_t n = m.dim();
    if (n != static_cast<std::size_t>(l1 * l))
        fail(ErrorKind::NotSimple, "dimension " + std::to_string(n) + " differs from l1*l = " + std::to_string(l1 * l));

    const Matrix& mx = m.action(Gen::X);
    const Matrix& me = m.action(Gen::E);
    const Matrix& my = m.action(Gen::Y);
    const Matrix& mk = m.action(Gen::K);
    const Matrix mphi = act(m, phi_element(p));
    if (!mx.try_inverse()) fail(ErrorKind::Torsion, "X does not act invertibly");
    if (!mphi.try_inverse()) fail(ErrorKind::Torsion, "phi does not act invertibly");

    EigenData ed{central_scalar(m, p.gen(Gen::E).pow(l), "E^l"), central_scalar(m, p.gen(Gen::Y).pow(l), "Y^l"),
                 central_scalar(m, p.gen(Gen::K).pow(l), "K^l"), CycloNum(l), CycloNum(l), {}, {}, {}};

    // Common eigenvector of X and phi.
    std::vector<CycloNum> xcands = scalar_candidates(l, hints, {mx});
    if (auto xl = act(m, p.gen(Gen::X).pow(l)).scalar_value(); xl && xl->is_rational())
        for (const auto& r : rational_roots(xl->rational_part(), l))
            for (int k = 0; k < l; ++k) push_unique(xcands, CycloNum(l, r) * q_power(l, k));
    std::optional<Vector> v;
    for (const auto& t : xcands) {
        Subspace xs = joint_eigenspace({mx}, {t});
        if (xs.dim() == 0) continue;
        std::vector<CycloNum> pcands = scalar_candidates(l, hints, {mphi});
        for (int k = 0; k < l; ++k) push_unique(pcands, t * q_power(l, k));
        for (const auto& s : pcands) {
            Subspace js = joint_eigenspace({mx, mphi}, {t, s});
            if (js.dim() == 0) continue;
            v = js.dense_basis().front();
            ed.lambda1 = t;
            ed.lambda2 = s;
            break;
        }
        if (v) break;
    }
    if (!v) fail(ErrorKind::NeedsHints, "no common eigenvector of X and phi among the candidate eigenvalues");
    if (even) {
        ed.alpha_prime = eigenvalue_of(*v, act(m, p.gen(Gen::E).pow(h) * p.gen(Gen::K).pow(h)));
        ed.beta_prime = eigenvalue_of(*v, act(m, p.gen(Gen::Y).pow(h) * p.gen(Gen::K).pow(h)));
    }

    const std::vector<CycloNum> root_cands = scalar_candidates(l, hints, {me, my, mk, mx});
    const std::vector<CycloNum> xi_roots = all_lth_roots(l, ed.xi, root_cands);
    if (xi_roots.empty()) fail(ErrorKind::NeedsHints, "no l-th root of xi = " + ed.xi.str() + " among the candidates");

    Classification out{SimpleType::M1, {}, ed, 0, *v, Matrix(l, n, n), false};

    // Tries each parameter choice with the spanning-vector map, then falls back to Hom.
    struct Choice {
        std::vector<CycloNum> params;
        RowRule rule;
    };
    auto settle = [&](SimpleType type, const std::vector<Choice>& choices) {
        out.type = type;
        for (const auto& c : choices) {
            MatrixModule model = build_type(l, type, c.params);
            Matrix phi_map = rows_matrix(l, l1, n, c.rule);
            if (is_iso(model, m, phi_map)) {
                out.params = c.params;
                out.intertwiner = std::move(phi_map);
                out.direct_map = true;
                return;
            }
        }
        for (const auto& c : choices) {
            MatrixModule model = build_type(l, type, c.params);
            auto homs = hom_space(model, m);
            if (homs.size() == 1 && is_iso(model, m, homs.front())) {
                out.params = c.params;
                out.intertwiner = homs.front();
                out.direct_map = false;
                return;
            }
        }
        fail(ErrorKind::InvariantViolation, std::string("no ") + to_string(type) + " model isomorphic to the module was found");
    };

    if (!ed.alpha.is_zero()) {
        const auto alpha_roots = all_lth_roots(l, ed.alpha, root_cands);
        if (alpha_roots.empty()) fail(ErrorKind::NeedsHints, "no l-th root of alpha = " + ed.alpha.str());
        std::vector<Choice> choices;
        for (const auto& mu3 : alpha_roots)
            for (const auto& mu4 : xi_roots) {
                const Vector base = *v;
                const CycloNum i3 = mu3.inv(), i4 = mu4.inv();
                choices.push_back({{ed.lambda1, ed.lambda2, mu3, mu4}, [=, &me, &mk](int a1, int a2) {
                                       return scaled(times_pow(times_pow(base, me, a1), mk, a2), i3.pow(a1) * i4.pow(a2));
                                   }});
            }
        settle(SimpleType::M1, choices);
        return out;
    }

    // E acts nilpotently: v' = v E^r with v' E = 0.
    Vector vp = *v;
    int r = 0;
    while (true) {
        Vector next = me.apply(vp);
        if (is_zero(next)) break;
        vp = std::move(next);
        if (++r > l) fail(ErrorKind::InvariantViolation, "E^l vanishes but E is not nilpotent on the eigenvector");
    }
    out.shift = r;
    const CycloNum lam = ed.lambda1 * q_power(l, r);

    if (!ed.beta.is_zero()) {
        // On M2(mu), Y^l acts by q^{l^2/4} mu2^l for even l.
        const CycloNum beta_target = even ? ed.beta * q_power(l, -static_cast<long>(l) * l / 4) : ed.beta;
        const auto beta_roots = all_lth_roots(l, beta_target, root_cands);
        if (beta_roots.empty()) fail(ErrorKind::NeedsHints, "no l-th root of beta = " + ed.beta.str());
        std::vector<Choice> choices;
        for (const auto& mu2 : beta_roots)
            for (const auto& mu3 : xi_roots) {
                const CycloNum i2 = mu2.inv(), i3 = mu3.inv();
                choices.push_back({{lam, mu2, mu3}, [=, &my, &mk](int a1, int a2) {
                                       return scaled(times_pow(times_pow(vp, my, a1), mk, a2), i2.pow(a1) * i3.pow(a2));
                                   }});
            }
        settle(SimpleType::M2, choices);
        return out;
    }

    std::vector<Choice> choices;
    for (const auto& mu2 : xi_roots) {
        const CycloNum i2 = mu2.inv();
        choices.push_back({{lam, mu2}, [=, &my, &mk](int a1, int a2) {
                               return scaled(times_pow(times_pow(vp, my, a1), mk, a2), i2.pow(a2));
                           }});
    }
    settle(SimpleType::M3, choices);
    return out;
}

}  // namespace qsaa
