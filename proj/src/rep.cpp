#include "qsaa/rep.hpp"

#include <deque>

namespace qsaa {

const char* to_string(Simplicity s) noexcept {
    switch (s) {
        case Simplicity::Simple: return "simple";
        case Simplicity::NotSimple: return "not-simple";
        case Simplicity::Undetermined: return "undetermined-nonsplit";
    }
    return "?";
}

MatrixModule::MatrixModule(PresentationName presentation, int l, std::vector<std::string> labels,
                           std::map<Gen, Matrix> action, bool verify)
    : presentation_(presentation), l_(l), labels_(std::move(labels)), action_(std::move(action)) {
    const Presentation& p = algebra();
    const std::size_t n = labels_.size();
    for (const auto& [g, mat] : action_) {
        if (!p.has(g))
            fail(ErrorKind::PresentationMismatch,
                 "generator " + std::string(gen_name(g)) + " is not part of " + std::string(presentation_name(presentation)));
        if (mat.order() != l) fail(ErrorKind::OrderMismatch, "matrix entries over a different root order");
        if (mat.rows() != n || mat.cols() != n)
            fail(ErrorKind::InvalidInput, "matrix for " + std::string(gen_name(g)) + " is not " + std::to_string(n) + "x" +
                                              std::to_string(n));
    }
    if (!action_.count(Gen::Kinv) && action_.count(Gen::K)) {
        auto inv = action_.at(Gen::K).try_inverse();
        if (!inv) fail(ErrorKind::InvariantViolation, "K acts singularly");
        action_.emplace(Gen::Kinv, *std::move(inv));
    }
    for (Gen g : p.generators())
        if (!action_.count(g)) fail(ErrorKind::InvalidInput, "missing matrix for generator " + std::string(gen_name(g)));
    if (verify) {
        auto bad = verify_relations(*this);
        if (!bad.empty())
            fail(ErrorKind::InvariantViolation, "relation " + bad.front().relation + " fails at entry (" +
                                                    std::to_string(bad.front().row) + "," +
                                                    std::to_string(bad.front().col) + ")");
    }
}

const Matrix& MatrixModule::action(Gen g) const {
    auto it = action_.find(g);
    if (it == action_.end())
        fail(ErrorKind::PresentationMismatch, "module has no action of " + std::string(gen_name(g)));
    return it->second;
}

std::vector<Matrix> MatrixModule::generating_matrices() const {
    std::vector<Matrix> out;
    for (Gen g : algebra().generators())
        if (g != Gen::Kinv) out.push_back(action(g));
    return out;
}

Matrix act_word(const MatrixModule& m, const Word& w) {
    Matrix r = Matrix::identity(m.order(), m.dim());
    for (Gen g : w) r = r * m.action(g);
    return r;
}

namespace {

Matrix evaluate_word_sum(const MatrixModule& m, const WordSum& s) {
    Matrix r(m.order(), m.dim(), m.dim());
    for (const auto& [c, w] : s) r += act_word(m, w) * c;
    return r;
}

}  // namespace

std::vector<RelationViolation> verify_relations(const MatrixModule& m) {
    std::vector<RelationViolation> out;
    for (const Relation& rel : m.algebra().relations()) {
        Matrix diff = evaluate_word_sum(m, rel.lhs) - evaluate_word_sum(m, rel.rhs);
        for (std::size_t i = 0; i < diff.rows() && (out.empty() || out.back().relation != rel.name); ++i)
            for (std::size_t j = 0; j < diff.cols(); ++j)
                if (!diff(i, j).is_zero()) {
                    out.push_back({rel.name, i, j, diff(i, j)});
                    break;
                }
    }
    return out;
}

Matrix act(const MatrixModule& m, const AlgebraElement& x) {
    const Presentation& p = m.algebra();
    if (&x.presentation() != &p)
        fail(ErrorKind::PresentationMismatch, "element and module use different presentations or orders");
    std::map<std::pair<int, int>, Matrix> powers;
    auto slot_power = [&](int slot, int e) -> const Matrix& {
        auto key = std::make_pair(slot, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        Gen g = p.slot_gen(slot);
        Matrix mat = (e < 0) ? m.action(Gen::Kinv).pow(-e) : m.action(g).pow(e);
        return powers.emplace(key, std::move(mat)).first->second;
    };
    Matrix r(m.order(), m.dim(), m.dim());
    for (const auto& [mono, c] : x.terms()) {
        Matrix t = Matrix::identity(m.order(), m.dim());
        for (int s = 0; s < p.num_slots(); ++s) {
            int e = mono.exps[static_cast<std::size_t>(s)];
            if (e != 0) t = t * slot_power(s, e);
        }
        r += t * c;
    }
    return r;
}

std::size_t algebra_closure_dim(const MatrixModule& m, std::size_t max_dim) {
    const std::size_t n = m.dim();
    if (n > max_dim)
        fail(ErrorKind::Resource, "closure of a " + std::to_string(n) + "-dimensional module exceeds the guard " +
                                      std::to_string(max_dim));
    const auto gens = m.generating_matrices();
    Subspace span(m.order(), n * n);
    std::deque<Matrix> queue;
    Matrix id = Matrix::identity(m.order(), n);
    span.insert(SparseVec::from_matrix(id));
    queue.push_back(std::move(id));
    while (!queue.empty() && span.dim() < n * n) {
        Matrix a = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            Matrix prod = a * g;
            if (span.insert(SparseVec::from_matrix(prod))) queue.push_back(std::move(prod));
        }
    }
    return span.dim();
}

Subspace spin_up(const MatrixModule& m, const Vector& v) {
    if (v.size() != m.dim()) fail(ErrorKind::InvalidInput, "vector length differs from module dimension");
    if (is_zero(v)) fail(ErrorKind::InvalidInput, "spin-up of the zero vector");
    Subspace seed(m.order(), m.dim());
    seed.insert(v);
    return spin_up(m, seed);
}

Subspace spin_up(const MatrixModule& m, const Subspace& s) {
    const auto gens = m.generating_matrices();
    return invariant_closure(s, gens);
}

bool is_invariant(const MatrixModule& m, const Subspace& w) {
    for (const auto& g : m.generating_matrices())
        for (const auto& v : w.dense_basis())
            if (!w.contains(g.apply(v))) return false;
    return true;
}

namespace {

std::vector<AlgebraElement> probe_panel(const Presentation& p) {
    std::vector<AlgebraElement> singles;
    for (Gen g : p.generators())
        if (g != Gen::Kinv) singles.push_back(p.gen(g));
    if (p.name() != PresentationName::B) singles.push_back(phi_element(p));
    if (p.name() == PresentationName::Smash) singles.push_back(psi_element(p));
    std::vector<AlgebraElement> panel = singles;
    for (const auto& a : singles)
        for (const auto& b : singles) panel.push_back(a * b);
    return panel;
}

}  // namespace

SimplicityReport is_simple(const MatrixModule& m, std::size_t max_dim) {
    SimplicityReport rep;
    const std::size_t n = m.dim();
    if (n == 0) {
        rep.verdict = Simplicity::NotSimple;
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i) {
        Subspace s = spin_up(m, unit_vector(m.order(), n, i));
        if (s.dim() < n) {
            rep.verdict = Simplicity::NotSimple;
            rep.witness = std::move(s);
            return rep;
        }
    }
    if (n <= max_dim) {
        rep.closure_dim = algebra_closure_dim(m, max_dim);
        if (*rep.closure_dim == n * n) {
            rep.verdict = Simplicity::Simple;
            return rep;
        }
    }
    for (const auto& x : probe_panel(m.algebra())) {
        Subspace ker = left_kernel(act(m, x));
        if (ker.dim() == 0 || ker.dim() == n) continue;
        for (const auto& v : ker.dense_basis()) {
            Subspace s = spin_up(m, v);
            if (s.dim() < n) {
                rep.verdict = Simplicity::NotSimple;
                rep.witness = std::move(s);
                return rep;
            }
        }
    }
    rep.verdict = Simplicity::Undetermined;
    return rep;
}

std::vector<Matrix> hom_space(const MatrixModule& m, const MatrixModule& n) {
    if (m.order() != n.order()) fail(ErrorKind::OrderMismatch, "hom_space between different root orders");
    if (m.presentation() != n.presentation())
        fail(ErrorKind::PresentationMismatch, "hom_space between modules over different algebras");
    const std::size_t dm = m.dim(), dn = n.dim();
    const int l = m.order();
    std::vector<SparseVec> eqs;
    for (Gen g : m.algebra().generators()) {
        if (g == Gen::Kinv) continue;
        const Matrix& gm = m.action(g);
        const Matrix& gn = n.action(g);
        // Nonzeros of each column of gn.
        std::vector<std::vector<std::size_t>> colnz(dn);
        for (std::size_t k = 0; k < dn; ++k)
            for (std::size_t b = 0; b < dn; ++b)
                if (!gn(k, b).is_zero()) colnz[b].push_back(k);
        for (std::size_t a = 0; a < dm; ++a)
            for (std::size_t b = 0; b < dn; ++b) {
                // (gm P)(a,b) - (P gn)(a,b)
                std::map<std::size_t, CycloNum> row;
                for (std::size_t k = 0; k < dm; ++k)
                    if (!gm(a, k).is_zero()) row.emplace(k * dn + b, gm(a, k));
                for (std::size_t k : colnz[b]) {
                    auto [it, fresh] = row.try_emplace(a * dn + k, -gn(k, b));
                    if (!fresh) it->second -= gn(k, b);
                }
                SparseVec eq;
                for (auto& [idx, c] : row) eq.push(idx, std::move(c));
                if (!eq.empty()) eqs.push_back(std::move(eq));
            }
    }
    std::vector<Matrix> out;
    for (const auto& v : nullspace(std::move(eqs), dm * dn, l)) out.push_back(v.to_matrix(l, dm, dn));
    return out;
}

bool is_hom(const MatrixModule& m, const MatrixModule& n, const Matrix& p) {
    if (p.rows() != m.dim() || p.cols() != n.dim()) return false;
    for (Gen g : m.algebra().generators())
        if (m.action(g) * p != p * n.action(g)) return false;
    return true;
}

bool EndoAlgebra::is_closed() const {
    if (basis.empty()) return true;
    const int l = basis.front().order();
    const std::size_t n = basis.front().rows();
    Subspace s(l, n * n);
    for (const auto& b : basis) s.insert(SparseVec::from_matrix(b));
    for (const auto& a : basis)
        for (const auto& b : basis)
            if (!s.contains(SparseVec::from_matrix(a * b))) return false;
    return true;
}

EndoAlgebra endo_algebra(const MatrixModule& m) {
    EndoAlgebra e;
    e.basis = hom_space(m, m);
    const std::size_t d = e.basis.size();
    const int l = m.order();
    Matrix gram(l, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            CycloNum t = CycloField::get(l).zero();
            const Matrix& a = e.basis[i];
            const Matrix& b = e.basis[j];
            for (std::size_t r = 0; r < a.rows(); ++r)
                for (std::size_t c = 0; c < a.cols(); ++c)
                    if (!a(r, c).is_zero() && !b(c, r).is_zero()) t.add_product(a(r, c), b(c, r));
            gram(i, j) = t;
            gram(j, i) = t;
        }
    for (const auto& coeffs : left_kernel(gram).dense_basis()) {
        Matrix x(l, m.dim(), m.dim());
        for (std::size_t i = 0; i < d; ++i)
            if (!coeffs[i].is_zero()) x += e.basis[i] * coeffs[i];
        e.radical.push_back(std::move(x));
    }
    return e;
}

bool is_indecomposable(const MatrixModule& m) {
    EndoAlgebra e = endo_algebra(m);
    return e.dim() - e.radical_dim() == 1;
}

bool has_invariant_complement(const MatrixModule& m, const Subspace& w) {
    if (w.ambient() != m.dim()) fail(ErrorKind::InvalidInput, "subspace lives in a different ambient space");
    if (!is_invariant(m, w)) fail(ErrorKind::InvalidInput, "subspace is not invariant");
    const int l = m.order();
    const std::size_t n = m.dim();
    const auto ends = hom_space(m, m);
    const std::size_t d = ends.size();
    const std::size_t t_var = d;
    // residual(v) = v - sum over pivots p of v[p] * row_p; zero iff v in W.
    auto residual = [&](const Vector& v) { return w.reduce(SparseVec::from_dense(v)); };
    std::vector<std::map<std::size_t, CycloNum>> rows;
    auto add_to = [](std::map<std::size_t, CycloNum>& row, std::size_t var, const CycloNum& c) {
        auto [it, fresh] = row.try_emplace(var, c);
        if (!fresh) it->second += c;
    };
    // Image inside W, row by row.
    for (std::size_t r = 0; r < n; ++r) {
        std::map<std::size_t, std::map<std::size_t, CycloNum>> by_coord;
        for (std::size_t i = 0; i < d; ++i) {
            const SparseVec res = residual(ends[i].row(r));
            for (const auto& e : res.entries()) add_to(by_coord[e.index], i, e.value);
        }
        for (auto& [coord, row] : by_coord) rows.push_back(std::move(row));
    }
    // Identity on W.
    for (const auto& wv : w.dense_basis()) {
        std::map<std::size_t, std::map<std::size_t, CycloNum>> by_coord;
        for (std::size_t i = 0; i < d; ++i) {
            Vector img = ends[i].apply(wv);
            for (std::size_t j = 0; j < n; ++j)
                if (!img[j].is_zero()) add_to(by_coord[j], i, img[j]);
        }
        for (std::size_t j = 0; j < n; ++j)
            if (!wv[j].is_zero()) add_to(by_coord[j], t_var, -wv[j]);
        for (auto& [coord, row] : by_coord) rows.push_back(std::move(row));
    }
    std::vector<SparseVec> eqs;
    for (auto& row : rows) {
        SparseVec v;
        for (auto& [var, c] : row) v.push(var, std::move(c));
        if (!v.empty()) eqs.push_back(std::move(v));
    }
    for (const auto& sol : nullspace(std::move(eqs), d + 1, l))
        if (sol.find(t_var)) return true;
    return false;
}

MatrixModule direct_sum(const MatrixModule& a, const MatrixModule& b) {
    if (a.order() != b.order()) fail(ErrorKind::OrderMismatch, "direct sum of modules over different root orders");
    if (a.presentation() != b.presentation())
        fail(ErrorKind::PresentationMismatch, "direct sum of modules over different algebras");
    const std::size_t na = a.dim(), nb = b.dim();
    std::vector<std::string> labels;
    for (const auto& s : a.labels()) labels.push_back("0:" + s);
    for (const auto& s : b.labels()) labels.push_back("1:" + s);
    std::map<Gen, Matrix> action;
    for (const auto& [g, ma] : a.actions()) {
        const Matrix& mb = b.action(g);
        Matrix s(a.order(), na + nb, na + nb);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j) s(i, j) = ma(i, j);
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < nb; ++j) s(na + i, na + j) = mb(i, j);
        action.emplace(g, std::move(s));
    }
    return MatrixModule(a.presentation(), a.order(), std::move(labels), std::move(action), false);
}

MatrixModule conjugate(const MatrixModule& m, const Matrix& p) {
    Matrix pinv = p.inverse();
    std::map<Gen, Matrix> action;
    for (const auto& [g, mat] : m.actions()) action.emplace(g, p * mat * pinv);
    return MatrixModule(m.presentation(), m.order(), m.labels(), std::move(action), false);
}

}  // namespace qsaa
