#include <random>

#include "doctest.h"
#include "qsaa/rep.hpp"
#include "qsaa/simple_mods.hpp"

using namespace qsaa;

namespace {

CycloNum c(int l, long v) { return CycloNum(l, v); }

MatrixModule m1_sample(int l) { return build_m1(l, {c(l, 1), c(l, 2), c(l, 1), c(l, 1)}); }

Matrix random_invertible(int l, std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-2, 2);
    while (true) {
        Matrix p(l, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p(i, j) = CycloNum(l, d(rng)) + CycloNum(l, d(rng)) * q_power(l, 1);
        if (p.try_inverse()) return p;
    }
}

AlgebraElement random_element(const Presentation& p, std::mt19937& rng) {
    const auto& gens = p.generators();
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> len(0, 4), coef(-3, 3);
    AlgebraElement x = p.zero();
    for (int t = 0; t < 2; ++t) {
        Word w(static_cast<std::size_t>(len(rng)));
        for (auto& g : w) g = gens[pick(rng)];
        x += p.normal_form(w) * CycloNum(p.order(), coef(rng));
    }
    return x;
}

std::map<Gen, Matrix> actions_without_kinv(const MatrixModule& m) {
    std::map<Gen, Matrix> out;
    for (const auto& [g, a] : m.actions())
        if (g != Gen::Kinv) out.emplace(g, a);
    return out;
}

}  // namespace

TEST_CASE("relations hold on constructed modules and corruption is reported") {
    MatrixModule m = m1_sample(3);
    CHECK(verify_relations(m).empty());
    auto acts = actions_without_kinv(m);
    acts.at(Gen::E) = Matrix::identity(3, m.dim());
    MatrixModule bad(PresentationName::Qsaa, 3, m.labels(), acts, false);
    auto report = verify_relations(bad);
    REQUIRE_FALSE(report.empty());
    bool ey_failed = false;
    for (const auto& v : report) {
        CHECK_FALSE(v.residual.is_zero());
        if (v.relation.find("EY") != std::string::npos) ey_failed = true;
    }
    CHECK(ey_failed);
    CHECK_THROWS_AS(MatrixModule(PresentationName::Qsaa, 3, m.labels(), acts), Error);
}

TEST_CASE("constructor validates shapes and fills K inverse") {
    MatrixModule m = m1_sample(3);
    CHECK(m.action(Gen::K) * m.action(Gen::Kinv) == Matrix::identity(3, 9));
    auto acts = actions_without_kinv(m);
    acts.erase(Gen::Y);
    CHECK_THROWS_AS(MatrixModule(PresentationName::Qsaa, 3, m.labels(), acts), Error);
    auto wrong = actions_without_kinv(m);
    wrong.at(Gen::X) = Matrix::identity(3, 4);
    CHECK_THROWS_AS(MatrixModule(PresentationName::Qsaa, 3, m.labels(), wrong), Error);
}

TEST_CASE("act examples") {
    const int l = 3;
    MatrixModule m = m1_sample(l);
    const Presentation& p = m.algebra();
    CHECK(act(m, p.one()) == Matrix::identity(l, 9));
    CHECK(act(m, p.gen(Gen::X).pow(l)) == Matrix::scalar(c(l, 1), 9));
    MatrixModule m2 = build_m1(l, {c(l, 2), c(l, 3), c(l, 1), c(l, 1)});
    CHECK(act(m2, p.gen(Gen::X).pow(l)) == Matrix::scalar(c(l, 8), 9));
    Matrix phi = act(m2, phi_element(p));
    CHECK(phi.is_diagonal());
    for (int a1 = 0; a1 < l; ++a1)
        for (int a2 = 0; a2 < l; ++a2) {
            std::size_t i = basis_index(l, a1, a2);
            CHECK(phi(i, i) == c(l, 3) * q_power(l, -a1 + a2));
        }
    CHECK_THROWS_AS(act(m, Presentation::get(PresentationName::Smash, 3).one()), Error);
}

TEST_CASE("act is multiplicative") {
    for (int l : {3, 4}) {
        std::vector<MatrixModule> mods = {build_m1(l, {c(l, 1), c(l, 2), c(l, 3), c(l, 1)}),
                                          build_m2(l, {c(l, 2), c(l, 1), c(l, 3)}), build_m3(l, {c(l, 3), c(l, 2)})};
        std::mt19937 rng(77 + static_cast<unsigned>(l));
        for (const auto& m : mods) {
            const Presentation& p = m.algebra();
            for (int t = 0; t < 50; ++t) {
                AlgebraElement u = random_element(p, rng), v = random_element(p, rng);
                CHECK(act(m, u * v) == act(m, u) * act(m, v));
            }
        }
    }
}

TEST_CASE("closure dimension") {
    MatrixModule m = m1_sample(3);
    CHECK(algebra_closure_dim(m, 100) == 81);
    CHECK(algebra_closure_dim(direct_sum(m, m), 400) == 81);
    CHECK_THROWS_AS(algebra_closure_dim(m, 8), Error);
    CHECK(algebra_closure_dim(m1_sample(4), 100) == 64);

    // One-dimensional module with K scalar and everything else zero.
    const int l = 3;
    std::map<Gen, Matrix> acts;
    for (Gen g : {Gen::X, Gen::Y, Gen::E}) acts.emplace(g, Matrix(l, 1, 1));
    acts.emplace(Gen::K, Matrix::scalar(c(l, 2), 1));
    MatrixModule one(PresentationName::Qsaa, l, {"v"}, acts);
    CHECK(algebra_closure_dim(one) == 1);
}

TEST_CASE("closure dimension is invariant under a change of basis") {
    std::mt19937 rng(11);
    for (int l : {3, 4}) {
        MatrixModule m = build_m2(l, {c(l, 2), c(l, 3), c(l, 1)});
        MatrixModule conj = conjugate(m, random_invertible(l, m.dim(), rng));
        CHECK(verify_relations(conj).empty());
        CHECK(algebra_closure_dim(conj, 100) == algebra_closure_dim(m, 100));
    }
}

TEST_CASE("conjugation matrix is a module map") {
    std::mt19937 rng(3);
    MatrixModule m = m1_sample(3);
    Matrix p = random_invertible(3, 9, rng);
    MatrixModule conj = conjugate(m, p);
    CHECK(is_hom(conj, m, p));
    CHECK(hom_space(conj, m).size() == 1);
}

TEST_CASE("simplicity verdicts") {
    CHECK(is_simple(build_m2(3, {c(3, 1), c(3, 1), c(3, 1)})).verdict == Simplicity::Simple);
    // E := 0 in M1(1,1,1,1); Y then also kills e(0, a2).
    MatrixModule m = build_m1(3, {c(3, 1), c(3, 1), c(3, 1), c(3, 1)});
    auto acts = actions_without_kinv(m);
    acts.at(Gen::E) = Matrix(3, 9, 9);
    MatrixModule zeroed(PresentationName::Qsaa, 3, m.labels(), acts, false);
    auto rep = is_simple(zeroed);
    CHECK(rep.verdict == Simplicity::NotSimple);
    REQUIRE(rep.witness);
    CHECK(rep.witness->dim() > 0);
    CHECK(rep.witness->dim() < 9);
    CHECK(is_invariant(zeroed, *rep.witness));
    CHECK(std::string(to_string(Simplicity::Undetermined)) == "undetermined-nonsplit");
}

TEST_CASE("spin-up") {
    MatrixModule m = m1_sample(3);
    for (std::size_t i = 0; i < 9; ++i) CHECK(spin_up(m, unit_vector(3, 9, i)).dim() == 9);
    CHECK_THROWS_AS(spin_up(m, zero_vector(3, 9)), Error);
}

TEST_CASE("hom spaces") {
    const int l = 3;
    MatrixModule m = m1_sample(l);
    auto self = hom_space(m, m);
    REQUIRE(self.size() == 1);
    CHECK(self.front().try_inverse().has_value());
    MatrixModule other = build_m1(l, {c(l, 1), c(l, 2), c(l, 2), c(l, 1)});
    CHECK(hom_space(m, other).empty());
    CHECK(hom_space(build_m3(l, {c(l, 1), c(l, 1)}), build_m2(l, {c(l, 1), c(l, 1), c(l, 1)})).empty());
    // Rectangular: a simple module into a direct sum of two copies.
    CHECK(hom_space(m, direct_sum(m, m)).size() == 2);
}

TEST_CASE("endomorphism algebra and indecomposability") {
    MatrixModule m = m1_sample(3);
    EndoAlgebra e = endo_algebra(m);
    CHECK(e.dim() == 1);
    CHECK(e.radical_dim() == 0);
    CHECK(e.is_closed());
    CHECK(is_indecomposable(m));

    MatrixModule sum = direct_sum(m, m);
    EndoAlgebra es = endo_algebra(sum);
    CHECK(es.dim() - es.radical_dim() == 4);
    CHECK(es.is_closed());
    CHECK_FALSE(is_indecomposable(sum));
}

TEST_CASE("invariant complements") {
    const int l = 3;
    MatrixModule a = m1_sample(l);
    MatrixModule b = build_m2(l, {c(l, 1), c(l, 1), c(l, 1)});
    MatrixModule sum = direct_sum(a, b);
    CHECK(has_invariant_complement(sum, Subspace::full(l, sum.dim())));
    std::vector<Vector> first;
    for (std::size_t i = 0; i < a.dim(); ++i) first.push_back(unit_vector(l, sum.dim(), i));
    CHECK(has_invariant_complement(sum, Subspace::span(l, sum.dim(), first)));
    Subspace not_invariant = Subspace::span(l, sum.dim(), std::vector<Vector>{unit_vector(l, sum.dim(), 0)});
    CHECK_THROWS_AS(has_invariant_complement(sum, not_invariant), Error);
}
