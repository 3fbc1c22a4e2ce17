#include "doctest.h"
#include "qsaa/pi_degree.hpp"
#include "qsaa/smash.hpp"

using namespace qsaa;

namespace {

CycloNum c(int l, long v) { return CycloNum(l, v); }
CycloNum q(int l, long k) { return q_power(l, k); }

BModuleParams sample(int l) { return {c(l, 1), c(l, 1), c(l, 0), c(l, 1), c(l, 1)}; }

std::vector<BModuleParams> grid(int l) {
    std::vector<BModuleParams> out;
    for (const auto& lam3 : {c(l, 0), c(l, 1), q(l, 1)})
        for (const auto& alpha : {c(l, 1), q(l, 1), c(l, 2)})
            for (const auto& xi : {c(l, 1), q(l, 1), c(l, 2)}) out.push_back({c(l, 1), c(l, 1), lam3, xi, alpha});
    return out;
}

}  // namespace

TEST_CASE("N1 examples") {
    const int l = 3;
    MatrixModule n = build_n1(l, sample(l));
    CHECK(n.dim() == 9);
    CHECK(verify_relations(n).empty());
    const Presentation& b = n.algebra();

    BModuleParams p{c(l, 2), c(l, 3), c(l, 5), q(l, 1), c(l, 7)};
    MatrixModule m = build_n1(l, p);
    for (int bb = 0; bb < l; ++bb) {
        Vector expect = zero_vector(l, 9);
        expect[static_cast<std::size_t>((l - 1) * l + bb)] = p.alpha.inv() * p.lambda3;
        CHECK(m.action(Gen::Psi).row(static_cast<std::size_t>(bb)) == expect);
    }
    Matrix lhs = act(m, b.gen(Gen::Psi) * b.gen(Gen::Phi) - b.gen(Gen::Phi) * b.gen(Gen::Psi));
    Matrix rhs = act(m, b.gen(Gen::K) * b.gen(Gen::Y) * b.gen(Gen::X)) * (q(l, 1) * (c(l, 1) - q(l, 2)));
    CHECK(lhs == rhs);
    CHECK(act(m, b.gen(Gen::Phi).pow(l)) == Matrix::scalar(p.alpha, 9));
    CHECK(act(m, b.gen(Gen::X).pow(l)) == Matrix::scalar(p.xi, 9));

    CHECK_THROWS_AS(build_n1(4, sample(4)), Error);
    CHECK_THROWS_AS(build_n1(3, {c(l, 1), c(l, 1), c(l, 0), c(l, 1), c(l, 0)}), Error);
}

TEST_CASE("K acts diagonally on N1") {
    const int l = 3;
    BModuleParams p{c(l, 2), c(l, 1), c(l, 1), c(l, 1), c(l, 1)};
    MatrixModule n = build_n1(l, p);
    CHECK(n.action(Gen::K).is_diagonal());
    for (int a = 0; a < l; ++a)
        for (int b = 0; b < l; ++b) {
            const auto i = static_cast<std::size_t>(a * l + b);
            CHECK(n.action(Gen::K)(i, i) == q(l, -b - a) * p.lambda1);
        }
    CHECK(n.action(Gen::K) * n.action(Gen::Kinv) == Matrix::identity(l, 9));
}

TEST_CASE("N1 grid: relations, simplicity, dimension") {
    const int l = 3;
    for (const auto& p : grid(l)) {
        MatrixModule n = build_n1(l, p);
        CHECK(verify_relations(n).empty());
        CHECK(is_simple(n, 100).verdict == Simplicity::Simple);
        CHECK(n.dim() == static_cast<std::size_t>(pideg_smash(l)));
    }
}

TEST_CASE("N1 stays simple where a psi coefficient vanishes") {
    const int l = 3;
    // lambda3 = q^3 (q^-2 - 1) lambda1 lambda2 kills the psi coefficient at a = 1.
    const CycloNum lam3 = q(l, 3) * (q(l, -2) - c(l, 1));
    MatrixModule n = build_n1(l, {c(l, 1), c(l, 1), lam3, c(l, 1), c(l, 1)});
    CHECK(is_zero(n.action(Gen::Psi).row(static_cast<std::size_t>(l))));
    CHECK(is_simple(n, 100).verdict == Simplicity::Simple);
}

TEST_CASE("lifting to the smash product") {
    const int l = 3;
    MatrixModule n = build_n1(l, sample(l));
    MatrixModule a = lift_to_A(n);
    CHECK(a.presentation() == PresentationName::Smash);
    CHECK(verify_relations(a).empty());
    CHECK(act(a, phi_element(a.algebra())) == n.action(Gen::Phi));
    CHECK(act(a, psi_element(a.algebra())) == n.action(Gen::Psi));
    auto rep = is_simple(a, 100);
    CHECK(rep.verdict == Simplicity::Simple);
    REQUIRE(rep.closure_dim);
    CHECK(*rep.closure_dim == 81);

    MatrixModule back = restrict_to_B(a);
    for (Gen g : {Gen::X, Gen::Y, Gen::K, Gen::Phi, Gen::Psi}) CHECK(back.action(g) == n.action(g));

    // Embedded B-words act the same way on the lift.
    const Presentation& b = n.algebra();
    AlgebraElement w = b.gen(Gen::Psi) * b.gen(Gen::Phi) * b.gen(Gen::Y) + b.gen(Gen::K).pow(2) * b.gen(Gen::Phi);
    CHECK(act(a, embed_b_in_smash(w)) == act(n, w));

    std::map<Gen, Matrix> acts;
    for (const auto& [g, m] : n.actions())
        if (g != Gen::Kinv) acts.emplace(g, m);
    acts.at(Gen::Y) = Matrix(l, 9, 9);
    MatrixModule torsion(PresentationName::B, l, n.labels(), acts, false);
    CHECK_THROWS_AS(lift_to_A(torsion), Error);
}

TEST_CASE("lifting preserves Hom spaces") {
    const int l = 3;
    auto g = grid(l);
    std::vector<MatrixModule> bs, as;
    for (std::size_t i = 0; i < g.size(); i += 4) {
        bs.push_back(build_n1(l, g[i]));
        as.push_back(lift_to_A(bs.back()));
    }
    // A rescaled copy of the first module, isomorphic to it.
    Matrix d = Matrix::identity(l, 9);
    for (std::size_t i = 0; i < 9; ++i) d(i, i) = c(l, static_cast<long>(i) + 1);
    bs.push_back(conjugate(bs.front(), d));
    as.push_back(lift_to_A(bs.back()));
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = 0; j < bs.size(); ++j) {
            auto hb = hom_space(bs[i], bs[j]);
            auto ha = hom_space(as[i], as[j]);
            CHECK(hb.size() == ha.size());
            for (const auto& h : hb) CHECK(is_hom(as[i], as[j], h));
        }
    CHECK(hom_space(bs.front(), bs.back()).size() == 1);
}

TEST_CASE("eigen-data round trip") {
    const int l = 3;
    for (const auto& p : grid(l)) {
        MatrixModule n = build_n1(l, p);
        BEigenData e = eigendata_of(n);
        CHECK(e.params.alpha == p.alpha);
        CHECK(e.params.xi == p.xi);
        CHECK(act(n, n.algebra().gen(Gen::Psi).pow(l)) == Matrix::scalar(e.beta, 9));
        MatrixModule again = build_n1(l, e.params);
        CHECK(hom_space(again, n).size() == 1);
    }
    MatrixModule n = build_n1(l, {c(l, 2), c(l, 3), c(l, 1), c(l, 1), c(l, 1)});
    BEigenData e = eigendata_of(n);
    const Presentation& b = n.algebra();
    CHECK(act(n, b.gen(Gen::Y) * b.gen(Gen::X)).apply(e.eigenvector) ==
          [&] {
              Vector v = e.eigenvector;
              for (auto& x : v) x *= e.params.lambda2;
              return v;
          }());
    CHECK_THROWS_AS(eigendata_of(direct_sum(n, build_n1(l, sample(l)))), Error);
}
