#include <random>

#include "doctest.h"
#include "qsaa/pi_degree.hpp"
#include "qsaa/simple_mods.hpp"

using namespace qsaa;

namespace {

CycloNum c(int l, long v) { return CycloNum(l, v); }
CycloNum q(int l, long k) { return q_power(l, k); }

Vector row_of(const MatrixModule& m, Gen g, std::size_t i) { return m.action(g).row(i); }

Vector scaled_unit(int l, std::size_t n, std::size_t i, const CycloNum& s) {
    Vector v = zero_vector(l, n);
    v[i] = s;
    return v;
}

// Deterministic parameter pairs mixing q-power shifts (often isomorphic) with
// plain rescalings (usually not).
struct PairGrid {
    std::vector<std::pair<std::vector<CycloNum>, std::vector<CycloNum>>> pairs;
};

PairGrid make_grid(int l, std::size_t arity, unsigned seed, std::size_t count) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> small(1, 3), power(0, l - 1), coin(0, 3);
    PairGrid g;
    while (g.pairs.size() < count) {
        std::vector<CycloNum> mu, gamma;
        for (std::size_t i = 0; i < arity; ++i) mu.push_back(c(l, small(rng)) * q(l, power(rng)));
        for (std::size_t i = 0; i < arity; ++i) {
            CycloNum x = mu[i] * q(l, power(rng));
            if (coin(rng) == 0) x *= c(l, 2);
            gamma.push_back(x);
        }
        g.pairs.emplace_back(mu, gamma);
    }
    return g;
}

MatrixModule build(int l, int type, const std::vector<CycloNum>& p) {
    return build_type(l, static_cast<SimpleType>(type), p);
}

std::optional<IsoWitness> decide(int l, int type, const std::vector<CycloNum>& a, const std::vector<CycloNum>& b) {
    switch (type) {
        case 0: return iso_m1(l, params_m1(a), params_m1(b));
        case 1: return iso_m2(l, params_m2(a), params_m2(b));
        default: return iso_m3(l, params_m3(a), params_m3(b));
    }
}

Matrix intertwiner(int l, int type, const std::vector<CycloNum>& a, const std::vector<CycloNum>& b, const IsoWitness& w) {
    switch (type) {
        case 0: return explicit_iso_m1(l, params_m1(a), params_m1(b), w);
        case 1: return explicit_iso_m2(l, params_m2(a), params_m2(b), w);
        default: return explicit_iso_m3(l, params_m3(a), params_m3(b), w);
    }
}

Matrix random_invertible(int l, std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-1, 1);
    while (true) {
        Matrix p = Matrix::identity(l, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && d(rng) != 0) p(i, j) = CycloNum(l, d(rng));
        if (p.try_inverse()) return p;
    }
}

}  // namespace

TEST_CASE("M1 action examples") {
    const int l = 3;
    MatrixModule m = build_m1(l, {c(l, 1), c(l, 2), c(l, 1), c(l, 1)});
    CHECK(m.dim() == 9);
    CHECK(verify_relations(m).empty());
    CycloNum coef = (q(l, 1) * c(l, 2) - q(l, 1)) / (c(l, 1) - q(l, 2));
    CHECK(row_of(m, Gen::Y, basis_index(l, 0, 0)) == scaled_unit(l, 9, basis_index(l, 2, 0), coef));
    CHECK(act(m, m.algebra().gen(Gen::E).pow(l)) == Matrix::identity(l, 9));

    MatrixModule even = build_m1(4, {c(4, 1), c(4, 1), c(4, 1), c(4, 1)});
    CHECK(even.dim() == 8);
    for (int a2 = 0; a2 < 4; ++a2) CHECK(is_zero(row_of(even, Gen::Y, basis_index(4, 0, a2))));
    CHECK_THROWS_AS(build_m1(3, {c(3, 0), c(3, 1), c(3, 1), c(3, 1)}), Error);
    CHECK_THROWS_AS(params_m1({c(3, 1)}), Error);
}

TEST_CASE("M2 and M3 annihilation patterns") {
    for (int l : {3, 4, 5, 6}) {
        const int l1 = ord_q2(l);
        MatrixModule m1 = build_m1(l, {c(l, 1), c(l, 2), c(l, 3), c(l, 1)});
        MatrixModule m2 = build_m2(l, {c(l, 1), c(l, 1), c(l, 1)});
        MatrixModule m3 = build_m3(l, {c(l, 1), c(l, 1)});
        CHECK(left_kernel(m1.action(Gen::E)).dim() == 0);
        for (int a2 = 0; a2 < l; ++a2) {
            CHECK(is_zero(row_of(m2, Gen::E, basis_index(l, 0, a2))));
            CHECK(is_zero(row_of(m3, Gen::E, basis_index(l, 0, a2))));
            CHECK(is_zero(row_of(m3, Gen::Y, basis_index(l, l1 - 1, a2))));
            CHECK_FALSE(is_zero(row_of(m2, Gen::Y, basis_index(l, l1 - 1, a2))));
        }
    }
}

TEST_CASE("dimension matches the PI degree") {
    for (int l : {3, 4, 5, 6, 7, 8}) {
        const auto d = static_cast<std::size_t>(pideg_qsaa(l));
        CHECK(build_m1(l, {c(l, 1), c(l, 2), c(l, 1), c(l, 1)}).dim() == d);
        CHECK(build_m2(l, {c(l, 1), c(l, 2), c(l, 1)}).dim() == d);
        CHECK(build_m3(l, {c(l, 1), c(l, 2)}).dim() == d);
    }
}

TEST_CASE("eigenvalue tables of X and phi") {
    for (int l : {3, 4, 5, 6}) {
        const int l1 = ord_q2(l);
        const CycloNum m1 = c(l, 2), m2 = c(l, 3);
        MatrixModule a = build_m1(l, {m1, m2, c(l, 5), c(l, 7)});
        MatrixModule b = build_m2(l, {m1, m2, c(l, 5)});
        MatrixModule d = build_m3(l, {m1, m2});
        const Presentation& p = a.algebra();
        Matrix pa = act(a, phi_element(p)), pb = act(b, phi_element(p)), pd = act(d, phi_element(p));
        CHECK(pa.is_diagonal());
        CHECK(pb.is_diagonal());
        CHECK(pd.is_diagonal());
        for (int a1 = 0; a1 < l1; ++a1)
            for (int a2 = 0; a2 < l; ++a2) {
                std::size_t i = basis_index(l, a1, a2);
                CHECK(a.action(Gen::X)(i, i) == m1 * q(l, a1 + a2));
                CHECK(pa(i, i) == m2 * q(l, -a1 + a2));
                CHECK(b.action(Gen::X)(i, i) == m1 * q(l, -a1 + a2));
                CHECK(pb(i, i) == m1 * q(l, a1 + a2 + 2));
                CHECK(d.action(Gen::X)(i, i) == m1 * q(l, -a1 + a2));
                CHECK(pd(i, i) == m1 * q(l, a1 + a2 + 2));
            }
    }
}

TEST_CASE("simplicity across a parameter grid with degenerate choices") {
    for (int l : {3, 4}) {
        std::vector<std::vector<CycloNum>> m1s = {{c(l, 1), c(l, 1), c(l, 1), c(l, 1)},
                                                  {c(l, 1), q(l, 2), c(l, 1), c(l, 1)},
                                                  {c(l, 2), c(l, 3), c(l, 5), c(l, 7)},
                                                  {q(l, 1), q(l, 1), c(l, 2), q(l, 2)}};
        for (const auto& mu : m1s) {
            MatrixModule m = build_type(l, SimpleType::M1, mu);
            auto r = is_simple(m, 100);
            CHECK(r.verdict == Simplicity::Simple);
            CHECK(hom_space(m, m).size() == 1);
        }
        for (const auto& mu : std::vector<std::vector<CycloNum>>{{c(l, 1), c(l, 1), c(l, 1)}, {c(l, 2), q(l, 1), c(l, 3)}})
            CHECK(is_simple(build_type(l, SimpleType::M2, mu), 100).verdict == Simplicity::Simple);
        for (const auto& mu : std::vector<std::vector<CycloNum>>{{c(l, 1), c(l, 1)}, {c(l, 3), q(l, 1)}})
            CHECK(is_simple(build_type(l, SimpleType::M3, mu), 100).verdict == Simplicity::Simple);
    }
}

TEST_CASE("isomorphism criterion examples") {
    const int l = 3;
    ParamsM1 mu{q(l, 2), c(l, 1), c(l, 1), c(l, 1)}, one{c(l, 1), c(l, 1), c(l, 1), c(l, 1)};
    auto w = iso_m1(l, mu, one);
    REQUIRE(w);
    CHECK(*w == IsoWitness{1, 1});
    Matrix p = explicit_iso_m1(l, mu, one, *w);
    CHECK(is_hom(build_m1(l, mu), build_m1(l, one), p));
    CHECK(p.try_inverse().has_value());
    CHECK_FALSE(iso_m1(l, one, ParamsM1{c(l, 1), c(l, 1), c(l, 2), c(l, 1)}));
    ParamsM3 m3{c(l, 2), c(l, 3)};
    CHECK(iso_m3(l, m3, m3) == IsoWitness{0, 0});
    CHECK(explicit_iso_m1(l, one, one, IsoWitness{0, 0}) == Matrix::identity(l, 9));
    CHECK_THROWS_AS(explicit_iso_m1(l, mu, one, IsoWitness{0, 0}), Error);
    CHECK_THROWS_AS(explicit_iso_m3(l, m3, m3, IsoWitness{0, 1}), Error);
}

TEST_CASE("even-l intertwiner through the wrapped branch") {
    const int l = 4;
    ParamsM1 gamma{c(l, 2), c(l, 3), c(l, 5), c(l, 7)};
    // r1 = 1, r2 = 0: mu1 = gamma1 q, mu2 = gamma2 q^-1.
    ParamsM1 mu{gamma.mu1 * q(l, 1), gamma.mu2 * q(l, -1), gamma.mu3, gamma.mu4};
    auto w = iso_m1(l, mu, gamma);
    REQUIRE(w);
    CHECK(w->r1 == 1);
    Matrix p = explicit_iso_m1(l, mu, gamma, *w);
    CHECK(is_hom(build_m1(l, mu), build_m1(l, gamma), p));
    CHECK(p.try_inverse().has_value());

    ParamsM2 g2{c(l, 2), c(l, 3), c(l, 5)};
    ParamsM2 m2{g2.mu1 * q(l, -1), g2.mu2 * q(l, 1), g2.mu3 * q(l, 2)};
    auto w2 = iso_m2(l, m2, g2);
    REQUIRE(w2);
    CHECK(is_hom(build_m2(l, m2), build_m2(l, g2), explicit_iso_m2(l, m2, g2, *w2)));
}

TEST_CASE("even l: matching l-th powers alone do not give an isomorphism") {
    const int l = 4;
    ParamsM1 a{c(l, 1), c(l, 1), c(l, 1), c(l, 1)}, b{c(l, 1), c(l, 1), q(l, 1), c(l, 1)};
    CHECK(a.mu3.pow(l) == b.mu3.pow(l));
    CHECK(hom_space(build_m1(l, a), build_m1(l, b)).empty());
    CHECK_FALSE(iso_m1(l, a, b));
    CHECK_THROWS_AS(explicit_iso_m1(l, a, b, IsoWitness{0, 0}), Error);

    ParamsM2 c2{c(l, 1), c(l, 1), c(l, 1)}, d2{c(l, 1), q(l, 1), c(l, 1)};
    CHECK(hom_space(build_m2(l, c2), build_m2(l, d2)).empty());
    CHECK_FALSE(iso_m2(l, c2, d2));
}

TEST_CASE("criteria agree with the Hom-space oracle") {
    for (int l : {3, 4}) {
        for (int type = 0; type < 3; ++type) {
            const std::size_t arity = 4 - static_cast<std::size_t>(type);
            PairGrid g = make_grid(l, arity, 100u * static_cast<unsigned>(l) + static_cast<unsigned>(type), 60);
            int isos = 0;
            for (const auto& [a, b] : g.pairs) {
                MatrixModule ma = build(l, type, a), mb = build(l, type, b);
                auto homs = hom_space(ma, mb);
                auto w = decide(l, type, a, b);
                CHECK(homs.size() <= 1);
                CHECK(w.has_value() == (homs.size() == 1));
                if (w) {
                    ++isos;
                    Matrix p = intertwiner(l, type, a, b, *w);
                    CHECK(is_hom(ma, mb, p));
                    CHECK(p.try_inverse().has_value());
                }
            }
            CHECK(isos > 0);
            CHECK(isos < 60);
        }
    }
}

TEST_CASE("no homomorphisms between different types") {
    for (int l : {3, 4}) {
        std::vector<MatrixModule> mods = {build_m1(l, {c(l, 1), c(l, 2), c(l, 1), c(l, 1)}),
                                          build_m1(l, {c(l, 2), c(l, 1), c(l, 3), c(l, 2)}),
                                          build_m2(l, {c(l, 1), c(l, 1), c(l, 1)}),
                                          build_m2(l, {c(l, 2), c(l, 3), c(l, 1)}),
                                          build_m3(l, {c(l, 1), c(l, 1)}),
                                          build_m3(l, {c(l, 3), c(l, 2)})};
        std::vector<int> type = {0, 0, 1, 1, 2, 2};
        for (std::size_t i = 0; i < mods.size(); ++i)
            for (std::size_t j = 0; j < mods.size(); ++j)
                if (type[i] != type[j]) CHECK(hom_space(mods[i], mods[j]).empty());
    }
}

TEST_CASE("classification examples") {
    const int l = 3;
    ParamsM1 mu{c(l, 1), c(l, 2), c(l, 1), c(l, 1)};
    auto r1 = classify(build_m1(l, mu));
    CHECK(r1.type == SimpleType::M1);
    CHECK(iso_m1(l, mu, params_m1(r1.params)).has_value());

    auto r2 = classify(build_m2(l, {c(l, 1), c(l, 1), c(l, 1)}));
    CHECK(r2.type == SimpleType::M2);
    CHECK(r2.eigen.alpha.is_zero());
    CHECK_FALSE(r2.eigen.beta.is_zero());

    auto r3 = classify(build_m3(l, {c(l, 1), c(l, 1)}));
    CHECK(r3.type == SimpleType::M3);
    CHECK(r3.eigen.alpha.is_zero());
    CHECK(r3.eigen.beta.is_zero());
}

TEST_CASE("classification round trip") {
    for (int l : {3, 4, 5, 6}) {
        std::vector<std::pair<SimpleType, std::vector<CycloNum>>> inputs = {
            {SimpleType::M1, {c(l, 2), c(l, 3), c(l, 5), c(l, 7)}},
            {SimpleType::M1, {c(l, 1), c(l, 1), q(l, 1), c(l, 1)}},
            {SimpleType::M2, {c(l, 2), c(l, 3), c(l, 5)}},
            {SimpleType::M2, {q(l, 1), c(l, 1), c(l, 2)}},
            {SimpleType::M3, {c(l, 2), c(l, 3)}},
            {SimpleType::M3, {q(l, 2), c(l, 1)}}};
        for (const auto& [t, mu] : inputs) {
            MatrixModule m = build_type(l, t, mu);
            Classification r = classify(m);
            CHECK(r.type == t);
            MatrixModule model = build_type(l, r.type, r.params);
            CHECK(is_hom(model, m, r.intertwiner));
            CHECK(r.intertwiner.try_inverse().has_value());
            std::optional<IsoWitness> w;
            if (t == SimpleType::M1) w = iso_m1(l, params_m1(r.params), params_m1(mu));
            if (t == SimpleType::M2) w = iso_m2(l, params_m2(r.params), params_m2(mu));
            if (t == SimpleType::M3) w = iso_m3(l, params_m3(r.params), params_m3(mu));
            CHECK(w.has_value());
            if (l % 2 == 0) {
                if (r.eigen.alpha_prime) CHECK(*r.eigen.alpha_prime * *r.eigen.alpha_prime == r.eigen.alpha * r.eigen.xi);
                if (r.eigen.beta_prime)
                    CHECK(*r.eigen.beta_prime * *r.eigen.beta_prime ==
                          q(l, -static_cast<long>(l) * l / 4) * r.eigen.beta * r.eigen.xi);
            }
        }
    }
}

TEST_CASE("classification of a module in a scrambled basis") {
    std::mt19937 rng(21);
    for (int l : {3, 4}) {
        ParamsM2 mu{c(l, 2), c(l, 3), c(l, 5)};
        MatrixModule m = conjugate(build_m2(l, mu), random_invertible(l, static_cast<std::size_t>(ord_q2(l) * l), rng));
        Classification r = classify(m, {mu.mu1, mu.mu1 * q(l, 2), mu.mu2, mu.mu3});
        CHECK(r.type == SimpleType::M2);
        CHECK(is_hom(build_type(l, r.type, r.params), m, r.intertwiner));
        CHECK(iso_m2(l, params_m2(r.params), mu).has_value());
    }
}

TEST_CASE("classification rejects torsion and non-simple input") {
    const int l = 3;
    MatrixModule m = build_m1(l, {c(l, 1), c(l, 2), c(l, 1), c(l, 1)});
    CHECK_THROWS_AS(classify(direct_sum(m, m)), Error);
    std::map<Gen, Matrix> acts;
    for (Gen g : {Gen::X, Gen::Y, Gen::E}) acts.emplace(g, Matrix(l, 1, 1));
    acts.emplace(Gen::K, Matrix::scalar(c(l, 2), 1));
    MatrixModule trivial(PresentationName::Qsaa, l, {"v"}, acts);
    CHECK_THROWS_AS(classify(trivial), Error);
}
