#include <cmath>
#include <random>

#include "doctest.h"
#include "qsaa/error.hpp"
#include "qsaa/pi_degree.hpp"

using namespace qsaa;

namespace {

SkewIntMatrix random_skew(int n, std::mt19937& rng, int bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMatrix h(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            h[i][j] = d(rng);
            h[j][i] = -h[i][j];
        }
    return SkewIntMatrix(h);
}

void check_congruence(const SkewIntMatrix& h) {
    SkewNormalForm f = skew_normal_form(h);
    IntMatrix uhu = multiply(multiply(f.transform, h.rows()), transpose(f.transform));
    CHECK(uhu == f.block_form());
    CHECK(std::labs(determinant(f.transform)) == 1);
    CHECK(2 * static_cast<int>(f.factors.size()) + f.kernel_dim == h.size());
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        CHECK(f.factors[i] > 0);
        if (i + 1 < f.factors.size()) CHECK(f.factors[i + 1] % f.factors[i] == 0);
    }
}

}  // namespace

TEST_CASE("skew normal form examples") {
    SkewNormalForm a = skew_normal_form(SkewIntMatrix({{0, 6}, {-6, 0}}));
    CHECK(a.factors == std::vector<long>{6});
    CHECK(a.kernel_dim == 0);
    SkewNormalForm b = skew_normal_form(qsaa_exponent_matrix());
    CHECK(b.factors == std::vector<long>{1, 2});
    CHECK(b.kernel_dim == 0);
    SkewNormalForm c = skew_normal_form(SkewIntMatrix::zero(3));
    CHECK(c.factors.empty());
    CHECK(c.kernel_dim == 3);
    SkewNormalForm d = skew_normal_form(qsaa_reduced_matrix());
    CHECK(d.factors == std::vector<long>{1, 2});
    SkewNormalForm e = skew_normal_form(smash_exponent_matrix());
    CHECK(e.factors == std::vector<long>{1, 2});
    CHECK(e.kernel_dim == 1);
    // Two coprime blocks merge into 1 and their product.
    SkewNormalForm g = skew_normal_form(SkewIntMatrix({{0, 2, 0, 0}, {-2, 0, 0, 0}, {0, 0, 0, 3}, {0, 0, -3, 0}}));
    CHECK(g.factors == std::vector<long>{1, 6});
    for (const auto& m : {qsaa_exponent_matrix(), qsaa_reduced_matrix(), smash_exponent_matrix()}) check_congruence(m);
}

TEST_CASE("non-skew input is rejected") {
    CHECK_THROWS_AS(SkewIntMatrix({{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(SkewIntMatrix({{1, 0}, {0, 0}}), Error);
    CHECK_THROWS_AS(SkewIntMatrix({{0, 1, 2}, {-1, 0}}), Error);
}

TEST_CASE("listed index additions turn the 4x4 exponent matrix into its block form") {
    SkewIntMatrix h = qsaa_exponent_matrix();
    h = add_index(h, 0, 1);
    h = add_index(h, 2, 0);
    h = add_index(h, 3, 0);
    CHECK(h == qsaa_reduced_matrix());
}

TEST_CASE("factor formula") {
    std::vector<long> f{1, 2};
    CHECK(pi_degree_from_factors(f, 3) == 9);
    CHECK(pi_degree_from_factors(f, 4) == 8);
    CHECK(pi_degree_from_factors({}, 7) == 1);
    CHECK_THROWS_AS(pi_degree_from_factors(f, 1), Error);
}

TEST_CASE("brute-force image cardinality") {
    CHECK(image_cardinality_bruteforce(qsaa_exponent_matrix(), 3) == 81);
    CHECK(image_cardinality_bruteforce(qsaa_exponent_matrix(), 4) == 64);
    CHECK(image_cardinality_bruteforce(SkewIntMatrix::zero(4), 5) == 1);
    CHECK_THROWS_AS(image_cardinality_bruteforce(SkewIntMatrix::zero(9), 7), Error);
}

TEST_CASE("PI degree table") {
    const long expect[] = {9, 8, 25, 18, 49, 32};
    for (int l = 3; l <= 8; ++l) {
        CHECK(pideg_qsaa(l) == expect[l - 3]);
        CHECK(pideg_smash(l) == expect[l - 3]);
    }
}

TEST_CASE("congruence soundness on random skew matrices") {
    std::mt19937 rng(4242);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + t % 6;
        check_congruence(random_skew(n, rng, 9));
    }
}

TEST_CASE("factor formula squared equals brute-force cardinality") {
    for (long m = 3; m <= 6; ++m)
        for (const auto& h : {qsaa_exponent_matrix(), qsaa_reduced_matrix(), smash_exponent_matrix()}) {
            long p = pi_degree_from_factors(skew_normal_form(h).factors, m);
            CHECK(p * p == image_cardinality_bruteforce(h, m));
        }
    std::mt19937 rng(99);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + t % 4;
        long m = 3 + t % 4;
        SkewIntMatrix h = random_skew(n, rng, 9);
        long p = pi_degree_from_factors(skew_normal_form(h).factors, m);
        CHECK(p * p == image_cardinality_bruteforce(h, m));
    }
}
