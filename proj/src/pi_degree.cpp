#include "qsaa/pi_degree.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "qsaa/error.hpp"

namespace qsaa {

namespace {

long checked_add(long a, long b) {
    long r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Resource, "integer overflow in skew reduction");
    return r;
}

long checked_mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Resource, "integer overflow in skew reduction");
    return r;
}

// Congruence state: H and the accumulated transform U.
struct Reducer {
    IntMatrix h;
    IntMatrix u;
    std::size_t n;

    explicit Reducer(const IntMatrix& rows) : h(rows), n(rows.size()) {
        u.assign(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    }

    // index dst += c * index src
    void add(std::size_t dst, std::size_t src, long c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < n; ++j) h[dst][j] = checked_add(h[dst][j], checked_mul(c, h[src][j]));
        for (std::size_t i = 0; i < n; ++i) h[i][dst] = checked_add(h[i][dst], checked_mul(c, h[i][src]));
        for (std::size_t j = 0; j < n; ++j) u[dst][j] = checked_add(u[dst][j], checked_mul(c, u[src][j]));
    }

    void swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap(h[a], h[b]);
        for (auto& row : h) std::swap(row[a], row[b]);
        std::swap(u[a], u[b]);
    }

    void negate(std::size_t a) {
        for (auto& x : h[a]) x = -x;
        for (auto& row : h) row[a] = -row[a];
        for (auto& x : u[a]) x = -x;
    }

    // Reduces indices >= k into blocks; returns the start of the zero tail.
    std::size_t reduce_from(std::size_t k) {
        while (k + 1 < n) {
            // Pivot: smallest nonzero |entry| in the trailing submatrix.
            long best = 0;
            std::size_t bi = 0, bj = 0;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (h[i][j] != 0 && (best == 0 || std::labs(h[i][j]) < best)) {
                        best = std::labs(h[i][j]);
                        bi = i;
                        bj = j;
                    }
            if (best == 0) return k;
            swap(k, bi);
            std::size_t j = (bj == k) ? bi : bj;
            swap(k + 1, j);
            if (h[k][k + 1] < 0) negate(k + 1);
            const long d = h[k][k + 1];
            bool clean = true;
            for (std::size_t r = k + 2; r < n; ++r) {
                // h[k][r] += c * d via index r += c * (k+1)
                add(r, k + 1, -(h[k][r] / d));
                // h[k+1][r] -= c * d via index r += c * k
                add(r, k, h[k + 1][r] / d);
                if (h[k][r] != 0 || h[k + 1][r] != 0) clean = false;
            }
            if (clean) k += 2;
        }
        return k;
    }
};

long gcd_abs(long a, long b) { return std::gcd(std::labs(a), std::labs(b)); }

}  // namespace

SkewIntMatrix::SkewIntMatrix(IntMatrix rows) : h_(std::move(rows)) {
    const std::size_t n = h_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (h_[i].size() != n) fail(ErrorKind::InvariantViolation, "matrix is not square");
        if (h_[i][i] != 0) fail(ErrorKind::InvariantViolation, "nonzero diagonal entry at " + std::to_string(i));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (h_[i][j] != -h_[j][i])
                fail(ErrorKind::InvariantViolation,
                     "entries (" + std::to_string(i) + "," + std::to_string(j) + ") not skew-symmetric");
}

SkewIntMatrix SkewIntMatrix::zero(int n) {
    return SkewIntMatrix(IntMatrix(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0)));
}

IntMatrix SkewNormalForm::block_form() const {
    const std::size_t n = transform.size();
    IntMatrix b(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < factors.size(); ++i) {
        b[2 * i][2 * i + 1] = factors[i];
        b[2 * i + 1][2 * i] = -factors[i];
    }
    return b;
}

SkewNormalForm skew_normal_form(const SkewIntMatrix& h) {
    Reducer red(h.rows());
    const std::size_t n = red.n;
    std::size_t tail = red.reduce_from(0);
    for (;;) {
        // Divisibility repair: fold block j into block i when h_i does not divide h_j.
        bool fixed = true;
        for (std::size_t i = 0; i + 2 <= tail && fixed; i += 2)
            for (std::size_t j = i + 2; j + 2 <= tail; j += 2)
                if (red.h[j][j + 1] % red.h[i][i + 1] != 0) {
                    red.add(i, j, 1);
                    tail = red.reduce_from(i);
                    fixed = false;
                    break;
                }
        if (fixed) break;
    }
    SkewNormalForm out;
    for (std::size_t i = 0; i + 2 <= tail; i += 2) out.factors.push_back(red.h[i][i + 1]);
    out.kernel_dim = static_cast<int>(n - tail);
    out.transform = std::move(red.u);
    return out;
}

long pi_degree_from_factors(std::span<const long> factors, long m) {
    if (m < 2) fail(ErrorKind::InvalidParameter, "root order m must be at least 2");
    long result = 1;
    for (long f : factors) result = checked_mul(result, m / gcd_abs(f, m));
    return result;
}

long image_cardinality_bruteforce(const SkewIntMatrix& h, long m, long guard) {
    if (m < 1) fail(ErrorKind::InvalidParameter, "modulus must be positive");
    const int n = h.size();
    long total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > guard / m) fail(ErrorKind::Resource, "m^n exceeds the enumeration guard " + std::to_string(guard));
        total *= m;
    }
    std::vector<long> gens;
    for (int i = 0; i < n; ++i) {
        long code = 0;
        for (int j = 0; j < n; ++j) code = code * m + (((h.at(i, j) % m) + m) % m);
        gens.push_back(code);
    }
    auto add_codes = [&](long a, long b) {
        long r = 0, place = 1;
        for (int j = 0; j < n; ++j) {
            long d = (a % m + b % m) % m;
            r += d * place;
            place *= m;
            a /= m;
            b /= m;
        }
        return r;
    };
    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    std::vector<long> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (long g : gens) {
            long next = add_codes(queue[head], g);
            if (!seen[static_cast<std::size_t>(next)]) {
                seen[static_cast<std::size_t>(next)] = 1;
                queue.push_back(next);
            }
        }
    return static_cast<long>(queue.size());
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    IntMatrix c(n, std::vector<long>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (std::size_t j = 0; j < m; ++j) c[i][j] = checked_add(c[i][j], checked_mul(a[i][t], b[t][j]));
    return c;
}

IntMatrix transpose(const IntMatrix& a) {
    if (a.empty()) return {};
    IntMatrix t(a[0].size(), std::vector<long>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

long determinant(const IntMatrix& a) {
    // Bareiss elimination.
    const std::size_t n = a.size();
    if (n == 0) return 1;
    IntMatrix m = a;
    long sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (checked_mul(m[i][j], m[k][k]) - checked_mul(m[i][k], m[k][j])) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

SkewIntMatrix add_index(const SkewIntMatrix& h, int dst, int src) {
    Reducer r(h.rows());
    r.add(static_cast<std::size_t>(dst), static_cast<std::size_t>(src), 1);
    return SkewIntMatrix(r.h);
}

SkewIntMatrix qsaa_exponent_matrix() {
    return SkewIntMatrix({{0, 1, -1, -1}, {-1, 0, 1, 1}, {1, -1, 0, -2}, {1, -1, 2, 0}});
}

SkewIntMatrix qsaa_reduced_matrix() {
    return SkewIntMatrix({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -2}, {0, 0, 2, 0}});
}

SkewIntMatrix smash_exponent_matrix() {
    return SkewIntMatrix({{0, 1, -1, 0, 0},
                          {-1, 0, 1, 1, -1},
                          {1, -1, 0, 1, -1},
                          {0, -1, -1, 0, 0},
                          {0, 1, 1, 0, 0}});
}

long pideg_qsaa(int l) {
    if (l < 3) fail(ErrorKind::InvalidOrder, "root order must be at least 3");
    return pi_degree_from_factors(skew_normal_form(qsaa_exponent_matrix()).factors, l);
}

long pideg_smash(int l) {
    if (l < 3) fail(ErrorKind::InvalidOrder, "root order must be at least 3");
    return pi_degree_from_factors(skew_normal_form(smash_exponent_matrix()).factors, l);
}

}  // namespace qsaa
