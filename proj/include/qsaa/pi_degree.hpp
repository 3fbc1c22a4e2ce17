#pragma once

// PI degrees of quantum affine spaces from skew-symmetric integer exponent
// matrices: congruence reduction to 2x2 block form, the factor formula, and a
// brute-force subgroup-cardinality oracle.

#include <cstdint>
#include <span>
#include <vector>

namespace qsaa {

using IntMatrix = std::vector<std::vector<long>>;

class SkewIntMatrix {
public:
    /// Throws InvariantViolation unless the rows form a skew-symmetric square matrix.
    explicit SkewIntMatrix(IntMatrix rows);
    static SkewIntMatrix zero(int n);

    int size() const noexcept { return static_cast<int>(h_.size()); }
    long at(int i, int j) const { return h_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const IntMatrix& rows() const noexcept { return h_; }

    friend bool operator==(const SkewIntMatrix&, const SkewIntMatrix&) = default;

private:
    IntMatrix h_;
};

struct SkewNormalForm {
    std::vector<long> factors;  // h_1 | h_2 | ... | h_s, one per block
    int kernel_dim = 0;
    IntMatrix transform;        // U with U H U^T == block_form()

    /// diag([[0,h1],[-h1,0]], ..., 0).
    IntMatrix block_form() const;
};

SkewNormalForm skew_normal_form(const SkewIntMatrix& h);

/// Product over the block factors of m / gcd(h_i, m).
long pi_degree_from_factors(std::span<const long> factors, long m);

/// Size of the subgroup of (Z/m)^n generated by the rows of h. Throws
/// ErrorKind::Resource when m^n exceeds the guard.
long image_cardinality_bruteforce(const SkewIntMatrix& h, long m, long guard = 10'000'000);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
/// Determinant by fraction-free elimination.
long determinant(const IntMatrix& a);

/// Adds index `src` to index `dst` in both rows and columns.
SkewIntMatrix add_index(const SkewIntMatrix& h, int dst, int src);

/// Exponents of the 4x4 commutation matrix of the Qsaa presentation in the
/// variable order X, Y, E, K.
SkewIntMatrix qsaa_exponent_matrix();
/// Its block form after the three index additions 1+=2, 3+=1, 4+=1 (1-based).
SkewIntMatrix qsaa_reduced_matrix();
/// Exponents of the 5x5 commutation matrix for B (order X, Y, K, phi, psi).
SkewIntMatrix smash_exponent_matrix();

long pideg_qsaa(int l);
long pideg_smash(int l);

}  // namespace qsaa
