#pragma once

// Exact linear algebra over Q(z_l): dense matrices for module actions, sorted
// sparse vectors, and an incrementally maintained reduced echelon basis that
// doubles as the canonical Subspace type.
//
// Vectors are row vectors throughout. A matrix acts on the right: v -> v * M.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qsaa/cyclo.hpp"

namespace qsaa {

using Vector = std::vector<CycloNum>;

Vector zero_vector(int l, std::size_t n);
Vector unit_vector(int l, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

class Matrix {
public:
    Matrix(int l, std::size_t rows, std::size_t cols);
    static Matrix identity(int l, std::size_t n);
    static Matrix scalar(const CycloNum& c, std::size_t n);

    int order() const noexcept { return l_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    CycloNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const CycloNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<CycloNum>& data() const noexcept { return data_; }

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const CycloNum& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const CycloNum& c) { return a *= c; }
    friend Matrix operator*(const CycloNum& c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// v * this.
    Vector apply(const Vector& v) const;
    Vector row(std::size_t i) const;
    Matrix transpose() const;
    CycloNum trace() const;
    Matrix pow(long k) const;

    bool is_zero() const noexcept;
    bool is_diagonal() const noexcept;
    /// c when this == c * identity.
    std::optional<CycloNum> scalar_value() const;

    std::size_t rank() const;
    std::optional<Matrix> try_inverse() const;
    Matrix inverse() const;

private:
    int l_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<CycloNum> data_;
};

struct SparseEntry {
    std::size_t index;
    CycloNum value;
};

/// Sorted, zero-free sparse vector.
class SparseVec {
public:
    SparseVec() = default;
    static SparseVec from_dense(std::span<const CycloNum> v);
    static SparseVec from_matrix(const Matrix& m);

    bool empty() const noexcept { return e_.empty(); }
    std::size_t size() const noexcept { return e_.size(); }
    const std::vector<SparseEntry>& entries() const noexcept { return e_; }
    const SparseEntry& leading() const { return e_.front(); }
    const CycloNum* find(std::size_t index) const;

    /// Appends an entry; indices must be pushed in increasing order.
    void push(std::size_t index, CycloNum value);
    /// this += c * other.
    void axpy(const CycloNum& c, const SparseVec& other);
    void scale(const CycloNum& c);

    Vector to_dense(int l, std::size_t n) const;
    Matrix to_matrix(int l, std::size_t rows, std::size_t cols) const;

    friend bool operator==(const SparseVec& a, const SparseVec& b);

private:
    std::vector<SparseEntry> e_;
};

/// A subspace of the row space of dimension `ambient`, kept as a reduced
/// row-echelon basis with unit pivots: two Subspaces are equal iff their
/// bases are identical.
class Subspace {
public:
    Subspace(int l, std::size_t ambient) : l_(l), n_(ambient) {}
    static Subspace span(int l, std::size_t ambient, std::span<const Vector> vectors);
    static Subspace full(int l, std::size_t ambient);

    int order() const noexcept { return l_; }
    std::size_t ambient() const noexcept { return n_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<SparseVec>& basis() const noexcept { return rows_; }
    std::vector<Vector> dense_basis() const;
    std::vector<std::size_t> pivots() const;

    /// Residue of v after elimination against the basis; empty iff v lies in the span.
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    bool contains(const Vector& v) const { return contains(SparseVec::from_dense(v)); }
    bool contains(const Subspace& other) const;

    /// Adds v to the span; returns false when v was already contained.
    bool insert(const SparseVec& v);
    bool insert(const Vector& v) { return insert(SparseVec::from_dense(v)); }

    /// Coordinates of v (assumed in the span) with respect to basis(): the
    /// pivot entries of v, since the basis is reduced.
    std::vector<CycloNum> coordinates(const SparseVec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    int l_;
    std::size_t n_;
    std::vector<SparseVec> rows_;  // sorted by pivot column
};

/// Basis of {x : <row, x> = 0 for every row}, x of length ncols.
std::vector<SparseVec> nullspace(std::vector<SparseVec> rows, std::size_t ncols, int l);

/// Row vectors v with v * m = 0.
Subspace left_kernel(const Matrix& m);

/// Smallest subspace containing `seed` and stable under right multiplication by every matrix.
Subspace invariant_closure(const Subspace& seed, std::span<const Matrix> actions);

}  // namespace qsaa
