#include "qsaa/linalg.hpp"

#include <algorithm>
#include <deque>

namespace qsaa {

Vector zero_vector(int l, std::size_t n) { return Vector(n, CycloField::get(l).zero()); }

Vector unit_vector(int l, std::size_t n, std::size_t i) {
    Vector v = zero_vector(l, n);
    v.at(i) = CycloField::get(l).one();
    return v;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const CycloNum& x) { return x.is_zero(); });
}

// -------------------------------------------------------------------- Matrix

Matrix::Matrix(int l, std::size_t rows, std::size_t cols)
    : l_(l), rows_(rows), cols_(cols), data_(rows * cols, CycloField::get(l).zero()) {}

Matrix Matrix::identity(int l, std::size_t n) {
    Matrix m(l, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloField::get(l).one();
    return m;
}

Matrix Matrix::scalar(const CycloNum& c, std::size_t n) {
    Matrix m(c.order(), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorKind::InvalidInput, "matrix shape mismatch in +");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!rhs.data_[i].is_zero()) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorKind::InvalidInput, "matrix shape mismatch in -");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!rhs.data_[i].is_zero()) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const CycloNum& c) {
    for (auto& x : data_)
        if (!x.is_zero()) x *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::InvalidInput, "matrix shape mismatch in *");
    Matrix c(a.l_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const CycloNum& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const CycloNum& bkj = b(k, j);
                if (bkj.is_zero()) continue;
                c(i, j).add_product(aik, bkj);
            }
        }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != rows_) fail(ErrorKind::InvalidInput, "vector length mismatch");
    Vector out = zero_vector(l_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) out[j].add_product(v[i], (*this)(i, j));
    }
    return out;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

Matrix Matrix::transpose() const {
    Matrix t(l_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

CycloNum Matrix::trace() const {
    CycloNum t = CycloField::get(l_).zero();
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::pow(long k) const {
    if (!is_square()) fail(ErrorKind::InvalidInput, "power of non-square matrix");
    if (k < 0) return inverse().pow(-k);
    Matrix result = identity(l_, rows_);
    Matrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const CycloNum& x) { return x.is_zero(); });
}

bool Matrix::is_diagonal() const noexcept {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

std::optional<CycloNum> Matrix::scalar_value() const {
    if (!is_square() || rows_ == 0 || !is_diagonal()) return std::nullopt;
    for (std::size_t i = 1; i < rows_; ++i)
        if ((*this)(i, i) != (*this)(0, 0)) return std::nullopt;
    return (*this)(0, 0);
}

std::size_t Matrix::rank() const {
    Subspace s(l_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) s.insert(row(i));
    return s.dim();
}

std::optional<Matrix> Matrix::try_inverse() const {
    if (!is_square()) return std::nullopt;
    const std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(l_, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        CycloNum s = a(col, col).inv();
        for (std::size_t j = 0; j < n; ++j) {
            if (!a(col, j).is_zero()) a(col, j) *= s;
            if (!inv(col, j).is_zero()) inv(col, j) *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            CycloNum f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(col, j).is_zero()) a(r, j).sub_product(f, a(col, j));
                if (!inv(col, j).is_zero()) inv(r, j).sub_product(f, inv(col, j));
            }
        }
    }
    return inv;
}

Matrix Matrix::inverse() const {
    auto inv = try_inverse();
    if (!inv) fail(ErrorKind::DivisionByZero, "matrix is singular");
    return *std::move(inv);
}

// ----------------------------------------------------------------- SparseVec

SparseVec SparseVec::from_dense(std::span<const CycloNum> v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.e_.push_back({i, v[i]});
    return s;
}

SparseVec SparseVec::from_matrix(const Matrix& m) { return from_dense(m.data()); }

const CycloNum* SparseVec::find(std::size_t index) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), index,
                               [](const SparseEntry& e, std::size_t i) { return e.index < i; });
    if (it == e_.end() || it->index != index) return nullptr;
    return &it->value;
}

void SparseVec::push(std::size_t index, CycloNum value) {
    if (!e_.empty() && e_.back().index >= index) fail(ErrorKind::InvalidInput, "sparse push out of order");
    if (!value.is_zero()) e_.push_back({index, std::move(value)});
}

void SparseVec::axpy(const CycloNum& c, const SparseVec& other) {
    if (c.is_zero() || other.e_.empty()) return;
    std::vector<SparseEntry> out;
    out.reserve(e_.size() + other.e_.size());
    auto a = e_.begin();
    auto b = other.e_.begin();
    while (a != e_.end() || b != other.e_.end()) {
        if (b == other.e_.end() || (a != e_.end() && a->index < b->index)) {
            out.push_back(std::move(*a++));
        } else if (a == e_.end() || b->index < a->index) {
            out.push_back({b->index, c * b->value});
            ++b;
        } else {
            a->value.add_product(c, b->value);
            if (!a->value.is_zero()) out.push_back(std::move(*a));
            ++a;
            ++b;
        }
    }
    e_ = std::move(out);
}

void SparseVec::scale(const CycloNum& c) {
    if (c.is_zero()) {
        e_.clear();
        return;
    }
    for (auto& e : e_) e.value *= c;
}

Vector SparseVec::to_dense(int l, std::size_t n) const {
    Vector v = zero_vector(l, n);
    for (const auto& e : e_) v.at(e.index) = e.value;
    return v;
}

Matrix SparseVec::to_matrix(int l, std::size_t rows, std::size_t cols) const {
    Matrix m(l, rows, cols);
    for (const auto& e : e_) {
        if (e.index >= rows * cols) fail(ErrorKind::InvalidInput, "sparse index out of range");
        m(e.index / cols, e.index % cols) = e.value;
    }
    return m;
}

bool operator==(const SparseVec& a, const SparseVec& b) {
    if (a.e_.size() != b.e_.size()) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i].index != b.e_[i].index || a.e_[i].value != b.e_[i].value) return false;
    return true;
}

// ------------------------------------------------------------------ Subspace

Subspace Subspace::span(int l, std::size_t ambient, std::span<const Vector> vectors) {
    Subspace s(l, ambient);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

Subspace Subspace::full(int l, std::size_t ambient) {
    Subspace s(l, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        SparseVec v;
        v.push(i, CycloField::get(l).one());
        s.rows_.push_back(std::move(v));
    }
    return s;
}

std::vector<Vector> Subspace::dense_basis() const {
    std::vector<Vector> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.to_dense(l_, n_));
    return out;
}

std::vector<std::size_t> Subspace::pivots() const {
    std::vector<std::size_t> p;
    p.reserve(rows_.size());
    for (const auto& r : rows_) p.push_back(r.leading().index);
    return p;
}

namespace {

const SparseVec* row_with_pivot(const std::vector<SparseVec>& rows, std::size_t col) {
    auto it = std::lower_bound(rows.begin(), rows.end(), col,
                               [](const SparseVec& r, std::size_t c) { return r.leading().index < c; });
    if (it == rows.end() || it->leading().index != col) return nullptr;
    return &*it;
}

}  // namespace

SparseVec Subspace::reduce(const SparseVec& v) const {
    // Reduced rows vanish on every other pivot column, so each pivot entry of
    // v is eliminated by exactly one row and the others stay untouched.
    SparseVec r = v;
    for (const auto& e : v.entries()) {
        if (const SparseVec* row = row_with_pivot(rows_, e.index)) r.axpy(-e.value, *row);
    }
    return r;
}

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const SparseVec& r) { return contains(r); });
}

bool Subspace::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    r.scale(r.leading().value.inv());
    const std::size_t col = r.leading().index;
    for (auto& row : rows_) {
        if (const CycloNum* c = row.find(col)) {
            CycloNum f = -*c;
            row.axpy(f, r);
        }
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), col,
                                [](const SparseVec& x, std::size_t c) { return x.leading().index < c; });
    rows_.insert(pos, std::move(r));
    return true;
}

std::vector<CycloNum> Subspace::coordinates(const SparseVec& v) const {
    std::vector<CycloNum> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
        const CycloNum* c = v.find(row.leading().index);
        out.push_back(c ? *c : CycloField::get(l_).zero());
    }
    return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
    if (a.n_ != b.n_ || a.rows_.size() != b.rows_.size()) return false;
    for (std::size_t i = 0; i < a.rows_.size(); ++i)
        if (!(a.rows_[i] == b.rows_[i])) return false;
    return true;
}

// ----------------------------------------------------------------- solvers

std::vector<SparseVec> nullspace(std::vector<SparseVec> rows, std::size_t ncols, int l) {
    // Short equations first: single-term rows pin variables to zero before
    // longer rows can spread fill-in.
    std::stable_sort(rows.begin(), rows.end(), [](const SparseVec& a, const SparseVec& b) { return a.size() < b.size(); });
    Subspace s(l, ncols);
    for (const auto& r : rows) {
        if (r.empty()) continue;
        s.insert(r);
        if (s.dim() == ncols) break;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : s.pivots()) is_pivot[p] = true;
    std::vector<SparseVec> basis;
    const auto& one = CycloField::get(l).one();
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<SparseEntry> entries;
        entries.push_back({f, one});
        for (const auto& row : s.basis())
            if (const CycloNum* c = row.find(f)) entries.push_back({row.leading().index, -*c});
        std::sort(entries.begin(), entries.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
        SparseVec v;
        for (auto& e : entries) v.push(e.index, std::move(e.value));
        basis.push_back(std::move(v));
    }
    return basis;
}

Subspace left_kernel(const Matrix& m) {
    std::vector<SparseVec> eqs(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) eqs[j].push(i, m(i, j));
    auto basis = nullspace(std::move(eqs), m.rows(), m.order());
    Subspace s(m.order(), m.rows());
    for (const auto& v : basis) s.insert(v);
    return s;
}

namespace {

SparseVec times(const SparseVec& v, const Matrix& a) {
    Vector acc = zero_vector(a.order(), a.cols());
    std::vector<bool> touched(a.cols(), false);
    for (const auto& e : v.entries())
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const CycloNum& x = a(e.index, j);
            if (x.is_zero()) continue;
            acc[j].add_product(e.value, x);
            touched[j] = true;
        }
    SparseVec out;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (touched[j] && !acc[j].is_zero()) out.push(j, std::move(acc[j]));
    return out;
}

}  // namespace

Subspace invariant_closure(const Subspace& seed, std::span<const Matrix> actions) {
    Subspace s = seed;
    std::deque<SparseVec> queue(seed.basis().begin(), seed.basis().end());
    while (!queue.empty() && s.dim() < s.ambient()) {
        SparseVec v = std::move(queue.front());
        queue.pop_front();
        for (const auto& a : actions) {
            SparseVec w = times(v, a);
            if (w.empty()) continue;
            if (s.insert(w)) queue.push_back(std::move(w));
        }
    }
    return s;
}

}  // namespace qsaa
