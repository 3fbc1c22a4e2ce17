#pragma once

// Finite-dimensional right modules given by generator matrices.
//
// Convention: a basis vector is a row; generator g acts as v -> v * G_g, so a
// word g1 g2 ... acts by the product G_g1 G_g2 ... in that order. A module
// map P : M -> N satisfies G^M_g * P = P * G^N_g.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsaa/linalg.hpp"
#include "qsaa/pbw.hpp"

namespace qsaa {

class MatrixModule {
public:
    /// Missing K^-1 is filled in as the inverse of K. With verify set, the
    /// constructor throws InvariantViolation on the first failing relation.
    MatrixModule(PresentationName presentation, int l, std::vector<std::string> labels,
                 std::map<Gen, Matrix> action, bool verify = true);

    const Presentation& algebra() const { return Presentation::get(presentation_, l_); }
    PresentationName presentation() const noexcept { return presentation_; }
    int order() const noexcept { return l_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const Matrix& action(Gen g) const;
    const std::map<Gen, Matrix>& actions() const noexcept { return action_; }
    /// Generator matrices excluding K^-1 (enough to generate the action).
    std::vector<Matrix> generating_matrices() const;

private:
    PresentationName presentation_;
    int l_;
    std::vector<std::string> labels_;
    std::map<Gen, Matrix> action_;
};

struct RelationViolation {
    std::string relation;
    std::size_t row = 0;
    std::size_t col = 0;
    CycloNum residual;
};

/// Every defining relation evaluated on the generator matrices; empty means all hold.
std::vector<RelationViolation> verify_relations(const MatrixModule& m);

/// Matrix of a word (product of generator matrices in word order).
Matrix act_word(const MatrixModule& m, const Word& w);
/// Matrix of an algebra element: PBW-expand, then multiply generator matrices.
Matrix act(const MatrixModule& m, const AlgebraElement& x);

/// Dimension of the unital algebra generated by the action matrices.
/// Throws Resource when the module dimension exceeds `max_dim`.
std::size_t algebra_closure_dim(const MatrixModule& m, std::size_t max_dim = 64);

/// Smallest invariant subspace containing v.
Subspace spin_up(const MatrixModule& m, const Vector& v);
/// Smallest invariant subspace containing a subspace.
Subspace spin_up(const MatrixModule& m, const Subspace& s);
bool is_invariant(const MatrixModule& m, const Subspace& w);

enum class Simplicity { Simple, NotSimple, Undetermined };
const char* to_string(Simplicity s) noexcept;

struct SimplicityReport {
    Simplicity verdict = Simplicity::Undetermined;
    std::optional<Subspace> witness;         // proper nonzero invariant subspace
    std::optional<std::size_t> closure_dim;  // when the closure was computed
};

/// Spin-up from basis vectors, then the closure (dimension <= max_dim), then
/// kernels of a fixed panel of algebra elements.
SimplicityReport is_simple(const MatrixModule& m, std::size_t max_dim = 64);

/// Basis of {P : G^M_g P = P G^N_g for every generator g}, P of shape dim M x dim N.
std::vector<Matrix> hom_space(const MatrixModule& m, const MatrixModule& n);
bool is_hom(const MatrixModule& m, const MatrixModule& n, const Matrix& p);

struct EndoAlgebra {
    std::vector<Matrix> basis;
    std::vector<Matrix> radical;  // basis of the trace-form kernel

    std::size_t dim() const noexcept { return basis.size(); }
    std::size_t radical_dim() const noexcept { return radical.size(); }
    /// True when every product of basis elements lies in the span.
    bool is_closed() const;
};

EndoAlgebra endo_algebra(const MatrixModule& m);
bool is_indecomposable(const MatrixModule& m);

/// Whether an endomorphism projects onto W (image in W, identity on W).
/// Throws InvalidInput when W is not invariant.
bool has_invariant_complement(const MatrixModule& m, const Subspace& w);

MatrixModule direct_sum(const MatrixModule& a, const MatrixModule& b);
/// The module with matrices P G P^-1; P itself is a module map from it to m.
MatrixModule conjugate(const MatrixModule& m, const Matrix& p);

}  // namespace qsaa
