#pragma once

// PBW rewriting for the quantum spatial ageing algebra and its relatives.
//
// Three presentations share one engine:
//   Qsaa   generators X, Y, E, K^{+-1}; basis X^a Y^b E^c K^d
//   Smash  adds F;                      basis X^a Y^b E^c K^d F^e
//   B      generators X, Y, K^{+-1}, phi, psi (phi, psi atomic);
//          basis X^a Y^b K^d phi^c psi^e
//
// Rewriting pushes letters into slot order with oriented swap rules; the K
// slot carries a signed exponent.

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsaa/cyclo.hpp"

namespace qsaa {

enum class Gen { X, Y, E, K, Kinv, F, Phi, Psi };
enum class PresentationName { Qsaa, Smash, B };

std::string_view gen_name(Gen g) noexcept;
/// Accepts X Y E K Kinv K^-1 F phi psi.
Gen parse_gen(std::string_view name);
std::string_view presentation_name(PresentationName p) noexcept;
PresentationName parse_presentation(std::string_view name);

using Word = std::vector<Gen>;

/// Exponents per slot of the presentation's canonical order; only the K slot may be negative.
struct Monomial {
    std::array<int, 5> exps{};
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class Presentation;

class AlgebraElement {
public:
    explicit AlgebraElement(const Presentation& p) : p_(&p) {}

    const Presentation& presentation() const noexcept { return *p_; }
    int order() const noexcept;
    const std::map<Monomial, CycloNum>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Coefficient of the monomial, zero when absent.
    CycloNum coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const CycloNum& c);

    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    AlgebraElement& operator*=(const CycloNum& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const CycloNum& c) { return a *= c; }
    friend AlgebraElement operator*(const CycloNum& c, AlgebraElement a) { return a *= c; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement operator-() const;
    AlgebraElement pow(long k) const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    std::string str() const;

private:
    void check_same(const AlgebraElement& other) const;

    const Presentation* p_;
    std::map<Monomial, CycloNum> terms_;
};

/// A linear combination of raw (unnormalized) words; relation sides and rule outputs.
using WordSum = std::vector<std::pair<CycloNum, Word>>;

struct Relation {
    std::string name;
    WordSum lhs;
    WordSum rhs;
};

class Presentation {
public:
    /// Shared, thread-safe instance per (name, l).
    static const Presentation& get(PresentationName name, int l);

    PresentationName name() const noexcept { return name_; }
    int order() const noexcept { return l_; }
    const CycloField& field() const noexcept { return *field_; }
    CycloNum q(long k = 1) const { return field_->power(k); }

    /// Generators in canonical slot order, K^{-1} listed after K.
    const std::vector<Gen>& generators() const noexcept { return gens_; }
    bool has(Gen g) const noexcept;
    /// Slot index and signed unit exponent of a letter.
    std::pair<int, int> slot(Gen g) const;
    Gen slot_gen(int slot) const { return slot_gens_.at(static_cast<std::size_t>(slot)); }
    int num_slots() const noexcept { return static_cast<int>(slot_gens_.size()); }
    int k_slot() const noexcept { return k_slot_; }

    /// Defining relations as raw word identities.
    const std::vector<Relation>& relations() const noexcept { return relations_; }

    AlgebraElement zero() const { return AlgebraElement(*this); }
    AlgebraElement one() const;
    AlgebraElement scalar(const CycloNum& c) const;
    AlgebraElement gen(Gen g) const;
    AlgebraElement monomial(const Monomial& m, const CycloNum& c) const;
    /// The monomial written as a generator word in slot order.
    Word word_of(const Monomial& m) const;

    /// Canonical PBW form of a word (memoized right-to-left insertion).
    AlgebraElement normal_form(const Word& w) const;
    /// Same result by unmemoized leftmost-inversion word rewriting; an
    /// independent route used to cross-check confluence.
    AlgebraElement normal_form_by_rewriting(const Word& w) const;
    AlgebraElement evaluate(const WordSum& s) const;

    AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) const;

    /// True iff x commutes with every generator.
    bool is_central(const AlgebraElement& x) const;

    /// Output of the oriented rule h * g for letters with slot(h) > slot(g).
    WordSum swap_rule(Gen h, Gen g) const;

    std::string monomial_str(const Monomial& m) const;

private:
    Presentation(PresentationName name, int l);

    AlgebraElement mul_letter(const Monomial& m, Gen g) const;
    AlgebraElement mul_word(const AlgebraElement& x, const Word& w) const;
    void build_relations();

    PresentationName name_;
    int l_;
    const CycloField* field_;
    std::vector<Gen> gens_;
    std::vector<Gen> slot_gens_;
    int k_slot_ = -1;
    std::vector<Relation> relations_;

    mutable std::mutex memo_mu_;
    mutable std::map<std::pair<Monomial, int>, AlgebraElement> memo_;
};

/// phi = EY - qYE in Qsaa or Smash; the atomic generator in B.
AlgebraElement phi_element(const Presentation& p);
/// psi = XF - q^2 FX in Smash; the atomic generator in B.
AlgebraElement psi_element(const Presentation& p);

/// Images of B's generators in the Smash algebra, extended multiplicatively.
AlgebraElement embed_b_in_smash(const AlgebraElement& x);

bool verify_identity(const AlgebraElement& lhs, const AlgebraElement& rhs);

/// Parses the element syntax: generators X Y E K K^-1 F phi psi, cyclotomic
/// scalars, + - *, integer powers and parentheses.
AlgebraElement parse_element(const Presentation& p, const std::string& text);

}  // namespace qsaa
