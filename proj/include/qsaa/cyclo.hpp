#pragma once

// Exact arithmetic in the cyclotomic field Q(z), z a primitive l-th root of
// unity. Every value is kept in canonical form: a coefficient vector of
// length phi(l) over the rationals, reduced modulo the l-th cyclotomic
// polynomial, so equality is plain coefficient comparison.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qsaa/error.hpp"

namespace qsaa {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<BigInt> cyclotomic_polynomial(int n);

int euler_phi(int n);

/// Smallest k >= 1 with q^{2k} = 1, i.e. l for odd l and l/2 for even l.
int ord_q2(int l);

class CycloField;

class CycloNum {
public:
    /// Zero of Q(z_l).
    explicit CycloNum(int l);
    CycloNum(int l, const Rational& value);
    CycloNum(int l, long value);
    /// From a coefficient vector of any length; reduced modulo Phi_l.
    CycloNum(int l, std::span<const Rational> coeffs);

    int order() const noexcept;
    const CycloField& field() const noexcept { return *field_; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool is_rational() const noexcept;
    /// Constant coefficient; meaningful when is_rational().
    const Rational& rational_part() const noexcept { return c_.front(); }

    CycloNum& operator+=(const CycloNum& rhs);
    CycloNum& operator-=(const CycloNum& rhs);
    CycloNum& operator*=(const CycloNum& rhs);
    CycloNum& operator*=(const Rational& rhs);
    CycloNum& operator/=(const CycloNum& rhs);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(CycloNum a, const Rational& b) { return a *= b; }
    friend CycloNum operator*(const Rational& b, CycloNum a) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    CycloNum operator-() const;

    /// a += b * c without building the temporary product's canonical form twice.
    void add_product(const CycloNum& b, const CycloNum& c);
    void sub_product(const CycloNum& b, const CycloNum& c);

    CycloNum inv() const;
    CycloNum pow(long k) const;

    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    /// Human-readable form in the literal grammar, e.g. "1/2*z^2 - 3".
    std::string str() const;
    /// phi(l) rational strings, constant term first.
    std::vector<std::string> to_strings() const;

private:
    CycloNum(const CycloField* field, std::vector<Rational> coeffs)
        : field_(field), c_(std::move(coeffs)) {}
    void check_same(const CycloNum& other) const;

    const CycloField* field_;
    std::vector<Rational> c_;

    friend class CycloField;
};

std::ostream& operator<<(std::ostream& os, const CycloNum& x);

/// Per-order context: the modulus and the reduced powers of z. Instances
/// live for the whole program and are shared by every CycloNum of that order.
class CycloField {
public:
    static const CycloField& get(int l);

    int order() const noexcept { return l_; }
    int degree() const noexcept { return degree_; }
    /// Phi_l with the leading 1 dropped, constant term first.
    const std::vector<long>& modulus() const noexcept { return modulus_; }

    CycloNum zero() const { return CycloNum(this, std::vector<Rational>(degree_)); }
    CycloNum one() const;
    /// z^k for any integer k.
    const CycloNum& power(long k) const;

    /// Reduce a coefficient vector of arbitrary length in place to length degree().
    void reduce(std::vector<Rational>& coeffs) const;

private:
    explicit CycloField(int l);

    int l_;
    int degree_;
    std::vector<long> modulus_;
    std::vector<CycloNum> powers_;
};

/// z_l^k reduced.
CycloNum q_power(int l, long k);

/// 1 + q^{-2} + ... + q^{-2(i-1)}, the coefficient in E Y^i = q^{-i} Y^i E + [i] X Y^{i-1}.
CycloNum q_int(int l, long i);

/// Parses the literal grammar over z (alias q): integers, rationals, + - * / ^ and parentheses.
CycloNum parse_cyclo(int l, const std::string& text);

/// Parses a comma-separated list of literals, respecting parentheses.
std::vector<CycloNum> parse_cyclo_list(int l, const std::string& text);

/// Exact l-th roots of a rational, when they exist in Q (sign respected for odd l).
std::vector<Rational> rational_roots(const Rational& value, int l);

}  // namespace qsaa
