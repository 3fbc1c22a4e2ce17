#include "qsaa/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qsaa {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidOrder: return "invalid-order";
        case ErrorKind::OrderMismatch: return "order-mismatch";
        case ErrorKind::DivisionByZero: return "division-by-zero";
        case ErrorKind::PresentationMismatch: return "presentation-mismatch";
        case ErrorKind::InvariantViolation: return "invariant-violation";
        case ErrorKind::InvalidParameter: return "invalid-parameter";
        case ErrorKind::InvalidInput: return "invalid-input";
        case ErrorKind::Resource: return "resource";
        case ErrorKind::Torsion: return "torsion";
        case ErrorKind::NeedsHints: return "needs-hints";
        case ErrorKind::NotSimple: return "not-simple";
        case ErrorKind::Unsupported: return "unsupported";
        case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) fail(ErrorKind::Parse, "empty rational literal");
    Rational r;
    auto slash = s.find('/');
    BigInt num, den(1);
    auto is_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    };
    std::string n = s.substr(0, slash);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    if (!is_int(n)) fail(ErrorKind::Parse, "bad rational literal '" + text + "'");
    num.set_str(n, 10);
    if (slash != std::string::npos) {
        std::string d = s.substr(slash + 1);
        if (!is_int(d)) fail(ErrorKind::Parse, "bad rational literal '" + text + "'");
        den.set_str(d, 10);
        if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
    }
    r = Rational(num, den);
    r.canonicalize();
    return r;
}

namespace {

using IntPoly = std::vector<BigInt>;

// Exact quotient of a by a monic b.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    IntPoly q(a.size() - db);
    for (std::size_t k = a.size(); k-- > db;) {
        BigInt t = a[k];
        q[k - db] = t;
        if (t == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= t * b[i];
    }
    return q;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
    if (n < 1) fail(ErrorKind::InvalidOrder, "cyclotomic polynomial needs n >= 1, got " + std::to_string(n));
    static std::mutex mu;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPoly p(static_cast<std::size_t>(n) + 1);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
    std::lock_guard lock(mu);
    cache.emplace(n, p);
    return p;
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

int ord_q2(int l) {
    if (l < 3) fail(ErrorKind::InvalidOrder, "root order must be >= 3");
    return l % 2 == 1 ? l : l / 2;
}

// ---------------------------------------------------------------- CycloField

const CycloField& CycloField::get(int l) {
    if (l < 3) fail(ErrorKind::InvalidOrder, "root order must be >= 3, got " + std::to_string(l));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> fields;
    std::lock_guard lock(mu);
    auto& slot = fields[l];
    if (!slot) slot.reset(new CycloField(l));
    return *slot;
}

CycloField::CycloField(int l) : l_(l), degree_(euler_phi(l)) {
    auto poly = cyclotomic_polynomial(l);
    modulus_.reserve(static_cast<std::size_t>(degree_));
    for (int i = 0; i < degree_; ++i) {
        const auto& c = poly[static_cast<std::size_t>(i)];
        if (!c.fits_slong_p()) fail(ErrorKind::InvalidOrder, "cyclotomic coefficients too large for l=" + std::to_string(l));
        modulus_.push_back(c.get_si());
    }
    powers_.reserve(static_cast<std::size_t>(l));
    std::vector<Rational> v(static_cast<std::size_t>(degree_));
    v[0] = 1;
    for (int k = 0; k < l; ++k) {
        powers_.push_back(CycloNum(this, v));
        // multiply by z
        std::vector<Rational> w(static_cast<std::size_t>(degree_) + 1);
        std::copy(v.begin(), v.end(), w.begin() + 1);
        reduce(w);
        v = std::move(w);
    }
}

CycloNum CycloField::one() const { return powers_.front(); }

const CycloNum& CycloField::power(long k) const {
    long r = k % l_;
    if (r < 0) r += l_;
    return powers_[static_cast<std::size_t>(r)];
}

void CycloField::reduce(std::vector<Rational>& coeffs) const {
    const auto d = static_cast<std::size_t>(degree_);
    for (std::size_t k = coeffs.size(); k-- > d;) {
        if (sgn(coeffs[k]) == 0) continue;
        const Rational t = coeffs[k];
        for (std::size_t i = 0; i < d; ++i) {
            long m = modulus_[i];
            if (m == 0) continue;
            coeffs[k - d + i] -= t * m;
        }
    }
    coeffs.resize(d);
}

// ------------------------------------------------------------------ CycloNum

CycloNum::CycloNum(int l) : CycloNum(CycloField::get(l).zero()) {}

CycloNum::CycloNum(int l, const Rational& value) : CycloNum(l) { c_[0] = value; }

CycloNum::CycloNum(int l, long value) : CycloNum(l) { c_[0] = value; }

CycloNum::CycloNum(int l, std::span<const Rational> coeffs) : CycloNum(l) {
    std::vector<Rational> v(coeffs.begin(), coeffs.end());
    if (v.size() < c_.size()) v.resize(c_.size());
    field_->reduce(v);
    c_ = std::move(v);
}

int CycloNum::order() const noexcept { return field_->order(); }

bool CycloNum::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool CycloNum::is_one() const noexcept {
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool CycloNum::is_rational() const noexcept {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

void CycloNum::check_same(const CycloNum& other) const {
    if (field_ != other.field_)
        fail(ErrorKind::OrderMismatch, "cyclotomic order mismatch: " + std::to_string(order()) + " vs " +
                                           std::to_string(other.order()));
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(rhs.c_[i]) != 0) c_[i] += rhs.c_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(rhs.c_[i]) != 0) c_[i] -= rhs.c_[i];
    return *this;
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

namespace {

// Unreduced product, length 2d-1; zero coefficients skipped.
std::vector<Rational> raw_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> p(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            p[i + j] += a[i] * b[j];
        }
    }
    return p;
}

}  // namespace

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    a.check_same(b);
    auto p = raw_product(a.c_, b.c_);
    a.field_->reduce(p);
    return CycloNum(a.field_, std::move(p));
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) { return *this = *this * rhs; }

CycloNum& CycloNum::operator*=(const Rational& rhs) {
    if (sgn(rhs) == 0) {
        for (auto& c : c_) c = 0;
        return *this;
    }
    for (auto& c : c_)
        if (sgn(c) != 0) c *= rhs;
    return *this;
}

void CycloNum::add_product(const CycloNum& b, const CycloNum& c) {
    check_same(b);
    check_same(c);
    auto p = raw_product(b.c_, c.c_);
    field_->reduce(p);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(p[i]) != 0) c_[i] += p[i];
}

void CycloNum::sub_product(const CycloNum& b, const CycloNum& c) {
    check_same(b);
    check_same(c);
    auto p = raw_product(b.c_, c.c_);
    field_->reduce(p);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(p[i]) != 0) c_[i] -= p[i];
}

CycloNum CycloNum::inv() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(z_" + std::to_string(order()) + ")");
    const std::size_t d = c_.size();
    // Monomial fast path: c*z^k inverts to c^{-1} z^{-k}.
    std::size_t nonzero = 0, pos = 0;
    for (std::size_t i = 0; i < d; ++i)
        if (sgn(c_[i]) != 0) {
            ++nonzero;
            pos = i;
        }
    if (nonzero == 1) {
        Rational c = 1 / c_[pos];
        return field_->power(-static_cast<long>(pos)) * c;
    }
    // Solve (multiplication by this) x = 1 over Q.
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    for (std::size_t j = 0; j < d; ++j) {
        CycloNum col = *this * field_->power(static_cast<long>(j));
        for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
    }
    m[0][d] = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && sgn(m[piv][col]) == 0) ++piv;
        if (piv == d) fail(ErrorKind::InvariantViolation, "singular multiplication matrix in inverse");
        std::swap(m[piv], m[col]);
        Rational s = 1 / m[col][col];
        for (std::size_t k = col; k <= d; ++k) m[col][k] *= s;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            Rational f = m[r][col];
            for (std::size_t k = col; k <= d; ++k) m[r][k] -= f * m[col][k];
        }
    }
    std::vector<Rational> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = m[i][d];
    return CycloNum(field_, std::move(x));
}

CycloNum& CycloNum::operator/=(const CycloNum& rhs) { return *this = *this * rhs.inv(); }

CycloNum CycloNum::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    CycloNum result = field_->one();
    CycloNum base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    a.check_same(b);
    return a.c_ == b.c_;
}

std::string CycloNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        Rational c = c_[k];
        if (sgn(c) == 0) continue;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << "*";
        os << "z";
        if (k > 1) os << "^" << k;
    }
    return first ? "0" : os.str();
}

std::vector<std::string> CycloNum::to_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.get_str());
    return out;
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.str(); }

CycloNum q_power(int l, long k) { return CycloField::get(l).power(k); }

CycloNum q_int(int l, long i) {
    if (i < 0) fail(ErrorKind::InvalidParameter, "q_int needs i >= 0");
    const auto& f = CycloField::get(l);
    CycloNum s = f.zero();
    for (long j = 0; j < i; ++j) s += f.power(-2 * j);
    return s;
}

std::vector<Rational> rational_roots(const Rational& value, int l) {
    if (l < 1) return {};
    if (sgn(value) == 0) return {Rational(0)};
    if (sgn(value) < 0 && l % 2 == 0) return {};
    BigInt num = abs(value.get_num());
    BigInt den = value.get_den();
    BigInt rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(l)) == 0) return {};
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(l)) == 0) return {};
    Rational r(rn, rd);
    r.canonicalize();
    if (sgn(value) < 0) return {-r};
    if (l % 2 == 0) return {r, -r};
    return {r};
}

// ------------------------------------------------------------------- parsing

namespace {

class CycloParser {
public:
    CycloParser(int l, const std::string& text) : field_(CycloField::get(l)), s_(text) {}

    CycloNum parse() {
        CycloNum v = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorKind::Parse, "cyclotomic literal '" + s_ + "' at " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    CycloNum expr() {
        CycloNum v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    CycloNum term() {
        CycloNum v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                CycloNum d = unary();
                if (d.is_zero()) error("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    CycloNum unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    long exponent() {
        bool paren = accept('(');
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("expected integer exponent");
        long e = std::stol(s_.substr(start, pos_ - start));
        if (paren && !accept(')')) error("expected ')'");
        return neg ? -e : e;
    }

    CycloNum power() {
        CycloNum base = primary();
        if (accept('^')) {
            long e = exponent();
            if (e < 0 && base.is_zero()) error("negative power of zero");
            return base.pow(e);
        }
        return base;
    }

    CycloNum primary() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            CycloNum v = expr();
            if (!accept(')')) error("expected ')'");
            return v;
        }
        if (c == 'z' || c == 'q') {
            ++pos_;
            return field_.power(1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            BigInt n(s_.substr(start, pos_ - start), 10);
            return CycloNum(field_.order(), Rational(n));
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    const CycloField& field_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

CycloNum parse_cyclo(int l, const std::string& text) { return CycloParser(l, text).parse(); }

std::vector<CycloNum> parse_cyclo_list(int l, const std::string& text) {
    std::vector<CycloNum> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(parse_cyclo(l, cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(parse_cyclo(l, cur));
    return out;
}

}  // namespace qsaa
