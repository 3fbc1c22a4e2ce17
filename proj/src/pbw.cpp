#include "qsaa/pbw.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qsaa {

std::string_view gen_name(Gen g) noexcept {
    switch (g) {
        case Gen::X: return "X";
        case Gen::Y: return "Y";
        case Gen::E: return "E";
        case Gen::K: return "K";
        case Gen::Kinv: return "Kinv";
        case Gen::F: return "F";
        case Gen::Phi: return "phi";
        case Gen::Psi: return "psi";
    }
    return "?";
}

Gen parse_gen(std::string_view name) {
    if (name == "X") return Gen::X;
    if (name == "Y") return Gen::Y;
    if (name == "E") return Gen::E;
    if (name == "K") return Gen::K;
    if (name == "Kinv" || name == "K^-1") return Gen::Kinv;
    if (name == "F") return Gen::F;
    if (name == "phi") return Gen::Phi;
    if (name == "psi") return Gen::Psi;
    fail(ErrorKind::InvalidInput, "unknown generator '" + std::string(name) + "'");
}

std::string_view presentation_name(PresentationName p) noexcept {
    switch (p) {
        case PresentationName::Qsaa: return "qsaa";
        case PresentationName::Smash: return "smash";
        case PresentationName::B: return "B";
    }
    return "?";
}

PresentationName parse_presentation(std::string_view name) {
    if (name == "qsaa" || name == "A_cal" || name == "calA") return PresentationName::Qsaa;
    if (name == "smash" || name == "A") return PresentationName::Smash;
    if (name == "B" || name == "b") return PresentationName::B;
    fail(ErrorKind::InvalidInput, "unknown presentation '" + std::string(name) + "'");
}

// ------------------------------------------------------------ AlgebraElement

int AlgebraElement::order() const noexcept { return p_->order(); }

CycloNum AlgebraElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? p_->field().zero() : it->second;
}

void AlgebraElement::add_term(const Monomial& m, const CycloNum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void AlgebraElement::check_same(const AlgebraElement& other) const {
    if (p_ != other.p_)
        fail(ErrorKind::PresentationMismatch, "elements belong to different presentations or orders");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
    check_same(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
    check_same(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const CycloNum& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_same(b);
    return a.p_->multiply(a, b);
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r = *this;
    for (auto& [m, x] : r.terms_) x = -x;
    return r;
}

AlgebraElement AlgebraElement::pow(long k) const {
    if (k < 0) {
        // Only scalar multiples of K-powers are invertible here.
        if (terms_.size() != 1) fail(ErrorKind::InvalidInput, "negative power of a non-monomial element");
        const auto& [m, c] = *terms_.begin();
        Monomial inv{};
        for (int s = 0; s < p_->num_slots(); ++s) {
            if (m.exps[static_cast<std::size_t>(s)] != 0 && s != p_->k_slot())
                fail(ErrorKind::InvalidInput, "negative power of a non-invertible monomial");
        }
        inv.exps[static_cast<std::size_t>(p_->k_slot())] = -m.exps[static_cast<std::size_t>(p_->k_slot())];
        return p_->monomial(inv, c.inv()).pow(-k);
    }
    AlgebraElement result = p_->one();
    AlgebraElement base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_same(b);
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
        if (m != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest monomials first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        std::string mono = p_->monomial_str(m);
        std::string coef = c.str();
        bool compound = coef.find_first_of("+", 1) != std::string::npos ||
                        coef.find(" - ") != std::string::npos;
        if (mono == "1") {
            os << (compound ? "(" + coef + ")" : coef);
        } else if (c.is_one()) {
            os << mono;
        } else {
            os << (compound ? "(" + coef + ")" : coef) << "*" << mono;
        }
    }
    return os.str();
}

// -------------------------------------------------------------- Presentation

const Presentation& Presentation::get(PresentationName name, int l) {
    static std::mutex mu;
    static std::map<std::pair<PresentationName, int>, std::unique_ptr<Presentation>> cache;
    CycloField::get(l);  // validates l
    std::lock_guard lock(mu);
    auto& slot = cache[{name, l}];
    if (!slot) slot.reset(new Presentation(name, l));
    return *slot;
}

Presentation::Presentation(PresentationName name, int l) : name_(name), l_(l), field_(&CycloField::get(l)) {
    switch (name) {
        case PresentationName::Qsaa:
            slot_gens_ = {Gen::X, Gen::Y, Gen::E, Gen::K};
            gens_ = {Gen::X, Gen::Y, Gen::E, Gen::K, Gen::Kinv};
            k_slot_ = 3;
            break;
        case PresentationName::Smash:
            slot_gens_ = {Gen::X, Gen::Y, Gen::E, Gen::K, Gen::F};
            gens_ = {Gen::X, Gen::Y, Gen::E, Gen::K, Gen::Kinv, Gen::F};
            k_slot_ = 3;
            break;
        case PresentationName::B:
            slot_gens_ = {Gen::X, Gen::Y, Gen::K, Gen::Phi, Gen::Psi};
            gens_ = {Gen::X, Gen::Y, Gen::K, Gen::Kinv, Gen::Phi, Gen::Psi};
            k_slot_ = 2;
            break;
    }
    build_relations();
}

bool Presentation::has(Gen g) const noexcept { return std::find(gens_.begin(), gens_.end(), g) != gens_.end(); }

std::pair<int, int> Presentation::slot(Gen g) const {
    if (g == Gen::Kinv) return {k_slot_, -1};
    for (std::size_t s = 0; s < slot_gens_.size(); ++s)
        if (slot_gens_[s] == g) return {static_cast<int>(s), 1};
    fail(ErrorKind::PresentationMismatch,
         "generator " + std::string(gen_name(g)) + " is not part of presentation " + std::string(presentation_name(name_)));
}

AlgebraElement Presentation::one() const { return monomial(Monomial{}, field_->one()); }

AlgebraElement Presentation::scalar(const CycloNum& c) const { return monomial(Monomial{}, c); }

AlgebraElement Presentation::gen(Gen g) const {
    auto [s, e] = slot(g);
    Monomial m{};
    m.exps[static_cast<std::size_t>(s)] = e;
    return monomial(m, field_->one());
}

AlgebraElement Presentation::monomial(const Monomial& m, const CycloNum& c) const {
    AlgebraElement x(*this);
    x.add_term(m, c);
    return x;
}

Word Presentation::word_of(const Monomial& m) const {
    Word w;
    for (int s = 0; s < num_slots(); ++s) {
        int e = m.exps[static_cast<std::size_t>(s)];
        Gen g = slot_gen(s);
        if (s == k_slot_ && e < 0) {
            g = Gen::Kinv;
            e = -e;
        }
        w.insert(w.end(), static_cast<std::size_t>(e), g);
    }
    return w;
}

std::string Presentation::monomial_str(const Monomial& m) const {
    std::string out;
    for (int s = 0; s < num_slots(); ++s) {
        int e = m.exps[static_cast<std::size_t>(s)];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += gen_name(slot_gen(s));
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

WordSum Presentation::swap_rule(Gen h, Gen g) const {
    const CycloNum one = field_->one();
    auto single = [&](long qexp, Word w) { return WordSum{{q(qexp), std::move(w)}}; };
    using G = Gen;
    // Rules common to the Qsaa and Smash presentations.
    if (name_ != PresentationName::B) {
        if (h == G::Y && g == G::X) return single(-1, {G::X, G::Y});
        if (h == G::E && g == G::X) return single(1, {G::X, G::E});
        if (h == G::E && g == G::Y) return {{one, {G::X}}, {q(-1), {G::Y, G::E}}};
        if (h == G::K && g == G::X) return single(1, {G::X, G::K});
        if (h == G::Kinv && g == G::X) return single(-1, {G::X, G::Kinv});
        if (h == G::K && g == G::Y) return single(-1, {G::Y, G::K});
        if (h == G::Kinv && g == G::Y) return single(1, {G::Y, G::Kinv});
        if (h == G::K && g == G::E) return single(2, {G::E, G::K});
        if (h == G::Kinv && g == G::E) return single(-2, {G::E, G::Kinv});
        if (name_ == PresentationName::Smash && h == G::F) {
            if (g == G::X) return {{one, {G::Y, G::Kinv}}, {one, {G::X, G::F}}};
            if (g == G::Y) return {{one, {G::Y, G::F}}};
            if (g == G::E) {
                CycloNum c = (q(1) - q(-1)).inv();
                return {{one, {G::E, G::F}}, {-c, {G::K}}, {c, {G::Kinv}}};
            }
            if (g == G::K) return single(2, {G::K, G::F});
            if (g == G::Kinv) return single(-2, {G::Kinv, G::F});
        }
    } else {
        if (h == G::Y && g == G::X) return single(-1, {G::X, G::Y});
        if (h == G::K && g == G::X) return single(1, {G::X, G::K});
        if (h == G::Kinv && g == G::X) return single(-1, {G::X, G::Kinv});
        if (h == G::K && g == G::Y) return single(-1, {G::Y, G::K});
        if (h == G::Kinv && g == G::Y) return single(1, {G::Y, G::Kinv});
        if (h == G::Phi) {
            if (g == G::X) return single(0, {G::X, G::Phi});
            if (g == G::Y) return single(-1, {G::Y, G::Phi});
            if (g == G::K) return single(-1, {G::K, G::Phi});
            if (g == G::Kinv) return single(1, {G::Kinv, G::Phi});
        }
        if (h == G::Psi) {
            if (g == G::X) return single(0, {G::X, G::Psi});
            if (g == G::Y) return single(1, {G::Y, G::Psi});
            if (g == G::K) return single(1, {G::K, G::Psi});
            if (g == G::Kinv) return single(-1, {G::Kinv, G::Psi});
            if (g == G::Phi) {
                CycloNum c = q(1) * (one - q(2));
                return {{one, {G::Phi, G::Psi}}, {c, {G::K, G::Y, G::X}}};
            }
        }
    }
    fail(ErrorKind::InvariantViolation, "no rewrite rule for " + std::string(gen_name(h)) + "*" + std::string(gen_name(g)));
}

AlgebraElement Presentation::mul_letter(const Monomial& m, Gen g) const {
    auto [sg, t] = slot(g);
    int h = -1;
    for (int s = num_slots() - 1; s >= 0; --s)
        if (m.exps[static_cast<std::size_t>(s)] != 0) {
            h = s;
            break;
        }
    if (h <= sg) {
        Monomial r = m;
        r.exps[static_cast<std::size_t>(sg)] += t;
        return monomial(r, field_->one());
    }
    const std::pair<Monomial, int> key{m, static_cast<int>(g)};
    {
        std::lock_guard lock(memo_mu_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const int e = m.exps[static_cast<std::size_t>(h)];
    const int s = (h == k_slot_ && e < 0) ? -1 : 1;
    const Gen hg = s < 0 ? Gen::Kinv : slot_gen(h);
    Monomial rest = m;
    rest.exps[static_cast<std::size_t>(h)] -= s;
    AlgebraElement base = monomial(rest, field_->one());
    AlgebraElement result = zero();
    for (const auto& [c, w] : swap_rule(hg, g)) {
        AlgebraElement part = mul_word(base, w);
        part *= c;
        result += part;
    }
    std::lock_guard lock(memo_mu_);
    memo_.emplace(key, result);
    return result;
}

AlgebraElement Presentation::mul_word(const AlgebraElement& x, const Word& w) const {
    AlgebraElement cur = x;
    for (Gen g : w) {
        AlgebraElement next = zero();
        for (const auto& [m, c] : cur.terms()) {
            AlgebraElement part = mul_letter(m, g);
            part *= c;
            next += part;
        }
        cur = std::move(next);
    }
    return cur;
}

AlgebraElement Presentation::normal_form(const Word& w) const {
    for (Gen g : w) slot(g);
    return mul_word(one(), w);
}

AlgebraElement Presentation::normal_form_by_rewriting(const Word& w) const {
    for (Gen g : w) slot(g);
    auto slot_of = [this](Gen g) { return slot(g).first; };
    AlgebraElement result = zero();
    std::vector<std::pair<CycloNum, Word>> work{{field_->one(), w}};
    while (!work.empty()) {
        auto [c, word] = std::move(work.back());
        work.pop_back();
        std::size_t i = 0;
        while (i + 1 < word.size() && slot_of(word[i]) <= slot_of(word[i + 1])) ++i;
        if (i + 1 >= word.size()) {
            Monomial m{};
            for (Gen g : word) {
                auto [s, e] = slot(g);
                m.exps[static_cast<std::size_t>(s)] += e;
            }
            result.add_term(m, c);
            continue;
        }
        for (const auto& [rc, rw] : swap_rule(word[i], word[i + 1])) {
            Word nw(word.begin(), word.begin() + static_cast<long>(i));
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), word.begin() + static_cast<long>(i) + 2, word.end());
            work.emplace_back(c * rc, std::move(nw));
        }
    }
    return result;
}

AlgebraElement Presentation::evaluate(const WordSum& s) const {
    AlgebraElement r = zero();
    for (const auto& [c, w] : s) r += normal_form(w) * c;
    return r;
}

AlgebraElement Presentation::multiply(const AlgebraElement& u, const AlgebraElement& v) const {
    if (&u.presentation() != this || &v.presentation() != this)
        fail(ErrorKind::PresentationMismatch, "multiply: element from another presentation");
    AlgebraElement result = zero();
    for (const auto& [m, c] : v.terms()) {
        AlgebraElement part = mul_word(u, word_of(m));
        part *= c;
        result += part;
    }
    return result;
}

bool Presentation::is_central(const AlgebraElement& x) const {
    for (Gen g : gens_) {
        AlgebraElement gx = gen(g);
        if (multiply(x, gx) != multiply(gx, x)) return false;
    }
    return true;
}

void Presentation::build_relations() {
    using G = Gen;
    const CycloNum one = field_->one();
    auto rel = [&](std::string n, WordSum lhs, WordSum rhs) {
        relations_.push_back({std::move(n), std::move(lhs), std::move(rhs)});
    };
    auto w = [&](Word word, CycloNum c) { return WordSum{{std::move(c), std::move(word)}}; };
    switch (name_) {
        case PresentationName::Qsaa:
            rel("EK=q^-2KE", w({G::E, G::K}, one), w({G::K, G::E}, q(-2)));
            rel("XK=q^-1KX", w({G::X, G::K}, one), w({G::K, G::X}, q(-1)));
            rel("YK=qKY", w({G::Y, G::K}, one), w({G::K, G::Y}, q(1)));
            rel("EX=qXE", w({G::E, G::X}, one), w({G::X, G::E}, q(1)));
            rel("EY=X+q^-1YE", w({G::E, G::Y}, one), {{one, {G::X}}, {q(-1), {G::Y, G::E}}});
            rel("XY=qYX", w({G::X, G::Y}, one), w({G::Y, G::X}, q(1)));
            break;
        case PresentationName::Smash: {
            CycloNum c = (q(1) - q(-1)).inv();
            rel("KEK^-1=q^2E", w({G::K, G::E, G::Kinv}, one), w({G::E}, q(2)));
            rel("KFK^-1=q^-2F", w({G::K, G::F, G::Kinv}, one), w({G::F}, q(-2)));
            rel("EF-FE=(K-K^-1)/(q-q^-1)", {{one, {G::E, G::F}}, {-one, {G::F, G::E}}},
                {{c, {G::K}}, {-c, {G::Kinv}}});
            rel("EX=qXE", w({G::E, G::X}, one), w({G::X, G::E}, q(1)));
            rel("EY=X+q^-1YE", w({G::E, G::Y}, one), {{one, {G::X}}, {q(-1), {G::Y, G::E}}});
            rel("FX=YK^-1+XF", w({G::F, G::X}, one), {{one, {G::Y, G::Kinv}}, {one, {G::X, G::F}}});
            rel("FY=YF", w({G::F, G::Y}, one), w({G::Y, G::F}, one));
            rel("KXK^-1=qX", w({G::K, G::X, G::Kinv}, one), w({G::X}, q(1)));
            rel("KYK^-1=q^-1Y", w({G::K, G::Y, G::Kinv}, one), w({G::Y}, q(-1)));
            rel("XY=qYX", w({G::X, G::Y}, one), w({G::Y, G::X}, q(1)));
            break;
        }
        case PresentationName::B:
            rel("phiX=Xphi", w({G::Phi, G::X}, one), w({G::X, G::Phi}, one));
            rel("phiY=q^-1Yphi", w({G::Phi, G::Y}, one), w({G::Y, G::Phi}, q(-1)));
            rel("phiK=q^-1Kphi", w({G::Phi, G::K}, one), w({G::K, G::Phi}, q(-1)));
            rel("psiX=Xpsi", w({G::Psi, G::X}, one), w({G::X, G::Psi}, one));
            rel("psiY=qYpsi", w({G::Psi, G::Y}, one), w({G::Y, G::Psi}, q(1)));
            rel("psiK=qKpsi", w({G::Psi, G::K}, one), w({G::K, G::Psi}, q(1)));
            rel("psiphi-phipsi=q(1-q^2)KYX", {{one, {G::Psi, G::Phi}}, {-one, {G::Phi, G::Psi}}},
                w({G::K, G::Y, G::X}, q(1) * (one - q(2))));
            rel("XY=qYX", w({G::X, G::Y}, one), w({G::Y, G::X}, q(1)));
            rel("KXK^-1=qX", w({G::K, G::X, G::Kinv}, one), w({G::X}, q(1)));
            rel("KYK^-1=q^-1Y", w({G::K, G::Y, G::Kinv}, one), w({G::Y}, q(-1)));
            break;
    }
    rel("KK^-1=1", w({G::K, G::Kinv}, one), w({}, one));
    rel("K^-1K=1", w({G::Kinv, G::K}, one), w({}, one));
}

// ----------------------------------------------------------- named elements

AlgebraElement phi_element(const Presentation& p) {
    if (p.name() == PresentationName::B) return p.gen(Gen::Phi);
    return p.normal_form({Gen::E, Gen::Y}) - p.normal_form({Gen::Y, Gen::E}) * p.q(1);
}

AlgebraElement psi_element(const Presentation& p) {
    if (p.name() == PresentationName::B) return p.gen(Gen::Psi);
    if (p.name() != PresentationName::Smash)
        fail(ErrorKind::PresentationMismatch, "psi needs the generator F (presentation smash)");
    return p.normal_form({Gen::X, Gen::F}) - p.normal_form({Gen::F, Gen::X}) * p.q(2);
}

AlgebraElement embed_b_in_smash(const AlgebraElement& x) {
    const Presentation& b = x.presentation();
    if (b.name() != PresentationName::B) fail(ErrorKind::PresentationMismatch, "embedding expects an element of B");
    const Presentation& a = Presentation::get(PresentationName::Smash, b.order());
    auto image = [&](Gen g) {
        if (g == Gen::Phi) return phi_element(a);
        if (g == Gen::Psi) return psi_element(a);
        return a.gen(g);
    };
    AlgebraElement out = a.zero();
    for (const auto& [m, c] : x.terms()) {
        AlgebraElement t = a.scalar(c);
        for (Gen g : b.word_of(m)) t = t * image(g);
        out += t;
    }
    return out;
}

bool verify_identity(const AlgebraElement& lhs, const AlgebraElement& rhs) {
    if (lhs.order() != rhs.order()) fail(ErrorKind::OrderMismatch, "identity sides have different root orders");
    return lhs == rhs;
}

// ------------------------------------------------------------------ parsing

namespace {

class ElementParser {
public:
    ElementParser(const Presentation& p, const std::string& text) : p_(p), s_(text) {}

    AlgebraElement parse() {
        AlgebraElement v = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorKind::Parse, "element '" + s_ + "' at " + std::to_string(pos_) + ": " + msg);
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

    AlgebraElement expr() {
        AlgebraElement v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    AlgebraElement term() {
        AlgebraElement v = unary();
        for (;;) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                AlgebraElement d = unary();
                if (d.terms().size() != 1 || d.terms().begin()->first != Monomial{})
                    error("division only by nonzero scalars");
                v *= d.terms().begin()->second.inv();
            } else {
                return v;
            }
        }
    }

    AlgebraElement unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    long exponent() {
        bool paren = accept('(');
        bool neg = accept('-');
        if (!neg) accept('+');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("expected integer exponent");
        long e = std::stol(s_.substr(start, pos_ - start));
        if (paren && !accept(')')) error("expected ')'");
        return neg ? -e : e;
    }

    AlgebraElement power() {
        AlgebraElement base = primary();
        if (accept('^')) return base.pow(exponent());
        return base;
    }

    AlgebraElement primary() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            AlgebraElement v = expr();
            if (!accept(')')) error("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return p_.scalar(CycloNum(p_.order(), Rational(BigInt(s_.substr(start, pos_ - start), 10))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            if (id == "z" || id == "q") return p_.scalar(p_.q(1));
            if (id == "phi") return phi_element(p_);
            if (id == "psi") return psi_element(p_);
            return p_.gen(parse_gen(id));
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    const Presentation& p_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_element(const Presentation& p, const std::string& text) { return ElementParser(p, text).parse(); }

}  // namespace qsaa
