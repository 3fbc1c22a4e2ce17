#include "qsaa/identities.hpp"

namespace qsaa {

namespace {

// (1 - q^{2s}) / (1 - q^2)
CycloNum geometric_q2(const Presentation& p, int s) {
    const CycloNum one = p.field().one();
    return (one - p.q(2L * s)) / (one - p.q(2));
}

// (q^s - q^{-s}) / (q - q^{-1})
CycloNum balanced_int(const Presentation& p, int s) { return (p.q(s) - p.q(-s)) / (p.q(1) - p.q(-1)); }

AlgebraElement g(const Presentation& p, Gen x, int e = 1) { return p.gen(x).pow(e); }

AlgebraElement image_in_smash(const Presentation& a, Gen x) {
    if (x == Gen::Phi) return phi_element(a);
    if (x == Gen::Psi) return psi_element(a);
    return a.gen(x);
}

AlgebraElement embed_words(const Presentation& a, const WordSum& s) {
    AlgebraElement out = a.zero();
    for (const auto& [c, w] : s) {
        AlgebraElement t = a.scalar(c);
        for (Gen x : w) t = t * image_in_smash(a, x);
        out += t;
    }
    return out;
}

}  // namespace

AlgebraElement ey_power_rhs(const Presentation& p, int i) {
    return g(p, Gen::Y, i) * g(p, Gen::E) * p.q(-i) + g(p, Gen::X) * g(p, Gen::Y, i - 1) * q_int(p.order(), i);
}

AlgebraElement ye_power_rhs(const Presentation& p, int i) {
    return g(p, Gen::E, i) * g(p, Gen::Y) * p.q(i) - g(p, Gen::X) * g(p, Gen::E, i - 1) * (p.q(1) * geometric_q2(p, i));
}

AlgebraElement fx_power_rhs(const Presentation& p, int s) {
    return g(p, Gen::X, s) * g(p, Gen::F) + g(p, Gen::Y) * g(p, Gen::Kinv) * g(p, Gen::X, s - 1) * geometric_q2(p, s);
}

AlgebraElement xf_power_rhs(const Presentation& p, int r) {
    return g(p, Gen::F, r) * g(p, Gen::X) - g(p, Gen::Y) * g(p, Gen::F, r - 1) * g(p, Gen::Kinv) * geometric_q2(p, r);
}

AlgebraElement ef_power_rhs(const Presentation& p, int s) {
    const CycloNum d = (p.q(1) - p.q(-1)).inv();
    AlgebraElement k = (g(p, Gen::K) * p.q(1 - s) - g(p, Gen::Kinv) * p.q(s - 1)) * d;
    return g(p, Gen::F, s) * g(p, Gen::E) + g(p, Gen::F, s - 1) * k * balanced_int(p, s);
}

AlgebraElement fe_power_rhs(const Presentation& p, int r) {
    const CycloNum d = (p.q(1) - p.q(-1)).inv();
    AlgebraElement k = (g(p, Gen::K) * p.q(r - 1) - g(p, Gen::Kinv) * p.q(1 - r)) * d;
    return g(p, Gen::E, r) * g(p, Gen::F) - g(p, Gen::E, r - 1) * k * balanced_int(p, r);
}

AlgebraElement psi_power_phi_rhs(const Presentation& b, int s) {
    const CycloNum c = b.q(1) * (b.field().one() - b.q(2L * s));
    return g(b, Gen::Phi) * g(b, Gen::Psi, s) + g(b, Gen::K) * g(b, Gen::Y) * g(b, Gen::X) * g(b, Gen::Psi, s - 1) * c;
}

AlgebraElement psi_phi_power_rhs(const Presentation& b, int r) {
    const CycloNum c = b.q(3) * (b.q(-2L * r) - b.field().one());
    return g(b, Gen::Phi, r) * g(b, Gen::Psi) + g(b, Gen::K) * g(b, Gen::Y) * g(b, Gen::X) * g(b, Gen::Phi, r - 1) * c;
}

std::vector<IdentityCheck> qsaa_identities(int l, int max_exp) {
    const Presentation& p = Presentation::get(PresentationName::Qsaa, l);
    std::vector<IdentityCheck> out;
    for (int i = 1; i <= max_exp; ++i) {
        out.push_back({"EY^i", i, g(p, Gen::E) * g(p, Gen::Y, i) == ey_power_rhs(p, i)});
        out.push_back({"YE^i", i, g(p, Gen::Y) * g(p, Gen::E, i) == ye_power_rhs(p, i)});
    }
    const AlgebraElement phi = phi_element(p);
    const AlgebraElement one = p.one();
    out.push_back({"phi=X+(q^-1-q)YE", 0,
                   phi == g(p, Gen::X) + g(p, Gen::Y) * g(p, Gen::E) * (p.q(-1) - p.q(1))});
    out.push_back({"phi=q^2X+(1-q^2)EY", 0,
                   phi == g(p, Gen::X) * p.q(2) + g(p, Gen::E) * g(p, Gen::Y) * (p.field().one() - p.q(2))});
    out.push_back({"Xphi=phiX", 0, g(p, Gen::X) * phi == phi * g(p, Gen::X)});
    out.push_back({"Yphi=qphiY", 0, g(p, Gen::Y) * phi == phi * g(p, Gen::Y) * p.q(1)});
    out.push_back({"Ephi=q^-1phiE", 0, g(p, Gen::E) * phi == phi * g(p, Gen::E) * p.q(-1)});
    out.push_back({"Kphi=qphiK", 0, g(p, Gen::K) * phi == phi * g(p, Gen::K) * p.q(1)});
    return out;
}

std::vector<IdentityCheck> smash_identities(int l, int max_exp) {
    const Presentation& a = Presentation::get(PresentationName::Smash, l);
    const Presentation& b = Presentation::get(PresentationName::B, l);
    std::vector<IdentityCheck> out;
    for (int s = 1; s <= max_exp; ++s) {
        out.push_back({"FX^s", s, g(a, Gen::F) * g(a, Gen::X, s) == fx_power_rhs(a, s)});
        out.push_back({"XF^r", s, g(a, Gen::X) * g(a, Gen::F, s) == xf_power_rhs(a, s)});
        out.push_back({"EF^s", s, g(a, Gen::E) * g(a, Gen::F, s) == ef_power_rhs(a, s)});
        out.push_back({"FE^r", s, g(a, Gen::F) * g(a, Gen::E, s) == fe_power_rhs(a, s)});
        out.push_back({"psi^s phi", s, g(b, Gen::Psi, s) * g(b, Gen::Phi) == psi_power_phi_rhs(b, s)});
        out.push_back({"psi phi^r", s, g(b, Gen::Psi) * g(b, Gen::Phi, s) == psi_phi_power_rhs(b, s)});
    }
    out.push_back({"psi=(1-q^2)XF-q^2YK^-1", 0,
                   psi_element(a) == g(a, Gen::X) * g(a, Gen::F) * (a.field().one() - a.q(2)) -
                                         g(a, Gen::Y) * g(a, Gen::Kinv) * a.q(2)});
    for (const Relation& r : b.relations())
        out.push_back({"embedded " + r.name, 0, embed_words(a, r.lhs) == embed_words(a, r.rhs)});
    return out;
}

std::vector<IdentityCheck> centrality_checks(int l) {
    std::vector<IdentityCheck> out;
    auto add = [&](const Presentation& p, const std::string& label, const AlgebraElement& x) {
        out.push_back({std::string(presentation_name(p.name())) + ": " + label + " central", l, p.is_central(x)});
    };
    for (PresentationName n : {PresentationName::Qsaa, PresentationName::Smash}) {
        const Presentation& p = Presentation::get(n, l);
        add(p, "K^l", g(p, Gen::K, l));
        add(p, "K^-l", g(p, Gen::Kinv, l));
        add(p, "E^l", g(p, Gen::E, l));
        add(p, "X^l", g(p, Gen::X, l));
        add(p, "Y^l", g(p, Gen::Y, l));
        if (n == PresentationName::Smash) add(p, "F^l", g(p, Gen::F, l));
    }
    const Presentation& b = Presentation::get(PresentationName::B, l);
    add(b, "phi^l", g(b, Gen::Phi, l));
    add(b, "psi^l", g(b, Gen::Psi, l));
    add(b, "K^l", g(b, Gen::K, l));
    add(b, "K^-l", g(b, Gen::Kinv, l));
    add(b, "X^l", g(b, Gen::X, l));
    add(b, "Y^l", g(b, Gen::Y, l));
    return out;
}

}  // namespace qsaa
