#include "qsaa/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "qsaa/error.hpp"
#include "qsaa/identities.hpp"
#include "qsaa/pi_degree.hpp"
#include "qsaa/simple_mods.hpp"
#include "qsaa/smash.hpp"
#include "qsaa/verma.hpp"

namespace qsaa {

const char* to_string(Status s) noexcept {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Undetermined: return "undetermined";
    }
    return "?";
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, unsigned workers) {
    std::vector<CheckResult> out(checks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) {
            CheckResult r;
            try {
                r = checks[i].run();
            } catch (const Error& e) {
                r.status = e.kind() == ErrorKind::Resource ? Status::Undetermined : Status::Fail;
                r.guard_tripped = e.kind() == ErrorKind::Resource;
                r.details = std::string(to_string(e.kind())) + ": " + e.what();
            } catch (const std::exception& e) {
                r.status = Status::Fail;
                r.details = e.what();
            }
            r.name = checks[i].name;
            out[i] = std::move(r);
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(checks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

unsigned worker_count_from_env() {
    if (const char* env = std::getenv("QSAA_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int exit_status(const std::vector<CheckResult>& results) {
    bool guard = false;
    for (const auto& r : results) {
        if (r.status == Status::Fail) return 1;
        guard = guard || r.guard_tripped;
    }
    return guard ? 3 : 0;
}

long expected_pideg(int l) { return l % 2 ? static_cast<long>(l) * l : static_cast<long>(l) * l / 2; }

namespace {

CycloNum c(int l, long v) { return CycloNum(l, v); }
CycloNum q(int l, long k) { return q_power(l, k); }

// Collects failures and renders a one-line summary.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    void note(const std::string& s) { notes_.push_back(s); }
    CheckResult result() const {
        std::ostringstream os;
        os << total_ - failed_ << "/" << total_ << " checks hold";
        for (const auto& n : notes_) os << "; " << n;
        if (failed_) {
            os << "; failing:";
            for (const auto& f : failures_) os << " " << f;
        }
        return {"", failed_ ? Status::Fail : Status::Pass, os.str(), false};
    }

private:
    std::size_t total_ = 0, failed_ = 0;
    std::vector<std::string> failures_, notes_;
};

std::string join(const std::vector<long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string show(const std::vector<CycloNum>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

CheckResult identity_result(const std::vector<IdentityCheck>& ids) {
    Tally t;
    for (const auto& id : ids) t.expect(id.holds, id.name + (id.exponent ? "@" + std::to_string(id.exponent) : ""));
    return t.result();
}

// Deterministic parameter values mixing integers, fractions and powers of q.
std::vector<CycloNum> value_pool(int l) {
    return {c(l, 1), c(l, 2),  q(l, 1), c(l, 3) * q(l, 2), c(l, -1), CycloNum(l, Rational(1, 2)) * q(l, 1),
            c(l, 5), q(l, -1), c(l, 2) * q(l, 3), c(l, 7)};
}

// Point i of the construction grid; every third point has mu2 = mu1.
std::vector<CycloNum> grid_point(int l, SimpleType t, std::size_t i) {
    const auto pool = value_pool(l);
    auto at = [&](std::size_t k) { return pool[k % pool.size()]; };
    const bool degenerate = i % 3 == 0;
    switch (t) {
        case SimpleType::M1: return {at(i), degenerate ? at(i) : at(i + 3), at(i + 5), at(i + 7)};
        case SimpleType::M2: return {at(i), degenerate ? at(i) : at(i + 2), at(i + 4)};
        case SimpleType::M3: return {at(i), degenerate ? at(i) : at(i + 6)};
    }
    return {};
}

std::size_t arity(SimpleType t) { return t == SimpleType::M1 ? 4 : t == SimpleType::M2 ? 3 : 2; }

std::optional<IsoWitness> decide(int l, SimpleType t, const std::vector<CycloNum>& a, const std::vector<CycloNum>& b) {
    switch (t) {
        case SimpleType::M1: return iso_m1(l, params_m1(a), params_m1(b));
        case SimpleType::M2: return iso_m2(l, params_m2(a), params_m2(b));
        case SimpleType::M3: return iso_m3(l, params_m3(a), params_m3(b));
    }
    return std::nullopt;
}

Matrix intertwiner(int l, SimpleType t, const std::vector<CycloNum>& a, const std::vector<CycloNum>& b,
                   const IsoWitness& w) {
    switch (t) {
        case SimpleType::M1: return explicit_iso_m1(l, params_m1(a), params_m1(b), w);
        case SimpleType::M2: return explicit_iso_m2(l, params_m2(a), params_m2(b), w);
        case SimpleType::M3: return explicit_iso_m3(l, params_m3(a), params_m3(b), w);
    }
    fail(ErrorKind::InvalidInput, "unknown type");
}

constexpr SimpleType kTypes[] = {SimpleType::M1, SimpleType::M2, SimpleType::M3};

std::string type_key(SimpleType t) {
    std::string s = to_string(t);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return s;
}

// Diagonal powers of q times a few elementary row operations; keeps the
// conjugated matrices sparse so closure stays affordable at larger l.
Matrix sparse_basis_change(int l, std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<long> power(0, l - 1), scale(1, 3);
    std::uniform_int_distribution<std::size_t> index(0, n - 1);
    Matrix p(l, n, n);
    for (std::size_t i = 0; i < n; ++i) p(i, i) = q(l, power(rng));
    for (int k = 0; k < 4; ++k) {
        const std::size_t i = index(rng), j = index(rng);
        if (i == j) continue;
        Matrix e = Matrix::identity(l, n);
        e(i, j) = c(l, scale(rng)) * q(l, power(rng));
        p = e * p;
    }
    return p;
}

Word random_word(const Presentation& p, std::mt19937& rng, int max_len) {
    const auto& gens = p.generators();
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& g : w) g = gens[pick(rng)];
    return w;
}

AlgebraElement random_element(const Presentation& p, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    AlgebraElement x = p.zero();
    for (int t = 0; t < 2; ++t) x += p.normal_form(random_word(p, rng, 4)) * CycloNum(p.order(), coef(rng));
    return x;
}

CycloNum random_num(int l, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    std::vector<Rational> co(static_cast<std::size_t>(euler_phi(l)));
    for (auto& x : co) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return CycloNum(l, co);
}

bool same_subspace(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return false;
    for (const auto& v : a.basis())
        if (!b.contains(v)) return false;
    return true;
}

}  // namespace

std::vector<Check> pideg_checks(int l, const SuiteOptions& opt) {
    std::vector<Check> out;
    const std::string tag = "@l=" + std::to_string(l);
    out.push_back({"pideg.qsaa" + tag, [l] {
                       const long p = pideg_qsaa(l);
                       return CheckResult{"", p == expected_pideg(l) ? Status::Pass : Status::Fail,
                                          "pideg=" + std::to_string(p) + " expected=" + std::to_string(expected_pideg(l)), false};
                   }});
    out.push_back({"pideg.smash" + tag, [l] {
                       const long p = pideg_smash(l);
                       return CheckResult{"", p == expected_pideg(l) ? Status::Pass : Status::Fail,
                                          "pideg=" + std::to_string(p) + " expected=" + std::to_string(expected_pideg(l)), false};
                   }});
    const long guard = opt.bruteforce_guard;
    out.push_back({"pideg.bruteforce" + tag, [l, guard] {
                       Tally t;
                       const long pq = pideg_qsaa(l), ps = pideg_smash(l);
                       const long hq = image_cardinality_bruteforce(qsaa_exponent_matrix(), l, guard);
                       const long hs = image_cardinality_bruteforce(smash_exponent_matrix(), l, guard);
                       t.expect(pq * pq == hq, "qsaa h=" + std::to_string(hq));
                       t.expect(ps * ps == hs, "smash h=" + std::to_string(hs));
                       t.note("h_qsaa=" + std::to_string(hq) + " h_smash=" + std::to_string(hs));
                       return t.result();
                   }});
    return out;
}

std::vector<Check> reduced_factor_checks() {
    return {{"pideg.reduced_factors", [] {
                 Tally t;
                 const SkewNormalForm nf = skew_normal_form(qsaa_reduced_matrix());
                 const IntMatrix block = nf.block_form();
                 std::vector<long> diag;
                 for (std::size_t i = 0; i + 1 < block.size(); i += 2) {
                     diag.push_back(block[i][i + 1]);
                     diag.push_back(block[i][i + 1]);
                 }
                 t.expect(diag == std::vector<long>{1, 1, 2, 2}, "factors " + join(diag));
                 t.expect(nf.kernel_dim == 0, "kernel");
                 t.expect(skew_normal_form(qsaa_exponent_matrix()).factors == nf.factors, "unreduced factors");
                 t.note("invariant factors " + join(diag));
                 return t.result();
             }}};
}

std::vector<Check> identity_checks(int l, int max_exp) {
    const std::string tag = "@l=" + std::to_string(l);
    return {{"identities.qsaa" + tag, [l, max_exp] { return identity_result(qsaa_identities(l, max_exp)); }},
            {"identities.smash" + tag, [l, max_exp] { return identity_result(smash_identities(l, max_exp)); }}};
}

std::vector<Check> centrality_suite(int l) {
    return {{"centrality@l=" + std::to_string(l), [l] { return identity_result(centrality_checks(l)); }}};
}

std::vector<Check> construction_checks(int l, const SuiteOptions& opt) {
    std::vector<Check> out;
    for (SimpleType type : kTypes) {
        out.push_back({"modules." + type_key(type) + "@l=" + std::to_string(l), [l, type, opt] {
                           Tally t;
                           const std::size_t n = static_cast<std::size_t>(ord_q2(l) * l);
                           for (std::size_t i = 0; i < opt.grid_points; ++i) {
                               const auto mu = grid_point(l, type, i);
                               const MatrixModule m = build_type(l, type, mu);
                               const std::string at = show(mu);
                               t.expect(m.dim() == n, "dim" + at);
                               t.expect(verify_relations(m).empty(), "relations" + at);
                               const auto rep = is_simple(m, opt.closure_guard);
                               t.expect(rep.verdict == Simplicity::Simple, "simple" + at);
                               const std::size_t closure = rep.closure_dim ? *rep.closure_dim : algebra_closure_dim(m, opt.closure_guard);
                               t.expect(closure == n * n, "closure" + at);
                           }
                           t.note(std::to_string(opt.grid_points) + " parameter points, closure " + std::to_string(n * n));
                           return t.result();
                       }});
    }
    return out;
}

std::vector<Check> isomorphism_checks(int l, const SuiteOptions& opt) {
    std::vector<Check> out;
    for (SimpleType type : kTypes) {
        const unsigned seed = opt.seed + 100u * static_cast<unsigned>(l) + static_cast<unsigned>(type);
        out.push_back({"iso." + type_key(type) + "@l=" + std::to_string(l), [l, type, seed, opt] {
                           Tally t;
                           std::mt19937 rng(seed);
                           std::uniform_int_distribution<long> small(1, 3), power(0, l - 1), coin(0, 3);
                           std::size_t isos = 0;
                           for (std::size_t k = 0; k < opt.iso_pairs; ++k) {
                               std::vector<CycloNum> mu, gamma;
                               for (std::size_t i = 0; i < arity(type); ++i) mu.push_back(c(l, small(rng)) * q(l, power(rng)));
                               for (std::size_t i = 0; i < arity(type); ++i) {
                                   CycloNum x = mu[i] * q(l, power(rng));
                                   if (coin(rng) == 0) x *= c(l, 2);
                                   gamma.push_back(x);
                               }
                               const MatrixModule a = build_type(l, type, mu), b = build_type(l, type, gamma);
                               const auto homs = hom_space(a, b);
                               const auto w = decide(l, type, mu, gamma);
                               const std::string at = show(mu) + "->" + show(gamma);
                               t.expect(homs.size() <= 1, "hom dim" + at);
                               t.expect(w.has_value() == (homs.size() == 1), "decider" + at);
                               if (w) {
                                   ++isos;
                                   const Matrix p = intertwiner(l, type, mu, gamma, *w);
                                   t.expect(is_hom(a, b, p) && p.try_inverse().has_value(), "intertwiner" + at);
                               }
                           }
                           t.note(std::to_string(opt.iso_pairs) + " pairs, " + std::to_string(isos) + " isomorphic, seed " +
                                  std::to_string(seed));
                           return t.result();
                       }});
    }
    out.push_back({"iso.cross_type@l=" + std::to_string(l), [l] {
                       Tally t;
                       std::vector<std::pair<SimpleType, MatrixModule>> mods;
                       for (SimpleType type : kTypes)
                           for (std::size_t i : {0u, 1u, 2u}) mods.emplace_back(type, build_type(l, type, grid_point(l, type, i)));
                       for (const auto& [ta, a] : mods)
                           for (const auto& [tb, b] : mods)
                               if (ta != tb) t.expect(hom_space(a, b).empty(), std::string(to_string(ta)) + "->" + to_string(tb));
                       return t.result();
                   }});
    return out;
}

std::vector<Check> classification_checks(int l) {
    std::vector<Check> out;
    for (SimpleType type : kTypes) {
        out.push_back({"classify." + type_key(type) + "@l=" + std::to_string(l), [l, type] {
                           Tally t;
                           for (std::size_t i = 0; i < 4; ++i) {
                               const auto mu = grid_point(l, type, i);
                               const MatrixModule m = build_type(l, type, mu);
                               const Classification r = classify(m);
                               const std::string at = show(mu);
                               t.expect(r.type == type, "type" + at);
                               if (r.type != type) continue;
                               t.expect(decide(l, type, r.params, mu).has_value(), "parameters" + at);
                               t.expect(is_hom(build_type(l, r.type, r.params), m, r.intertwiner) &&
                                            r.intertwiner.try_inverse().has_value(),
                                        "intertwiner" + at);
                           }
                           return t.result();
                       }});
    }
    return out;
}

std::vector<Check> verma_checks(int l, int max_p, const SuiteOptions& opt) {
    std::vector<Check> out;
    const VermaParams params{c(l, 2), c(l, 3)};
    for (int p = 1; p <= max_p; ++p) {
        out.push_back({"verma.Q" + std::to_string(p) + "@l=" + std::to_string(l), [l, p, params, opt] {
                           Tally t;
                           const MatrixModule m = build_q(l, p, params);
                           t.expect(verify_relations(m).empty(), "relations");
                           const auto rep = is_simple(m, opt.closure_guard);
                           const auto chain = chain_submodules(l, p);
                           if (p == 1) {
                               t.expect(rep.verdict == Simplicity::Simple, "simple");
                               const std::size_t closure = rep.closure_dim ? *rep.closure_dim : algebra_closure_dim(m, opt.closure_guard);
                               t.expect(closure == m.dim() * m.dim(), "closure " + std::to_string(closure));
                               t.note("closure " + std::to_string(closure));
                           } else {
                               t.expect(rep.verdict == Simplicity::NotSimple, "not simple");
                               bool witness_in_chain = false;
                               if (rep.witness)
                                   for (const auto& w : chain) witness_in_chain = witness_in_chain || same_subspace(*rep.witness, w);
                               t.expect(witness_in_chain, "witness is a chain member");
                               for (std::size_t r = 0; r < chain.size(); ++r) {
                                   t.expect(is_invariant(m, chain[r]), "chain member " + std::to_string(r + 1) + " invariant");
                                   t.expect(!has_invariant_complement(m, chain[r]),
                                            "chain member " + std::to_string(r + 1) + " has no complement");
                               }
                               if (rep.witness) t.note("witness dim " + std::to_string(rep.witness->dim()));
                           }
                           const EndoAlgebra e = endo_algebra(m);
                           t.expect(e.dim() - e.radical_dim() == 1, "End/rad");
                           t.note("dim(End/rad)=" + std::to_string(e.dim() - e.radical_dim()));
                           return t.result();
                       }});
    }
    return out;
}

std::vector<Check> smash_checks(int l, const SuiteOptions& opt) {
    const std::string tag = "@l=" + std::to_string(l);
    auto grid = [l] {
        std::vector<BModuleParams> g;
        const std::vector<CycloNum> lam3 = {c(l, 0), c(l, 1), q(l, 1)}, free = {c(l, 1), q(l, 1), c(l, 2)};
        for (const auto& l3 : lam3)
            for (const auto& xi : free)
                for (const auto& alpha : free) g.push_back({c(l, 2), c(l, 3), l3, xi, alpha});
        return g;
    };
    std::vector<Check> out;
    out.push_back({"smash.n1" + tag, [l, grid, opt] {
                       Tally t;
                       for (const auto& p : grid()) {
                           const MatrixModule n = build_n1(l, p);
                           const std::string at = show({p.lambda3, p.xi, p.alpha});
                           t.expect(n.dim() == static_cast<std::size_t>(l * l), "dim" + at);
                           t.expect(verify_relations(n).empty(), "relations" + at);
                           t.expect(is_simple(n, opt.closure_guard).verdict == Simplicity::Simple, "simple" + at);
                       }
                       t.note(std::to_string(grid().size()) + " parameter points");
                       return t.result();
                   }});
    out.push_back({"smash.lift" + tag, [l, grid, opt] {
                       Tally t;
                       const std::size_t target = static_cast<std::size_t>(pideg_smash(l) * pideg_smash(l));
                       for (const auto& p : grid()) {
                           const MatrixModule n = build_n1(l, p);
                           const MatrixModule a = lift_to_A(n);
                           const std::string at = show({p.lambda3, p.xi, p.alpha});
                           t.expect(verify_relations(a).empty(), "A relations" + at);
                           const MatrixModule back = restrict_to_B(a);
                           t.expect(back.action(Gen::Phi) == n.action(Gen::Phi) && back.action(Gen::Psi) == n.action(Gen::Psi),
                                    "restriction" + at);
                           const auto rep = is_simple(a, opt.closure_guard);
                           t.expect(rep.verdict == Simplicity::Simple, "simple" + at);
                           const std::size_t closure = rep.closure_dim ? *rep.closure_dim : algebra_closure_dim(a, opt.closure_guard);
                           t.expect(closure == target, "closure" + at);
                       }
                       t.note("closure target " + std::to_string(target));
                       return t.result();
                   }});
    out.push_back({"smash.psi_vanishing" + tag, [l, opt] {
                       Tally t;
                       const CycloNum l1 = c(l, 2), l2 = c(l, 3);
                       for (int a = 1; a < l; ++a) {
                           const CycloNum lam3 = q(l, 3) * (q(l, -2 * a) - c(l, 1)) * l1 * l2;
                           const MatrixModule n = build_n1(l, {l1, l2, lam3, c(l, 1), c(l, 1)});
                           t.expect(is_simple(n, opt.closure_guard).verdict == Simplicity::Simple, "a=" + std::to_string(a));
                       }
                       return t.result();
                   }});
    return out;
}

std::vector<Check> property_checks(int l, const SuiteOptions& opt) {
    const std::string tag = "@l=" + std::to_string(l);
    const unsigned seed = opt.seed + static_cast<unsigned>(l);
    std::vector<Check> out;
    out.push_back({"property.field_axioms" + tag, [l, seed] {
                       Tally t;
                       std::mt19937 rng(seed);
                       for (int k = 0; k < 100; ++k) {
                           const CycloNum a = random_num(l, rng), b = random_num(l, rng), d = random_num(l, rng);
                           t.expect((a * b) * d == a * (b * d), "associativity");
                           t.expect(a * (b + d) == a * b + a * d, "distributivity");
                           t.expect(a * b == b * a, "commutativity");
                           t.expect(a.is_zero() || a.inv() * a == c(l, 1), "inverse");
                       }
                       t.note("seed " + std::to_string(seed));
                       return t.result();
                   }});
    out.push_back({"property.normal_form_strategies" + tag, [l, seed] {
                       Tally t;
                       std::mt19937 rng(seed);
                       for (auto name : {PresentationName::Qsaa, PresentationName::Smash, PresentationName::B}) {
                           const Presentation& p = Presentation::get(name, l);
                           for (int k = 0; k < 200; ++k) {
                               const Word w = random_word(p, rng, 8);
                               t.expect(p.normal_form(w) == p.normal_form_by_rewriting(w), std::string(presentation_name(name)));
                           }
                       }
                       t.note("seed " + std::to_string(seed));
                       return t.result();
                   }});
    out.push_back({"property.act_multiplicative" + tag, [l, seed] {
                       Tally t;
                       std::mt19937 rng(seed);
                       for (SimpleType type : kTypes) {
                           const MatrixModule m = build_type(l, type, grid_point(l, type, 1));
                           const Presentation& p = m.algebra();
                           for (int k = 0; k < 30; ++k) {
                               const AlgebraElement u = random_element(p, rng), v = random_element(p, rng);
                               t.expect(act(m, u * v) == act(m, u) * act(m, v), to_string(type));
                           }
                       }
                       t.note("seed " + std::to_string(seed));
                       return t.result();
                   }});
    out.push_back({"property.closure_basis_change" + tag, [l, seed, opt] {
                       Tally t;
                       std::mt19937 rng(seed);
                       for (SimpleType type : kTypes) {
                           const MatrixModule m = build_type(l, type, grid_point(l, type, 2));
                           const MatrixModule conj = conjugate(m, sparse_basis_change(l, m.dim(), rng));
                           t.expect(verify_relations(conj).empty(), std::string(to_string(type)) + " relations");
                           t.expect(algebra_closure_dim(conj, opt.closure_guard) == algebra_closure_dim(m, opt.closure_guard),
                                    to_string(type));
                       }
                       t.note("seed " + std::to_string(seed));
                       return t.result();
                   }});
    return out;
}

std::vector<Check> full_battery(int l, const SuiteOptions& opt) {
    std::vector<Check> all;
    auto add = [&all](std::vector<Check> more) {
        for (auto& c : more) all.push_back(std::move(c));
    };
    add(pideg_checks(l, opt));
    add(reduced_factor_checks());
    add(identity_checks(l, 2 * l));
    add(centrality_suite(l));
    add(construction_checks(l, opt));
    add(isomorphism_checks(l, opt));
    add(classification_checks(l));
    if (l % 2) {
        add(verma_checks(l, 3, opt));
        add(smash_checks(l, opt));
    }
    add(property_checks(l, opt));
    return all;
}

}  // namespace qsaa
