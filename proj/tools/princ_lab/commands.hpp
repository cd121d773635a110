#pragma once

// Subcommand implementations. Each parses all of its inputs before doing
// any work and returns a Report whose claims the rechecker can verify.

#include <algorithm>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "princ/comax.hpp"
#include "princ/idem.hpp"
#include "princ/limitring.hpp"
#include "princ/monoidring.hpp"
#include "princ/polyext.hpp"
#include "princ/pullback.hpp"
#include "princ/quadring.hpp"
#include "princ/sphere.hpp"
#include "princ_lab/rings.hpp"

namespace princ_lab {

inline constexpr const char* kSchema = "princ-lab/report/1";
inline constexpr const char* kVersion = "1.0.0";

enum ExitCode { kOk = 0, kNegative = 1, kInputError = 2, kRecheckMismatch = 3 };

struct Options {
    std::string ring;
    std::string monoid;
    bool group = false;
    bool recheck = false;
    unsigned jobs = 1;
    unsigned m = 3;
    unsigned k = 20;
    unsigned level = 0;
    long bound = 500;
    std::string divisor = "2";
    std::string exclude = "1";
    std::string alpha;
    std::string t, b, beta;
    long p = 2;
    std::vector<std::string> args;
};

inline std::string par(const std::string& s) { return "(" + s + ")"; }

class Report {
   public:
    Report(const std::string& command, json ring) {
        j_["schema"] = kSchema;
        j_["tool"] = {{"name", "princ_lab"}, {"version", kVersion}};
        j_["command"] = command;
        j_["ring"] = std::move(ring);
        j_["result"] = json::object();
        j_["claims"] = json::array();
    }

    json& result() { return j_["result"]; }
    void input(const std::vector<std::string>& in) { j_["input"] = in; }
    void verdict(const std::string& v, int code) {
        j_["verdict"] = v;
        code_ = code;
    }

    void eq(const std::string& lhs, const std::string& rhs, const std::string& note) {
        add({{"kind", "eq"}, {"lhs", lhs}, {"rhs", rhs}, {"note", note}});
    }
    void member(const std::string& e, const std::string& note) { add({{"kind", "member"}, {"element", e}, {"note", note}}); }
    void nonmember(const std::string& e, const std::string& note) {
        add({{"kind", "nonmember"}, {"element", e}, {"note", note}});
    }
    void maximal(const std::string& e, const std::string& note) { add({{"kind", "maximal"}, {"element", e}, {"note", note}}); }
    void nonprincipal(const std::vector<std::string>& gens, const Int& d, const std::string& note) {
        add({{"kind", "nonprincipal"}, {"generators", gens}, {"d", princ::to_string(d)}, {"note", note}});
    }
    /// Claim checked in a different ring from the report's.
    void in_ring(json ring, json claim) {
        claim["ring"] = std::move(ring);
        add(std::move(claim));
    }

    const json& doc() const { return j_; }
    int code() const { return code_; }

   private:
    void add(json c) { j_["claims"].push_back(std::move(c)); }
    json j_;
    int code_ = kOk;
};

inline void need_args(const Options& o, std::size_t n, const std::string& usage) {
    if (o.args.size() != n) throw InputError("expected " + usage);
}

inline std::string orientation_name(princ::Orientation o) {
    return o == princ::Orientation::AOneMinusAInBR ? "a(1-a) = b*r" : "b(1-b) = a*r";
}

template <class C>
std::string pair_relation_lhs(const princ::IdemPair<typename C::Elem>& p) {
    const auto& x = p.orientation == princ::Orientation::AOneMinusAInBR ? p.a : p.b;
    return par(C::str(x)) + "*(1-" + par(C::str(x)) + ")";
}

template <class C>
std::string pair_relation_rhs(const princ::IdemPair<typename C::Elem>& p) {
    const auto& y = p.orientation == princ::Orientation::AOneMinusAInBR ? p.b : p.a;
    return par(C::str(y)) + "*" + par(C::str(p.r));
}

template <class C>
void claim_pair(Report& rep, const princ::IdemPair<typename C::Elem>& p, const std::string& label) {
    rep.eq(pair_relation_lhs<C>(p), pair_relation_rhs<C>(p), label + ": " + orientation_name(p.orientation));
    rep.member(C::str(p.a), label + ": a in R");
    rep.member(C::str(p.b), label + ": b in R");
    rep.member(C::str(p.r), label + ": witness r in R");
}

template <class C>
json pair_json(const princ::IdemPair<typename C::Elem>& p) {
    return {{"a", C::str(p.a)}, {"b", C::str(p.b)}, {"r", C::str(p.r)}, {"orientation", orientation_name(p.orientation)}};
}

/// g = c0*x + c1*y, x = g*q0, y = g*q1 and membership of every coefficient.
template <class C>
void claim_generator(Report& rep, const princ::PrincipalGen<typename C::Elem>& g, const std::string& label) {
    auto s = [](const auto& e) { return C::str(e); };
    rep.eq(s(g.generator), par(s(g.coeffs[0])) + "*" + par(s(g.x)) + "+" + par(s(g.coeffs[1])) + "*" + par(s(g.y)),
           label + ": generator lies in the ideal");
    rep.eq(s(g.x), par(s(g.generator)) + "*" + par(s(g.quotients[0])), label + ": first generator is a multiple");
    rep.eq(s(g.y), par(s(g.generator)) + "*" + par(s(g.quotients[1])), label + ": second generator is a multiple");
    for (const auto* e : {&g.generator, &g.coeffs[0], &g.coeffs[1], &g.quotients[0], &g.quotients[1]})
        rep.member(s(*e), label + ": coefficient in R");
}

template <class C>
json generator_json(const princ::PrincipalGen<typename C::Elem>& g) {
    return {{"generator", C::str(g.generator)},
            {"coefficients", {C::str(g.coeffs[0]), C::str(g.coeffs[1])}},
            {"quotients", {C::str(g.quotients[0]), C::str(g.quotients[1])}}};
}

/// The ideals generated by I and J coincide: each generator of one side is
/// written in terms of the other.
inline void claim_same_ideal(Report& rep, const Int& d, const std::vector<princ::QuadElem>& I,
                             const std::vector<princ::QuadElem>& J, const std::string& label) {
    auto one_way = [&](const std::vector<princ::QuadElem>& from, const std::vector<princ::QuadElem>& to,
                       const std::string& dir) {
        for (const auto& g : from) {
            auto c = princ::express_in_generators(d, to, g);
            if (!c) throw princ::MathError(label + ": " + princ::to_string(g) + " is not in the other ideal");
            std::string rhs;
            for (std::size_t i = 0; i < to.size(); ++i) {
                rhs += (i ? "+" : "") + par(princ::to_string((*c)[i])) + "*" + par(princ::to_string(to[i]));
                rep.member(princ::to_string((*c)[i]), label + ": coefficient in Z[sqrt(d)]");
            }
            rep.eq(princ::to_string(g), rhs, label + ": " + dir);
        }
    };
    one_way(I, J, "left side contained in right side");
    one_way(J, I, "right side contained in left side");
}

inline json hnf_json(const princ::QuadIdeal& I) {
    return {{"a", princ::to_string(I.a())},
            {"b", princ::to_string(I.b())},
            {"c", princ::to_string(I.c())},
            {"norm", princ::to_string(I.norm())},
            {"basis", {princ::to_string(I.basis()[0]), princ::to_string(I.basis()[1])}}};
}

inline std::vector<std::string> quad_strings(const std::vector<princ::QuadElem>& v) {
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(princ::to_string(e));
    return out;
}

// ---------------------------------------------------------------------------
// Ring dispatch

template <class Fn>
Report with_ring(const RingSpec& r, Fn&& fn) {
    using F = RingSpec::Family;
    switch (r.family) {
        case F::Z: return fn(IntRing{});
        case F::Quadratic: return fn(QuadRing{r.d});
        case F::QX: return fn(QXRing{});
        case F::Pullback: return fn(PullbackRing{});
        case F::Monoid: return fn(MonoidRingCtx{r.monoid});
        case F::Limit: return r.limit_over_q ? fn(LimitRing<Rat>{}) : fn(LimitRing<Int>{});
        case F::Sphere: return fn(SphereRing{});
    }
    throw InputError("unsupported ring");
}

inline RingSpec ring_or(const Options& o, const std::string& fallback, const std::string& monoid_fallback = "") {
    return parse_ring(o.ring.empty() ? fallback : o.ring, o.monoid.empty() ? monoid_fallback : o.monoid, o.group);
}

inline QuadRing require_imaginary_quadratic(const RingSpec& r, const std::string& cmd) {
    if (r.family != RingSpec::Family::Quadratic) throw InputError(cmd + " needs --ring Z[sqrt(d)]");
    if (r.d >= 0) throw InputError(cmd + " needs d < 0 (imaginary quadratic orders only)");
    return QuadRing{r.d};
}

// ---------------------------------------------------------------------------
// idem

template <class C>
void complement_claims(Report& rep, const princ::IdemPair<typename C::Elem>& p) {
    using E = typename C::Elem;
    if constexpr (std::is_same_v<E, princ::QuadElem>) {
        const E& target = p.orientation == princ::Orientation::AOneMinusAInBR ? p.b : p.a;
        if (target.is_zero()) {
            rep.result()["complement"] = "skipped: the target ideal is zero";
            return;
        }
        auto c = princ::complement_identity(p);
        Int d = c.product->d();
        std::vector<E> prods;
        for (const auto& x : c.first)
            for (const auto& y : c.second) prods.push_back((x * y).with_d(d));
        claim_same_ideal(rep, d, prods, {target.with_d(d)}, "complement identity");
        rep.result()["complement"] = {{"first", quad_strings({c.first[0], c.first[1]})},
                                      {"second", quad_strings({c.second[0], c.second[1]})},
                                      {"target", C::str(target)},
                                      {"product", hnf_json(*c.product)}};
    } else if constexpr (requires { princ::complement_identity(p); }) {
        auto c = princ::complement_identity(p);
        claim_generator<C>(rep, *c.first_gen, "first factor");
        claim_generator<C>(rep, *c.second_gen, "second factor");
        rep.eq(par(C::str(c.first_gen->generator)) + "*" + par(C::str(c.second_gen->generator)),
               par(C::str(c.target)) + "*" + par(C::str(*c.unit)), "complement identity: g1*g2 = target*unit");
        rep.eq(par(C::str(*c.unit)) + "*" + par(C::str(*c.unit_inverse)), "1", "complement identity: unit");
        rep.member(C::str(*c.unit), "unit in R");
        rep.member(C::str(*c.unit_inverse), "unit inverse in R");
        rep.result()["complement"] = {{"first", generator_json<C>(*c.first_gen)},
                                      {"second", generator_json<C>(*c.second_gen)},
                                      {"target", C::str(c.target)},
                                      {"unit", C::str(*c.unit)}};
    }
}

inline Report idem_check(const Options& o) {
    need_args(o, 2, "two elements A B");
    return with_ring(ring_or(o, "Z"), [&](const auto& ctx) {
        using C = std::decay_t<decltype(ctx)>;
        auto a = ctx.parse(o.args[0]);
        auto b = ctx.parse(o.args[1]);
        Report rep("idem check", ctx.descriptor());
        rep.input(o.args);
        auto p = princ::is_idempotent_pair(a, b);
        if (!p) {
            rep.result() = {{"a", C::str(a)}, {"b", C::str(b)}};
            rep.verdict("not-idempotent", kNegative);
            return rep;
        }
        rep.result() = pair_json<C>(*p);
        claim_pair<C>(rep, *p, "pair");
        complement_claims<C>(rep, *p);
        rep.verdict("idempotent-pair", kOk);
        return rep;
    });
}

inline Report idem_matrix(const Options& o) {
    need_args(o, 2, "two elements A B");
    return with_ring(ring_or(o, "Z"), [&](const auto& ctx) {
        using C = std::decay_t<decltype(ctx)>;
        auto a = ctx.parse(o.args[0]);
        auto b = ctx.parse(o.args[1]);
        Report rep("idem matrix", ctx.descriptor());
        rep.input(o.args);
        auto p = princ::is_idempotent_pair(a, b);
        if (!p) {
            rep.result() = {{"a", C::str(a)}, {"b", C::str(b)}};
            rep.verdict("not-idempotent", kNegative);
            return rep;
        }
        auto M = princ::idem_matrix(*p);
        json rows = json::array();
        for (std::size_t i = 0; i < 2; ++i) {
            rows.push_back({C::str(M[i][0]), C::str(M[i][1])});
            for (std::size_t j = 0; j < 2; ++j) {
                rep.eq(par(C::str(M[i][0])) + "*" + par(C::str(M[0][j])) + "+" + par(C::str(M[i][1])) + "*" +
                           par(C::str(M[1][j])),
                       C::str(M[i][j]), "M*M = M at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                rep.member(C::str(M[i][j]), "entry in R");
            }
        }
        rep.result() = {{"pair", pair_json<C>(*p)}, {"matrix", rows}};
        rep.verdict("idempotent-matrix", kOk);
        return rep;
    });
}

inline Report idem_from_ideal(const Options& o) {
    need_args(o, 2, "two generators A B");
    RingSpec r = ring_or(o, "Z");
    if (r.family == RingSpec::Family::Z) {
        IntRing ctx;
        Int a = ctx.parse(o.args[0]), b = ctx.parse(o.args[1]);
        Report rep("idem from-ideal", ctx.descriptor());
        rep.input(o.args);
        auto cert = princ::inverse_bezout(a, b);
        auto p = princ::pair_from_invertible(cert);
        rep.eq(par(princ::to_string(cert.lambda)) + "*" + par(ctx.str(a)) + "+" + par(princ::to_string(cert.mu)) + "*" +
                   par(ctx.str(b)),
               "1", "lambda*a + mu*b = 1");
        claim_pair<IntRing>(rep, p, "pair");
        auto g = princ::principal_generator(p.a, p.b);
        claim_generator<IntRing>(rep, g, "pair ideal");
        rep.result() = {{"lambda", princ::to_string(cert.lambda)},
                        {"mu", princ::to_string(cert.mu)},
                        {"pair", pair_json<IntRing>(p)},
                        {"pair_ideal", generator_json<IntRing>(g)}};
        rep.verdict("principal", kOk);
        return rep;
    }
    QuadRing ctx = require_imaginary_quadratic(r, "idem from-ideal");
    auto a = ctx.parse(o.args[0]), b = ctx.parse(o.args[1]);
    Report rep("idem from-ideal", ctx.descriptor());
    rep.input(o.args);
    auto w = princ::idempotent_pair_from_ideal(a, b);
    rep.eq(par(princ::to_string(w.cert.lambda)) + "*" + par(ctx.str(a)) + "+" + par(princ::to_string(w.cert.mu)) + "*" +
               par(ctx.str(b)),
           "1", "lambda*a + mu*b = 1");
    claim_pair<QuadRing>(rep, w.pair, "pair");
    auto source = princ::ideal_is_principal(w.source);
    json res = {{"lambda", princ::to_string(w.cert.lambda)},
                {"mu", princ::to_string(w.cert.mu)},
                {"source_ideal", hnf_json(w.source)},
                {"source_principal", source.kind == princ::PrincipalityVerdict::Kind::Principal},
                {"pair", pair_json<QuadRing>(w.pair)}};
    const auto& v = w.verdict;
    std::vector<std::string> gens{ctx.str(w.pair.a), ctx.str(w.pair.b)};
    if (v.kind == princ::PrincipalityVerdict::Kind::Principal) {
        princ::PrincipalGen<princ::QuadElem> g{w.pair.a, w.pair.b, *v.generator, {v.membership[0], v.membership[1]},
                                               {v.quotients[0], v.quotients[1]}};
        claim_generator<QuadRing>(rep, g, "pair ideal");
        res["pair_ideal"] = generator_json<QuadRing>(g);
        rep.verdict("principal", kOk);
    } else {
        rep.nonprincipal(gens, r.d, "the pair generates a non-principal ideal");
        res["pair_ideal"] = {{"norm", princ::to_string(v.norm)}, {"norm_solutions", v.transcript.size()}};
        rep.verdict("non-principal", kNegative);
    }
    rep.result() = res;
    return rep;
}

// ---------------------------------------------------------------------------
// ideal (imaginary quadratic orders)

inline json transcript_json(const princ::PrincipalityVerdict& v) {
    json t = json::array();
    for (const auto& c : v.transcript)
        t.push_back({{"element", princ::to_string(c.element)}, {"in_ideal", c.in_ideal}, {"generates", c.generates}});
    return t;
}

/// omega = (1+sqrt(d))/2 maps I into itself: I is not invertible in Z[sqrt(d)].
inline void claim_extra_multiplier(Report& rep, const princ::QuadIdeal& I, const princ::QuadFieldElem& omega) {
    std::string w = princ::to_string(omega);
    for (const auto& g : I.generators()) {
        auto e = (omega * princ::QuadFieldElem(g)).to_integral();
        auto c = princ::express_in_generators(I.d(), I.generators(), *e);
        std::string rhs;
        for (std::size_t i = 0; i < I.generators().size(); ++i)
            rhs += (i ? "+" : "") + par(princ::to_string((*c)[i])) + "*" + par(princ::to_string(I.generators()[i]));
        rep.eq(par(w) + "*" + par(princ::to_string(g)), rhs, "omega*I is contained in I");
        for (const auto& x : *c) rep.member(princ::to_string(x), "coefficient in Z[sqrt(d)]");
    }
    rep.nonmember(w, "omega is not in Z[sqrt(d)]");
}

inline Report ideal_principal(const Options& o) {
    need_args(o, 2, "two generators A B");
    QuadRing ctx = require_imaginary_quadratic(ring_or(o, "Z[sqrt(-5)]"), "ideal principal");
    auto a = ctx.parse(o.args[0]), b = ctx.parse(o.args[1]);
    Report rep("ideal principal", ctx.descriptor());
    rep.input(o.args);
    auto I = princ::ideal_from_pair(a, b);
    auto v = princ::ideal_is_principal(I);
    json res = {{"ideal", hnf_json(I)}, {"norm_solutions", transcript_json(v)}};
    using K = princ::PrincipalityVerdict::Kind;
    if (v.kind == K::Principal) {
        princ::PrincipalGen<princ::QuadElem> g{I.generators()[0], I.generators()[1], *v.generator,
                                               {v.membership[0], v.membership[1]}, {v.quotients[0], v.quotients[1]}};
        claim_generator<QuadRing>(rep, g, "ideal");
        res["generator"] = generator_json<QuadRing>(g);
        rep.verdict("principal", kOk);
    } else if (v.kind == K::NonPrincipal) {
        rep.nonprincipal(quad_strings(I.generators()), ctx.d, "no element of norm N(I) generates I");
        rep.verdict("non-principal", kNegative);
    } else {
        claim_extra_multiplier(rep, I, *v.extra_multiplier);
        res["extra_multiplier"] = princ::to_string(*v.extra_multiplier);
        rep.verdict("not-invertible", kNegative);
    }
    rep.result() = res;
    return rep;
}

inline Report ideal_mul(const Options& o) {
    need_args(o, 4, "four generators A B C D for (A, B)(C, D)");
    QuadRing ctx = require_imaginary_quadratic(ring_or(o, "Z[sqrt(-5)]"), "ideal mul");
    std::vector<princ::QuadElem> g;
    for (const auto& s : o.args) g.push_back(ctx.parse(s));
    Report rep("ideal mul", ctx.descriptor());
    rep.input(o.args);
    auto I = princ::ideal_from_pair(g[0], g[1]);
    auto J = princ::ideal_from_pair(g[2], g[3]);
    auto P = princ::ideal_mul(I, J);
    std::vector<princ::QuadElem> prods{g[0] * g[2], g[0] * g[3], g[1] * g[2], g[1] * g[3]};
    auto bs = P.basis();
    claim_same_ideal(rep, ctx.d, prods, {bs[0], bs[1]}, "product");
    rep.result() = {{"first", hnf_json(I)}, {"second", hnf_json(J)}, {"product", hnf_json(P)}};
    rep.verdict("product", kOk);
    return rep;
}

inline Report ideal_invertible(const Options& o) {
    need_args(o, 2, "two generators A B");
    QuadRing ctx = require_imaginary_quadratic(ring_or(o, "Z[sqrt(-5)]"), "ideal invertible");
    auto a = ctx.parse(o.args[0]), b = ctx.parse(o.args[1]);
    Report rep("ideal invertible", ctx.descriptor());
    rep.input(o.args);
    auto I = princ::ideal_from_pair(a, b);
    auto inv = princ::ideal_is_invertible(I);
    json res = {{"ideal", hnf_json(I)}};
    if (inv.invertible) {
        const auto& J = *inv.certificate;
        std::vector<princ::QuadElem> prods;
        for (const auto& x : I.generators())
            for (const auto& y : J.basis()) prods.push_back(x * y);
        claim_same_ideal(rep, ctx.d, prods, {princ::QuadElem(I.norm(), 0, ctx.d)}, "I * conj(I) = (N(I))");
        res["inverse_times_norm"] = hnf_json(J);
        rep.verdict("invertible", kOk);
    } else {
        claim_extra_multiplier(rep, I, *inv.extra_multiplier);
        res["extra_multiplier"] = princ::to_string(*inv.extra_multiplier);
        rep.verdict("not-invertible", kNegative);
    }
    rep.result() = res;
    return rep;
}

inline std::string splitting_name(princ::Splitting s) {
    switch (s) {
        case princ::Splitting::Ramified: return "ramified";
        case princ::Splitting::Split: return "split";
        case princ::Splitting::Inert: return "inert";
    }
    return "?";
}

inline Report ideal_factor(const Options& o) {
    need_args(o, 1, "one element");
    QuadRing ctx = require_imaginary_quadratic(ring_or(o, "Z[sqrt(-5)]"), "ideal factor");
    auto a = ctx.parse(o.args[0]);
    Report rep("ideal factor", ctx.descriptor());
    rep.input(o.args);
    auto f = princ::factor_principal(a);
    json primes = json::array();
    for (const auto& pp : f)
        primes.push_back({{"p", princ::to_string(pp.prime.p)},
                          {"splitting", splitting_name(pp.prime.splitting)},
                          {"ideal", hnf_json(pp.prime.ideal)},
                          {"exponent", pp.exponent}});
    auto P = princ::ideal_product(ctx.d, f);
    auto bs = P.basis();
    claim_same_ideal(rep, ctx.d, {a}, {bs[0], bs[1]}, "(a) = product of prime powers");
    rep.result() = {{"element", ctx.str(a)}, {"primes", primes}, {"product", hnf_json(P)}};
    rep.verdict("factored", kOk);
    return rep;
}

// ---------------------------------------------------------------------------
// comax

template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += jobs) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

template <class C>
json factorization_json(const princ::ComaxFactorization<typename C::Elem>& f) {
    auto labels = [&](princ::BlockMask m) {
        json out = json::array();
        for (std::size_t i = 0; i < f.support.size(); ++i)
            if (m >> i & 1u) out.push_back(f.support[i]);
        return out;
    };
    json blocks = json::array(), certs = json::array(), transcripts = json::array();
    for (std::size_t i = 0; i < f.factors.size(); ++i)
        blocks.push_back({{"atoms", labels(f.blocks[i])}, {"factor", C::str(f.factors[i])}});
    for (std::size_t i = 0; i < f.certs.size(); ++i)
        certs.push_back({{"pair", {f.pairs[i].first, f.pairs[i].second}},
                         {"s", C::str(f.certs[i].s)},
                         {"t", C::str(f.certs[i].t)}});
    for (const auto& t : f.transcripts) {
        json splits = json::array();
        for (const auto& s : t.splits)
            splits.push_back({{"first", labels(s.first)},
                              {"second", labels(s.second)},
                              {"first_principal", s.first_principal},
                              {"second_principal", s.second_principal}});
        transcripts.push_back({{"block", labels(t.block)}, {"splits", splits}});
    }
    return {{"unit", C::str(f.unit)}, {"blocks", blocks}, {"certificates", certs}, {"pseudo_irreducibility", transcripts}};
}

template <class C>
void claim_factorization(Report& rep, const princ::ComaxFactorization<typename C::Elem>& f, const std::string& label) {
    std::string prod = par(C::str(f.unit));
    for (const auto& x : f.factors) prod += "*" + par(C::str(x));
    rep.eq(C::str(f.input), prod, label + ": input = unit * product of factors");
    for (const auto& x : f.factors) rep.member(C::str(x), label + ": factor in R");
    for (std::size_t i = 0; i < f.certs.size(); ++i) {
        const auto& c = f.certs[i];
        rep.eq(par(C::str(c.s)) + "*" + par(C::str(c.x)) + "+" + par(C::str(c.t)) + "*" + par(C::str(c.y)), "1",
               label + ": factors " + std::to_string(f.pairs[i].first) + " and " + std::to_string(f.pairs[i].second) +
                   " are comaximal");
        rep.member(C::str(c.s), label + ": Bezout coefficient in R");
        rep.member(C::str(c.t), label + ": Bezout coefficient in R");
    }
}

template <class C>
std::vector<princ::ComaxFactorization<typename C::Elem>> all_factorizations(const typename C::Elem& x) {
    if constexpr (std::is_same_v<C, IntRing>)
        return {princ::comax_factor_int(x)};
    else
        return princ::enumerate_complete_factorizations(x);
}

inline Report comax_run(const Options& o, bool unique) {
    if (o.args.empty()) throw InputError("expected at least one element");
    RingSpec r = ring_or(o, "Z");
    std::string cmd = unique ? "comax unique" : "comax factor";
    auto run = [&](const auto& ctx) {
        using C = std::decay_t<decltype(ctx)>;
        using E = typename C::Elem;
        std::vector<E> xs;
        for (const auto& s : o.args) xs.push_back(ctx.parse(s));
        Report rep(cmd, ctx.descriptor());
        rep.input(o.args);
        std::vector<std::vector<princ::ComaxFactorization<E>>> found(xs.size());
        parallel_for(xs.size(), o.jobs, [&](std::size_t i) { found[i] = all_factorizations<C>(xs[i]); });
        json elems = json::array();
        bool all_unique = true;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const auto& fs = found[i];
            if (fs.empty()) throw princ::MathError("no complete comaximal factorization of " + C::str(xs[i]));
            json e = {{"element", C::str(xs[i])}, {"support", fs.front().support}};
            if (unique) {
                json list = json::array();
                for (std::size_t k = 0; k < fs.size(); ++k) {
                    list.push_back(factorization_json<C>(fs[k]));
                    claim_factorization<C>(rep, fs[k], C::str(xs[i]) + " #" + std::to_string(k));
                }
                e["factorizations"] = list;
                e["count"] = fs.size();
                e["unique"] = fs.size() == 1;
                all_unique = all_unique && fs.size() == 1;
            } else {
                e["factorization"] = factorization_json<C>(fs.front());
                claim_factorization<C>(rep, fs.front(), C::str(xs[i]));
            }
            elems.push_back(e);
        }
        rep.result() = {{"elements", elems}};
        if (!unique)
            rep.verdict("factored", kOk);
        else
            rep.verdict(all_unique ? "unique" : "non-unique", all_unique ? kOk : kNegative);
        return rep;
    };
    if (r.family == RingSpec::Family::Z) return run(IntRing{});
    return run(require_imaginary_quadratic(r, cmd));
}

inline Report comax_hunt(const Options& o) {
    if (!o.args.empty()) throw InputError("comax hunt takes no positional arguments; use --bound N");
    if (o.bound < 2) throw InputError("--bound must be at least 2");
    RingSpec r = ring_or(o, "Z[sqrt(-5)]");
    auto finish = [&](auto ctx, const auto& w) {
        using C = decltype(ctx);
        Report rep("comax hunt", ctx.descriptor());
        rep.input({std::to_string(o.bound)});
        json res = {{"bound", std::to_string(o.bound)}};
        if (!w) {
            rep.result() = res;
            rep.verdict("unique-up-to-bound", kOk);
            return rep;
        }
        res["element"] = C::str(w->element);
        res["scanned"] = princ::to_string(w->elements_scanned);
        json list = json::array();
        for (std::size_t k = 0; k < w->factorizations.size(); ++k) {
            list.push_back(factorization_json<C>(w->factorizations[k]));
            claim_factorization<C>(rep, w->factorizations[k], "witness #" + std::to_string(k));
        }
        res["factorizations"] = list;
        if constexpr (std::is_same_v<C, QuadRing>) res["norm"] = princ::to_string(w->element.norm());
        rep.result() = res;
        rep.verdict("non-unique", kNegative);
        return rep;
    };
    if (r.family == RingSpec::Family::Z) return finish(IntRing{}, princ::find_nonunique_witness_int(o.bound));
    QuadRing ctx = require_imaginary_quadratic(r, "comax hunt");
    return finish(ctx, princ::find_nonunique_witness(ctx.d, o.bound));
}

// ---------------------------------------------------------------------------
// pullback

inline Report pullback_reduce(const Options& o) {
    need_args(o, 2, "two elements A B in Y");
    RingSpec r = ring_or(o, "pullback:Z");
    if (r.family != RingSpec::Family::Pullback) throw InputError("pullback reduce needs --ring pullback:Z");
    PullbackRing ctx;
    auto a = ctx.parse(o.args[0]), b = ctx.parse(o.args[1]);
    Report rep("pullback reduce", ctx.descriptor());
    rep.input(o.args);
    auto p = princ::is_idempotent_pair(a, b);
    if (!p) {
        rep.result() = {{"a", ctx.str(a)}, {"b", ctx.str(b)}};
        rep.verdict("not-idempotent", kNegative);
        return rep;
    }
    auto red = princ::pb_reduce_idem_pair(p->a, p->b, p->r);
    claim_pair<PullbackRing>(rep, *p, "pair");
    json res = {{"pair", pair_json<PullbackRing>(*p)},
                {"case", red.proof_case},
                {"a_in_M", a.in_maximal_ideal()},
                {"b_in_M", b.in_maximal_ideal()}};
    if (red.residues)
        res["residues"] = {princ::to_string((*red.residues)[0]), princ::to_string((*red.residues)[1]),
                           princ::to_string((*red.residues)[2])};
    if (!red.evidence) throw princ::MathError("reduction produced no generator over Z");
    claim_generator<PullbackRing>(rep, *red.evidence, "ideal (a, b)");
    res["generator"] = generator_json<PullbackRing>(*red.evidence);
    rep.result() = res;
    rep.verdict("principal", kOk);
    return rep;
}

inline Report pullback_nonufd(const Options& o) {
    if (o.args.size() > 1) throw InputError("expected at most one element z of M (default Y)");
    RingSpec r = ring_or(o, "pullback:Z");
    if (r.family != RingSpec::Family::Pullback) throw InputError("pullback nonufd needs --ring pullback:Z");
    PullbackRing ctx;
    auto z = ctx.parse(o.args.empty() ? "Y" : o.args[0]);
    Int d = IntRing{}.parse(o.divisor);
    if (o.k < 1 || o.k > 200) throw InputError("--k must be in 1..200");
    Report rep("pullback nonufd", ctx.descriptor());
    rep.input({ctx.str(z)});
    auto chain = princ::pb_nonufd_chain(z, d, o.k);
    json list = json::array();
    for (unsigned k = 1; k <= o.k; ++k) {
        const auto& e = chain[k - 1];
        list.push_back(ctx.str(e));
        rep.eq(par(princ::to_string(d)) + "^" + std::to_string(k) + "*" + par(ctx.str(e)), ctx.str(z),
               "d^" + std::to_string(k) + " divides z");
        rep.maximal(ctx.str(e), "z/d^" + std::to_string(k) + " lies in M, so it is a nonunit of R");
    }
    rep.result() = {{"z", ctx.str(z)}, {"d", princ::to_string(d)}, {"quotients", list}};
    rep.verdict("infinite-divisor-chain", kOk);
    return rep;
}

// ---------------------------------------------------------------------------
// mring

inline MonoidRingCtx monoid_ctx(const Options& o, const std::string& cmd) {
    RingSpec r = ring_or(o, "Q[X;S]", "p-div:2");
    if (r.family != RingSpec::Family::Monoid) throw InputError(cmd + " needs --ring D[X;S]");
    return MonoidRingCtx{r.monoid};
}

inline Rat parse_exponent(const std::string& s, const std::string& what) {
    try {
        return eval_rational(parse_expr(s));
    } catch (const ParseError& e) {
        throw ElementError(s, ParseError(e.pos, what + ": " + e.what()));
    }
}

inline void claim_cert(Report& rep, const MonoidRingCtx&, const princ::ComaxCert<princ::MonoidElem>& c,
                       const std::string& label) {
    using C = MonoidRingCtx;
    rep.eq(par(C::str(c.s)) + "*" + par(C::str(c.x)) + "+" + par(C::str(c.t)) + "*" + par(C::str(c.y)), "1",
           label + ": comaximal");
    rep.member(C::str(c.s), label + ": coefficient in D[X;S]");
    rep.member(C::str(c.t), label + ": coefficient in D[X;S]");
}

inline json cert_json(const princ::ComaxCert<princ::MonoidElem>& c) {
    using C = MonoidRingCtx;
    return {{"x", C::str(c.x)}, {"y", C::str(c.y)}, {"s", C::str(c.s)}, {"t", C::str(c.t)}};
}

inline std::string one_minus_x(const Rat& s) { return "1-X^(" + princ::to_string(s) + ")"; }

inline Report mring_split(const Options& o) {
    need_args(o, 2, "S-exponent s and integer n");
    MonoidRingCtx ctx = monoid_ctx(o, "mring split");
    Rat s = parse_exponent(o.args[0], "exponent");
    Int n = princ::parse_int(o.args[1]);
    Report rep("mring split", ctx.descriptor());
    rep.input(o.args);
    auto sp = princ::mr_split(ctx.ring, s, n);
    using C = MonoidRingCtx;
    rep.eq(par(C::str(sp.f1)) + "*" + par(C::str(sp.f2)), one_minus_x(s), "1 - X^s = f1*f2");
    rep.eq(C::str(sp.f2), par(C::str(sp.f1)) + "*" + par(C::str(sp.q)) + "+" + princ::to_string(n), "f2 = f1*q + n");
    for (const auto* e : {&sp.f1, &sp.f2, &sp.q}) rep.member(C::str(*e), "element of D[X;S]");
    claim_cert(rep, ctx, sp.cert, "f1, f2");
    rep.result() = {{"s", princ::to_string(s)}, {"n", princ::to_string(n)}, {"t", princ::to_string(sp.t)},
                    {"f1", C::str(sp.f1)},     {"f2", C::str(sp.f2)},     {"q", C::str(sp.q)},
                    {"certificate", cert_json(sp.cert)}};
    rep.verdict("split", kOk);
    return rep;
}

inline Report mring_chain(const Options& o) {
    if (o.args.size() > 1) throw InputError("expected at most one exponent s (default 1)");
    MonoidRingCtx ctx = monoid_ctx(o, "mring chain");
    Rat s = o.args.empty() ? Rat(1) : parse_exponent(o.args[0], "exponent");
    if (o.m < 1 || o.m > 64) throw InputError("--m must be in 1..64");
    Report rep("mring chain", ctx.descriptor());
    rep.input({princ::to_string(s)});
    auto ch = princ::mr_comax_chain(ctx.ring, s, o.m);
    using C = MonoidRingCtx;
    std::string prod;
    json factors = json::array(), certs = json::array();
    for (const auto& f : ch.factors) {
        prod += (prod.empty() ? "" : "*") + par(C::str(f));
        factors.push_back(C::str(f));
        rep.member(C::str(f), "factor in D[X;S]");
    }
    rep.eq(prod, one_minus_x(s), "product of the chain is 1 - X^s");
    for (std::size_t i = 0; i < ch.certs.size(); ++i) {
        std::string lab = "factors " + std::to_string(ch.pairs[i].first) + ", " + std::to_string(ch.pairs[i].second);
        claim_cert(rep, ctx, ch.certs[i], lab);
        json c = cert_json(ch.certs[i]);
        c["pair"] = {ch.pairs[i].first, ch.pairs[i].second};
        certs.push_back(c);
    }
    rep.result() = {{"s", princ::to_string(s)}, {"p", princ::to_string(ch.p)}, {"m", o.m},
                    {"factors", factors},       {"certificates", certs}};
    rep.verdict("comaximal-chain", kOk);
    return rep;
}

inline Report mring_juett(const Options& o) {
    if (!o.args.empty()) throw InputError("mring juett takes --t, --b, --p and --beta");
    if (o.t.empty() || o.b.empty() || o.beta.empty()) throw InputError("mring juett needs --t, --b and --beta");
    MonoidRingCtx ctx = monoid_ctx(o, "mring juett");
    Rat t = parse_exponent(o.t, "--t"), b = parse_exponent(o.b, "--b"), beta = parse_exponent(o.beta, "--beta");
    Report rep("mring juett", ctx.descriptor());
    rep.input({o.t, o.b, std::to_string(o.p), o.beta});
    auto js = princ::juett_split(ctx.ring, t, b, Int(o.p), beta);
    using C = MonoidRingCtx;
    rep.eq(C::str(js.lhs), par(princ::to_string(b)) + "*" + par(C::str(js.f1)) + "*" + par(C::str(js.f2)),
           "X^t - b = b*f1*f2");
    for (const auto* e : {&js.z, &js.f1, &js.f2}) rep.member(C::str(*e), "element of D[X;S]");
    claim_cert(rep, ctx, js.cert, "f1, f2");
    rep.result() = {{"t", princ::to_string(t)},   {"b", princ::to_string(b)},   {"p", std::to_string(o.p)},
                    {"beta", princ::to_string(beta)}, {"z", C::str(js.z)},        {"lhs", C::str(js.lhs)},
                    {"f1", C::str(js.f1)},        {"f2", C::str(js.f2)},        {"certificate", cert_json(js.cert)}};
    rep.verdict("split", kOk);
    return rep;
}

// ---------------------------------------------------------------------------
// limitring

inline Report limitring_chain(const Options& o) {
    if (!o.args.empty()) throw InputError("limitring chain takes --m M only");
    if (o.m < 2 || o.m > 24) throw InputError("--m must be in 2..24");
    RingSpec r = ring_or(o, "limitring:Q");
    if (r.family != RingSpec::Family::Limit) throw InputError("limitring chain needs --ring limitring:Q or limitring:Z");
    auto run = [&](auto ctx) {
        using C = decltype(ctx);
        using Coef = std::conditional_t<C::over_q, Rat, Int>;
        Report rep("limitring chain", ctx.descriptor());
        rep.input({std::to_string(o.m)});
        auto ch = princ::lr_chain<Coef>(o.m);
        std::string prod;
        json factors = json::array(), certs = json::array();
        for (const auto& f : ch.factors) {
            prod += (prod.empty() ? "" : "*") + par(C::str(f));
            factors.push_back(C::str(f));
            rep.member(C::str(f), "factor in R");
        }
        rep.eq(prod, "x_1", "x_1 = x_m (1+x_2)...(1+x_m)");
        for (std::size_t i = 0; i < ch.certs.size(); ++i) {
            const auto& c = ch.certs[i];
            rep.eq(par(C::str(c.s)) + "*" + par(C::str(c.x)) + "+" + par(C::str(c.t)) + "*" + par(C::str(c.y)), "1",
                   "factors " + std::to_string(ch.pairs[i].first) + ", " + std::to_string(ch.pairs[i].second) +
                       " are comaximal");
            rep.member(C::str(c.s), "coefficient in R");
            rep.member(C::str(c.t), "coefficient in R");
            certs.push_back({{"pair", {ch.pairs[i].first, ch.pairs[i].second}}, {"s", C::str(c.s)}, {"t", C::str(c.t)}});
        }
        rep.result() = {{"m", o.m}, {"factors", factors}, {"certificates", certs}};
        rep.verdict("comaximal-chain", kOk);
        return rep;
    };
    return r.limit_over_q ? run(LimitRing<Rat>{}) : run(LimitRing<Int>{});
}

inline Report limitring_eval(const Options& o) {
    need_args(o, 1, "one expression in x_1, x_2, ...");
    RingSpec r = ring_or(o, "limitring:Q");
    if (r.family != RingSpec::Family::Limit) throw InputError("limitring eval needs --ring limitring:Q or limitring:Z");
    auto run = [&](auto ctx) {
        using C = decltype(ctx);
        auto e = ctx.parse(o.args[0]);
        Report rep("limitring eval", ctx.descriptor());
        rep.input(o.args);
        unsigned level = std::max(o.level, e.level());
        if (level > 64) throw InputError("--level must be at most 64");
        auto lifted = princ::lr_lift(e, level);
        rep.eq(o.args[0], C::str(lifted), "normal form at level " + std::to_string(level));
        rep.member(C::str(lifted), "element of R");
        rep.result() = {{"level", level}, {"normal_form", C::str(lifted)}};
        rep.verdict("ok", kOk);
        return rep;
    };
    return r.limit_over_q ? run(LimitRing<Rat>{}) : run(LimitRing<Int>{});
}

// ---------------------------------------------------------------------------
// polyext

inline princ::SubringDesc parse_subring(const std::string& text) {
    std::set<unsigned> ex;
    if (!trim(text).empty())
        for (const auto& k : prime_list(text, "--exclude")) {
            if (k < 0 || k > 1000) throw InputError("--exclude degrees must be in 0..1000");
            ex.insert(static_cast<unsigned>(k));
        }
    return princ::SubringDesc(ex);
}

inline princ::PolyY parse_alpha(const PolyextRing& ctx, const std::string& s) {
    auto f = ctx.parse(s);
    if (f.degree() > 0) throw ElementError(s, ParseError(0, "alpha must lie in Q[y] (no X)"));
    return f.constant_term();
}

inline void claim_seminormal(Report& rep, const PolyextRing& ctx, const princ::SeminormalCheck& sn) {
    using C = PolyextRing;
    (void)ctx;
    rep.member(C::str(princ::PolyXY(sn.alpha2)), "alpha^2 in D");
    rep.member(C::str(princ::PolyXY(sn.alpha3)), "alpha^3 in D");
    rep.nonmember(C::str(princ::PolyXY(sn.alpha)), "alpha not in D");
}

inline Report polyext_witness(const Options& o) {
    need_args(o, 1, "one element alpha of Q[y]");
    PolyextRing ctx{parse_subring(o.exclude)};
    auto alpha = parse_alpha(ctx, o.args[0]);
    Report rep("polyext witness", ctx.descriptor());
    rep.input(o.args);
    auto sn = princ::seminormal_check(alpha, ctx.D);
    rep.result() = {{"subring", ctx.D.name()},
                    {"alpha", princ::to_string(sn.alpha, "y")},
                    {"alpha^2", princ::to_string(sn.alpha2, "y")},
                    {"alpha^3", princ::to_string(sn.alpha3, "y")},
                    {"alpha_in_D", sn.alpha_in},
                    {"alpha2_in_D", sn.alpha2_in},
                    {"alpha3_in_D", sn.alpha3_in}};
    if (sn.witness()) {
        claim_seminormal(rep, ctx, sn);
        rep.verdict("not-seminormal", kOk);
    } else {
        rep.verdict("not-a-witness", kNegative);
    }
    return rep;
}

inline Report polyext_counterexample(const Options& o) {
    if (!o.args.empty()) throw InputError("polyext counterexample takes --alpha EXPR");
    PolyextRing ctx{parse_subring(o.exclude)};
    auto alpha = parse_alpha(ctx, o.alpha.empty() ? "y" : o.alpha);
    Report rep("polyext counterexample", ctx.descriptor());
    rep.input({o.alpha.empty() ? "y" : o.alpha});
    const auto ce = princ::nonprinc_pair_from_alpha(alpha, ctx.D);
    using C = PolyextRing;
    auto s = [](const princ::PolyXY& f) { return C::str(f); };
    const auto& q = ce.eq1;
    rep.eq(par(s(q.s)) + "*" + par(s(q.x)) + "+" + par(s(q.t)) + "*" + par(s(q.y)), "1",
           "(1+alpha^2X^2)(1-alpha^2X^2) + alpha^4X^4 = 1");
    rep.eq(par(s(ce.u)) + "*(1-" + par(s(ce.u)) + ")", par(s(ce.v)) + "*" + par(s(ce.r)), "u(1-u) = v*r");
    rep.eq(s(ce.u), par(s(ce.b)) + "*" + par(s(ce.u_over_b)), "u is a multiple of b = 1 + alpha X");
    rep.eq(s(ce.v), par(s(ce.b)) + "*" + par(s(ce.v_over_b)), "v is a multiple of b = 1 + alpha X");
    std::string a = par(princ::to_string(alpha, "y"));
    rep.eq(s(ce.u), "1-" + a + "^4*X^4", "u = 1 - alpha^4 X^4");
    for (const auto* e : {&ce.u, &ce.v, &ce.r, &q.x, &q.s, &q.t}) rep.member(s(*e), "element of D[X]");
    claim_seminormal(rep, ctx, princ::seminormal_check(alpha, ctx.D));
    rep.result() = {{"subring", ctx.D.name()},
                    {"alpha", princ::to_string(alpha, "y")},
                    {"a", s(ce.a)},
                    {"b", s(ce.b)},
                    {"u", s(ce.u)},
                    {"v", s(ce.v)},
                    {"r", s(ce.r)},
                    {"transcript", ce.transcript}};
    rep.verdict("non-principal", kNegative);
    return rep;
}

inline Report polyext_contract(const Options& o) {
    need_args(o, 2, "two polynomials f1 f2 in X");
    RingSpec r = ring_or(o, "Z");
    auto run = [&](auto ctx, auto base) {
        using C = decltype(ctx);
        using B = decltype(base);
        auto f1 = ctx.parse(o.args[0]), f2 = ctx.parse(o.args[1]);
        Report rep("polyext contract", ctx.descriptor());
        rep.input(o.args);
        auto cc = princ::contract_to_constants(f1, f2);
        json res = {{"f1", C::str(f1)}, {"f2", C::str(f2)}, {"c1", B::str(cc.c1)}, {"c2", B::str(cc.c2)}};
        Report sub("", base.descriptor());
        if (cc.generator) {
            claim_generator<B>(sub, *cc.generator, "(f1(0), f2(0))");
            res["generator"] = generator_json<B>(*cc.generator);
            rep.verdict("principal", kOk);
        } else {
            sub.nonprincipal({B::str(cc.c1), B::str(cc.c2)}, r.d, "(f1(0), f2(0)) is not principal in D");
            rep.verdict("non-principal", kNegative);
        }
        for (const auto& c : sub.doc()["claims"]) rep.in_ring(base.descriptor(), c);
        rep.result() = res;
        return rep;
    };
    if (r.family == RingSpec::Family::Z) return run(PolyOver<Int>{}, IntRing{});
    QuadRing q = require_imaginary_quadratic(r, "polyext contract");
    return run(PolyOver<princ::QuadElem>{q.d}, q);
}

// ---------------------------------------------------------------------------
// sphere

inline Report sphere_projector(const Options& o) {
    if (!o.args.empty()) throw InputError("sphere projector takes no arguments");
    SphereRing ctx;
    Report rep("sphere projector", ctx.descriptor());
    rep.input({});
    auto P = princ::tangent_projector();
    using C = SphereRing;
    const char* x[3] = {"X0", "X1", "X2"};
    json rows = json::array();
    std::string trace, xx;
    for (std::size_t i = 0; i < 3; ++i) {
        json row = json::array();
        std::string col, lrow;
        for (std::size_t j = 0; j < 3; ++j) {
            row.push_back(C::str(P.E[i][j]));
            std::string sq;
            for (std::size_t k = 0; k < 3; ++k) sq += (k ? "+" : "") + par(C::str(P.E[i][k])) + "*" + par(C::str(P.E[k][j]));
            rep.eq(sq, C::str(P.E[i][j]), "E*E = E at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            col += (j ? "+" : "") + par(C::str(P.E[i][j])) + "*" + x[j];
            lrow += (j ? "+" : "") + std::string(x[j]) + "*" + par(C::str(P.E[j][i]));
        }
        rep.eq(col, "0", "E*x^T = 0, row " + std::to_string(i));
        rep.eq(lrow, "0", "x*E = 0, column " + std::to_string(i));
        trace += (i ? "+" : "") + par(C::str(P.E[i][i]));
        xx += (i ? "+" : "") + std::string(x[i]) + "^2";
        rows.push_back(row);
    }
    rep.eq(trace, "2", "trace(E) = 2");
    rep.eq(xx, "1", "x*x^T = 1");
    json checks = json::object();
    for (const auto& [name, ok] : P.checks) checks[name] = ok;
    rep.result() = {{"E", rows}, {"checks", checks}};
    rep.verdict(P.holds() ? "projector" : "failed", P.holds() ? kOk : kNegative);
    return rep;
}

inline Report sphere_reduce(const Options& o) {
    need_args(o, 1, "one expression in X0, X1, X2");
    SphereRing ctx;
    auto e = ctx.parse(o.args[0]);
    Report rep("sphere reduce", ctx.descriptor());
    rep.input(o.args);
    auto bi = [](const princ::Bivar& f) { return princ::to_string(f, "X1", "X2"); };
    rep.eq(o.args[0], ctx.str(e), "normal form f + g*X0");
    rep.result() = {{"f", bi(e.f())}, {"g", bi(e.g())}, {"normal_form", ctx.str(e)}, {"norm", bi(e.norm())}};
    rep.verdict("ok", kOk);
    return rep;
}

}  // namespace princ_lab
