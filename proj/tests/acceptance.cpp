// Acceptance suite: one line per criterion, exit status 0 only if all pass
// within their time bounds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "princ/comax.hpp"
#include "princ/idem.hpp"
#include "princ/limitring.hpp"
#include "princ/monoidring.hpp"
#include "princ/polyext.hpp"
#include "princ/pullback.hpp"
#include "princ/quadring.hpp"
#include "princ/sphere.hpp"

using namespace princ;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

#define REQUIRE(cond, msg)               \
    do {                                 \
        if (!(cond)) return {false, msg}; \
    } while (0)

const Int kD = -5;
using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// ---------------------------------------------------------------------------
// Random idempotent pairs

/// a random, b a random divisor of a(1-a) (or a random nonzero when a is 0 or 1).
IdemPair<Int> random_int_pair(Rng& rng) {
    Int a = uniform(rng, -300, 300);
    Int n = a * (1 - a);
    Int b;
    if (n == 0) {
        b = uniform(rng, 1, 50);
    } else {
        b = 1;
        for (const auto& [p, e] : factor_integer(abs(n))) b *= pow(p, static_cast<unsigned>(uniform(rng, 0, static_cast<int>(e))));
    }
    if (uniform(rng, 0, 1)) b = -b;
    Int r = n / b;
    if (uniform(rng, 0, 1)) return {b, a, Orientation::BOneMinusBInAR, r};
    return {a, b, Orientation::AOneMinusAInBR, r};
}

QuadElem random_quad(Rng& rng, int bound) { return QuadElem(uniform(rng, -bound, bound), uniform(rng, -bound, bound), kD); }

IdemPair<QuadElem> random_quad_pair_any(Rng& rng) {
    if (uniform(rng, 0, 4) < 3) {
        // Pair construction from a random invertible ideal (x, y).
        QuadElem x = random_quad(rng, 9), y = random_quad(rng, 9);
        if (x.is_zero() && y.is_zero()) x = QuadElem(2, 0, kD);
        auto p = pair_from_invertible(inverse_bezout(x, y));
        auto again = is_idempotent_pair(p.a, p.b);
        if (!again) throw MathError("ideal-derived pair failed detection");
        return *again;
    }
    // a = k*h, b = k*(1-a): a(1-a) = b*h.
    QuadElem k = random_quad(rng, 4), h = random_quad(rng, 4);
    if (k.is_zero()) k = QuadElem(1, 1, kD);
    QuadElem a = k * h;
    return {a, k * (QuadElem(1, 0, kD) - a), Orientation::AOneMinusAInBR, h};
}

/// Quadratic ideals here are nonzero lattices, so skip pairs with a zero side.
IdemPair<QuadElem> random_quad_pair(Rng& rng) {
    for (;;) {
        auto p = random_quad_pair_any(rng);
        if (!p.a.is_zero() && !p.b.is_zero()) return p;
    }
}

Poly<Rat> random_qpoly(Rng& rng, int max_deg) {
    std::vector<Rat> c(static_cast<std::size_t>(uniform(rng, 0, max_deg)) + 1);
    for (auto& v : c) v = Rat(uniform(rng, -5, 5), uniform(rng, 1, 3));
    return Poly<Rat>(c);
}

template <class T>
IdemPair<T> factored_pair(const T& k, const T& m, const T& h, bool swap) {
    // a = k*m*h, b = k*m*(1-a): a(1-a) = b*h.
    T a = k * m * h;
    T b = k * m * (one_like(a) - a);
    if (swap) return {b, a, Orientation::BOneMinusBInAR, h};
    return {a, b, Orientation::AOneMinusAInBR, h};
}

IdemPair<Poly<Rat>> random_qx_pair(Rng& rng) {
    Poly<Rat> k = random_qpoly(rng, 2), m = random_qpoly(rng, 1), h = random_qpoly(rng, 2);
    if (k.is_zero()) k = Poly<Rat>(1);
    if (m.is_zero()) m = Poly<Rat>(Rat(1, 2));
    return factored_pair(k, m, h, uniform(rng, 0, 1) == 1);
}

LimitElem<Rat> random_limit(Rng& rng) {
    return LimitElem<Rat>(static_cast<unsigned>(uniform(rng, 1, 3)), random_qpoly(rng, 2));
}

IdemPair<LimitElem<Rat>> random_limit_pair(Rng& rng) {
    auto k = random_limit(rng), m = random_limit(rng), h = random_limit(rng);
    if (k.is_zero()) k = LimitElem<Rat>::x(2);
    if (m.is_zero()) m = LimitElem<Rat>(1) + LimitElem<Rat>::x(1);
    return factored_pair(k, m, h, uniform(rng, 0, 1) == 1);
}

using PZ = PullbackElem<Int>;

PZ pb(const Poly<Rat>& num, const Poly<Rat>& den = Poly<Rat>(1)) {
    auto e = PZ::member(RatFunc<Rat>(num, den));
    if (!e) throw MathError("generated element outside D + M");
    return *e;
}

/// Pairs of Z + Y*Q[Y]_(Y) in the three cases of the reduction.
IdemPair<PZ> random_pullback_pair(Rng& rng, int which) {
    const Poly<Rat> Y = Poly<Rat>::variable();
    auto unit_den = [&] { return Poly<Rat>(1) + Y * random_qpoly(rng, 1); };
    PZ one(1);
    if (which == 1) {
        // a outside M, b in M; b(1-b) = a*r.
        int a0 = uniform(rng, 1, 9) * (uniform(rng, 0, 1) ? 1 : -1);
        PZ a = pb(Poly<Rat>(Rat(a0)) + Y * random_qpoly(rng, 1), unit_den());
        Poly<Rat> q = random_qpoly(rng, 1);
        if (q.is_zero()) q = Poly<Rat>(Rat(3, 2));
        PZ b = pb(Y * q, unit_den());
        return {a, b, Orientation::BOneMinusBInAR, *exact_divide(b * (one - b), a)};
    }
    if (which == 2) {
        // a, b in M; b = a*w with w(0) = 1/n, w itself outside R.
        Poly<Rat> p = random_qpoly(rng, 1);
        if (p.is_zero()) p = Poly<Rat>(1);
        Poly<Rat> den = unit_den();
        PZ a = pb(Y * p, den);
        Poly<Rat> w = Poly<Rat>(Rat(1, uniform(rng, 1, 6))) + Y * random_qpoly(rng, 1);
        PZ b = pb(Y * p * w, den * unit_den());
        return {a, b, Orientation::AOneMinusAInBR, *exact_divide(a * (one - a), b)};
    }
    // Neither in M: residues form a pair of Z; b = b0 * unit.
    IdemPair<Int> base = random_int_pair(rng);
    while (base.a == 0 || base.b == 0 || base.orientation != Orientation::AOneMinusAInBR) base = random_int_pair(rng);
    PZ a = pb(Poly<Rat>(Rat(base.a)) + Y * random_qpoly(rng, 1), unit_den());
    PZ b = pb(Poly<Rat>(Rat(base.b)) * (Poly<Rat>(1) + Y * random_qpoly(rng, 1)), unit_den());
    return {a, b, Orientation::AOneMinusAInBR, *exact_divide(a * (one - a), b)};
}

template <class T>
bool principal_complement_holds(const ComplementCertificate<T>& c) {
    if (!c.first_gen || !c.second_gen || !c.unit || !c.unit_inverse) return false;
    if (!c.first_gen->holds() || !c.second_gen->holds()) return false;
    if (!(*c.unit * *c.unit_inverse == one_like(c.target))) return false;
    return c.first_gen->generator * c.second_gen->generator == c.target * *c.unit;
}

bool quad_complement_holds(const ComplementCertificate<QuadElem>& c) {
    if (c.product && c.target_ideal) return *c.product == *c.target_ideal;
    return principal_complement_holds(c);
}

// ---------------------------------------------------------------------------
// Criteria

Outcome complement_identity_everywhere() {
    Rng rng(1001);
    const int n = 100;
    for (int i = 0; i < n; ++i) {
        REQUIRE(principal_complement_holds(complement_identity(random_int_pair(rng))), "Z pair " + std::to_string(i));
        REQUIRE(quad_complement_holds(complement_identity(random_quad_pair(rng))), "Z[sqrt(-5)] pair " + std::to_string(i));
        REQUIRE(principal_complement_holds(complement_identity(random_qx_pair(rng))), "Q[X] pair " + std::to_string(i));
        REQUIRE(principal_complement_holds(complement_identity(random_pullback_pair(rng, 1 + i % 3))),
                "pullback pair " + std::to_string(i));
        REQUIRE(principal_complement_holds(complement_identity(random_limit_pair(rng))), "limit ring pair " + std::to_string(i));
    }
    return {true, "100 pairs in each of Z, Z[sqrt(-5)], Q[X], Z+M, limit ring over Q"};
}

Outcome ideal_pair_round_trip() {
    Rng rng(2002);
    int done = 0;
    while (done < 100) {
        Int a = uniform(rng, -1000, 1000), b = uniform(rng, -1000, 1000);
        if (a == 0 && b == 0) continue;
        auto cert = inverse_bezout(a, b);
        REQUIRE(cert.holds(), "Z Bezout certificate");
        auto p = pair_from_invertible(cert);
        auto again = is_idempotent_pair(p.a, p.b);
        REQUIRE(again, "Z pair not detected");
        REQUIRE(principal_complement_holds(complement_identity(*again)), "Z complement identity");
        ++done;
    }
    std::vector<QuadIdeal> primes;
    for (long p : {2, 3, 7})
        for (auto& P : primes_above(kD, p)) primes.push_back(P.ideal);
    for (int i = 0; i < 50; ++i) {
        QuadIdeal I = primes[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(primes.size()) - 1))];
        for (int k = uniform(rng, 1, 3); k > 1; --k)
            I = ideal_mul(I, primes[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(primes.size()) - 1))]);
        auto bs = I.basis();
        auto cert = inverse_bezout(bs[0], bs[1]);
        REQUIRE(cert.holds(), "quadratic Bezout certificate");
        auto p = pair_from_invertible(cert);
        auto again = is_idempotent_pair(p.a, p.b);
        REQUIRE(again, "quadratic pair not detected");
        REQUIRE(quad_complement_holds(complement_identity(*again)), "quadratic complement identity");
    }
    return {true, "100 ideals of Z, 50 products of primes above 2, 3, 7 in Z[sqrt(-5)]"};
}

Outcome dedekind_nonprinc_witness() {
    QuadIdeal I = ideal_from_pair(QuadElem(2, 0, kD), QuadElem(1, 1, kD));
    auto inv = ideal_is_invertible(I);
    REQUIRE(inv.invertible && inv.certificate, "(2, 1+sqrt(-5)) not invertible");
    REQUIRE(ideal_mul(I, *inv.certificate) == principal_ideal(kD, QuadElem(I.norm(), 0, kD)), "I*conj(I) != (N(I))");
    auto v = ideal_is_principal(I);
    REQUIRE(v.kind == PrincipalityVerdict::Kind::NonPrincipal, "(2, 1+sqrt(-5)) reported principal");
    REQUIRE(elements_of_norm(kD, I.norm()).size() == v.transcript.size(), "norm search incomplete");
    auto w = idempotent_pair_from_ideal(QuadElem(2, 0, kD), QuadElem(1, 1, kD));
    REQUIRE(w.cert.holds() && w.pair.holds(), "ideal-derived pair certificate");
    REQUIRE(w.verdict.kind == PrincipalityVerdict::Kind::NonPrincipal, "ideal-derived pair generates a principal ideal");
    return {true, "pair (" + to_string(w.pair.a) + ", " + to_string(w.pair.b) + ") generates a non-principal ideal"};
}

Outcome cfd_not_ucfd() {
    auto all = enumerate_complete_factorizations(QuadElem(21, 0, kD));
    REQUIRE(all.size() == 3, "expected 3 factorizations of 21, got " + std::to_string(all.size()));
    for (const auto& f : all) {
        REQUIRE(f.holds(), "factorization certificate");
        auto ideals = block_ideals(f);
        for (std::size_t i = 0; i < ideals.size(); ++i)
            REQUIRE(principal_ideal(kD, f.factors[i]) == ideals[i], "block generator mismatch");
    }
    auto w = find_nonunique_witness(kD, 500);
    REQUIRE(w, "no witness within norm 500");
    REQUIRE(w->element.norm() <= 441, "witness norm above 441");
    return {true, "21 has 3 factorizations; scan found " + to_string(w->element) + " of norm " + to_string(w->element.norm())};
}

Outcome integers_are_ucfd() {
    for (long n = 2; n <= 10000; ++n) {
        auto all = enumerate_complete_factorizations(Int(n));
        REQUIRE(all.size() == 1, "n = " + std::to_string(n));
        // Oracle: trial division grouped by prime.
        std::vector<Int> want;
        long m = n;
        for (long p = 2; p * p <= m; ++p) {
            long pe = 1;
            while (m % p == 0) {
                m /= p;
                pe *= p;
            }
            if (pe > 1) want.emplace_back(pe);
        }
        if (m > 1) want.emplace_back(m);
        REQUIRE(all[0].factors == want && all[0].holds(), "n = " + std::to_string(n));
    }
    return {true, "2 <= n <= 10000"};
}

Outcome monoid_chains() {
    auto ring = make_monoid_ring(BaseRing::rationals(), MonoidDesc::p_divisible(2));
    auto target = MonoidElem::constant(ring, 1) - MonoidElem::monomial(ring, 1, 1);
    for (unsigned m = 2; m <= 8; ++m) {
        auto ch = mr_comax_chain(ring, 1, m);
        REQUIRE(ch.factors.size() == m && ch.product() == target, "product m = " + std::to_string(m));
        REQUIRE(ch.certs.size() == m * (m - 1) / 2, "certificate count m = " + std::to_string(m));
        for (const auto& c : ch.certs) REQUIRE(c.holds(), "certificate m = " + std::to_string(m));
    }
    auto zring = make_monoid_ring(BaseRing::integers(), MonoidDesc::p_divisible(2));
    try {
        mr_split(zring, 1, 2);
        return {false, "D = Z with n = 2 accepted"};
    } catch (const MathError&) {
    }
    return {true, "m = 2..8 over Q[X; Z[1/2]>=0]; Z rejected for n = 2"};
}

Outcome limit_chains() {
    for (unsigned m = 2; m <= 8; ++m) {
        auto cq = lr_chain<Rat>(m);
        auto cz = lr_chain<Int>(m);
        REQUIRE(cq.product() == lr_lift(LimitElem<Rat>::x(1), m), "Q product m = " + std::to_string(m));
        REQUIRE(cz.product() == lr_lift(LimitElem<Int>::x(1), m), "Z product m = " + std::to_string(m));
        REQUIRE(cq.certs.size() == m * (m - 1) / 2 && cz.certs.size() == cq.certs.size(), "certificate count");
        for (const auto& c : cq.certs) REQUIRE(c.holds(), "Q certificate");
        for (const auto& c : cz.certs) REQUIRE(c.holds(), "Z certificate");
    }
    return {true, "m = 2..8 over Q and Z"};
}

Outcome pullback_reduction() {
    Rng rng(8008);
    int seen[4] = {0, 0, 0, 0};
    for (int i = 0; i < 100; ++i) {
        int which = 1 + i % 3;
        auto p = random_pullback_pair(rng, which);
        auto red = pb_reduce_idem_pair(p.a, p.b, p.r);
        REQUIRE(red.proof_case == which, "case mismatch at pair " + std::to_string(i));
        REQUIRE(red.evidence && red.evidence->holds(), "two-way membership at pair " + std::to_string(i));
        ++seen[which];
    }
    auto chain = pb_nonufd_chain(PZ::Y(), Int(2), 20);
    REQUIRE(chain.size() == 20, "chain length");
    for (unsigned k = 1; k <= 20; ++k) {
        REQUIRE(chain[k - 1].in_maximal_ideal() && !pb_is_unit(chain[k - 1]), "z/2^k not a nonunit of M");
        REQUIRE(PZ(pow(Int(2), k)) * chain[k - 1] == PZ::Y(), "2^k * (z/2^k) != z");
    }
    return {true, "cases 1/2/3: " + std::to_string(seen[1]) + "/" + std::to_string(seen[2]) + "/" +
                      std::to_string(seen[3]) + "; Y/2^k in R for k <= 20"};
}

Outcome polyext_counterexample() {
    SubringDesc D({1});
    for (const auto& alpha : {PolyY::monomial(1, 1), PolyY::monomial(2, 1)}) {
        auto ce = nonprinc_pair_from_alpha(alpha, D);
        PolyXY one(PolyY(1));
        PolyY a2 = alpha * alpha;
        PolyXY h = one + PolyXY::monomial(a2, 2), g = one - PolyXY::monomial(a2, 2);
        REQUIRE(h * g + PolyXY::monomial(a2 * a2, 4) == one, "(1+a^2X^2)(1-a^2X^2) + a^4X^4 = 1");
        REQUIRE(ce.u * (one - ce.u) == ce.v * ce.r, "idempotent identity");
        REQUIRE(D.contains(ce.u) && D.contains(ce.v) && D.contains(ce.r), "u, v, r not in D[X]");
        REQUIRE(ce.holds(D), "certificate");
        REQUIRE(ce.transcript.size() == 6, "transcript incomplete");
    }
    return {true, "alpha in {y, 2y} over Q[y^2, y^3]"};
}

Outcome sphere_projector() {
    auto P = tangent_projector();
    REQUIRE(P.holds(), "projector identity failed");
    return {true, "E^2 = E, E x^T = 0, x E = 0, tr E = 2, x x^T = 1"};
}

#undef REQUIRE

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "complement identity on random idempotent pairs", 5, complement_identity_everywhere},
        {2, "invertible ideal -> idempotent pair round trip", 10, ideal_pair_round_trip},
        {3, "Dedekind non-PID gives a non-principal idempotent-pair ideal", 1, dedekind_nonprinc_witness},
        {4, "CFD that is not a UCFD in Z[sqrt(-5)]", 30, cfd_not_ucfd},
        {5, "Z has unique comaximal factorization up to 10^4", 60, integers_are_ucfd},
        {6, "monoid domain comaximal chains", 5, monoid_chains},
        {7, "limit ring chains", 5, limit_chains},
        {8, "pullback reduction and non-UFD chain", 5, pullback_reduction},
        {9, "polynomial extension counterexample", 1, polyext_counterexample},
        {10, "sphere ring projector", 1, sphere_projector},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < c.limit_s;
        bool pass = o.ok && in_time;
        if (!pass) ++failed;
        std::printf("[%s] %2d %s: %s (%.3f s, limit %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    secs, c.limit_s, in_time ? "" : " over time");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
