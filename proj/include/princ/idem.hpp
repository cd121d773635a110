#pragma once

/**
 * @file idem.hpp
 * @brief Idempotent pairs: detection, the associated idempotent matrix,
 * synthesis from invertible two-generated ideals, and the complement identity
 * (a, b)(1 - a, b) = (b).
 *
 * Everything here is generic in the ring element type T. A ring plugs in by
 * providing ring operators, a zero test (member is_zero() or comparison with
 * 0) and an overload of exact_divide(a, b) returning q with a == b*q.
 */

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "princ/core.hpp"
#include "princ/quadring.hpp"

namespace princ {

/// The multiplicative identity in the same ring as x. Rings whose elements
/// carry context overload this.
template <class T>
T one_like(const T&) {
    return T(1);
}

enum class Orientation {
    AOneMinusAInBR,  ///< a(1-a) = b*r
    BOneMinusBInAR,  ///< b(1-b) = a*r
};

template <class T>
struct IdemPair {
    T a;
    T b;
    Orientation orientation = Orientation::AOneMinusAInBR;
    T r;

    /// The stored relation, re-evaluated.
    bool holds() const {
        T one = one_like(a);
        if (orientation == Orientation::AOneMinusAInBR) return a * (one - a) == b * r;
        return b * (one - b) == a * r;
    }
};

namespace detail {
/// r with n == divisor*r, treating divisor == 0 as "n must vanish".
template <class T>
std::optional<T> membership_witness(const T& n, const T& divisor) {
    if (scalar_is_zero(divisor)) {
        if (scalar_is_zero(n)) return n;
        return std::nullopt;
    }
    return exact_divide(n, divisor);
}
}  // namespace detail

/// Tests a(1-a) in bR first, then b(1-b) in aR.
template <class T>
std::optional<IdemPair<T>> is_idempotent_pair(const T& a, const T& b) {
    T one = one_like(a);
    if (auto r = detail::membership_witness(T(a * (one - a)), b))
        return IdemPair<T>{a, b, Orientation::AOneMinusAInBR, *r};
    if (auto r = detail::membership_witness(T(b * (one - b)), a))
        return IdemPair<T>{a, b, Orientation::BOneMinusBInAR, *r};
    return std::nullopt;
}

/**
 * Verifies a(1-a) = b*r in a fraction field and that r passes the supplied
 * membership test for the ring in question. Used for rings where
 * divisibility is not decidable here.
 */
template <class F, class Membership>
bool check_with_witness(const F& a, const F& b, const F& r, Membership&& in_ring) {
    F one = one_like(a);
    if (!(a * (one - a) == b * r)) return false;
    return static_cast<bool>(std::invoke(std::forward<Membership>(in_ring), r));
}

/// [[a, b], [r, 1-a]] (or [[b, a], [r, 1-b]] for the other orientation);
/// throws unless M*M == M.
template <class T>
Matrix<T, 2> idem_matrix(const IdemPair<T>& p) {
    if (!p.holds()) throw MathError("idem_matrix: witness does not satisfy the pair relation");
    T one = one_like(p.a);
    Matrix<T, 2> m;
    if (p.orientation == Orientation::AOneMinusAInBR)
        m = {{{p.a, p.b}, {p.r, one - p.a}}};
    else
        m = {{{p.b, p.a}, {p.r, one - p.b}}};
    if (!(matmul(m, m) == m)) throw MathError("idem_matrix: M*M != M");
    return m;
}

// ---------------------------------------------------------------------------
// Fraction fields and Bezout certificates

template <class T>
struct FractionField;

template <>
struct FractionField<Int> {
    using type = Rat;
    static Rat embed(const Int& x) { return Rat(x); }
    static std::optional<Int> contract(const Rat& q) {
        if (!is_integral(q)) return std::nullopt;
        return numerator(q);
    }
};

template <>
struct FractionField<QuadElem> {
    using type = QuadFieldElem;
    static QuadFieldElem embed(const QuadElem& x) { return QuadFieldElem(x); }
    static std::optional<QuadElem> contract(const QuadFieldElem& q) { return q.to_integral(); }
};

/// lambda*a + mu*b = 1 with lambda, mu in the fraction field.
template <class T>
struct BezoutCert {
    using Field = typename FractionField<T>::type;
    T a;
    T b;
    Field lambda;
    Field mu;

    bool holds() const {
        using FF = FractionField<T>;
        return lambda * FF::embed(a) + mu * FF::embed(b) == Field(1);
    }
};

/// s*x + t*y = 1, so x and y are comaximal.
template <class T>
struct ComaxCert {
    T x;
    T y;
    T s;
    T t;

    bool holds() const { return s * x + t * y == one_like(x); }
};

/// lambda, mu in (a,b)^{-1} = (1/g)Z with lambda*a + mu*b = 1.
inline BezoutCert<Int> inverse_bezout(const Int& a, const Int& b) {
    IntXgcd g = xgcd(a, b);
    if (g.g == 0) throw MathError("zero ideal");
    return {a, b, Rat(g.s, g.g), Rat(g.t, g.g)};
}

/**
 * lambda, mu in I^{-1} with lambda*a + mu*b = 1 for an invertible
 * I = (a, b) of Z[sqrt(d)]. Uses I^{-1} = conj(I)/N(I) and solves
 * N(I) = a*gamma + b*delta over the Z-basis of conj(I).
 */
inline BezoutCert<QuadElem> inverse_bezout(const QuadElem& a, const QuadElem& b) {
    QuadIdeal I = ideal_from_pair(a, b);
    const Int& d = I.d();
    auto inv = ideal_is_invertible(I);
    if (!inv.invertible) throw MathError("ideal is not invertible; no Bezout certificate in I^{-1}");
    auto jb = inv.certificate->basis();
    QuadElem aa = a.with_d(d), bb = b.with_d(d);
    std::vector<QuadElem> prods{aa * jb[0], aa * jb[1], bb * jb[0], bb * jb[1]};
    std::vector<LatticeVec> vecs;
    for (auto& p : prods) vecs.push_back({p.x(), p.y()});
    auto k = lattice_solve(lattice_hnf(vecs), {I.norm(), 0});
    if (!k) throw MathError("N(I) not in a*conj(I) + b*conj(I)");
    QuadElem gamma = QuadElem((*k)[0]) * jb[0] + QuadElem((*k)[1]) * jb[1];
    QuadElem delta = QuadElem((*k)[2]) * jb[0] + QuadElem((*k)[3]) * jb[1];
    QuadFieldElem n(Rat(I.norm()), Rat(0), d);
    return {aa, bb, QuadFieldElem(gamma) / n, QuadFieldElem(delta) / n};
}

/**
 * From lambda*a + mu*b = 1 with lambda, mu in I^{-1}: the pair
 * (lambda*a, lambda*b) in R with witness r = mu*a, since
 * lambda*a*(1 - lambda*a) = lambda*a*mu*b = (lambda*b)*(mu*a).
 * The pair generates lambda*I, which is isomorphic to I.
 */
template <class T>
IdemPair<T> pair_from_invertible(const BezoutCert<T>& cert) {
    using FF = FractionField<T>;
    if (!cert.holds()) throw MathError("pair_from_invertible: lambda*a + mu*b != 1");
    auto la = FF::contract(cert.lambda * FF::embed(cert.a));
    auto lb = FF::contract(cert.lambda * FF::embed(cert.b));
    auto ma = FF::contract(cert.mu * FF::embed(cert.a));
    auto mb = FF::contract(cert.mu * FF::embed(cert.b));
    if (!la || !lb || !ma || !mb) throw MathError("pair_from_invertible: lambda or mu is not in I^{-1}");
    // lambda == 0 would give the zero ideal; then mu*b = 1 and (mu*b, mu*a)
    // with witness lambda*b is the pair generating mu*I.
    IdemPair<T> p = scalar_is_zero(cert.lambda) ? IdemPair<T>{*mb, *ma, Orientation::AOneMinusAInBR, *lb}
                                                : IdemPair<T>{*la, *lb, Orientation::AOneMinusAInBR, *ma};
    if (!p.holds()) throw MathError("pair_from_invertible: derived relation fails");
    return p;
}

// ---------------------------------------------------------------------------
// Complement identity

/// g generates (x, y): g = coeffs[0]*x + coeffs[1]*y, x = g*quotients[0], y = g*quotients[1].
template <class T>
struct PrincipalGen {
    T x;
    T y;
    T generator;
    std::array<T, 2> coeffs;
    std::array<T, 2> quotients;

    bool holds() const {
        return generator == coeffs[0] * x + coeffs[1] * y && x == generator * quotients[0] &&
               y == generator * quotients[1];
    }
};

/**
 * Evidence for (a, b)(1-a, b) = (b) (or (a, b)(a, 1-b) = (a)).
 * In principal-ideal settings: both factors have generators g1, g2 and
 * g1*g2 = unit*target with unit*unit_inverse = 1. For quadratic orders the
 * product is compared as a lattice instead.
 */
template <class T>
struct ComplementCertificate {
    IdemPair<T> pair;
    std::array<T, 2> first;   ///< generators of the first ideal
    std::array<T, 2> second;  ///< generators of the complement ideal
    T target;
    std::optional<PrincipalGen<T>> first_gen;
    std::optional<PrincipalGen<T>> second_gen;
    std::optional<T> unit;
    std::optional<T> unit_inverse;
    std::optional<QuadIdeal> product;
    std::optional<QuadIdeal> target_ideal;
};

namespace detail {
template <class T>
void complement_sides(const IdemPair<T>& p, std::array<T, 2>& first, std::array<T, 2>& second, T& target) {
    T one = one_like(p.a);
    first = {p.a, p.b};
    if (p.orientation == Orientation::AOneMinusAInBR) {
        second = {one - p.a, p.b};
        target = p.b;
    } else {
        second = {p.a, one - p.b};
        target = p.a;
    }
}
}  // namespace detail

/// Complement identity in a ring where every ideal generated by an
/// idempotent pair is principal and `principal` produces the generator.
template <class T, class PrincipalFn>
ComplementCertificate<T> complement_identity_principal(const IdemPair<T>& p, PrincipalFn&& principal) {
    if (!p.holds()) throw MathError("complement_identity: invalid idempotent pair");
    ComplementCertificate<T> c{p};
    detail::complement_sides(p, c.first, c.second, c.target);
    c.first_gen = principal(c.first[0], c.first[1]);
    c.second_gen = principal(c.second[0], c.second[1]);
    if (!c.first_gen->holds() || !c.second_gen->holds()) throw MathError("complement_identity: bad generator");
    T prod = c.first_gen->generator * c.second_gen->generator;
    if (scalar_is_zero(c.target)) {
        if (!scalar_is_zero(prod)) throw MathError("complement_identity: (a,b)(1-a,b) != (b)");
        c.unit = one_like(p.a);
        c.unit_inverse = one_like(p.a);
        return c;
    }
    auto u = exact_divide(prod, c.target);
    auto ui = scalar_is_zero(prod) ? std::nullopt : exact_divide(c.target, prod);
    if (!u || !ui) throw MathError("complement_identity: (a,b)(1-a,b) != (b)");
    c.unit = *u;
    c.unit_inverse = *ui;
    return c;
}

inline PrincipalGen<Int> principal_generator(const Int& x, const Int& y) {
    IntXgcd g = xgcd(x, y);
    Int qx = g.g == 0 ? Int(0) : Int(x / g.g);
    Int qy = g.g == 0 ? Int(0) : Int(y / g.g);
    return {x, y, g.g, {g.s, g.t}, {qx, qy}};
}

/// Over Q[X]: the monic gcd with its extended-Euclid coefficients.
inline PrincipalGen<Poly<Rat>> principal_generator(const Poly<Rat>& x, const Poly<Rat>& y) {
    auto g = extended_gcd(x, y);
    Poly<Rat> qx = g.d.is_zero() ? Poly<Rat>() : divrem(x, g.d).quotient;
    Poly<Rat> qy = g.d.is_zero() ? Poly<Rat>() : divrem(y, g.d).quotient;
    return {x, y, g.d, {g.s, g.t}, {qx, qy}};
}

inline ComplementCertificate<Int> complement_identity(const IdemPair<Int>& p) {
    return complement_identity_principal(p, [](const Int& x, const Int& y) { return principal_generator(x, y); });
}

inline ComplementCertificate<Poly<Rat>> complement_identity(const IdemPair<Poly<Rat>>& p) {
    return complement_identity_principal(
        p, [](const Poly<Rat>& x, const Poly<Rat>& y) { return principal_generator(x, y); });
}

/// In Z[sqrt(d)]: compares the lattice product with the principal ideal of
/// the target exactly.
inline ComplementCertificate<QuadElem> complement_identity(const IdemPair<QuadElem>& p) {
    if (!p.holds()) throw MathError("complement_identity: invalid idempotent pair");
    Int d = detail::merge_d(detail::merge_d(p.a.d(), p.b.d()), p.r.d());
    if (d == 0) throw MathError("complement_identity: cannot infer d");
    ComplementCertificate<QuadElem> c{p};
    detail::complement_sides(p, c.first, c.second, c.target);
    auto ideal_of = [&](const std::array<QuadElem, 2>& g) {
        return QuadIdeal::generated_by(d, {g[0], g[1]});
    };
    if (c.target.is_zero()) throw MathError("complement_identity: target (b) is the zero ideal");
    c.product = ideal_mul(ideal_of(c.first), ideal_of(c.second));
    c.target_ideal = principal_ideal(d, c.target);
    if (!(*c.product == *c.target_ideal)) throw MathError("complement_identity: (a,b)(1-a,b) != (b)");
    return c;
}

// ---------------------------------------------------------------------------
// Non-PRINC witnesses in quadratic orders

/// An idempotent pair whose ideal is provably not principal.
struct NonPrincWitness {
    QuadIdeal source;          ///< invertible non-principal ideal the pair came from
    BezoutCert<QuadElem> cert; ///< lambda, mu in source^{-1}
    IdemPair<QuadElem> pair;
    PrincipalityVerdict verdict;  ///< NonPrincipal for (pair.a, pair.b)
};

/// The idempotent pair built from an invertible ideal (a, b), with the principality
/// verdict of the ideal it generates.
inline NonPrincWitness idempotent_pair_from_ideal(const QuadElem& a, const QuadElem& b) {
    QuadIdeal I = ideal_from_pair(a, b);
    auto cert = inverse_bezout(a, b);
    auto pair = pair_from_invertible(cert);
    if (pair.a.is_zero() && pair.b.is_zero()) throw MathError("degenerate pair");
    auto verdict = ideal_is_principal(QuadIdeal::generated_by(I.d(), {pair.a, pair.b}));
    return {I, cert, pair, verdict};
}

/**
 * Searches the primes above 2, 3, 5, ... (up to prime_bound) of Z[sqrt(d)]
 * for an invertible non-principal one and converts it into an idempotent
 * pair. A ring is only ever reported non-PRINC together with such a witness.
 */
inline std::optional<NonPrincWitness> find_nonprinc_witness(const Int& d, const Int& prime_bound = 200) {
    require_imaginary(d);
    for (Int p = 2; p <= prime_bound; ++p) {
        if (!is_prime(p)) continue;
        std::vector<QuadIdeal> cands;
        if (is_maximal_order(d)) {
            for (auto& P : primes_above(d, p)) cands.push_back(P.ideal);
        } else {
            // Non-maximal order: try (p, r + sqrt(d)) for each root of X^2 = d mod p.
            for (Int r = 0; r < p; ++r)
                if (mod(r * r - d, p) == 0)
                    cands.push_back(QuadIdeal::generated_by(d, {QuadElem(p, 0, d), QuadElem(r, 1, d)}));
        }
        for (const auto& P : cands) {
            if (!ideal_is_invertible(P).invertible) continue;
            auto v = ideal_is_principal(P);
            if (v.kind != PrincipalityVerdict::Kind::NonPrincipal) continue;
            const auto& g = P.generators();
            auto w = idempotent_pair_from_ideal(g[0], g.size() > 1 ? g[1] : QuadElem(0, 0, d));
            if (w.verdict.kind == PrincipalityVerdict::Kind::NonPrincipal) return w;
        }
    }
    return std::nullopt;
}

}  // namespace princ
