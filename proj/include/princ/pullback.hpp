#pragma once

/**
 * @file pullback.hpp
 * @brief The ring R = D + M inside V = Q[Y] localized at (Y).
 *
 * V is a discrete valuation ring with maximal ideal M = Y*V and residue
 * field Q = Frac(D). An element of V is a rational function f/g with
 * g(0) != 0; it lies in R exactly when its value at Y = 0 lies in D.
 * D is either Z or an imaginary quadratic order Z[sqrt(d)].
 */

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "princ/core.hpp"
#include "princ/idem.hpp"
#include "princ/quadring.hpp"

namespace princ {

/// What the pullback construction needs to know about its base ring D.
template <class D>
struct PullbackBase;

template <>
struct PullbackBase<Int> {
    using Field = Rat;
    static Rat embed(const Int& x) { return Rat(x); }
    static std::optional<Int> contract(const Rat& q) { return FractionField<Int>::contract(q); }
    static bool is_unit(const Int& x) { return x == 1 || x == -1; }

    /// Generator of (a, b)D with two-way membership, if principal.
    static std::optional<PrincipalGen<Int>> principal(const Int& a, const Int& b, std::optional<PrincipalityVerdict>&) {
        return principal_generator(a, b);
    }
};

template <>
struct PullbackBase<QuadElem> {
    using Field = QuadFieldElem;
    static QuadFieldElem embed(const QuadElem& x) { return QuadFieldElem(x); }
    static std::optional<QuadElem> contract(const QuadFieldElem& q) { return q.to_integral(); }
    static bool is_unit(const QuadElem& x) { return x.norm() == 1; }

    static std::optional<PrincipalGen<QuadElem>> principal(const QuadElem& a, const QuadElem& b,
                                                           std::optional<PrincipalityVerdict>& verdict) {
        QuadIdeal I = ideal_from_pair(a, b);
        verdict = ideal_is_principal(I);
        if (verdict->kind != PrincipalityVerdict::Kind::Principal) return std::nullopt;
        const auto& v = *verdict;
        return PrincipalGen<QuadElem>{a, b, *v.generator, {v.membership[0], v.membership[1]},
                                      {v.quotients[0], v.quotients[1]}};
    }
};

/// Element of R = D + M, held as a normalized rational function in Y whose
/// denominator has constant term 1.
template <class D>
class PullbackElem {
   public:
    using Field = typename PullbackBase<D>::Field;
    using Fn = RatFunc<Field>;

    PullbackElem() = default;
    PullbackElem(const D& c) : f_(Fn(PullbackBase<D>::embed(c))) {}  // NOLINT
    template <std::integral I>
    PullbackElem(I c) : f_(Fn(Field(c))) {}  // NOLINT

    /// f as an element of R, or nullopt when its value at 0 is outside D.
    /// Throws when f has a pole at Y = 0.
    static std::optional<PullbackElem> member(const Fn& f) {
        if (scalar_is_zero(f.den().constant_term())) throw MathError("pole at Y = 0: not an element of V");
        if (!PullbackBase<D>::contract(f.num().constant_term())) return std::nullopt;
        PullbackElem e;
        e.f_ = f;
        return e;
    }

    static PullbackElem Y() { return *member(Fn(Poly<Field>::variable())); }

    const Fn& fn() const noexcept { return f_; }
    /// Residue modulo M, an element of D.
    D value_at_zero() const { return *PullbackBase<D>::contract(f_.num().constant_term()); }
    bool in_maximal_ideal() const { return scalar_is_zero(f_.num().constant_term()); }
    bool is_zero() const { return f_.is_zero(); }

    friend PullbackElem operator+(const PullbackElem& a, const PullbackElem& b) { return wrap(a.f_ + b.f_); }
    friend PullbackElem operator-(const PullbackElem& a, const PullbackElem& b) { return wrap(a.f_ - b.f_); }
    friend PullbackElem operator*(const PullbackElem& a, const PullbackElem& b) { return wrap(a.f_ * b.f_); }
    PullbackElem operator-() const { return wrap(-f_); }
    friend bool operator==(const PullbackElem& a, const PullbackElem& b) { return a.f_ == b.f_; }

   private:
    static PullbackElem wrap(Fn f) {
        PullbackElem e;
        e.f_ = std::move(f);
        return e;
    }
    Fn f_;
};

/// The value in R of a rational function, if it belongs to R.
template <class D>
std::optional<PullbackElem<D>> pb_member(const typename PullbackElem<D>::Fn& f) {
    return PullbackElem<D>::member(f);
}

/// Units of R are exactly c + z with c a unit of D and z in M.
template <class D>
bool pb_is_unit(const PullbackElem<D>& x) {
    if (x.is_zero()) throw MathError("pb_is_unit: zero element");
    return PullbackBase<D>::is_unit(x.value_at_zero());
}

/// 1/x as an element of R, when x is a unit.
template <class D>
std::optional<PullbackElem<D>> pb_inverse(const PullbackElem<D>& x) {
    if (x.is_zero()) return std::nullopt;
    const auto& f = x.fn();
    if (scalar_is_zero(f.num().constant_term())) return std::nullopt;
    return PullbackElem<D>::member(typename PullbackElem<D>::Fn(f.den(), f.num()));
}

/// q in R with a == b*q, if it exists.
template <class D>
std::optional<PullbackElem<D>> exact_divide(const PullbackElem<D>& a, const PullbackElem<D>& b) {
    if (b.is_zero()) throw MathError("division by zero in D + M");
    auto q = a.fn() / b.fn();
    if (scalar_is_zero(q.den().constant_term())) return std::nullopt;
    return PullbackElem<D>::member(q);
}

template <class D>
std::string to_string(const PullbackElem<D>& x) {
    const auto& f = x.fn();
    std::string num = to_string(f.num(), "Y");
    if (f.den().degree() == 0) return num;
    return "(" + num + ")/(" + to_string(f.den(), "Y") + ")";
}

/**
 * Outcome of reducing an idempotent pair of R.
 *   case 1: exactly one of a, b lies in M; the other generates.
 *   case 2: both lie in M; with a(1-a) = b*r the factor 1-a is a unit and
 *           a = b*r*(1-a)^{-1}, so b generates (symmetrically a).
 *   case 3: neither lies in M; the residues (a', b') form an idempotent pair
 *           of D, a and b are unit multiples of a' and b', and a generator
 *           of (a', b')D generates (a, b)R.
 */
template <class D>
struct PullbackReduction {
    int proof_case = 0;
    Orientation orientation = Orientation::AOneMinusAInBR;
    PullbackElem<D> a, b, r;
    /// Two-way membership evidence; absent only when the D-level ideal is
    /// not principal.
    std::optional<PrincipalGen<PullbackElem<D>>> evidence;
    // Case 3 data.
    std::optional<std::array<D, 3>> residues;  ///< a', b', r'
    std::optional<PrincipalGen<D>> base_generator;
    std::optional<PullbackElem<D>> unit_a, unit_b;  ///< a = a'*unit_a, b = b'*unit_b
    std::optional<PrincipalityVerdict> base_verdict;

    bool principal() const { return evidence.has_value(); }
};

template <class D>
PullbackReduction<D> pb_reduce_idem_pair(const PullbackElem<D>& a, const PullbackElem<D>& b, const PullbackElem<D>& r) {
    using E = PullbackElem<D>;
    PullbackReduction<D> out;
    out.a = a;
    out.b = b;
    out.r = r;
    const E one(1);
    if (a * (one - a) == b * r)
        out.orientation = Orientation::AOneMinusAInBR;
    else if (b * (one - b) == a * r)
        out.orientation = Orientation::BOneMinusBInAR;
    else
        throw MathError("pb_reduce_idem_pair: neither a(1-a) = b*r nor b(1-b) = a*r");

    const bool a_in = a.in_maximal_ideal(), b_in = b.in_maximal_ideal();
    auto quotient = [](const E& x, const E& y) {
        auto q = exact_divide(x, y);
        if (!q) throw MathError("pb_reduce_idem_pair: expected divisibility failed");
        return *q;
    };
    if (a_in != b_in) {
        out.proof_case = 1;
        if (!a_in)
            out.evidence = PrincipalGen<E>{a, b, a, {one, E(0)}, {one, quotient(b, a)}};
        else
            out.evidence = PrincipalGen<E>{a, b, b, {E(0), one}, {quotient(a, b), one}};
    } else if (a_in) {
        out.proof_case = 2;
        if (out.orientation == Orientation::AOneMinusAInBR) {
            E q = r * *pb_inverse(one - a);
            out.evidence = PrincipalGen<E>{a, b, b, {E(0), one}, {q, one}};
        } else {
            E q = r * *pb_inverse(one - b);
            out.evidence = PrincipalGen<E>{a, b, a, {one, E(0)}, {one, q}};
        }
    } else {
        out.proof_case = 3;
        D a0 = a.value_at_zero(), b0 = b.value_at_zero(), r0 = r.value_at_zero();
        out.residues = std::array<D, 3>{a0, b0, r0};
        const D d_one(1);
        bool residue_pair = out.orientation == Orientation::AOneMinusAInBR ? a0 * (d_one - a0) == b0 * r0
                                                                          : b0 * (d_one - b0) == a0 * r0;
        if (!residue_pair) throw MathError("pb_reduce_idem_pair: residues do not form an idempotent pair");
        out.unit_a = quotient(a, E(a0));
        out.unit_b = quotient(b, E(b0));
        out.base_generator = PullbackBase<D>::principal(a0, b0, out.base_verdict);
        if (out.base_generator) {
            const auto& g = *out.base_generator;
            E ua_inv = *pb_inverse(*out.unit_a), ub_inv = *pb_inverse(*out.unit_b);
            out.evidence = PrincipalGen<E>{a,
                                           b,
                                           E(g.generator),
                                           {E(g.coeffs[0]) * ua_inv, E(g.coeffs[1]) * ub_inv},
                                           {E(g.quotients[0]) * *out.unit_a, E(g.quotients[1]) * *out.unit_b}};
        }
    }
    if (out.evidence && !out.evidence->holds()) throw MathError("pb_reduce_idem_pair: generator evidence fails");
    return out;
}

/// z/d^k for k = 1..n, each checked to lie in R: z has infinitely many
/// non-unit divisors, so R is not a UFD.
template <class D>
std::vector<PullbackElem<D>> pb_nonufd_chain(const PullbackElem<D>& z, const D& d, unsigned n) {
    if (z.is_zero() || !z.in_maximal_ideal()) throw MathError("pb_nonufd_chain: z must be a nonzero element of M");
    if (scalar_is_zero(d) || PullbackBase<D>::is_unit(d)) throw MathError("pb_nonufd_chain: d must be a nonzero nonunit of D");
    using Fn = typename PullbackElem<D>::Fn;
    std::vector<PullbackElem<D>> out;
    Fn power(PullbackBase<D>::embed(d));
    Fn acc = power;
    for (unsigned k = 1; k <= n; ++k) {
        auto e = PullbackElem<D>::member(z.fn() / acc);
        if (!e) throw MathError("pb_nonufd_chain: z/d^k left R");
        out.push_back(*e);
        acc = acc * power;
    }
    return out;
}

template <class D>
ComplementCertificate<PullbackElem<D>> complement_identity(const IdemPair<PullbackElem<D>>& p) {
    return complement_identity_principal(p, [&](const PullbackElem<D>& x, const PullbackElem<D>& y) {
        auto red = pb_reduce_idem_pair(x, y, p.r);
        if (!red.evidence) throw MathError("complement_identity: ideal of the pullback is not principal");
        return *red.evidence;
    });
}

}  // namespace princ
