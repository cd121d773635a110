#pragma once

/**
 * @file polyext.hpp
 * @brief Polynomial extensions D[X] of subrings D of Q[y].
 *
 * D is given by the set of monomial degrees it excludes; {1} gives
 * Q[y^2, y^3]. A non-seminormality witness alpha (alpha^2, alpha^3 in D,
 * alpha not in D) yields an idempotent pair of D[X] generating a
 * non-principal ideal.
 */

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "princ/core.hpp"
#include "princ/idem.hpp"
#include "princ/quadring.hpp"

namespace princ {

using PolyY = Poly<Rat>;     ///< elements of Q[y]
using PolyXY = Poly<PolyY>;  ///< elements of Q[y][X], outer variable X

/// {f in Q[y] : coefficient of y^k is 0 for every k in excluded}.
class SubringDesc {
   public:
    explicit SubringDesc(std::set<unsigned> excluded) : excluded_(std::move(excluded)) {
        if (excluded_.count(0)) throw InputError("subring must contain 1: degree 0 cannot be excluded");
        if (excluded_.empty()) return;
        unsigned top = *excluded_.rbegin();
        for (unsigned i = 1; i <= top; ++i)
            for (unsigned j = i; i + j <= top; ++j)
                if (!excluded_.count(i) && !excluded_.count(j) && excluded_.count(i + j))
                    throw InputError("not closed under products: y^" + std::to_string(i) + " * y^" + std::to_string(j));
    }

    const std::set<unsigned>& excluded() const noexcept { return excluded_; }

    bool contains(const PolyY& f) const {
        return std::none_of(excluded_.begin(), excluded_.end(), [&](unsigned k) { return f.coeff(k) != 0; });
    }
    /// Every X-coefficient lies in D.
    bool contains(const PolyXY& f) const {
        return std::all_of(f.coeffs().begin(), f.coeffs().end(), [&](const PolyY& c) { return contains(c); });
    }
    std::string name() const {
        std::string s = "Q[y] minus degrees {";
        bool first = true;
        for (unsigned k : excluded_) {
            s += (first ? "" : ",") + std::to_string(k);
            first = false;
        }
        return s + "}";
    }

   private:
    std::set<unsigned> excluded_;
};

struct SeminormalCheck {
    PolyY alpha, alpha2, alpha3;
    bool alpha_in = false, alpha2_in = false, alpha3_in = false;

    /// alpha shows D is not seminormal.
    bool witness() const { return alpha2_in && alpha3_in && !alpha_in; }
};

inline SeminormalCheck seminormal_check(const PolyY& alpha, const SubringDesc& D) {
    SeminormalCheck c{alpha, alpha * alpha, alpha * alpha * alpha};
    c.alpha_in = D.contains(c.alpha);
    c.alpha2_in = D.contains(c.alpha2);
    c.alpha3_in = D.contains(c.alpha3);
    return c;
}

inline bool seminormal_witness(const PolyY& alpha, const SubringDesc& D) { return seminormal_check(alpha, D).witness(); }

/**
 * With a = 1 - alpha X, b = 1 + alpha X:
 *   u = (1 + alpha^2 X^2) a b = 1 - alpha^4 X^4,  v = alpha^2 b,
 *   u(1 - u) = v r,  r = -alpha^5 X^7 + alpha^4 X^6 - alpha^3 X^5 + alpha^2 X^4,
 * and (1 + alpha^2 X^2)(1 - alpha^2 X^2) + alpha^4 X^4 = 1.
 */
struct PolyextCounterexample {
    PolyY alpha;
    PolyXY a, b, u, v, r;
    ComaxCert<PolyXY> eq1;  ///< (1 + alpha^2 X^2) * ab + alpha^2 * (alpha^2 X^4) = 1
    PolyXY u_over_b, v_over_b;  ///< u = b*(1 + alpha^2 X^2) a, v = b*alpha^2
    std::vector<std::string> transcript;

    bool holds(const SubringDesc& D) const {
        const PolyXY one(PolyY(1));
        return eq1.holds() && u * (one - u) == v * r && u == b * u_over_b && v == b * v_over_b && D.contains(u) &&
               D.contains(v) && D.contains(r) && D.contains(eq1.x) && D.contains(eq1.s) && D.contains(eq1.t);
    }
};

inline PolyextCounterexample nonprinc_pair_from_alpha(const PolyY& alpha, const SubringDesc& D) {
    auto sn = seminormal_check(alpha, D);
    if (!sn.witness()) throw InputError("alpha does not witness non-seminormality of " + D.name());
    auto c = [](const PolyY& p) { return PolyXY(p); };
    auto mono = [](const PolyY& p, std::size_t k) { return PolyXY::monomial(p, k); };
    const PolyY a1 = alpha, a2 = sn.alpha2, a3 = sn.alpha3, a4 = a2 * a2, a5 = a2 * a3;
    const PolyXY one = c(PolyY(1));

    PolyextCounterexample out;
    out.alpha = alpha;
    out.a = one - mono(a1, 1);
    out.b = one + mono(a1, 1);
    PolyXY h = one + mono(a2, 2);  // 1 + alpha^2 X^2
    out.u = h * out.a * out.b;
    out.v = c(a2) * out.b;
    out.r = -mono(a5, 7) + mono(a4, 6) - mono(a3, 5) + mono(a2, 4);
    out.eq1 = {out.a * out.b, c(a2), h, mono(a2, 4)};
    out.u_over_b = h * out.a;
    out.v_over_b = c(a2);
    if (out.u != one - mono(a4, 4)) throw MathError("u != 1 - alpha^4 X^4");
    if (!out.holds(D)) throw MathError("counterexample identities fail");

    auto s = [](const PolyXY& f) { return to_string(f, "X", "y"); };
    auto& t = out.transcript;
    t.push_back("alpha = " + to_string(alpha, "y") + ": alpha^2 = " + to_string(a2, "y") +
                " and alpha^3 = " + to_string(a3, "y") + " lie in D, alpha does not");
    t.push_back("(1+alpha^2X^2)(1-alpha^2X^2) + alpha^4X^4 = 1: ab = " + s(out.a * out.b) +
                " and alpha^2 are comaximal in D[X]");
    t.push_back("u = " + s(out.u) + ", v = " + s(out.v) + ", u(1-u) = v*r with r = " + s(out.r) +
                " in D[X]: (u, v) is an idempotent pair");
    t.push_back("if (u, v) = fD[X] then fQ[X] = b((1+alpha^2X^2)a, alpha^2)Q[X] = bQ[X] with b = " + s(out.b));
    t.push_back("so f = c(1+alpha X) with c and c*alpha in D; f divides u in D[X] forces c to be a unit");
    t.push_back("hence alpha = (c*alpha)/c lies in D, contradicting the witness: (u, v) is not principal");
    return out;
}

/// The ideal (f1(0), f2(0)) of D with its principality evidence.
template <class T>
struct ContractedIdeal {
    T c1, c2;
    std::optional<PrincipalGen<T>> generator;
    std::optional<PrincipalityVerdict> verdict;
    bool principal() const { return generator.has_value(); }
};

inline ContractedIdeal<Int> contract_to_constants(const Poly<Int>& f1, const Poly<Int>& f2) {
    ContractedIdeal<Int> out{f1.constant_term(), f2.constant_term(), std::nullopt, std::nullopt};
    out.generator = principal_generator(out.c1, out.c2);
    return out;
}

inline ContractedIdeal<QuadElem> contract_to_constants(const Poly<QuadElem>& f1, const Poly<QuadElem>& f2) {
    ContractedIdeal<QuadElem> out{f1.constant_term(), f2.constant_term(), std::nullopt, std::nullopt};
    QuadElem c1 = out.c1, c2 = out.c2;
    Int d = c1.d() != 0 ? c1.d() : c2.d();
    if (d == 0) throw InputError("contract_to_constants: cannot infer the quadratic order");
    c1 = c1.with_d(d);
    c2 = c2.with_d(d);
    if (c1.is_zero() && c2.is_zero()) {
        out.generator = PrincipalGen<QuadElem>{c1, c2, c1, {c1, c1}, {c1, c1}};
        return out;
    }
    out.verdict = ideal_is_principal(ideal_from_pair(c1, c2));
    if (out.verdict->kind == PrincipalityVerdict::Kind::Principal) {
        const auto& v = *out.verdict;
        out.generator = PrincipalGen<QuadElem>{c1, c2, *v.generator, {v.membership[0], v.membership[1]},
                                               {v.quotients[0], v.quotients[1]}};
    }
    return out;
}

}  // namespace princ
