#pragma once

/**
 * @file sphere.hpp
 * @brief B2 = Q[X0,X1,X2]/(X0^2 + X1^2 + X2^2 - 1).
 *
 * Every element has a unique form f + g*X0 with f, g in Q[X1,X2], obtained
 * by rewriting X0^2 -> 1 - X1^2 - X2^2.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "princ/core.hpp"

namespace princ {

/// Q[X1,X2] as polynomials in X1 with coefficients in Q[X2].
using Bivar = Poly<Poly<Rat>>;

inline Bivar bivar_monomial(const Rat& c, unsigned e1, unsigned e2) {
    return Bivar::monomial(Poly<Rat>::monomial(c, e2), e1);
}

/// 1 - X1^2 - X2^2, the value of X0^2.
inline const Bivar& sphere_rho() {
    static const Bivar rho = bivar_monomial(1, 0, 0) - bivar_monomial(1, 2, 0) - bivar_monomial(1, 0, 2);
    return rho;
}

class SphereElem {
   public:
    SphereElem() = default;
    template <std::integral I>
    SphereElem(I c) : f_(Poly<Rat>(Rat(c))) {}  // NOLINT
    SphereElem(Rat c) : f_(Poly<Rat>(std::move(c))) {}  // NOLINT
    SphereElem(Bivar f, Bivar g) : f_(std::move(f)), g_(std::move(g)) {}

    static SphereElem x(unsigned i) {
        switch (i) {
            case 0: return {Bivar(), bivar_monomial(1, 0, 0)};
            case 1: return {bivar_monomial(1, 1, 0), Bivar()};
            case 2: return {bivar_monomial(1, 0, 1), Bivar()};
            default: throw InputError("B2 has generators X0, X1, X2");
        }
    }
    /// c * X0^e0 * X1^e1 * X2^e2 in normal form.
    static SphereElem monomial(const Rat& c, unsigned e0, unsigned e1, unsigned e2) {
        Bivar m = bivar_monomial(c, e1, e2) * pow(sphere_rho(), e0 / 2);
        return e0 % 2 ? SphereElem(Bivar(), m) : SphereElem(m, Bivar());
    }

    const Bivar& f() const noexcept { return f_; }
    const Bivar& g() const noexcept { return g_; }
    bool is_zero() const noexcept { return f_.is_zero() && g_.is_zero(); }

    /// f - g*X0.
    SphereElem conj() const { return {f_, -g_}; }
    /// f^2 - g^2 (1 - X1^2 - X2^2) = this * conj(this).
    Bivar norm() const { return f_ * f_ - g_ * g_ * sphere_rho(); }

    friend SphereElem operator+(const SphereElem& a, const SphereElem& b) { return {a.f_ + b.f_, a.g_ + b.g_}; }
    friend SphereElem operator-(const SphereElem& a, const SphereElem& b) { return {a.f_ - b.f_, a.g_ - b.g_}; }
    friend SphereElem operator*(const SphereElem& a, const SphereElem& b) { return b2_mul(a, b); }
    SphereElem operator-() const { return {-f_, -g_}; }
    friend bool operator==(const SphereElem& a, const SphereElem& b) { return a.f_ == b.f_ && a.g_ == b.g_; }

    friend SphereElem b2_mul(const SphereElem& a, const SphereElem& b) {
        return {a.f_ * b.f_ + a.g_ * b.g_ * sphere_rho(), a.f_ * b.g_ + a.g_ * b.f_};
    }

   private:
    Bivar f_, g_;
};

/// q with a == b*q, via a*conj(b) = N(b)*q in the free Q[X1,X2]-module.
inline std::optional<SphereElem> exact_divide(const SphereElem& a, const SphereElem& b) {
    if (b.is_zero()) throw MathError("division by zero in B2");
    SphereElem num = a * b.conj();
    Bivar n = b.norm();
    auto qf = exact_divide(num.f(), n);
    auto qg = exact_divide(num.g(), n);
    if (!qf || !qg) return std::nullopt;
    return SphereElem(*qf, *qg);
}

namespace detail {

inline void bivar_terms(const Bivar& p, const std::string& suffix, std::string& out) {
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const auto& inner = p.coeffs()[i];
        for (std::size_t j = 0; j < inner.coeffs().size(); ++j) {
            const Rat& c = inner.coeffs()[j];
            if (c == 0) continue;
            std::string mono;
            auto add = [&](const std::string& v, std::size_t e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += e == 1 ? v : v + "^" + std::to_string(e);
            };
            add("X1", i);
            add("X2", j);
            if (!suffix.empty()) mono += mono.empty() ? suffix : "*" + suffix;
            std::string term;
            if (mono.empty())
                term = to_string(c);
            else if (c == 1)
                term = mono;
            else if (c == -1)
                term = "-" + mono;
            else
                term = to_string(c) + "*" + mono;
            if (!out.empty() && term[0] != '-') out += "+";
            out += term;
        }
    }
}

}  // namespace detail

inline std::string to_string(const SphereElem& e) {
    if (e.is_zero()) return "0";
    std::string out;
    detail::bivar_terms(e.f(), "", out);
    detail::bivar_terms(e.g(), "X0", out);
    return out;
}

using SphereMatrix = Matrix<SphereElem, 3>;

/// E = I - x^T x for x = (X0, X1, X2), with the identities it satisfies.
struct TangentProjector {
    SphereMatrix E;
    std::vector<std::pair<std::string, bool>> checks;

    bool holds() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return !checks.empty();
    }
};

inline TangentProjector tangent_projector() {
    TangentProjector out;
    std::array<SphereElem, 3> x{SphereElem::x(0), SphereElem::x(1), SphereElem::x(2)};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out.E[i][j] = SphereElem(i == j ? 1 : 0) - x[i] * x[j];

    SphereMatrix sq = matmul(out.E, out.E);
    bool idem = true, ex = true, xe = true;
    SphereElem tr, xx;
    for (std::size_t i = 0; i < 3; ++i) {
        SphereElem col, row;
        for (std::size_t j = 0; j < 3; ++j) {
            idem = idem && sq[i][j] == out.E[i][j];
            col = col + out.E[i][j] * x[j];
            row = row + x[j] * out.E[j][i];
        }
        ex = ex && col.is_zero();
        xe = xe && row.is_zero();
        tr = tr + out.E[i][i];
        xx = xx + x[i] * x[i];
    }
    out.checks = {{"E*E = E", idem},
                  {"E*x^T = 0", ex},
                  {"x*E = 0", xe},
                  {"trace(E) = 2", tr == SphereElem(2)},
                  {"x*x^T = 1", xx == SphereElem(1)}};
    return out;
}

}  // namespace princ
