#pragma once

/**
 * @file limitring.hpp
 * @brief R = union of D[x_n] with x_i = x_{i+1}(1 + x_{i+1}).
 *
 * An element is a polynomial in x_n for some level n. Moving to level
 * n+1 substitutes x_n -> x_{n+1} + x_{n+1}^2. Each D[x_n] is a polynomial
 * ring, so lifting is injective and equality is decided at a common level.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "princ/core.hpp"
#include "princ/idem.hpp"

namespace princ {

template <class Coef>
class LimitElem {
   public:
    LimitElem() = default;
    template <std::integral I>
    LimitElem(I c) : poly_(Coef(c)) {}  // NOLINT
    LimitElem(unsigned level, Poly<Coef> p) : level_(level), poly_(std::move(p)) {
        if (level_ == 0) throw InputError("limit ring levels start at 1");
    }

    static LimitElem constant(const Coef& c) { return {1, Poly<Coef>(c)}; }
    /// The generator x_n.
    static LimitElem x(unsigned n) { return {n, Poly<Coef>::variable()}; }

    unsigned level() const noexcept { return level_; }
    const Poly<Coef>& poly() const noexcept { return poly_; }
    bool is_zero() const noexcept { return poly_.is_zero(); }

    /// The same element written in x_m.
    LimitElem lift(unsigned m) const {
        if (m < level_) throw MathError("cannot lift from level " + std::to_string(level_) + " down to " + std::to_string(m));
        const Poly<Coef> z = Poly<Coef>::variable();
        const Poly<Coef> step = z + z * z;
        Poly<Coef> p = poly_;
        for (unsigned k = level_; k < m; ++k) p = p.compose(step);
        return {m, std::move(p)};
    }

    friend LimitElem operator+(const LimitElem& a, const LimitElem& b) {
        auto [x, y] = common(a, b);
        return {x.level_, x.poly_ + y.poly_};
    }
    friend LimitElem operator-(const LimitElem& a, const LimitElem& b) {
        auto [x, y] = common(a, b);
        return {x.level_, x.poly_ - y.poly_};
    }
    friend LimitElem operator*(const LimitElem& a, const LimitElem& b) {
        auto [x, y] = common(a, b);
        return {x.level_, x.poly_ * y.poly_};
    }
    LimitElem operator-() const { return {level_, -poly_}; }
    friend bool operator==(const LimitElem& a, const LimitElem& b) {
        auto [x, y] = common(a, b);
        return x.poly_ == y.poly_;
    }

    static std::pair<LimitElem, LimitElem> common(const LimitElem& a, const LimitElem& b) {
        unsigned m = std::max(a.level_, b.level_);
        return {a.lift(m), b.lift(m)};
    }

   private:
    unsigned level_ = 1;
    Poly<Coef> poly_;
};

template <class Coef>
LimitElem<Coef> lr_lift(const LimitElem<Coef>& e, unsigned m) {
    return e.lift(m);
}

template <class Coef>
std::string to_string(const LimitElem<Coef>& e) {
    return to_string(e.poly(), "x_" + std::to_string(e.level()));
}

/// q with a == b*q, decided in D[x_n] at the common level.
template <class Coef>
std::optional<LimitElem<Coef>> exact_divide(const LimitElem<Coef>& a, const LimitElem<Coef>& b) {
    if (b.is_zero()) throw MathError("division by zero in the limit ring");
    auto [x, y] = LimitElem<Coef>::common(a, b);
    auto q = exact_divide(x.poly(), y.poly());
    if (!q) return std::nullopt;
    return LimitElem<Coef>(x.level(), *q);
}

/// Generator of (x, y) over Q: the monic gcd in Q[x_n] at the common level.
inline PrincipalGen<LimitElem<Rat>> principal_generator(const LimitElem<Rat>& x, const LimitElem<Rat>& y) {
    using E = LimitElem<Rat>;
    auto [a, b] = E::common(x, y);
    auto g = principal_generator(a.poly(), b.poly());
    unsigned n = a.level();
    return {x, y, E(n, g.generator), {E(n, g.coeffs[0]), E(n, g.coeffs[1])}, {E(n, g.quotients[0]), E(n, g.quotients[1])}};
}

inline ComplementCertificate<LimitElem<Rat>> complement_identity(const IdemPair<LimitElem<Rat>>& p) {
    return complement_identity_principal(
        p, [](const LimitElem<Rat>& x, const LimitElem<Rat>& y) { return principal_generator(x, y); });
}

/// x_1 = x_m (1+x_2)...(1+x_m) with all pairwise comaximality certificates.
template <class Coef>
struct LimitChain {
    unsigned m = 0;
    std::vector<LimitElem<Coef>> factors;  ///< x_m, 1+x_2, ..., 1+x_m
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<ComaxCert<LimitElem<Coef>>> certs;

    LimitElem<Coef> product() const {
        LimitElem<Coef> acc(1);
        for (const auto& f : factors) acc = acc * f;
        return acc;
    }
    bool holds() const {
        if (!(product() == LimitElem<Coef>::x(1))) return false;
        return std::all_of(certs.begin(), certs.end(), [](const auto& c) { return c.holds(); });
    }
};

template <class Coef>
LimitChain<Coef> lr_chain(unsigned m) {
    using E = LimitElem<Coef>;
    if (m < 2) throw InputError("lr_chain: m must be >= 2");
    LimitChain<Coef> out;
    out.m = m;
    const E one(1);
    auto opx = [&](unsigned i) { return one + E::x(i); };
    // prod_{k=lo}^{hi} (1 + x_k)
    auto run = [&](unsigned lo, unsigned hi) {
        E acc = one;
        for (unsigned k = lo; k <= hi; ++k) acc = acc * opx(k);
        return acc;
    };
    out.factors.push_back(E::x(m));
    for (unsigned i = 2; i <= m; ++i) out.factors.push_back(opx(i));
    // factor index 0 is x_m, index i-1 is 1+x_i
    for (unsigned i = 2; i <= m; ++i) {
        // 1 = (1+x_i) - x_m * prod_{j=i+1}^m (1+x_j)
        out.pairs.emplace_back(0, i - 1);
        out.certs.push_back({E::x(m), opx(i), -run(i + 1, m), one});
    }
    for (unsigned i = 2; i <= m; ++i)
        for (unsigned j = i + 1; j <= m; ++j) {
            // 1 = (1+x_i) - w (1+x_j), w = x_j prod_{k=i+1}^{j-1} (1+x_k)
            E w = E::x(j) * run(i + 1, j - 1);
            out.pairs.emplace_back(i - 1, j - 1);
            out.certs.push_back({opx(i), opx(j), one, -w});
        }
    if (!out.holds()) throw MathError("lr_chain: certificate failed");
    return out;
}

}  // namespace princ
