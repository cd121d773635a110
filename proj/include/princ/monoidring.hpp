#pragma once

/**
 * @file monoidring.hpp
 * @brief Monoid domains D[X;S] with S a locally cyclic submonoid of Q.
 *
 * S is Z_T intersected with Q>=0 (or all of Z_T in group mode), where T is
 * generated by a finite set of primes. D is Q or Z[1/T'] for a finite set
 * of primes T'. Every finite set of elements lives in a polynomial (or
 * Laurent) ring D[Z] with Z = X^t, which is where division happens.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "princ/core.hpp"
#include "princ/idem.hpp"

namespace princ {

/// Q, or Z with the primes in `inverted` made units.
struct BaseRing {
    bool field = false;
    std::vector<Int> inverted;

    static BaseRing rationals() { return {true, {}}; }
    static BaseRing integers(std::vector<Int> inverted = {}) {
        for (const auto& p : inverted)
            if (!is_prime(p)) throw InputError("inverted element " + to_string(p) + " is not prime");
        std::sort(inverted.begin(), inverted.end());
        inverted.erase(std::unique(inverted.begin(), inverted.end()), inverted.end());
        return {false, std::move(inverted)};
    }

    bool inverts(const Int& p) const {
        return field || std::find(inverted.begin(), inverted.end(), p) != inverted.end();
    }
    bool contains(const Rat& q) const {
        if (field) return true;
        for (const auto& [p, e] : factor_integer(denominator(q)))
            if (!inverts(p)) return false;
        return true;
    }
    bool is_unit(const Rat& q) const {
        if (q == 0 || !contains(q)) return false;
        return contains(Rat(1) / q);
    }
    std::string name() const {
        if (field) return "Q";
        if (inverted.empty()) return "Z";
        Int prod = 1;
        for (const auto& p : inverted) prod *= p;
        return "Z[1/" + to_string(prod) + "]";
    }
    friend bool operator==(const BaseRing&, const BaseRing&) = default;
};

/// S = {a/b in Q : b a product of primes in `primes`}, nonnegative unless
/// `group` is set.
struct MonoidDesc {
    enum class Kind { PDivisible, Multiplicative };
    Kind kind = Kind::PDivisible;
    std::vector<Int> primes;
    bool group = false;

    static MonoidDesc p_divisible(const Int& p, bool group = false) {
        if (!is_prime(p)) throw InputError("p-div monoid needs a prime, got " + to_string(p));
        return {Kind::PDivisible, {p}, group};
    }
    static MonoidDesc multiplicative(std::vector<Int> primes, bool group = false) {
        if (primes.empty()) throw InputError("mult monoid needs at least one prime");
        for (const auto& p : primes)
            if (!is_prime(p)) throw InputError("mult monoid generator " + to_string(p) + " is not prime");
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        return {Kind::Multiplicative, std::move(primes), group};
    }

    bool divisible_by(const Int& p) const { return std::find(primes.begin(), primes.end(), p) != primes.end(); }
    bool contains(const Rat& s) const {
        if (!group && s < 0) return false;
        for (const auto& [p, e] : factor_integer(denominator(s)))
            if (!divisible_by(p)) return false;
        return true;
    }
    std::string name() const {
        std::string out;
        if (kind == Kind::PDivisible) {
            out = "p-div:" + to_string(primes.front());
        } else {
            out = "mult:{";
            for (std::size_t i = 0; i < primes.size(); ++i) out += (i ? "," : "") + to_string(primes[i]);
            out += "}";
        }
        return group ? out + ",group" : out;
    }
    friend bool operator==(const MonoidDesc&, const MonoidDesc&) = default;
};

struct MonoidRing {
    BaseRing base;
    MonoidDesc monoid;

    std::string name() const { return base.name() + "[X;" + monoid.name() + "]"; }
    friend bool operator==(const MonoidRing&, const MonoidRing&) = default;
};

using MonoidRingPtr = std::shared_ptr<const MonoidRing>;

inline MonoidRingPtr make_monoid_ring(BaseRing base, MonoidDesc monoid) {
    return std::make_shared<const MonoidRing>(MonoidRing{std::move(base), std::move(monoid)});
}

/// Finite sum of c*X^e. Integer literals carry no ring and adopt the ring
/// of the other operand.
class MonoidElem {
   public:
    using Terms = std::map<Rat, Rat>;

    MonoidElem() = default;
    template <std::integral I>
    MonoidElem(I c) {  // NOLINT
        if (c != 0) terms_[Rat(0)] = Rat(c);
    }
    MonoidElem(MonoidRingPtr ring, Terms terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
        std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
        validate();
    }

    static MonoidElem constant(MonoidRingPtr ring, const Rat& c) { return {std::move(ring), {{Rat(0), c}}}; }
    static MonoidElem monomial(MonoidRingPtr ring, const Rat& c, const Rat& e) { return {std::move(ring), {{e, c}}}; }

    const MonoidRingPtr& ring() const noexcept { return ring_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    Rat coefficient(const Rat& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    friend MonoidElem operator+(const MonoidElem& a, const MonoidElem& b) {
        Terms t = a.terms_;
        for (const auto& [e, c] : b.terms_) t[e] += c;
        return {merge(a, b), std::move(t)};
    }
    friend MonoidElem operator-(const MonoidElem& a, const MonoidElem& b) { return a + (-b); }
    MonoidElem operator-() const {
        MonoidElem r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend MonoidElem operator*(const MonoidElem& a, const MonoidElem& b) {
        Terms t;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) t[ea + eb] += ca * cb;
        return {merge(a, b), std::move(t)};
    }
    friend bool operator==(const MonoidElem& a, const MonoidElem& b) { return a.terms_ == b.terms_; }

   private:
    static MonoidRingPtr merge(const MonoidElem& a, const MonoidElem& b) {
        if (!a.ring_) return b.ring_;
        if (!b.ring_ || a.ring_ == b.ring_ || *a.ring_ == *b.ring_) return a.ring_;
        throw MathError("monoid ring mismatch: " + a.ring_->name() + " vs " + b.ring_->name());
    }
    void validate() const {
        if (!ring_) {
            for (const auto& [e, c] : terms_)
                if (e != 0 || !is_integral(c)) throw MathError("monoid element without a ring must be an integer");
            return;
        }
        for (const auto& [e, c] : terms_) {
            if (!ring_->monoid.contains(e))
                throw MathError("exponent " + to_string(e) + " is not in S = " + ring_->monoid.name());
            if (!ring_->base.contains(c))
                throw MathError("coefficient " + to_string(c) + " is not in D = " + ring_->base.name());
        }
    }

    MonoidRingPtr ring_;
    Terms terms_;
};

inline MonoidElem one_like(const MonoidElem& x) {
    return x.ring() ? MonoidElem::constant(x.ring(), 1) : MonoidElem(1);
}

inline std::string to_string(const MonoidElem& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : x.terms()) {
        std::string mono;
        if (e == 1)
            mono = "X";
        else if (e != 0)
            mono = is_integral(e) && e > 0 ? "X^" + to_string(e) : "X^(" + to_string(e) + ")";
        std::string coef;
        if (mono.empty())
            coef = to_string(c);
        else if (c == 1)
            coef = "";
        else if (c == -1)
            coef = "-";
        else
            coef = to_string(c) + "*";
        std::string term = coef + mono;
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

/// Representation in D[Z, Z^-1] with Z = X^t: x = Z^shift * poly.
struct ZForm {
    Rat t;
    long shift = 0;
    Poly<Rat> poly;
};

inline ZForm to_zform(const MonoidElem& x, const Rat& t) {
    if (t == 0) throw MathError("to_zform: t = 0");
    std::map<long, Rat> idx;
    long lo = 0;
    for (const auto& [e, c] : x.terms()) {
        Rat k = e / t;
        if (!is_integral(k)) throw MathError("exponent " + to_string(e) + " is not a multiple of " + to_string(t));
        long i = static_cast<long>(numerator(k));
        idx[i] = c;
        lo = std::min(lo, i);
    }
    std::vector<Rat> coeffs;
    for (const auto& [i, c] : idx) {
        auto pos = static_cast<std::size_t>(i - lo);
        if (coeffs.size() <= pos) coeffs.resize(pos + 1);
        coeffs[pos] = c;
    }
    return {t, lo, Poly<Rat>(std::move(coeffs))};
}

inline MonoidElem from_zform(const MonoidRingPtr& ring, const ZForm& z) {
    MonoidElem::Terms terms;
    const auto& cs = z.poly.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i] != 0) terms[z.t * Rat(static_cast<long>(i) + z.shift)] = cs[i];
    return {ring, std::move(terms)};
}

inline MonoidElem from_z(const MonoidRingPtr& ring, const Rat& t, const Poly<Rat>& p) { return from_zform(ring, {t, 0, p}); }

/// Largest t with every exponent a natural (integer in group mode) multiple
/// of t: the rational gcd of the exponents. Constants give 1.
inline Rat mr_common_generator(const std::vector<MonoidElem>& elems) {
    if (elems.empty()) throw InputError("mr_common_generator: empty list");
    Int num = 0, den = 1;
    for (const auto& x : elems)
        for (const auto& [e, c] : x.terms()) {
            if (e == 0) continue;
            num = gcd(num, abs(numerator(e)));
            den = lcm(den, denominator(e));
        }
    if (num == 0) return Rat(1);
    return ratio(num, den);
}

inline bool mr_is_unit(const MonoidElem& x) {
    if (x.terms().size() != 1) return false;
    const auto& [e, c] = *x.terms().begin();
    if (!x.ring()) return c == 1 || c == -1;
    if (e != 0 && !x.ring()->monoid.group) return false;
    return x.ring()->base.is_unit(c);
}

inline std::optional<MonoidElem> mr_inverse(const MonoidElem& x) {
    if (!mr_is_unit(x)) return std::nullopt;
    const auto& [e, c] = *x.terms().begin();
    if (!x.ring()) return MonoidElem(c == 1 ? 1 : -1);
    return MonoidElem::monomial(x.ring(), Rat(1) / c, -e);
}

/// q with a == b*q in D[X;S], if it exists.
inline std::optional<MonoidElem> exact_divide(const MonoidElem& a, const MonoidElem& b) {
    if (b.is_zero()) throw MathError("division by zero in D[X;S]");
    MonoidRingPtr ring = a.ring() ? a.ring() : b.ring();
    if (a.is_zero()) return a;
    Rat t = mr_common_generator({a, b});
    ZForm za = to_zform(a, t), zb = to_zform(b, t);
    // Strip powers of Z from b so the remaining factor is coprime to Z.
    long bz = 0;
    while (zb.poly.coeff(static_cast<std::size_t>(bz)) == 0) ++bz;
    Poly<Rat> bp = zb.poly;
    if (bz > 0) bp = divrem(bp, Poly<Rat>::monomial(Rat(1), static_cast<std::size_t>(bz))).quotient;
    auto dr = divrem(za.poly, bp);
    if (!dr.remainder.is_zero()) return std::nullopt;
    long shift = za.shift - zb.shift - bz;
    ZForm q{t, 0, dr.quotient};
    if (shift >= 0) {
        q.poly = dr.quotient.shifted(static_cast<std::size_t>(shift));
    } else {
        // Negative powers of Z are allowed only in a group, or when they cancel.
        long low = 0;
        while (dr.quotient.coeff(static_cast<std::size_t>(low)) == 0) ++low;
        if (low + shift >= 0)
            q.poly = divrem(dr.quotient, Poly<Rat>::monomial(Rat(1), static_cast<std::size_t>(-shift))).quotient;
        else if (ring && ring->monoid.group)
            q.shift = shift;
        else
            return std::nullopt;
    }
    for (const auto& c : q.poly.coeffs())
        if (ring && !ring->base.contains(c)) return std::nullopt;
    if (!ring) {
        for (const auto& c : q.poly.coeffs())
            if (!is_integral(c)) return std::nullopt;
        if (t != 1 || q.shift != 0 || q.poly.degree() > 0) return std::nullopt;
        return MonoidElem(static_cast<long>(numerator(q.poly.constant_term())));
    }
    return from_zform(ring, q);
}

namespace detail {

/// Throws unless n is a unit of D, naming the hypothesis that fails.
inline void require_base_unit(const MonoidRing& ring, const Int& n) {
    if (ring.base.is_unit(Rat(n))) return;
    auto f = factor_integer(n);
    std::string msg = to_string(n) + " not a unit of " + ring.base.name() + "; ";
    if (f.size() == 1 && ring.monoid.divisible_by(f.front().first))
        msg += "case (1) requires Z[1/" + to_string(f.front().first) + "]";
    else
        msg += "case (2) requires D to contain Q";
    throw MathError(msg);
}

/// Coefficients of the extended gcd of x and y in Q[Z] as elements of D[X;S].
inline ComaxCert<MonoidElem> comax_cert(const MonoidElem& x, const MonoidElem& y) {
    const MonoidRingPtr& ring = x.ring() ? x.ring() : y.ring();
    Rat t = mr_common_generator({x, y});
    ZForm zx = to_zform(x, t), zy = to_zform(y, t);
    if (zx.shift != 0 || zy.shift != 0) throw MathError("comax_cert: negative exponents");
    auto g = extended_gcd(zx.poly, zy.poly);
    if (g.d.degree() != 0) throw MathError("comax_cert: " + to_string(x) + " and " + to_string(y) + " share a factor");
    for (const auto& p : {g.s, g.t})
        for (const auto& c : p.coeffs())
            if (!ring->base.contains(c)) throw MathError("comax_cert: certificate coefficient " + to_string(c) +
                                                         " not in " + ring->base.name());
    ComaxCert<MonoidElem> cert{x, y, from_z(ring, t, g.s), from_z(ring, t, g.t)};
    if (!cert.holds()) throw MathError("comax_cert: certificate does not verify");
    return cert;
}

/// 1 + Z + ... + Z^{n-1} = (1 - Z) q(Z) + n.
inline Poly<Rat> division_quotient(unsigned n) {
    std::vector<Rat> ones(n, Rat(1));
    auto dr = divrem(Poly<Rat>(ones), Poly<Rat>(std::vector<Rat>{Rat(1), Rat(-1)}));
    if (dr.remainder != Poly<Rat>(Rat(n))) throw MathError("division identity failed");
    return dr.quotient;
}

}  // namespace detail

/// 1 - X^s = f1 * f2 with f1 = 1 - Z, f2 = 1 + Z + ... + Z^{n-1}, Z = X^{s/n}.
struct MrSplit {
    Rat s;
    Int n;
    Rat t;
    MonoidElem f1, f2;
    MonoidElem q;  ///< f2 = f1*q + n
    ComaxCert<MonoidElem> cert;

    bool holds() const {
        MonoidElem whole = one_like(f1) - MonoidElem::monomial(f1.ring(), 1, s);
        return f1 * f2 == whole && f2 == f1 * q + MonoidElem::constant(f1.ring(), Rat(n)) && cert.holds();
    }
};

inline MrSplit mr_split(const MonoidRingPtr& ring, const Rat& s, const Int& n) {
    if (s == 0) throw InputError("mr_split: s must be nonzero");
    if (!ring->monoid.contains(s)) throw InputError("mr_split: " + to_string(s) + " not in S = " + ring->monoid.name());
    if (n < 2) throw InputError("mr_split: n must be > 1");
    Rat t = s / Rat(n);
    if (!ring->monoid.contains(t)) throw InputError("mr_split: s/n = " + to_string(t) + " not in S");
    detail::require_base_unit(*ring, n);
    auto un = static_cast<unsigned>(n);
    Poly<Rat> z = Poly<Rat>::variable();
    Poly<Rat> f1 = Poly<Rat>(Rat(1)) - z;
    Poly<Rat> f2(std::vector<Rat>(un, Rat(1)));
    Poly<Rat> q = detail::division_quotient(un);
    Rat inv_n = Rat(1) / Rat(n);
    // (1/n) f2 - (q/n) f1 = 1
    ComaxCert<MonoidElem> cert{from_z(ring, t, f1), from_z(ring, t, f2), from_z(ring, t, -q * inv_n),
                               from_z(ring, t, Poly<Rat>(inv_n))};
    MrSplit out{s, n, t, cert.x, cert.y, from_z(ring, t, q), cert};
    if (!out.holds()) throw MathError("mr_split: identities fail");
    return out;
}

/// m pairwise comaximal nonunits whose product is 1 - X^s.
struct MrChain {
    Rat s;
    Int p;
    std::vector<MonoidElem> factors;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<ComaxCert<MonoidElem>> certs;

    MonoidElem product() const {
        MonoidElem acc = one_like(factors.front());
        for (const auto& f : factors) acc = acc * f;
        return acc;
    }
};

/// Splits 1 - X^s repeatedly on its 1 - X^t factor using the smallest prime
/// p of S with 1/p in D.
inline MrChain mr_comax_chain(const MonoidRingPtr& ring, const Rat& s, unsigned m) {
    if (m == 0) throw InputError("mr_comax_chain: m must be >= 1");
    if (s == 0 || !ring->monoid.contains(s)) throw InputError("mr_comax_chain: s must be a nonzero element of S");
    const auto& primes = ring->monoid.primes;
    auto it = std::find_if(primes.begin(), primes.end(), [&](const Int& p) { return ring->base.inverts(p); });
    if (it == primes.end()) detail::require_base_unit(*ring, primes.front());
    MrChain out{s, *it, {}, {}, {}};
    MonoidElem head = MonoidElem::constant(ring, 1) - MonoidElem::monomial(ring, 1, s);
    Rat cur = s;
    std::vector<MonoidElem> tail;
    for (unsigned k = 1; k < m; ++k) {
        MrSplit sp = mr_split(ring, cur, out.p);
        tail.push_back(sp.f2);
        head = sp.f1;
        cur = sp.t;
    }
    out.factors.push_back(head);
    for (auto r = tail.rbegin(); r != tail.rend(); ++r) out.factors.push_back(*r);
    for (std::size_t i = 0; i < out.factors.size(); ++i)
        for (std::size_t j = i + 1; j < out.factors.size(); ++j) {
            out.pairs.emplace_back(i, j);
            out.certs.push_back(detail::comax_cert(out.factors[i], out.factors[j]));
        }
    if (!(out.product() == MonoidElem::constant(ring, 1) - MonoidElem::monomial(ring, 1, s)))
        throw MathError("mr_comax_chain: product mismatch");
    return out;
}

/// X^t - b = b (Z - 1)(1 + Z + ... + Z^{p-1}) with Z = X^{t/p} / beta.
struct JuettSplit {
    Rat t, b, beta;
    Int p;
    MonoidElem z, lhs, f1, f2;
    ComaxCert<MonoidElem> cert;

    bool holds() const {
        auto bb = MonoidElem::constant(lhs.ring(), b);
        return lhs == bb * f1 * f2 && cert.holds();
    }
};

inline JuettSplit juett_split(const MonoidRingPtr& ring, const Rat& t, const Rat& b, const Int& p, const Rat& beta) {
    if (!ring->monoid.group) throw InputError("juett_split: the exponent monoid must be a group");
    if (!ring->base.field) throw InputError("juett_split: base ring must be a field");
    if (!is_prime(p)) throw InputError("juett_split: p must be prime");
    if (b == 0) throw InputError("juett_split: b must be nonzero");
    if (pow(beta, static_cast<int>(p)) != b)
        throw InputError("juett_split: beta^p = " + to_string(pow(beta, static_cast<int>(p))) + " != b = " + to_string(b));
    Rat tp = t / Rat(p);
    if (!ring->monoid.contains(tp)) throw InputError("juett_split: t/p not in Gamma; Gamma must be p-divisible");
    auto up = static_cast<unsigned>(p);
    MonoidElem z = MonoidElem::monomial(ring, Rat(1) / beta, tp);
    MonoidElem one = MonoidElem::constant(ring, 1);
    MonoidElem f1 = z - one, f2 = one, zi = one;
    for (unsigned i = 1; i < up; ++i) {
        zi = zi * z;
        f2 = f2 + zi;
    }
    // f2 = (1 - Z) q(Z) + p, so (1/p) f2 + (q/p) f1 = 1.
    Poly<Rat> q = detail::division_quotient(up);
    MonoidElem qz = MonoidElem::constant(ring, 0), zk = one;
    for (const auto& c : q.coeffs()) {
        qz = qz + MonoidElem::constant(ring, c) * zk;
        zk = zk * z;
    }
    Rat inv_p = Rat(1) / Rat(p);
    ComaxCert<MonoidElem> cert{f1, f2, qz * MonoidElem::constant(ring, inv_p), MonoidElem::constant(ring, inv_p)};
    JuettSplit out{t, b, beta, p, z, MonoidElem::monomial(ring, 1, t) - MonoidElem::constant(ring, b), f1, f2, cert};
    if (!out.holds()) throw MathError("juett_split: identity fails");
    return out;
}

}  // namespace princ
