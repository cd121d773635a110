#pragma once

/**
 * @file quadring.hpp
 * @brief Imaginary quadratic orders Z[sqrt(d)] and their ideals.
 *
 * Ideals are Z-lattices in Z^2 (coordinates over the basis {1, sqrt(d)})
 * kept in Hermite normal form
 *
 *     basis = { a, b + c*sqrt(d) },  a > 0, c > 0, 0 <= b < a,
 *
 * so that the index [O : I] is a*c and equality of ideals is equality of
 * the triple (a, b, c).
 */

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "princ/core.hpp"

namespace princ {

namespace detail {
inline Int merge_d(const Int& d1, const Int& d2) {
    if (d1 == 0) return d2;
    if (d2 != 0 && d1 != d2) throw MathError("mixing elements of Z[sqrt(" + to_string(d1) + ")] and Z[sqrt(" + to_string(d2) + ")]");
    return d1;
}
}  // namespace detail

/// x + y*sqrt(d). d == 0 marks a rational integer not yet tied to an order;
/// it adopts the d of whatever it is combined with.
class QuadElem {
   public:
    QuadElem() = default;
    QuadElem(Int x) : x_(std::move(x)) {}  // NOLINT
    template <std::integral I>
    QuadElem(I x) : x_(x) {}  // NOLINT
    QuadElem(Int x, Int y, Int d) : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
        if (y_ != 0 && d_ == 0) throw MathError("sqrt coefficient without an order");
    }

    const Int& x() const noexcept { return x_; }
    const Int& y() const noexcept { return y_; }
    const Int& d() const noexcept { return d_; }
    bool is_zero() const noexcept { return x_ == 0 && y_ == 0; }

    Int norm() const { return x_ * x_ - d_ * y_ * y_; }
    QuadElem conj() const { return {x_, -y_, d_}; }
    bool is_unit() const { return norm() == 1; }
    QuadElem with_d(const Int& d) const { return {x_, y_, detail::merge_d(d_, d)}; }

    friend QuadElem operator+(const QuadElem& a, const QuadElem& b) {
        return {a.x_ + b.x_, a.y_ + b.y_, detail::merge_d(a.d_, b.d_)};
    }
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b) {
        return {a.x_ - b.x_, a.y_ - b.y_, detail::merge_d(a.d_, b.d_)};
    }
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b) {
        Int d = detail::merge_d(a.d_, b.d_);
        return {a.x_ * b.x_ + d * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_, d};
    }
    QuadElem operator-() const { return {-x_, -y_, d_}; }
    friend bool operator==(const QuadElem& a, const QuadElem& b) {
        if (a.x_ != b.x_ || a.y_ != b.y_) return false;
        return a.y_ == 0 || a.d_ == b.d_;
    }

   private:
    Int x_ = 0;
    Int y_ = 0;
    Int d_ = 0;
};

/// Element of Q(sqrt(d)); same d convention as QuadElem.
class QuadFieldElem {
   public:
    QuadFieldElem() = default;
    QuadFieldElem(Rat x) : x_(std::move(x)) {}  // NOLINT
    template <std::integral I>
    QuadFieldElem(I x) : x_(x) {}  // NOLINT
    QuadFieldElem(const QuadElem& e) : x_(e.x()), y_(e.y()), d_(e.d()) {}  // NOLINT
    QuadFieldElem(Rat x, Rat y, Int d) : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
        if (y_ != 0 && d_ == 0) throw MathError("sqrt coefficient without a field");
    }

    const Rat& x() const noexcept { return x_; }
    const Rat& y() const noexcept { return y_; }
    const Int& d() const noexcept { return d_; }
    bool is_zero() const noexcept { return x_ == 0 && y_ == 0; }
    Rat norm() const { return x_ * x_ - Rat(d_) * y_ * y_; }
    QuadFieldElem conj() const { return {x_, -y_, d_}; }

    /// The element as an integral QuadElem, if both coordinates are integers.
    std::optional<QuadElem> to_integral() const {
        if (!is_integral(x_) || !is_integral(y_)) return std::nullopt;
        return QuadElem(numerator(x_), numerator(y_), d_);
    }

    friend QuadFieldElem operator+(const QuadFieldElem& a, const QuadFieldElem& b) {
        return {a.x_ + b.x_, a.y_ + b.y_, detail::merge_d(a.d_, b.d_)};
    }
    friend QuadFieldElem operator-(const QuadFieldElem& a, const QuadFieldElem& b) {
        return {a.x_ - b.x_, a.y_ - b.y_, detail::merge_d(a.d_, b.d_)};
    }
    friend QuadFieldElem operator*(const QuadFieldElem& a, const QuadFieldElem& b) {
        Int d = detail::merge_d(a.d_, b.d_);
        return {a.x_ * b.x_ + Rat(d) * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_, d};
    }
    friend QuadFieldElem operator/(const QuadFieldElem& a, const QuadFieldElem& b) {
        if (b.is_zero()) throw MathError("division by zero in Q(sqrt(d))");
        QuadFieldElem t = a * b.conj();
        Rat n = b.norm();
        return {t.x_ / n, t.y_ / n, t.d_};
    }
    QuadFieldElem operator-() const { return {-x_, -y_, d_}; }
    friend bool operator==(const QuadFieldElem& a, const QuadFieldElem& b) {
        if (a.x_ != b.x_ || a.y_ != b.y_) return false;
        return a.y_ == 0 || a.d_ == b.d_;
    }

   private:
    Rat x_ = 0;
    Rat y_ = 0;
    Int d_ = 0;
};

inline std::string to_string(const QuadElem& e) {
    if (e.y() == 0) return to_string(e.x());
    std::string root = "sqrt(" + to_string(e.d()) + ")";
    std::string s = e.x() == 0 ? "" : to_string(e.x());
    if (e.y() == 1)
        s += (s.empty() ? "" : "+") + root;
    else if (e.y() == -1)
        s += "-" + root;
    else
        s += (e.y() > 0 && !s.empty() ? "+" : "") + to_string(e.y()) + "*" + root;
    return s;
}

inline std::string to_string(const QuadFieldElem& e) {
    if (e.y() == 0) return to_string(e.x());
    std::string root = "sqrt(" + to_string(e.d()) + ")";
    std::string s = e.x() == 0 ? "" : to_string(e.x());
    if (e.y() == 1)
        s += (s.empty() ? "" : "+") + root;
    else if (e.y() == -1)
        s += "-" + root;
    else
        s += (e.y() > 0 && !s.empty() ? "+" : "") + to_string(e.y()) + "*" + root;
    return s;
}

/// Checks that d is a usable negative squarefree discriminant parameter.
inline void require_imaginary(const Int& d) {
    if (d >= 0) throw MathError("only imaginary quadratic orders (d < 0) are supported, got d=" + to_string(d));
    if (!is_squarefree(d)) throw MathError("d must be squarefree, got d=" + to_string(d));
}

/// Z[sqrt(d)] is the maximal order exactly when d is 2 or 3 mod 4.
inline bool is_maximal_order(const Int& d) {
    Int r = mod(d, 4);
    return r == 2 || r == 3;
}

/// q with a == b*q in Z[sqrt(d)], if it exists.
inline std::optional<QuadElem> divides(const QuadElem& b, const QuadElem& a) {
    if (b.is_zero()) throw MathError("division by zero in Z[sqrt(d)]");
    QuadElem t = a * b.conj();
    Int n = b.norm();
    if (t.x() % n != 0 || t.y() % n != 0) return std::nullopt;
    return QuadElem(t.x() / n, t.y() / n, t.d());
}

inline std::optional<QuadElem> exact_divide(const QuadElem& a, const QuadElem& b) { return divides(b, a); }

inline std::optional<QuadFieldElem> exact_divide(const QuadFieldElem& a, const QuadFieldElem& b) { return a / b; }

// ---------------------------------------------------------------------------
// Rank-2 lattices

using LatticeVec = std::array<Int, 2>;

/// Hermite normal form of the Z-span of a list of vectors in Z^2, with the
/// integer combinations expressing each basis vector in the inputs.
struct LatticeHnf {
    Int a, b, c;                 ///< basis (a, 0) and (b, c)
    std::vector<Int> coeff_a;    ///< (a,0) = sum coeff_a[i] * v[i]
    std::vector<Int> coeff_bc;   ///< (b,c) = sum coeff_bc[i] * v[i]
    bool full_rank() const { return a != 0 && c != 0; }
};

inline LatticeHnf lattice_hnf(const std::vector<LatticeVec>& vecs) {
    const std::size_t n = vecs.size();
    std::vector<LatticeVec> v = vecs;
    std::vector<std::vector<Int>> coef(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) coef[i][i] = 1;

    auto combine = [&](std::size_t p, std::size_t j, int axis) {
        // Replace (v[p], v[j]) by a unimodular combination putting
        // gcd(v[p][axis], v[j][axis]) in p and 0 in j.
        IntXgcd g = xgcd(v[p][axis], v[j][axis]);
        Int up = v[p][axis] / g.g, uj = v[j][axis] / g.g;
        LatticeVec np{g.s * v[p][0] + g.t * v[j][0], g.s * v[p][1] + g.t * v[j][1]};
        LatticeVec nj{uj * v[p][0] - up * v[j][0], uj * v[p][1] - up * v[j][1]};
        std::vector<Int> cp(n), cj(n);
        for (std::size_t k = 0; k < n; ++k) {
            cp[k] = g.s * coef[p][k] + g.t * coef[j][k];
            cj[k] = uj * coef[p][k] - up * coef[j][k];
        }
        v[p] = np;
        v[j] = nj;
        coef[p] = std::move(cp);
        coef[j] = std::move(cj);
    };

    LatticeHnf out;
    std::optional<std::size_t> pivot_bc;
    for (std::size_t j = 0; j < n; ++j) {
        if (v[j][1] == 0) continue;
        if (!pivot_bc) {
            pivot_bc = j;
            continue;
        }
        combine(*pivot_bc, j, 1);
    }
    std::optional<std::size_t> pivot_a;
    for (std::size_t j = 0; j < n; ++j) {
        if (pivot_bc && j == *pivot_bc) continue;
        if (v[j][0] == 0) continue;
        if (!pivot_a) {
            pivot_a = j;
            continue;
        }
        combine(*pivot_a, j, 0);
    }
    if (!pivot_a || !pivot_bc) {
        out.a = pivot_a ? abs(v[*pivot_a][0]) : Int(0);
        out.b = pivot_bc ? v[*pivot_bc][0] : Int(0);
        out.c = pivot_bc ? abs(v[*pivot_bc][1]) : Int(0);
        out.coeff_a.assign(n, 0);
        out.coeff_bc.assign(n, 0);
        return out;
    }
    std::size_t pa = *pivot_a, pb = *pivot_bc;
    if (v[pa][0] < 0) {
        v[pa][0] = -v[pa][0];
        for (auto& k : coef[pa]) k = -k;
    }
    if (v[pb][1] < 0) {
        v[pb] = {-v[pb][0], -v[pb][1]};
        for (auto& k : coef[pb]) k = -k;
    }
    Int q = floor_div(v[pb][0], v[pa][0]);
    v[pb][0] -= q * v[pa][0];
    for (std::size_t k = 0; k < n; ++k) coef[pb][k] -= q * coef[pa][k];
    out.a = v[pa][0];
    out.b = v[pb][0];
    out.c = v[pb][1];
    out.coeff_a = coef[pa];
    out.coeff_bc = coef[pb];
    return out;
}

/// Integer coefficients k with target = sum k[i]*v[i], if target lies in the span.
inline std::optional<std::vector<Int>> lattice_solve(const LatticeHnf& h, const LatticeVec& target) {
    if (!h.full_rank()) throw MathError("lattice_solve needs a full-rank lattice");
    if (target[1] % h.c != 0) return std::nullopt;
    Int k = target[1] / h.c;
    Int rest = target[0] - k * h.b;
    if (rest % h.a != 0) return std::nullopt;
    Int m = rest / h.a;
    std::vector<Int> out(h.coeff_a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = k * h.coeff_bc[i] + m * h.coeff_a[i];
    return out;
}

// ---------------------------------------------------------------------------
// Ideals

/// Nonzero ideal of Z[sqrt(d)] in lattice normal form, remembering the
/// generators it was built from.
class QuadIdeal {
   public:
    /// Ideal generated (as an ideal) by the given elements.
    static QuadIdeal generated_by(Int d, std::vector<QuadElem> gens) {
        require_imaginary(d);
        std::vector<QuadElem> g;
        for (auto& e : gens) g.push_back(e.with_d(d));
        auto h = lattice_hnf(z_generators(d, g));
        if (!h.full_rank()) throw MathError("zero ideal");
        QuadIdeal I(std::move(d), h.a, h.b, h.c, std::move(g));
        I.check_closed();
        return I;
    }

    const Int& d() const noexcept { return d_; }
    const Int& a() const noexcept { return a_; }
    const Int& b() const noexcept { return b_; }
    const Int& c() const noexcept { return c_; }
    const std::vector<QuadElem>& generators() const noexcept { return gens_; }

    /// Index [O : I].
    Int norm() const { return a_ * c_; }
    bool is_unit_ideal() const { return norm() == 1; }

    /// Z-basis {a, b + c*sqrt(d)}.
    std::array<QuadElem, 2> basis() const { return {QuadElem(a_, 0, d_), QuadElem(b_, c_, d_)}; }

    bool contains(const QuadElem& e) const {
        if (e.y() % c_ != 0) return false;
        Int k = e.y() / c_;
        return (e.x() - k * b_) % a_ == 0;
    }

    /// Same ideal with its lattice basis as generator list.
    QuadIdeal with_basis_generators() const {
        auto bs = basis();
        return QuadIdeal(d_, a_, b_, c_, {bs[0], bs[1]});
    }

    friend bool operator==(const QuadIdeal& I, const QuadIdeal& J) {
        return I.d_ == J.d_ && I.a_ == J.a_ && I.b_ == J.b_ && I.c_ == J.c_;
    }

    /// Z-module generators {g, g*sqrt(d)} for each ideal generator g.
    static std::vector<LatticeVec> z_generators(const Int& d, const std::vector<QuadElem>& gens) {
        std::vector<LatticeVec> out;
        for (const auto& g : gens) {
            out.push_back({g.x(), g.y()});
            out.push_back({g.y() * d, g.x()});
        }
        return out;
    }

   private:
    QuadIdeal(Int d, Int a, Int b, Int c, std::vector<QuadElem> gens)
        : d_(std::move(d)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), gens_(std::move(gens)) {}

    void check_closed() const {
        QuadElem root(0, 1, d_);
        for (const auto& e : basis())
            if (!contains(e * root)) throw MathError("lattice is not closed under sqrt(d)");
    }

    Int d_, a_, b_, c_;
    std::vector<QuadElem> gens_;
};

inline QuadIdeal ideal_from_pair(const QuadElem& a, const QuadElem& b) {
    Int d = detail::merge_d(a.d(), b.d());
    if (d == 0) throw MathError("cannot infer d from two rational integers; pass elements of Z[sqrt(d)]");
    if (a.is_zero() && b.is_zero()) throw MathError("zero ideal");
    return QuadIdeal::generated_by(d, {a, b});
}

inline QuadIdeal principal_ideal(const Int& d, const QuadElem& g) { return QuadIdeal::generated_by(d, {g}); }

inline QuadIdeal ideal_mul(const QuadIdeal& I, const QuadIdeal& J) {
    if (I.d() != J.d()) throw MathError("ideals of different orders");
    std::vector<QuadElem> prods;
    for (const auto& x : I.basis())
        for (const auto& y : J.basis()) prods.push_back(x * y);
    return QuadIdeal::generated_by(I.d(), std::move(prods)).with_basis_generators();
}

inline QuadIdeal ideal_pow(const QuadIdeal& I, unsigned e) {
    QuadIdeal acc = principal_ideal(I.d(), QuadElem(1, 0, I.d()));
    for (unsigned i = 0; i < e; ++i) acc = ideal_mul(acc, I);
    return acc;
}

inline QuadIdeal conjugate(const QuadIdeal& I) {
    std::vector<QuadElem> g;
    for (const auto& e : I.basis()) g.push_back(e.conj());
    return QuadIdeal::generated_by(I.d(), std::move(g));
}

/// Coefficients (lambda_i in Z[sqrt(d)]) with target = sum lambda_i * gens[i],
/// if target lies in the ideal the generators span.
inline std::optional<std::vector<QuadElem>> express_in_generators(const Int& d, const std::vector<QuadElem>& gens,
                                                                   const QuadElem& target) {
    auto h = lattice_hnf(QuadIdeal::z_generators(d, gens));
    auto k = lattice_solve(h, {target.x(), target.y()});
    if (!k) return std::nullopt;
    std::vector<QuadElem> out;
    for (std::size_t i = 0; i < gens.size(); ++i) out.emplace_back((*k)[2 * i], (*k)[2 * i + 1], d);
    return out;
}

struct InvertibilityResult {
    bool invertible = false;
    /// Conjugate ideal J with I*J = (N(I)) when invertible.
    std::optional<QuadIdeal> certificate;
    /// (1 + sqrt(d))/2, which multiplies I into itself, when not invertible.
    std::optional<QuadFieldElem> extra_multiplier;
};

/**
 * Decides whether (I : I) is the whole order Z[sqrt(d)]. The only order
 * strictly between Z[sqrt(d)] and the ring of integers is the ring of
 * integers itself (index 2, d = 1 mod 4), so it suffices to test whether
 * (1 + sqrt(d))/2 multiplies I into I.
 */
inline InvertibilityResult ideal_is_invertible(const QuadIdeal& I) {
    InvertibilityResult r;
    if (mod(I.d(), 4) == 1) {
        QuadFieldElem omega(Rat(1, 2), Rat(1, 2), I.d());
        bool multiplies = true;
        for (const auto& e : I.basis()) {
            auto p = (omega * QuadFieldElem(e)).to_integral();
            if (!p || !I.contains(*p)) {
                multiplies = false;
                break;
            }
        }
        if (multiplies) {
            r.extra_multiplier = omega;
            return r;
        }
    }
    QuadIdeal J = conjugate(I);
    if (!(ideal_mul(I, J) == principal_ideal(I.d(), QuadElem(I.norm(), 0, I.d()))))
        throw MathError("I * conj(I) != (N(I)) for an ideal with multiplier ring O");
    r.invertible = true;
    r.certificate = J;
    return r;
}

struct NormCandidate {
    QuadElem element;
    bool in_ideal = false;
    bool generates = false;  ///< in_ideal and every generator of I is a multiple
};

struct PrincipalityVerdict {
    enum class Kind { Principal, NonPrincipal, NotInvertible };
    Kind kind = Kind::NonPrincipal;
    Int norm;
    std::optional<QuadElem> generator;
    /// generator = sum membership[i] * I.generators()[i]
    std::vector<QuadElem> membership;
    /// I.generators()[i] = generator * quotients[i]
    std::vector<QuadElem> quotients;
    /// Every solution of x^2 - d*y^2 = N(I), in tie-break order.
    std::vector<NormCandidate> transcript;
    std::optional<QuadFieldElem> extra_multiplier;  ///< NotInvertible witness
};

/// All x + y*sqrt(d) of norm n, ordered by x^2, then y^2, then non-negative
/// coordinates first.
inline std::vector<QuadElem> elements_of_norm(const Int& d, const Int& n) {
    require_imaginary(d);
    std::vector<QuadElem> out;
    Int md = -d;
    for (Int y = 0; md * y * y <= n; ++y) {
        Int rest = n - md * y * y;
        if (!is_square(rest)) continue;
        Int x = isqrt(rest);
        for (int sx : {1, -1})
            for (int sy : {1, -1}) {
                if ((sx < 0 && x == 0) || (sy < 0 && y == 0)) continue;
                out.emplace_back(sx * x, sy * y, d);
            }
    }
    std::sort(out.begin(), out.end(), [](const QuadElem& p, const QuadElem& q) {
        auto key = [](const QuadElem& e) {
            return std::make_tuple(Int(e.x() * e.x()), Int(e.y() * e.y()), e.x() < 0, e.y() < 0);
        };
        return key(p) < key(q);
    });
    return out;
}

inline PrincipalityVerdict ideal_is_principal(const QuadIdeal& I) {
    require_imaginary(I.d());
    PrincipalityVerdict v;
    v.norm = I.norm();
    auto inv = ideal_is_invertible(I);
    if (!inv.invertible) {
        v.kind = PrincipalityVerdict::Kind::NotInvertible;
        v.extra_multiplier = inv.extra_multiplier;
        return v;
    }
    for (const auto& g : elements_of_norm(I.d(), v.norm)) {
        NormCandidate c{g};
        c.in_ideal = I.contains(g);
        std::vector<QuadElem> quotients;
        if (c.in_ideal) {
            c.generates = true;
            for (const auto& gen : I.generators()) {
                auto q = divides(g, gen);
                if (!q) {
                    c.generates = false;
                    break;
                }
                quotients.push_back(*q);
            }
        }
        v.transcript.push_back(c);
        if (c.generates && !v.generator) {
            v.kind = PrincipalityVerdict::Kind::Principal;
            v.generator = g;
            v.quotients = std::move(quotients);
            v.membership = *express_in_generators(I.d(), I.generators(), g);
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Prime factorization of principal ideals in maximal orders

enum class Splitting { Ramified, Split, Inert };

struct PrimeIdeal {
    Int p;  ///< rational prime below
    Splitting splitting;
    QuadIdeal ideal;
    unsigned residue_degree() const { return splitting == Splitting::Inert ? 2 : 1; }
};

struct PrimePower {
    PrimeIdeal prime;
    unsigned exponent;
};

/// Primes of Z[sqrt(d)] above p (d = 2, 3 mod 4), the one with smaller HNF b first.
inline std::vector<PrimeIdeal> primes_above(const Int& d, const Int& p) {
    QuadElem pe(p, 0, d);
    if (p == 2 || d % p == 0) {
        Int r = p == 2 ? mod(d, 2) : Int(0);
        return {{p, Splitting::Ramified, QuadIdeal::generated_by(d, {pe, QuadElem(r, 1, d)})}};
    }
    if (legendre(d, p) == -1) return {{p, Splitting::Inert, QuadIdeal::generated_by(d, {pe})}};
    Int r = sqrt_mod_prime(d, p);
    PrimeIdeal P{p, Splitting::Split, QuadIdeal::generated_by(d, {pe, QuadElem(r, 1, d)})};
    PrimeIdeal Q{p, Splitting::Split, QuadIdeal::generated_by(d, {pe, QuadElem(-r, 1, d)})};
    if (Q.ideal.b() < P.ideal.b()) std::swap(P, Q);
    return {P, Q};
}

/**
 * Factorization of (b) into prime ideals of the maximal order Z[sqrt(d)],
 * d = 2, 3 mod 4. Primes appear in order of the rational prime below them.
 */
inline std::vector<PrimePower> factor_principal(const QuadElem& b) {
    const Int& d = b.d();
    if (d == 0) throw MathError("factor_principal needs an element of Z[sqrt(d)]");
    require_imaginary(d);
    if (!is_maximal_order(d))
        throw MathError("factor_principal needs the maximal order (d = 2, 3 mod 4); Z[sqrt(" + to_string(d) +
                        ")] is not maximal");
    if (b.is_zero()) throw MathError("cannot factor zero");
    if (b.is_unit()) throw MathError("cannot factor a unit");
    std::vector<PrimePower> out;
    for (const auto& [p, e_norm] : factor_integer(b.norm())) {
        auto primes = primes_above(d, p);
        const auto& P = primes[0];
        if (P.splitting == Splitting::Ramified) {
            out.push_back({P, e_norm});
        } else if (P.splitting == Splitting::Inert) {
            out.push_back({P, e_norm / 2});
        } else {
            unsigned e1 = 0;
            QuadIdeal power = P.ideal;
            while (e1 < e_norm && power.contains(b)) {
                ++e1;
                power = ideal_mul(power, P.ideal);
            }
            if (e1) out.push_back({P, e1});
            if (e_norm - e1) out.push_back({primes[1], e_norm - e1});
        }
    }
    return out;
}

/// Product of prime powers as an ideal of Z[sqrt(d)].
inline QuadIdeal ideal_product(const Int& d, const std::vector<PrimePower>& f) {
    QuadIdeal acc = principal_ideal(d, QuadElem(1, 0, d));
    for (const auto& pp : f) acc = ideal_mul(acc, ideal_pow(pp.prime.ideal, pp.exponent));
    return acc;
}

}  // namespace princ
