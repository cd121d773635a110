#pragma once

/**
 * @file core.hpp
 * @brief Exact integer and rational arithmetic, dense univariate polynomials,
 * and the extended Euclidean algorithm.
 *
 * Everything else in the library is built on these types. Nothing here ever
 * rounds: Int is an arbitrary-precision integer and Rat is always stored in
 * lowest terms with a positive denominator, so structural equality is value
 * equality.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace princ {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// A hypothesis or precondition of a mathematical operation does not hold.
class MathError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input (unparsable text, unknown ring, bad flag value).
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Int / Rat helpers

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }
inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

/// n/d for any nonzero d (sign moved to the numerator).
inline Rat ratio(const Int& n, const Int& d) {
    if (d == 0) throw MathError("zero denominator");
    return d < 0 ? Rat(Int(-n), Int(-d)) : Rat(n, d);
}

inline std::string to_string(const Int& n) { return n.str(); }
inline std::string to_string(const Rat& q) {
    if (is_integral(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "123", "-7", "3/4" or "-3/4" exactly.
inline Rat parse_rat(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw InputError("not a number: '" + std::string(text) + "'");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw InputError("not a number: '" + std::string(text) + "'");
        return Int(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int n = parse_int(text.substr(0, slash));
    Int d = parse_int(text.substr(slash + 1));
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rat(n, d);
}

inline Int parse_int(std::string_view text) {
    Rat q = parse_rat(text);
    if (!is_integral(q)) throw InputError("expected an integer, got '" + std::string(text) + "'");
    return numerator(q);
}

inline Int abs(const Int& n) { return n < 0 ? Int(-n) : n; }

/// Non-negative residue of a modulo m (m > 0).
inline Int mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Floor division for m > 0.
inline Int floor_div(const Int& a, const Int& m) { return (a - mod(a, m)) / m; }

inline Int gcd(Int a, Int b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

inline Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a / gcd(a, b) * b);
}

struct IntXgcd {
    Int g;  ///< gcd, non-negative
    Int s;
    Int t;  ///< s*a + t*b == g
};

inline IntXgcd xgcd(const Int& a, const Int& b) {
    Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        Int s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Int t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0 < 0) return {-r0, -s0, -t0};
    return {r0, s0, t0};
}

inline Int isqrt(const Int& n) {
    if (n < 0) throw MathError("isqrt of a negative number");
    if (n < 2) return n;
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

inline Int pow(const Int& base, unsigned e) { return boost::multiprecision::pow(base, e); }

inline Rat pow(const Rat& base, int e) {
    if (e < 0) {
        if (base == 0) throw MathError("zero to a negative power");
        return pow(Rat(1) / base, -e);
    }
    Rat acc = 1;
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

/// Prime factorization of |n| by trial division, primes ascending.
inline std::vector<std::pair<Int, unsigned>> factor_integer(Int n) {
    n = abs(n);
    if (n == 0) throw MathError("cannot factor zero");
    std::vector<std::pair<Int, unsigned>> out;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    auto f = factor_integer(n);
    return f.size() == 1 && f[0].second == 1;
}

inline bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    for (auto& [p, e] : factor_integer(n))
        if (e > 1) return false;
    return true;
}

inline Int powmod(const Int& b, const Int& e, const Int& m) { return boost::multiprecision::powm(mod(b, m), e, m); }

/// Legendre symbol (a/p) for an odd prime p.
inline int legendre(const Int& a, const Int& p) {
    Int r = mod(a, p);
    if (r == 0) return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// A square root of a modulo the prime p (Tonelli-Shanks); a must be a residue.
inline Int sqrt_mod_prime(const Int& a, const Int& p) {
    Int n = mod(a, p);
    if (p == 2 || n == 0) return n;
    if (legendre(n, p) != 1) throw MathError(to_string(a) + " is not a square modulo " + to_string(p));
    Int q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (legendre(z, p) != -1) ++z;
    Int c = powmod(z, q, p), r = powmod(n, (q + 1) / 2, p), t = powmod(n, q, p);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        Int t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        Int b = c;
        for (unsigned k = 0; k + i + 1 < m; ++k) b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return std::min(r, Int(p - r));
}

// ---------------------------------------------------------------------------
// Generic scalar protocol used by Poly: zero test and exact division.

/// Zero test usable inside templates: members named is_zero() win, plain
/// numbers compare against 0.
template <class T>
bool scalar_is_zero(const T& x) {
    if constexpr (requires { x.is_zero(); })
        return x.is_zero();
    else
        return x == 0;
}

/// q with a == b*q in the integers, if it exists.
inline std::optional<Int> exact_divide(const Int& a, const Int& b) {
    if (b == 0) throw MathError("division by zero");
    if (a % b != 0) return std::nullopt;
    return Int(a / b);
}

inline std::optional<Rat> exact_divide(const Rat& a, const Rat& b) {
    if (b == 0) throw MathError("division by zero");
    return Rat(a / b);
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials

/**
 * Polynomial with coefficients in T, stored low degree first with trailing
 * zeros stripped. The zero polynomial has no coefficients and degree -1.
 *
 * T only needs ring operations and a zero test for +, -, *; division with
 * remainder and the extended gcd additionally need T to be a field.
 */
template <class T>
class Poly {
   public:
    using value_type = T;

    Poly() = default;
    Poly(T c) {  // NOLINT: constants convert implicitly
        if (!scalar_is_zero(c)) c_.push_back(std::move(c));
    }
    template <std::integral I>
    Poly(I c) : Poly(T(c)) {}  // NOLINT
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(T c, std::size_t degree) {
        if (scalar_is_zero(c)) return {};
        std::vector<T> v(degree + 1, T(0));
        v[degree] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(T(1), 1); }

    const std::vector<T>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const T& lead() const {
        if (c_.empty()) throw MathError("leading coefficient of the zero polynomial");
        return c_.back();
    }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    T constant_term() const { return coeff(0); }

    T operator()(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// this(inner(Z)).
    Poly compose(const Poly& inner) const {
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly(*it);
        return acc;
    }

    template <class F>
    auto map(F&& f) const {
        using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
        std::vector<U> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(f(c));
        return Poly<U>(std::move(v));
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> v(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly scaled(const T& s) const {
        Poly r = *this;
        for (auto& c : r.c_) c = c * s;
        r.trim();
        return r;
    }

    /// Multiply by Z^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> v(k, T(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

   private:
    void trim() {
        while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
Poly<T> pow(const Poly<T>& p, unsigned e) {
    Poly<T> acc(T(1)), base = p;
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

template <class T>
struct PolyDivRem {
    Poly<T> quotient;
    Poly<T> remainder;
};

/// f = q*g + r with deg r < deg g. Coefficients must form a field.
template <class T>
PolyDivRem<T> divrem(const Poly<T>& f, const Poly<T>& g) {
    if (g.is_zero()) throw MathError("division by the zero polynomial");
    std::vector<T> q(std::max(0, f.degree() - g.degree() + 1), T(0));
    Poly<T> r = f;
    const T& lc = g.lead();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
        T c = r.lead() / lc;
        q[shift] = c;
        r -= g.scaled(c).shifted(shift);
    }
    return {Poly<T>(std::move(q)), std::move(r)};
}

/// p divided by its leading coefficient (zero stays zero).
template <class T>
Poly<T> monic(const Poly<T>& p) {
    if (p.is_zero()) return p;
    return p.scaled(T(1) / p.lead());
}

template <class T>
struct PolyXgcd {
    Poly<T> d;  ///< monic gcd, or zero when both inputs are zero
    Poly<T> s;
    Poly<T> t;  ///< s*f + t*g == d
};

template <class T>
PolyXgcd<T> extended_gcd(const Poly<T>& f, const Poly<T>& g) {
    Poly<T> r0 = f, r1 = g, s0(T(1)), s1, t0, t1(T(1));
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        Poly<T> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<T> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {Poly<T>(), Poly<T>(), Poly<T>()};
    T inv = T(1) / r0.lead();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class T>
Poly<T> gcd(const Poly<T>& f, const Poly<T>& g) {
    return extended_gcd(f, g).d;
}

/// q with a == b*q when it exists. Works over any integral domain whose
/// scalars support exact_divide, including nested polynomial rings.
template <class T>
std::optional<Poly<T>> exact_divide(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw MathError("division by the zero polynomial");
    if (a.is_zero()) return Poly<T>();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<T> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), T(0));
    Poly<T> r = a;
    while (!r.is_zero()) {
        if (r.degree() < b.degree()) return std::nullopt;
        auto c = exact_divide(r.lead(), b.lead());
        if (!c) return std::nullopt;
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        q[shift] = *c;
        r -= b.scaled(*c).shifted(shift);
    }
    return Poly<T>(std::move(q));
}

/// Renders p in the expression grammar, lowest degree first ("1-3*Y+Y^2"),
/// formatting coefficients with `fmt`.
template <class T, class Fmt>
std::string to_string_with(const Poly<T>& p, const std::string& var, Fmt&& fmt) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const T& c = p.coeffs()[k];
        if (scalar_is_zero(c)) continue;
        std::string cs = fmt(c);
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string term;
        if (k == 0)
            term = cs;
        else if (cs == "1")
            term = mono;
        else if (cs == "-1")
            term = "-" + mono;
        else if (cs.find_first_of("+-", 1) != std::string::npos)
            term = "(" + cs + ")*" + mono;
        else
            term = cs + "*" + mono;
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

template <class T>
std::string to_string(const Poly<T>& p, const std::string& var) {
    return to_string_with(p, var, [](const T& c) { return to_string(c); });
}

/// Polynomials whose coefficients are polynomials in `inner`.
template <class T>
std::string to_string(const Poly<Poly<T>>& p, const std::string& outer, const std::string& inner) {
    return to_string_with(p, outer, [&](const Poly<T>& c) { return to_string(c, inner); });
}

// ---------------------------------------------------------------------------
// Fractions of polynomials over a field

/**
 * num/den over a coefficient field, kept coprime. When den(0) != 0 the
 * denominator is scaled to constant term 1, otherwise to be monic.
 */
template <class F>
class RatFunc {
   public:
    RatFunc() : den_(F(1)) {}
    RatFunc(Poly<F> num) : num_(std::move(num)), den_(F(1)) {}  // NOLINT
    RatFunc(F c) : RatFunc(Poly<F>(std::move(c))) {}             // NOLINT
    template <std::integral I>
    RatFunc(I c) : RatFunc(F(c)) {}  // NOLINT
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Poly<F>& num() const noexcept { return num_; }
    const Poly<F>& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw MathError("division by zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RatFunc operator-() const { return {-num_, den_}; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

   private:
    void normalize() {
        if (den_.is_zero()) throw MathError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>(F(1));
            return;
        }
        Poly<F> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divrem(num_, g).quotient;
            den_ = divrem(den_, g).quotient;
        }
        F scale = scalar_is_zero(den_.constant_term()) ? den_.lead() : den_.constant_term();
        F inv = F(1) / scale;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    Poly<F> num_;
    Poly<F> den_;
};

// ---------------------------------------------------------------------------
// Small square matrices

template <class T, std::size_t N>
using Matrix = std::array<std::array<T, N>, N>;

template <class T, std::size_t N>
Matrix<T, N> matmul(const Matrix<T, N>& a, const Matrix<T, N>& b) {
    Matrix<T, N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            T acc(0);
            for (std::size_t k = 0; k < N; ++k) acc = acc + a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

}  // namespace princ
