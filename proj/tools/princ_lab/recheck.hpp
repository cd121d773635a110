#pragma once

// Independent verifier for report claims. Deliberately self-contained: its
// own tokenizer, sparse multivariate arithmetic and reduction rules, built
// directly on Boost.Multiprecision. Nothing here calls into the producers.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace princ_lab::recheck {

using Z = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Sparse Laurent polynomials with rational exponents

using Mono = std::map<std::string, Q>;  // variable -> nonzero exponent
using Sparse = std::map<Mono, Q>;       // monomial -> nonzero coefficient

inline void add_term(Sparse& p, const Mono& m, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = p.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline Sparse constant(const Q& c) {
    Sparse p;
    add_term(p, {}, c);
    return p;
}

inline Sparse variable(const std::string& v, const Q& e = 1) {
    Sparse p;
    add_term(p, {{v, e}}, 1);
    return p;
}

inline Sparse add(const Sparse& a, const Sparse& b, int sign = 1) {
    Sparse out = a;
    for (const auto& [m, c] : b) add_term(out, m, sign * c);
    return out;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono out = a;
    for (const auto& [v, e] : b) {
        Q& slot = out[v];
        slot += e;
        if (slot == 0) out.erase(v);
    }
    return out;
}

inline Sparse mul(const Sparse& a, const Sparse& b) {
    Sparse out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) add_term(out, mono_mul(ma, mb), ca * cb);
    return out;
}

inline Sparse power(const Sparse& a, unsigned long e) {
    Sparse acc = constant(1), base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

inline bool is_constant(const Sparse& p) { return p.empty() || (p.size() == 1 && p.begin()->first.empty()); }
inline Q constant_value(const Sparse& p) { return p.empty() ? Q(0) : p.begin()->second; }

struct Frac {
    Sparse num, den = constant(1);
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
   public:
    explicit Parser(std::string text) : s_(std::move(text)) {}

    Frac parse() {
        Frac f = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return f;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("column " + std::to_string(i_ + 1) + " of '" + s_ + "': " + msg);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    Frac expr() {
        Frac acc = term();
        for (;;) {
            if (eat('+'))
                acc = sum(acc, term(), 1);
            else if (eat('-'))
                acc = sum(acc, term(), -1);
            else
                return acc;
        }
    }
    Frac term() {
        Frac acc = unary();
        for (;;) {
            if (eat('*')) {
                Frac r = unary();
                acc = {mul(acc.num, r.num), mul(acc.den, r.den)};
            } else if (eat('/')) {
                Frac r = unary();
                if (r.num.empty()) fail("division by zero");
                acc = {mul(acc.num, r.den), mul(acc.den, r.num)};
            } else {
                return acc;
            }
        }
    }
    Frac unary() {
        if (eat('-')) {
            Frac f = unary();
            return {add({}, f.num, -1), f.den};
        }
        if (eat('+')) return unary();
        return pow_expr();
    }
    Frac pow_expr() {
        bool bare_var = false;
        std::string var;
        Frac base = primary(bare_var, var);
        if (!eat('^')) return base;
        Frac ef = unary();
        if (!is_constant(ef.num) || !is_constant(ef.den)) fail("exponent must be a rational constant");
        Q e = constant_value(ef.num) / constant_value(ef.den);
        if (denominator(e) != 1) {
            if (!bare_var) fail("fractional exponent on a non-variable");
            return {variable(var, e), constant(1)};
        }
        Z n = numerator(e);
        if (n < 0) {
            if (base.num.empty()) fail("zero to a negative power");
            std::swap(base.num, base.den);
            n = -n;
        }
        if (n > 100000) fail("exponent too large");
        auto k = n.convert_to<unsigned long>();
        return {power(base.num, k), power(base.den, k)};
    }
    Frac primary(bool& bare_var, std::string& var) {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Frac f = expr();
            if (!eat(')')) fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            Z v(s_.substr(i_, j - i_));
            i_ = j;
            return {constant(Q(v)), constant(1)};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
            std::string name = s_.substr(i_, j - i_);
            i_ = j;
            if (name == "sqrt") {
                if (!eat('(')) fail("expected '(' after sqrt");
                skip();
                std::size_t k = i_;
                if (k < s_.size() && s_[k] == '-') ++k;
                std::size_t digits = k;
                while (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) ++k;
                if (k == digits) fail("sqrt takes an integer literal");
                name = "sqrt(" + s_.substr(i_, k - i_) + ")";
                i_ = k;
                if (!eat(')')) fail("expected ')'");
                Z d(name.substr(5, name.size() - 6));
                name = "sqrt(" + d.str() + ")";
            }
            bare_var = true;
            var = name;
            return {variable(name), constant(1)};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
    static Frac sum(const Frac& a, const Frac& b, int sign) {
        return {add(mul(a.num, b.den), mul(b.num, a.den), sign), mul(a.den, b.den)};
    }

    std::string s_;
    std::size_t i_ = 0;
};

inline Frac parse(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Ring families and their reduction rules

struct Family {
    std::string kind;            // Z quadratic QX pullback monoid limit polyext sphere poly
    Z d = 0;                     // quadratic, poly over Z[sqrt(d)]
    bool field = false;          // monoid base Q, limit over Q
    std::vector<Z> inverted;     // monoid base Z[1/..]
    std::vector<Z> exp_primes;   // monoid exponent denominators
    bool group = false;
    std::vector<unsigned> excluded;  // polyext

    static Family from_json(const nlohmann::json& j) {
        Family f;
        f.kind = j.at("family").get<std::string>();
        auto ints = [&](const char* key) {
            std::vector<Z> out;
            if (j.contains(key))
                for (const auto& v : j.at(key)) out.emplace_back(v.get<std::string>());
            return out;
        };
        if (j.contains("d")) f.d = Z(j.at("d").get<std::string>());
        if (j.contains("coefficients")) f.field = j.at("coefficients").get<std::string>() == "Q";
        if (j.contains("base")) f.field = j.at("base").get<std::string>() == "Q";
        f.inverted = ints("inverted");
        f.exp_primes = ints("exponent_primes");
        if (j.contains("group")) f.group = j.at("group").get<bool>();
        if (j.contains("excluded"))
            for (const auto& v : j.at("excluded")) f.excluded.push_back(static_cast<unsigned>(std::stoul(v.get<std::string>())));
        return f;
    }
};

inline bool is_int(const Q& q) { return denominator(q) == 1; }

/// sqrt(D)^e -> D^(e div 2) sqrt(D)^(e mod 2)
inline Sparse reduce_sqrt(const Sparse& p) {
    Sparse out;
    for (const auto& [m, c] : p) {
        Mono nm;
        Q coef = c;
        for (const auto& [v, e] : m) {
            if (v.rfind("sqrt(", 0) != 0) {
                nm[v] = e;
                continue;
            }
            if (!is_int(e) || e < 0) throw Error("non-integral power of " + v);
            Z D(v.substr(5, v.size() - 6));
            Z n = numerator(e);
            for (Z k = 0; k < n / 2; ++k) coef *= Q(D);
            if (n % 2) nm[v] = 1;
        }
        add_term(out, nm, coef);
    }
    return out;
}

/// X0^2 -> 1 - X1^2 - X2^2
inline Sparse reduce_sphere(const Sparse& p) {
    const Sparse rho = add(constant(1), add(variable("X1", 2), variable("X2", 2)), -1);
    Sparse out;
    for (const auto& [m, c] : p) {
        Mono rest = m;
        unsigned long k = 0;
        if (auto it = rest.find("X0"); it != rest.end()) {
            if (!is_int(it->second) || it->second < 0) throw Error("bad power of X0");
            Z n = numerator(it->second);
            k = (n / 2).convert_to<unsigned long>();
            if (n % 2)
                it->second = 1;
            else
                rest.erase(it);
        }
        Sparse t;
        add_term(t, rest, c);
        out = add(out, mul(t, power(rho, k)));
    }
    return out;
}

inline bool limit_level(const std::string& v, unsigned& n) {
    if (v.size() < 3 || v[0] != 'x' || v[1] != '_') return false;
    n = static_cast<unsigned>(std::stoul(v.substr(2)));
    return n >= 1;
}

/// x_i -> x_{i+1} + x_{i+1}^2 up to the highest level present.
inline Sparse reduce_limit(const Sparse& p) {
    unsigned top = 0, n = 0;
    for (const auto& [m, c] : p)
        for (const auto& [v, e] : m)
            if (limit_level(v, n)) top = std::max(top, n);
    if (top == 0) return p;
    std::map<unsigned, Sparse> sub;
    sub[top] = variable("x_" + std::to_string(top));
    for (unsigned i = top; i-- > 1;) sub[i] = add(sub[i + 1], mul(sub[i + 1], sub[i + 1]));
    Sparse out;
    for (const auto& [m, c] : p) {
        Mono rest;
        Sparse t = constant(c);
        for (const auto& [v, e] : m) {
            if (limit_level(v, n)) {
                if (!is_int(e) || e < 0) throw Error("bad power of " + v);
                t = mul(t, power(sub[n], numerator(e).convert_to<unsigned long>()));
            } else {
                rest[v] = e;
            }
        }
        Sparse r;
        add_term(r, rest, 1);
        out = add(out, mul(t, r));
    }
    return out;
}

inline Sparse reduce(const Sparse& p, const Family& f) {
    Sparse out = reduce_sqrt(p);
    if (f.kind == "sphere") out = reduce_sphere(out);
    if (f.kind == "limit") out = reduce_limit(out);
    return out;
}

/// num/den with a nonzero constant denominator folded into the numerator.
inline Frac normalize(Frac x, const Family& f) {
    x.num = reduce(x.num, f);
    x.den = reduce(x.den, f);
    if (x.den.empty()) throw Error("denominator reduces to zero");
    if (is_constant(x.den)) {
        Q c = constant_value(x.den);
        Sparse n;
        for (const auto& [m, v] : x.num) add_term(n, m, v / c);
        x = {n, constant(1)};
    }
    return x;
}

inline bool equal(const Frac& a, const Frac& b, const Family& f) {
    for (const auto* x : {&a, &b})
        if (reduce(x->den, f).empty()) throw Error("denominator reduces to zero");
    return reduce(add(mul(a.num, b.den), mul(b.num, a.den), -1), f).empty();
}

// ---------------------------------------------------------------------------
// Membership

inline bool only_vars(const Sparse& p, const std::function<bool(const std::string&, const Q&)>& ok) {
    for (const auto& [m, c] : p)
        for (const auto& [v, e] : m)
            if (!ok(v, e)) return false;
    return true;
}

inline bool nonneg_int(const Q& e) { return is_int(e) && e >= 0; }

inline bool denominator_in(const Z& den, const std::vector<Z>& primes) {
    Z rest = den;
    for (const auto& p : primes)
        while (rest % p == 0) rest /= p;
    return rest == 1;
}

inline bool integral_coeffs(const Sparse& p) {
    for (const auto& [m, c] : p)
        if (!is_int(c)) return false;
    return true;
}

inline Z sqrt_d(const std::string& v) { return Z(v.substr(5, v.size() - 6)); }

/// Element of Z + Y*Q[Y]_(Y), after cancelling common powers of Y.
inline bool pullback_member(Frac x, bool maximal) {
    auto y_only = [](const std::string& v, const Q& e) { return v == "Y" && nonneg_int(e); };
    if (!only_vars(x.num, y_only) || !only_vars(x.den, y_only)) return false;
    auto at_zero = [](const Sparse& p) {
        auto it = p.find(Mono{});
        return it == p.end() ? Q(0) : it->second;
    };
    auto shift = [](const Sparse& p) {
        Sparse out;
        for (const auto& [m, c] : p) {
            Mono nm = m;
            if (--nm["Y"] == 0) nm.erase("Y");
            add_term(out, nm, c);
        }
        return out;
    };
    if (x.num.empty()) return true;
    while (at_zero(x.num) == 0 && at_zero(x.den) == 0) {
        x.num = shift(x.num);
        x.den = shift(x.den);
    }
    Q d0 = at_zero(x.den);
    if (d0 == 0) return false;
    Q v = at_zero(x.num) / d0;
    return maximal ? v == 0 : is_int(v);
}

inline bool member(const Frac& raw, const Family& f) {
    if (f.kind == "pullback") return pullback_member(raw, false);
    Frac x = normalize(raw, f);
    if (!is_constant(x.den)) return false;
    const Sparse& p = x.num;
    if (f.kind == "Z") return is_constant(p) && is_int(constant_value(p));
    if (f.kind == "quadratic")
        return integral_coeffs(p) && only_vars(p, [&](const std::string& v, const Q&) {
                   return v.rfind("sqrt(", 0) == 0 && sqrt_d(v) == f.d;
               });
    if (f.kind == "QX") return only_vars(p, [](const std::string& v, const Q& e) { return v == "X" && nonneg_int(e); });
    if (f.kind == "poly")
        return integral_coeffs(p) && only_vars(p, [&](const std::string& v, const Q& e) {
                   if (v == "X") return nonneg_int(e);
                   return f.d != 0 && v.rfind("sqrt(", 0) == 0 && sqrt_d(v) == f.d;
               });
    if (f.kind == "monoid") {
        for (const auto& [m, c] : p) {
            if (!f.field && !denominator_in(denominator(c), f.inverted)) return false;
            for (const auto& [v, e] : m) {
                if (v != "X") return false;
                if (!f.group && e < 0) return false;
                if (!denominator_in(denominator(e), f.exp_primes)) return false;
            }
        }
        return true;
    }
    if (f.kind == "limit") {
        unsigned n = 0;
        if (!f.field && !integral_coeffs(p)) return false;
        return only_vars(p, [&](const std::string& v, const Q& e) { return limit_level(v, n) && nonneg_int(e); });
    }
    if (f.kind == "polyext") {
        for (const auto& [m, c] : p)
            for (const auto& [v, e] : m) {
                if ((v != "X" && v != "y") || !nonneg_int(e)) return false;
            }
        for (const auto& [m, c] : p) {
            auto it = m.find("y");
            unsigned k = it == m.end() ? 0u : numerator(it->second).convert_to<unsigned>();
            for (unsigned ex : f.excluded)
                if (k == ex) return false;
        }
        return true;
    }
    if (f.kind == "sphere")
        return only_vars(p, [](const std::string& v, const Q& e) {
            return (v == "X0" || v == "X1" || v == "X2") && nonneg_int(e);
        });
    throw Error("unknown ring family '" + f.kind + "'");
}

// ---------------------------------------------------------------------------
// Non-principality in Z[sqrt(d)], d < 0

struct QuadPoint {
    Z x, y;
};

inline QuadPoint as_quad(const std::string& text, const Z& d) {
    Frac f = parse(text);
    Family fam;
    fam.kind = "quadratic";
    fam.d = d;
    f = normalize(f, fam);
    if (!is_constant(f.den) || !integral_coeffs(f.num)) throw Error("'" + text + "' is not in Z[sqrt(d)]");
    QuadPoint q{0, 0};
    for (const auto& [m, c] : f.num) {
        if (m.empty())
            q.x = numerator(c);
        else if (m.size() == 1 && m.begin()->first == "sqrt(" + d.str() + ")")
            q.y = numerator(c);
        else
            throw Error("'" + text + "' is not in Z[sqrt(" + d.str() + ")]");
    }
    return q;
}

inline Z gcd_z(Z a, Z b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Z t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// [O : I] as the gcd of the 2x2 minors of the Z-generators {g, g*sqrt(d)}.
inline Z lattice_index(const std::vector<QuadPoint>& gens, const Z& d) {
    std::vector<QuadPoint> v;
    for (const auto& g : gens) {
        v.push_back(g);
        v.push_back({d * g.y, g.x});
    }
    Z acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) acc = gcd_z(acc, v[i].x * v[j].y - v[i].y * v[j].x);
    return acc;
}

/// True when no element of norm [O : I] divides every generator.
inline bool nonprincipal(const std::vector<QuadPoint>& gens, const Z& d) {
    if (d >= 0) throw Error("non-principality check needs d < 0");
    Z n = lattice_index(gens, d);
    if (n == 0) throw Error("zero ideal");
    auto divides = [&](const QuadPoint& g, const QuadPoint& a) {
        // a * conj(g) / N(g)
        Z ng = g.x * g.x - d * g.y * g.y;
        Z re = a.x * g.x - d * a.y * g.y;
        Z im = a.y * g.x - a.x * g.y;
        return re % ng == 0 && im % ng == 0;
    };
    for (Z y = 0; -d * y * y <= n; ++y) {
        Z rest = n + d * y * y;
        Z x = boost::multiprecision::sqrt(rest);
        if (x * x != rest) continue;
        for (int sx : {1, -1})
            for (int sy : {1, -1}) {
                QuadPoint g{sx * x, sy * y};
                bool all = true;
                for (const auto& a : gens) all = all && divides(g, a);
                if (all) return false;
            }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Driver

struct Outcome {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline bool check_claim(const nlohmann::json& c, const Family& f) {
    const std::string kind = c.at("kind").get<std::string>();
    auto elem = [&](const char* key) { return parse(c.at(key).get<std::string>()); };
    if (kind == "eq") return equal(elem("lhs"), elem("rhs"), f);
    if (kind == "member") return member(elem("element"), f);
    if (kind == "nonmember") return !member(elem("element"), f);
    if (kind == "maximal") {
        if (f.kind != "pullback") throw Error("'maximal' claims only apply to the pullback");
        return pullback_member(elem("element"), true);
    }
    if (kind == "nonprincipal") {
        Z d = f.d;
        if (c.contains("d")) d = Z(c.at("d").get<std::string>());
        std::vector<QuadPoint> gens;
        for (const auto& g : c.at("generators")) gens.push_back(as_quad(g.get<std::string>(), d));
        return nonprincipal(gens, d);
    }
    throw Error("unknown claim kind '" + kind + "'");
}

/// Verifies every claim of a report; each claim may override the report's ring.
inline Outcome verify(const nlohmann::json& report) {
    Outcome out;
    if (!report.contains("claims")) return out;
    const nlohmann::json* ring = report.contains("ring") ? &report.at("ring") : nullptr;
    std::size_t idx = 0;
    for (const auto& c : report.at("claims")) {
        std::string label = "claim " + std::to_string(idx++);
        if (c.contains("note")) label += " (" + c.at("note").get<std::string>() + ")";
        try {
            const nlohmann::json* r = c.contains("ring") ? &c.at("ring") : ring;
            if (!r) throw Error("no ring given");
            if (!check_claim(c, Family::from_json(*r))) out.failures.push_back(label + ": does not hold");
        } catch (const std::exception& e) {
            out.failures.push_back(label + ": " + e.what());
        }
        ++out.checked;
    }
    return out;
}

}  // namespace princ_lab::recheck
