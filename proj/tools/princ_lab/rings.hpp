#pragma once

// --ring handles and the per-family element evaluators.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "princ/core.hpp"
#include "princ/limitring.hpp"
#include "princ/monoidring.hpp"
#include "princ/polyext.hpp"
#include "princ/pullback.hpp"
#include "princ/quadring.hpp"
#include "princ/sphere.hpp"
#include "princ_lab/expr.hpp"

namespace princ_lab {

using nlohmann::json;
using princ::InputError;

/// An element that failed to parse, with the offending input kept for display.
struct ElementError : std::runtime_error {
    std::string input;
    ParseError cause;
    ElementError(std::string in, ParseError e)
        : std::runtime_error(describe(e, in)), input(std::move(in)), cause(std::move(e)) {}
};

template <class Traits>
typename Traits::Elem parse_with(const Traits& t, const std::string& text) {
    try {
        return eval(parse_expr(text), t);
    } catch (const ParseError& e) {
        throw ElementError(text, e);
    }
}

inline std::string trim(std::string s) {
    auto sp = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && sp(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && sp(s[i])) ++i;
    return s.substr(i);
}

inline std::vector<Int> prime_list(const std::string& text, const std::string& what) {
    std::vector<Int> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            cur = trim(cur);
            if (cur.empty()) throw InputError("empty entry in " + what + " '" + text + "'");
            out.push_back(princ::parse_int(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

/// p-div:P or mult:{p,q,...}
inline princ::MonoidDesc parse_monoid(const std::string& text, bool group) {
    std::string s = trim(text);
    if (s.rfind("p-div:", 0) == 0) return princ::MonoidDesc::p_divisible(princ::parse_int(trim(s.substr(6))), group);
    if (s.rfind("mult:", 0) == 0) {
        std::string body = trim(s.substr(5));
        if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
        return princ::MonoidDesc::multiplicative(prime_list(body, "monoid"), group);
    }
    throw InputError("--monoid must be p-div:P or mult:{p,q,...}, got '" + text + "'");
}

struct RingSpec {
    enum class Family { Z, Quadratic, QX, Monoid, Pullback, Limit, Sphere };
    Family family = Family::Z;
    std::string text;
    Int d = 0;
    princ::MonoidRingPtr monoid;
    bool limit_over_q = true;
};

/**
 * Z | Q | Q[X] | Z[sqrt(d)] | D[X;S] with D in {Q, Z, Z[1/n]} | pullback:Z |
 * limitring:Q | limitring:Z | B2
 */
inline RingSpec parse_ring(const std::string& text, const std::string& monoid, bool group) {
    RingSpec r;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    r.text = s;
    using F = RingSpec::Family;
    if (s == "Z") return r.family = F::Z, r;
    if (s == "Q" || s == "Q[X]") return r.family = F::QX, r;
    if (s == "B2") return r.family = F::Sphere, r;
    if (s == "pullback:Z") return r.family = F::Pullback, r;
    if (s == "limitring:Q" || s == "limitring:Z") {
        r.family = F::Limit;
        r.limit_over_q = s.back() == 'Q';
        return r;
    }
    if (s.rfind("Z[sqrt(", 0) == 0 && s.size() > 9 && s.substr(s.size() - 2) == ")]") {
        r.family = F::Quadratic;
        r.d = princ::parse_int(s.substr(7, s.size() - 9));
        if (r.d == 0 || r.d == 1) throw InputError("Z[sqrt(d)] needs d different from 0 and 1");
        return r;
    }
    const std::string tail = "[X;S]";
    if (s.size() > tail.size() && s.substr(s.size() - tail.size()) == tail) {
        std::string base = s.substr(0, s.size() - tail.size());
        princ::BaseRing b;
        if (base == "Q")
            b = princ::BaseRing::rationals();
        else if (base == "Z")
            b = princ::BaseRing::integers();
        else if (base.rfind("Z[1/", 0) == 0 && base.back() == ']') {
            Int n = princ::parse_int(base.substr(4, base.size() - 5));
            if (n < 2) throw InputError("Z[1/n] needs n >= 2");
            std::vector<Int> ps;
            for (const auto& [p, e] : princ::factor_integer(n)) ps.push_back(p);
            b = princ::BaseRing::integers(ps);
        } else {
            throw InputError("base ring of D[X;S] must be Q, Z or Z[1/n], got '" + base + "'");
        }
        if (monoid.empty()) throw InputError("D[X;S] needs --monoid p-div:P or mult:{p,...}");
        r.family = F::Monoid;
        r.monoid = princ::make_monoid_ring(b, parse_monoid(monoid, group));
        return r;
    }
    throw InputError("unknown ring '" + text +
                     "'; expected Z, Q, Z[sqrt(d)], D[X;S], pullback:Z, limitring:Q, limitring:Z or B2");
}

inline std::vector<std::string> strings(const std::vector<Int>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(princ::to_string(x));
    return out;
}

// ---------------------------------------------------------------------------
// Evaluators. Each provides Elem, the Traits hooks of eval(), parse(),
// str() and a descriptor() understood by the rechecker.

[[noreturn]] inline void unknown_symbol(const std::string& name, const std::string& ring, std::size_t pos) {
    throw ParseError(pos, "unknown symbol '" + name + "' in " + ring);
}

struct IntRing {
    using Elem = Int;
    Elem number(const Rat& q, std::size_t) const { return princ::numerator(q); }
    Elem ident(const std::string& n, std::size_t pos) const { unknown_symbol(n, "Z", pos); }
    Elem sqrt(const Int&, std::size_t pos) const { throw ParseError(pos, "sqrt is not available in Z"); }
    Elem divide(const Elem& a, const Elem& b, std::size_t pos) const {
        if (b == 0) throw ParseError(pos, "division by zero");
        auto q = princ::exact_divide(a, b);
        if (!q) throw ParseError(pos, princ::to_string(b) + " does not divide " + princ::to_string(a) + " in Z");
        return *q;
    }
    std::optional<Elem> monomial_power(const std::string&, const Rat&, std::size_t) const { return std::nullopt; }

    Elem parse(const std::string& s) const { return parse_with(*this, s); }
    static std::string str(const Elem& e) { return princ::to_string(e); }
    std::string name() const { return "Z"; }
    json descriptor() const { return {{"family", "Z"}}; }
};

struct QuadRing {
    using Elem = princ::QuadElem;
    Int d;
    Elem number(const Rat& q, std::size_t) const { return Elem(princ::numerator(q), 0, d); }
    Elem ident(const std::string& n, std::size_t pos) const { unknown_symbol(n, name(), pos); }
    Elem sqrt(const Int& k, std::size_t pos) const {
        if (k != d) throw ParseError(pos, "sqrt(" + princ::to_string(k) + ") is not in " + name());
        return Elem(0, 1, d);
    }
    Elem divide(const Elem& a, const Elem& b, std::size_t pos) const {
        if (b.is_zero()) throw ParseError(pos, "division by zero");
        auto q = princ::divides(b, a);
        if (!q) throw ParseError(pos, princ::to_string(b) + " does not divide " + princ::to_string(a) + " in " + name());
        return *q;
    }
    std::optional<Elem> monomial_power(const std::string&, const Rat&, std::size_t) const { return std::nullopt; }

    Elem parse(const std::string& s) const { return parse_with(*this, s).with_d(d); }
    static std::string str(const Elem& e) { return princ::to_string(e); }
    std::string name() const { return "Z[sqrt(" + princ::to_string(d) + ")]"; }
    json descriptor() const { return {{"family", "quadratic"}, {"d", princ::to_string(d)}}; }
};

struct QXRing {
    using Elem = princ::Poly<Rat>;
    Elem number(const Rat& q, std::size_t) const { return Elem(q); }
    Elem ident(const std::string& n, std::size_t pos) const {
        if (n != "X") unknown_symbol(n, "Q[X]", pos);
        return Elem::variable();
    }
    Elem sqrt(const Int&, std::size_t pos) const { throw ParseError(pos, "sqrt is not available in Q[X]"); }
    Elem divide(const Elem& a, const Elem& b, std::size_t pos) const {
        if (b.is_zero()) throw ParseError(pos, "division by zero");
        auto q = princ::exact_divide(a, b);
        if (!q) throw ParseError(pos, "quotient is not a polynomial");
        return *q;
    }
    std::optional<Elem> monomial_power(const std::string&, const Rat&, std::size_t) const { return std::nullopt; }

    Elem parse(const std::string& s) const { return parse_with(*this, s); }
    static std::string str(const Elem& e) { return princ::to_string(e, "X"); }
    std::string name() const { return "Q[X]"; }
    json descriptor() const { return {{"family", "QX"}}; }
};

/// Z + Y*Q[Y]_(Y): expressions are evaluated in Q(Y), then tested for membership.
struct PullbackRing {
    using Elem = princ::PullbackElem<Int>;
    using Fn = princ::RatFunc<Rat>;

    struct Field {
        using Elem = Fn;
        Elem number(const Rat& q, std::size_t) const { return Fn(q); }
        Elem ident(const std::string& n, std::size_t pos) const {
            if (n != "Y") unknown_symbol(n, "Z + Y*Q[Y]_(Y)", pos);
            return Fn(princ::Poly<Rat>::variable());
        }
        Elem sqrt(const Int&, std::size_t pos) const { throw ParseError(pos, "sqrt is not available here"); }
        Elem divide(const Elem& a, const Elem& b, std::size_t pos) const {
            if (b.is_zero()) throw ParseError(pos, "division by zero");
            return a / b;
        }
        std::optional<Elem> monomial_power(const std::string&, const Rat&, std::size_t) const { return std::nullopt; }
    };

    Elem parse(const std::string& s) const {
        Fn f = parse_with(Field{}, s);
        std::optional<Elem> e;
        try {
            e = Elem::member(f);
        } catch (const princ::MathError& err) {
            throw ElementError(s, ParseError(0, err.what()));
        }
        if (!e) throw ElementError(s, ParseError(0, "value at Y = 0 is not in Z, so the element is outside Z + M"));
        return *e;
    }
    static std::string str(const Elem& e) { return princ::to_string(e); }
    std::string name() const { return "Z + Y*Q[Y]_(Y)"; }
    json descriptor() const { return {{"family", "pullback"}, {"base", "Z"}}; }
};

struct MonoidRingCtx {
    using Elem = princ::MonoidElem;
    princ::MonoidRingPtr ring;

    Elem number(const Rat& q, std::size_t) const { return Elem::constant(ring, q); }
    Elem ident(const std::string& n, std::size_t pos) const {
        if (n != "X") unknown_symbol(n, name(), pos);
        return Elem::monomial(ring, 1, 1);
    }
    Elem sqrt(const Int&, std::size_t pos) const { throw ParseError(pos, "sqrt is not available in " + name()); }
    Elem divide(const Elem& a, const Elem& b, std::size_t pos) const {
        if (b.is_zero()) throw ParseError(pos, "division by zero");
        auto q = princ::exact_divide(a, b);
        if (!q) throw ParseError(pos, "quotient is not in " + name());
        return *q;
    }
    std::optional<Elem> monomial_power(const std::string& n, const Rat& e, std::size_t pos) const {
        if (n != "X") return std::nullopt;
        if (!ring->monoid.contains(e))
            throw ParseError(pos, "exponent " + princ::to_string(e) + " is not in S = " + ring->monoid.name());
        return Elem::monomial(ring, 1, e);
    }

    Elem parse(const std::string& s) const { return parse_with(*this, s); }
    static std::string str(const Elem& e) { return princ::to_string(e); }
    std::string name() const { return ring->name(); }
    json descriptor() const {
        const auto& b = ring->base;
        const auto& m = ring->monoid;
        return {{"family", "monoid"},
                {"base", b.field ? "Q" : "Z"},
                {"inverted", strings(b.inverted)},
                {"exponent_primes", strings(m.primes)},
                {"monoid", m.name()},
                {"group", m.group}};
    }
};

template <class Coef>
struct LimitRing {
    using Elem = princ::LimitElem<Coef>;
    static constexpr bool over_q = std::is_same_v<Coef, Rat>;

    Elem number(const Rat& q, std::size_t pos) const {
        if constexpr (over_q)
            return Elem::constant(q);
        else {
            if (!princ::is_integral(q)) throw ParseError(pos, "coefficient " + princ::to_string(q) + " is not in Z");
            return Elem::constant(princ::numerator(q));
        }
    }
    Elem ident(const std::string& n, std::size_t pos) const {
        if (n.size() > 2 && n.rfind("x_", 0) == 0 &&
            std::all_of(n.begin() + 2, n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            unsigned long k = std::stoul(n.substr(2));
            if (k >= 1 && k <= 64) return Elem::x(static_cast<unsigned>(k));
            throw ParseError(pos, "limit ring levels run from x_1 to x_64");
        }
        unknown_symbol(n, name(), pos);
    }
    Elem sqrt(const Int&, std::size_t pos) const { throw ParseError(pos, "sqrt is not available in " + name()); }
    Elem divide(const Elem& a, const Elem& b, std::size_t pos) const {
        if (b.is_zero()) throw ParseError(pos, "division by zero");
        auto q = princ::exact_divide(a, b);
        if (!q) throw ParseError(pos, "quotient is not in " + name());
        return *q;
    }
    std::optional<Elem> monomial_power(const std::string&, const Rat&, std::size_t) const { return std::nullopt; }

    Elem parse(const std::string& s) const { return parse_with(*this, s); }
    static std::string str(const Elem& e) { return princ::to_string(e); }
    std::string name() const { return over_q ? "limitring:Q" : "limitring:Z"; }
    json descriptor() const { return {{"family", "limit"}, {"coefficients", over_q ? "Q" : "Z"}}; }
};

struct SphereRing {
    using Elem = princ::SphereElem;
    Elem number(const Rat& q, std::size_t) const { return Elem(q); }
    Elem ident(const std::string& n, std::size_t pos) const {
        if (n == "X0") return Elem::x(0);
        if (n == "X1") return Elem::x(1);
        if (n == "X2") return Elem::x(2);
        unknown_symbol(n, "B2", pos);
    }
    Elem sqrt(const Int&, std::size_t pos) const { throw ParseError(pos, "sqrt is not available in B2"); }
    Elem divide(const Elem& a, const Elem& b, std::size_t pos) const {
        if (b.is_zero()) throw ParseError(pos, "division by zero");
        auto q = princ::exact_divide(a, b);
        if (!q) throw ParseError(pos, "quotient is not in B2");
        return *q;
    }
    std::optional<Elem> monomial_power(const std::string&, const Rat&, std::size_t) const { return std::nullopt; }

    Elem parse(const std::string& s) const { return parse_with(*this, s); }
    static std::string str(const Elem& e) { return princ::to_string(e); }
    std::string name() const { return "B2"; }
    json descriptor() const { return {{"family", "sphere"}}; }
};

/// Q[y][X]; membership in D[X] is checked by the commands, since alpha
/// itself lives outside D.
struct PolyextRing {
    using Elem = princ::PolyXY;
    princ::SubringDesc D;

    Elem number(const Rat& q, std::size_t) const { return Elem(princ::PolyY(q)); }
    Elem ident(const std::string& n, std::size_t pos) const {
        if (n == "X") return Elem::monomial(princ::PolyY(1), 1);
        if (n == "y") return Elem(princ::PolyY::variable());
        unknown_symbol(n, "Q[y][X]", pos);
    }
    Elem sqrt(const Int&, std::size_t pos) const { throw ParseError(pos, "sqrt is not available in Q[y][X]"); }
    Elem divide(const Elem& a, const Elem& b, std::size_t pos) const {
        if (b.is_zero()) throw ParseError(pos, "division by zero");
        auto q = princ::exact_divide(a, b);
        if (!q) throw ParseError(pos, "quotient is not a polynomial");
        return *q;
    }
    std::optional<Elem> monomial_power(const std::string&, const Rat&, std::size_t) const { return std::nullopt; }

    Elem parse(const std::string& s) const { return parse_with(*this, s); }
    static std::string str(const Elem& e) { return princ::to_string(e, "X", "y"); }
    std::string name() const { return D.name() + "[X]"; }
    json descriptor() const {
        std::vector<std::string> ex;
        for (unsigned k : D.excluded()) ex.push_back(std::to_string(k));
        return {{"family", "polyext"}, {"excluded", ex}};
    }
};

/// D[X] for D = Z or Z[sqrt(d)], used by polyext contract.
template <class D>
struct PolyOver {
    using Elem = princ::Poly<D>;
    Int d = 0;  // 0 for Z

    Elem number(const Rat& q, std::size_t) const {
        if constexpr (std::is_same_v<D, Int>)
            return Elem(princ::numerator(q));
        else
            return Elem(princ::QuadElem(princ::numerator(q), 0, d));
    }
    Elem ident(const std::string& n, std::size_t pos) const {
        if (n != "X") unknown_symbol(n, name(), pos);
        return Elem::variable();
    }
    Elem sqrt(const Int& k, std::size_t pos) const {
        if constexpr (std::is_same_v<D, Int>) {
            throw ParseError(pos, "sqrt is not available in Z[X]");
        } else {
            if (k != d) throw ParseError(pos, "sqrt(" + princ::to_string(k) + ") is not in " + name());
            return Elem(princ::QuadElem(0, 1, d));
        }
    }
    Elem divide(const Elem&, const Elem&, std::size_t pos) const {
        throw ParseError(pos, "division is not supported in " + name());
    }
    std::optional<Elem> monomial_power(const std::string&, const Rat&, std::size_t) const { return std::nullopt; }

    Elem parse(const std::string& s) const { return parse_with(*this, s); }
    static std::string str(const Elem& e) { return princ::to_string(e, "X"); }
    std::string name() const {
        if constexpr (std::is_same_v<D, Int>)
            return "Z[X]";
        else
            return "Z[sqrt(" + princ::to_string(d) + ")][X]";
    }
    json descriptor() const {
        json j{{"family", "poly"}};
        if (d != 0) j["d"] = princ::to_string(d);
        return j;
    }
};

}  // namespace princ_lab
