#pragma once

// Expression grammar shared by every ring family:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?
//   primary := INT | IDENT | 'sqrt' '(' expr ')' | '(' expr ')'
//
// Identifiers are X, Y, y, X0, X1, X2 and x_n; which of them a ring accepts
// is up to its evaluator. Errors carry a 0-based offset into the input.

#include <cctype>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "princ/core.hpp"

namespace princ_lab {

using princ::Int;
using princ::Rat;

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(std::size_t p, const std::string& msg) : std::runtime_error(msg), pos(p) {}
};

struct Node {
    enum class Kind { Num, Ident, Sqrt, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    std::size_t pos = 0;
    Int value;         // Num
    std::string name;  // Ident
    std::vector<Node> kids;
};

namespace detail {

class ExprParser {
   public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    Node parse() {
        skip();
        if (i_ == s_.size()) throw ParseError(i_, "empty expression");
        Node n = expr();
        skip();
        if (i_ != s_.size()) throw ParseError(i_, std::string("unexpected '") + s_[i_] + "'");
        return n;
    }

   private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++i_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) {
            if (i_ == s_.size()) throw ParseError(i_, std::string("expected '") + c + "' before end of input");
            throw ParseError(i_, std::string("expected '") + c + "', found '" + s_[i_] + "'");
        }
    }
    static Node binary(Node::Kind k, std::size_t pos, Node l, Node r) {
        Node n{k, pos};
        n.kids.push_back(std::move(l));
        n.kids.push_back(std::move(r));
        return n;
    }

    Node expr() {
        Node acc = term();
        for (;;) {
            skip();
            std::size_t at = i_;
            if (accept('+'))
                acc = binary(Node::Kind::Add, at, std::move(acc), term());
            else if (accept('-'))
                acc = binary(Node::Kind::Sub, at, std::move(acc), term());
            else
                return acc;
        }
    }
    Node term() {
        Node acc = unary();
        for (;;) {
            skip();
            std::size_t at = i_;
            if (accept('*'))
                acc = binary(Node::Kind::Mul, at, std::move(acc), unary());
            else if (accept('/'))
                acc = binary(Node::Kind::Div, at, std::move(acc), unary());
            else
                return acc;
        }
    }
    Node unary() {
        skip();
        std::size_t at = i_;
        if (accept('-')) {
            Node n{Node::Kind::Neg, at};
            n.kids.push_back(unary());
            return n;
        }
        if (accept('+')) return unary();
        return power();
    }
    Node power() {
        Node base = primary();
        skip();
        std::size_t at = i_;
        if (accept('^')) return binary(Node::Kind::Pow, at, std::move(base), unary());
        return base;
    }
    Node primary() {
        skip();
        std::size_t at = i_;
        if (i_ == s_.size()) throw ParseError(i_, "unexpected end of input");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Node n = expr();
            expect(')');
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            Node n{Node::Kind::Num, at};
            n.value = Int(s_.substr(at, i_ - at));
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string name = s_.substr(at, i_ - at);
            if (name == "sqrt") {
                expect('(');
                Node n{Node::Kind::Sqrt, at};
                n.kids.push_back(expr());
                expect(')');
                return n;
            }
            Node n{Node::Kind::Ident, at};
            n.name = std::move(name);
            return n;
        }
        throw ParseError(i_, std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

}  // namespace detail

inline Node parse_expr(const std::string& text) { return detail::ExprParser(text).parse(); }

/// Value of a constant subexpression (exponents, sqrt arguments).
inline Rat eval_rational(const Node& n) {
    using K = Node::Kind;
    switch (n.kind) {
        case K::Num: return Rat(n.value);
        case K::Neg: return -eval_rational(n.kids[0]);
        case K::Add: return eval_rational(n.kids[0]) + eval_rational(n.kids[1]);
        case K::Sub: return eval_rational(n.kids[0]) - eval_rational(n.kids[1]);
        case K::Mul: return eval_rational(n.kids[0]) * eval_rational(n.kids[1]);
        case K::Div: {
            Rat d = eval_rational(n.kids[1]);
            if (d == 0) throw ParseError(n.pos, "division by zero");
            return eval_rational(n.kids[0]) / d;
        }
        case K::Pow: {
            Rat e = eval_rational(n.kids[1]);
            if (!princ::is_integral(e) || abs(e) > 4096) throw ParseError(n.kids[1].pos, "constant exponent must be a small integer");
            Rat b = eval_rational(n.kids[0]);
            int k = static_cast<int>(princ::numerator(e));
            if (k < 0 && b == 0) throw ParseError(n.pos, "zero to a negative power");
            return princ::pow(b, k);
        }
        case K::Ident: throw ParseError(n.pos, "'" + n.name + "' where a constant is expected");
        case K::Sqrt: throw ParseError(n.pos, "sqrt where a rational constant is expected");
    }
    throw ParseError(n.pos, "bad expression");
}

/**
 * Evaluates a tree in the ring described by Traits, which supplies
 *   Elem number(const Rat&, pos), Elem ident(const std::string&, pos),
 *   Elem sqrt(const Int& d, pos), Elem divide(a, b, pos),
 *   std::optional<Elem> monomial_power(name, exponent, pos)   (rational exponents)
 * Library errors raised while combining values are re-thrown at the
 * position of the operator that produced them.
 */
template <class Traits>
typename Traits::Elem eval(const Node& n, const Traits& t) {
    using E = typename Traits::Elem;
    using K = Node::Kind;
    auto at = [&](auto&& fn) -> E {
        try {
            return fn();
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(n.pos, e.what());
        }
    };
    switch (n.kind) {
        case K::Num: return at([&] { return t.number(Rat(n.value), n.pos); });
        case K::Ident: return at([&] { return t.ident(n.name, n.pos); });
        case K::Sqrt: {
            Rat d = eval_rational(n.kids[0]);
            if (!princ::is_integral(d)) throw ParseError(n.kids[0].pos, "sqrt argument must be an integer");
            return at([&] { return t.sqrt(princ::numerator(d), n.pos); });
        }
        case K::Neg: {
            E v = eval(n.kids[0], t);
            return at([&] { return E(-v); });
        }
        case K::Add:
        case K::Sub:
        case K::Mul:
        case K::Div: {
            E l = eval(n.kids[0], t);
            E r = eval(n.kids[1], t);
            return at([&]() -> E {
                if (n.kind == K::Add) return l + r;
                if (n.kind == K::Sub) return l - r;
                if (n.kind == K::Mul) return l * r;
                return t.divide(l, r, n.pos);
            });
        }
        case K::Pow: {
            Rat e = eval_rational(n.kids[1]);
            if (n.kids[0].kind == K::Ident)
                if (auto m = t.monomial_power(n.kids[0].name, e, n.kids[0].pos)) return *m;
            if (!princ::is_integral(e) || e < 0)
                throw ParseError(n.kids[1].pos, "exponent " + princ::to_string(e) + " must be a non-negative integer here");
            if (e > 4096) throw ParseError(n.kids[1].pos, "exponent too large");
            E base = eval(n.kids[0], t);
            return at([&] {
                E acc = t.number(Rat(1), n.pos);
                for (long k = static_cast<long>(princ::numerator(e)); k > 0; --k) acc = acc * base;
                return acc;
            });
        }
    }
    throw ParseError(n.pos, "bad expression");
}

/// "column N: msg" followed by the input and a caret under the offending spot.
inline std::string describe(const ParseError& e, const std::string& input) {
    std::string out = "column " + std::to_string(e.pos + 1) + ": " + e.what() + "\n  " + input + "\n  ";
    out += std::string(std::min(e.pos, input.size()), ' ') + "^";
    return out;
}

}  // namespace princ_lab
