#pragma once

// Exact expression language for claim payloads. Values are rationals;
// comparisons and logic yield 0 or 1.
//
//   expr  := or
//   or    := and ('||' and)*
//   and   := not ('&&' not)*
//   not   := '!' not | cmp
//   cmp   := add (('<' | '<=' | '>' | '>=' | '==' | '!=') add)?
//   add   := mul (('+' | '-') mul)*
//   mul   := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' unary)?
//   atom  := integer | name | name '(' expr (',' expr)* ')' | '(' expr ')'

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gk/arith.hpp"
#include "gk/bigint.hpp"

namespace gk::ledger {

using Env = std::map<std::string, Rational>;

class Expr {
public:
    enum class Kind { Number, Symbol, Call, Unary, Binary };

    static Expr parse(const std::string& text);

    Rational eval(const Env& env) const;
    std::set<std::string> free_symbols() const {
        std::set<std::string> out;
        collect(out);
        return out;
    }
    const std::string& text() const { return text_; }

private:
    struct Node {
        Kind kind;
        Rational number;
        std::string name;  // symbol, function or operator
        std::vector<std::shared_ptr<const Node>> args;
    };
    using NodePtr = std::shared_ptr<const Node>;

    class Parser;
    static Rational eval_node(const Node& n, const Env& env);
    static Rational call(const std::string& fn, const std::vector<Rational>& a);
    void collect(std::set<std::string>& out) const { collect_node(*root_, out); }
    static void collect_node(const Node& n, std::set<std::string>& out) {
        if (n.kind == Kind::Symbol) out.insert(n.name);
        for (const auto& c : n.args) collect_node(*c, out);
    }

    std::string text_;
    NodePtr root_;
};

class Expr::Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr run() {
        auto n = parse_or();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_, 1) + "'");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidArgument("expression \"" + s_ + "\": " + why + " at offset " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(const std::string& tok) {
        skip();
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    static NodePtr make(Kind k, std::string name, std::vector<NodePtr> args, Rational v = 0) {
        return std::make_shared<const Node>(Node{k, std::move(v), std::move(name), std::move(args)});
    }

    NodePtr parse_or() {
        auto l = parse_and();
        while (eat("||")) l = make(Kind::Binary, "||", {l, parse_and()});
        return l;
    }
    NodePtr parse_and() {
        auto l = parse_not();
        while (eat("&&")) l = make(Kind::Binary, "&&", {l, parse_not()});
        return l;
    }
    NodePtr parse_not() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '!' && (pos_ + 1 >= s_.size() || s_[pos_ + 1] != '=')) {
            ++pos_;
            return make(Kind::Unary, "!", {parse_not()});
        }
        return parse_cmp();
    }
    NodePtr parse_cmp() {
        auto l = parse_add();
        for (const char* op : {"<=", ">=", "==", "!=", "<", ">"})
            if (eat(op)) return make(Kind::Binary, op, {l, parse_add()});
        return l;
    }
    NodePtr parse_add() {
        auto l = parse_mul();
        for (;;) {
            if (eat("+"))
                l = make(Kind::Binary, "+", {l, parse_mul()});
            else if (eat("-"))
                l = make(Kind::Binary, "-", {l, parse_mul()});
            else
                return l;
        }
    }
    NodePtr parse_mul() {
        auto l = parse_unary();
        for (;;) {
            if (eat("*"))
                l = make(Kind::Binary, "*", {l, parse_unary()});
            else if (eat("/"))
                l = make(Kind::Binary, "/", {l, parse_unary()});
            else
                return l;
        }
    }
    NodePtr parse_unary() {
        if (eat("-")) return make(Kind::Unary, "-", {parse_unary()});
        return parse_power();
    }
    NodePtr parse_power() {
        auto base = parse_atom();
        if (eat("^")) return make(Kind::Binary, "^", {base, parse_unary()});
        return base;
    }
    NodePtr parse_atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto n = parse_or();
            if (!eat(")")) fail("missing ')'");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return make(Kind::Number, "", {}, Rational(Int(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (eat("(")) {
                std::vector<NodePtr> args;
                if (!eat(")")) {
                    do args.push_back(parse_or());
                    while (eat(","));
                    if (!eat(")")) fail("missing ')' after arguments of " + name);
                }
                return make(Kind::Call, name, std::move(args));
            }
            return make(Kind::Symbol, name, {});
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

inline Expr Expr::parse(const std::string& text) {
    Expr e;
    e.text_ = text;
    e.root_ = Parser(text).run();
    return e;
}

namespace detail {

inline Int as_int(const Rational& v, const std::string& ctx) {
    if (v.get_den() != 1) throw InvalidArgument(ctx + " needs an integer, got " + gk::to_string(v));
    return v.get_num();
}

inline long as_long(const Rational& v, const std::string& ctx) { return to_long(as_int(v, ctx)); }

inline Rational truth(bool b) { return b ? Rational(1) : Rational(0); }

}  // namespace detail

inline Rational Expr::call(const std::string& fn, const std::vector<Rational>& a) {
    using detail::as_int;
    using detail::as_long;
    using detail::truth;
    auto arity = [&](std::size_t k) {
        if (a.size() != k)
            throw InvalidArgument(fn + " takes " + std::to_string(k) + " arguments, got " + std::to_string(a.size()));
    };
    auto prime_factors = [&](const Rational& v) {
        Int n = gk::abs(as_int(v, fn));
        if (n == 0) throw InvalidArgument(fn + " of zero");
        return arith::factorize(n);
    };
    if (fn == "gcd" || fn == "lcm") {
        arity(2);
        Int x = as_int(a[0], fn), y = as_int(a[1], fn);
        return Rational(fn == "gcd" ? gcd(x, y) : lcm(x, y));
    }
    if (fn == "abs") {
        arity(1);
        return a[0] < 0 ? Rational(-a[0]) : a[0];
    }
    if (fn == "min" || fn == "max") {
        if (a.empty()) throw InvalidArgument(fn + " needs arguments");
        Rational best = a[0];
        for (const auto& v : a)
            if (fn == "min" ? v < best : v > best) best = v;
        return best;
    }
    if (fn == "mod") {
        arity(2);
        Int m = as_int(a[1], fn);
        if (m <= 0) throw InvalidArgument("mod needs a positive modulus");
        Int r = as_int(a[0], fn) % m;
        if (r < 0) r += m;
        return Rational(r);
    }
    if (fn == "floor") {
        arity(1);
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), a[0].get_num_mpz_t(), a[0].get_den_mpz_t());
        return Rational(f);
    }
    if (fn == "k") {
        arity(2);
        return Rational(arith::k_value(as_long(a[0], fn), as_int(a[1], fn)));
    }
    if (fn == "Phi") {
        arity(2);
        return Rational(arith::cyclotomic_value(as_long(a[0], fn), as_int(a[1], fn)));
    }
    if (fn == "e") {
        arity(2);
        return Rational(arith::mult_order(as_int(a[0], fn), as_int(a[1], fn)));
    }
    if (fn == "nu" || fn == "eta") {
        arity(1);
        long k = as_long(a[0], fn);
        return Rational(Int(fn == "nu" ? arith::nu(k) : arith::eta(k)));
    }
    if (fn == "divides") {
        arity(2);
        return truth(divides(as_int(a[0], fn), as_int(a[1], fn)));
    }
    if (fn == "isprime") {
        arity(1);
        return truth(arith::is_prime(as_int(a[0], fn)));
    }
    if (fn == "isprimepower") {
        arity(1);
        return truth(arith::is_prime_power(as_int(a[0], fn)));
    }
    if (fn == "rpart") {
        arity(2);
        return Rational(arith::r_part(gk::abs(as_int(a[0], fn)), as_int(a[1], fn)).first);
    }
    if (fn == "lpf") {
        arity(1);
        return Rational(Int(arith::largest_prime_factor(as_long(a[0], fn))));
    }
    if (fn == "totient") {
        arity(1);
        return Rational(arith::euler_phi(gk::abs(as_int(a[0], fn))));
    }
    if (fn == "npf") {
        arity(1);
        return Rational(Int(static_cast<long>(prime_factors(a[0]).factors().size())));
    }
    if (fn == "cong_part" || fn == "pf_all_cong") {
        // Product of the prime powers p^k || n with p = c (mod m); or whether
        // every prime factor satisfies that congruence.
        arity(3);
        Int c = as_int(a[1], fn), m = as_int(a[2], fn);
        Int part = 1;
        bool all = true;
        const auto f = prime_factors(a[0]);
        for (const auto& pp : f.factors()) {
            Int r = pp.prime % m;
            Int cm = c % m;
            if (cm < 0) cm += m;
            if (r == cm)
                part *= ipow(pp.prime, pp.exponent);
            else
                all = false;
        }
        return fn == "cong_part" ? Rational(part) : truth(all);
    }
    if (fn == "maxe" || fn == "mine") {
        // Extreme multiplicative order of u modulo the prime factors of n
        // that do not divide u; 0 when there are none.
        arity(2);
        Int u = as_int(a[1], fn);
        Int best = 0;
        bool any = false;
        const auto f = prime_factors(a[0]);
        for (const auto& pp : f.factors()) {
            if (divides(pp.prime, u)) continue;
            Int e = arith::mult_order(pp.prime, u);
            if (!any || (fn == "maxe" ? e > best : e < best)) best = e;
            any = true;
        }
        return Rational(best);
    }
    throw InvalidArgument("unknown function " + fn);
}

inline Rational Expr::eval_node(const Node& n, const Env& env) {
    switch (n.kind) {
        case Kind::Number: return n.number;
        case Kind::Symbol: {
            auto it = env.find(n.name);
            if (it == env.end()) throw InvalidArgument("unbound symbol " + n.name);
            return it->second;
        }
        case Kind::Call: {
            std::vector<Rational> args;
            for (const auto& c : n.args) args.push_back(eval_node(*c, env));
            return call(n.name, args);
        }
        case Kind::Unary: {
            Rational v = eval_node(*n.args[0], env);
            if (n.name == "-") return -v;
            return detail::truth(v == 0);
        }
        case Kind::Binary: {
            const std::string& op = n.name;
            if (op == "&&") return detail::truth(eval_node(*n.args[0], env) != 0 && eval_node(*n.args[1], env) != 0);
            if (op == "||") return detail::truth(eval_node(*n.args[0], env) != 0 || eval_node(*n.args[1], env) != 0);
            Rational l = eval_node(*n.args[0], env), r = eval_node(*n.args[1], env);
            if (op == "+") return l + r;
            if (op == "-") return l - r;
            if (op == "*") return l * r;
            if (op == "/") {
                if (r == 0) throw InvalidArgument("division by zero");
                Rational q = l / r;
                q.canonicalize();
                return q;
            }
            if (op == "^") {
                long e = detail::as_long(r, "exponent");
                if (e > 100000 || e < -100000) throw InvalidArgument("exponent out of range");
                Int num = ipow(l.get_num(), static_cast<unsigned long>(e < 0 ? -e : e));
                Int den = ipow(l.get_den(), static_cast<unsigned long>(e < 0 ? -e : e));
                if (e < 0) std::swap(num, den);
                if (den == 0) throw InvalidArgument("zero to a negative power");
                Rational out(num, den);
                out.canonicalize();
                return out;
            }
            if (op == "<") return detail::truth(l < r);
            if (op == "<=") return detail::truth(l <= r);
            if (op == ">") return detail::truth(l > r);
            if (op == ">=") return detail::truth(l >= r);
            if (op == "==") return detail::truth(l == r);
            if (op == "!=") return detail::truth(l != r);
            throw InvariantViolation("unknown operator " + op);
        }
    }
    throw InvariantViolation("bad expression node");
}

inline Rational Expr::eval(const Env& env) const { return eval_node(*root_, env); }

inline Rational evaluate(const std::string& text, const Env& env = {}) { return Expr::parse(text).eval(env); }

}  // namespace gk::ledger
