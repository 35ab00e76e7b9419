#ifndef MLTT_PRETTY_HPP
#define MLTT_PRETTY_HPP

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mltt/syntax.hpp"

namespace mltt {

inline bool is_keyword(std::string_view s) {
    static constexpr std::array<std::string_view, 13> keywords = {
        "def", "postulate", "assert", "Pi", "Sig", "fun", "Id", "refl", "J", "fst", "snd", "U0", "U1"};
    return std::find(keywords.begin(), keywords.end(), s) != keywords.end();
}

namespace detail {

enum class Prec { term = 0, prod = 1, app = 2, atom = 3 };

class Printer {
public:
    explicit Printer(std::set<std::string> avoid) : avoid_(std::move(avoid)) {}

    // Name for a new binder whose variable is (or is not) referenced.
    std::string fresh(const std::string& hint, bool used) {
        if (!used) return "_";
        std::string name = (hint.empty() || hint == "_") ? "x" : hint;
        while (taken(name)) name += '\'';
        return name;
    }

    void push(std::string name) { names_.push_back(std::move(name)); }
    void pop() { names_.pop_back(); }

    std::string print(const Term& t, Prec prec) {
        using namespace syntax;
        return visit(t, overloaded{
            [&](const Var& v) -> std::string {
                if (v.index >= names_.size()) return "#" + std::to_string(v.index);
                return names_[names_.size() - 1 - v.index];
            },
            [&](const Universe& u) -> std::string { return u.level == Level::zero ? "U0" : "U1"; },
            [&](const Const& c) -> std::string { return c.name; },
            [&](const Pi& p) { return binder_type("Pi", "->", Prec::prod, p.name, p.domain, p.codomain, prec); },
            [&](const Sigma& s) { return binder_type("Sig", "*", Prec::app, s.name, s.first, s.second, prec); },
            [&](const Lam&) { return lambda(t, prec); },
            [&](const App&) {
                std::vector<const Term*> args;
                const Term* head = &t;
                while (auto* a = head->as<App>()) {
                    args.push_back(&a->arg);
                    head = &a->fn;
                }
                std::string out = print(*head, Prec::app);
                for (auto it = args.rbegin(); it != args.rend(); ++it) out += " " + print(**it, Prec::atom);
                return wrap(out, prec > Prec::app);
            },
            [&](const Pair& p) {
                return "(" + print(p.first, Prec::term) + " , " + print(p.second, Prec::term) + ")";
            },
            [&](const Fst& f) { return wrap("fst " + print(f.pair, Prec::atom), prec > Prec::app); },
            [&](const Snd& s) { return wrap("snd " + print(s.pair, Prec::atom), prec > Prec::app); },
            [&](const Refl& r) { return wrap("refl " + print(r.subject, Prec::atom), prec > Prec::app); },
            [&](const IdType& i) {
                return wrap("Id " + print(i.type, Prec::atom) + " " + print(i.lhs, Prec::atom) + " " +
                                print(i.rhs, Prec::atom),
                            prec > Prec::app);
            },
            [&](const JElim& j) {
                return wrap("J " + print(j.motive, Prec::atom) + " " + print(j.base, Prec::atom) + " " +
                                print(j.lhs, Prec::atom) + " " + print(j.rhs, Prec::atom) + " " +
                                print(j.path, Prec::atom),
                            prec > Prec::app);
            },
        });
    }

private:
    bool taken(const std::string& name) const {
        return is_keyword(name) || avoid_.count(name) != 0 ||
               std::find(names_.begin(), names_.end(), name) != names_.end();
    }

    static std::string wrap(std::string s, bool parens) { return parens ? "(" + s + ")" : s; }

    // Pi/Sig share layout: sugar when the binder is unused, otherwise a
    // binder group that absorbs directly nested binders over the same domain.
    std::string binder_type(const char* keyword, const char* infix, Prec operand, const std::string& hint,
                            const Term& domain, const Term& body, Prec prec) {
        const bool pi = std::string_view(keyword) == "Pi";
        if (!occurs(body, 0)) {
            std::string lhs = print(domain, operand);
            push("_");
            std::string rhs = print(body, pi ? Prec::term : Prec::app);
            pop();
            return wrap(lhs + " " + infix + " " + rhs, prec > (pi ? Prec::term : Prec::prod));
        }
        std::string dom = print(domain, Prec::term);
        std::vector<std::string> binders{fresh(hint, true)};
        push(binders.back());
        const Term* rest = &body;
        std::size_t depth = 1;
        for (;;) {
            const std::string* next_hint = nullptr;
            const Term* next_domain = nullptr;
            const Term* next_body = nullptr;
            if (pi) {
                if (auto* p = rest->as<syntax::Pi>()) next_hint = &p->name, next_domain = &p->domain, next_body = &p->codomain;
            } else if (auto* s = rest->as<syntax::Sigma>()) {
                next_hint = &s->name, next_domain = &s->first, next_body = &s->second;
            }
            if (!next_body || !occurs(*next_body, 0) || !structural_eq(*next_domain, shift(domain, depth))) break;
            binders.push_back(fresh(*next_hint, true));
            push(binders.back());
            rest = next_body;
            ++depth;
        }
        std::string out = std::string(keyword) + " (";
        for (const auto& b : binders) out += b + " ";
        out += ": " + dom + "), " + print(*rest, Prec::term);
        for (std::size_t i = 0; i < depth; ++i) pop();
        return wrap(out, prec > Prec::term);
    }

    std::string lambda(const Term& t, Prec prec) {
        std::string out = "fun";
        const Term* body = &t;
        std::size_t depth = 0;
        while (auto* l = body->as<syntax::Lam>()) {
            std::string name = fresh(l->name, l->name != "_" || occurs(l->body, 0));
            out += " " + name;
            push(name);
            body = &l->body;
            ++depth;
        }
        out += " => " + print(*body, Prec::term);
        for (std::size_t i = 0; i < depth; ++i) pop();
        return wrap(out, prec > Prec::term);
    }

    std::set<std::string> avoid_;
    std::vector<std::string> names_;
};

}  // namespace detail

/// Renders `t` in the surface grammar with the given names in scope,
/// innermost last. Binder names come from hints and are primed when they
/// would shadow a name in scope or a referenced constant.
inline std::string pretty_print(const Term& t, const std::vector<std::string>& scope) {
    std::set<std::string> avoid;
    collect_constants(t, avoid);
    detail::Printer printer(std::move(avoid));
    for (const auto& name : scope) printer.push(printer.fresh(name, true));
    return printer.print(t, detail::Prec::term);
}

inline std::string pretty_print(const Term& t, const Context& ctx = {}) {
    std::vector<std::string> names;
    for (const auto& e : ctx.entries()) names.push_back(e.name);
    return pretty_print(t, names);
}

}  // namespace mltt

#endif  // MLTT_PRETTY_HPP
