#ifndef MLTT_SYNTAX_HPP
#define MLTT_SYNTAX_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace mltt {

/// Universe index. Only U0 and U1 exist; U1 has no type.
enum class Level : std::uint8_t { zero = 0, one = 1 };

inline Level max_level(Level a, Level b) {
    return static_cast<std::uint8_t>(a) >= static_cast<std::uint8_t>(b) ? a : b;
}

inline unsigned level_value(Level l) { return static_cast<unsigned>(l); }

/// Source position, 1-based. An empty `file` is allowed for in-memory text.
struct SourceSpan {
    std::string file;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t end_line = 1;
    std::size_t end_column = 1;
};

class Term;

namespace syntax {

struct Var { std::size_t index; };
struct Universe { Level level; };
struct Pi;
struct Lam;
struct App;
struct Sigma;
struct Pair;
struct Fst;
struct Snd;
struct IdType;
struct Refl;
struct JElim;
struct Const { std::string name; };

}  // namespace syntax

/// Core term with de Bruijn indices. Immutable; copies share structure.
///
/// Binder names are hints for printing only. Arrow and binary product are
/// not separate cases: they are Pi/Sigma whose codomain ignores the binder.
class Term {
public:
    struct Node;

    static Term var(std::size_t index);
    static Term universe(Level level);
    static Term pi(std::string name, Term domain, Term codomain);
    static Term lam(std::string name, Term body);
    static Term app(Term fn, Term arg);
    static Term sigma(std::string name, Term first, Term second);
    static Term pair(Term first, Term second);
    static Term fst(Term pair);
    static Term snd(Term pair);
    static Term id(Term type, Term lhs, Term rhs);
    static Term refl(Term subject);
    static Term j(Term motive, Term base, Term lhs, Term rhs, Term path);
    static Term constant(std::string name);

    /// Non-dependent function type; the codomain is shifted under the binder.
    static Term arrow(Term domain, Term codomain);
    /// Non-dependent pair type; the second component is shifted under the binder.
    static Term product(Term first, Term second);

    const Node& node() const { return *node_; }

    template <class T>
    const T* as() const;

    template <class T>
    bool is() const { return as<T>() != nullptr; }

private:
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    template <class T>
    static Term make(T value);

    std::shared_ptr<const Node> node_;
};

namespace syntax {

struct Pi { std::string name; Term domain; Term codomain; };
struct Lam { std::string name; Term body; };
struct App { Term fn; Term arg; };
struct Sigma { std::string name; Term first; Term second; };
struct Pair { Term first; Term second; };
struct Fst { Term pair; };
struct Snd { Term pair; };
struct IdType { Term type; Term lhs; Term rhs; };
struct Refl { Term subject; };
struct JElim { Term motive; Term base; Term lhs; Term rhs; Term path; };

}  // namespace syntax

struct Term::Node {
    std::variant<syntax::Var, syntax::Universe, syntax::Pi, syntax::Lam, syntax::App,
                 syntax::Sigma, syntax::Pair, syntax::Fst, syntax::Snd, syntax::IdType,
                 syntax::Refl, syntax::JElim, syntax::Const>
        data;
};

template <class T>
const T* Term::as() const {
    return std::get_if<T>(&node_->data);
}

template <class T>
Term Term::make(T value) {
    return Term(std::make_shared<const Node>(Node{std::move(value)}));
}

inline Term Term::var(std::size_t index) { return make(syntax::Var{index}); }
inline Term Term::universe(Level level) { return make(syntax::Universe{level}); }
inline Term Term::pi(std::string name, Term domain, Term codomain) {
    return make(syntax::Pi{std::move(name), std::move(domain), std::move(codomain)});
}
inline Term Term::lam(std::string name, Term body) {
    return make(syntax::Lam{std::move(name), std::move(body)});
}
inline Term Term::app(Term fn, Term arg) { return make(syntax::App{std::move(fn), std::move(arg)}); }
inline Term Term::sigma(std::string name, Term first, Term second) {
    return make(syntax::Sigma{std::move(name), std::move(first), std::move(second)});
}
inline Term Term::pair(Term first, Term second) {
    return make(syntax::Pair{std::move(first), std::move(second)});
}
inline Term Term::fst(Term pair) { return make(syntax::Fst{std::move(pair)}); }
inline Term Term::snd(Term pair) { return make(syntax::Snd{std::move(pair)}); }
inline Term Term::id(Term type, Term lhs, Term rhs) {
    return make(syntax::IdType{std::move(type), std::move(lhs), std::move(rhs)});
}
inline Term Term::refl(Term subject) { return make(syntax::Refl{std::move(subject)}); }
inline Term Term::j(Term motive, Term base, Term lhs, Term rhs, Term path) {
    return make(syntax::JElim{std::move(motive), std::move(base), std::move(lhs), std::move(rhs),
                              std::move(path)});
}
inline Term Term::constant(std::string name) { return make(syntax::Const{std::move(name)}); }

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

template <class F>
decltype(auto) visit(const Term& t, F&& f) {
    return std::visit(std::forward<F>(f), t.node().data);
}

/// Adds `by` to every free index >= cutoff.
inline Term shift(const Term& t, std::size_t by, std::size_t cutoff = 0) {
    if (by == 0) return t;
    using namespace syntax;
    return visit(t, overloaded{
        [&](const Var& v) { return v.index >= cutoff ? Term::var(v.index + by) : t; },
        [&](const Universe&) { return t; },
        [&](const Const&) { return t; },
        [&](const Pi& p) {
            return Term::pi(p.name, shift(p.domain, by, cutoff), shift(p.codomain, by, cutoff + 1));
        },
        [&](const Lam& l) { return Term::lam(l.name, shift(l.body, by, cutoff + 1)); },
        [&](const App& a) { return Term::app(shift(a.fn, by, cutoff), shift(a.arg, by, cutoff)); },
        [&](const Sigma& s) {
            return Term::sigma(s.name, shift(s.first, by, cutoff), shift(s.second, by, cutoff + 1));
        },
        [&](const Pair& p) { return Term::pair(shift(p.first, by, cutoff), shift(p.second, by, cutoff)); },
        [&](const Fst& f) { return Term::fst(shift(f.pair, by, cutoff)); },
        [&](const Snd& s) { return Term::snd(shift(s.pair, by, cutoff)); },
        [&](const IdType& i) {
            return Term::id(shift(i.type, by, cutoff), shift(i.lhs, by, cutoff), shift(i.rhs, by, cutoff));
        },
        [&](const Refl& r) { return Term::refl(shift(r.subject, by, cutoff)); },
        [&](const JElim& j) {
            return Term::j(shift(j.motive, by, cutoff), shift(j.base, by, cutoff), shift(j.lhs, by, cutoff),
                           shift(j.rhs, by, cutoff), shift(j.path, by, cutoff));
        },
    });
}

inline Term Term::arrow(Term domain, Term codomain) {
    return pi("_", std::move(domain), shift(codomain, 1));
}

inline Term Term::product(Term first, Term second) {
    return sigma("_", std::move(first), shift(second, 1));
}

/// True iff every variable index in `t` is bound at binder depth `depth`.
inline bool scope_check(const Term& t, std::size_t depth) {
    using namespace syntax;
    return visit(t, overloaded{
        [&](const Var& v) { return v.index < depth; },
        [&](const Universe&) { return true; },
        [&](const Const&) { return true; },
        [&](const Pi& p) { return scope_check(p.domain, depth) && scope_check(p.codomain, depth + 1); },
        [&](const Lam& l) { return scope_check(l.body, depth + 1); },
        [&](const App& a) { return scope_check(a.fn, depth) && scope_check(a.arg, depth); },
        [&](const Sigma& s) { return scope_check(s.first, depth) && scope_check(s.second, depth + 1); },
        [&](const Pair& p) { return scope_check(p.first, depth) && scope_check(p.second, depth); },
        [&](const Fst& f) { return scope_check(f.pair, depth); },
        [&](const Snd& s) { return scope_check(s.pair, depth); },
        [&](const IdType& i) {
            return scope_check(i.type, depth) && scope_check(i.lhs, depth) && scope_check(i.rhs, depth);
        },
        [&](const Refl& r) { return scope_check(r.subject, depth); },
        [&](const JElim& j) {
            return scope_check(j.motive, depth) && scope_check(j.base, depth) && scope_check(j.lhs, depth) &&
                   scope_check(j.rhs, depth) && scope_check(j.path, depth);
        },
    });
}

/// Alpha-equivalence: identical trees up to binder name hints.
inline bool structural_eq(const Term& a, const Term& b) {
    if (&a.node() == &b.node()) return true;
    if (a.node().data.index() != b.node().data.index()) return false;
    using namespace syntax;
    return visit(a, overloaded{
        [&](const Var& v) { return v.index == b.as<Var>()->index; },
        [&](const Universe& u) { return u.level == b.as<Universe>()->level; },
        [&](const Const& c) { return c.name == b.as<Const>()->name; },
        [&](const Pi& p) {
            auto* q = b.as<Pi>();
            return structural_eq(p.domain, q->domain) && structural_eq(p.codomain, q->codomain);
        },
        [&](const Lam& l) { return structural_eq(l.body, b.as<Lam>()->body); },
        [&](const App& x) {
            auto* y = b.as<App>();
            return structural_eq(x.fn, y->fn) && structural_eq(x.arg, y->arg);
        },
        [&](const Sigma& s) {
            auto* q = b.as<Sigma>();
            return structural_eq(s.first, q->first) && structural_eq(s.second, q->second);
        },
        [&](const Pair& p) {
            auto* q = b.as<Pair>();
            return structural_eq(p.first, q->first) && structural_eq(p.second, q->second);
        },
        [&](const Fst& f) { return structural_eq(f.pair, b.as<Fst>()->pair); },
        [&](const Snd& s) { return structural_eq(s.pair, b.as<Snd>()->pair); },
        [&](const IdType& i) {
            auto* k = b.as<IdType>();
            return structural_eq(i.type, k->type) && structural_eq(i.lhs, k->lhs) &&
                   structural_eq(i.rhs, k->rhs);
        },
        [&](const Refl& r) { return structural_eq(r.subject, b.as<Refl>()->subject); },
        [&](const JElim& j) {
            auto* k = b.as<JElim>();
            return structural_eq(j.motive, k->motive) && structural_eq(j.base, k->base) &&
                   structural_eq(j.lhs, k->lhs) && structural_eq(j.rhs, k->rhs) &&
                   structural_eq(j.path, k->path);
        },
    });
}

/// Whether the variable with de Bruijn index `index` occurs free in `t`.
inline bool occurs(const Term& t, std::size_t index) {
    using namespace syntax;
    return visit(t, overloaded{
        [&](const Var& v) { return v.index == index; },
        [&](const Universe&) { return false; },
        [&](const Const&) { return false; },
        [&](const Pi& p) { return occurs(p.domain, index) || occurs(p.codomain, index + 1); },
        [&](const Lam& l) { return occurs(l.body, index + 1); },
        [&](const App& a) { return occurs(a.fn, index) || occurs(a.arg, index); },
        [&](const Sigma& s) { return occurs(s.first, index) || occurs(s.second, index + 1); },
        [&](const Pair& p) { return occurs(p.first, index) || occurs(p.second, index); },
        [&](const Fst& f) { return occurs(f.pair, index); },
        [&](const Snd& s) { return occurs(s.pair, index); },
        [&](const IdType& i) { return occurs(i.type, index) || occurs(i.lhs, index) || occurs(i.rhs, index); },
        [&](const Refl& r) { return occurs(r.subject, index); },
        [&](const JElim& j) {
            return occurs(j.motive, index) || occurs(j.base, index) || occurs(j.lhs, index) ||
                   occurs(j.rhs, index) || occurs(j.path, index);
        },
    });
}

/// Names of every constant referenced in `t`.
inline void collect_constants(const Term& t, std::set<std::string>& out) {
    using namespace syntax;
    visit(t, overloaded{
        [&](const Var&) {},
        [&](const Universe&) {},
        [&](const Const& c) { out.insert(c.name); },
        [&](const Pi& p) { collect_constants(p.domain, out); collect_constants(p.codomain, out); },
        [&](const Lam& l) { collect_constants(l.body, out); },
        [&](const App& a) { collect_constants(a.fn, out); collect_constants(a.arg, out); },
        [&](const Sigma& s) { collect_constants(s.first, out); collect_constants(s.second, out); },
        [&](const Pair& p) { collect_constants(p.first, out); collect_constants(p.second, out); },
        [&](const Fst& f) { collect_constants(f.pair, out); },
        [&](const Snd& s) { collect_constants(s.pair, out); },
        [&](const IdType& i) {
            collect_constants(i.type, out);
            collect_constants(i.lhs, out);
            collect_constants(i.rhs, out);
        },
        [&](const Refl& r) { collect_constants(r.subject, out); },
        [&](const JElim& j) {
            collect_constants(j.motive, out);
            collect_constants(j.base, out);
            collect_constants(j.lhs, out);
            collect_constants(j.rhs, out);
            collect_constants(j.path, out);
        },
    });
}

/// Telescope of local variables, innermost last.
struct ContextEntry {
    std::string name;
    Term type;
};

class Context {
public:
    Context() = default;
    Context(std::initializer_list<ContextEntry> entries) : entries_(entries) {}

    Context extended(std::string name, Term type) const {
        Context c = *this;
        c.entries_.push_back({std::move(name), std::move(type)});
        return c;
    }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<ContextEntry>& entries() const { return entries_; }
    const ContextEntry& operator[](std::size_t level) const { return entries_.at(level); }

private:
    std::vector<ContextEntry> entries_;
};

/// A checked global: a definition when `body` is present, else a postulate.
struct SignatureEntry {
    std::string name;
    Term type;
    std::optional<Term> body;
};

/// Ordered global environment. Names are unique and each entry only refers to
/// earlier ones; `add` is the only way in and enforces uniqueness.
class Signature {
public:
    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    const SignatureEntry* find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? nullptr : &entries_[it->second];
    }

    Signature with(SignatureEntry entry) const {
        if (contains(entry.name)) throw std::logic_error("duplicate signature entry: " + entry.name);
        Signature s = *this;
        s.index_.emplace(entry.name, s.entries_.size());
        s.entries_.push_back(std::move(entry));
        return s;
    }

    std::size_t size() const { return entries_.size(); }
    const std::vector<SignatureEntry>& entries() const { return entries_; }

private:
    std::vector<SignatureEntry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

enum class DeclKind { def, postulate, assertion };

/// One top-level item. For `assertion`, `body` is the left side, `rhs` the
/// right side, `type` the type both are compared at, and `name` is empty.
struct Declaration {
    DeclKind kind = DeclKind::def;
    std::string name;
    Term type = Term::universe(Level::zero);
    std::optional<Term> body;
    std::optional<Term> rhs;
    std::optional<SourceSpan> span;

    static Declaration def(std::string name, Term type, Term body) {
        return {DeclKind::def, std::move(name), std::move(type), std::move(body), std::nullopt, std::nullopt};
    }
    static Declaration postulate(std::string name, Term type) {
        return {DeclKind::postulate, std::move(name), std::move(type), std::nullopt, std::nullopt, std::nullopt};
    }
    static Declaration assertion(Term lhs, Term rhs, Term type) {
        return {DeclKind::assertion, {}, std::move(type), std::move(lhs), std::move(rhs), std::nullopt};
    }
};

struct Module {
    std::vector<Declaration> declarations;
};

}  // namespace mltt

#endif  // MLTT_SYNTAX_HPP
