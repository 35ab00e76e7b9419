#ifndef MLTT_EQUALITY_HPP
#define MLTT_EQUALITY_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mltt/syntax.hpp"

namespace mltt {

/// Raised when a kernel precondition is broken (ill-scoped term, unknown
/// constant during evaluation). Never a user-facing type error.
class InternalFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class Value;
using Environment = std::vector<Value>;

/// A term waiting for one more value, paired with the values of its free variables.
struct Closure {
    std::shared_ptr<const Environment> env;
    Term body;
};

namespace value {

struct Universe { Level level; };
struct Pi { std::string name; std::shared_ptr<const Value> domain; Closure codomain; };
struct Sigma { std::string name; std::shared_ptr<const Value> first; Closure second; };
struct Lam { std::string name; Closure body; };
struct Pair;
struct IdType;
struct Refl;
struct Neutral;

// Neutral heads: a free variable (de Bruijn level) or a postulated constant.
struct VarHead { std::size_t level; };
struct ConstHead { std::string name; };
using Head = std::variant<VarHead, ConstHead>;

}  // namespace value

/// Evaluated form. Everything is weak-head complete: no β, projection or J
/// redex survives at the top, and stuck eliminations collect in a Neutral spine.
class Value {
public:
    struct Node;

    static Value universe(Level l);
    static Value pi(std::string name, Value domain, Closure codomain);
    static Value sigma(std::string name, Value first, Closure second);
    static Value lam(std::string name, Closure body);
    static Value pair(Value first, Value second);
    static Value id(Value type, Value lhs, Value rhs);
    static Value refl(Value subject);
    static Value variable(std::size_t level);
    static Value neutral(value::Neutral n);

    const Node& node() const { return *node_; }

    template <class T>
    const T* as() const;

private:
    explicit Value(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    template <class T>
    static Value make(T v);

    std::shared_ptr<const Node> node_;
};

namespace value {

struct Pair { Value first; Value second; };
struct IdType { Value type; Value lhs; Value rhs; };
struct Refl { Value subject; };

// Spine frames. A J frame eliminates the neutral it is attached to, which is
// therefore the path argument and never a refl.
struct AppFrame { Value arg; };
struct FstFrame {};
struct SndFrame {};
struct JFrame { Value motive; Value base; Value lhs; Value rhs; };
using Frame = std::variant<AppFrame, FstFrame, SndFrame, JFrame>;

struct Neutral {
    Head head;
    std::vector<Frame> spine;
};

}  // namespace value

struct Value::Node {
    std::variant<value::Universe, value::Pi, value::Sigma, value::Lam, value::Pair, value::IdType,
                 value::Refl, value::Neutral>
        data;
};

template <class T>
const T* Value::as() const {
    return std::get_if<T>(&node_->data);
}

template <class T>
Value Value::make(T v) {
    return Value(std::make_shared<const Node>(Node{std::move(v)}));
}

inline Value Value::universe(Level l) { return make(value::Universe{l}); }
inline Value Value::pi(std::string name, Value domain, Closure codomain) {
    return make(value::Pi{std::move(name), std::make_shared<const Value>(std::move(domain)), std::move(codomain)});
}
inline Value Value::sigma(std::string name, Value first, Closure second) {
    return make(value::Sigma{std::move(name), std::make_shared<const Value>(std::move(first)), std::move(second)});
}
inline Value Value::lam(std::string name, Closure body) { return make(value::Lam{std::move(name), std::move(body)}); }
inline Value Value::pair(Value first, Value second) { return make(value::Pair{std::move(first), std::move(second)}); }
inline Value Value::id(Value type, Value lhs, Value rhs) {
    return make(value::IdType{std::move(type), std::move(lhs), std::move(rhs)});
}
inline Value Value::refl(Value subject) { return make(value::Refl{std::move(subject)}); }
inline Value Value::variable(std::size_t level) { return make(value::Neutral{value::VarHead{level}, {}}); }
inline Value Value::neutral(value::Neutral n) { return make(std::move(n)); }

inline Value eval(const Signature& sig, const Environment& env, const Term& t);

namespace detail {

inline Value with_frame(const value::Neutral& n, value::Frame frame) {
    value::Neutral extended = n;
    extended.spine.push_back(std::move(frame));
    return Value::neutral(std::move(extended));
}

}  // namespace detail

inline Value instantiate(const Signature& sig, const Closure& c, Value arg) {
    Environment env = *c.env;
    env.push_back(std::move(arg));
    return eval(sig, env, c.body);
}

inline Value apply(const Signature& sig, const Value& fn, Value arg) {
    if (auto* l = fn.as<value::Lam>()) return instantiate(sig, l->body, std::move(arg));
    if (auto* n = fn.as<value::Neutral>()) return detail::with_frame(*n, value::AppFrame{std::move(arg)});
    throw InternalFault("application of a non-function value");
}

inline Value project_first(const Value& v) {
    if (auto* p = v.as<value::Pair>()) return p->first;
    if (auto* n = v.as<value::Neutral>()) return detail::with_frame(*n, value::FstFrame{});
    throw InternalFault("first projection of a non-pair value");
}

inline Value project_second(const Value& v) {
    if (auto* p = v.as<value::Pair>()) return p->second;
    if (auto* n = v.as<value::Neutral>()) return detail::with_frame(*n, value::SndFrame{});
    throw InternalFault("second projection of a non-pair value");
}

/// J on an evaluated path: fires on refl, otherwise suspends on the neutral path.
inline Value eliminate_id(const Signature& sig, Value motive, Value base, Value lhs, Value rhs, const Value& path) {
    if (auto* r = path.as<value::Refl>()) return apply(sig, base, r->subject);
    if (auto* n = path.as<value::Neutral>()) {
        return detail::with_frame(*n, value::JFrame{std::move(motive), std::move(base), std::move(lhs), std::move(rhs)});
    }
    throw InternalFault("J applied to a path that is neither refl nor neutral");
}

inline Value eval(const Signature& sig, const Environment& env, const Term& t) {
    using namespace syntax;
    auto close = [&](const Term& body) { return Closure{std::make_shared<const Environment>(env), body}; };
    return visit(t, overloaded{
        [&](const Var& v) -> Value {
            if (v.index >= env.size()) throw InternalFault("variable index out of scope");
            return env[env.size() - 1 - v.index];
        },
        [&](const syntax::Universe& u) { return Value::universe(u.level); },
        [&](const Const& c) -> Value {
            const SignatureEntry* entry = sig.find(c.name);
            if (!entry) throw InternalFault("unresolved constant: " + c.name);
            if (entry->body) return eval(sig, {}, *entry->body);
            return Value::neutral(value::Neutral{value::ConstHead{c.name}, {}});
        },
        [&](const syntax::Pi& p) { return Value::pi(p.name, eval(sig, env, p.domain), close(p.codomain)); },
        [&](const syntax::Lam& l) { return Value::lam(l.name, close(l.body)); },
        [&](const App& a) { return apply(sig, eval(sig, env, a.fn), eval(sig, env, a.arg)); },
        [&](const syntax::Sigma& s) { return Value::sigma(s.name, eval(sig, env, s.first), close(s.second)); },
        [&](const syntax::Pair& p) { return Value::pair(eval(sig, env, p.first), eval(sig, env, p.second)); },
        [&](const Fst& f) { return project_first(eval(sig, env, f.pair)); },
        [&](const Snd& s) { return project_second(eval(sig, env, s.pair)); },
        [&](const syntax::IdType& i) {
            return Value::id(eval(sig, env, i.type), eval(sig, env, i.lhs), eval(sig, env, i.rhs));
        },
        [&](const syntax::Refl& r) { return Value::refl(eval(sig, env, r.subject)); },
        [&](const JElim& j) {
            return eliminate_id(sig, eval(sig, env, j.motive), eval(sig, env, j.base), eval(sig, env, j.lhs),
                                eval(sig, env, j.rhs), eval(sig, env, j.path));
        },
    });
}

/// Type of a J motive over `carrier`: Pi (x y : X), Id X x y -> U<target>.
inline Value motive_type(const Signature& sig, const Value& carrier, Level target) {
    const Term shape = Term::pi("x", Term::var(0),
                                Term::pi("y", Term::var(1),
                                         Term::pi("p", Term::id(Term::var(2), Term::var(1), Term::var(0)),
                                                  Term::universe(target))));
    return eval(sig, {carrier}, shape);
}

/// Type of a J base for `motive`: Pi (x : X), motive x x (refl x).
inline Value base_type(const Signature& sig, const Value& carrier, const Value& motive) {
    const Term shape =
        Term::pi("x", Term::var(1),
                 Term::app(Term::app(Term::app(Term::var(1), Term::var(0)), Term::var(0)), Term::refl(Term::var(0))));
    return eval(sig, {carrier, motive}, shape);
}

/// Values for the variables of a context plus their evaluated types, by level.
struct Scope {
    Environment env;
    std::vector<Value> types;
    std::vector<std::string> names;

    std::size_t depth() const { return env.size(); }

    Scope extended(std::string name, Value type) const {
        Scope s = *this;
        s.env.push_back(Value::variable(s.env.size()));
        s.types.push_back(std::move(type));
        s.names.push_back(std::move(name));
        return s;
    }
};

inline Scope scope_of(const Signature& sig, const Context& ctx) {
    Scope s;
    for (const auto& entry : ctx.entries()) s = s.extended(entry.name, eval(sig, s.env, entry.type));
    return s;
}

namespace detail {

// Type-directed readback into beta-normal, eta-long terms.
class Reader {
public:
    Reader(const Signature& sig, std::vector<Value> types) : sig_(sig), types_(std::move(types)) {}

    Term read(const Value& v, const Value& type) {
        if (auto* pi = type.as<value::Pi>()) {
            Value fresh = Value::variable(types_.size());
            Value body = apply(sig_, v, fresh);
            Value body_type = instantiate(sig_, pi->codomain, fresh);
            std::string name = pi->name;
            if (auto* l = v.as<value::Lam>()) name = l->name;
            types_.push_back(*pi->domain);
            Term result = read(body, body_type);
            types_.pop_back();
            return Term::lam(std::move(name), std::move(result));
        }
        if (auto* sigma = type.as<value::Sigma>()) {
            Value first = project_first(v);
            Value second = project_second(v);
            Term first_term = read(first, *sigma->first);
            return Term::pair(std::move(first_term), read(second, instantiate(sig_, sigma->second, first)));
        }
        if (type.as<value::Universe>()) return read_type(v);
        if (auto* id = type.as<value::IdType>()) {
            if (auto* r = v.as<value::Refl>()) return Term::refl(read(r->subject, id->type));
        }
        if (auto* n = v.as<value::Neutral>()) return read_neutral(*n).first;
        throw InternalFault("readback of a value that does not inhabit its type");
    }

    Term read_type(const Value& v) {
        using namespace value;
        if (auto* u = v.as<Universe>()) return Term::universe(u->level);
        if (auto* pi = v.as<Pi>()) {
            Term domain = read_type(*pi->domain);
            return Term::pi(pi->name, std::move(domain), read_family(*pi->domain, pi->codomain));
        }
        if (auto* sigma = v.as<Sigma>()) {
            Term first = read_type(*sigma->first);
            return Term::sigma(sigma->name, std::move(first), read_family(*sigma->first, sigma->second));
        }
        if (auto* id = v.as<IdType>()) {
            Term carrier = read_type(id->type);
            Term lhs = read(id->lhs, id->type);
            return Term::id(std::move(carrier), std::move(lhs), read(id->rhs, id->type));
        }
        if (auto* n = v.as<Neutral>()) return read_neutral(*n).first;
        throw InternalFault("readback of a non-type at a universe");
    }

    // Reads back a neutral and recovers its type from the head's type.
    std::pair<Term, Value> read_neutral(const value::Neutral& n) {
        using namespace value;
        Term term = Term::universe(Level::zero);
        Value type = Value::universe(Level::zero);
        if (auto* v = std::get_if<VarHead>(&n.head)) {
            if (v->level >= types_.size()) throw InternalFault("free variable outside the readback scope");
            term = Term::var(types_.size() - 1 - v->level);
            type = types_[v->level];
        } else {
            const auto& name = std::get<ConstHead>(n.head).name;
            const SignatureEntry* entry = sig_.find(name);
            if (!entry) throw InternalFault("unresolved constant: " + name);
            term = Term::constant(name);
            type = eval(sig_, {}, entry->type);
        }
        Neutral prefix{n.head, {}};
        for (const Frame& frame : n.spine) {
            std::visit(overloaded{
                [&](const AppFrame& a) {
                    auto* pi = type.as<Pi>();
                    if (!pi) throw InternalFault("application frame on a non-function neutral");
                    term = Term::app(std::move(term), read(a.arg, *pi->domain));
                    type = instantiate(sig_, pi->codomain, a.arg);
                },
                [&](const FstFrame&) {
                    auto* sigma = type.as<Sigma>();
                    if (!sigma) throw InternalFault("projection frame on a non-pair neutral");
                    term = Term::fst(std::move(term));
                    type = *sigma->first;
                },
                [&](const SndFrame&) {
                    auto* sigma = type.as<Sigma>();
                    if (!sigma) throw InternalFault("projection frame on a non-pair neutral");
                    term = Term::snd(std::move(term));
                    type = instantiate(sig_, sigma->second, with_frame(prefix, FstFrame{}));
                },
                [&](const JFrame& j) {
                    auto* id = type.as<IdType>();
                    if (!id) throw InternalFault("J frame on a neutral that is not a path");
                    Term motive = read(j.motive, motive_type(sig_, id->type, Level::one));
                    Term base = read(j.base, base_type(sig_, id->type, j.motive));
                    Term lhs = read(j.lhs, id->type);
                    Term rhs = read(j.rhs, id->type);
                    term = Term::j(std::move(motive), std::move(base), std::move(lhs), std::move(rhs), std::move(term));
                    Value path = Value::neutral(prefix);
                    type = apply(sig_, apply(sig_, apply(sig_, j.motive, j.lhs), j.rhs), path);
                },
            }, frame);
            prefix.spine.push_back(frame);
        }
        return {std::move(term), std::move(type)};
    }

private:
    Term read_family(const Value& domain, const Closure& family) {
        Value fresh = Value::variable(types_.size());
        Value body = instantiate(sig_, family, fresh);
        types_.push_back(domain);
        Term result = read_type(body);
        types_.pop_back();
        return result;
    }

    const Signature& sig_;
    std::vector<Value> types_;
};

}  // namespace detail

/// Reads `v : type` back to a beta-normal, eta-long term. `types` holds the
/// evaluated type of each free variable, by de Bruijn level.
inline Term readback(const Signature& sig, const std::vector<Value>& types, const Value& v, const Value& type) {
    return detail::Reader(sig, types).read(v, type);
}

/// Reads a type value back structurally; the universe it lives in is irrelevant.
inline Term readback_type(const Signature& sig, const std::vector<Value>& types, const Value& type) {
    return detail::Reader(sig, types).read_type(type);
}

inline Term normalize(const Signature& sig, const Context& ctx, const Term& t, const Term& type) {
    Scope scope = scope_of(sig, ctx);
    return readback(sig, scope.types, eval(sig, scope.env, t), eval(sig, scope.env, type));
}

/// Definitional equality (beta, J on refl, eta for Pi and Sigma), decided by
/// comparing normal forms.
inline bool convertible(const Signature& sig, const Context& ctx, const Term& a, const Term& b, const Term& type) {
    Scope scope = scope_of(sig, ctx);
    Value t = eval(sig, scope.env, type);
    return structural_eq(readback(sig, scope.types, eval(sig, scope.env, a), t),
                         readback(sig, scope.types, eval(sig, scope.env, b), t));
}

}  // namespace mltt

#endif  // MLTT_EQUALITY_HPP
