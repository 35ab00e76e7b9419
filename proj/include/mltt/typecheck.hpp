#ifndef MLTT_TYPECHECK_HPP
#define MLTT_TYPECHECK_HPP

#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mltt/equality.hpp"
#include "mltt/pretty.hpp"
#include "mltt/syntax.hpp"

namespace mltt {

enum class ErrorCategory {
    UnboundVariable,
    CannotInfer,
    ExpectedFunctionType,
    ExpectedSigmaType,
    ExpectedIdType,
    ExpectedUniverse,
    ConversionFailure,
    NoTypeForTopUniverse,
    DuplicateDefinition,
    AssertionFailure,
};

inline std::string_view category_name(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::UnboundVariable: return "UnboundVariable";
        case ErrorCategory::CannotInfer: return "CannotInfer";
        case ErrorCategory::ExpectedFunctionType: return "ExpectedFunctionType";
        case ErrorCategory::ExpectedSigmaType: return "ExpectedSigmaType";
        case ErrorCategory::ExpectedIdType: return "ExpectedIdType";
        case ErrorCategory::ExpectedUniverse: return "ExpectedUniverse";
        case ErrorCategory::ConversionFailure: return "ConversionFailure";
        case ErrorCategory::NoTypeForTopUniverse: return "NoTypeForTopUniverse";
        case ErrorCategory::DuplicateDefinition: return "DuplicateDefinition";
        case ErrorCategory::AssertionFailure: return "AssertionFailure";
    }
    return "Unknown";
}

/// A rejected judgment. For conversion and assertion failures `expected` and
/// `actual` hold both sides in normal form.
struct CheckError {
    ErrorCategory category;
    std::optional<SourceSpan> span;
    std::string message;
    std::string declaration;
    std::optional<Term> expected;
    std::optional<Term> actual;
};

class TypeError : public std::runtime_error {
public:
    explicit TypeError(CheckError e) : std::runtime_error(e.message), error_(std::move(e)) {}
    const CheckError& error() const { return error_; }
    CheckError& error() { return error_; }

private:
    CheckError error_;
};

struct Report {
    std::vector<std::string> checked_names;
    std::vector<CheckError> errors;
    std::chrono::nanoseconds elapsed{0};
    Signature signature;

    bool ok() const { return errors.empty(); }
};

/// Bidirectional checker over a fixed signature.
///
/// Lambdas and pairs only check. Everything else infers and is then compared
/// with the expected type by conversion, except that U0 is accepted where U1
/// is expected (cumulativity at universe heads, nowhere else).
class Checker {
public:
    /// Called after every successful judgment with the subject and its type.
    using Observer = std::function<void(const Scope&, const Term&, const Value&)>;

    explicit Checker(const Signature& sig, Observer observer = {}) : sig_(sig), observer_(std::move(observer)) {}

    const Signature& signature() const { return sig_; }

    Value infer(const Scope& scope, const Term& t) {
        Value type = infer_(scope, t);
        if (observer_) observer_(scope, t, type);
        return type;
    }

    void check(const Scope& scope, const Term& t, const Value& type) {
        check_(scope, t, type);
        if (observer_) observer_(scope, t, type);
    }

    /// Whether `t` is a type. Universes and Pi/Sigma built from types are
    /// types even when they live above U1 and so have no type of their own;
    /// anything else must infer a universe.
    void check_is_type(const Scope& scope, const Term& t) {
        using namespace syntax;
        if (t.is<syntax::Universe>()) return;
        if (auto* p = t.as<syntax::Pi>()) {
            check_is_type(scope, p->domain);
            check_is_type(scope.extended(p->name, eval(sig_, scope.env, p->domain)), p->codomain);
            return;
        }
        if (auto* s = t.as<syntax::Sigma>()) {
            check_is_type(scope, s->first);
            check_is_type(scope.extended(s->name, eval(sig_, scope.env, s->first)), s->second);
            return;
        }
        infer_universe(scope, t);
    }

    Level infer_universe(const Scope& scope, const Term& t) {
        Value type = infer(scope, t);
        if (auto* u = type.as<value::Universe>()) return u->level;
        fail(ErrorCategory::ExpectedUniverse, "expected a type, but `" + show(scope, t) + "` has type `" +
                                                  show_type(scope, type) + "`");
    }

    Term read_type(const Scope& scope, const Value& type) const { return readback_type(sig_, scope.types, type); }

private:
    [[noreturn]] static void fail(ErrorCategory c, std::string message) {
        throw TypeError(CheckError{c, std::nullopt, std::move(message), {}, std::nullopt, std::nullopt});
    }

    static std::string show(const Scope& scope, const Term& t) { return pretty_print(t, scope.names); }
    std::string show_type(const Scope& scope, const Value& type) const { return show(scope, read_type(scope, type)); }

    [[noreturn]] void mismatch(const Scope& scope, const Value& expected, const Value& actual) const {
        Term e = read_type(scope, expected);
        Term a = read_type(scope, actual);
        throw TypeError(CheckError{ErrorCategory::ConversionFailure, std::nullopt,
                                   "expected type `" + show(scope, e) + "`, found `" + show(scope, a) + "`",
                                   {}, e, a});
    }

    bool same_type(const Scope& scope, const Value& a, const Value& b) const {
        return structural_eq(read_type(scope, a), read_type(scope, b));
    }

    // Exact conversion, or U0 where U1 is expected.
    void subsume(const Scope& scope, const Value& actual, const Value& expected) const {
        auto* ua = actual.as<value::Universe>();
        auto* ue = expected.as<value::Universe>();
        if (ua && ue) {
            if (level_value(ua->level) <= level_value(ue->level)) return;
            mismatch(scope, expected, actual);
        }
        if (!same_type(scope, actual, expected)) mismatch(scope, expected, actual);
    }

    Value lookup_constant(const std::string& name) const {
        const SignatureEntry* entry = sig_.find(name);
        if (!entry) fail(ErrorCategory::UnboundVariable, "unknown constant `" + name + "`");
        return eval(sig_, {}, entry->type);
    }

    const value::Pi& expect_pi(const Scope& scope, const Term& t, const Value& type) const {
        auto* pi = type.as<value::Pi>();
        if (!pi) {
            fail(ErrorCategory::ExpectedFunctionType,
                 "`" + show(scope, t) + "` is used as a function but has type `" + show_type(scope, type) + "`");
        }
        return *pi;
    }

    const value::Sigma& expect_sigma(const Scope& scope, const Term& t, const Value& type) const {
        auto* sigma = type.as<value::Sigma>();
        if (!sigma) {
            fail(ErrorCategory::ExpectedSigmaType,
                 "`" + show(scope, t) + "` is used as a pair but has type `" + show_type(scope, type) + "`");
        }
        return *sigma;
    }

    Value infer_(const Scope& scope, const Term& t) {
        using namespace syntax;
        return visit(t, overloaded{
            [&](const Var& v) -> Value {
                if (v.index >= scope.depth()) fail(ErrorCategory::UnboundVariable, "variable index out of scope");
                return scope.types[scope.depth() - 1 - v.index];
            },
            [&](const syntax::Universe& u) -> Value {
                if (u.level == Level::one) fail(ErrorCategory::NoTypeForTopUniverse, "U1 is the top universe and has no type");
                return Value::universe(Level::one);
            },
            [&](const Const& c) { return lookup_constant(c.name); },
            [&](const syntax::Pi& p) {
                Level i = infer_universe(scope, p.domain);
                Level j = infer_universe(scope.extended(p.name, eval(sig_, scope.env, p.domain)), p.codomain);
                return Value::universe(max_level(i, j));
            },
            [&](const syntax::Sigma& s) {
                Level i = infer_universe(scope, s.first);
                Level j = infer_universe(scope.extended(s.name, eval(sig_, scope.env, s.first)), s.second);
                return Value::universe(max_level(i, j));
            },
            [&](const syntax::Lam&) -> Value {
                fail(ErrorCategory::CannotInfer,
                     "cannot infer the type of `" + show(scope, t) + "`; a lambda needs an expected type");
            },
            [&](const syntax::Pair&) -> Value {
                fail(ErrorCategory::CannotInfer,
                     "cannot infer the type of `" + show(scope, t) + "`; a pair needs an expected type");
            },
            [&](const App& a) {
                Value fn_type = infer(scope, a.fn);
                const value::Pi& pi = expect_pi(scope, a.fn, fn_type);
                check(scope, a.arg, *pi.domain);
                return instantiate(sig_, pi.codomain, eval(sig_, scope.env, a.arg));
            },
            [&](const Fst& f) {
                Value pair_type = infer(scope, f.pair);
                return *expect_sigma(scope, f.pair, pair_type).first;
            },
            [&](const Snd& s) {
                Value pair_type = infer(scope, s.pair);
                const value::Sigma& sigma = expect_sigma(scope, s.pair, pair_type);
                return instantiate(sig_, sigma.second, project_first(eval(sig_, scope.env, s.pair)));
            },
            [&](const syntax::IdType& i) {
                Level level = infer_universe(scope, i.type);
                Value carrier = eval(sig_, scope.env, i.type);
                check(scope, i.lhs, carrier);
                check(scope, i.rhs, carrier);
                return Value::universe(level);
            },
            [&](const syntax::Refl& r) {
                Value carrier = infer(scope, r.subject);
                Value subject = eval(sig_, scope.env, r.subject);
                return Value::id(carrier, subject, subject);
            },
            [&](const JElim& j) { return infer_j(scope, j); },
        });
    }

    // The carrier comes from the motive's type when the motive infers, and
    // from the path's Id type when the motive is a bare lambda.
    Value infer_j(const Scope& scope, const syntax::JElim& j) {
        std::optional<Value> carrier;
        if (j.motive.is<syntax::Lam>()) {
            Value path_type = infer(scope, j.path);
            auto* id = path_type.as<value::IdType>();
            if (!id) {
                fail(ErrorCategory::ExpectedIdType, "J path `" + show(scope, j.path) + "` has type `" +
                                                        show_type(scope, path_type) + "`, not an identity type");
            }
            carrier = id->type;
            check(scope, j.motive, motive_type(sig_, *carrier, Level::one));
        } else {
            Value m_type = infer(scope, j.motive);
            carrier = *expect_pi(scope, j.motive, m_type).domain;
            if (!same_type(scope, m_type, motive_type(sig_, *carrier, Level::zero)) &&
                !same_type(scope, m_type, motive_type(sig_, *carrier, Level::one))) {
                mismatch(scope, motive_type(sig_, *carrier, Level::one), m_type);
            }
        }
        Value motive = eval(sig_, scope.env, j.motive);
        check(scope, j.base, base_type(sig_, *carrier, motive));
        check(scope, j.lhs, *carrier);
        check(scope, j.rhs, *carrier);
        Value lhs = eval(sig_, scope.env, j.lhs);
        Value rhs = eval(sig_, scope.env, j.rhs);
        check(scope, j.path, Value::id(*carrier, lhs, rhs));
        return apply(sig_, apply(sig_, apply(sig_, motive, lhs), rhs), eval(sig_, scope.env, j.path));
    }

    void check_(const Scope& scope, const Term& t, const Value& type) {
        if (auto* l = t.as<syntax::Lam>()) {
            auto* pi = type.as<value::Pi>();
            if (!pi) {
                fail(ErrorCategory::ExpectedFunctionType, "lambda `" + show(scope, t) + "` checked against `" +
                                                              show_type(scope, type) + "`, which is not a Pi type");
            }
            Scope inner = scope.extended(l->name, *pi->domain);
            check(inner, l->body, instantiate(sig_, pi->codomain, inner.env.back()));
            return;
        }
        if (auto* p = t.as<syntax::Pair>()) {
            auto* sigma = type.as<value::Sigma>();
            if (!sigma) {
                fail(ErrorCategory::ExpectedSigmaType, "pair `" + show(scope, t) + "` checked against `" +
                                                           show_type(scope, type) + "`, which is not a Sigma type");
            }
            check(scope, p->first, *sigma->first);
            check(scope, p->second, instantiate(sig_, sigma->second, eval(sig_, scope.env, p->first)));
            return;
        }
        if (auto* r = t.as<syntax::Refl>()) {
            auto* id = type.as<value::IdType>();
            if (!id) {
                fail(ErrorCategory::ExpectedIdType, "`" + show(scope, t) + "` checked against `" +
                                                        show_type(scope, type) + "`, which is not an identity type");
            }
            check(scope, r->subject, id->type);
            Value subject = eval(sig_, scope.env, r->subject);
            Term s = readback(sig_, scope.types, subject, id->type);
            if (!structural_eq(s, readback(sig_, scope.types, id->lhs, id->type)) ||
                !structural_eq(s, readback(sig_, scope.types, id->rhs, id->type))) {
                mismatch(scope, type, Value::id(id->type, subject, subject));
            }
            return;
        }
        subsume(scope, infer(scope, t), type);
    }

    const Signature& sig_;
    Observer observer_;
};

inline Term infer(const Signature& sig, const Context& ctx, const Term& t) {
    Checker checker(sig);
    Scope scope = scope_of(sig, ctx);
    return checker.read_type(scope, checker.infer(scope, t));
}

inline void check(const Signature& sig, const Context& ctx, const Term& t, const Term& type) {
    Checker checker(sig);
    Scope scope = scope_of(sig, ctx);
    checker.check(scope, t, eval(sig, scope.env, type));
}

namespace detail {

inline TypeError attach(TypeError e, const Declaration& d) {
    e.error().span = d.span;
    e.error().declaration = d.name;
    return e;
}

}  // namespace detail

/// Checks one declaration and returns the extended signature. Assertions
/// leave the signature unchanged.
inline Signature check_decl(const Signature& sig, const Declaration& d,
                            const Checker::Observer& observer = {}) {
    try {
        if (d.kind != DeclKind::assertion && sig.contains(d.name)) {
            throw TypeError(CheckError{ErrorCategory::DuplicateDefinition, std::nullopt,
                                       "`" + d.name + "` is already defined", {}, std::nullopt, std::nullopt});
        }
        Checker checker(sig, observer);
        Scope empty;
        checker.check_is_type(empty, d.type);
        Value type = eval(sig, {}, d.type);
        switch (d.kind) {
            case DeclKind::postulate:
                return sig.with({d.name, d.type, std::nullopt});
            case DeclKind::def:
                checker.check(empty, *d.body, type);
                return sig.with({d.name, d.type, d.body});
            case DeclKind::assertion: {
                checker.check(empty, *d.body, type);
                checker.check(empty, *d.rhs, type);
                Term lhs = readback(sig, {}, eval(sig, {}, *d.body), type);
                Term rhs = readback(sig, {}, eval(sig, {}, *d.rhs), type);
                if (!structural_eq(lhs, rhs)) {
                    throw TypeError(CheckError{ErrorCategory::AssertionFailure, std::nullopt,
                                               "sides are not definitionally equal: `" + pretty_print(lhs) +
                                                   "` vs `" + pretty_print(rhs) + "`",
                                               {}, lhs, rhs});
                }
                return sig;
            }
        }
    } catch (TypeError& e) {
        throw detail::attach(std::move(e), d);
    }
    return sig;
}

/// Checks declarations in order. A failing declaration is reported and left
/// out of the signature; later declarations that mention it are skipped
/// silently, everything else carries on. Names in `failed` count as already
/// failed.
inline Report check_module(const Signature& sig, const Module& m, std::set<std::string> failed = {},
                           const Checker::Observer& observer = {}) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.signature = sig;
    for (const Declaration& d : m.declarations) {
        std::set<std::string> refs;
        collect_constants(d.type, refs);
        if (d.body) collect_constants(*d.body, refs);
        if (d.rhs) collect_constants(*d.rhs, refs);
        bool blocked = false;
        for (const auto& r : refs) blocked = blocked || (failed.count(r) != 0 && !report.signature.contains(r));
        if (blocked) {
            if (d.kind != DeclKind::assertion) failed.insert(d.name);
            continue;
        }
        try {
            report.signature = check_decl(report.signature, d, observer);
            if (d.kind != DeclKind::assertion) report.checked_names.push_back(d.name);
        } catch (TypeError& e) {
            if (d.kind != DeclKind::assertion && e.error().category != ErrorCategory::DuplicateDefinition) {
                failed.insert(d.name);
            }
            report.errors.push_back(std::move(e.error()));
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace mltt

#endif  // MLTT_TYPECHECK_HPP
