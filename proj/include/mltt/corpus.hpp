#ifndef MLTT_CORPUS_HPP
#define MLTT_CORPUS_HPP

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mltt/syntax.hpp"

namespace mltt {

/// Higher-order builder for closed core terms. A binder hands its body a
/// variable that knows its own de Bruijn level; indices are computed when the
/// whole term is closed, so builder code never counts binders.
namespace build {

class Expr {
public:
    explicit Expr(std::function<Term(std::size_t)> at) : at_(std::move(at)) {}

    /// The term at the given binder depth.
    Term at(std::size_t depth) const { return at_(depth); }

    template <class... Args>
    Expr operator()(const Expr& arg, const Args&... rest) const {
        Expr f = *this;
        Expr applied{[f, arg](std::size_t d) { return Term::app(f.at(d), arg.at(d)); }};
        if constexpr (sizeof...(rest) == 0) {
            return applied;
        } else {
            return applied(rest...);
        }
    }

private:
    std::function<Term(std::size_t)> at_;
};

inline Term close(const Expr& e) { return e.at(0); }

inline Expr lift(Term t) {
    return Expr{[t = std::move(t)](std::size_t) { return t; }};
}

inline Expr U0() { return lift(Term::universe(Level::zero)); }
inline Expr U1() { return lift(Term::universe(Level::one)); }
inline Expr c(std::string name) { return lift(Term::constant(std::move(name))); }

namespace detail {
inline Expr variable(std::size_t level) {
    return Expr{[level](std::size_t d) { return Term::var(d - level - 1); }};
}
}  // namespace detail

inline Expr pi(std::string name, Expr domain, std::function<Expr(Expr)> body) {
    return Expr{[=](std::size_t d) {
        return Term::pi(name, domain.at(d), body(detail::variable(d)).at(d + 1));
    }};
}

inline Expr sig(std::string name, Expr first, std::function<Expr(Expr)> second) {
    return Expr{[=](std::size_t d) {
        return Term::sigma(name, first.at(d), second(detail::variable(d)).at(d + 1));
    }};
}

inline Expr lam(std::string name, std::function<Expr(Expr)> body) {
    return Expr{[=](std::size_t d) { return Term::lam(name, body(detail::variable(d)).at(d + 1)); }};
}

inline Expr arrow(Expr domain, Expr codomain) {
    return Expr{[=](std::size_t d) { return Term::pi("_", domain.at(d), codomain.at(d + 1)); }};
}

inline Expr product(Expr first, Expr second) {
    return Expr{[=](std::size_t d) { return Term::sigma("_", first.at(d), second.at(d + 1)); }};
}

inline Expr pair(Expr a, Expr b) {
    return Expr{[=](std::size_t d) { return Term::pair(a.at(d), b.at(d)); }};
}

inline Expr fst(Expr p) {
    return Expr{[=](std::size_t d) { return Term::fst(p.at(d)); }};
}

inline Expr snd(Expr p) {
    return Expr{[=](std::size_t d) { return Term::snd(p.at(d)); }};
}

inline Expr id(Expr type, Expr lhs, Expr rhs) {
    return Expr{[=](std::size_t d) { return Term::id(type.at(d), lhs.at(d), rhs.at(d)); }};
}

inline Expr refl(Expr subject) {
    return Expr{[=](std::size_t d) { return Term::refl(subject.at(d)); }};
}

inline Expr J(Expr motive, Expr base, Expr lhs, Expr rhs, Expr path) {
    return Expr{[=](std::size_t d) {
        return Term::j(motive.at(d), base.at(d), lhs.at(d), rhs.at(d), path.at(d));
    }};
}

}  // namespace build

inline std::vector<std::string> corpus_names() {
    return {"isSingleton", "fiber", "isEquiv", "Eq", "singletonType", "eta",
            "phi", "g", "h", "idIsEquiv", "IdToEq", "isUnivalent"};
}

/// The twelve definitions leading to the univalence type, followed by the
/// two J computation checks. Mirrors corpus/univalence.mltt.
inline Module corpus_core() {
    using namespace build;
    Module m;
    auto def = [&](std::string name, const Expr& type, const Expr& body) {
        m.declarations.push_back(Declaration::def(std::move(name), close(type), close(body)));
    };

    def("isSingleton", pi("X", U1(), [](Expr) { return U1(); }),
        lam("X", [](Expr X) { return sig("c", X, [=](Expr c) { return pi("x", X, [=](Expr x) { return id(X, c, x); }); }); }));

    def("fiber",
        pi("A", U1(), [](Expr A) {
            return pi("B", U1(), [=](Expr B) { return arrow(arrow(A, B), arrow(B, U1())); });
        }),
        lam("A", [](Expr A) {
            return lam("B", [=](Expr B) {
                return lam("f", [=](Expr f) {
                    return lam("y", [=](Expr y) { return sig("x", A, [=](Expr x) { return id(B, f(x), y); }); });
                });
            });
        }));

    def("isEquiv",
        pi("A", U1(), [](Expr A) { return pi("B", U1(), [=](Expr B) { return arrow(arrow(A, B), U1()); }); }),
        lam("A", [](Expr A) {
            return lam("B", [=](Expr B) {
                return lam("f", [=](Expr f) {
                    return pi("y", B, [=](Expr y) { return c("isSingleton")(c("fiber")(A, B, f, y)); });
                });
            });
        }));

    def("Eq", pi("A", U1(), [](Expr) { return pi("B", U1(), [](Expr) { return U1(); }); }),
        lam("A", [](Expr A) {
            return lam("B", [=](Expr B) { return sig("f", arrow(A, B), [=](Expr f) { return c("isEquiv")(A, B, f); }); });
        }));

    def("singletonType", pi("X", U0(), [](Expr X) { return arrow(X, U1()); }),
        lam("X", [](Expr X) {
            return lam("x", [=](Expr x) { return sig("y", X, [=](Expr y) { return id(X, y, x); }); });
        }));

    def("eta", pi("X", U0(), [](Expr X) { return pi("x", X, [=](Expr x) { return c("singletonType")(X, x); }); }),
        lam("X", [](Expr) { return lam("x", [](Expr x) { return pair(x, refl(x)); }); }));

    // Identification of eta x with (y, p), over y, x and p : Id X y x.
    auto phi_family = [](Expr X, Expr y, Expr x, Expr p) {
        return id(c("singletonType")(X, x), c("eta")(X, x), pair(y, p));
    };
    def("phi",
        pi("X", U0(), [=](Expr X) {
            return pi("y", X, [=](Expr y) {
                return pi("x", X, [=](Expr x) {
                    return pi("p", id(X, y, x), [=](Expr p) { return phi_family(X, y, x, p); });
                });
            });
        }),
        lam("X", [=](Expr X) {
            return lam("y", [=](Expr y) {
                return lam("x", [=](Expr x) {
                    return lam("p", [=](Expr p) {
                        Expr motive = lam("y", [=](Expr y) {
                            return lam("x", [=](Expr x) {
                                return lam("p", [=](Expr p) { return phi_family(X, y, x, p); });
                            });
                        });
                        Expr base = lam("x", [=](Expr x) { return refl(c("eta")(X, x)); });
                        return J(motive, base, y, x, p);
                    });
                });
            });
        }));

    def("g",
        pi("X", U0(), [](Expr X) {
            return pi("x", X, [=](Expr x) {
                return pi("s", c("singletonType")(X, x), [=](Expr s) {
                    return id(c("singletonType")(X, x), c("eta")(X, x), s);
                });
            });
        }),
        lam("X", [](Expr X) {
            return lam("x", [=](Expr x) {
                return lam("s", [=](Expr s) { return c("phi")(X, fst(s), x, snd(s)); });
            });
        }));

    def("h",
        pi("X", U0(), [](Expr X) {
            return pi("x", X, [=](Expr x) {
                Expr st = c("singletonType")(X, x);
                return sig("c", st, [=](Expr cc) { return pi("s", st, [=](Expr s) { return id(st, cc, s); }); });
            });
        }),
        lam("X", [](Expr X) { return lam("x", [=](Expr x) { return pair(c("eta")(X, x), c("g")(X, x)); }); }));

    def("idIsEquiv",
        pi("X", U0(), [](Expr X) { return c("isEquiv")(X, X, lam("x", [](Expr x) { return x; })); }),
        lam("X", [](Expr X) { return c("h")(X); }));

    auto eq_of = [](Expr X, Expr Y) { return c("Eq")(X, Y); };
    def("IdToEq",
        pi("X", U0(), [=](Expr X) {
            return pi("Y", U0(), [=](Expr Y) { return arrow(id(U0(), X, Y), eq_of(X, Y)); });
        }),
        lam("X", [=](Expr X) {
            return lam("Y", [=](Expr Y) {
                return lam("p", [=](Expr p) {
                    Expr motive = lam("X", [=](Expr X) {
                        return lam("Y", [=](Expr Y) { return lam("p", [=](Expr) { return eq_of(X, Y); }); });
                    });
                    Expr base = lam("X", [](Expr X) {
                        return pair(lam("x", [](Expr x) { return x; }), c("idIsEquiv")(X));
                    });
                    return J(motive, base, X, Y, p);
                });
            });
        }));

    def("isUnivalent", U1(), pi("X", U0(), [](Expr X) {
            return pi("Y", U0(), [=](Expr Y) {
                return c("isEquiv")(id(U0(), X, Y), c("Eq")(X, Y), c("IdToEq")(X, Y));
            });
        }));

    m.declarations.push_back(Declaration::assertion(
        close(lam("X", [](Expr X) { return lam("x", [=](Expr x) { return c("phi")(X, x, x, refl(x)); }); })),
        close(lam("X", [](Expr X) { return lam("x", [=](Expr x) { return refl(c("eta")(X, x)); }); })),
        close(pi("X", U0(), [](Expr X) {
            return pi("x", X, [=](Expr x) {
                return id(c("singletonType")(X, x), c("eta")(X, x), c("eta")(X, x));
            });
        }))));

    m.declarations.push_back(Declaration::assertion(
        close(lam("X", [](Expr X) { return c("IdToEq")(X, X, refl(X)); })),
        close(lam("X", [](Expr X) { return pair(lam("x", [](Expr x) { return x; }), c("idIsEquiv")(X)); })),
        close(pi("X", U0(), [](Expr X) { return c("Eq")(X, X); }))));
    return m;
}

/// K, isSet, Iso and the opening of the type of groups. Mirrors
/// corpus/extras.mltt; independent of corpus_core().
inline Module corpus_extras() {
    using namespace build;
    Module m;
    auto all_paths_equal = [](Expr X) {
        return pi("x", X, [=](Expr x) {
            return pi("y", X, [=](Expr y) {
                return pi("p", id(X, x, y), [=](Expr p) {
                    return pi("q", id(X, x, y), [=](Expr q) { return id(id(X, x, y), p, q); });
                });
            });
        });
    };
    const Term small_predicate = close(pi("X", U0(), [](Expr) { return U0(); }));

    m.declarations.push_back(Declaration::def("K", small_predicate, close(lam("X", all_paths_equal))));
    m.declarations.push_back(Declaration::def("isSet", small_predicate, close(lam("X", all_paths_equal))));
    m.declarations.push_back(Declaration::assertion(Term::constant("K"), Term::constant("isSet"), small_predicate));

    m.declarations.push_back(Declaration::def(
        "Iso",
        close(pi("A", U0(), [](Expr A) { return pi("B", U0(), [=](Expr B) { return arrow(arrow(A, B), U0()); }); })),
        close(lam("A", [](Expr A) {
            return lam("B", [=](Expr B) {
                return lam("f", [=](Expr f) {
                    return sig("g", arrow(B, A), [=](Expr g) {
                        return product(pi("x", A, [=](Expr x) { return id(A, g(f(x)), x); }),
                                       pi("y", B, [=](Expr y) { return id(B, f(g(y)), y); }));
                    });
                });
            });
        }))));

    m.declarations.push_back(Declaration::def(
        "Grp", close(U1()),
        close(sig("G", U0(), [](Expr G) {
            return product(c("isSet")(G), sig("e", G, [=](Expr e) {
                               return sig("mul", arrow(product(G, G), G), [=](Expr mul) {
                                   return pi("x", G, [=](Expr x) { return id(G, mul(pair(e, x)), x); });
                               });
                           }));
        }))));
    return m;
}

/// The two axioms, each alone in its own module: univalence (on top of
/// corpus_core) and K for every small type (on top of corpus_extras).
inline std::pair<Module, Module> corpus_axioms() {
    Module univalence;
    univalence.declarations.push_back(Declaration::postulate("univalenceAxiom", Term::constant("isUnivalent")));
    Module k;
    k.declarations.push_back(Declaration::postulate(
        "kAxiom", Term::pi("X", Term::universe(Level::zero), Term::app(Term::constant("K"), Term::var(0)))));
    return {std::move(univalence), std::move(k)};
}

inline constexpr std::string_view univalence_source = R"mltt(-- The univalence type, built from Pi, Sigma, Id and two universes U0 : U1.
--
-- Every parameter is explicit and every Id carries its type. isSingleton,
-- fiber, isEquiv and Eq take U1 parameters; U0 types are accepted there by
-- cumulativity, which is what lets isUnivalent apply isEquiv to Id U0 X Y.

-- A singleton has a centre identified with every element.
def isSingleton : Pi (X : U1), U1 :=
  fun X => Sig (c : X), Pi (x : X), Id X c x ;

-- Points of A sent by f to something identified with y.
def fiber : Pi (A B : U1), (A -> B) -> B -> U1 :=
  fun A B f y => Sig (x : A), Id B (f x) y ;

-- f is an equivalence when all of its fibers are singletons.
def isEquiv : Pi (A B : U1), (A -> B) -> U1 :=
  fun A B f => Pi (y : B), isSingleton (fiber A B f y) ;

def Eq : Pi (A B : U1), U1 :=
  fun A B => Sig (f : A -> B), isEquiv A B f ;

-- Elements of X identified with x.
def singletonType : Pi (X : U0), X -> U1 :=
  fun X x => Sig (y : X), Id X y x ;

def eta : Pi (X : U0), Pi (x : X), singletonType X x :=
  fun X x => (x , refl x) ;

-- J over the family (y, x, p) to Id (eta x) (y , p). The path runs from y
-- to x, so y comes first.
def phi : Pi (X : U0), Pi (y x : X), Pi (p : Id X y x),
    Id (singletonType X x) (eta X x) (y , p) :=
  fun X y x p =>
    J (fun y x p => Id (singletonType X x) (eta X x) (y , p))
      (fun x => refl (eta X x))
      y x p ;

-- Relies on eta for pairs: s is convertible with (fst s , snd s).
def g : Pi (X : U0), Pi (x : X), Pi (s : singletonType X x),
    Id (singletonType X x) (eta X x) s :=
  fun X x s => phi X (fst s) x (snd s) ;

-- Singleton types are singletons.
def h : Pi (X : U0), Pi (x : X),
    Sig (c : singletonType X x), Pi (s : singletonType X x), Id (singletonType X x) c s :=
  fun X x => (eta X x , g X x) ;

-- The fiber of the identity over y is singletonType X y.
def idIsEquiv : Pi (X : U0), isEquiv X X (fun x => x) :=
  fun X => h X ;

-- J with the constant family Eq X Y, sending refl X to the identity.
def IdToEq : Pi (X Y : U0), Id U0 X Y -> Eq X Y :=
  fun X Y p => J (fun X Y p => Eq X Y) (fun X => (fun x => x , idIsEquiv X)) X Y p ;

def isUnivalent : U1 :=
  Pi (X Y : U0), isEquiv (Id U0 X Y) (Eq X Y) (IdToEq X Y) ;

-- Both uses of J compute on refl.
assert fun X x => phi X x x (refl x) == fun X x => refl (eta X x)
  : Pi (X : U0), Pi (x : X), Id (singletonType X x) (eta X x) (eta X x) ;

assert fun X => IdToEq X X (refl X) == fun X => (fun x => x , idIsEquiv X)
  : Pi (X : U0), Eq X X ;
)mltt";

inline constexpr std::string_view extras_source = R"mltt(-- Set-level definitions. Independent of univalence.mltt.

-- All identifications between two elements of X are themselves identified.
def K : Pi (X : U0), U0 :=
  fun X => Pi (x y : X), Pi (p q : Id X x y), Id (Id X x y) p q ;

-- A set is a type satisfying K.
def isSet : Pi (X : U0), U0 :=
  fun X => Pi (x y : X), Pi (p q : Id X x y), Id (Id X x y) p q ;

assert K == isSet : Pi (X : U0), U0 ;

-- Two-sided inverses of f.
def Iso : Pi (A B : U0), (A -> B) -> U0 :=
  fun A B f => Sig (g : B -> A), (Pi (x : A), Id A (g (f x)) x) * (Pi (y : B), Id B (f (g y)) y) ;

-- Opening of the type of groups: carrier, set condition, unit,
-- multiplication and the left unit law. The remaining laws are not spelled out.
def Grp : U1 :=
  Sig (G : U0), isSet G * (Sig (e : G), Sig (mul : G * G -> G), Pi (x : G), Id G (mul (e , x)) x) ;
)mltt";

inline constexpr std::string_view axiom_univalence_source = R"mltt(-- Univalence of U0. Check after univalence.mltt.
-- Do not combine with axiom-k.mltt: the two axioms contradict each other.
postulate univalenceAxiom : isUnivalent ;
)mltt";

inline constexpr std::string_view axiom_k_source = R"mltt(-- Every small type is a set. Check after extras.mltt.
-- Do not combine with axiom-univalence.mltt: the two axioms contradict each other.
postulate kAxiom : Pi (X : U0), K X ;
)mltt";

struct BundledFile {
    std::string_view name;
    std::string_view text;
};

inline std::vector<BundledFile> bundled_files() {
    return {{"univalence.mltt", univalence_source},
            {"extras.mltt", extras_source},
            {"axiom-univalence.mltt", axiom_univalence_source},
            {"axiom-k.mltt", axiom_k_source}};
}

}  // namespace mltt

#endif  // MLTT_CORPUS_HPP
