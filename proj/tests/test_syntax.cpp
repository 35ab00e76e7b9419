#include <gtest/gtest.h>

#include "mltt/pretty.hpp"
#include "mltt/syntax.hpp"

namespace mltt {
namespace {

const Term U0 = Term::universe(Level::zero);
const Term U1 = Term::universe(Level::one);

TEST(ScopeCheck, InnermostVariableInScope) { EXPECT_TRUE(scope_check(Term::var(0), 1)); }

TEST(ScopeCheck, NoBinders) { EXPECT_FALSE(scope_check(Term::var(0), 0)); }

TEST(ScopeCheck, LambdaSuppliesTheVariable) { EXPECT_TRUE(scope_check(Term::lam("x", Term::var(0)), 0)); }

TEST(ScopeCheck, CodomainSeesOneMoreBinder) {
    EXPECT_TRUE(scope_check(Term::pi("x", U0, Term::var(0)), 0));
    EXPECT_FALSE(scope_check(Term::pi("x", Term::var(0), U0), 0));
    EXPECT_TRUE(scope_check(Term::sigma("x", Term::var(0), Term::var(1)), 1));
    EXPECT_FALSE(scope_check(Term::sigma("x", U0, Term::var(1)), 0));
}

TEST(ScopeCheck, JLooksAtAllFiveArguments) {
    auto j = [](std::size_t bad) {
        std::vector<Term> args(5, Term::var(0));
        args[bad] = Term::var(3);
        return Term::j(args[0], args[1], args[2], args[3], args[4]);
    };
    for (std::size_t i = 0; i < 5; ++i) EXPECT_FALSE(scope_check(j(i), 1)) << i;
    EXPECT_TRUE(scope_check(j(0), 4));
}

TEST(StructuralEq, NameHintsIgnored) {
    EXPECT_TRUE(structural_eq(Term::lam("x", Term::var(0)), Term::lam("y", Term::var(0))));
}

TEST(StructuralEq, DistinguishesLevels) { EXPECT_FALSE(structural_eq(U0, U1)); }

TEST(StructuralEq, IdenticalIdTypes) {
    Term a = Term::id(Term::var(1), Term::var(0), Term::var(0));
    Term b = Term::id(Term::var(1), Term::var(0), Term::var(0));
    EXPECT_TRUE(structural_eq(a, b));
    EXPECT_FALSE(structural_eq(a, Term::id(Term::var(1), Term::var(0), Term::var(1))));
}

TEST(StructuralEq, DifferentConstructors) {
    EXPECT_FALSE(structural_eq(Term::fst(Term::var(0)), Term::snd(Term::var(0))));
    EXPECT_FALSE(structural_eq(Term::constant("a"), Term::constant("b")));
}

TEST(Shift, OnlyFreeIndicesMove) {
    Term t = Term::lam("x", Term::app(Term::var(0), Term::var(1)));
    EXPECT_TRUE(structural_eq(shift(t, 2), Term::lam("x", Term::app(Term::var(0), Term::var(3)))));
}

TEST(Shift, ArrowSugarIsConstantFamily) {
    Term arrow = Term::arrow(Term::var(0), Term::var(0));
    auto* pi = arrow.as<syntax::Pi>();
    ASSERT_NE(pi, nullptr);
    EXPECT_EQ(pi->name, "_");
    EXPECT_FALSE(occurs(pi->codomain, 0));
    EXPECT_TRUE(structural_eq(pi->codomain, Term::var(1)));
}

TEST(PrettyPrint, Identity) { EXPECT_EQ(pretty_print(Term::lam("x", Term::var(0))), "fun x => x"); }

TEST(PrettyPrint, ArrowForConstantFamily) {
    Context ctx{{"A", U0}, {"B", U0}};
    EXPECT_EQ(pretty_print(Term::pi("_", Term::var(1), Term::var(1)), ctx), "A -> B");
}

TEST(PrettyPrint, ShadowedNameIsPrimed) {
    EXPECT_EQ(pretty_print(Term::lam("x", Term::lam("x", Term::var(0)))), "fun x x' => x'");
    EXPECT_EQ(pretty_print(Term::lam("x", Term::lam("x", Term::var(1)))), "fun x x' => x");
}

TEST(PrettyPrint, ContextNamesAreAvoided) {
    Context ctx{{"x", U0}};
    EXPECT_EQ(pretty_print(Term::lam("x", Term::app(Term::var(1), Term::var(0))), ctx), "fun x' => x x'");
}

TEST(PrettyPrint, BindersAvoidReferencedConstants) {
    Term t = Term::lam("f", Term::app(Term::constant("f"), Term::var(0)));
    EXPECT_EQ(pretty_print(t), "fun f' => f f'");
}

TEST(PrettyPrint, GroupsBindersOverTheSameDomain) {
    Term t = Term::pi("X", U0, Term::pi("Y", U0, Term::id(U0, Term::var(1), Term::var(0))));
    EXPECT_EQ(pretty_print(t), "Pi (X Y : U0), Id U0 X Y");
}

TEST(PrettyPrint, ProductsAndPrecedence) {
    Context ctx{{"A", U0}, {"B", U0}, {"C", U0}};
    Term a = Term::var(2), b = Term::var(1), c = Term::var(0);
    EXPECT_EQ(pretty_print(Term::product(a, Term::product(b, c)), ctx), "A * (B * C)");
    EXPECT_EQ(pretty_print(Term::arrow(Term::product(a, b), c), ctx), "A * B -> C");
    EXPECT_EQ(pretty_print(Term::arrow(Term::arrow(a, b), c), ctx), "(A -> B) -> C");
    EXPECT_EQ(pretty_print(Term::arrow(a, Term::arrow(b, c)), ctx), "A -> B -> C");
}

TEST(PrettyPrint, ApplicationAndBuiltins) {
    Context ctx{{"f", U0}, {"p", U0}};
    EXPECT_EQ(pretty_print(Term::app(Term::var(1), Term::fst(Term::var(0))), ctx), "f (fst p)");
    EXPECT_EQ(pretty_print(Term::pair(Term::var(0), Term::refl(Term::var(0))), ctx), "(p , refl p)");
    EXPECT_EQ(pretty_print(Term::app(Term::app(Term::var(1), Term::var(0)), Term::var(0)), ctx), "f p p");
}

TEST(PrettyPrint, UnusedLambdaBinderKeepsItsHint) {
    EXPECT_EQ(pretty_print(Term::lam("X", Term::lam("x", Term::var(0)))), "fun X x => x");
    EXPECT_EQ(pretty_print(Term::lam("_", U0)), "fun _ => U0");
    EXPECT_EQ(pretty_print(Term::lam("_", Term::var(0))), "fun x => x");
}

TEST(Signature, RejectsDuplicates) {
    Signature sig = Signature{}.with({"a", U0, std::nullopt});
    EXPECT_TRUE(sig.contains("a"));
    EXPECT_THROW((void)sig.with({"a", U0, std::nullopt}), std::logic_error);
}

}  // namespace
}  // namespace mltt
