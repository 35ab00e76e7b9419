#include <gtest/gtest.h>

#include "support.hpp"

namespace mltt {
namespace {

using testing::context;
using testing::core_signature;
using testing::load;
using testing::term;

const Term U0 = Term::universe(Level::zero);

TEST(Eval, BetaReduces) {
    Context ctx = context({}, {{"A", "U0"}, {"a", "A"}});
    Term t = term("(fun x => x) a", {}, {"A", "a"});
    EXPECT_TRUE(structural_eq(normalize({}, ctx, t, Term::var(1)), Term::var(0)));
}

TEST(Eval, ProjectionsOfPairs) {
    Context ctx = context({}, {{"A", "U0"}, {"B", "U0"}, {"a", "A"}, {"b", "B"}});
    std::vector<std::string> names{"A", "B", "a", "b"};
    EXPECT_TRUE(structural_eq(normalize({}, ctx, term("fst (a , b)", {}, names), Term::var(3)), Term::var(1)));
    EXPECT_TRUE(structural_eq(normalize({}, ctx, term("snd (a , b)", {}, names), Term::var(2)), Term::var(0)));
}

TEST(Eval, JComputesOnRefl) {
    Context ctx = context({}, {{"A", "U0"}, {"a", "A"}});
    std::vector<std::string> names{"A", "a"};
    Term j = term("J (fun x y p => A) (fun x => x) a a (refl a)", {}, names);
    EXPECT_TRUE(structural_eq(normalize({}, ctx, j, Term::var(1)), Term::var(0)));
}

TEST(Eval, JIsStuckOnAVariablePath) {
    Context ctx = context({}, {{"A", "U0"}, {"a", "A"}, {"b", "A"}, {"p", "Id A a b"}});
    std::vector<std::string> names{"A", "a", "b", "p"};
    Term j = term("J (fun x y q => A) (fun x => x) a b p", {}, names);
    Term nf = normalize({}, ctx, j, Term::var(3));
    EXPECT_TRUE(nf.is<syntax::JElim>());
}

TEST(Readback, EtaExpandsFunctions) {
    Context ctx = context({}, {{"A", "U0"}, {"f", "A -> A"}});
    Term nf = normalize({}, ctx, Term::var(0), term("A -> A", {}, {"A", "f"}));
    EXPECT_EQ(pretty_print(nf, ctx), "fun x => f x");
}

TEST(Readback, EtaExpandsPairs) {
    Context ctx = context({}, {{"A", "U0"}, {"p", "A * A"}});
    Term nf = normalize({}, ctx, Term::var(0), term("A * A", {}, {"A", "p"}));
    EXPECT_EQ(pretty_print(nf, ctx), "(fst p , snd p)");
}

TEST(Readback, UniverseIsItsOwnNormalForm) {
    EXPECT_TRUE(structural_eq(normalize({}, {}, U0, Term::universe(Level::one)), U0));
}

TEST(Normalize, PhiOnReflIsRefl) {
    const Signature& sig = core_signature();
    Context ctx = context(sig, {{"X", "U0"}, {"x", "X"}});
    std::vector<std::string> names{"X", "x"};
    Term nf = normalize(sig, ctx, term("phi X x x (refl x)", sig, names),
                        term("Id (singletonType X x) (eta X x) (eta X x)", sig, names));
    EXPECT_EQ(pretty_print(nf, ctx), "refl (x , refl x)");
}

TEST(Normalize, EtaUnfoldsDefinitions) {
    const Signature& sig = core_signature();
    Term nf = normalize(sig, {}, Term::constant("eta"), sig.find("eta")->type);
    EXPECT_EQ(pretty_print(nf), "fun X x => (x , refl x)");
}

TEST(Convertible, BetaAndEtaExamples) {
    Context ctx = context({}, {{"A", "U0"}, {"f", "A -> A"}, {"p", "A * A"}});
    std::vector<std::string> names{"A", "f", "p"};
    EXPECT_TRUE(convertible({}, ctx, term("fun x => f x", {}, names), term("f", {}, names), term("A -> A", {}, names)));
    EXPECT_TRUE(convertible({}, ctx, term("(fst p , snd p)", {}, names), term("p", {}, names),
                            term("A * A", {}, names)));
    EXPECT_FALSE(convertible({}, ctx, term("(snd p , fst p)", {}, names), term("p", {}, names),
                             term("A * A", {}, names)));
}

TEST(Convertible, DistinctVariables) {
    Context ctx = context({}, {{"A", "U0"}, {"a", "A"}, {"b", "A"}});
    EXPECT_FALSE(convertible({}, ctx, Term::var(0), Term::var(1), Term::var(2)));
    EXPECT_TRUE(convertible({}, ctx, Term::var(0), Term::var(0), Term::var(2)));
}

TEST(Convertible, DefinitionsUnfold) {
    Signature sig = load("def A : U1 := U0 ; def B : U1 := A ;").signature;
    EXPECT_TRUE(convertible(sig, {}, Term::constant("A"), Term::constant("B"), Term::universe(Level::one)));
    EXPECT_TRUE(convertible(sig, {}, Term::constant("B"), U0, Term::universe(Level::one)));
}

TEST(Convertible, PostulatesAreOpaque) {
    Signature sig = load("postulate A : U0 ; postulate a : A ; postulate b : A ; def c : A := a ;").signature;
    Term A = Term::constant("A");
    EXPECT_FALSE(convertible(sig, {}, Term::constant("a"), Term::constant("b"), A));
    EXPECT_TRUE(convertible(sig, {}, Term::constant("a"), Term::constant("c"), A));
    EXPECT_TRUE(structural_eq(normalize(sig, {}, Term::constant("c"), A), Term::constant("a")));
}

TEST(Convertible, UniversesAreDistinct) {
    EXPECT_FALSE(convertible({}, {}, U0, Term::universe(Level::one), Term::universe(Level::one)));
}

}  // namespace
}  // namespace mltt
