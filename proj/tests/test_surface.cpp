#include <gtest/gtest.h>

#include "support.hpp"

namespace mltt {
namespace {

using testing::term;

std::vector<TokenKind> kinds(std::string_view src) {
    std::vector<TokenKind> out;
    for (const auto& t : tokenize(src)) out.push_back(t.kind);
    return out;
}

SurfaceError surface_failure(std::string_view src, const std::set<std::string>& globals = {}) {
    try {
        Elaboration e = elaborate(parse_module(src, "f.mltt"), globals);
        if (!e.errors.empty()) return e.errors.front();
    } catch (const SurfaceError& e) {
        return e;
    }
    ADD_FAILURE() << "accepted: " << src;
    return SurfaceError(SurfaceErrorKind::ParseError, {}, "none");
}

TEST(Lexer, UnicodeAliasesMatchAscii) {
    EXPECT_EQ(kinds("Π (x : U0), x → x"), kinds("Pi (x : U0), x -> x"));
    EXPECT_EQ(kinds("Σ (x : U0), x × x"), kinds("Sig (x : U0), x * x"));
    EXPECT_EQ(kinds("λ x => x"), kinds("fun x => x"));
    EXPECT_EQ(kinds("def a : U1 ≔ U0 ;"), kinds("def a : U1 := U0 ;"));
}

TEST(Lexer, CommentsRunToEndOfLine) {
    EXPECT_EQ(kinds("-- nothing here ; def\nU0"), (std::vector<TokenKind>{TokenKind::kw_u0, TokenKind::end_of_file}));
}

TEST(Lexer, StrayCharacter) {
    SurfaceError e = surface_failure("@");
    EXPECT_EQ(e.kind(), SurfaceErrorKind::LexError);
    EXPECT_EQ(e.span().line, 1u);
    EXPECT_EQ(e.span().column, 1u);
}

TEST(Lexer, ColumnsCountCodePoints) {
    auto toks = tokenize("Π x");
    ASSERT_GE(toks.size(), 2u);
    EXPECT_EQ(toks[1].span.column, 3u);
}

TEST(Lexer, PrimesAndDigitsInIdentifiers) {
    auto toks = tokenize("x' y2 _");
    EXPECT_EQ(toks[0].text, "x'");
    EXPECT_EQ(toks[1].text, "y2");
    EXPECT_EQ(toks[2].kind, TokenKind::identifier);
}

TEST(Parser, DeclarationKinds) {
    SurfaceModule m = parse_module("postulate A : U0 ; def a : U1 := A ; assert A == A : U0 ;");
    ASSERT_EQ(m.declarations.size(), 3u);
    EXPECT_EQ(m.declarations[0].kind, DeclKind::postulate);
    EXPECT_EQ(m.declarations[1].kind, DeclKind::def);
    EXPECT_EQ(m.declarations[2].kind, DeclKind::assertion);
}

TEST(Parser, MissingTypeAnnotation) {
    SurfaceError e = surface_failure("def f := 3 ;");
    EXPECT_EQ(e.kind(), SurfaceErrorKind::ParseError);
    EXPECT_NE(e.message().find("expected ':'"), std::string::npos);
    EXPECT_EQ(e.span().column, 7u);
}

TEST(Parser, MissingSemicolon) {
    EXPECT_EQ(surface_failure("postulate A : U0").kind(), SurfaceErrorKind::ParseError);
}

TEST(Parser, ArrowIsRightAssociative) {
    EXPECT_TRUE(structural_eq(term("U0 -> U0 -> U0"), term("U0 -> (U0 -> U0)")));
    EXPECT_FALSE(structural_eq(term("U0 -> U0 -> U0"), term("(U0 -> U0) -> U0")));
}

TEST(Parser, ProductBindsTighterThanArrow) {
    EXPECT_TRUE(structural_eq(term("U0 * U0 -> U0"), term("(U0 * U0) -> U0")));
}

TEST(Parser, ApplicationIsLeftAssociative) {
    EXPECT_TRUE(structural_eq(term("fun f x y => f x y"), term("fun f x y => (f x) y")));
}

TEST(Elaborate, InnermostBinderWins) {
    Term t = term("fun x x => x");
    EXPECT_TRUE(structural_eq(t, Term::lam("x", Term::lam("x", Term::var(0)))));
}

TEST(Elaborate, LocalsShadowGlobals) {
    Term t = term("fun A => A", Signature{}.with({"A", Term::universe(Level::zero), std::nullopt}));
    EXPECT_TRUE(structural_eq(t, Term::lam("A", Term::var(0))));
}

TEST(Elaborate, MultiBinderDomainsShift) {
    Term t = term("fun X => Pi (a b : X), Id X a b");
    Term expected = Term::lam(
        "X", Term::pi("a", Term::var(0), Term::pi("b", Term::var(1), Term::id(Term::var(2), Term::var(1), Term::var(0)))));
    EXPECT_TRUE(structural_eq(t, expected));
}

TEST(Elaborate, ProductSugar) {
    Term t = term("fun X Y => X * Y");
    EXPECT_TRUE(structural_eq(t, Term::lam("X", Term::lam("Y", Term::sigma("_", Term::var(1), Term::var(1))))));
}

TEST(Elaborate, SugarMatchesExplicitBinders) {
    EXPECT_TRUE(structural_eq(term("fun A B => A -> B"), term("fun A B => Pi (_ : A), B")));
    EXPECT_TRUE(structural_eq(term("fun A B => A * B"), term("fun A B => Sig (_ : A), B")));
}

TEST(Elaborate, UnboundNameSpan) {
    SurfaceError e = surface_failure("def a : U1 :=\n  fun x => y ;");
    EXPECT_EQ(e.kind(), SurfaceErrorKind::UnboundVariable);
    EXPECT_EQ(e.span().line, 2u);
    EXPECT_EQ(e.span().column, 12u);
    EXPECT_EQ(e.span().file, "f.mltt");
}

TEST(Elaborate, UnderscoreCannotBeReferenced) {
    EXPECT_EQ(surface_failure("def a : U1 := fun _ => _ ;").kind(), SurfaceErrorKind::UnboundVariable);
}

TEST(Elaborate, BuiltinArity) {
    for (const char* src : {"def a : U1 := J U0 ;", "def a : U1 := fst ;", "def a : U1 := Id U0 U0 ;",
                            "def a : U1 := refl ;", "def a : U1 := snd ;"}) {
        SCOPED_TRACE(src);
        EXPECT_EQ(surface_failure(src).kind(), SurfaceErrorKind::ArityError);
    }
}

TEST(Elaborate, ExtraArgumentsBecomeApplications) {
    Term t = term("fun p a => fst p a");
    EXPECT_TRUE(structural_eq(t, Term::lam("p", Term::lam("a", Term::app(Term::fst(Term::var(1)), Term::var(0))))));
}

TEST(Elaborate, LaterDeclarationsSeeEarlierNames) {
    Elaboration e = elaborate(parse_module("postulate A : U0 ; def B : U1 := A ;"));
    ASSERT_TRUE(e.errors.empty());
    EXPECT_TRUE(structural_eq(*e.module.declarations[1].body, Term::constant("A")));
}

TEST(Elaborate, FailedNamesStayVisible) {
    Elaboration e = elaborate(parse_module("def A : U1 := nope ; def B : U1 := A ;"));
    EXPECT_EQ(e.errors.size(), 1u);
    EXPECT_EQ(e.failed, (std::set<std::string>{"A"}));
    EXPECT_EQ(e.module.declarations.size(), 1u);
}

TEST(Elaborate, UnicodeCorpusMatchesAscii) {
    std::string unicode(univalence_source);
    auto replace = [&](const std::string& from, const std::string& to) {
        for (std::size_t pos = 0; (pos = unicode.find(from, pos)) != std::string::npos; pos += to.size()) {
            unicode.replace(pos, from.size(), to);
        }
    };
    replace("Pi ", "Π ");
    replace("Sig ", "Σ ");
    replace("fun ", "λ ");
    replace(" -> ", " → ");
    replace(" := ", " ≔ ");
    Elaboration a = elaborate(parse_module(univalence_source));
    Elaboration b = elaborate(parse_module(unicode));
    ASSERT_TRUE(a.errors.empty() && b.errors.empty());
    ASSERT_EQ(a.module.declarations.size(), b.module.declarations.size());
    for (std::size_t i = 0; i < a.module.declarations.size(); ++i) {
        EXPECT_TRUE(structural_eq(a.module.declarations[i].type, b.module.declarations[i].type));
        EXPECT_TRUE(structural_eq(*a.module.declarations[i].body, *b.module.declarations[i].body));
    }
}

TEST(Elaborate, PrettyPrintRoundTrip) {
    for (const char* src : {"fun A B f => Pi (x : A), Id B (f x) (f x)", "fun X x => (x , refl x)",
                            "Pi (X Y : U0), Id U0 X Y -> X * Y", "fun A a => J (fun x y p => A) (fun x => x) a a (refl a)",
                            "fun p => (snd p , fst p)"}) {
        Term t = term(src);
        EXPECT_TRUE(structural_eq(term(pretty_print(t)), t)) << src << " printed as " << pretty_print(t);
    }
}

}  // namespace
}  // namespace mltt
