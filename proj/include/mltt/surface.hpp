#ifndef MLTT_SURFACE_HPP
#define MLTT_SURFACE_HPP

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mltt/syntax.hpp"

namespace mltt {

// ---------------------------------------------------------------------------
// Errors

enum class SurfaceErrorKind { LexError, ParseError, UnboundVariable, ArityError };

inline std::string_view surface_error_name(SurfaceErrorKind k) {
    switch (k) {
        case SurfaceErrorKind::LexError: return "LexError";
        case SurfaceErrorKind::ParseError: return "ParseError";
        case SurfaceErrorKind::UnboundVariable: return "UnboundVariable";
        case SurfaceErrorKind::ArityError: return "ArityError";
    }
    return "Unknown";
}

class SurfaceError : public std::runtime_error {
public:
    SurfaceError(SurfaceErrorKind kind, SourceSpan span, std::string message, std::vector<std::string> expected = {})
        : std::runtime_error(message), kind_(kind), span_(std::move(span)), message_(std::move(message)),
          expected_(std::move(expected)) {}

    SurfaceErrorKind kind() const { return kind_; }
    const SourceSpan& span() const { return span_; }
    const std::string& message() const { return message_; }
    /// For parse errors: descriptions of the tokens that would have been accepted.
    const std::vector<std::string>& expected() const { return expected_; }

private:
    SurfaceErrorKind kind_;
    SourceSpan span_;
    std::string message_;
    std::vector<std::string> expected_;
};

// ---------------------------------------------------------------------------
// Lexer

enum class TokenKind {
    identifier,
    kw_def, kw_postulate, kw_assert,
    kw_pi, kw_sig, kw_fun,
    kw_id, kw_refl, kw_j, kw_fst, kw_snd,
    kw_u0, kw_u1,
    lparen, rparen, comma, colon, define, semicolon, fat_arrow, arrow, star, equals,
    end_of_file,
};

inline std::string_view token_description(TokenKind k) {
    switch (k) {
        case TokenKind::identifier: return "identifier";
        case TokenKind::kw_def: return "'def'";
        case TokenKind::kw_postulate: return "'postulate'";
        case TokenKind::kw_assert: return "'assert'";
        case TokenKind::kw_pi: return "'Pi'";
        case TokenKind::kw_sig: return "'Sig'";
        case TokenKind::kw_fun: return "'fun'";
        case TokenKind::kw_id: return "'Id'";
        case TokenKind::kw_refl: return "'refl'";
        case TokenKind::kw_j: return "'J'";
        case TokenKind::kw_fst: return "'fst'";
        case TokenKind::kw_snd: return "'snd'";
        case TokenKind::kw_u0: return "'U0'";
        case TokenKind::kw_u1: return "'U1'";
        case TokenKind::lparen: return "'('";
        case TokenKind::rparen: return "')'";
        case TokenKind::comma: return "','";
        case TokenKind::colon: return "':'";
        case TokenKind::define: return "':='";
        case TokenKind::semicolon: return "';'";
        case TokenKind::fat_arrow: return "'=>'";
        case TokenKind::arrow: return "'->'";
        case TokenKind::star: return "'*'";
        case TokenKind::equals: return "'=='";
        case TokenKind::end_of_file: return "end of file";
    }
    return "token";
}

struct Token {
    TokenKind kind;
    std::string text;
    SourceSpan span;
};

namespace detail {

inline std::optional<TokenKind> keyword_kind(std::string_view s) {
    static const std::pair<std::string_view, TokenKind> table[] = {
        {"def", TokenKind::kw_def},   {"postulate", TokenKind::kw_postulate}, {"assert", TokenKind::kw_assert},
        {"Pi", TokenKind::kw_pi},     {"Sig", TokenKind::kw_sig},             {"fun", TokenKind::kw_fun},
        {"Id", TokenKind::kw_id},     {"refl", TokenKind::kw_refl},           {"J", TokenKind::kw_j},
        {"fst", TokenKind::kw_fst},   {"snd", TokenKind::kw_snd},             {"U0", TokenKind::kw_u0},
        {"U1", TokenKind::kw_u1},
    };
    for (const auto& [word, kind] : table) {
        if (word == s) return kind;
    }
    return std::nullopt;
}

// Unicode spellings of ASCII tokens.
inline std::optional<TokenKind> unicode_alias(char32_t c) {
    switch (c) {
        case U'Π': return TokenKind::kw_pi;
        case U'Σ': return TokenKind::kw_sig;
        case U'λ': return TokenKind::kw_fun;
        case U'→': return TokenKind::arrow;
        case U'×': return TokenKind::star;
        case U'≔': return TokenKind::define;
        default: return std::nullopt;
    }
}

inline bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '\'';
}

class Lexer {
public:
    Lexer(std::string_view src, std::string file) : src_(src), file_(std::move(file)) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_trivia();
            if (pos_ >= src_.size()) {
                out.push_back({TokenKind::end_of_file, "", span_from(line_, col_)});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    SourceSpan span_from(std::size_t line, std::size_t col) const { return {file_, line, col, line_, col_}; }

    void advance_ascii(std::size_t n = 1) {
        for (std::size_t i = 0; i < n; ++i) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance_ascii();
            } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    // Comments may hold any UTF-8; step by code point to keep columns honest.
                    if (static_cast<unsigned char>(src_[pos_]) < 0x80) {
                        advance_ascii();
                    } else {
                        decode();
                    }
                }
            } else {
                return;
            }
        }
    }

    // Decodes one UTF-8 code point at pos_ and consumes it.
    char32_t decode() {
        const std::size_t line = line_, col = col_;
        auto byte = [&](std::size_t i) { return static_cast<unsigned char>(src_[pos_ + i]); };
        unsigned char b0 = byte(0);
        std::size_t len = b0 < 0x80 ? 1 : (b0 >> 5) == 0x6 ? 2 : (b0 >> 4) == 0xE ? 3 : (b0 >> 3) == 0x1E ? 4 : 0;
        if (len == 0 || pos_ + len > src_.size()) {
            throw SurfaceError(SurfaceErrorKind::LexError, {file_, line, col, line, col + 1}, "invalid UTF-8 byte");
        }
        char32_t cp = len == 1 ? b0 : len == 2 ? (b0 & 0x1F) : len == 3 ? (b0 & 0x0F) : (b0 & 0x07);
        for (std::size_t i = 1; i < len; ++i) {
            if ((byte(i) & 0xC0) != 0x80) {
                throw SurfaceError(SurfaceErrorKind::LexError, {file_, line, col, line, col + 1}, "invalid UTF-8 byte");
            }
            cp = (cp << 6) | (byte(i) & 0x3F);
        }
        pos_ += len;
        ++col_;
        return cp;
    }

    Token next() {
        const std::size_t line = line_, col = col_, start = pos_;
        auto make = [&](TokenKind k) {
            return Token{k, std::string(src_.substr(start, pos_ - start)), span_from(line, col)};
        };
        auto two = [&](char second) { return pos_ + 1 < src_.size() && src_[pos_ + 1] == second; };
        const char c = src_[pos_];
        if (static_cast<unsigned char>(c) >= 0x80) {
            char32_t cp = decode();
            if (auto alias = unicode_alias(cp)) return make(*alias);
            char buf[16];
            std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
            throw SurfaceError(SurfaceErrorKind::LexError, span_from(line, col),
                               std::string("unexpected character ") + buf);
        }
        if (is_ident_char(c)) {
            while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance_ascii();
            Token t = make(TokenKind::identifier);
            if (auto kw = keyword_kind(t.text)) t.kind = *kw;
            return t;
        }
        switch (c) {
            case '(': advance_ascii(); return make(TokenKind::lparen);
            case ')': advance_ascii(); return make(TokenKind::rparen);
            case ',': advance_ascii(); return make(TokenKind::comma);
            case ';': advance_ascii(); return make(TokenKind::semicolon);
            case '*': advance_ascii(); return make(TokenKind::star);
            case ':':
                if (two('=')) { advance_ascii(2); return make(TokenKind::define); }
                advance_ascii();
                return make(TokenKind::colon);
            case '=':
                if (two('>')) { advance_ascii(2); return make(TokenKind::fat_arrow); }
                if (two('=')) { advance_ascii(2); return make(TokenKind::equals); }
                break;
            case '-':
                if (two('>')) { advance_ascii(2); return make(TokenKind::arrow); }
                break;
            default:
                break;
        }
        advance_ascii();
        throw SurfaceError(SurfaceErrorKind::LexError, span_from(line, col),
                           std::string("unexpected character '") + c + "'");
    }

    std::string_view src_;
    std::string file_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace detail

/// Splits UTF-8 source into tokens; `--` comments run to end of line.
inline std::vector<Token> tokenize(std::string_view source, std::string file = {}) {
    return detail::Lexer(source, std::move(file)).run();
}

// ---------------------------------------------------------------------------
// Surface syntax

struct SurfaceTerm;
using SurfacePtr = std::shared_ptr<const SurfaceTerm>;

enum class Builtin { id, j, refl, fst, snd };

inline std::size_t builtin_arity(Builtin b) {
    switch (b) {
        case Builtin::id: return 3;
        case Builtin::j: return 5;
        case Builtin::refl:
        case Builtin::fst:
        case Builtin::snd: return 1;
    }
    return 0;
}

inline std::string_view builtin_name(Builtin b) {
    switch (b) {
        case Builtin::id: return "Id";
        case Builtin::j: return "J";
        case Builtin::refl: return "refl";
        case Builtin::fst: return "fst";
        case Builtin::snd: return "snd";
    }
    return "?";
}

namespace surface {

struct Name { std::string name; };
struct Universe { Level level; };
struct BuiltinRef { Builtin builtin; };
struct Apply { SurfacePtr fn; std::vector<SurfacePtr> args; };
/// Pi or Sig over one or more names sharing a domain.
struct Binder {
    bool is_pi;
    std::vector<std::string> names;
    SurfacePtr domain;
    SurfacePtr body;
};
struct Lambda { std::vector<std::string> names; SurfacePtr body; };
struct Arrow { SurfacePtr domain; SurfacePtr codomain; };
struct Product { SurfacePtr first; SurfacePtr second; };
struct Pair { SurfacePtr first; SurfacePtr second; };

}  // namespace surface

struct SurfaceTerm {
    std::variant<surface::Name, surface::Universe, surface::BuiltinRef, surface::Apply, surface::Binder,
                 surface::Lambda, surface::Arrow, surface::Product, surface::Pair>
        data;
    SourceSpan span;
};

struct SurfaceDecl {
    DeclKind kind;
    std::string name;
    SurfacePtr type;
    SurfacePtr body;  // def body, or the left side of an assertion
    SurfacePtr rhs;   // assertions only
    SourceSpan span;
};

struct SurfaceModule {
    std::vector<SurfaceDecl> declarations;
};

// ---------------------------------------------------------------------------
// Parser

namespace detail {

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    SurfaceModule module() {
        SurfaceModule m;
        while (peek().kind != TokenKind::end_of_file) m.declarations.push_back(declaration());
        return m;
    }

    SurfacePtr whole_term() {
        SurfacePtr t = term();
        expect(TokenKind::end_of_file);
        return t;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool at(TokenKind k) const { return peek().kind == k; }

    const Token& take() {
        const Token& t = toks_[pos_];
        if (t.kind != TokenKind::end_of_file) ++pos_;
        return t;
    }

    [[noreturn]] void unexpected(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::string msg = "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i != 0) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
        msg += ", found " + (t.kind == TokenKind::end_of_file ? std::string("end of file") : "'" + t.text + "'");
        throw SurfaceError(SurfaceErrorKind::ParseError, t.span, msg, std::move(expected));
    }

    const Token& expect(TokenKind k) {
        if (!at(k)) unexpected({std::string(token_description(k))});
        return take();
    }

    const SourceSpan& last_span() const { return toks_[pos_ == 0 ? 0 : pos_ - 1].span; }

    SourceSpan span_since(const SourceSpan& start) const {
        SourceSpan s = start;
        s.end_line = last_span().end_line;
        s.end_column = last_span().end_column;
        return s;
    }

    SurfacePtr node(decltype(SurfaceTerm::data) data, const SourceSpan& start) const {
        return std::make_shared<const SurfaceTerm>(SurfaceTerm{std::move(data), span_since(start)});
    }

    SurfaceDecl declaration() {
        const SourceSpan start = peek().span;
        SurfaceDecl d{};
        switch (peek().kind) {
            case TokenKind::kw_def:
                take();
                d.kind = DeclKind::def;
                d.name = expect(TokenKind::identifier).text;
                expect(TokenKind::colon);
                d.type = term();
                expect(TokenKind::define);
                d.body = term();
                break;
            case TokenKind::kw_postulate:
                take();
                d.kind = DeclKind::postulate;
                d.name = expect(TokenKind::identifier).text;
                expect(TokenKind::colon);
                d.type = term();
                break;
            case TokenKind::kw_assert:
                take();
                d.kind = DeclKind::assertion;
                d.body = term();
                expect(TokenKind::equals);
                d.rhs = term();
                expect(TokenKind::colon);
                d.type = term();
                break;
            default:
                unexpected({"'def'", "'postulate'", "'assert'"});
        }
        expect(TokenKind::semicolon);
        d.span = span_since(start);
        return d;
    }

    std::vector<std::string> binder_names() {
        std::vector<std::string> names{expect(TokenKind::identifier).text};
        while (at(TokenKind::identifier)) names.push_back(take().text);
        return names;
    }

    // term ::= (Pi|Sig) "(" IDENT+ ":" term ")" "," term | fun IDENT+ "=>" term | prod ("->" term)?
    SurfacePtr term() {
        const SourceSpan start = peek().span;
        if (at(TokenKind::kw_pi) || at(TokenKind::kw_sig)) {
            const bool is_pi = take().kind == TokenKind::kw_pi;
            expect(TokenKind::lparen);
            auto names = binder_names();
            expect(TokenKind::colon);
            SurfacePtr domain = term();
            expect(TokenKind::rparen);
            expect(TokenKind::comma);
            SurfacePtr body = term();
            return node(surface::Binder{is_pi, std::move(names), std::move(domain), std::move(body)}, start);
        }
        if (at(TokenKind::kw_fun)) {
            take();
            auto names = binder_names();
            expect(TokenKind::fat_arrow);
            SurfacePtr body = term();
            return node(surface::Lambda{std::move(names), std::move(body)}, start);
        }
        SurfacePtr lhs = prod();
        if (at(TokenKind::arrow)) {
            take();
            SurfacePtr rhs = term();
            return node(surface::Arrow{std::move(lhs), std::move(rhs)}, start);
        }
        return lhs;
    }

    // prod ::= app ("*" app)?
    SurfacePtr prod() {
        const SourceSpan start = peek().span;
        SurfacePtr lhs = app();
        if (at(TokenKind::star)) {
            take();
            SurfacePtr rhs = app();
            return node(surface::Product{std::move(lhs), std::move(rhs)}, start);
        }
        return lhs;
    }

    bool starts_atom() const {
        switch (peek().kind) {
            case TokenKind::identifier:
            case TokenKind::kw_u0:
            case TokenKind::kw_u1:
            case TokenKind::kw_id:
            case TokenKind::kw_j:
            case TokenKind::kw_refl:
            case TokenKind::kw_fst:
            case TokenKind::kw_snd:
            case TokenKind::lparen: return true;
            default: return false;
        }
    }

    // app ::= atom+ ; builtin heads take their arguments at elaboration.
    SurfacePtr app() {
        const SourceSpan start = peek().span;
        SurfacePtr head = atom();
        std::vector<SurfacePtr> args;
        while (starts_atom()) args.push_back(atom());
        if (args.empty()) return head;
        return node(surface::Apply{std::move(head), std::move(args)}, start);
    }

    SurfacePtr atom() {
        const SourceSpan start = peek().span;
        switch (peek().kind) {
            case TokenKind::identifier: return node(surface::Name{take().text}, start);
            case TokenKind::kw_u0: take(); return node(surface::Universe{Level::zero}, start);
            case TokenKind::kw_u1: take(); return node(surface::Universe{Level::one}, start);
            case TokenKind::kw_id: take(); return node(surface::BuiltinRef{Builtin::id}, start);
            case TokenKind::kw_j: take(); return node(surface::BuiltinRef{Builtin::j}, start);
            case TokenKind::kw_refl: take(); return node(surface::BuiltinRef{Builtin::refl}, start);
            case TokenKind::kw_fst: take(); return node(surface::BuiltinRef{Builtin::fst}, start);
            case TokenKind::kw_snd: take(); return node(surface::BuiltinRef{Builtin::snd}, start);
            case TokenKind::lparen: {
                take();
                SurfacePtr first = term();
                if (at(TokenKind::comma)) {
                    take();
                    SurfacePtr second = term();
                    expect(TokenKind::rparen);
                    return node(surface::Pair{std::move(first), std::move(second)}, start);
                }
                expect(TokenKind::rparen);
                return first;
            }
            default:
                unexpected({"identifier", "'U0'", "'U1'", "'('", "'Id'", "'J'", "'refl'", "'fst'", "'snd'"});
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline SurfaceModule parse_module(std::vector<Token> tokens) { return detail::Parser(std::move(tokens)).module(); }

inline SurfaceModule parse_module(std::string_view source, std::string file = {}) {
    return parse_module(tokenize(source, std::move(file)));
}

/// Parses a single term (the whole input).
inline SurfacePtr parse_term(std::string_view source, std::string file = {}) {
    return detail::Parser(tokenize(source, std::move(file))).whole_term();
}

// ---------------------------------------------------------------------------
// Elaboration

/// Resolves names against local binders (innermost wins) and then globals.
class Elaborator {
public:
    explicit Elaborator(std::set<std::string> globals = {}) : globals_(std::move(globals)) {}

    const std::set<std::string>& globals() const { return globals_; }
    void add_global(const std::string& name) { globals_.insert(name); }

    Term term(const SurfaceTerm& t) { return elab(t); }

    Term term(const SurfaceTerm& t, std::vector<std::string> locals) {
        auto saved = std::exchange(locals_, std::move(locals));
        try {
            Term r = elab(t);
            locals_ = std::move(saved);
            return r;
        } catch (...) {
            locals_ = std::move(saved);
            throw;
        }
    }

    Declaration declaration(const SurfaceDecl& d) {
        locals_.clear();
        Declaration out;
        out.kind = d.kind;
        out.name = d.name;
        out.type = elab(*d.type);
        if (d.body) out.body = elab(*d.body);
        if (d.rhs) out.rhs = elab(*d.rhs);
        out.span = d.span;
        return out;
    }

private:
    Term elab(const SurfaceTerm& t) {
        using namespace surface;
        return std::visit(overloaded{
            [&](const Name& n) { return resolve(n.name, t.span); },
            [&](const surface::Universe& u) { return Term::universe(u.level); },
            [&](const BuiltinRef& b) -> Term { arity_error(b.builtin, 0, t.span); },
            [&](const Apply& a) { return apply(a); },
            [&](const Binder& b) {
                Term domain = elab(*b.domain);
                for (const auto& n : b.names) locals_.push_back(n);
                Term body = elab(*b.body);
                for (std::size_t i = b.names.size(); i-- > 0;) {
                    locals_.pop_back();
                    Term dom = shift(domain, i);
                    body = b.is_pi ? Term::pi(b.names[i], std::move(dom), std::move(body))
                                   : Term::sigma(b.names[i], std::move(dom), std::move(body));
                }
                return body;
            },
            [&](const Lambda& l) {
                for (const auto& n : l.names) locals_.push_back(n);
                Term body = elab(*l.body);
                for (std::size_t i = l.names.size(); i-- > 0;) {
                    locals_.pop_back();
                    body = Term::lam(l.names[i], std::move(body));
                }
                return body;
            },
            [&](const Arrow& a) {
                Term domain = elab(*a.domain);
                return Term::pi("_", std::move(domain), under_anonymous(*a.codomain));
            },
            [&](const Product& p) {
                Term first = elab(*p.first);
                return Term::sigma("_", std::move(first), under_anonymous(*p.second));
            },
            [&](const surface::Pair& p) {
                Term first = elab(*p.first);
                return Term::pair(std::move(first), elab(*p.second));
            },
        }, t.data);
    }

    Term under_anonymous(const SurfaceTerm& t) {
        locals_.push_back("_");
        Term r = elab(t);
        locals_.pop_back();
        return r;
    }

    Term resolve(const std::string& name, const SourceSpan& span) const {
        if (name == "_") throw SurfaceError(SurfaceErrorKind::UnboundVariable, span, "`_` cannot be referenced");
        for (std::size_t i = locals_.size(); i-- > 0;) {
            if (locals_[i] == name) return Term::var(locals_.size() - 1 - i);
        }
        if (globals_.count(name)) return Term::constant(name);
        throw SurfaceError(SurfaceErrorKind::UnboundVariable, span, "unbound name `" + name + "`");
    }

    [[noreturn]] static void arity_error(Builtin b, std::size_t given, const SourceSpan& span) {
        throw SurfaceError(SurfaceErrorKind::ArityError, span,
                           std::string(builtin_name(b)) + " expects " + std::to_string(builtin_arity(b)) +
                               " argument" + (builtin_arity(b) == 1 ? "" : "s") + ", got " + std::to_string(given));
    }

    Term apply(const surface::Apply& a) {
        std::size_t used = 0;
        Term head = Term::universe(Level::zero);
        if (auto* b = std::get_if<surface::BuiltinRef>(&a.fn->data)) {
            const std::size_t n = builtin_arity(b->builtin);
            if (a.args.size() < n) arity_error(b->builtin, a.args.size(), a.fn->span);
            std::vector<Term> xs;
            for (std::size_t i = 0; i < n; ++i) xs.push_back(elab(*a.args[i]));
            switch (b->builtin) {
                case Builtin::id: head = Term::id(xs[0], xs[1], xs[2]); break;
                case Builtin::j: head = Term::j(xs[0], xs[1], xs[2], xs[3], xs[4]); break;
                case Builtin::refl: head = Term::refl(xs[0]); break;
                case Builtin::fst: head = Term::fst(xs[0]); break;
                case Builtin::snd: head = Term::snd(xs[0]); break;
            }
            used = n;
        } else {
            head = elab(*a.fn);
        }
        for (std::size_t i = used; i < a.args.size(); ++i) head = Term::app(std::move(head), elab(*a.args[i]));
        return head;
    }

    std::set<std::string> globals_;
    std::vector<std::string> locals_;
};

struct Elaboration {
    Module module;
    std::vector<SurfaceError> errors;
    /// Declarations dropped because they failed to elaborate.
    std::set<std::string> failed;
};

/// Elaborates declarations in order. Each def/postulate name becomes visible
/// to later declarations, even if its own elaboration failed (the failure is
/// reported once, and dependants are skipped by the checker).
inline Elaboration elaborate(const SurfaceModule& m, std::set<std::string> globals = {}) {
    Elaboration out;
    Elaborator elaborator(std::move(globals));
    for (const SurfaceDecl& d : m.declarations) {
        try {
            out.module.declarations.push_back(elaborator.declaration(d));
        } catch (SurfaceError& e) {
            out.errors.push_back(std::move(e));
            if (d.kind != DeclKind::assertion) out.failed.insert(d.name);
        }
        if (d.kind != DeclKind::assertion) elaborator.add_global(d.name);
    }
    return out;
}

/// Parses and elaborates one closed term against the given global names.
inline Term elaborate_term(std::string_view source, const std::set<std::string>& globals = {}) {
    SurfacePtr t = parse_term(source);
    Elaborator e(globals);
    return e.term(*t);
}

}  // namespace mltt

#endif  // MLTT_SURFACE_HPP
