#ifndef MLTT_TESTS_SUPPORT_HPP
#define MLTT_TESTS_SUPPORT_HPP

#include <set>
#include <string>
#include <string_view>

#include "mltt/mltt.hpp"

namespace mltt::testing {

// Signature built by checking `source`; throws if anything fails.
inline Report load(std::string_view source, const Signature& base = {}) {
    SurfaceModule parsed = parse_module(source, "<test>");
    std::set<std::string> globals;
    for (const auto& e : base.entries()) globals.insert(e.name);
    Elaboration e = elaborate(parsed, globals);
    if (!e.errors.empty()) throw e.errors.front();
    return check_module(base, e.module);
}

// Elaborates a term whose free names are the given locals (outermost first)
// and the globals of `sig`.
inline Term term(std::string_view source, const Signature& sig = {}, std::vector<std::string> locals = {}) {
    std::set<std::string> globals;
    for (const auto& e : sig.entries()) globals.insert(e.name);
    Elaborator elaborator(globals);
    return elaborator.term(*parse_term(source), std::move(locals));
}

inline Context context(const Signature& sig, std::initializer_list<std::pair<std::string, std::string>> entries) {
    Context ctx;
    std::vector<std::string> names;
    for (const auto& [name, type] : entries) {
        ctx = ctx.extended(name, term(type, sig, names));
        names.push_back(name);
    }
    return ctx;
}

inline const Signature& core_signature() {
    static const Signature sig = check_module({}, corpus_core()).signature;
    return sig;
}

}  // namespace mltt::testing

#endif  // MLTT_TESTS_SUPPORT_HPP
