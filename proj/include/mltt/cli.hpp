#ifndef MLTT_CLI_HPP
#define MLTT_CLI_HPP

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mltt/corpus.hpp"
#include "mltt/equality.hpp"
#include "mltt/pretty.hpp"
#include "mltt/surface.hpp"
#include "mltt/syntax.hpp"
#include "mltt/typecheck.hpp"

namespace mltt::cli {

enum ExitCode : int { success = 0, check_failed = 1, usage_error = 2 };

struct Config {
    std::string command;
    std::vector<std::string> files;
    std::optional<std::string> def_name;
    std::optional<std::string> out_dir;
    std::string corpus_dir = "corpus";
    bool verbose = false;
};

namespace detail {

inline std::string location(const std::optional<SourceSpan>& span, const std::string& fallback_file) {
    if (!span) return fallback_file + ":1:1";
    return (span->file.empty() ? fallback_file : span->file) + ":" + std::to_string(span->line) + ":" +
           std::to_string(span->column);
}

inline void diagnose(std::ostream& err, const std::string& where, std::string_view category,
                     const std::string& message) {
    err << where << ": error: " << category << ": " << message << "\n";
}

inline std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Outcome of parsing, elaborating and checking a list of files as one module.
struct Loaded {
    int exit_code = success;
    Module module;
    Report report;
    std::size_t elaboration_errors = 0;
};

struct Source {
    std::string name;
    std::string text;
};

inline Loaded check_sources(const std::vector<Source>& sources, std::ostream& err) {
    Loaded result;
    std::vector<SurfaceModule> parsed;
    for (const auto& s : sources) {
        try {
            parsed.push_back(parse_module(s.text, s.name));
        } catch (const SurfaceError& e) {
            diagnose(err, location(e.span(), s.name), surface_error_name(e.kind()), e.message());
            result.exit_code = usage_error;
        }
    }
    if (result.exit_code != success) return result;

    std::set<std::string> globals;
    std::set<std::string> failed;
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        Elaboration e = elaborate(parsed[i], globals);
        for (const auto& error : e.errors) {
            diagnose(err, location(error.span(), sources[i].name), surface_error_name(error.kind()), error.message());
        }
        result.elaboration_errors += e.errors.size();
        failed.insert(e.failed.begin(), e.failed.end());
        for (const auto& decl : parsed[i].declarations) {
            if (decl.kind != DeclKind::assertion) globals.insert(decl.name);
        }
        for (auto& d : e.module.declarations) result.module.declarations.push_back(std::move(d));
    }

    result.report = check_module(Signature{}, result.module, failed);
    for (const auto& e : result.report.errors) {
        std::string message = e.declaration.empty() ? e.message : "in `" + e.declaration + "`: " + e.message;
        diagnose(err, location(e.span, sources.empty() ? "<input>" : sources.front().name), category_name(e.category),
                 message);
    }
    if (!result.report.ok() || result.elaboration_errors != 0) result.exit_code = check_failed;
    return result;
}

inline std::optional<std::vector<Source>> read_sources(const std::vector<std::string>& files, std::ostream& err) {
    std::vector<Source> sources;
    bool ok = true;
    for (const auto& f : files) {
        auto text = read_file(f);
        if (!text) {
            diagnose(err, f + ":1:1", "IOError", "cannot read file");
            ok = false;
            continue;
        }
        sources.push_back({f, std::move(*text)});
    }
    if (!ok) return std::nullopt;
    return sources;
}

inline void summarize(std::ostream& out, const Loaded& l) {
    out << "checked " << l.report.checked_names.size() << " definitions, "
        << (l.report.errors.size() + l.elaboration_errors) << " errors\n";
}

inline int run_check(const Config& cfg, std::ostream& out, std::ostream& err) {
    auto sources = read_sources(cfg.files, err);
    if (!sources) return usage_error;
    Loaded l = check_sources(*sources, err);
    if (l.exit_code == usage_error) return usage_error;
    if (cfg.verbose) {
        for (const auto& name : l.report.checked_names) out << "ok " << name << "\n";
        out << "elapsed " << std::chrono::duration<double, std::milli>(l.report.elapsed).count() << " ms\n";
    }
    summarize(out, l);
    return l.exit_code;
}

inline int run_norm(const Config& cfg, std::ostream& out, std::ostream& err) {
    auto sources = read_sources(cfg.files, err);
    if (!sources) return usage_error;
    Loaded l = check_sources(*sources, err);
    if (l.exit_code == usage_error) return usage_error;
    const SignatureEntry* entry = l.report.signature.find(*cfg.def_name);
    if (!entry) {
        diagnose(err, cfg.files.back() + ":1:1", "UnknownDefinition",
                 "no checked definition named `" + *cfg.def_name + "`");
        return check_failed;
    }
    if (!entry->body) {
        diagnose(err, cfg.files.back() + ":1:1", "UnknownDefinition",
                 "`" + *cfg.def_name + "` is a postulate and has no body");
        return check_failed;
    }
    out << pretty_print(normalize(l.report.signature, {}, *entry->body, entry->type)) << "\n";
    return l.exit_code;
}

// Compares an elaborated file with its programmatic builder, declaration by declaration.
inline bool matches_builder(const Module& file, const Module& built, const std::string& name, std::ostream& err) {
    if (file.declarations.size() != built.declarations.size()) {
        diagnose(err, name + ":1:1", "CorpusMismatch",
                 "expected " + std::to_string(built.declarations.size()) + " declarations, found " +
                     std::to_string(file.declarations.size()));
        return false;
    }
    bool ok = true;
    for (std::size_t i = 0; i < file.declarations.size(); ++i) {
        const Declaration& a = file.declarations[i];
        const Declaration& b = built.declarations[i];
        auto same = [](const std::optional<Term>& x, const std::optional<Term>& y) {
            return x.has_value() == y.has_value() && (!x || structural_eq(*x, *y));
        };
        if (a.kind != b.kind || a.name != b.name || !structural_eq(a.type, b.type) || !same(a.body, b.body) ||
            !same(a.rhs, b.rhs)) {
            diagnose(err, location(a.span, name), "CorpusMismatch",
                     "declaration " + std::to_string(i + 1) + (a.name.empty() ? "" : " `" + a.name + "`") +
                         " differs from the built-in corpus");
            ok = false;
        }
    }
    return ok;
}

inline int run_corpus(const Config& cfg, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    const fs::path dir = cfg.out_dir ? fs::path(*cfg.out_dir) : fs::path(cfg.corpus_dir);
    if (cfg.out_dir) {
        std::error_code ec;
        fs::create_directories(dir, ec);
        for (const auto& f : bundled_files()) {
            std::ofstream o(dir / f.name, std::ios::binary);
            if (!o || !(o << f.text)) {
                diagnose(err, (dir / f.name).string() + ":1:1", "IOError", "cannot write file");
                return usage_error;
            }
        }
        out << "wrote " << bundled_files().size() << " files to " << dir.string() << "\n";
    }

    auto [axiom_u, axiom_k] = corpus_axioms();
    const std::vector<std::pair<std::string, Module>> builders = {
        {"univalence.mltt", corpus_core()},
        {"extras.mltt", corpus_extras()},
        {"axiom-univalence.mltt", axiom_u},
        {"axiom-k.mltt", axiom_k},
    };
    const std::vector<std::vector<std::string>> stacks = {
        {"univalence.mltt", "axiom-univalence.mltt"},
        {"extras.mltt", "axiom-k.mltt"},
    };

    int status = success;
    std::vector<std::string> paths;
    for (const auto& [name, _] : builders) paths.push_back((dir / name).string());
    auto sources = read_sources(paths, err);
    if (!sources) return usage_error;

    // Structural agreement, one file at a time, with earlier names in scope.
    std::set<std::string> globals;
    for (const auto& stack : stacks) {
        globals.clear();
        for (const auto& name : stack) {
            const std::string path = (dir / name).string();
            const auto& src = *std::find_if(sources->begin(), sources->end(),
                                            [&](const Source& s) { return s.name == path; });
            SurfaceModule parsed;
            try {
                parsed = parse_module(src.text, path);
            } catch (const SurfaceError& e) {
                diagnose(err, location(e.span(), path), surface_error_name(e.kind()), e.message());
                return usage_error;
            }
            Elaboration e = elaborate(parsed, globals);
            for (const auto& d : parsed.declarations) {
                if (d.kind != DeclKind::assertion) globals.insert(d.name);
            }
            const Module& built =
                std::find_if(builders.begin(), builders.end(), [&](const auto& b) { return b.first == name; })->second;
            if (!e.errors.empty() || !matches_builder(e.module, built, path, err)) {
                status = check_failed;
            } else if (cfg.verbose) {
                out << path << ": matches built-in corpus\n";
            }
        }
    }

    for (const auto& stack : stacks) {
        std::vector<Source> layered;
        for (const auto& name : stack) {
            const std::string path = (dir / name).string();
            layered.push_back(*std::find_if(sources->begin(), sources->end(),
                                            [&](const Source& s) { return s.name == path; }));
        }
        Loaded l = check_sources(layered, err);
        if (l.exit_code == usage_error) return usage_error;
        out << stack.front() << " + " << stack.back() << ": ";
        summarize(out, l);
        if (l.exit_code != success) status = check_failed;
    }
    return status;
}

}  // namespace detail

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Proof checker for a minimal Martin-Lof type theory (Pi, Sigma, Id, U0 : U1)", "mltt"};
    app.require_subcommand(1);
    app.add_flag("-v,--verbose", cfg.verbose, "List checked names and timing");

    auto* check = app.add_subcommand("check", "Check files as one module, in argument order");
    check->add_option("files", cfg.files, "Source files (.mltt)")->required();

    auto* norm = app.add_subcommand("norm", "Check files, then print the normal form of one definition");
    norm->add_option("files", cfg.files, "Source files (.mltt)")->required();
    norm->add_option("--def", cfg.def_name, "Definition to normalize")->required();

    auto* corpus = app.add_subcommand("corpus", "Write and/or verify the bundled corpus");
    corpus->add_option("--out", cfg.out_dir, "Write the bundled files here, then verify them");
    corpus->add_option("--dir", cfg.corpus_dir, "Directory verified in place when --out is absent");

    for (auto* sub : {check, norm, corpus}) sub->add_flag("-v,--verbose", cfg.verbose, "List checked names and timing");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::ParseError& e) {
        detail::diagnose(err, "<command-line>:1:1", "Usage", e.what());
        err << app.help();
        return usage_error;
    }

    if (check->parsed()) return detail::run_check(cfg, out, err);
    if (norm->parsed()) return detail::run_norm(cfg, out, err);
    return detail::run_corpus(cfg, out, err);
}

}  // namespace mltt::cli

#endif  // MLTT_CLI_HPP
