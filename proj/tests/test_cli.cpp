#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mltt/cli.hpp"

namespace mltt {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("mltt_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

TEST(Cli, ChecksTheCorpus) {
    Outcome r = run({"check", "corpus/univalence.mltt"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "checked 12 definitions, 0 errors\n");
    EXPECT_EQ(r.err, "");
}

TEST(Cli, LayeredChecks) {
    EXPECT_EQ(run({"check", "corpus/univalence.mltt", "corpus/axiom-univalence.mltt"}).out,
              "checked 13 definitions, 0 errors\n");
    EXPECT_EQ(run({"check", "corpus/extras.mltt", "corpus/axiom-k.mltt"}).out, "checked 5 definitions, 0 errors\n");
}

TEST(Cli, AxiomAloneIsUnbound) {
    Outcome r = run({"check", "corpus/axiom-univalence.mltt"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("UnboundVariable"), std::string::npos);
}

TEST(Cli, VerboseListsNames) {
    Outcome r = run({"check", "-v", "corpus/extras.mltt"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("ok K\nok isSet\nok Iso\nok Grp\n"), std::string::npos);
}

TEST(Cli, NormalizesEta) {
    Outcome r = run({"norm", "corpus/univalence.mltt", "--def", "eta"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "fun X x => (x , refl x)\n");
}

TEST(Cli, NormUnknownDefinition) {
    Outcome r = run({"norm", "corpus/univalence.mltt", "--def", "nope"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("UnknownDefinition"), std::string::npos);
}

TEST(Cli, TypeErrorDiagnostic) {
    std::string f = temp_file("bad.mltt", "postulate A : U0 ;\npostulate a : A ;\ndef p : A := (a , a) ;\n");
    Outcome r = run({"check", f});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find(f + ":3:1: error: ExpectedSigmaType: "), std::string::npos) << r.err;
    EXPECT_EQ(r.out, "checked 2 definitions, 1 errors\n");
}

TEST(Cli, ParseErrorExitsTwo) {
    std::string f = temp_file("parse.mltt", "def f := 3 ;\n");
    Outcome r = run({"check", f});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err, f + ":1:7: error: ParseError: expected ':', found ':='\n");
}

TEST(Cli, MissingFileExitsTwo) {
    Outcome r = run({"check", "does/not/exist.mltt"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("does/not/exist.mltt:1:1: error: IOError"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"norm", "corpus/univalence.mltt"}).code, 2);
}

TEST(Cli, CorpusVerifiesInPlace) {
    Outcome r = run({"corpus"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("univalence.mltt + axiom-univalence.mltt: checked 13 definitions, 0 errors"), std::string::npos);
}

TEST(Cli, CorpusWritesFiles) {
    auto dir = std::filesystem::temp_directory_path() / "mltt_cli_corpus";
    std::filesystem::remove_all(dir);
    Outcome r = run({"corpus", "--out", dir.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(std::filesystem::exists(dir / "axiom-k.mltt"));
}

TEST(Cli, CorpusDetectsEdits) {
    auto dir = std::filesystem::temp_directory_path() / "mltt_cli_edited";
    std::filesystem::remove_all(dir);
    ASSERT_EQ(run({"corpus", "--out", dir.string()}).code, 0);
    std::ofstream(dir / "extras.mltt", std::ios::app) << "postulate extra : U0 ;\n";
    Outcome r = run({"corpus", "--dir", dir.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("CorpusMismatch"), std::string::npos);
}

}  // namespace
}  // namespace mltt
