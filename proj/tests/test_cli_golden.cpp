#include "orbi/commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Case {
    std::string id;
    int code = 0;
    std::vector<std::string> args;
};

std::vector<Case> load_cases() {
    std::ifstream in(fs::path(ORBI_GOLDEN_DIR) / "cases.txt");
    std::vector<Case> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Case c;
        ls >> c.id >> c.code;
        for (std::string a; ls >> a;) c.args.push_back(a);
        out.push_back(std::move(c));
    }
    return out;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = orbi::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class GoldenDir : public ::testing::Test {
protected:
    void SetUp() override {
        saved_ = fs::current_path();
        fs::current_path(ORBI_GOLDEN_DIR);
    }
    void TearDown() override { fs::current_path(saved_); }

private:
    fs::path saved_;
};

} // namespace

TEST_F(GoldenDir, CorpusMatchesExpectedOutput) {
    auto cases = load_cases();
    ASSERT_GE(cases.size(), 50u);
    for (const auto& c : cases) {
        SCOPED_TRACE(c.id);
        auto r = run(c.args);
        EXPECT_EQ(r.code, c.code);
        EXPECT_EQ(r.out + r.err, read_file(fs::path("expected") / (c.id + ".out")));
    }
}

TEST_F(GoldenDir, JsonIsByteStable) {
    for (const auto& c : load_cases()) {
        if (c.args.empty() || c.args[0] != "--json") continue;
        SCOPED_TRACE(c.id);
        auto a = run(c.args);
        auto b = run(c.args);
        EXPECT_EQ(a.out, b.out);
    }
    // Shard count does not leak into the output.
    auto one = run({"--json", "-f", "triangles.orb", "mordell-search", "m237", "--max-a", "5000", "--max-b", "500",
                    "--shards", "1"});
    auto many = run({"--json", "-f", "triangles.orb", "mordell-search", "m237", "--max-a", "5000", "--max-b", "500",
                     "--shards", "8"});
    EXPECT_EQ(one.out, many.out);
}

TEST_F(GoldenDir, PrintedCorpusReparsesToTheSameOutput) {
    for (const char* file : {"bielliptic.orb", "iitaka.orb", "lines.orb", "logarithmic.orb", "triangles.orb"}) {
        SCOPED_TRACE(file);
        auto printed = run({"-f", file, "print"});
        ASSERT_EQ(printed.code, 0);
        fs::path tmp = fs::temp_directory_path() / (std::string("orbi_roundtrip_") + file);
        std::ofstream(tmp) << printed.out;
        auto again = run({"-f", tmp.string(), "print"});
        EXPECT_EQ(again.out, printed.out);
        fs::remove(tmp);
    }
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, orbi::cli::kExitParse);
    EXPECT_EQ(run({"--help"}).code, orbi::cli::kExitOk);
    EXPECT_EQ(run({"classify", "x"}).code, orbi::cli::kExitParse);
    EXPECT_EQ(run({"-f", "/nonexistent/file.orb", "classify", "x"}).code, orbi::cli::kExitParse);
    EXPECT_EQ(run({"pfull", "--p", "2", "--limit", "100"}).out, "count=14\n");
    EXPECT_EQ(run({"pfull", "--p", "0", "--limit", "100"}).code, orbi::cli::kExitDomain);
}
