#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "laurent/error.hpp"
#include "laurent/report.hpp"
#include "laurent/session.hpp"
#include "support/generators.hpp"

using namespace laurent;

namespace {

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string parse_error_of(const std::string& text)
{
    try {
        parse_session(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        return e.what();
    }
    FAIL("parsed without error");
    return {};
}

}  // namespace

TEST_CASE("every corpus file round-trips through the printer")
{
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(LAURENT_CORPUS_DIR)) {
        if (entry.path().extension() != ".ring") continue;
        const std::string name = entry.path().filename().string();
        if (name == "bad_syntax.ring") continue;
        CAPTURE(name);
        Session s = parse_session(slurp(entry.path()));
        std::string printed = print_session(s);
        Session again = parse_session(printed);
        CHECK(again == s);
        CHECK(print_session(again) == printed);
        ++files;
    }
    CHECK(files >= 15);
}

TEST_CASE("round trip on generated sessions")
{
    gen::Rng rng(5150);
    for (int t = 0; t < 60; ++t) {
        std::ostringstream text;
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        text << "torus T rank " << n << " over QQ\n";
        auto names = default_names(n, "t");
        if (n == 1) names = {"t"};
        auto p = gen::poly(rng, n, static_cast<std::size_t>(rng.uniform(1, 4)), 3);
        text << "element p in T = " << to_string(p, names) << "\n";
        text << "grading g = " << to_string(gen::vec(rng, n, -3, 3)) << "\n";
        auto a = gen::automorphism(rng, n, 4);
        text << "auto a rank " << n << " over QQ matrix [";
        for (std::size_t i = 0; i < n; ++i) text << (i ? "," : "") << to_string(a.matrix().row(i));
        text << "] scalars [";
        for (std::size_t i = 0; i < n; ++i) text << (i ? "," : "") << to_string(a.scalars()[i]);
        text << "]\n";
        std::string src = text.str();
        for (char& c : src)
            if (c == '(') c = '[';
            else if (c == ')') c = ']';
        CAPTURE(src);
        Session s = parse_session(src);
        CHECK(s.element("p")->value == p);
        CHECK(s.automorphism("a")->map == a);
        CHECK(parse_session(print_session(s)) == s);
    }
}

TEST_CASE("parse errors report line and column")
{
    std::string msg = parse_error_of("torus T rank 2 over QQ vars x, y\nelement p in T = x^2 + * y\n");
    CHECK(msg.find("line 2, column 24") != std::string::npos);

    msg = parse_error_of("torus T rank 1 over QQ\nelement p in S = t\n");
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("unknown ring 'S'") != std::string::npos);

    msg = parse_error_of("grading g = [1]\ngrading g = [2]\n");
    CHECK(msg.find("already defined") != std::string::npos);

    msg = parse_error_of("frobnicate x\n");
    CHECK(msg.find("line 1, column 1") != std::string::npos);

    msg = parse_error_of("auto a rank 2 over QQ matrix [[2,0],[0,1]] scalars [1,1]\n");
    CHECK(msg.find("NotUnimodular") != std::string::npos);

    CHECK(parse_session("# only a comment\n\n").empty());
}

TEST_CASE("run_text exit codes over the corpus")
{
    const std::map<std::string, std::pair<std::string, int>> expected{
        {"cubic.ring", {"neutral", 0}},       {"t23.ring", {"normalize", 0}},
        {"t24.ring", {"normalize", 0}},       {"xy1.ring", {"characterize", 0}},
        {"over_base.ring", {"characterize", 0}}, {"localized.ring", {"normalize", 0}},
        {"grade.ring", {"grade", 0}},         {"units.ring", {"units", 0}},
        {"auto.ring", {"auto", 0}},           {"reconstruct.ring", {"reconstruct", 0}},
        {"reconstruct_fail.ring", {"reconstruct", 2}},
        {"bg.ring", {"bg-cancel", 0}},        {"cancel_a.ring", {"cancel", 0}},
        {"cancel_b.ring", {"cancel", 0}},     {"cancel_c.ring", {"cancel", 0}},
        {"violating.ring", {"cancel", 2}},    {"empty.ring", {"units", 3}},
        {"bad_syntax.ring", {"units", 3}},
    };
    const std::filesystem::path dir(LAURENT_CORPUS_DIR);
    for (const auto& [file, job] : expected) {
        CAPTURE(file);
        RunResult r = run_text(slurp(dir / file), job.first, {});
        CHECK(r.exit_code == job.second);
        CHECK(r.report["exit_code"] == job.second);
        CHECK(r.report["schema_version"] == std::string(kReportSchemaVersion));
        CHECK(r.report["command"] == job.first);
        CHECK(r.report["status"] == (job.second == 0 ? "ok" : "error"));
        if (job.second != 0) CHECK(r.report.contains("error"));
        CHECK_FALSE(r.text.empty());
    }
}

TEST_CASE("report contents")
{
    const std::filesystem::path dir(LAURENT_CORPUS_DIR);
    auto r = run_text(slurp(dir / "cubic.ring"), "neutral", {});
    CHECK(r.report["result"]["algebra_neutral"] == true);
    CHECK(r.report["result"]["lattice_rank"] == 0);
    CHECK(r.text.find("algebra_neutral: true") != std::string::npos);

    r = run_text(slurp(dir / "t23.ring"), "normalize", {});
    CHECK(r.report["result"]["w"] == "t");

    r = run_text(slurp(dir / "violating.ring"), "cancel", {});
    CHECK(r.report["error"]["kind"] == "HypothesisFailed");

    r = run_text(slurp(dir / "cancel_a.ring"), "cancel", {});
    CHECK(r.report["result"]["branch"] == "units_algebraic");
    r = run_text(slurp(dir / "cancel_b.ring"), "cancel", {});
    CHECK(r.report["result"]["branch"] == "units_neutral");
    r = run_text(slurp(dir / "cancel_c.ring"), "cancel", {});
    CHECK(r.report["result"]["branch"] == "field_base");

    r = run_text(slurp(dir / "bad_syntax.ring"), "units", {});
    CHECK(r.report["error"]["kind"] == "ParseError");
    CHECK(r.report["error"]["message"].get<std::string>().find("line 2, column 24") != std::string::npos);
}

TEST_CASE("seeded self-checks pass on the corpus")
{
    const std::filesystem::path dir(LAURENT_CORPUS_DIR);
    RunOptions opts;
    opts.seed = 7;
    for (const auto& [file, verb] : std::map<std::string, std::string>{{"t23.ring", "normalize"},
                                                                      {"auto.ring", "auto"},
                                                                      {"grade.ring", "grade"},
                                                                      {"units.ring", "units"},
                                                                      {"bg.ring", "bg-cancel"},
                                                                      {"cancel_c.ring", "cancel"}}) {
        CAPTURE(file);
        auto r = run_text(slurp(dir / file), verb, opts);
        CHECK(r.exit_code == 0);
        REQUIRE(r.report.contains("self_check"));
        CHECK(r.report["self_check"]["passed"] == true);
        CHECK(r.report["self_check"]["seed"] == 7);
    }
}

TEST_CASE("missing objects and unknown verbs")
{
    RunOptions opts;
    opts.targets = {"nope"};
    auto r = run_text("torus T rank 1 over QQ\n", "normalize", opts);
    CHECK(r.exit_code == 3);
    // A verb whose default target does not exist.
    r = run_text("torus T rank 1 over QQ\n", "gradings", {});
    CHECK(r.exit_code == 3);
    CHECK(r.report["error"]["kind"] == "MalformedPresentation");
    r = run_text("torus T rank 1 over QQ\n", "frobnicate", {});
    CHECK(r.exit_code != 0);
    CHECK(r.report["status"] == "error");
}
