#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "shadowsum/arith/constants.hpp"
#include "shadowsum/cli/app.hpp"
#include "shadowsum/error.hpp"
#include "shadowsum/shadow/shadow_io.hpp"
#include "shadowsum/surgery/link_io.hpp"

using namespace shadowsum;
using arith::Complex;
namespace fs = std::filesystem;

namespace {

const std::string kData = SHADOWSUM_DATA_DIR;

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string &args, const std::string &env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + SHADOWSUM_CLI_PATH + " " + args + " 2>/dev/null";
    Run res;
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;)
        res.out.append(buf, n);
    const int st = pclose(p);
    res.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return res;
}

Complex value_of(const io::json &j) {
    return {std::stod(j["value"]["re"].get<std::string>()), std::stod(j["value"]["im"].get<std::string>())};
}

std::string temp_file(const std::string &name, const std::string &text) {
    const auto p = fs::temp_directory_path() / ("shadowsum_test_" + name);
    std::ofstream(p) << text;
    return p.string();
}

std::string strip_timing(const std::string &s) {
    return std::regex_replace(s, std::regex("\"wall_seconds\": [^,\\n}]*"), "\"wall_seconds\": 0");
}

} // namespace

TEST_CASE("invariant command") {
    cli::RunConfig cfg;
    cfg.r = 5;
    const auto rec = cli::cmd_invariant(kData + "/shadows/sphere_gleam_0.json", cfg);
    CHECK(rec.pipeline == "shadow");
    CHECK(std::abs(rec.value - Complex(1.0)) < 1e-9);
    CHECK(rec.terms == 4);

    const auto e = cli::cmd_invariant(kData + "/links/empty.json", cfg);
    CHECK(e.pipeline == "surgery");
    CHECK(std::abs(e.value - std::sqrt(2.0 / 5.0) * std::sin(std::numbers::pi / 5)) < 1e-12);

    // Both sides of the theta graph in S^3.
    const auto book = cli::cmd_invariant(kData + "/shadows/theta_book_1_1_2.json", cfg);
    const auto theta = cli::cmd_invariant(kData + "/links/theta_2_1_1.json", cfg);
    CHECK(std::abs(book.value - theta.value) < 1e-9);

    cfg.budget.max_crossings = 4;
    CHECK_THROWS_AS(cli::cmd_invariant(kData + "/links/hopf_0_0.json", cfg), BudgetExceeded);
    cfg.budget.max_crossings = 24;
    cfg.k = 2;
    CHECK_THROWS_AS(cli::cmd_invariant(kData + "/links/empty.json", cfg), DomainError);
    cfg.k = 1;
    CHECK_THROWS_AS(cli::cmd_invariant(temp_file("neither.json", R"({"edges": []})"), cfg), ParseError);
    CHECK_THROWS_AS(cli::cmd_invariant(kData + "/links/empty.json", cfg, 1), DomainError);
    CHECK(cli::cmd_invariant(kData + "/shadows/sphere_gleam_1.json", cfg, -1).sigma == -1);
}

TEST_CASE("tables") {
    cli::RunConfig cfg;
    cfg.phase_sign = shadow::PhaseSign::plus;
    for (const char *fam : {"lens_surgery", "lens_shadow"}) {
        const auto t = cli::cmd_table(fam, {3, 6}, {-3, 3}, {0, 0}, cfg);
        CHECK(t.rows.size() == 4 * 7);
        for (const auto &row : t.rows) {
            CHECK(row.agree);
            CHECK(row.records.size() == 2);
        }
        CHECK(t.rows[0].records[0].pipeline == (std::string(fam) == "lens_surgery" ? "surgery" : "shadow"));
    }
    cfg.phase_sign = shadow::PhaseSign::minus;
    const auto minus = cli::cmd_table("lens_surgery", {3, 6}, {-3, 3}, {0, 0}, cfg);
    CHECK(std::any_of(minus.rows.begin(), minus.rows.end(), [](const auto &r) { return !r.agree; }));

    const auto sums = cli::cmd_table("connected_sums", {3, 9}, {0, 0}, {0, 5}, cfg);
    CHECK(sums.rows.size() == 7 * 6);
    for (const auto &row : sums.rows) {
        const auto ctx = cfg.context(row.params[0].second);
        CHECK(std::abs(row.records[0].value - std::pow(arith::eta(ctx), 1 - row.params[1].second)) < 1e-9);
        CHECK(row.agree);
    }

    const auto torus = cli::cmd_table("surface_gleam", {3, 8}, {0, 0}, {1, 1}, cfg);
    for (const auto &row : torus.rows)
        CHECK(std::abs(row.records[0].value - Complex(row.params[0].second - 1)) < 1e-9);
    const auto surf = cli::cmd_table("surface_gleam", {3, 5}, {-2, 2}, {0, 2}, cfg);
    for (const auto &row : surf.rows)
        CHECK(row.agree);

    CHECK_THROWS_AS(cli::cmd_table("knots", {3, 3}, {0, 0}, {0, 0}, cfg), DomainError);
    CHECK_THROWS_AS(cli::parse_range("5..3"), DomainError);
    CHECK_THROWS_AS(cli::parse_range("a..b"), DomainError);
    CHECK(cli::parse_range("-3..3").lo == -3);
    CHECK(cli::parse_range("4").hi == 4);
}

TEST_CASE("selftest command") {
    cli::RunConfig cfg;
    for (auto [r, k] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{7, 3}}) {
        cfg.r = r;
        cfg.k = k;
        const auto rep = cli::cmd_selftest(cfg, 5);
        for (const auto &c : rep.checks) {
            INFO(r, " ", k, " ", c.name, ": ", c.first_failure);
            CHECK(c.passed());
            CHECK(c.cases > 0);
        }
        CHECK(rep.passed());
    }
}

TEST_CASE("formatting") {
    CHECK(cli::decimal(-0.0) == "0");
    CHECK(cli::decimal(1.0) == "1");
    CHECK(cli::decimal(0.1) == "0.1");
    CHECK(cli::decimal(1.0 / 3.0) == "0.333333333333333");
    CHECK(cli::decimal(-2.5e-20) == "-2.5e-20");
    const cli::ResultRecord rec{"x", 5, 1, "shadow", {1.5, -0.25}, 1, 4, 0.5};
    const auto j = cli::to_json(rec);
    CHECK(j["value"]["re"] == "1.5");
    CHECK(j["value"]["im"] == "-0.25");
    std::ostringstream csv, human;
    cli::write(csv, rec, cli::Format::csv);
    cli::write(human, rec, cli::Format::human);
    CHECK(csv.str().find("x,5,1,shadow,1.5,-0.25") != std::string::npos);
    CHECK(human.str().find("1.5 - 0.25i") != std::string::npos);
}

TEST_CASE("example files round-trip") {
    int files = 0;
    for (const auto &e : fs::directory_iterator(kData + "/shadows")) {
        const auto s = shadow::read_shadow(e.path().string());
        CHECK(shadow::shadow_from_json(io::parse_text(io::dump(shadow::shadow_to_json(s)))) == s);
        CHECK(shadow::validate(s).ok());
        ++files;
    }
    for (const auto &e : fs::directory_iterator(kData + "/links")) {
        const auto l = surgery::read_link(e.path().string());
        CHECK(surgery::link_from_json(io::parse_text(io::dump(surgery::link_to_json(l)))) == l);
        if (l.kind == surgery::FramedLink::Kind::diagram)
            CHECK(surgery::validate(l.diagram).empty());
        ++files;
    }
    CHECK(files >= 10);
}

TEST_CASE("binary") {
    auto r = run("--r 5 invariant " + kData + "/shadows/sphere_gleam_0.json");
    CHECK(r.status == 0);
    const auto j = io::parse_text(r.out);
    CHECK(std::abs(value_of(j) - Complex(1.0)) < 1e-9);
    CHECK(j["r"] == 5);

    r = run("invariant " + kData + "/links/empty.json", "SHADOWSUM_R=7");
    CHECK(r.status == 0);
    CHECK(io::parse_text(r.out)["r"] == 7);
    r = run("--r 5 invariant " + kData + "/links/empty.json", "SHADOWSUM_R=7");
    CHECK(io::parse_text(r.out)["r"] == 5);

    const auto bad = temp_file("bad.json", R"({"regions": [{"id": 1, "gleam2": 0, "chi": 2, "colour": 3}]})");
    r = run("invariant " + bad);
    CHECK(r.status == 2);
    const auto err = io::parse_text(r.out);
    CHECK(err["error"]["kind"] == "parse");
    CHECK(err["error"]["exit_code"] == 2);
    CHECK(err["error"]["message"].get<std::string>().find("colour") != std::string::npos);

    r = run("invariant " + temp_file("broken.json", "{\"regions\": ["));
    CHECK(r.status == 2);
    r = run("invariant /nonexistent/file.json");
    CHECK(r.status == 2);
    r = run("--budget 2 invariant " + kData + "/links/meridian_color1.json");
    CHECK(r.status == 3);
    CHECK(io::parse_text(r.out)["error"]["kind"] == "budget");
    r = run("--r 4 --root-exponent 2 invariant " + kData + "/links/empty.json");
    CHECK(r.status == 2);
    r = run("--phase-sign sideways invariant " + kData + "/links/empty.json");
    CHECK(r.status == 2);
    CHECK(io::parse_text(r.out)["error"]["kind"] == "usage");
    r = run("");
    CHECK(r.status == 2);

    // Identical runs give identical bytes apart from timing.
    const std::string table = "--phase-sign plus table lens_shadow --rs 3..5 --ns -2..2";
    const auto a = run(table), b = run(table + " --jobs 3");
    CHECK(a.status == 0);
    CHECK(strip_timing(a.out) == strip_timing(b.out));
    for (const auto &row : io::parse_text(a.out)["rows"])
        CHECK(row["agree"] == true);

    r = run("--format csv table connected_sums --rs 5 --gs 0..2");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("r,g,surgery_re,surgery_im,expected_re,expected_im,agree\n", 0) == 0);
    r = run("--format human --r 3 selftest --max-label-sum 4");
    CHECK(r.status == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}
