#include "shadowsum/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>

#include "shadowsum/arith/constants.hpp"
#include "shadowsum/checks/random_shadow.hpp"
#include "shadowsum/error.hpp"
#include "shadowsum/recoupling/recoupling.hpp"
#include "shadowsum/shadow/families.hpp"
#include "shadowsum/shadow/shadow_io.hpp"
#include "shadowsum/surgery/link_io.hpp"

namespace shadowsum::cli {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

surgery::SurgeryOptions surgery_options(const RunConfig &c) { return {c.budget, false}; }
shadow::StateSumOptions shadow_options(const RunConfig &c) { return {c.phase_sign, c.jobs}; }

ResultRecord run_shadow(const arith::RootContext &ctx, const std::string &input, const shadow::Shadow &s,
                        const RunConfig &config, std::optional<int> sigma = std::nullopt) {
    const auto t0 = Clock::now();
    shadow::check(s, &ctx);
    const auto inv = shadow::invariant_from_shadow(ctx, s, sigma, shadow_options(config));
    return {input, ctx.r(), ctx.a_exponent(), "shadow", inv.value, inv.sigma, inv.sum.colorings, since(t0)};
}

ResultRecord run_surgery(const arith::RootContext &ctx, const std::string &input, const surgery::FramedLink &l,
                         const RunConfig &config) {
    const auto t0 = Clock::now();
    const auto inv = surgery::invariant_from_surgery(ctx, l, surgery_options(config));
    return {input, ctx.r(), ctx.a_exponent(), "surgery", inv.value, inv.sigma, inv.omega.terms, since(t0)};
}

io::ordered_json complex_json(Complex z) { return {{"re", decimal(z.real())}, {"im", decimal(z.imag())}}; }

std::string complex_text(Complex z) {
    const double im = z.imag();
    return decimal(z.real()) + (std::signbit(im) && im != 0.0 ? " - " : " + ") + decimal(std::abs(im)) + "i";
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

int sign(int n) { return (n > 0) - (n < 0); }

std::string param_text(const std::vector<std::pair<std::string, int>> &ps) {
    std::string out;
    for (const auto &[k, v] : ps)
        out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return out;
}

} // namespace

arith::RootContext RunConfig::context() const { return context(r); }

arith::RootContext RunConfig::context(int level) const {
    return arith::RootContext(level, k, sqrt_branch, sqrt_minus_one);
}

ResultRecord cmd_invariant(const std::string &file, const RunConfig &config, std::optional<int> sigma) {
    const auto ctx = config.context();
    const io::json j = io::read_file(file);
    if (shadow::looks_like_shadow(j))
        return run_shadow(ctx, file, shadow::shadow_from_json(j, file), config, sigma);
    if (surgery::looks_like_link(j)) {
        if (sigma)
            throw DomainError("--sigma applies to shadows only");
        return run_surgery(ctx, file, surgery::link_from_json(j, file), config);
    }
    throw ParseError(file + ": expected a shadow (key \"regions\") or a link (key \"family\" or \"diagram\")");
}

Range parse_range(const std::string &text) {
    try {
        std::size_t used = 0;
        const auto dots = text.find("..");
        Range r;
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
        } else {
            const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
            r.lo = std::stoi(a, &used);
            if (used != a.size())
                throw std::invalid_argument(text);
            r.hi = std::stoi(b, &used);
            if (used != b.size())
                throw std::invalid_argument(text);
        }
        if (r.lo > r.hi)
            throw DomainError("empty range " + text);
        return r;
    } catch (const std::logic_error &) {
        throw DomainError("invalid range \"" + text + "\", expected a..b");
    }
}

Table cmd_table(const std::string &family, Range rs, Range ns, Range gs, const RunConfig &config) {
    Table t{family, {}};
    const bool lens = family == "lens_surgery" || family == "lens_shadow";
    if (!lens && family != "connected_sums" && family != "surface_gleam")
        throw DomainError("unknown family \"" + family + "\"");
    for (int r = rs.lo; r <= rs.hi; ++r) {
        const auto ctx = config.context(r);
        const Complex eta = arith::eta(ctx);
        if (lens) {
            for (int n = ns.lo; n <= ns.hi; ++n) {
                TableRow row;
                row.params = {{"r", r}, {"n", n}};
                auto sur = run_surgery(ctx, "unknot(" + std::to_string(n) + ")", surgery::unknot(n), config);
                auto sha = run_shadow(ctx, "sphere(gleam " + std::to_string(n) + ")", shadow::sphere(2 * n), config);
                row.agree = std::abs(sur.value - sha.value) <= config.tolerance;
                if (family == "lens_surgery")
                    row.records = {sur, sha};
                else
                    row.records = {sha, sur};
                t.rows.push_back(row);
            }
        } else if (family == "connected_sums") {
            for (int g = gs.lo; g <= gs.hi; ++g) {
                if (g < 0)
                    throw DomainError("g must be non-negative");
                TableRow row;
                row.params = {{"r", r}, {"g", g}};
                row.records = {
                    run_surgery(ctx, "unlink(" + std::to_string(g) + ")", surgery::unlink(std::vector<int>(g, 0)), config)};
                row.expected = std::pow(eta, 1 - g);
                row.agree = std::abs(row.records[0].value - *row.expected) <= config.tolerance;
                t.rows.push_back(row);
            }
        } else {
            const Complex kappa = recoupling::omega_unknot(ctx, 1);
            for (int g = gs.lo; g <= gs.hi; ++g)
                for (int n = ns.lo; n <= ns.hi; ++n) {
                    if (g < 0)
                        throw DomainError("g must be non-negative");
                    TableRow row;
                    row.params = {{"r", r}, {"g", g}, {"n", n}};
                    const auto s = shadow::closed_surface(g, 2 * n);
                    row.records = {run_shadow(
                        ctx, "surface(genus " + std::to_string(g) + ", gleam " + std::to_string(n) + ")", s, config)};
                    Complex sum = 0.0;
                    for (int a = 0; a <= r - 2; ++a)
                        sum += std::pow(recoupling::delta_value(ctx, a), 2 - 2 * g) *
                               shadow::phase(ctx, s.regions[0], a, config.phase_sign);
                    row.expected = std::pow(kappa, -sign(n)) * std::pow(eta, 2 - 2 * g) * sum;
                    row.agree = std::abs(row.records[0].value - *row.expected) <= config.tolerance;
                    t.rows.push_back(row);
                }
        }
    }
    return t;
}

bool SelftestReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed(); });
}

SelftestReport cmd_selftest(const RunConfig &config, int max_label_sum) {
    const auto ctx = config.context();
    SelftestReport rep{ctx.r(), ctx.a_exponent(), {}};
    rep.checks = checks::selftest(ctx, {max_label_sum, config.tolerance});
    rep.checks.push_back(checks::check_shadow_properties(100, 1, std::clamp(ctx.r(), 3, 6)));
    return rep;
}

std::string decimal(double x) {
    if (x == 0.0)
        x = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

io::ordered_json to_json(const ResultRecord &rec) {
    io::ordered_json j;
    j["input"] = rec.input;
    j["r"] = rec.r;
    j["k"] = rec.k;
    j["pipeline"] = rec.pipeline;
    j["value"] = complex_json(rec.value);
    j["abs"] = decimal(std::abs(rec.value));
    j["sigma"] = rec.sigma;
    j["terms"] = rec.terms;
    j["wall_seconds"] = rec.seconds;
    return j;
}

io::ordered_json to_json(const Table &t) {
    io::ordered_json j;
    j["family"] = t.family;
    j["rows"] = io::ordered_json::array();
    for (const auto &row : t.rows) {
        io::ordered_json o;
        for (const auto &[k, v] : row.params)
            o[k] = v;
        o["results"] = io::ordered_json::array();
        for (const auto &rec : row.records)
            o["results"].push_back(to_json(rec));
        if (row.expected)
            o["expected"] = complex_json(*row.expected);
        o["agree"] = row.agree;
        j["rows"].push_back(o);
    }
    return j;
}

io::ordered_json to_json(const SelftestReport &s) {
    io::ordered_json j;
    j["r"] = s.r;
    j["k"] = s.k;
    j["passed"] = s.passed();
    j["checks"] = io::ordered_json::array();
    for (const auto &c : s.checks) {
        io::ordered_json o;
        o["name"] = c.name;
        o["certifies"] = c.certifies;
        o["passed"] = c.passed();
        o["cases"] = c.cases;
        o["failures"] = c.failures;
        if (!c.first_failure.empty())
            o["first_failure"] = c.first_failure;
        o["wall_seconds"] = c.seconds;
        j["checks"].push_back(o);
    }
    return j;
}

io::ordered_json error_record(const std::string &kind, const std::string &message, int exit_code) {
    io::ordered_json j;
    j["error"] = {{"kind", kind}, {"message", message}, {"exit_code", exit_code}};
    return j;
}

void write(std::ostream &os, const ResultRecord &rec, Format f) {
    switch (f) {
    case Format::json:
        os << io::dump(to_json(rec));
        break;
    case Format::csv:
        os << "input,r,k,pipeline,re,im,abs,sigma,terms,wall_seconds\n"
           << csv_field(rec.input) << ',' << rec.r << ',' << rec.k << ',' << rec.pipeline << ','
           << decimal(rec.value.real()) << ',' << decimal(rec.value.imag()) << ',' << decimal(std::abs(rec.value))
           << ',' << rec.sigma << ',' << rec.terms << ',' << rec.seconds << '\n';
        break;
    case Format::human:
        os << rec.input << " (" << rec.pipeline << ", r=" << rec.r << ", k=" << rec.k << ")\n"
           << "  value  " << complex_text(rec.value) << "\n"
           << "  |value| " << decimal(std::abs(rec.value)) << "\n"
           << "  sigma  " << rec.sigma << ", " << rec.terms << " terms, " << std::fixed << std::setprecision(3)
           << rec.seconds << " s\n"
           << std::defaultfloat;
        break;
    }
}

void write(std::ostream &os, const Table &t, Format f) {
    switch (f) {
    case Format::json:
        os << io::dump(to_json(t));
        break;
    case Format::csv: {
        if (t.rows.empty())
            return;
        const auto &head = t.rows.front();
        for (const auto &[k, v] : head.params)
            os << k << ',';
        for (const auto &rec : head.records)
            os << rec.pipeline << "_re," << rec.pipeline << "_im,";
        if (head.expected)
            os << "expected_re,expected_im,";
        os << "agree\n";
        for (const auto &row : t.rows) {
            for (const auto &[k, v] : row.params)
                os << v << ',';
            for (const auto &rec : row.records)
                os << decimal(rec.value.real()) << ',' << decimal(rec.value.imag()) << ',';
            if (row.expected)
                os << decimal(row.expected->real()) << ',' << decimal(row.expected->imag()) << ',';
            os << (row.agree ? "true" : "false") << '\n';
        }
        break;
    }
    case Format::human:
        os << t.family << '\n';
        for (const auto &row : t.rows) {
            os << "  " << std::left << std::setw(14) << param_text(row.params);
            for (const auto &rec : row.records)
                os << "  " << rec.pipeline << ' ' << std::setw(44) << complex_text(rec.value);
            if (row.expected)
                os << "  expected " << std::setw(44) << complex_text(*row.expected);
            os << (row.agree ? "  agree" : "  DISAGREE") << '\n';
        }
        os << std::right;
        break;
    }
}

void write(std::ostream &os, const SelftestReport &s, Format f) {
    switch (f) {
    case Format::json:
        os << io::dump(to_json(s));
        break;
    case Format::csv:
        os << "name,certifies,passed,cases,failures,first_failure,wall_seconds\n";
        for (const auto &c : s.checks)
            os << csv_field(c.name) << ',' << csv_field(c.certifies) << ',' << (c.passed() ? "true" : "false")
               << ',' << c.cases << ',' << c.failures << ',' << csv_field(c.first_failure) << ',' << c.seconds
               << '\n';
        break;
    case Format::human:
        os << "selftest r=" << s.r << " k=" << s.k << '\n';
        for (const auto &c : s.checks) {
            os << "  " << (c.passed() ? "pass " : "FAIL ") << std::left << std::setw(16) << c.name << std::right
               << ' ' << c.cases << " cases, " << std::fixed << std::setprecision(2) << c.seconds << " s"
               << std::defaultfloat << "  (" << c.certifies << ")\n";
            if (!c.passed())
                os << "       first failure: " << c.first_failure << '\n';
        }
        os << (s.passed() ? "all checks passed\n" : "some checks FAILED\n");
        break;
    }
}

} // namespace shadowsum::cli
