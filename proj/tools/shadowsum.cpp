#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "shadowsum/cli/app.hpp"
#include "shadowsum/error.hpp"

using namespace shadowsum;

namespace {

int report_error(const std::string &kind, const std::string &message, int code, cli::Format format) {
    if (format == cli::Format::json)
        std::cout << io::dump(cli::error_record(kind, message, code));
    else
        std::cerr << "error (" << kind << "): " << message << '\n';
    return code;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum invariants of 3-manifolds from shadows and surgery presentations"};
    app.require_subcommand(1);
    app.fallthrough();

    cli::RunConfig config;
    std::string phase_sign = "minus", format = "json";
    int budget = config.budget.max_crossings;
    app.add_option("--r", config.r, "level r >= 3")->envname("SHADOWSUM_R")->capture_default_str();
    app.add_option("--root-exponent", config.k, "A = exp(i pi k / 2r), gcd(k, 4r) = 1")
        ->envname("SHADOWSUM_ROOT_EXPONENT")
        ->capture_default_str();
    app.add_option("--sqrt-branch", config.sqrt_branch, "branch of sqrt(A)")
        ->envname("SHADOWSUM_SQRT_BRANCH")
        ->check(CLI::IsMember({0, 1}))
        ->capture_default_str();
    app.add_option("--sqrt-minus-one", config.sqrt_minus_one, "sign of the fixed sqrt(-1)")
        ->envname("SHADOWSUM_SQRT_MINUS_ONE")
        ->check(CLI::IsMember({1, -1}))
        ->capture_default_str();
    app.add_option("--tolerance", config.tolerance, "numeric comparison tolerance")
        ->envname("SHADOWSUM_TOLERANCE")
        ->capture_default_str();
    app.add_option("--phase-sign", phase_sign, "sign of the gleam phase exponent")
        ->envname("SHADOWSUM_PHASE_SIGN")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    app.add_option("--budget", budget, "largest number of elementary crossings in a bracket evaluation")
        ->envname("SHADOWSUM_BUDGET")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", format, "output format")
        ->envname("SHADOWSUM_FORMAT")
        ->check(CLI::IsMember({"json", "csv", "human"}))
        ->capture_default_str();
    app.add_option("--jobs", config.jobs, "worker threads for the state sum")
        ->envname("SHADOWSUM_JOBS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto *inv = app.add_subcommand("invariant", "evaluate a shadow or link file");
    std::string file;
    std::optional<int> sigma;
    inv->add_option("file", file, "shadow or link document")->required();
    inv->add_option("--sigma", sigma, "signature of the 4-manifold, for shadows without homology data");

    auto *table = app.add_subcommand("table", "sweep a family of examples");
    std::string family;
    std::string rs = "3..6", ns = "-3..3", gs = "0..5";
    table->add_option("family", family, "lens_surgery, lens_shadow, connected_sums or surface_gleam")
        ->required()
        ->check(CLI::IsMember({"lens_surgery", "lens_shadow", "connected_sums", "surface_gleam"}));
    table->add_option("--rs", rs, "range of levels a..b")->capture_default_str();
    table->add_option("--ns", ns, "range of framings or gleams")->capture_default_str();
    table->add_option("--gs", gs, "range of summands or genera")->capture_default_str();

    auto *self = app.add_subcommand("selftest", "check the skein identities the invariants rest on");
    int max_label_sum = 6;
    self->add_option("--max-label-sum", max_label_sum, "bound on label sums in local identities")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        return report_error("usage", e.what(), 2, format == "json" ? cli::Format::json : cli::Format::human);
    }

    static const std::map<std::string, cli::Format> formats{
        {"json", cli::Format::json}, {"csv", cli::Format::csv}, {"human", cli::Format::human}};
    config.format = formats.at(format);
    config.phase_sign = phase_sign == "plus" ? shadow::PhaseSign::plus : shadow::PhaseSign::minus;
    config.budget.max_crossings = budget;

    try {
        if (*inv) {
            cli::write(std::cout, cli::cmd_invariant(file, config, sigma), config.format);
        } else if (*table) {
            const auto t = cli::cmd_table(family, cli::parse_range(rs), cli::parse_range(ns), cli::parse_range(gs),
                                          config);
            cli::write(std::cout, t, config.format);
        } else {
            const auto rep = cli::cmd_selftest(config, max_label_sum);
            cli::write(std::cout, rep, config.format);
            return rep.passed() ? 0 : 4;
        }
    } catch (const Error &e) {
        return report_error(e.kind(), e.what(), e.exit_code(), config.format);
    } catch (const std::exception &e) {
        return report_error("internal", e.what(), 4, config.format);
    }
    return 0;
}
