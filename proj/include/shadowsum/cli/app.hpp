#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "shadowsum/checks/checks.hpp"
#include "shadowsum/io/strict_json.hpp"
#include "shadowsum/shadow/shadow.hpp"
#include "shadowsum/tl/network.hpp"

namespace shadowsum::cli {

using arith::Complex;

enum class Format { json, csv, human };

struct RunConfig {
    int r = 5;
    int k = 1;
    int sqrt_branch = 0;
    int sqrt_minus_one = 1;
    double tolerance = 1e-9;
    shadow::PhaseSign phase_sign = shadow::PhaseSign::minus;
    tl::Budget budget{};
    Format format = Format::json;
    int jobs = 1;

    // Throws DomainError unless r >= 3 and gcd(k, 4r) = 1.
    arith::RootContext context() const;
    arith::RootContext context(int r) const;
};

struct ResultRecord {
    std::string input;
    int r = 0;
    int k = 0;
    std::string pipeline;  // "shadow" or "surgery"
    Complex value;
    int sigma = 0;
    long long terms = 0;  // colourings or Omega-expansion summands
    double seconds = 0.0;
};

// "invariant": runs the pipeline matching the document's root key.
ResultRecord cmd_invariant(const std::string &file, const RunConfig &config, std::optional<int> sigma = std::nullopt);

struct Range {
    int lo = 0;
    int hi = 0;
};
// "a..b" or a single integer.
Range parse_range(const std::string &text);

struct TableRow {
    std::vector<std::pair<std::string, int>> params;
    std::vector<ResultRecord> records;
    std::optional<Complex> expected;
    bool agree = true;
};

struct Table {
    std::string family;
    std::vector<TableRow> rows;
};

// family in {lens_surgery, lens_shadow, connected_sums, surface_gleam};
// n is the framing or gleam, g the number of summands or the genus.
Table cmd_table(const std::string &family, Range rs, Range ns, Range gs, const RunConfig &config);

struct SelftestReport {
    int r = 0;
    int k = 0;
    std::vector<checks::CheckResult> checks;
    bool passed() const;
};
SelftestReport cmd_selftest(const RunConfig &config, int max_label_sum = 6);

// Decimal string with 15 significant digits; negative zero prints as 0.
std::string decimal(double x);

io::ordered_json to_json(const ResultRecord &rec);
io::ordered_json to_json(const Table &t);
io::ordered_json to_json(const SelftestReport &s);
io::ordered_json error_record(const std::string &kind, const std::string &message, int exit_code);

void write(std::ostream &os, const ResultRecord &rec, Format f);
void write(std::ostream &os, const Table &t, Format f);
void write(std::ostream &os, const SelftestReport &s, Format f);

} // namespace shadowsum::cli
