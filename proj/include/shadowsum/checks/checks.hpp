#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shadowsum/arith/root_context.hpp"

namespace shadowsum::checks {

using arith::RootContext;

struct CheckResult {
    std::string name;
    std::string certifies;
    int cases = 0;
    int failures = 0;
    std::string first_failure;
    double seconds = 0.0;

    bool passed() const { return failures == 0; }
};

struct CheckOptions {
    // Bound on the sum of the labels entering a local identity.
    int max_label_sum = 8;
    double tolerance = 1e-9;
};

CheckResult check_projectors(const RootContext &ctx);
CheckResult check_delta_oracle(const RootContext &ctx);
CheckResult check_theta_tet_oracle(const RootContext &ctx, const CheckOptions &opts);
CheckResult check_fusion2(const RootContext &ctx, const CheckOptions &opts);
CheckResult check_fusion3(const RootContext &ctx, const CheckOptions &opts);
CheckResult check_bubble(const RootContext &ctx, const CheckOptions &opts);
CheckResult check_lemma(const RootContext &ctx, const CheckOptions &opts);
CheckResult check_sixj(const RootContext &ctx, const CheckOptions &opts);
CheckResult check_twists(const RootContext &ctx, const CheckOptions &opts);
CheckResult check_handleslide(const RootContext &ctx, const CheckOptions &opts);
CheckResult check_constants(const RootContext &ctx, const CheckOptions &opts);

// Every check above, in a fixed order.
std::vector<CheckResult> selftest(const RootContext &ctx, const CheckOptions &opts);

} // namespace shadowsum::checks
