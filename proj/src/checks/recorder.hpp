#pragma once

#include <chrono>
#include <exception>
#include <string>

#include "shadowsum/checks/checks.hpp"

namespace shadowsum::checks {

class Recorder {
public:
    Recorder(std::string name, std::string certifies) : start_(std::chrono::steady_clock::now()) {
        result_.name = std::move(name);
        result_.certifies = std::move(certifies);
    }

    template <class F>
    void expect(bool ok, F describe) {
        ++result_.cases;
        if (!ok && result_.failures++ == 0)
            result_.first_failure = describe();
    }

    // Runs f, turning an exception into a failed case.
    template <class F, class D>
    void guarded(F f, D describe) {
        try {
            f();
        } catch (const std::exception &e) {
            expect(false, [&] { return std::string(describe()) + ": " + e.what(); });
        }
    }

    CheckResult done() {
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return result_;
    }

private:
    CheckResult result_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace shadowsum::checks
