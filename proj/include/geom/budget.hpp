#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "geom/errors.hpp"

namespace geom {

/// Resource limits shared by the exponential searches.
struct Budget {
    std::uint64_t span_calls = 10'000'000;
    std::chrono::milliseconds wall_clock{300'000};
    /// Distinct subspaces a lattice search may visit.
    std::size_t lattice_cap = 500'000;
    /// Exhaustive exchange-property checks are allowed up to this many points.
    std::size_t ep_exhaustive_max_points = 16;
    std::uint64_t ep_sample_trials = 10'000;
    /// Exact maximum-independent-set search is attempted up to this many points.
    std::size_t exact_independence_max_points = 20;
    std::uint64_t seed = 42;

    /// Defaults, with GEOM_BUDGET (a span-call count, e.g. "1e6") overriding span_calls.
    static Budget from_env() {
        Budget b;
        if (const char* env = std::getenv("GEOM_BUDGET")) {
            try {
                const double v = std::stod(env);
                if (v > 0) b.span_calls = static_cast<std::uint64_t>(v);
            } catch (const std::exception&) {
                throw UnsupportedParameter(std::string("GEOM_BUDGET is not a number: ") + env);
            }
        }
        return b;
    }
};

/// Counts span calls against a Budget and enforces the wall-clock cap.
class Meter {
public:
    explicit Meter(const Budget& b)
        : limit_(b.span_calls), deadline_(std::chrono::steady_clock::now() + b.wall_clock) {}

    void tick(std::uint64_t n = 1) {
        used_ += n;
        if (used_ > limit_) throw BudgetExceeded("span-call budget of " + std::to_string(limit_) + " exceeded");
        if ((used_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_)
            throw BudgetExceeded("wall-clock budget exceeded");
    }
    std::uint64_t used() const noexcept { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    std::chrono::steady_clock::time_point deadline_;
};

}  // namespace geom
