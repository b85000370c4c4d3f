#pragma once

#include "subrec/errors.hpp"
#include "subrec/nat.hpp"

#include <cstdint>
#include <stdexcept>

namespace subrec {

/// Resource limits for one evaluation. Both limits are positive.
class EvalBudget {
public:
    static constexpr std::uint64_t kDefaultSteps = 1'000'000;
    static constexpr std::uint64_t kDefaultBits = std::uint64_t{1} << 20;

    EvalBudget() = default;
    EvalBudget(std::uint64_t max_steps, std::uint64_t max_bits) : max_steps_(max_steps), max_bits_(max_bits) {
        if (max_steps == 0 || max_bits == 0) throw std::invalid_argument("budget limits must be positive");
    }

    std::uint64_t max_steps() const { return max_steps_; }
    std::uint64_t max_bits() const { return max_bits_; }

    friend bool operator==(const EvalBudget&, const EvalBudget&) = default;

private:
    std::uint64_t max_steps_ = kDefaultSteps;
    std::uint64_t max_bits_ = kDefaultBits;
};

/// Tracks consumption against an EvalBudget. One meter per call; never shared.
class Meter {
public:
    explicit Meter(EvalBudget budget = {}) : budget_(budget) {}

    const EvalBudget& budget() const { return budget_; }
    std::uint64_t steps_used() const { return used_; }
    std::uint64_t steps_left() const { return budget_.max_steps() - used_; }

    void charge(std::uint64_t n = 1) {
        if (n > steps_left()) {
            used_ = budget_.max_steps();
            throw BudgetExceeded(BudgetExceeded::Resource::Steps);
        }
        used_ += n;
    }

    void charge(const Nat& n) {
        auto small = n.to_u64();
        if (!small) {
            used_ = budget_.max_steps();
            throw BudgetExceeded(BudgetExceeded::Resource::Steps);
        }
        charge(*small);
    }

    /// Fails unless a value of `bits` binary digits fits the budget.
    void require_bits(std::uint64_t bits) const {
        if (bits > budget_.max_bits()) throw BudgetExceeded(BudgetExceeded::Resource::Bits);
    }

    void require_bits(const Nat& bits) const {
        auto small = bits.to_u64();
        if (!small) throw BudgetExceeded(BudgetExceeded::Resource::Bits);
        require_bits(*small);
    }

    const Nat& fits(const Nat& v) const {
        require_bits(v.bit_length());
        return v;
    }

private:
    EvalBudget budget_;
    std::uint64_t used_ = 0;
};

}  // namespace subrec
