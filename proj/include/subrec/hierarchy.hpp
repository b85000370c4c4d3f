#pragma once

// Budgeted evaluation of the subrecursive hierarchies indexed by ordinals
// below epsilon_0.
//
// Every evaluator takes a Meter and throws BudgetExceeded when either the
// step count or the size of an intermediate value runs past the budget.
// Cost model: one step per recursion unfolding, one per predecessor
// computation plus one per fundamental-sequence unfolding inside it, and one
// per base-function application. Runs of base
// applications (finite ordinal tails, F_0 iterates) are charged in bulk and
// computed in closed form.

#include "subrec/base_function.hpp"
#include "subrec/budget.hpp"
#include "subrec/errors.hpp"
#include "subrec/nat.hpp"
#include "subrec/ordinal.hpp"

#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace subrec {

namespace detail {

inline void require_increasing(const BaseFunction& h) {
    if (!h.strictly_increasing()) throw InvalidBase("base function " + h.name() + " is not strictly increasing");
}

/// Parameters of one fast-growing family: the base function at index 0 and,
/// when `fs` is set, the function giving both the number of iterations at
/// successor indices and the fundamental-sequence widths.
struct FastGrowingFamily {
    BaseFunction base = BaseFunction::successor();
    std::optional<BaseFunction> fs;

    Nat iterations(const Nat& x) const { return fs ? apply_base(*fs, x) : x + 1; }
    Ordinal fundamental(const Ordinal& lambda, const Nat& x) const {
        return fs ? fund_seq_custom(*fs, lambda, x) : fund_seq(lambda, x);
    }
};

/// Successor iterations still owed, innermost last. The stored indices and
/// counters count against the bit budget.
class PendingStack {
public:
    explicit PendingStack(const Meter& meter) : meter_(meter) {}

    void push(Ordinal index, Nat remaining) {
        const std::uint64_t bits = encoded_bits(index) + remaining.bit_length();
        bits_ += bits;
        meter_.require_bits(bits_);
        items_.push_back({std::move(index), std::move(remaining), bits});
    }

    /// Takes one iteration from the innermost entry with work left and sets
    /// `alpha` to its index; false when nothing is owed.
    bool next(Ordinal& alpha) {
        while (!items_.empty() && items_.back().remaining.is_zero()) {
            bits_ -= items_.back().bits;
            items_.pop_back();
        }
        if (items_.empty()) return false;
        items_.back().remaining -= 1;
        alpha = items_.back().index;
        return true;
    }

private:
    struct Item {
        Ordinal index;
        Nat remaining;
        std::uint64_t bits;
    };
    std::vector<Item> items_;
    std::uint64_t bits_ = 0;
    const Meter& meter_;
};

/// Runs of F_1 = 2x+1 in the standard family, charged as if unfolded:
/// F_1(y) costs y+2 steps, so k runs from x cost (x+1)(2^k-1)+k.
inline bool accelerate_f1(const FastGrowingFamily& fam, const Ordinal& beta, const Nat& k, Nat& x, Meter& meter) {
    if (fam.fs || !(fam.base == BaseFunction::successor()) || beta != Ordinal::finite(1)) return false;
    meter.require_bits(k + Nat(x.bit_length() + 1));
    const Nat pow2 = Nat(1) << *k.to_u64();
    meter.charge((x + 1) * (pow2 - 1) + k);
    x = (x + 1) * pow2 - 1;
    meter.fits(x);
    return true;
}

/// G_a(x) > limit, decided without materialising values much larger than limit.
inline bool slow_growing_exceeds(const Ordinal& alpha, const Nat& x, std::uint64_t limit);

/// A descent from a at fixed x charges every successor index on the P_x
/// chain of a before the value or its size changes, at least G_a(x) - 1
/// steps. When that alone overruns the remaining steps the run can only end
/// in the same failure.
inline void check_descent(const Ordinal& alpha, const Nat& x, Meter& meter) {
    if (alpha.is_finite()) return;
    const std::uint64_t left = meter.steps_left();
    if (left < std::numeric_limits<std::uint64_t>::max() && slow_growing_exceeds(alpha, x, left + 1)) {
        meter.charge(meter.steps_left());
        meter.charge();
    }
}

/// Iterative evaluation with an explicit stack of pending successor
/// iterations, so deep unfoldings never touch the call stack.
inline Nat fast_growing_core(const FastGrowingFamily& fam, Ordinal alpha, Nat x, Meter& meter) {
    PendingStack pending(meter);
    if (!fam.fs) check_descent(alpha, x, meter);
    for (;;) {
        bool done = false;
        meter.charge();
        if (alpha.is_zero()) {
            x = apply_base(fam.base, x, meter);
            done = true;
        } else if (is_limit(alpha)) {
            alpha = fam.fundamental(alpha, x);
        } else {
            Nat n = fam.iterations(x);
            Ordinal beta = drop_last_copy(alpha);
            if (n.is_zero()) {
                done = true;
            } else if (beta.is_zero()) {
                x = iterate_base(fam.base, n, std::move(x), meter);
                done = true;
            } else if (accelerate_f1(fam, beta, n, x, meter)) {
                done = true;
            } else {
                if (n > Nat(1)) pending.push(beta, n - 1);
                alpha = std::move(beta);
            }
        }
        if (!done) continue;
        if (!pending.next(alpha)) return x;
        if (!fam.fs) check_descent(alpha, x, meter);
    }
}

inline Ordinal resolve_index(const OrdinalIndex& idx, const Nat& x, Meter& meter,
                             const std::optional<BaseFunction>& fs = std::nullopt) {
    if (const auto* a = std::get_if<Ordinal>(&idx)) return *a;
    // Building eps0(x) costs one step per level of the tower.
    meter.charge(x + 2);
    return fs ? fund_seq_custom(*fs, idx, x) : fund_seq(idx, x);
}

}  // namespace detail

/// F_0(x) = x+1, F_(a+1)(x) = F_a^(x+1)(x), F_l(x) = F_(l(x))(x).
inline Nat fast_growing(const OrdinalIndex& idx, const Nat& x, Meter& meter) {
    Ordinal alpha = detail::resolve_index(idx, x, meter);
    return detail::fast_growing_core({}, std::move(alpha), x, meter);
}

/// Relativized hierarchy with F_(h,0) = h.
inline Nat fast_growing_rel(const BaseFunction& h, const Ordinal& alpha, const Nat& x, Meter& meter) {
    detail::require_increasing(h);
    return detail::fast_growing_core({h, std::nullopt}, alpha, x, meter);
}

/// F_(0,s)(x) = x+1, F_(a+1,s)(x) = F_(a,s)^(s(x))(x), F_(l,s)(x) = F_(l(x)_s,s)(x).
inline Nat fast_growing_fs(const BaseFunction& s, const OrdinalIndex& idx, const Nat& x, Meter& meter) {
    Ordinal alpha = detail::resolve_index(idx, x, meter, s);
    return detail::fast_growing_core({BaseFunction::successor(), s}, std::move(alpha), x, meter);
}

namespace detail {

/// A term under in-place rewriting whose encoded size counts against the
/// bit budget, like any other intermediate value.
class TrackedTerm {
public:
    TrackedTerm(const Ordinal& a, const Meter& meter) : meter_(meter) {
        auto mons = a.monomials();
        t_.assign(mons.begin(), mons.end());
        bits_ = encoded_bits(a);
        meter_.require_bits(bits_);
    }

    bool empty() const { return t_.empty(); }
    const Monomial& back() const { return t_.back(); }

    void unfold(const Nat& x) {
        const std::size_t n = t_.size();
        bits_ -= encoded_bits(t_.back());
        unfold_in_place(t_, x, standard_width);
        if (t_.size() > n) bits_ += encoded_bits(t_[n - 1]);
        bits_ += encoded_bits(t_.back());
        meter_.require_bits(bits_);
    }

    void drop_one() {
        bits_ -= encoded_bits(t_.back());
        drop_last_in_place(t_);
        if (!t_.empty()) bits_ += encoded_bits(t_.back());
    }

    void pop() {
        bits_ -= encoded_bits(t_.back());
        t_.pop_back();
    }

private:
    std::vector<Monomial> t_;
    std::uint64_t bits_ = 0;
    const Meter& meter_;
};

/// Runs the Hardy computation on one mutable term. Returns the final value
/// and the number of transitions.
inline std::pair<Nat, Nat> hardy_run(const BaseFunction& h, const Ordinal& alpha, Nat x, Meter& meter) {
    require_increasing(h);
    TrackedTerm t(alpha, meter);
    Nat length = 0;
    while (!t.empty()) {
        if (t.back().exponent.is_zero()) {
            // Finite tail: each of the m steps is one predecessor and one base call.
            const Nat m = t.back().coefficient;
            meter.charge(m);
            x = iterate_base(h, m, std::move(x), meter);
            length += m;
            t.pop();
            continue;
        }
        meter.charge(2);
        while (!t.back().exponent.is_zero()) {
            meter.charge();
            t.unfold(x);
        }
        t.drop_one();
        x = apply_base(h, x, meter);
        length += 1;
    }
    return {std::move(x), std::move(length)};
}

}  // namespace detail

/// h^a(x) through the predecessor form h^a(x) = h^(P_x(a))(h(x)).
inline Nat hardy_eval(const BaseFunction& h, const Ordinal& alpha, const Nat& x, Meter& meter) {
    return detail::hardy_run(h, alpha, x, meter).first;
}

/// h^a(x) through h^0(x) = x, h^(a+1)(x) = h^a(h(x)), h^l(x) = h^(l(x))(x),
/// one step per unfolding. Kept as an independent route for cross-checks.
inline Nat hardy_eval_recursive(const BaseFunction& h, const Ordinal& alpha, Nat x, Meter& meter) {
    detail::require_increasing(h);
    detail::TrackedTerm t(alpha, meter);
    while (!t.empty()) {
        meter.charge();
        if (!t.back().exponent.is_zero()) {
            t.unfold(x);
        } else {
            t.drop_one();
            x = apply_base(h, x, meter);
        }
    }
    return x;
}

/// Cichon length function: h_0(x) = 0, h_(a+1)(x) = 1 + h_a(h(x)),
/// h_l(x) = h_(l(x))(x). Equal to the length of the Hardy computation.
inline Nat cichon(const BaseFunction& h, const Ordinal& alpha, const Nat& x, Meter& meter) {
    return detail::hardy_run(h, alpha, x, meter).second;
}

struct TraceStep {
    Ordinal ordinal;
    Nat value;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// The pairs <a_i, n_i> of a Hardy computation for h^a(n).
struct HardyTrace {
    BaseFunction base;
    std::vector<TraceStep> steps;
    bool complete = false;

    /// Number of transitions, i.e. steps.size() - 1.
    std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
    const Nat& final_value() const { return steps.back().value; }
};

/// Feeds each pair <a_i, n_i> of the Hardy computation for h^a(n) to
/// `visit`. Returns false when the budget runs out first.
template <class Visit>
bool hardy_walk(const BaseFunction& h, const Ordinal& alpha, const Nat& n, Meter& meter, Visit&& visit) {
    detail::require_increasing(h);
    Ordinal a = alpha;
    Nat x = n;
    visit(a, x);
    try {
        while (!a.is_zero()) {
            meter.charge(2);
            a = detail::predecessor_with(a, x, [&meter] { meter.charge(); });
            x = apply_base(h, x, meter);
            visit(a, x);
        }
    } catch (const BudgetExceeded&) {
        return false;
    }
    return true;
}

/// Runs the Hardy computation step by step. Budget exhaustion yields a
/// partial trace with complete == false.
inline HardyTrace hardy_trace(const BaseFunction& h, const Ordinal& alpha, const Nat& n, Meter& meter) {
    HardyTrace trace{h, {}, false};
    trace.complete = hardy_walk(h, alpha, n, meter, [&trace](const Ordinal& a, const Nat& x) {
        trace.steps.push_back({a, x});
    });
    return trace;
}

/// G_a(x): substitute x+1 for w in the normal form of a.
inline Nat slow_growing(const Ordinal& alpha, const Nat& x, Meter& meter) {
    Nat total = 0;
    const Nat base = x + 1;
    for (const Monomial& m : alpha.monomials()) {
        meter.charge();
        Nat power = 1;
        if (!m.exponent.is_zero()) {
            Nat e = slow_growing(m.exponent, x, meter);
            if (base > Nat(1)) {
                meter.require_bits(e * Nat(base.bit_length() - 1));
                power = pow(base, *e.to_u64());
            }
        }
        total += meter.fits(power * m.coefficient);
        meter.fits(total);
    }
    return total;
}

namespace detail {

inline bool slow_growing_exceeds(const Ordinal& alpha, const Nat& x, std::uint64_t limit) {
    Meter m(EvalBudget(std::numeric_limits<std::uint64_t>::max(), 80));
    try {
        return slow_growing(alpha, x, m) > Nat(limit);
    } catch (const BudgetExceeded&) {
        return true;
    }
}

}  // namespace detail

/// G_0(x) = 0, G_(a+1)(x) = 1 + G_a(x), G_l(x) = G_(l(x))(x), one step per
/// unfolding. Independent route for cross-checks.
inline Nat slow_growing_recursive(const Ordinal& alpha, const Nat& x, Meter& meter) {
    Nat count = 0;
    detail::TrackedTerm t(alpha, meter);
    while (!t.empty()) {
        meter.charge();
        if (!t.back().exponent.is_zero()) {
            t.unfold(x);
        } else {
            t.drop_one();
            ++count;
        }
    }
    return count;
}

/// A_1(x) = 2x, A_(a+1)(x) = A_a^x(1), A_l(x) = A_(l(x))(x); undefined at 0.
inline Nat ackermann(Ordinal alpha, Nat x, Meter& meter) {
    if (alpha.is_zero()) throw IndexZero();
    const Ordinal one = Ordinal::finite(1);
    detail::PendingStack pending(meter);
    for (;;) {
        bool done = false;
        meter.charge();
        if (alpha == one) {
            meter.require_bits(x.bit_length() + 1);
            x <<= 1;
            done = true;
        } else if (x == Nat(1) && alpha.last().exponent.is_zero() && alpha.size() > 1) {
            // A_(b+1)(1) = A_b(1): a finite tail of m is m steps at x = 1.
            const Nat m = alpha.last().coefficient;
            meter.charge(m - 1);
            auto mons = alpha.monomials();
            alpha = Ordinal::from_monomials_unchecked({mons.begin(), mons.end() - 1});
        } else if (is_limit(alpha)) {
            alpha = fund_seq(alpha, x);
        } else if (x.is_zero()) {
            x = 1;
            done = true;
        } else {
            Ordinal beta = detail::drop_last_copy(alpha);
            if (beta == one) {
                // A_1^x(1) = 2^x
                meter.charge(x);
                meter.require_bits(x + 1);
                x = Nat(1) << *x.to_u64();
                done = true;
            } else {
                if (x > Nat(1)) pending.push(beta, x - 1);
                alpha = std::move(beta);
                x = 1;
                // At x = 1 the descent follows the P_1 chain, as for F.
                detail::check_descent(alpha, x, meter);
            }
        }
        if (!done) continue;
        if (!pending.next(alpha)) return x;
    }
}

/// tow(0) = 1, tow(x+1) = 2^tow(x).
inline Nat tower(const Nat& x, Meter& meter) {
    Nat v = 1;
    for (Nat i = 0; i < x; ++i) {
        meter.charge();
        meter.require_bits(v + 1);
        v = Nat(1) << *v.to_u64();
    }
    return v;
}

// Convenience overloads that create a fresh meter from a budget.

inline Nat fast_growing(const OrdinalIndex& idx, const Nat& x, const EvalBudget& b = {}) {
    Meter m(b);
    return fast_growing(idx, x, m);
}
inline Nat fast_growing_rel(const BaseFunction& h, const Ordinal& a, const Nat& x, const EvalBudget& b = {}) {
    Meter m(b);
    return fast_growing_rel(h, a, x, m);
}
inline Nat fast_growing_fs(const BaseFunction& s, const OrdinalIndex& idx, const Nat& x, const EvalBudget& b = {}) {
    Meter m(b);
    return fast_growing_fs(s, idx, x, m);
}
inline Nat hardy_eval(const BaseFunction& h, const Ordinal& a, const Nat& x, const EvalBudget& b = {}) {
    Meter m(b);
    return hardy_eval(h, a, x, m);
}
inline HardyTrace hardy_trace(const BaseFunction& h, const Ordinal& a, const Nat& n, const EvalBudget& b = {}) {
    Meter m(b);
    return hardy_trace(h, a, n, m);
}
inline Nat cichon(const BaseFunction& h, const Ordinal& a, const Nat& x, const EvalBudget& b = {}) {
    Meter m(b);
    return cichon(h, a, x, m);
}
inline Nat slow_growing(const Ordinal& a, const Nat& x, const EvalBudget& b = {}) {
    Meter m(b);
    return slow_growing(a, x, m);
}
inline Nat ackermann(const Ordinal& a, const Nat& x, const EvalBudget& b = {}) {
    Meter m(b);
    return ackermann(a, x, m);
}
inline Nat tower(const Nat& x, const EvalBudget& b) {
    Meter m(b);
    return tower(x, m);
}

}  // namespace subrec
