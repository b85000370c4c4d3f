#include "support.hpp"

#include "subrec/hierarchy.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace subrec;
using subrec::testing::O;

namespace {

const BaseFunction kSucc = BaseFunction::successor();

// Plain recursion straight from the defining equations, on machine words,
// with call and depth counters so runaway cases abort.
std::uint64_t naive_fast_growing(const Ordinal& a, std::uint64_t x, std::uint64_t& calls, int depth = 0) {
    if (++calls > 200'000 || depth > 2000) throw std::runtime_error("naive oracle overflow");
    if (a.is_zero()) return x + 1;
    // F_2(12) already exceeds the 4096 ceiling below.
    if (x > 12 && a > Ordinal::finite(1)) throw std::runtime_error("naive oracle overflow");
    if (is_limit(a)) return naive_fast_growing(fund_seq(a, x), x, calls, depth + 1);
    Ordinal b = std::get<IsSuccessor>(classify(a)).predecessor;
    std::uint64_t y = x;
    for (std::uint64_t i = 0; i <= x; ++i) {
        y = naive_fast_growing(b, y, calls, depth + 1);
        if (y > 4096) throw std::runtime_error("naive oracle overflow");
    }
    return y;
}

Nat f2_closed(std::uint64_t x) { return (Nat(1) << (x + 1)) * Nat(x + 1) - 1; }

}  // namespace

TEST_CASE("apply_base", "[hierarchy][base]") {
    CHECK(apply_base(kSucc, 5) == Nat(6));
    CHECK(apply_base(BaseFunction::affine(2, 1), 3) == Nat(7));
    CHECK(apply_base(BaseFunction::exp2(), 10) == Nat(1024));

    CHECK(BaseFunction::parse("affine:2:1") == BaseFunction::affine(2, 1));
    CHECK(BaseFunction::parse("exp2").name() == "exp2");
    CHECK_THROWS_AS(BaseFunction::parse("affine:2"), std::invalid_argument);
    CHECK_FALSE(BaseFunction::affine(0, 3).strictly_increasing());
    CHECK_FALSE(BaseFunction::affine(1, 0).strictly_expansive());
    CHECK(BaseFunction::affine(1, 1).strictly_expansive());
}

TEST_CASE("iterate_base agrees with repeated application", "[hierarchy][base]") {
    for (auto h : {kSucc, BaseFunction::affine(2, 1), BaseFunction::affine(3, 0), BaseFunction::affine(1, 4),
                   BaseFunction::exp2()}) {
        for (std::uint64_t x = 0; x < 4; ++x) {
            Nat expected = x;
            for (int k = 0; k < 4; ++k) {
                Meter m;
                REQUIRE(iterate_base(h, k, x, m) == expected);
                REQUIRE(m.steps_used() == static_cast<std::uint64_t>(k));
                if (k < 3) expected = apply_base(h, expected);
            }
        }
    }
}

TEST_CASE("fast-growing closed forms", "[hierarchy][fast]") {
    for (std::uint64_t x = 0; x <= 10; ++x) {
        CHECK(fast_growing(O("1"), x) == Nat(2 * x + 1));
        CHECK(fast_growing(O("2"), x) == f2_closed(x));
    }
    CHECK(fast_growing(O("1"), 7) == Nat(15));
    CHECK(fast_growing(O("2"), 3) == Nat(63));
    // F_2(1) = 7, F_2(7) = 2047.
    CHECK(f2_closed(*f2_closed(1).to_u64()) == Nat(2047));
    CHECK(fast_growing(O("3"), 1) == Nat(2047));
    CHECK(fast_growing(O("w"), 0) == Nat(1));
    CHECK(fast_growing(OrdinalIndex{EpsilonZero{}}, 0) == Nat(1));
    for (const auto& a : enumerate_ordinals(3, 2, 2)) REQUIRE(fast_growing(a, 0) == Nat(1));
}

TEST_CASE("fast-growing agrees with naive recursion", "[hierarchy][fast][oracle]") {
    for (const auto& a : enumerate_ordinals(2, 2, 2)) {
        for (std::uint64_t x = 0; x <= 2; ++x) {
            std::uint64_t calls = 0;
            std::uint64_t expected;
            try {
                expected = naive_fast_growing(a, x, calls);
            } catch (const std::runtime_error&) {
                continue;
            }
            REQUIRE(fast_growing(a, x) == Nat(expected));
        }
    }
}

TEST_CASE("fast-growing budget failures", "[hierarchy][fast][budget]") {
    CHECK_THROWS_AS(fast_growing(O("w"), 2), BudgetExceeded);
    CHECK_THROWS_AS(fast_growing(O("3"), 2), BudgetExceeded);
    CHECK_THROWS_AS(fast_growing(O("2"), 30, EvalBudget(10, 1 << 20)), BudgetExceeded);
    try {
        fast_growing(O("2"), 100, EvalBudget(1'000'000, 16));
        FAIL("expected a budget failure");
    } catch (const BudgetExceeded& e) {
        CHECK(e.resource() == BudgetExceeded::Resource::Bits);
    }
    CHECK_THROWS_AS(EvalBudget(0, 5), std::invalid_argument);
}

TEST_CASE("relativized fast-growing", "[hierarchy][fast]") {
    CHECK(fast_growing_rel(kSucc, O("2"), 3) == Nat(63));
    CHECK(fast_growing_rel(BaseFunction::exp2(), O("0"), 4) == Nat(16));
    auto h = BaseFunction::affine(2, 1);
    CHECK(fast_growing_rel(h, O("1"), 2) == apply_base(h, apply_base(h, apply_base(h, 2))));
    CHECK(fast_growing_rel(h, O("1"), 2) == Nat(23));
    CHECK_THROWS_AS(fast_growing_rel(BaseFunction::affine(0, 3), O("1"), 2), InvalidBase);
    for (const auto& a : enumerate_ordinals(2, 1, 2))
        for (int x = 0; x <= 2; ++x) {
            Nat expected;
            try {
                expected = fast_growing(a, x);
            } catch (const BudgetExceeded&) {
                continue;
            }
            REQUIRE(fast_growing_rel(kSucc, a, x) == expected);
        }
}

TEST_CASE("fast-growing with non-standard fundamental sequences", "[hierarchy][fast]") {
    CHECK(fast_growing_fs(kSucc, O("2"), 3) == Nat(63));
    CHECK(fast_growing_fs(BaseFunction::affine(2, 1), O("1"), 2) == Nat(7));
    for (auto s : {kSucc, BaseFunction::affine(2, 1), BaseFunction::exp2(), BaseFunction::affine(1, 0)})
        for (int x = 0; x < 5; ++x) CHECK(fast_growing_fs(s, O("0"), x) == Nat(x + 1));
    // Identity s: F_(1,s)(3) = F_0^3(3).
    CHECK(fast_growing_fs(BaseFunction::affine(1, 0), O("1"), 3) == Nat(6));
    CHECK_THROWS_AS(fast_growing_fs(BaseFunction::affine(1, 0), O("w"), 0), InvalidBase);
    for (const auto& a : enumerate_ordinals(2, 1, 2))
        for (int x = 0; x <= 2; ++x) {
            Nat expected;
            try {
                expected = fast_growing(a, x);
            } catch (const BudgetExceeded&) {
                continue;
            }
            REQUIRE(fast_growing_fs(kSucc, a, x) == expected);
        }
}

TEST_CASE("Hardy functions", "[hierarchy][hardy]") {
    CHECK(hardy_eval(kSucc, O("w"), 5) == Nat(11));
    for (int x = 0; x < 5; ++x) CHECK(hardy_eval(kSucc, O("0"), x) == Nat(x));
    CHECK(hardy_eval(kSucc, O("w^2"), 1) == Nat(7));
    for (std::uint64_t x = 0; x <= 50; ++x) CHECK(hardy_eval(kSucc, O("w"), x) == Nat(2 * x + 1));
    // H^(x+2)(x) = 2x+2 > 2x+1 = H^w(x)
    CHECK(hardy_eval(kSucc, O("5"), 3) == Nat(8));
    CHECK_THROWS_AS(hardy_eval(BaseFunction::affine(0, 1), O("w"), 1), InvalidBase);
}

TEST_CASE("Hardy evaluation routes agree", "[hierarchy][hardy][dual]") {
    std::size_t compared = 0;
    for (auto h : {kSucc, BaseFunction::affine(2, 1), BaseFunction::exp2()}) {
        for (const auto& a : enumerate_ordinals(2, 2, 2)) {
            for (int x = 0; x <= 3; ++x) {
                Nat fast;
                try {
                    fast = hardy_eval(h, a, x, EvalBudget(5'000, 1 << 16));
                } catch (const BudgetExceeded&) {
                    continue;
                }
                Meter m(EvalBudget(1'000'000, 1 << 16));
                REQUIRE(hardy_eval_recursive(h, a, x, m) == fast);
                ++compared;
            }
        }
    }
    CHECK(compared > 100);
}

TEST_CASE("Hardy traces", "[hierarchy][trace]") {
    auto t = hardy_trace(kSucc, O("2"), 3);
    CHECK(t.complete);
    CHECK(t.steps == std::vector<TraceStep>{{O("2"), 3}, {O("1"), 4}, {O("0"), 5}});
    CHECK(t.final_value() == Nat(5));

    t = hardy_trace(kSucc, O("w"), 1);
    CHECK(t.steps == std::vector<TraceStep>{{O("w"), 1}, {O("1"), 2}, {O("0"), 3}});

    t = hardy_trace(BaseFunction::exp2(), O("0"), 9);
    CHECK(t.complete);
    CHECK(t.steps == std::vector<TraceStep>{{O("0"), 9}});

    auto partial = hardy_trace(kSucc, O("w^w"), 3, EvalBudget(100, 1 << 20));
    CHECK_FALSE(partial.complete);
    auto longer = hardy_trace(kSucc, O("w^w"), 3, EvalBudget(1000, 1 << 20));
    CHECK_FALSE(longer.complete);
    REQUIRE(partial.steps.size() > 1);
    REQUIRE(longer.steps.size() > partial.steps.size());
    CHECK(std::equal(partial.steps.begin(), partial.steps.end(), longer.steps.begin()));
}

TEST_CASE("trace invariants and length", "[hierarchy][trace][property]") {
    const auto corpus = enumerate_ordinals(2, 2, 2);
    std::size_t traced = 0;
    for (auto h : {kSucc, BaseFunction::affine(2, 1)}) {
        for (std::size_t k = 0; k < corpus.size(); ++k) {
            const Ordinal& a = corpus[k];
            for (int n = 0; n <= 2; ++n) {
                try {
                    cichon(h, a, n, EvalBudget(3'000, 1 << 16));
                } catch (const BudgetExceeded&) {
                    continue;
                }
                auto t = hardy_trace(h, a, n, EvalBudget(3'000, 1 << 16));
                REQUIRE(t.complete);
                ++traced;
                REQUIRE(t.steps.back().ordinal.is_zero());
                for (std::size_t i = 0; i + 1 < t.steps.size(); ++i) {
                    REQUIRE(t.steps[i + 1].ordinal == predecessor(t.steps[i].ordinal, t.steps[i].value));
                    REQUIRE(t.steps[i + 1].value == apply_base(h, t.steps[i].value));
                    REQUIRE(t.steps[i + 1].ordinal < t.steps[i].ordinal);
                    REQUIRE(t.steps[i + 1].value > t.steps[i].value);
                }
                REQUIRE(Nat(t.length()) == cichon(h, a, n));
                REQUIRE(t.final_value() == hardy_eval(h, a, n));
            }
        }
    }
    CHECK(traced > 100);
}

TEST_CASE("Cichon functions", "[hierarchy][cichon]") {
    for (int k = 0; k < 6; ++k)
        for (int x = 0; x < 4; ++x) CHECK(cichon(kSucc, Ordinal::finite(k), x) == Nat(k));
    CHECK(cichon(kSucc, O("w"), 4) == Nat(5));
    CHECK(cichon(BaseFunction::exp2(), O("0"), 7) == Nat(0));
    for (const auto& a : enumerate_ordinals(2, 1, 2))
        for (int x = 1; x <= 3; ++x) {
            Nat value;
            try {
                value = hardy_eval(kSucc, a, x, EvalBudget(20'000, 1 << 16));
            } catch (const BudgetExceeded&) {
                continue;
            }
            CHECK(value == cichon(kSucc, a, x) + Nat(x));
        }
}

TEST_CASE("slow-growing functions", "[hierarchy][slow]") {
    CHECK(slow_growing(O("w"), 7) == Nat(8));
    CHECK(slow_growing(O("w^w"), 2) == Nat(27));
    for (int x = 0; x < 4; ++x) CHECK(slow_growing(O("0"), x) == Nat(0));
    CHECK_THROWS_AS(slow_growing(O("w^(w^(w^w))"), 9), BudgetExceeded);

    for (const auto& a : enumerate_ordinals(2, 2, 2)) {
        for (std::uint64_t x = 0; x <= 3; ++x) {
            REQUIRE(slow_growing(a, x) == testing::substitute(a, x));
            Meter m(EvalBudget(20'000, 1 << 16));
            Nat rec;
            try {
                rec = slow_growing_recursive(a, x, m);
            } catch (const BudgetExceeded&) {
                continue;
            }
            REQUIRE(rec == slow_growing(a, x));
        }
    }
}

TEST_CASE("Ackermann hierarchy and tower", "[hierarchy][ackermann]") {
    CHECK(ackermann(O("1"), 5) == Nat(10));
    CHECK(ackermann(O("2"), 6) == Nat(64));
    CHECK(ackermann(O("3"), 3) == Nat(16));
    CHECK(ackermann(O("w"), 3) == Nat(65536));
    for (std::uint64_t x = 0; x <= 4; ++x) CHECK(ackermann(O("3"), x) == tower(x, EvalBudget{}));
    for (const auto& a : enumerate_ordinals(2, 2, 2))
        if (!a.is_zero()) REQUIRE(ackermann(a, 0) <= Nat(1));
    CHECK_THROWS_AS(ackermann(O("0"), 3), IndexZero);

    CHECK(tower(0, EvalBudget{}) == Nat(1));
    CHECK(tower(3, EvalBudget{}) == Nat(16));
    CHECK(tower(4, EvalBudget{}) == Nat(65536));
    CHECK(tower(5, EvalBudget{}).bit_length() == 65537);
    CHECK_THROWS_AS(tower(6, EvalBudget{}), BudgetExceeded);
}

TEST_CASE("Hardy-fast-growing bridge", "[hierarchy][bridge]") {
    for (auto h : {kSucc, BaseFunction::affine(2, 1), BaseFunction::exp2()}) {
        for (const auto& a : enumerate_ordinals(2, 1, 2)) {
            for (int x = 0; x <= 3; ++x) {
                Nat once, twice;
                try {
                    once = fast_growing_rel(h, a, x);
                    twice = fast_growing_rel(h, a, once);
                } catch (const BudgetExceeded&) {
                    continue;
                }
                REQUIRE(hardy_eval(h, Ordinal::omega_power(a), x) == once);
                REQUIRE(hardy_eval(h, Ordinal::omega_power(a, 2), x) == twice);
            }
        }
    }
}

TEST_CASE("evaluation is deterministic", "[hierarchy]") {
    Meter m1, m2;
    CHECK(hardy_eval(kSucc, O("w^2+w*2"), 2, m1) == hardy_eval(kSucc, O("w^2+w*2"), 2, m2));
    CHECK(m1.steps_used() == m2.steps_used());
}
