#include "support.hpp"

#include "subrec/laws.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace subrec;
using subrec::testing::O;

namespace {

const BaseFunction kSucc = BaseFunction::successor();
const BaseFunction kAffine = BaseFunction::affine(2, 1);
const BaseFunction kExp2 = BaseFunction::exp2();
const BaseFunction kIdentity = BaseFunction::affine(1, 0);

SuiteConfig small_config() { return SuiteConfig::uniform({2, 1, 2}, {0, 1, 2}); }

std::set<std::string> laws_in(const std::vector<LawReport>& reports) {
    std::set<std::string> out;
    for (const auto& r : reports) out.insert(r.law);
    return out;
}

const LawReport* first_fail(const std::vector<LawReport>& reports, std::string_view law) {
    for (const auto& r : reports)
        if (r.law == law && r.verdict == Verdict::Fail) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("law table", "[laws]") {
    std::set<std::string_view> ids;
    for (const auto& l : kLaws) {
        CHECK_FALSE(l.citation.empty());
        CHECK(ids.insert(l.id).second);
        CHECK(law_citation(l.id) == l.citation);
    }
    CHECK_THROWS_AS(law_citation("no.such-law"), std::invalid_argument);
}

TEST_CASE("report serialization", "[laws]") {
    LawReport r{"ack.zero", "x=2", Verdict::Pass, "", "A_a(0) = 1"};
    CHECK(serialize(r) == "ack.zero | PASS | x=2 | - | A_a(0) = 1");
    r.verdict = Verdict::Fail;
    r.witness = "A=3";
    CHECK(serialize(r) == "ack.zero | FAIL | x=2 | A=3 | A_a(0) = 1");
    r.verdict = Verdict::SkippedBudget;
    CHECK(serialize(r).find("| SKIP |") != std::string::npos);
}

TEST_CASE("base_le", "[laws]") {
    const std::vector<BaseFunction> bases{kSucc, kAffine, kExp2, kIdentity, BaseFunction::affine(3, 0),
                                          BaseFunction::affine(1, 5), BaseFunction::affine(0, 7)};
    for (const auto& g : bases)
        for (const auto& h : bases) {
            bool sampled = true;
            for (std::uint64_t x = 0; x <= 64; ++x)
                if (apply_base(g, x) > apply_base(h, x)) sampled = false;
            INFO(g.name() << " vs " << h.name());
            CHECK(base_le(g, h) == sampled);
        }
}

TEST_CASE("ackermann sandwich", "[laws][named]") {
    auto r = check_ack_sandwich(O("1"), 3);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.law == "ack.sandwich");
    // 6 <= 7 <= 46
    CHECK(ackermann(O("1"), 3) == Nat(6));
    CHECK(fast_growing(O("1"), 3) == Nat(7));
    CHECK(ackermann(O("1"), 23) == Nat(46));

    CHECK(check_ack_sandwich(O("2"), 0).verdict == Verdict::Pass);
    CHECK(ackermann(O("2"), 5) == Nat(32));

    CHECK(check_ack_sandwich(O("w"), 2).verdict == Verdict::SkippedBudget);
    CHECK_THROWS_AS(check_ack_sandwich(O("0"), 1), IndexZero);
}

TEST_CASE("hardy composition", "[laws][named]") {
    auto strict = check_hardy_compose(kSucc, O("1"), O("w"), 3);
    CHECK(strict.verdict == Verdict::Pass);
    CHECK(hardy_eval(kSucc, O("w+1"), 3) == Nat(9));
    CHECK(hardy_eval(kSucc, O("1"), hardy_eval(kSucc, O("w"), 3)) == Nat(8));

    auto exact = check_hardy_compose(kSucc, O("w"), O("1"), 3);
    CHECK(exact.verdict == Verdict::Pass);
    CHECK(exact.instance == "h=succ a=w b=1 x=3");

    for (const auto& h : {kSucc, kAffine, kExp2})
        for (std::uint64_t x = 0; x < 4; ++x) CHECK(check_hardy_compose(h, O("0"), O("0"), x).verdict == Verdict::Pass);

    CHECK_THROWS_AS(check_hardy_compose(BaseFunction::affine(0, 1), O("1"), O("1"), 1), InvalidBase);
}

TEST_CASE("relativized bound", "[laws][named]") {
    auto a = check_relativized_bound(kSucc, O("2"), O("0"), 0, {0, 1, 2, 3});
    CHECK(a.verdict == Verdict::Pass);
    CHECK(a.instance.find("g=0") != std::string::npos);

    auto b = check_relativized_bound(kAffine, O("1"), O("1"), 0, {0, 1, 2, 3});
    CHECK(b.verdict == Verdict::Pass);
    CHECK(b.instance.find("g=0") != std::string::npos);

    CHECK(check_relativized_bound(kExp2, O("0"), O("2"), 0, {0, 1, 2, 3, 4}).verdict == Verdict::Pass);

    // the tail of b below the leading exponent of a
    auto c = check_relativized_bound(kSucc, O("w"), O("w+2"), 0, {0});
    CHECK(c.instance.find("g=2") != std::string::npos);
    CHECK(c.verdict == Verdict::Pass);

    // 2^2 > F_0(2) = 3
    CHECK_THROWS_AS(check_relativized_bound(kExp2, O("1"), O("0"), 0, {1, 2}), PreconditionUnmet);
    // below x0 the precondition is not sampled
    CHECK_NOTHROW(check_relativized_bound(kExp2, O("1"), O("0"), 3, {2}));
}

TEST_CASE("fundamental sequence variant", "[laws][named]") {
    auto a = check_fundseq_variant(kSucc, O("2"), 2);
    CHECK(a.verdict == Verdict::Pass);
    CHECK(a.instance.find("branch=expansive") != std::string::npos);
    CHECK(fast_growing_fs(kSucc, O("2"), 2) == Nat(23));
    CHECK(fast_growing_rel(kSucc, O("2"), 3) == Nat(63));

    auto b = check_fundseq_variant(kIdentity, O("1"), 3);
    CHECK(b.verdict == Verdict::Pass);
    CHECK(b.instance.find("branch=bounded") != std::string::npos);
    CHECK(fast_growing_fs(kIdentity, O("1"), 3) == Nat(6));
    CHECK(fast_growing(O("1"), 3) == Nat(7));

    for (const auto& s : {kSucc, kAffine, kExp2})
        for (std::uint64_t x = 0; x < 4; ++x) CHECK(check_fundseq_variant(s, O("0"), x).verdict == Verdict::Pass);

    CHECK_THROWS_AS(check_fundseq_variant(BaseFunction::affine(3, 0), O("w"), 1), PreconditionUnmet);
    CHECK_THROWS_AS(check_fundseq_variant(kIdentity, O("w"), 0), PreconditionUnmet);
}

TEST_CASE("empty argument set gives an empty report", "[laws][suite]") {
    auto cfg = small_config();
    cfg.xs.clear();
    auto res = run_suite(cfg);
    CHECK(res.reports.empty());
    CHECK(res.summary.total() == 0);
}

TEST_CASE("small suite has no failures and covers every law", "[laws][suite]") {
    auto res = run_suite(SuiteConfig::uniform({1, 1, 1}, {0, 1}));
    CHECK(res.summary.fail == 0);
    CHECK(res.summary.total() == res.reports.size());

    auto full = run_suite(small_config());
    for (const auto& r : full.reports)
        if (r.verdict == Verdict::Fail) FAIL_CHECK(serialize(r));
    auto seen = laws_in(full.reports);
    for (const auto& l : kLaws) {
        INFO(l.id);
        CHECK(seen.count(std::string(l.id)) == 1);
    }
    for (const auto& r : full.reports) {
        CHECK(r.citation == law_citation(r.law));
        if (r.verdict != Verdict::Fail) CHECK(r.witness.empty());
    }
    std::size_t pass = 0;
    for (const auto& [law, counts] : full.summary.per_law) pass += counts[0];
    CHECK(pass == full.summary.pass);
}

TEST_CASE("suite is deterministic", "[laws][suite]") {
    auto a = run_suite(small_config());
    auto b = run_suite(small_config());
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) CHECK(serialize(a.reports[i]) == serialize(b.reports[i]));
    CHECK(a.summary.skipped == b.summary.skipped);
}

TEST_CASE("law filter", "[laws][suite]") {
    auto cfg = small_config();
    cfg.only = {"slow.pred", "ack.zero"};
    auto res = run_suite(cfg);
    CHECK_FALSE(res.reports.empty());
    CHECK(laws_in(res.reports) == std::set<std::string>{"slow.pred", "ack.zero"});
}

TEST_CASE("raising the budget never turns a pass into a failure", "[laws][suite]") {
    auto tight = small_config();
    tight.budget = EvalBudget(300, 64);
    auto loose = small_config();
    auto t = run_suite(tight);
    auto l = run_suite(loose);
    REQUIRE(t.reports.size() == l.reports.size());
    CHECK(t.summary.skipped > l.summary.skipped);
    for (std::size_t i = 0; i < t.reports.size(); ++i) {
        const auto& a = t.reports[i];
        const auto& b = l.reports[i];
        REQUIRE(a.law == b.law);
        REQUIRE(a.instance == b.instance);
        if (a.verdict == Verdict::Pass) CHECK(b.verdict == Verdict::Pass);
        CHECK(b.verdict != Verdict::Fail);
    }
}

TEST_CASE("corrupted evaluators are caught", "[laws][suite]") {
    auto cfg = small_config();

    SECTION("hardy off by one") {
        auto ev = Evaluators::standard();
        ev.hardy = [](const BaseFunction& h, const Ordinal& a, const Nat& x, Meter& m) {
            return hardy_eval(h, a, x, m) + 1;
        };
        auto res = run_suite(cfg, ev);
        CHECK(res.summary.fail > 0);
        const LawReport* f = first_fail(res.reports, "hardy.dual");
        REQUIRE(f != nullptr);
        CHECK_FALSE(f->witness.empty());
        CHECK(serialize(*f).find("| FAIL |") != std::string::npos);
    }

    SECTION("slow-growing substitutes x instead of x+1") {
        auto ev = Evaluators::standard();
        ev.slow_growing = [](const Ordinal& a, const Nat& x, Meter& m) {
            return x.is_zero() ? slow_growing(a, x, m) : slow_growing(a, x - 1, m);
        };
        auto res = run_suite(cfg, ev);
        CHECK(first_fail(res.reports, "slow.dual") != nullptr);
        CHECK(first_fail(res.reports, "slow.pred") != nullptr);
    }

    SECTION("relativized fast-growing drops one") {
        auto ev = Evaluators::standard();
        ev.fast_growing_rel = [](const BaseFunction& h, const Ordinal& a, const Nat& x, Meter& m) {
            Nat v = fast_growing_rel(h, a, x, m);
            return a == Ordinal::finite(1) ? v - 1 : v;
        };
        auto res = run_suite(cfg, ev);
        CHECK(first_fail(res.reports, "hardy.bridge") != nullptr);
    }

    SECTION("fast-growing is constant") {
        auto ev = Evaluators::standard();
        ev.fast_growing = [](const Ordinal&, const Nat&, Meter&) { return Nat(5); };
        auto res = run_suite(cfg, ev);
        CHECK(first_fail(res.reports, "fgh.monotone") != nullptr);
    }

    SECTION("ackermann uses the wrong base clause") {
        auto ev = Evaluators::standard();
        ev.ackermann = [](const Ordinal& a, const Nat& x, Meter& m) {
            return x.is_zero() ? Nat(2) : ackermann(a, x, m);
        };
        auto res = run_suite(cfg, ev);
        const LawReport* f = first_fail(res.reports, "ack.zero");
        REQUIRE(f != nullptr);
        CHECK(f->witness.find('2') != std::string::npos);
    }
}
