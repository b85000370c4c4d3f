#pragma once

// Brute-force law harness: instantiates the inequalities and identities of
// the ordinal and hierarchy layers over enumerated small ordinals and
// reports one verdict per instance.

#include "subrec/base_function.hpp"
#include "subrec/budget.hpp"
#include "subrec/errors.hpp"
#include "subrec/hierarchy.hpp"
#include "subrec/nat.hpp"
#include "subrec/ordinal.hpp"
#include "subrec/ordinal_text.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace subrec {

enum class Verdict { Pass, SkippedBudget, Fail };

inline std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::SkippedBudget: return "SKIP";
        case Verdict::Fail: return "FAIL";
    }
    return "?";
}

struct LawReport {
    std::string law;
    std::string instance;
    Verdict verdict = Verdict::Pass;
    std::string witness;
    std::string citation;
};

/// law | verdict | instance | witness | citation
inline std::string serialize(const LawReport& r) {
    std::string out = r.law;
    out += " | ";
    out += verdict_name(r.verdict);
    out += " | ";
    out += r.instance;
    out += " | ";
    out += r.witness.empty() ? "-" : r.witness;
    out += " | ";
    out += r.citation;
    return out;
}

struct LawInfo {
    std::string_view id;
    std::string_view citation;
};

inline constexpr std::array<LawInfo, 34> kLaws{{
    {"ord.canonical", "parse(render(a)) = a"},
    {"ord.compare-antisym", "compare(a,b) = -compare(b,a)"},
    {"ord.compare-trans", "a <= b and b <= c imply a <= c"},
    {"ord.add-assoc", "(a+b)+c = a+(b+c)"},
    {"ord.nsum-assoc", "(a#b)#c = a#(b#c)"},
    {"ord.nsum-comm", "a#b = b#a"},
    {"ord.add-le-nsum", "a+b <= a#b"},
    {"ord.fundseq", "0 < l(x) < l(y) < l for x < y"},
    {"ord.pointwise-refine", "b < a and x >= N(b) imply b <=_x a; b <=_x a implies b <= a"},
    {"ord.pointwise-growth", "l(x) <=_y l(y) for x < y"},
    {"ord.pred-chain", "P_x chains strictly decrease to 0"},
    {"fgh.monotone", "F_a(x) < F_a(y) for x < y and F_a(x) > x"},
    {"hardy.expansive", "x <= h^a(x)"},
    {"hardy.base-monotone", "g <= h implies g^a(x) <= h^a(x)"},
    {"hardy.arg-monotone", "x <= y implies h^a(x) <= h^a(y)"},
    {"hardy.bridge", "h^(w^a*c) = F^c_(h,a)"},
    {"hardy.compose", "h^a(h^b(x)) <= h^(a#b)(x), equal when a+b = a#b"},
    {"hardy.dual", "predecessor form h^(P_x(a))(h(x)) agrees with the recursive definition"},
    {"cichon.bridge", "h^a(x) = h^(h_a(x))(x)"},
    {"cichon.lower", "h^a(x) >= h_a(x) + x"},
    {"trace.length", "complete trace length = h_a(n), final value = h^a(n)"},
    {"trace.term-G", "|a_i| <= G_a(n_l) along the computation of h^a(n)"},
    {"slow.dual", "substitution x+1 for w agrees with the recursive definition"},
    {"slow.omega-power", "G_(w^a)(x) = (x+1)^(G_a(x))"},
    {"slow.monotone", "G_a(x+1) > G_a(x) for a >= w, G_a(x+1) = G_a(x) for finite a"},
    {"slow.pred", "G_a(x) = 1 + G_(P_x(a))(x) for a > 0"},
    {"slow.additive", "G_(a+b)(x) = G_a(x) + G_b(x) when a+b = a#b"},
    {"pointwise.monotone", "b <=_x a implies H^b(x) <= H^a(x), G_b(x) <= G_a(x), A_b(x) <= A_a(x)"},
    {"ack.zero", "A_a(0) <= 1"},
    {"ack.sandwich", "A_a(x) <= F_a(x) <= A_a(6x+5)"},
    {"norm.G", "|a| <= G_a(x) for x > 0"},
    {"rel.bound", "F_(h,a)(x) <= F_(b+a)(F_g(x)) when h <= F_b"},
    {"fs.variant", "F_(a,s) <= F_(s,a) o s for expansive s, F_(a,s) <= F_a when s(x) <= x+1"},
    {"det.repeat", "identical inputs and budgets give identical outputs"},
}};

inline std::string_view law_citation(std::string_view id) {
    for (const auto& l : kLaws)
        if (l.id == id) return l.citation;
    throw std::invalid_argument("unknown law id: " + std::string(id));
}

/// The evaluators a suite run exercises. Replaceable so the harness itself
/// can be tested against deliberately broken implementations.
struct Evaluators {
    using Unary = std::function<Nat(const Ordinal&, const Nat&, Meter&)>;
    using Based = std::function<Nat(const BaseFunction&, const Ordinal&, const Nat&, Meter&)>;

    Unary fast_growing;
    Based fast_growing_rel;
    Based fast_growing_fs;
    Based hardy;
    Based hardy_recursive;
    Based cichon;
    Unary slow_growing;
    Unary slow_growing_recursive;
    Unary ackermann;

    static Evaluators standard() {
        Evaluators e;
        e.fast_growing = [](const Ordinal& a, const Nat& x, Meter& m) { return subrec::fast_growing(a, x, m); };
        e.fast_growing_rel = [](const BaseFunction& h, const Ordinal& a, const Nat& x, Meter& m) {
            return subrec::fast_growing_rel(h, a, x, m);
        };
        e.fast_growing_fs = [](const BaseFunction& s, const Ordinal& a, const Nat& x, Meter& m) {
            return subrec::fast_growing_fs(s, a, x, m);
        };
        e.hardy = [](const BaseFunction& h, const Ordinal& a, const Nat& x, Meter& m) {
            return subrec::hardy_eval(h, a, x, m);
        };
        e.hardy_recursive = [](const BaseFunction& h, const Ordinal& a, const Nat& x, Meter& m) {
            return subrec::hardy_eval_recursive(h, a, x, m);
        };
        e.cichon = [](const BaseFunction& h, const Ordinal& a, const Nat& x, Meter& m) {
            return subrec::cichon(h, a, x, m);
        };
        e.slow_growing = [](const Ordinal& a, const Nat& x, Meter& m) { return subrec::slow_growing(a, x, m); };
        e.slow_growing_recursive = [](const Ordinal& a, const Nat& x, Meter& m) {
            return subrec::slow_growing_recursive(a, x, m);
        };
        e.ackermann = [](const Ordinal& a, const Nat& x, Meter& m) { return subrec::ackermann(a, x, m); };
        return e;
    }
};

/// g(x) <= h(x) for every x, decided in closed form for the descriptor set.
inline bool base_le(const BaseFunction& g, const BaseFunction& h) {
    using K = BaseFunction::Kind;
    auto bounded_by_exp2 = [](const Nat& a, const Nat& b) {
        // a*x + b <= 2^x fails for some x only below 2*(bit_length(a+b)) + 4.
        const std::uint64_t limit = 2 * (a + b).bit_length() + 4;
        for (std::uint64_t x = 0; x <= limit; ++x)
            if (a * Nat(x) + b > (Nat(1) << x)) return false;
        return true;
    };
    const bool g_affine = g.kind() == K::Successor || g.kind() == K::Affine;
    const bool h_affine = h.kind() == K::Successor || h.kind() == K::Affine;
    if (g_affine && h_affine) return g.slope() <= h.slope() && g.offset() <= h.offset();
    if (g_affine) return bounded_by_exp2(g.slope(), g.offset());
    return h.kind() == K::Exp2;
}

namespace detail {

inline int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

inline std::string describe(const Nat& n) {
    if (n.bit_length() > 128) return "<" + std::to_string(n.bit_length()) + " bits>";
    return n.str();
}

}  // namespace detail

/// Shared state for a batch of checks: evaluators, the per-evaluation budget
/// and a cache of results, budget failures included.
class LawContext {
public:
    explicit LawContext(EvalBudget budget = {}, Evaluators ev = Evaluators::standard())
        : budget_(budget), ev_(std::move(ev)) {}

    const EvalBudget& budget() const { return budget_; }

    std::optional<Nat> F(const Ordinal& a, const Nat& x) {
        return cached(Kind::F, "", a, x, [&](Meter& m) { return ev_.fast_growing(a, x, m); });
    }
    std::optional<Nat> Frel(const BaseFunction& h, const Ordinal& a, const Nat& x) {
        return cached(Kind::Frel, h.name(), a, x, [&](Meter& m) { return ev_.fast_growing_rel(h, a, x, m); });
    }
    std::optional<Nat> Ffs(const BaseFunction& s, const Ordinal& a, const Nat& x) {
        return cached(Kind::Ffs, s.name(), a, x, [&](Meter& m) { return ev_.fast_growing_fs(s, a, x, m); });
    }
    std::optional<Nat> H(const BaseFunction& h, const Ordinal& a, const Nat& x) {
        return cached(Kind::Hardy, h.name(), a, x, [&](Meter& m) { return ev_.hardy(h, a, x, m); });
    }
    std::optional<Nat> Hrec(const BaseFunction& h, const Ordinal& a, const Nat& x) {
        return cached(Kind::HardyRec, h.name(), a, x, [&](Meter& m) { return ev_.hardy_recursive(h, a, x, m); });
    }
    std::optional<Nat> C(const BaseFunction& h, const Ordinal& a, const Nat& x) {
        return cached(Kind::Cichon, h.name(), a, x, [&](Meter& m) { return ev_.cichon(h, a, x, m); });
    }
    std::optional<Nat> G(const Ordinal& a, const Nat& x) {
        return cached(Kind::Slow, "", a, x, [&](Meter& m) { return ev_.slow_growing(a, x, m); });
    }
    std::optional<Nat> Grec(const Ordinal& a, const Nat& x) {
        return cached(Kind::SlowRec, "", a, x, [&](Meter& m) { return ev_.slow_growing_recursive(a, x, m); });
    }
    std::optional<Nat> A(const Ordinal& a, const Nat& x) {
        return cached(Kind::Ack, "", a, x, [&](Meter& m) { return ev_.ackermann(a, x, m); });
    }
    /// h iterated k times on x.
    std::optional<Nat> iterate(const BaseFunction& h, const Nat& k, const Nat& x) {
        try {
            Meter m(budget_);
            return iterate_base(h, k, x, m);
        } catch (const BudgetExceeded&) {
            return std::nullopt;
        }
    }

    /// Runs `f` on a fresh meter, bypassing the cache.
    template <class Fn>
    auto fresh(Fn&& f) -> std::optional<decltype(f(std::declval<Meter&>()))> {
        try {
            Meter m(budget_);
            return f(m);
        } catch (const BudgetExceeded&) {
            return std::nullopt;
        }
    }

    /// The unmemoised evaluators.
    const Evaluators& evaluators() const { return ev_; }

private:
    enum class Kind { F, Frel, Ffs, Hardy, HardyRec, Cichon, Slow, SlowRec, Ack };
    using Key = std::tuple<Kind, std::string, Ordinal, Nat>;

    template <class Fn>
    std::optional<Nat> cached(Kind k, std::string base, const Ordinal& a, const Nat& x, Fn&& f) {
        Key key{k, std::move(base), a, x};
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        std::optional<Nat> v;
        try {
            Meter m(budget_);
            v = f(m);
        } catch (const BudgetExceeded&) {
        }
        cache_.emplace(std::move(key), v);
        return v;
    }

    EvalBudget budget_;
    Evaluators ev_;
    std::map<Key, std::optional<Nat>> cache_;
};

namespace detail {

class InstanceText {
public:
    InstanceText& add(std::string_view key, const Ordinal& a) { return add(key, render_ordinal(a)); }
    InstanceText& add(std::string_view key, const Nat& n) { return add(key, n.str()); }
    InstanceText& add(std::string_view key, const BaseFunction& h) { return add(key, h.name()); }
    InstanceText& add(std::string_view key, std::string_view v) {
        if (!text_.empty()) text_ += ' ';
        text_ += key;
        text_ += '=';
        text_ += v;
        return *this;
    }
    std::string str() const { return text_; }

private:
    std::string text_;
};

inline LawReport report(std::string_view law, std::string instance) {
    return LawReport{std::string(law), std::move(instance), Verdict::Pass, {}, std::string(law_citation(law))};
}

inline LawReport skipped(LawReport r) {
    r.verdict = Verdict::SkippedBudget;
    return r;
}

inline LawReport judged(LawReport r, bool ok, std::string witness) {
    if (!ok) {
        r.verdict = Verdict::Fail;
        r.witness = std::move(witness);
    }
    return r;
}

/// Tail of b whose exponents lie below the leading exponent of a; 0 when a = 0.
inline Ordinal relativized_gamma(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero()) return {};
    const Ordinal& lead = a.monomials().front().exponent;
    auto m = b.monomials();
    auto it = std::find_if(m.begin(), m.end(), [&](const Monomial& mono) { return mono.exponent < lead; });
    return Ordinal::from_monomials_unchecked({it, m.end()});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The four named checks

inline LawReport check_ack_sandwich(LawContext& ctx, const Ordinal& a, const Nat& x) {
    if (a.is_zero()) throw IndexZero();
    auto r = detail::report("ack.sandwich", detail::InstanceText().add("a", a).add("x", x).str());
    auto f = ctx.F(a, x);
    if (!f) return detail::skipped(r);
    auto lo = ctx.A(a, x);
    if (!lo) return detail::skipped(r);
    if (*lo > *f)
        return detail::judged(r, false, "A=" + detail::describe(*lo) + " F=" + detail::describe(*f));
    // A_a is monotone, so reaching F at any y <= 6x+5 settles the upper half
    const Nat top = x * 6 + 5;
    for (Nat y = x; y <= top; ++y) {
        auto hi = ctx.A(a, y);
        if (!hi) return detail::skipped(r);
        if (*f <= *hi || y == top)
            return detail::judged(r, *f <= *hi,
                                  "A=" + detail::describe(*lo) + " F=" + detail::describe(*f) + " A(" + y.str() +
                                      ")=" + detail::describe(*hi));
    }
    return detail::skipped(r);
}

inline LawReport check_ack_sandwich(const Ordinal& a, const Nat& x, const EvalBudget& budget = {}) {
    LawContext ctx(budget);
    return check_ack_sandwich(ctx, a, x);
}

inline LawReport check_hardy_compose(LawContext& ctx, const BaseFunction& h, const Ordinal& a, const Ordinal& b,
                                     const Nat& x) {
    detail::require_increasing(h);
    auto r = detail::report("hardy.compose",
                            detail::InstanceText().add("h", h).add("a", a).add("b", b).add("x", x).str());
    const Ordinal sum = natural_sum(a, b);
    const bool exact = add(a, b) == sum;
    auto whole = ctx.H(h, sum, x);
    if (!whole) return detail::skipped(r);
    auto inner = ctx.H(h, b, x);
    if (!inner) return detail::skipped(r);
    auto outer = ctx.H(h, a, *inner);
    if (!outer) return detail::skipped(r);
    const bool ok = *whole >= *outer && (!exact || *whole == *outer);
    return detail::judged(r, ok,
                          "h^(a#b)=" + detail::describe(*whole) + " h^a(h^b)=" + detail::describe(*outer) +
                              (exact ? " exact" : ""));
}

inline LawReport check_hardy_compose(const BaseFunction& h, const Ordinal& a, const Ordinal& b, const Nat& x,
                                     const EvalBudget& budget = {}) {
    LawContext ctx(budget);
    return check_hardy_compose(ctx, h, a, b, x);
}

/// F_(h,a)(x) <= F_(b+a)(F_g(x)) on every x in xs, where g is the tail of b
/// below the leading exponent of a. Throws PreconditionUnmet when
/// h(x) > F_b(x) at a sampled x >= x0.
inline LawReport check_relativized_bound(LawContext& ctx, const BaseFunction& h, const Ordinal& a, const Ordinal& b,
                                         const Nat& x0, const std::vector<Nat>& xs) {
    detail::require_increasing(h);
    std::string points;
    for (const Nat& x : xs) points += (points.empty() ? "" : ",") + x.str();
    const Ordinal gamma = detail::relativized_gamma(a, b);
    const Ordinal target = add(b, a);
    auto r = detail::report("rel.bound", detail::InstanceText()
                                             .add("h", h)
                                             .add("a", a)
                                             .add("b", b)
                                             .add("g", gamma)
                                             .add("x0", x0)
                                             .add("xs", "{" + points + "}")
                                             .str());
    bool skip = false;
    for (const Nat& x : xs) {
        if (x < x0) continue;
        auto fb = ctx.F(b, x);
        if (!fb) {
            skip = true;
            continue;
        }
        if (apply_base(h, x) > *fb)
            throw PreconditionUnmet(h.name() + " exceeds F_" + render_ordinal(b) + " at " + x.str());
    }
    if (!target.is_zero() && !(gamma < target))
        return detail::judged(r, false, "g not below b+a");
    for (const Nat& x : xs) {
        auto lhs = ctx.Frel(h, a, x);
        if (!lhs) {
            skip = true;
            continue;
        }
        // F_g(x) > x, and F_(b+a) is monotone, so any F_(b+a)(y) with
        // y <= F_g(x) is a lower bound for the right-hand side
        auto inner = ctx.F(gamma, x);
        auto rhs = inner ? ctx.F(target, *inner) : std::nullopt;
        if (!rhs) {
            const Nat top = inner ? *inner : x + 1;
            bool bounded = false;
            for (Nat y = 0; y <= top; ++y) {
                auto low = ctx.F(target, y);
                if (!low) break;
                if (*low >= *lhs) {
                    bounded = true;
                    break;
                }
            }
            if (!bounded) skip = true;
            continue;
        }
        if (*lhs > *rhs)
            return detail::judged(r, false,
                                  "x=" + x.str() + " F_(h,a)=" + detail::describe(*lhs) +
                                      " F_(b+a)(F_g)=" + detail::describe(*rhs));
    }
    return skip ? detail::skipped(r) : r;
}

inline LawReport check_relativized_bound(const BaseFunction& h, const Ordinal& a, const Ordinal& b, const Nat& x0,
                                         const std::vector<Nat>& xs, const EvalBudget& budget = {}) {
    LawContext ctx(budget);
    return check_relativized_bound(ctx, h, a, b, x0, xs);
}

/// For strictly expansive s: F_(a,s)(x) <= F_(s,a)(s(x)). Otherwise, where
/// s(x) <= x+1: F_(a,s)(x) <= F_a(x). Throws PreconditionUnmet when neither
/// applies or when s(x) = 0.
inline LawReport check_fundseq_variant(LawContext& ctx, const BaseFunction& s, const Ordinal& a, const Nat& x) {
    const bool expansive = s.strictly_expansive();
    if (apply_base(s, x).is_zero()) throw PreconditionUnmet(s.name() + " is 0 at " + x.str());
    if (!expansive && apply_base(s, x) > x + 1)
        throw PreconditionUnmet(s.name() + " is neither strictly expansive nor bounded by x+1 at " + x.str());
    auto r = detail::report("fs.variant", detail::InstanceText()
                                              .add("s", s)
                                              .add("a", a)
                                              .add("x", x)
                                              .add("branch", expansive ? "expansive" : "bounded")
                                              .str());
    auto lhs = ctx.Ffs(s, a, x);
    if (!lhs) return detail::skipped(r);
    const Nat top = expansive ? apply_base(s, x) : x;
    auto bound = [&](const Nat& y) { return expansive ? ctx.Frel(s, a, y) : ctx.F(a, y); };
    std::optional<Nat> rhs = bound(top);
    if (!rhs) {
        // the bound is monotone in its argument
        for (Nat y = 0; y < top; ++y) {
            auto low = bound(y);
            if (!low) break;
            if (*low >= *lhs)
                return detail::judged(r, true, "F_(a,s)=" + detail::describe(*lhs) + " bound at " + y.str() + "=" +
                                                   detail::describe(*low));
        }
        return detail::skipped(r);
    }
    return detail::judged(r, *lhs <= *rhs, "F_(a,s)=" + detail::describe(*lhs) + " bound=" + detail::describe(*rhs));
}

inline LawReport check_fundseq_variant(const BaseFunction& s, const Ordinal& a, const Nat& x,
                                       const EvalBudget& budget = {}) {
    LawContext ctx(budget);
    return check_fundseq_variant(ctx, s, a, x);
}

// ---------------------------------------------------------------------------
// Suite

struct CorpusBounds {
    std::uint64_t max_norm = 1;
    std::size_t max_height = 1;
    std::size_t max_summands = 1;

    std::vector<Ordinal> enumerate() const { return enumerate_ordinals(max_norm, max_height, max_summands); }
};

struct SuiteConfig {
    /// Terms for the purely syntactic laws.
    CorpusBounds terms{3, 2, 2};
    /// Terms for laws that evaluate hierarchies.
    CorpusBounds evaluation{3, 1, 3};
    /// Extra single-monomial terms of greater height for evaluation laws.
    CorpusBounds evaluation_tall{3, 2, 1};
    /// Terms paired with each other.
    CorpusBounds pairs{3, 1, 2};
    /// Terms combined in triples.
    CorpusBounds triples{2, 1, 2};
    std::vector<Nat> xs{0, 1, 2, 3};
    std::vector<BaseFunction> bases{BaseFunction::successor(), BaseFunction::affine(2, 1), BaseFunction::exp2()};
    EvalBudget budget{};
    /// Restricts the run to these law ids when non-empty.
    std::set<std::string> only;

    /// A small configuration with every corpus cut to the given bounds.
    static SuiteConfig uniform(const CorpusBounds& b, std::vector<Nat> xs) {
        SuiteConfig c;
        c.terms = c.evaluation = c.evaluation_tall = c.pairs = c.triples = b;
        c.xs = std::move(xs);
        return c;
    }
};

struct SuiteSummary {
    std::size_t pass = 0;
    std::size_t skipped = 0;
    std::size_t fail = 0;
    std::map<std::string, std::array<std::size_t, 3>> per_law;

    std::size_t total() const { return pass + skipped + fail; }
};

struct SuiteResult {
    std::vector<LawReport> reports;
    SuiteSummary summary;
};

inline SuiteSummary summarize(const std::vector<LawReport>& reports) {
    SuiteSummary s;
    for (const auto& r : reports) {
        auto& counts = s.per_law[r.law];
        switch (r.verdict) {
            case Verdict::Pass: ++s.pass; ++counts[0]; break;
            case Verdict::SkippedBudget: ++s.skipped; ++counts[1]; break;
            case Verdict::Fail: ++s.fail; ++counts[2]; break;
        }
    }
    return s;
}

namespace detail {

/// Smallest finite b with h(x) <= F_b(x) for all x.
inline Nat dominating_level(const BaseFunction& h) {
    if (base_le(h, BaseFunction::successor())) return 0;
    if (base_le(h, BaseFunction::affine(2, 1))) return 1;
    return 2;
}

class SuiteRunner {
public:
    SuiteRunner(const SuiteConfig& cfg, const Evaluators& ev) : cfg_(cfg), ctx_(cfg.budget, ev) {}

    std::vector<LawReport> run() {
        if (cfg_.xs.empty()) return {};
        xs_ = cfg_.xs;
        std::sort(xs_.begin(), xs_.end());
        xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
        terms_ = cfg_.terms.enumerate();
        auto eval = cfg_.evaluation.enumerate();
        auto tall = cfg_.evaluation_tall.enumerate();
        eval.insert(eval.end(), tall.begin(), tall.end());
        std::sort(eval.begin(), eval.end());
        eval.erase(std::unique(eval.begin(), eval.end()), eval.end());
        eval_ = std::move(eval);
        pairs_ = cfg_.pairs.enumerate();
        triples_ = cfg_.triples.enumerate();

        syntactic_laws();
        hierarchy_laws();
        pair_laws();
        named_checks();
        return std::move(out_);
    }

private:
    bool enabled(std::string_view law) const { return cfg_.only.empty() || cfg_.only.count(std::string(law)); }

    void emit(LawReport r) { out_.push_back(std::move(r)); }

    void syntactic_laws() {
        using detail::InstanceText;
        if (enabled("ord.canonical"))
            for (const auto& a : terms_) {
                auto r = report("ord.canonical", InstanceText().add("a", a).str());
                Ordinal back;
                std::string text = render_ordinal(a);
                try {
                    back = parse_ordinal(text);
                } catch (const ParseError& e) {
                    emit(judged(r, false, text + ": " + e.what()));
                    continue;
                }
                emit(judged(r, back == a, "reparsed=" + render_ordinal(back)));
            }

        std::vector<Nat> ys = xs_;
        ys.push_back(xs_.back() + 1);
        if (enabled("ord.fundseq"))
            for (const auto& l : terms_) {
                if (!is_limit(l)) continue;
                for (std::size_t i = 0; i < ys.size(); ++i)
                    for (std::size_t j = i + 1; j < ys.size(); ++j) {
                        auto r = report("ord.fundseq", InstanceText().add("l", l).add("x", ys[i]).add("y", ys[j]).str());
                        Ordinal lx = fund_seq(l, ys[i]), ly = fund_seq(l, ys[j]);
                        emit(judged(r, !lx.is_zero() && lx < ly && ly < l,
                                    "l(x)=" + render_ordinal(lx) + " l(y)=" + render_ordinal(ly)));
                    }
            }

        if (enabled("ord.pointwise-growth"))
            for (const auto& l : terms_) {
                if (!is_limit(l)) continue;
                for (std::size_t i = 0; i < xs_.size(); ++i)
                    for (std::size_t j = i + 1; j < xs_.size(); ++j) {
                        auto r = report("ord.pointwise-growth",
                                        InstanceText().add("l", l).add("x", xs_[i]).add("y", xs_[j]).str());
                        Ordinal lx = fund_seq(l, xs_[i]), ly = fund_seq(l, xs_[j]);
                        emit(judged(r, pointwise_le(lx, ly, xs_[j]),
                                    "l(x)=" + render_ordinal(lx) + " l(y)=" + render_ordinal(ly)));
                    }
            }

        if (enabled("ord.compare-trans"))
            for (const auto& a : triples_)
                for (const auto& b : triples_)
                    for (const auto& c : triples_) {
                        if (!(a <= b && b <= c)) continue;
                        auto r = report("ord.compare-trans", InstanceText().add("a", a).add("b", b).add("c", c).str());
                        emit(judged(r, compare(a, c) <= 0, "compare(a,c)=" + std::to_string(sign(compare(a, c)))));
                    }

        if (enabled("ord.add-assoc") || enabled("ord.nsum-assoc"))
            for (const auto& a : triples_)
                for (const auto& b : triples_)
                    for (const auto& c : triples_) {
                        std::string inst = InstanceText().add("a", a).add("b", b).add("c", c).str();
                        if (enabled("ord.add-assoc")) {
                            Ordinal l = add(add(a, b), c), rr = add(a, add(b, c));
                            emit(judged(report("ord.add-assoc", inst), l == rr,
                                        render_ordinal(l) + " vs " + render_ordinal(rr)));
                        }
                        if (enabled("ord.nsum-assoc")) {
                            Ordinal l = natural_sum(natural_sum(a, b), c), rr = natural_sum(a, natural_sum(b, c));
                            emit(judged(report("ord.nsum-assoc", inst), l == rr,
                                        render_ordinal(l) + " vs " + render_ordinal(rr)));
                        }
                    }
    }

    void pair_laws() {
        using detail::InstanceText;
        for (const auto& a : pairs_)
            for (const auto& b : pairs_) {
                std::string inst = InstanceText().add("a", a).add("b", b).str();
                if (enabled("ord.compare-antisym")) {
                    int ab = sign(compare(a, b)), ba = sign(compare(b, a));
                    emit(judged(report("ord.compare-antisym", inst), ab == -ba && (ab == 0) == (a == b),
                                "compare(a,b)=" + std::to_string(ab) + " compare(b,a)=" + std::to_string(ba)));
                }
                const Ordinal sum = add(a, b), nsum = natural_sum(a, b);
                if (enabled("ord.nsum-comm")) {
                    Ordinal other = natural_sum(b, a);
                    emit(judged(report("ord.nsum-comm", inst), nsum == other,
                                render_ordinal(nsum) + " vs " + render_ordinal(other)));
                }
                if (enabled("ord.add-le-nsum"))
                    emit(judged(report("ord.add-le-nsum", inst), sum <= nsum,
                                "a+b=" + render_ordinal(sum) + " a#b=" + render_ordinal(nsum)));

                for (const Nat& x : xs_) {
                    std::string xinst = InstanceText().add("b", b).add("a", a).add("x", x).str();
                    const bool below = pointwise_le(b, a, x);
                    if (enabled("ord.pointwise-refine")) {
                        bool ok = !below || b <= a;
                        if (b < a && x >= norm(b)) ok = ok && below;
                        emit(judged(report("ord.pointwise-refine", xinst), ok,
                                    std::string("pointwise_le=") + (below ? "true" : "false")));
                    }
                    if (below && enabled("pointwise.monotone")) pointwise_monotone(b, a, x, xinst);
                    if (enabled("slow.additive") && sum == nsum) {
                        auto r = report("slow.additive", InstanceText().add("a", a).add("b", b).add("x", x).str());
                        auto gs = ctx_.G(sum, x), ga = ctx_.G(a, x), gb = ctx_.G(b, x);
                        if (!gs || !ga || !gb) {
                            emit(skipped(r));
                        } else {
                            emit(judged(r, *gs == *ga + *gb,
                                        "G_(a+b)=" + describe(*gs) + " G_a+G_b=" + describe(*ga + *gb)));
                        }
                    }
                    if (enabled("hardy.compose"))
                        for (const auto& h : cfg_.bases) emit(check_hardy_compose(ctx_, h, a, b, x));
                }
            }
    }

    void pointwise_monotone(const Ordinal& b, const Ordinal& a, const Nat& x, const std::string& inst) {
        auto r = report("pointwise.monotone", inst);
        const BaseFunction succ = BaseFunction::successor();
        auto hb = ctx_.H(succ, b, x), ha = ctx_.H(succ, a, x);
        auto gb = ctx_.G(b, x), ga = ctx_.G(a, x);
        if (!hb || !ha || !gb || !ga) return emit(skipped(r));
        bool ok = *hb <= *ha && *gb <= *ga;
        std::string witness = "H^b=" + describe(*hb) + " H^a=" + describe(*ha) + " G_b=" + describe(*gb) +
                              " G_a=" + describe(*ga);
        if (!b.is_zero()) {
            auto ab = ctx_.A(b, x), aa = ctx_.A(a, x);
            if (!ab || !aa) return emit(skipped(r));
            ok = ok && *ab <= *aa;
            witness += " A_b=" + describe(*ab) + " A_a=" + describe(*aa);
        }
        emit(judged(r, ok, witness));
    }

    void hierarchy_laws() {
        using detail::InstanceText;
        for (const auto& a : eval_) {
            for (std::size_t i = 0; i < xs_.size(); ++i) {
                const Nat& x = xs_[i];
                std::string ax = InstanceText().add("a", a).add("x", x).str();

                if (enabled("ord.pred-chain") && !a.is_zero()) pred_chain(a, x, ax);

                if (enabled("fgh.monotone")) {
                    auto fx = ctx_.F(a, x);
                    if (!fx) {
                        emit(skipped(report("fgh.monotone", ax)));
                    } else {
                        emit(judged(report("fgh.monotone", ax), *fx > x, "F_a(x)=" + describe(*fx)));
                        for (std::size_t j = i + 1; j < xs_.size(); ++j) {
                            auto r = report("fgh.monotone",
                                            InstanceText().add("a", a).add("x", x).add("y", xs_[j]).str());
                            auto fy = ctx_.F(a, xs_[j]);
                            if (!fy) {
                                emit(skipped(r));
                                continue;
                            }
                            emit(judged(r, *fx < *fy, "F_a(x)=" + describe(*fx) + " F_a(y)=" + describe(*fy)));
                        }
                    }
                }

                for (const auto& h : cfg_.bases) hardy_laws(h, a, i);

                slow_laws(a, x, ax);

                if (enabled("ack.zero") && !a.is_zero() && i == 0) {
                    auto r = report("ack.zero", InstanceText().add("a", a).str());
                    auto v = ctx_.A(a, 0);
                    emit(v ? judged(r, *v <= Nat(1), "A_a(0)=" + describe(*v)) : skipped(r));
                }
                if (enabled("ack.sandwich") && !a.is_zero() && x <= Nat(2)) emit(check_ack_sandwich(ctx_, a, x));

                if (enabled("norm.G") && x > Nat(0)) {
                    auto r = report("norm.G", ax);
                    auto g = ctx_.G(a, x);
                    const Nat size = term_size(a);
                    emit(g ? judged(r, size <= *g, "|a|=" + size.str() + " G_a(x)=" + describe(*g))
                           : skipped(r));
                }

                if (enabled("det.repeat")) {
                    auto r = report("det.repeat", ax);
                    const auto& ev = ctx_.evaluators();
                    const BaseFunction succ = BaseFunction::successor();
                    auto once = ctx_.fresh([&](Meter& m) {
                        Nat v = ev.hardy(succ, a, x, m);
                        return std::pair(v, m.steps_used());
                    });
                    auto twice = ctx_.fresh([&](Meter& m) {
                        Nat v = ev.hardy(succ, a, x, m);
                        return std::pair(v, m.steps_used());
                    });
                    if (once.has_value() != twice.has_value()) {
                        emit(judged(r, false, "one run exhausted the budget"));
                    } else if (!once) {
                        emit(skipped(r));
                    } else {
                        emit(judged(r, *once == *twice,
                                    "values " + describe(once->first) + "," + describe(twice->first)));
                    }
                }
            }
        }
    }

    void pred_chain(const Ordinal& a, const Nat& x, const std::string& inst) {
        auto r = report("ord.pred-chain", inst);
        // the chain has exactly G_a(x) links
        auto g = ctx_.G(a, x);
        if (!g || *g > Nat(cfg_.budget.max_steps())) return emit(skipped(r));
        Meter m(cfg_.budget);
        try {
            Ordinal cur = a;
            while (!cur.is_zero()) {
                m.charge();
                Ordinal next = predecessor(cur, x);
                if (!(next < cur))
                    return emit(judged(r, false, render_ordinal(next) + " not below " + render_ordinal(cur)));
                cur = std::move(next);
            }
        } catch (const BudgetExceeded&) {
            return emit(skipped(r));
        }
        emit(r);
    }

    void hardy_laws(const BaseFunction& h, const Ordinal& a, std::size_t i) {
        using detail::InstanceText;
        const Nat& x = xs_[i];
        std::string inst = InstanceText().add("h", h).add("a", a).add("x", x).str();
        auto hx = ctx_.H(h, a, x);

        if (enabled("hardy.expansive"))
            emit(hx ? judged(report("hardy.expansive", inst), *hx >= x, "h^a(x)=" + describe(*hx))
                    : skipped(report("hardy.expansive", inst)));

        if (enabled("hardy.arg-monotone"))
            for (std::size_t j = i + 1; j < xs_.size(); ++j) {
                auto r = report("hardy.arg-monotone",
                                InstanceText().add("h", h).add("a", a).add("x", x).add("y", xs_[j]).str());
                auto hy = ctx_.H(h, a, xs_[j]);
                emit(hx && hy ? judged(r, *hx <= *hy, "h^a(x)=" + describe(*hx) + " h^a(y)=" + describe(*hy))
                              : skipped(r));
            }

        if (enabled("hardy.base-monotone"))
            for (const auto& g : cfg_.bases) {
                if (g == h || !base_le(g, h)) continue;
                auto r = report("hardy.base-monotone",
                                InstanceText().add("g", g).add("h", h).add("a", a).add("x", x).str());
                auto gx = ctx_.H(g, a, x);
                emit(hx && gx ? judged(r, *gx <= *hx, "g^a(x)=" + describe(*gx) + " h^a(x)=" + describe(*hx))
                              : skipped(r));
            }

        if (enabled("hardy.bridge"))
            for (int c = 1; c <= 2; ++c) {
                auto r = report("hardy.bridge",
                                InstanceText().add("h", h).add("a", a).add("c", std::to_string(c)).add("x", x).str());
                auto lhs = ctx_.H(h, Ordinal::omega_power(a, c), x);
                if (!lhs) {
                    emit(skipped(r));
                    continue;
                }
                std::optional<Nat> rhs = x;
                for (int k = 0; k < c && rhs; ++k) rhs = ctx_.Frel(h, a, *rhs);
                emit(rhs ? judged(r, *lhs == *rhs, "h^(w^a*c)=" + describe(*lhs) + " F^c=" + describe(*rhs))
                         : skipped(r));
            }

        if (enabled("hardy.dual")) {
            auto r = report("hardy.dual", inst);
            auto rec = hx ? ctx_.Hrec(h, a, x) : std::nullopt;
            emit(hx && rec ? judged(r, *hx == *rec, "iterative=" + describe(*hx) + " recursive=" + describe(*rec))
                           : skipped(r));
        }

        auto len = ctx_.C(h, a, x);
        if (enabled("cichon.bridge")) {
            auto r = report("cichon.bridge", inst);
            auto it = hx && len ? ctx_.iterate(h, *len, x) : std::nullopt;
            emit(it ? judged(r, *it == *hx, "h^a(x)=" + describe(*hx) + " h^(h_a(x))(x)=" + describe(*it))
                    : skipped(r));
        }
        if (enabled("cichon.lower")) {
            auto r = report("cichon.lower", inst);
            emit(hx && len ? judged(r, *hx >= *len + x, "h^a(x)=" + describe(*hx) + " h_a(x)=" + describe(*len))
                           : skipped(r));
        }

        const bool want_length = enabled("trace.length");
        const bool want_term = enabled("trace.term-G") && x > Nat(0);
        if (!want_length && !want_term) return;
        // Only walk computations the evaluators finished; the walk charges
        // the same budget and may still run out.
        std::optional<Nat> g_final;
        if (want_term && hx) g_final = ctx_.G(a, *hx);
        std::uint64_t steps = 0;
        Nat worst_size = 0;
        Nat last;
        bool complete = false;
        if (hx && len) {
            Meter m(cfg_.budget);
            complete = hardy_walk(h, a, x, m, [&](const Ordinal& o, const Nat& v) {
                ++steps;
                last = v;
                if (g_final) worst_size = max(worst_size, term_size(o));
            });
        }
        if (want_length) {
            auto r = report("trace.length", inst);
            emit(complete ? judged(r, Nat(steps - 1) == *len && last == *hx,
                                   "length=" + std::to_string(steps - 1) + " h_a=" + describe(*len) +
                                       " final=" + describe(last) + " h^a=" + describe(*hx))
                          : skipped(r));
        }
        if (want_term) {
            auto r = report("trace.term-G", inst);
            emit(complete && g_final ? judged(r, worst_size <= *g_final,
                                              "max|a_i|=" + worst_size.str() +
                                                  " G_a(n_l)=" + describe(*g_final))
                                     : skipped(r));
        }
    }

    void slow_laws(const Ordinal& a, const Nat& x, const std::string& inst) {
        auto g = ctx_.G(a, x);
        if (enabled("slow.dual")) {
            auto r = report("slow.dual", inst);
            auto rec = g ? ctx_.Grec(a, x) : std::nullopt;
            emit(g && rec ? judged(r, *g == *rec, "closed=" + describe(*g) + " recursive=" + describe(*rec))
                          : skipped(r));
        }
        if (enabled("slow.omega-power")) {
            auto r = report("slow.omega-power", inst);
            auto lhs = ctx_.G(Ordinal::omega_power(a), x);
            std::optional<Nat> rhs;
            if (g && lhs) {
                auto bits = ctx_.fresh([&](Meter& m) {
                    m.require_bits(*g * Nat((x + 1).bit_length()));
                    return pow(x + 1, *g->to_u64());
                });
                rhs = bits;
            }
            emit(lhs && rhs ? judged(r, *lhs == *rhs, "G_(w^a)=" + describe(*lhs) + " (x+1)^G_a=" + describe(*rhs))
                            : skipped(r));
        }
        if (a.is_zero()) return;
        if (enabled("slow.monotone")) {
            auto r = report("slow.monotone", inst);
            auto next = ctx_.G(a, x + 1);
            const bool ok = g && next && (a.is_finite() ? *next == *g : *next > *g);
            emit(g && next ? judged(r, ok, "G_a(x)=" + describe(*g) + " G_a(x+1)=" + describe(*next))
                           : skipped(r));
        }
        if (enabled("slow.pred")) {
            auto r = report("slow.pred", inst);
            auto p = ctx_.fresh([&](Meter& m) {
                return detail::predecessor_with(a, x, [&m] { m.charge(); });
            });
            auto gp = p ? ctx_.G(*p, x) : std::nullopt;
            emit(g && gp ? judged(r, *g == *gp + 1, "G_a=" + describe(*g) + " G_P=" + describe(*gp)) : skipped(r));
        }
    }

    void named_checks() {
        if (enabled("rel.bound"))
            for (const auto& h : cfg_.bases) {
                const Nat k = dominating_level(h);
                for (const Nat& level : {k, k + 1}) {
                    const Ordinal b = Ordinal::finite(level);
                    for (const auto& a : eval_)
                        for (const Nat& x : xs_) emit(check_relativized_bound(ctx_, h, a, b, 0, {x}));
                }
            }
        if (enabled("fs.variant")) {
            std::vector<BaseFunction> ss = cfg_.bases;
            ss.push_back(BaseFunction::affine(1, 0));
            for (const auto& s : ss)
                for (const auto& a : eval_)
                    for (const Nat& x : xs_) {
                        const Nat sx = apply_base(s, x);
                        if (sx.is_zero() || (!s.strictly_expansive() && sx > x + 1)) continue;
                        emit(check_fundseq_variant(ctx_, s, a, x));
                    }
        }
    }

    const SuiteConfig& cfg_;
    LawContext ctx_;
    std::vector<Nat> xs_;
    std::vector<Ordinal> terms_, eval_, pairs_, triples_;
    std::vector<LawReport> out_;
};

}  // namespace detail

/// Runs every law over the configured corpora. Report order is fixed by the
/// configuration alone.
inline SuiteResult run_suite(const SuiteConfig& cfg, const Evaluators& ev = Evaluators::standard()) {
    SuiteResult res;
    res.reports = detail::SuiteRunner(cfg, ev).run();
    res.summary = summarize(res.reports);
    return res;
}

}  // namespace subrec
