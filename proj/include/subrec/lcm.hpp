#pragma once

// Lossy counter machines and reachability: the backward search for a
// minimal witness, a forward search cut off at the length bound, and a
// breadth-first oracle over configurations with capped counter values.

#include "subrec/base_function.hpp"
#include "subrec/budget.hpp"
#include "subrec/errors.hpp"
#include "subrec/hierarchy.hpp"
#include "subrec/nat.hpp"
#include "subrec/ordinal.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace subrec {

/// Machine text or a configuration refers to something undeclared, or is
/// malformed. `line` is 1-based, 0 when not tied to a line.
class MachineError : public Error {
public:
    explicit MachineError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

enum class CounterOp { ZeroTest, Incr, Decr };

struct Transition {
    std::size_t src = 0;
    CounterOp op = CounterOp::Incr;
    std::size_t counter = 0;
    std::size_t dst = 0;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

class CounterMachine {
public:
    CounterMachine(std::vector<std::string> states, std::vector<std::string> counters,
                   std::vector<Transition> transitions, std::size_t initial = 0)
        : states_(std::move(states)), counters_(std::move(counters)), transitions_(std::move(transitions)),
          initial_(initial) {
        if (initial_ >= states_.size()) throw MachineError("initial state is not declared");
        for (const auto& t : transitions_)
            if (t.src >= states_.size() || t.dst >= states_.size() || t.counter >= counters_.size())
                throw MachineError("transition refers to an undeclared state or counter");
        check_unique(states_, "state");
        check_unique(counters_, "counter");
    }

    /// Line-based text: "counters: c d", "initial: q0", then one
    /// "src op dst" per line with op one of c++, c--, c=0. '#' starts a
    /// comment. States are declared by use.
    static CounterMachine parse(std::string_view text);

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& counters() const { return counters_; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    std::size_t initial() const { return initial_; }

    std::optional<std::size_t> state_index(std::string_view name) const { return find(states_, name); }
    std::optional<std::size_t> counter_index(std::string_view name) const { return find(counters_, name); }

    std::string render() const;

private:
    static std::optional<std::size_t> find(const std::vector<std::string>& v, std::string_view name) {
        auto it = std::find(v.begin(), v.end(), name);
        if (it == v.end()) return std::nullopt;
        return static_cast<std::size_t>(it - v.begin());
    }

    static void check_unique(const std::vector<std::string>& names, const char* what) {
        std::set<std::string> seen;
        for (const auto& n : names)
            if (!seen.insert(n).second) throw MachineError(std::string("duplicate ") + what + " '" + n + "'");
    }

    std::vector<std::string> states_;
    std::vector<std::string> counters_;
    std::vector<Transition> transitions_;
    std::size_t initial_;
};

struct Configuration {
    std::size_t state = 0;
    std::vector<std::uint64_t> valuation;

    friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// Same state and componentwise <=.
inline bool config_le(const Configuration& a, const Configuration& b) {
    if (a.state != b.state || a.valuation.size() != b.valuation.size()) return false;
    for (std::size_t i = 0; i < a.valuation.size(); ++i)
        if (a.valuation[i] > b.valuation[i]) return false;
    return true;
}

/// Largest counter value; 0 without counters.
inline std::uint64_t config_size(const Configuration& c) {
    std::uint64_t m = 0;
    for (auto v : c.valuation) m = std::max(m, v);
    return m;
}

inline Configuration initial_configuration(const CounterMachine& m) {
    return Configuration{m.initial(), std::vector<std::uint64_t>(m.counters().size(), 0)};
}

inline void require_well_formed(const CounterMachine& m, const Configuration& c) {
    if (c.state >= m.states().size()) throw MachineError("configuration state is not declared");
    if (c.valuation.size() != m.counters().size())
        throw MachineError("configuration must give exactly one value per counter");
}

/// "q1 c=1 d=0"; unlisted counters are 0.
inline Configuration parse_configuration(const CounterMachine& m, std::string_view text);
inline std::string render_configuration(const CounterMachine& m, const Configuration& c);

// ---------------------------------------------------------------------------
// One-step semantics

/// The largest configuration `t` leads to from `s`, if `t` is enabled.
/// Every successor along `t` lies below it.
inline std::optional<Configuration> maximal_successor(const Transition& t, const Configuration& s) {
    if (t.src != s.state) return std::nullopt;
    Configuration out{t.dst, s.valuation};
    auto& v = out.valuation[t.counter];
    switch (t.op) {
        case CounterOp::ZeroTest: v = 0; break;
        case CounterOp::Incr:
            if (v == std::numeric_limits<std::uint64_t>::max()) throw MachineError("counter overflow");
            ++v;
            break;
        case CounterOp::Decr:
            if (v == 0) return std::nullopt;
            --v;
            break;
    }
    return out;
}

/// s -> to in one lossy step.
inline bool lossy_step(const CounterMachine& m, const Configuration& s, const Configuration& to) {
    for (const auto& t : m.transitions()) {
        auto top = maximal_successor(t, s);
        if (top && config_le(to, *top)) return true;
    }
    return false;
}

/// Every successor of `s` whose counters are all <= value_cap, sorted.
inline std::vector<Configuration> lossy_successors(const CounterMachine& m, const Configuration& s,
                                                   std::uint64_t value_cap) {
    require_well_formed(m, s);
    std::set<Configuration> out;
    for (const auto& t : m.transitions()) {
        auto top = maximal_successor(t, s);
        if (!top) continue;
        std::vector<std::uint64_t> limit = top->valuation;
        for (auto& v : limit) v = std::min(v, value_cap);
        Configuration cur{top->state, std::vector<std::uint64_t>(limit.size(), 0)};
        // odometer over the box [0, limit]
        for (;;) {
            out.insert(cur);
            std::size_t i = 0;
            while (i < limit.size() && cur.valuation[i] == limit[i]) cur.valuation[i++] = 0;
            if (i == limit.size()) break;
            ++cur.valuation[i];
        }
    }
    return {out.begin(), out.end()};
}

/// The <=-minimal configurations with a step to `s`, sorted.
inline std::vector<Configuration> min_pre(const CounterMachine& m, const Configuration& s) {
    require_well_formed(m, s);
    std::vector<Configuration> cand;
    for (const auto& t : m.transitions()) {
        if (t.dst != s.state) continue;
        Configuration p{t.src, s.valuation};
        auto& v = p.valuation[t.counter];
        switch (t.op) {
            case CounterOp::ZeroTest:
                if (v != 0) continue;
                break;
            case CounterOp::Incr:
                if (v > 0) --v;
                break;
            case CounterOp::Decr:
                if (v == std::numeric_limits<std::uint64_t>::max()) throw MachineError("counter overflow");
                ++v;
                break;
        }
        cand.push_back(std::move(p));
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<Configuration> out;
    for (const auto& c : cand) {
        bool dominated = false;
        for (const auto& d : cand)
            if (&d != &c && config_le(d, c)) dominated = true;
        if (!dominated) out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Results

enum class ReachVerdict { Reachable, Unreachable, Inconclusive };

inline std::string_view reach_verdict_name(ReachVerdict v) {
    switch (v) {
        case ReachVerdict::Reachable: return "Reachable";
        case ReachVerdict::Unreachable: return "Unreachable";
        case ReachVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct ReachResult {
    ReachVerdict verdict = ReachVerdict::Unreachable;
    /// From the initial configuration to the target; only when Reachable.
    std::vector<Configuration> witness;
    /// Why the answer is Inconclusive.
    std::string reason;
    std::uint64_t steps_used = 0;
};

struct WitnessCheck {
    /// Starts at the initial configuration and every step is a lossy step.
    bool valid = false;
    /// Read backwards, the i-th configuration has size <= |last| + i.
    bool controlled = false;
    std::string problem;

    explicit operator bool() const { return valid; }
};

inline WitnessCheck validate_witness(const CounterMachine& m, const std::vector<Configuration>& w) {
    WitnessCheck r;
    if (w.empty()) {
        r.problem = "empty witness";
        return r;
    }
    for (const auto& c : w)
        if (c.state >= m.states().size() || c.valuation.size() != m.counters().size()) {
            r.problem = "configuration does not fit the machine";
            return r;
        }
    if (w.front() != initial_configuration(m)) {
        r.problem = "does not start at the initial configuration";
        return r;
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!lossy_step(m, w[i], w[i + 1])) {
            r.problem = "no step from position " + std::to_string(i) + " to " + std::to_string(i + 1);
            return r;
        }
    r.valid = true;
    r.controlled = true;
    const std::uint64_t last = config_size(w.back());
    for (std::size_t k = 0; k < w.size(); ++k)
        if (config_size(w[w.size() - 1 - k]) > last + k) r.controlled = false;
    return r;
}

// ---------------------------------------------------------------------------
// Backward search

/// Called with the current branch, target first, each time a node is added.
using BranchObserver = std::function<void(const std::vector<Configuration>&)>;

/// Depth-first search from the target through min_pre, abandoning a branch
/// as soon as a configuration is >= an earlier one on it. One step per
/// node; budget exhaustion yields Inconclusive.
inline ReachResult backward_reach(const CounterMachine& m, const Configuration& target, const EvalBudget& budget = {},
                                  const BranchObserver& observe = {}) {
    require_well_formed(m, target);
    const Configuration init = initial_configuration(m);
    Meter meter(budget);
    ReachResult res;

    struct Frame {
        std::vector<Configuration> children;
        std::size_t next = 0;
    };
    std::vector<Configuration> branch;
    std::vector<Frame> frames;

    auto enter = [&](Configuration c) -> bool {
        meter.charge();
        branch.push_back(std::move(c));
        if (observe) observe(branch);
        if (branch.back() == init) return true;
        frames.push_back({min_pre(m, branch.back()), 0});
        return false;
    };

    try {
        bool found = enter(target);
        while (!found && !frames.empty()) {
            Frame& f = frames.back();
            if (f.next == f.children.size()) {
                frames.pop_back();
                branch.pop_back();
                continue;
            }
            const Configuration& child = f.children[f.next++];
            bool bad = true;
            for (const auto& earlier : branch)
                if (config_le(earlier, child)) {
                    bad = false;
                    break;
                }
            if (bad) found = enter(child);
        }
        res.steps_used = meter.steps_used();
        if (found) {
            res.verdict = ReachVerdict::Reachable;
            res.witness.assign(branch.rbegin(), branch.rend());
        } else {
            res.verdict = ReachVerdict::Unreachable;
        }
    } catch (const BudgetExceeded& e) {
        res.verdict = ReachVerdict::Inconclusive;
        res.reason = std::string(e.what()) + " after " + std::to_string(meter.steps_used()) + " nodes";
        res.steps_used = meter.steps_used();
    }
    return res;
}

// ---------------------------------------------------------------------------
// Length bound and forward search

struct LengthBound {
    /// max{|C|, |Q|, |target|}
    Nat argument;
    /// F_(h,w)(argument) when it fits the budget.
    std::optional<Nat> value;
    /// The bound as an expression, e.g. "F_{succ,w}(2)".
    std::string expression;
};

inline LengthBound length_bound(const CounterMachine& m, const Configuration& target, const BaseFunction& h,
                                const EvalBudget& budget = {}) {
    require_well_formed(m, target);
    LengthBound b;
    b.argument = Nat(std::max<std::uint64_t>({m.counters().size(), m.states().size(), config_size(target)}));
    b.expression = "F_{" + h.name() + ",w}(" + b.argument.str() + ")";
    try {
        b.value = fast_growing_rel(h, Ordinal::omega(), b.argument, budget);
    } catch (const BudgetExceeded&) {
    }
    return b;
}

namespace detail {

/// Breadth-first search from the initial configuration over successors with
/// counters <= value_cap, at most depth_cap steps deep. Returns the witness
/// if the target is met.
inline std::optional<std::vector<Configuration>> bounded_bfs(const CounterMachine& m, const Configuration& target,
                                                             std::uint64_t value_cap, std::uint64_t depth_cap,
                                                             Meter& meter) {
    const Configuration init = initial_configuration(m);
    std::map<Configuration, std::size_t> index;
    std::vector<std::pair<Configuration, std::size_t>> nodes;  // config, parent
    auto trace = [&](std::size_t i) {
        std::vector<Configuration> w;
        for (;;) {
            w.push_back(nodes[i].first);
            if (i == 0) break;
            i = nodes[i].second;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    meter.charge();
    nodes.push_back({init, 0});
    index.emplace(init, 0);
    if (init == target) return trace(0);
    std::size_t begin = 0;
    for (std::uint64_t depth = 0; depth < depth_cap && begin < nodes.size(); ++depth) {
        const std::size_t end = nodes.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (auto& next : lossy_successors(m, nodes[i].first, value_cap)) {
                if (index.count(next)) continue;
                meter.charge();
                index.emplace(next, nodes.size());
                nodes.push_back({std::move(next), i});
                if (nodes.back().first == target) return trace(nodes.size() - 1);
            }
        }
        begin = end;
    }
    return std::nullopt;
}

}  // namespace detail

/// Breadth-first search cut off at min(length bound, step_cap) in both
/// depth and counter values. Unreachable only when the length bound was
/// computed and fits under step_cap; otherwise a miss is Inconclusive.
inline ReachResult forward_bounded(const CounterMachine& m, const Configuration& target, const BaseFunction& h,
                                   const Nat& step_cap, const EvalBudget& budget = {}) {
    require_well_formed(m, target);
    if (step_cap.is_zero()) throw std::invalid_argument("step cap must be at least 1");
    detail::require_increasing(h);
    const LengthBound lb = length_bound(m, target, h, budget);
    const bool exact = lb.value && *lb.value <= step_cap;
    const Nat effective = exact ? *lb.value : step_cap;
    const std::uint64_t cap = effective.to_u64().value_or(std::numeric_limits<std::uint64_t>::max());

    Meter meter(budget);
    ReachResult res;
    try {
        auto w = detail::bounded_bfs(m, target, cap, cap, meter);
        res.steps_used = meter.steps_used();
        if (w) {
            res.verdict = ReachVerdict::Reachable;
            res.witness = std::move(*w);
        } else if (exact) {
            res.verdict = ReachVerdict::Unreachable;
        } else {
            res.verdict = ReachVerdict::Inconclusive;
            res.reason = "searched to " + effective.str() + " but the length bound " + lb.expression +
                         (lb.value ? " = " + lb.value->str() + " exceeds the step cap" : " exceeds the budget");
        }
    } catch (const BudgetExceeded& e) {
        res.verdict = ReachVerdict::Inconclusive;
        res.reason = std::string(e.what()) + " after " + std::to_string(meter.steps_used()) + " configurations";
        res.steps_used = meter.steps_used();
    }
    return res;
}

/// Every configuration reachable while all counters stay <= cap, explored
/// to saturation. A hit is exact; a miss is exact only if no run to the
/// target needs a counter above cap.
inline ReachResult bfs_oracle(const CounterMachine& m, const Configuration& target, std::uint64_t cap = 8,
                              const EvalBudget& budget = {}) {
    require_well_formed(m, target);
    Meter meter(budget);
    ReachResult res;
    try {
        auto w = detail::bounded_bfs(m, target, cap, std::numeric_limits<std::uint64_t>::max(), meter);
        res.steps_used = meter.steps_used();
        if (w) {
            res.verdict = ReachVerdict::Reachable;
            res.witness = std::move(*w);
        } else {
            res.verdict = ReachVerdict::Unreachable;
        }
    } catch (const BudgetExceeded& e) {
        res.verdict = ReachVerdict::Inconclusive;
        res.reason = std::string(e.what()) + " after " + std::to_string(meter.steps_used()) + " configurations";
        res.steps_used = meter.steps_used();
    }
    return res;
}

// ---------------------------------------------------------------------------
// Text forms

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> words(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    if (!alpha(s[0])) return false;
    for (char c : s)
        if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
    return true;
}

inline std::uint64_t parse_count(std::string_view s, std::size_t line = 0) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size() || (s.size() > 1 && s[0] == '0'))
        throw MachineError("invalid counter value '" + std::string(s) + "'", line);
    return v;
}

}  // namespace detail

inline CounterMachine CounterMachine::parse(std::string_view text) {
    std::vector<std::string> states, counters;
    std::optional<std::string> initial;
    bool have_counters = false;
    struct Raw {
        std::string src, counter, dst;
        CounterOp op;
        std::size_t line;
    };
    std::vector<Raw> raw;

    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        if (line.starts_with("counters:")) {
            if (have_counters) throw MachineError("second counters line", line_no);
            have_counters = true;
            for (auto w : detail::words(line.substr(9))) {
                if (!detail::is_identifier(w)) throw MachineError("invalid counter name '" + std::string(w) + "'", line_no);
                counters.emplace_back(w);
            }
            continue;
        }
        if (line.starts_with("initial:")) {
            if (initial) throw MachineError("second initial line", line_no);
            auto ws = detail::words(line.substr(8));
            if (ws.size() != 1 || !detail::is_identifier(ws[0]))
                throw MachineError("initial line needs exactly one state name", line_no);
            initial = std::string(ws[0]);
            continue;
        }
        auto ws = detail::words(line);
        if (ws.size() != 3) throw MachineError("expected 'src op dst'", line_no);
        std::string_view op = ws[1];
        CounterOp kind;
        std::string_view counter;
        if (op.ends_with("++")) {
            kind = CounterOp::Incr;
            counter = op.substr(0, op.size() - 2);
        } else if (op.ends_with("--")) {
            kind = CounterOp::Decr;
            counter = op.substr(0, op.size() - 2);
        } else if (op.ends_with("=0")) {
            kind = CounterOp::ZeroTest;
            counter = op.substr(0, op.size() - 2);
        } else {
            throw MachineError("unknown operation '" + std::string(op) + "' (expected c++, c-- or c=0)", line_no);
        }
        if (!detail::is_identifier(ws[0]) || !detail::is_identifier(ws[2]) || !detail::is_identifier(counter))
            throw MachineError("invalid name in transition", line_no);
        raw.push_back({std::string(ws[0]), std::string(counter), std::string(ws[2]), kind, line_no});
    }
    if (!initial) throw MachineError("missing initial line");
    if (!have_counters) throw MachineError("missing counters line");

    states.push_back(*initial);
    auto state_id = [&](const std::string& name) {
        auto it = std::find(states.begin(), states.end(), name);
        if (it != states.end()) return static_cast<std::size_t>(it - states.begin());
        states.push_back(name);
        return states.size() - 1;
    };
    std::vector<Transition> ts;
    for (const auto& r : raw) {
        auto c = std::find(counters.begin(), counters.end(), r.counter);
        if (c == counters.end()) throw MachineError("undeclared counter '" + r.counter + "'", r.line);
        Transition t;
        t.src = state_id(r.src);
        t.op = r.op;
        t.counter = static_cast<std::size_t>(c - counters.begin());
        t.dst = state_id(r.dst);
        ts.push_back(t);
    }
    return CounterMachine(std::move(states), std::move(counters), std::move(ts), 0);
}

inline std::string CounterMachine::render() const {
    std::string out = "counters:";
    for (const auto& c : counters_) out += " " + c;
    out += "\ninitial: " + states_[initial_] + "\n";
    for (const auto& t : transitions_) {
        out += states_[t.src] + " " + counters_[t.counter];
        out += t.op == CounterOp::Incr ? "++" : t.op == CounterOp::Decr ? "--" : "=0";
        out += " " + states_[t.dst] + "\n";
    }
    return out;
}

inline Configuration parse_configuration(const CounterMachine& m, std::string_view text) {
    auto ws = detail::words(detail::trim(text));
    if (ws.empty()) throw MachineError("empty configuration");
    auto state = m.state_index(ws[0]);
    if (!state) throw MachineError("unknown state '" + std::string(ws[0]) + "'");
    Configuration c{*state, std::vector<std::uint64_t>(m.counters().size(), 0)};
    std::vector<bool> seen(m.counters().size(), false);
    for (std::size_t i = 1; i < ws.size(); ++i) {
        auto eq = ws[i].find('=');
        if (eq == std::string_view::npos) throw MachineError("expected counter=value, got '" + std::string(ws[i]) + "'");
        auto k = m.counter_index(ws[i].substr(0, eq));
        if (!k) throw MachineError("unknown counter '" + std::string(ws[i].substr(0, eq)) + "'");
        if (seen[*k]) throw MachineError("counter '" + m.counters()[*k] + "' given twice");
        seen[*k] = true;
        c.valuation[*k] = detail::parse_count(ws[i].substr(eq + 1));
    }
    return c;
}

inline std::string render_configuration(const CounterMachine& m, const Configuration& c) {
    std::string out = m.states().at(c.state);
    for (std::size_t i = 0; i < c.valuation.size(); ++i) out += " " + m.counters().at(i) + "=" + std::to_string(c.valuation[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Machine corpus

struct MachineCorpusLimits {
    std::size_t max_states = 3;
    std::size_t max_counters = 2;
    std::size_t max_transitions = 3;
    std::uint64_t max_target_size = 2;
};

struct MachineInstance {
    CounterMachine machine;
    Configuration target;
};

namespace detail {

inline std::vector<Transition> all_transitions(std::size_t nq, std::size_t nc) {
    std::vector<Transition> out;
    for (std::size_t s = 0; s < nq; ++s)
        for (std::size_t c = 0; c < nc; ++c)
            for (CounterOp op : {CounterOp::ZeroTest, CounterOp::Incr, CounterOp::Decr})
                for (std::size_t d = 0; d < nq; ++d) out.push_back({s, op, c, d});
    std::sort(out.begin(), out.end());
    return out;
}

/// True when no renaming of the non-initial states and of the counters
/// gives a smaller sorted transition list.
inline bool canonical_up_to_renaming(const std::vector<Transition>& ts, std::size_t nq, std::size_t nc) {
    std::vector<std::size_t> sp(nq), cp(nc);
    for (std::size_t i = 0; i < nq; ++i) sp[i] = i;
    for (std::size_t i = 0; i < nc; ++i) cp[i] = i;
    std::vector<Transition> renamed(ts.size());
    do {
        std::vector<std::size_t> cq = cp;
        do {
            for (std::size_t i = 0; i < ts.size(); ++i)
                renamed[i] = {sp[ts[i].src], ts[i].op, cq[ts[i].counter], sp[ts[i].dst]};
            std::sort(renamed.begin(), renamed.end());
            if (renamed < ts) return false;
        } while (std::next_permutation(cq.begin(), cq.end()));
    } while (nq > 1 && std::next_permutation(sp.begin() + 1, sp.end()));
    return true;
}

}  // namespace detail

/// Every machine with states q0.., counters c, d, e.. and a set of distinct
/// transitions within the limits, one per class under renaming of the
/// non-initial states and of the counters, each paired with every target
/// of size <= max_target_size.
inline std::vector<MachineInstance> machine_corpus(const MachineCorpusLimits& lim = {}) {
    std::vector<MachineInstance> out;
    for (std::size_t nq = 1; nq <= lim.max_states; ++nq)
        for (std::size_t nc = 1; nc <= lim.max_counters; ++nc) {
            std::vector<std::string> states, counters;
            for (std::size_t i = 0; i < nq; ++i) states.push_back("q" + std::to_string(i));
            for (std::size_t i = 0; i < nc; ++i) counters.push_back(std::string(1, static_cast<char>('c' + i)));
            const auto all = detail::all_transitions(nq, nc);
            std::vector<Transition> chosen;
            auto emit = [&] {
                if (!detail::canonical_up_to_renaming(chosen, nq, nc)) return;
                CounterMachine m(states, counters, chosen, 0);
                for (std::size_t q = 0; q < nq; ++q) {
                    Configuration t{q, std::vector<std::uint64_t>(nc, 0)};
                    for (;;) {
                        out.push_back({m, t});
                        std::size_t i = 0;
                        while (i < nc && t.valuation[i] == lim.max_target_size) t.valuation[i++] = 0;
                        if (i == nc) break;
                        ++t.valuation[i];
                    }
                }
            };
            auto rec = [&](auto&& self, std::size_t from) -> void {
                emit();
                if (chosen.size() == lim.max_transitions) return;
                for (std::size_t k = from; k < all.size(); ++k) {
                    chosen.push_back(all[k]);
                    self(self, k + 1);
                    chosen.pop_back();
                }
            };
            rec(rec, 0);
        }
    return out;
}

}  // namespace subrec
