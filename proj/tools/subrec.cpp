// Command-line front end.
//
// Exit status: 0 on success, 1 on usage or input errors, 2 when a budget
// runs out or a search is inconclusive, 3 when a law fails.

#include "subrec/hierarchy.hpp"
#include "subrec/laws.hpp"
#include "subrec/lcm.hpp"
#include "subrec/ordinal.hpp"
#include "subrec/ordinal_text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace subrec;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kBudget = 2, kLawFail = 3 };

struct Options {
    bool json = false;
    std::uint64_t max_steps = EvalBudget::kDefaultSteps;
    std::uint64_t max_bits = EvalBudget::kDefaultBits;

    EvalBudget budget() const { return EvalBudget(max_steps, max_bits); }
};

/// One result, printed as text or as a JSON record.
struct Record {
    std::string command;
    Json inputs = Json::object();
    std::string status = "ok";
    Json result;
    std::string text;
    std::string error;
    std::uint64_t steps = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Nat parse_nat(const std::string& s, const char* what) {
    try {
        return Nat::parse(s);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(what) + " must be a natural number, got '" + s + "'");
    }
}

OrdinalIndex parse_index(const std::string& s) {
    if (s == "eps0") return EpsilonZero{};
    return parse_ordinal(s);
}

Ordinal parse_term(const std::string& s) {
    if (s == "eps0") throw UsageError("eps0 is only accepted as an index of F, Ffs, fund and trace");
    return parse_ordinal(s);
}

BaseFunction parse_base(const std::string& s) {
    try {
        return BaseFunction::parse(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int emit(const Options& opt, const Record& r, std::ostream& out, std::ostream& err) {
    if (opt.json) {
        Json j;
        j["command"] = r.command;
        j["inputs"] = r.inputs;
        j["status"] = r.status;
        j["result"] = r.result;
        j["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
        j["budget_used"] = {{"steps", r.steps}, {"max_steps", opt.max_steps}, {"max_bits", opt.max_bits}};
        out << j.dump() << "\n";
    } else {
        if (!r.text.empty()) out << r.text << std::flush;
        if (!r.error.empty()) err << "error: " << r.error << "\n";
    }
    if (r.status == "ok") return kOk;
    if (r.status == "fail") return kLawFail;
    if (r.status == "error") return kUsage;
    return kBudget;
}

std::string budget_message(const BudgetExceeded& e, const Options& opt) {
    if (e.resource() == BudgetExceeded::Resource::Steps)
        return "budget exceeded: more than " + std::to_string(opt.max_steps) + " steps";
    return "budget exceeded: a value needs more than " + std::to_string(opt.max_bits) + " bits";
}

// ---------------------------------------------------------------------------
// ord

Record run_ord(const std::string& op, const std::vector<std::string>& args, const std::string& s_text) {
    Record r;
    r.command = "ord " + op;
    auto need = [&](std::size_t n, const char* usage) {
        if (args.size() != n) throw UsageError("usage: ord " + op + " " + usage);
    };
    auto text = [&](const std::string& v) {
        r.result = v;
        r.text = v + "\n";
    };
    if (op == "compare") {
        need(2, "A B");
        r.inputs = {{"a", args[0]}, {"b", args[1]}};
        auto c = compare(parse_term(args[0]), parse_term(args[1]));
        text(c < 0 ? "Less" : c > 0 ? "Greater" : "Equal");
    } else if (op == "sum" || op == "nsum") {
        need(2, "A B");
        r.inputs = {{"a", args[0]}, {"b", args[1]}};
        auto a = parse_term(args[0]), b = parse_term(args[1]);
        text(render_ordinal(op == "sum" ? add(a, b) : natural_sum(a, b)));
    } else if (op == "fund") {
        need(2, "LIMIT X");
        r.inputs = {{"limit", args[0]}, {"x", args[1]}};
        auto idx = parse_index(args[0]);
        Nat x = parse_nat(args[1], "X");
        if (!s_text.empty()) {
            r.inputs["s"] = s_text;
            text(render_ordinal(fund_seq_custom(parse_base(s_text), idx, x)));
        } else {
            text(render_ordinal(fund_seq(idx, x)));
        }
    } else if (op == "pred") {
        need(2, "A X");
        r.inputs = {{"a", args[0]}, {"x", args[1]}};
        text(render_ordinal(predecessor(parse_term(args[0]), parse_nat(args[1], "X"))));
    } else if (op == "norm" || op == "size") {
        need(1, "A");
        r.inputs = {{"a", args[0]}};
        auto a = parse_term(args[0]);
        text((op == "norm" ? norm(a) : term_size(a)).str());
    } else if (op == "pwle") {
        need(3, "B A X");
        r.inputs = {{"b", args[0]}, {"a", args[1]}, {"x", args[2]}};
        bool le = pointwise_le(parse_term(args[0]), parse_term(args[1]), parse_nat(args[2], "X"));
        r.result = le;
        r.text = le ? "true\n" : "false\n";
    } else {
        throw UsageError("unknown ord operation '" + op + "' (compare, sum, nsum, fund, pred, norm, size, pwle)");
    }
    return r;
}

// ---------------------------------------------------------------------------
// eval and trace

Record run_eval(const Options& opt, const std::string& kind, const std::vector<std::string>& args,
                const std::string& base_text, const std::string& s_text) {
    Record r;
    r.command = "eval " + kind;
    Meter meter(opt.budget());
    const BaseFunction h = parse_base(base_text.empty() ? "succ" : base_text);
    const BaseFunction s = parse_base(s_text.empty() ? "succ" : s_text);
    Nat value;
    if (kind == "tow") {
        if (args.size() != 1) throw UsageError("usage: eval tow X");
        r.inputs = {{"x", args[0]}};
        Nat x = parse_nat(args[0], "X");
        try {
            value = tower(x, meter);
        } catch (const BudgetExceeded& e) {
            r.status = "budget";
            r.error = budget_message(e, opt);
        }
    } else {
        if (args.size() != 2) throw UsageError("usage: eval " + kind + " INDEX X");
        r.inputs = {{"index", args[0]}, {"x", args[1]}};
        const Nat x = parse_nat(args[1], "X");
        std::function<Nat()> f;
        if (kind == "F") {
            f = [&, idx = parse_index(args[0])] { return fast_growing(idx, x, meter); };
        } else if (kind == "Ffs") {
            r.inputs["s"] = s.name();
            f = [&, idx = parse_index(args[0])] { return fast_growing_fs(s, idx, x, meter); };
        } else {
            const Ordinal a = parse_term(args[0]);
            if (kind == "Frel") {
                r.inputs["base"] = h.name();
                f = [&, a] { return fast_growing_rel(h, a, x, meter); };
            } else if (kind == "H") {
                r.inputs["base"] = h.name();
                f = [&, a] { return hardy_eval(h, a, x, meter); };
            } else if (kind == "C") {
                r.inputs["base"] = h.name();
                f = [&, a] { return cichon(h, a, x, meter); };
            } else if (kind == "G") {
                f = [&, a] { return slow_growing(a, x, meter); };
            } else if (kind == "A") {
                f = [&, a] { return ackermann(a, x, meter); };
            } else {
                throw UsageError("unknown hierarchy '" + kind + "' (F, Frel, Ffs, H, C, G, A, tow)");
            }
        }
        try {
            value = f();
        } catch (const BudgetExceeded& e) {
            r.status = "budget";
            r.error = budget_message(e, opt);
        }
    }
    r.steps = meter.steps_used();
    if (r.status == "ok") {
        r.result = value.str();
        r.text = value.str() + "\n";
    }
    return r;
}

Record run_trace(const Options& opt, const std::string& index, const std::string& n_text,
                 const std::string& base_text) {
    Record r;
    r.command = "trace";
    const BaseFunction h = parse_base(base_text.empty() ? "succ" : base_text);
    r.inputs = {{"index", index}, {"n", n_text}, {"base", h.name()}};
    const Nat n = parse_nat(n_text, "N");
    Meter meter(opt.budget());
    // P_n(eps0) = P_n(eps0(n)), so only the first label differs
    const bool eps0 = index == "eps0";
    const Ordinal start = eps0 ? fund_seq(EpsilonZero{}, n) : parse_ordinal(index);
    HardyTrace t = hardy_trace(h, start, n, meter);
    r.steps = meter.steps_used();

    Json steps = Json::array();
    std::ostringstream os;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        std::string a = i == 0 && eps0 ? "eps0" : render_ordinal(t.steps[i].ordinal);
        os << i << " " << a << " " << t.steps[i].value << "\n";
        steps.push_back({a, t.steps[i].value.str()});
    }
    r.result = {{"complete", t.complete}, {"length", t.length()}, {"steps", steps}};
    if (t.complete) {
        os << "length " << t.length() << ", value " << t.final_value() << "\n";
    } else {
        r.status = "budget";
        r.error = "trace incomplete after " + std::to_string(t.length()) + " steps: budget of " +
                  std::to_string(opt.max_steps) + " steps or " + std::to_string(opt.max_bits) + " bits exceeded";
    }
    r.text = os.str();
    return r;
}

// ---------------------------------------------------------------------------
// laws

struct LawArgs {
    std::optional<std::uint64_t> norm, height, summands;
    std::string xs;
    std::vector<std::string> only;
    bool records = false;
};

Record run_laws(const Options& opt, const LawArgs& la) {
    Record r;
    r.command = "laws";
    SuiteConfig cfg;
    if (la.norm || la.height || la.summands) {
        CorpusBounds b{la.norm.value_or(1), la.height.value_or(1), la.summands.value_or(1)};
        if (b.max_norm == 0) throw UsageError("--norm must be at least 1");
        cfg = SuiteConfig::uniform(b, cfg.xs);
        r.inputs["corpus"] = {{"norm", b.max_norm}, {"height", b.max_height}, {"summands", b.max_summands}};
    } else {
        r.inputs["corpus"] = "default";
    }
    if (!la.xs.empty()) {
        cfg.xs.clear();
        std::stringstream ss(la.xs);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.xs.push_back(parse_nat(item, "--xs entry"));
    }
    Json xs = Json::array();
    for (const auto& x : cfg.xs) xs.push_back(x.str());
    r.inputs["xs"] = xs;
    for (const auto& id : la.only) {
        try {
            law_citation(id);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        cfg.only.insert(id);
    }
    if (!la.only.empty()) r.inputs["laws"] = la.only;
    cfg.budget = opt.budget();

    auto res = run_suite(cfg);
    std::ostringstream os;
    Json per_law = Json::object();
    for (const auto& [law, c] : res.summary.per_law) {
        os << law << " pass=" << c[0] << " skip=" << c[1] << " fail=" << c[2] << "\n";
        per_law[law] = {{"pass", c[0]}, {"skip", c[1]}, {"fail", c[2]}};
    }
    os << "total=" << res.summary.total() << " pass=" << res.summary.pass << " skip=" << res.summary.skipped
       << " fail=" << res.summary.fail << "\n";
    Json failures = Json::array();
    Json reports = Json::array();
    for (const auto& rep : res.reports) {
        if (rep.verdict == Verdict::Fail) failures.push_back(serialize(rep));
        if (la.records || rep.verdict == Verdict::Fail) os << serialize(rep) << "\n";
        if (la.records)
            reports.push_back({{"law", rep.law},
                               {"verdict", verdict_name(rep.verdict)},
                               {"instance", rep.instance},
                               {"witness", rep.witness},
                               {"citation", rep.citation}});
    }
    r.result = {{"total", res.summary.total()},
                {"pass", res.summary.pass},
                {"skip", res.summary.skipped},
                {"fail", res.summary.fail},
                {"per_law", per_law},
                {"failures", failures}};
    if (la.records) r.result["reports"] = reports;
    r.text = os.str();
    if (res.summary.fail > 0) {
        r.status = "fail";
        r.error = std::to_string(res.summary.fail) + " law instances failed";
    }
    return r;
}

// ---------------------------------------------------------------------------
// reach

Record run_reach(const Options& opt, const std::string& path, const std::string& target_text, const std::string& mode,
                 const std::optional<std::uint64_t>& cap, const std::string& base_text) {
    Record r;
    r.command = "reach";
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read machine file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const CounterMachine m = CounterMachine::parse(buf.str());
    const Configuration target = parse_configuration(m, target_text);
    r.inputs = {{"machine", path}, {"target", render_configuration(m, target)}, {"mode", mode}};

    ReachResult res;
    if (mode == "backward") {
        res = backward_reach(m, target, opt.budget());
    } else if (mode == "forward") {
        const BaseFunction h = parse_base(base_text.empty() ? "succ" : base_text);
        r.inputs["base"] = h.name();
        r.inputs["cap"] = cap.value_or(8);
        if (cap && *cap == 0) throw UsageError("--cap must be at least 1");
        res = forward_bounded(m, target, h, cap.value_or(8), opt.budget());
    } else if (mode == "oracle") {
        r.inputs["cap"] = cap.value_or(8);
        res = bfs_oracle(m, target, cap.value_or(8), opt.budget());
    } else {
        throw UsageError("--mode must be backward, forward or oracle");
    }
    r.steps = res.steps_used;

    std::ostringstream os;
    os << reach_verdict_name(res.verdict) << "\n";
    Json witness = Json::array();
    for (const auto& c : res.witness) {
        os << "  " << render_configuration(m, c) << "\n";
        witness.push_back(render_configuration(m, c));
    }
    r.result = {{"verdict", reach_verdict_name(res.verdict)}, {"witness", witness}};
    if (res.verdict == ReachVerdict::Inconclusive) {
        r.status = "inconclusive";
        r.result["reason"] = res.reason;
        os << "  " << res.reason << "\n";
    }
    r.text = os.str();
    return r;
}

std::uint64_t env_steps() {
    const char* v = std::getenv("SUBREC_BUDGET_STEPS");
    if (!v) return EvalBudget::kDefaultSteps;
    auto n = Nat::parse(v).to_u64();
    if (!n || *n == 0) throw std::invalid_argument("bad value");
    return *n;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    try {
        opt.max_steps = env_steps();
    } catch (const std::exception&) {
        std::cerr << "error: SUBREC_BUDGET_STEPS must be a positive integer\n";
        return kUsage;
    }

    CLI::App app{"Ordinals below epsilon_0, subrecursive hierarchies and lossy counter machines", "subrec"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_flag("--json", opt.json, "Print one JSON record per result");
    app.add_option("--max-steps", opt.max_steps, "Step budget per evaluation")->check(CLI::PositiveNumber);
    app.add_option("--max-bits", opt.max_bits, "Bit budget for any intermediate value")->check(CLI::PositiveNumber);

    std::string base_text, s_text;

    auto* ord = app.add_subcommand("ord", "Ordinal operations: compare sum nsum fund pred norm size pwle");
    std::string ord_op;
    std::vector<std::string> ord_args;
    ord->add_option("op", ord_op, "Operation")->required();
    ord->add_option("args", ord_args, "Operands");
    ord->add_option("--s", s_text, "Base of the fundamental sequence for fund");

    auto* eval = app.add_subcommand("eval", "Evaluate F Frel Ffs H C G A tow");
    std::string eval_kind;
    std::vector<std::string> eval_args;
    eval->add_option("kind", eval_kind, "Hierarchy")->required();
    eval->add_option("args", eval_args, "INDEX X, or X for tow");
    eval->add_option("--base", base_text, "Base function: succ, exp2 or affine:A:B");
    eval->add_option("--s", s_text, "Fundamental-sequence base for Ffs");

    auto* trace = app.add_subcommand("trace", "Hardy computation step by step");
    std::string trace_index, trace_n;
    trace->add_option("index", trace_index, "Ordinal or eps0")->required();
    trace->add_option("n", trace_n, "Argument")->required();
    trace->add_option("--base", base_text, "Base function: succ, exp2 or affine:A:B");

    auto* laws = app.add_subcommand("laws", "Run the law suite");
    LawArgs la;
    laws->add_option("--norm", la.norm, "Corpus bound on coefficients and exponents");
    laws->add_option("--height", la.height, "Corpus bound on exponent nesting");
    laws->add_option("--summands", la.summands, "Corpus bound on summands per level");
    laws->add_option("--xs", la.xs, "Comma-separated arguments, default 0,1,2,3");
    laws->add_option("--law", la.only, "Only this law id (repeatable)");
    laws->add_flag("--records", la.records, "Print every record");

    auto* reach = app.add_subcommand("reach", "Reachability in a lossy counter machine");
    std::string machine_path, mode = "backward";
    std::vector<std::string> target_words;
    std::optional<std::uint64_t> cap;
    reach->add_option("machine", machine_path, "Machine file")->required();
    reach->add_option("target", target_words, "Target state and counter values, e.g. q1 c=1")->required();
    reach->add_option("--mode", mode, "backward, forward or oracle");
    reach->add_option("--cap", cap, "Step cap (forward) or value cap (oracle), default 8");
    reach->add_option("--base", base_text, "Base function of the length bound (forward)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        Record r;
        if (*ord) r = run_ord(ord_op, ord_args, s_text);
        else if (*eval) r = run_eval(opt, eval_kind, eval_args, base_text, s_text);
        else if (*trace) r = run_trace(opt, trace_index, trace_n, base_text);
        else if (*laws) r = run_laws(opt, la);
        else {
            std::string target;
            for (const auto& w : target_words) target += (target.empty() ? "" : " ") + w;
            r = run_reach(opt, machine_path, target, mode, cap, base_text);
        }
        return emit(opt, r, std::cout, std::cerr);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << budget_message(e, opt) << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
