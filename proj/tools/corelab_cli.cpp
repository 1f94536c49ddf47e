// corelab: command-line front end for the core pipeline.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "corelab/harness.hpp"
#include "corelab/text_io.hpp"

using namespace corelab;
using ojson = nlohmann::ordered_json;

namespace {

struct Globals {
    std::uint32_t characteristic = PrimeField::kDefaultCharacteristic;
    std::uint64_t seed = 1;
    int seeds = 5;
    std::uint64_t budget_spairs = 2'000'000;
    double budget_seconds = 0;
    std::string format = "json";
    bool timings = false;
    bool trace = false;
    std::string output;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

HarnessConfig make_config(const Globals& g)
{
    if (!is_prime(g.characteristic)) {
        throw ConfigError("--char must be a prime below 2^31 (the pipeline works over GF(p))");
    }
    HarnessConfig cfg;
    cfg.pipeline.field = PrimeField(g.characteristic);
    cfg.pipeline.seed = g.seed;
    cfg.pipeline.gb.budget.max_spairs = g.budget_spairs;
    cfg.pipeline.gb.budget.max_seconds = g.budget_seconds;
    cfg.seeds = g.seeds;
    cfg.trace = g.trace;
    cfg.threads = threads_from_env();
    return cfg;
}

MonomialIdeal parse_ideal_arg(const std::string& s)
{
    try {
        return MonomialIdeal::parse_mi(s);
    } catch (const ParseError& e) {
        throw ConfigError(e.what());
    }
}

ExperimentReport core_command(const MonomialIdeal& I, const std::string& method, bool s2, const HarnessConfig& cfg)
{
    ExperimentReport rep;
    rep.command = "core " + method;
    rep.config = config_json(cfg);
    std::optional<bool> flag = s2 ? std::optional<bool>(true) : std::nullopt;
    CoreResult r = method == "mono" ? core_via_mono(I, cfg.pipeline, flag)
                                    : core_by_intersection(I, cfg.pipeline, {}, flag);
    ojson inst;
    inst["I"] = I.to_mi();
    inst["result"] = r.to_json();
    rep.instances.push_back(std::move(inst));
    Outcome o = Outcome::Pass;
    if (r.status == "refused") {
        o = Outcome::Skipped;
    } else if (r.status == "open" || r.status == "not-monomial") {
        o = Outcome::Open;
    }
    rep.add({"core computed", o, "derived", r.status});
    return rep;
}

ExperimentReport mono_command(int nvars, const std::string& gens, const HarnessConfig& cfg)
{
    auto x = make_ring(cfg.pipeline.field, nvars);
    std::vector<PPoly> K;
    try {
        K = parse_polynomial_list(x, gens);
    } catch (const ParseError& e) {
        throw ConfigError(e.what());
    }
    PIdeal Ki(x, K, cfg.pipeline.gb);
    auto M = mono_of(Ki);
    ExperimentReport rep;
    rep.command = "mono";
    rep.config = config_json(cfg);
    ojson inst;
    inst["K"] = gens;
    inst["mono"] = M.to_mi();
    inst["mono-digest"] = hex_digest(digest(M));
    rep.instances.push_back(std::move(inst));
    rep.verdict("mono(K) inside K", Ki.contains(M.to_ideal(x)), "derived");
    return rep;
}

ExperimentReport content_command(const MonomialIdeal& I, int s, bool fallback, const HarnessConfig& cfg)
{
    auto G = build_generic(I, s > 0 ? s : analytic_spread_one_degree(I), false, cfg.pipeline.field);
    auto M = mono_symbolic(G, cfg.pipeline, fallback);
    ExperimentReport rep;
    rep.command = "content";
    rep.config = config_json(cfg);
    ojson inst;
    inst["I"] = I.to_mi();
    inst["s"] = G.s;
    inst["path"] = M.used_fallback ? "fallback" : "full";
    inst["h"] = M.h.to_string();
    inst["degenerate"] = M.degenerate;
    inst["N"] = M.N_ideal(I.nvars()).to_mi();
    inst["mono-support"] = M.M_ideal(I.nvars()).to_mi();
    ojson terms = ojson::array();
    for (std::size_t i = 0; i < M.v.size(); ++i) {
        terms.push_back({{"v", M.v[i]}, {"C-digest", hex_digest(digest(M.C[i]))}, {"in-N", bool(M.in_N[i])}});
    }
    inst["terms"] = terms;
    if (M.D) {
        inst["D-digest"] = hex_digest(digest(*M.D));
    }
    rep.instances.push_back(std::move(inst));
    rep.verdict("content ideal is principal", M.content_principal, "published");
    return rep;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"corelab: cores of monomial ideals via reductions and mono(-)"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--char", g.characteristic, "prime characteristic")->capture_default_str();
    app.add_option("--seed", g.seed, "master seed")->capture_default_str();
    app.add_option("--seeds", g.seeds, "seeds per example")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--budget-spairs", g.budget_spairs, "S-pair cap per Groebner basis")->capture_default_str();
    app.add_option("--budget-seconds", g.budget_seconds, "wall-clock cap per Groebner basis, 0 = none")
        ->capture_default_str();
    app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_flag("--timings", g.timings, "include wall times in the report");
    app.add_flag("--trace", g.trace, "keep stabilization traces in sweep reports");
    app.add_option("-o,--output", g.output, "write the report here instead of stdout");

    auto* ex = app.add_subcommand("example", "reproduce a worked example");
    std::string ex_id;
    bool ex_fallback = false;
    ex->add_option("id", ex_id, "ex4_9, ex4_10 or ex5_9")->required()->check(CLI::IsMember(example_ids()));
    ex->add_flag("--fallback", ex_fallback, "ex5_9: skip the full elimination");

    auto* sw = app.add_subcommand("sweep-lex", "core of lex-segment ideals against the closed formula");
    int d_max = 3, delta_max = 4;
    bool single = false, long_run = false;
    sw->add_option("--d-max", d_max)->capture_default_str()->check(CLI::Range(2, 6));
    sw->add_option("--delta-max", delta_max)->capture_default_str()->check(CLI::Range(2, 16));
    sw->add_flag("--single-method", single, "skip the stabilized intersection");
    sw->add_flag("--long", long_run, "d=4 delta<=12, d=5 delta<=5, d=6 delta<=3 (hours)");

    auto* co = app.add_subcommand("core", "core of a monomial ideal");
    std::string co_ideal, co_method = "mono";
    bool co_s2 = false;
    co->add_option("ideal", co_ideal, "mi{d:3, gens:[[...],...]}")->required();
    co->add_option("--method", co_method)->check(CLI::IsMember({"mono", "intersection"}))->capture_default_str();
    co->add_flag("--s2", co_s2, "assert the residual S2 hypothesis");

    auto* mo = app.add_subcommand("mono", "largest monomial ideal inside K");
    int mo_vars = 0;
    std::string mo_gens;
    mo->add_option("--vars", mo_vars, "number of x variables")->required()->check(CLI::Range(1, 48));
    mo->add_option("gens", mo_gens, "comma separated polynomials in x1..xd")->required();

    auto* ct = app.add_subcommand("content", "symbolic mono(J) and its content ideal");
    std::string ct_ideal;
    int ct_s = 0;
    bool ct_fallback = false;
    ct->add_option("ideal", ct_ideal)->required();
    ct->add_option("--s", ct_s, "number of generic elements (default: analytic spread)");
    ct->add_flag("--fallback", ct_fallback, "per-monomial colons instead of the full elimination");

    auto* sc = app.add_subcommand("shortcut", "find a reduction excluding x1^(d(delta-2)+g)");
    std::string sc_ideal;
    int sc_d = 3, sc_delta = 3;
    sc->add_option("--ideal", sc_ideal, "a single lex segment; default sweeps all");
    sc->add_option("--d-max", sc_d)->capture_default_str()->check(CLI::Range(2, 6));
    sc->add_option("--delta-max", sc_delta)->capture_default_str()->check(CLI::Range(2, 16));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    ExperimentReport rep;
    try {
        HarnessConfig cfg = make_config(g);
        if (*ex) {
            cfg.force_fallback = ex_fallback;
            rep = run_example(ex_id, cfg);
        } else if (*sw) {
            cfg.single_method = single;
            rep = long_run ? sweep_lex(long_lex_instances(), "sweep-lex long", cfg) : sweep_lex(d_max, delta_max, cfg);
        } else if (*co) {
            rep = core_command(parse_ideal_arg(co_ideal), co_method, co_s2, cfg);
        } else if (*mo) {
            rep = mono_command(mo_vars, mo_gens, cfg);
        } else if (*ct) {
            auto I = parse_ideal_arg(ct_ideal);
            if (!I.one_degree()) {
                throw ConfigError("content needs a one-degree ideal");
            }
            rep = content_command(I, ct_s, ct_fallback, cfg);
        } else if (*sc) {
            std::vector<LexInstance> list;
            if (!sc_ideal.empty()) {
                auto L = parse_ideal_arg(sc_ideal);
                if (!L.one_degree()) {
                    throw ConfigError("shortcut needs a one-degree ideal");
                }
                list.push_back({L.nvars(), L.min_degree(), static_cast<int>(L.size()),
                                ss_height_and_spread(L, true).height, L});
            } else {
                list = lex_instances(sc_d, sc_delta);
            }
            rep = shortcut_report(list, cfg);
        }
    } catch (const ConfigError& e) {
        std::cerr << "corelab: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "corelab: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExhausted& e) {
        rep.add({"run", Outcome::Skipped, "derived", std::string("budget: ") + e.what()});
    }

    const std::string text = emit_report(rep, g.format, g.timings);
    if (g.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(g.output, std::ios::binary);
        if (!out) {
            std::cerr << "corelab: cannot write " << g.output << "\n";
            return 2;
        }
        out << text;
    }
    return rep.failed() ? 1 : 0;
}
