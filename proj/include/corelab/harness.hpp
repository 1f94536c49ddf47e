#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "corelab/core.hpp"

// Scripted example runs, lex-segment sweeps and reports.
namespace corelab {

struct HarnessConfig {
    PipelineConfig pipeline;
    int seeds = 5;
    bool force_fallback = false; // skip the full elimination in ex5_9
    bool single_method = false;  // sweep: core_via_mono only
    int threads = 1;
    bool trace = false; // keep per-instance stabilization traces
};

// CORELAB_THREADS, clamped to [1, 64]; 1 when unset or malformed.
int threads_from_env();

enum class Outcome { Pass, Fail, Skipped, Open, Inconclusive };
const char* outcome_name(Outcome o);

struct Verdict {
    std::string check;
    Outcome outcome = Outcome::Pass;
    // Where the expected value comes from: "published" for ideals printed
    // with the example, "derived" for values from an independent computation.
    std::string basis;
    std::string detail;
};

struct ExperimentReport {
    std::string command;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    nlohmann::ordered_json instances = nlohmann::ordered_json::array();
    std::vector<Verdict> verdicts;
    std::vector<std::pair<std::string, double>> timings; // seconds

    void verdict(std::string check, bool ok, std::string basis, std::string detail = {});
    void add(Verdict v) { verdicts.push_back(std::move(v)); }
    bool failed() const;
    std::size_t count(Outcome o) const;

    nlohmann::ordered_json to_json(bool with_timings) const;
    std::string to_text(bool with_timings) const;
};

nlohmann::ordered_json config_json(const HarnessConfig& cfg);

// "json" or "text"; throws std::invalid_argument on anything else.
std::string emit_report(const ExperimentReport& r, const std::string& format, bool with_timings);

// ex4_9, ex4_10, ex5_9.
ExperimentReport run_example(const std::string& id, const HarnessConfig& cfg);
std::vector<std::string> example_ids();

MonomialIdeal example_ideal(const std::string& id);
MonomialIdeal graded_core_of_ex5_9();

struct LexInstance {
    int d = 0;
    int delta = 0;
    int k = 0; // segment length
    int g = 0; // height
    MonomialIdeal L{1};
};

// One-degree lex segments with 2 <= d <= d_max, 2 <= delta <= delta_max and
// height >= 2, ordered by (d, delta, k).
std::vector<LexInstance> lex_instances(int d_max, int delta_max);

// d(delta - 2) + g - delta + 1; may be negative for tiny cases.
int lex_formula_exponent(int d, int delta, int g);

ExperimentReport sweep_lex(int d_max, int delta_max, const HarnessConfig& cfg);
ExperimentReport sweep_lex(const std::vector<LexInstance>& list, const std::string& label, const HarnessConfig& cfg);

// The larger ranges: d = 4, delta <= 12; d = 5, delta <= 5; d = 6, delta <= 3.
std::vector<LexInstance> long_lex_instances();

struct ShortcutResult {
    Outcome outcome = Outcome::Inconclusive;
    std::string shape;         // which candidate family produced J
    std::vector<PPoly> J;      // in k[x_1..x_d]
    int exponent = 0;          // d(delta - 2) + g
    bool via_colon = false;    // excluded from J^d : L^{d-1} rather than J
    std::optional<Exponent> alpha; // generator of L^{d-1} with x1^e alpha not in J^d
    std::vector<std::string> tried;
};

// Looks for a reduction J of L with x1^e outside J, or outside J^d : L^{d-1}.
ShortcutResult shortcut_check(const MonomialIdeal& L, const HarnessConfig& cfg, int random_tries = 12);

ExperimentReport shortcut_report(const std::vector<LexInstance>& instances, const HarnessConfig& cfg);

// Runs fn(i) for i in [0, n) on up to `threads` workers; results are placed by
// index so the output does not depend on scheduling.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

} // namespace corelab
