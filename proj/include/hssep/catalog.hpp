#pragma once
// Registry of scenarios with known exact separability/PPT functions,
// measures, volumes and probabilities, plus the full-system probability
// conjectures. Every record stores the reported values verbatim; records
// whose reported probability disagrees with independent Monte Carlo
// cross-checks keep the reported value and carry mc_consistent = false.

#include "hssep/types.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hssep {

// Exact constant carried as both a numeric value and a readable formula.
struct ExactValue {
    double value = 0.0;
    std::string expr;
};

// The single diagonal-ratio combination prod(num)/prod(den) a scenario's
// S function actually depends on (1-based diagonal indices).
struct EffectiveRatio {
    std::vector<int> num;
    std::vector<int> den;
};

struct ScenarioRecord {
    std::string id;                           // parseable by ScenarioSpec::parse
    std::function<double(double)> s_exact;    // S as a function of the effective ratio; may be null
    std::string s_desc;                       // human-readable form of s_exact
    std::optional<ExactValue> c;              // z-measure of the feasible set
    std::optional<double> s_at_one;           // S at ratio 1 when only that value is known
    std::optional<ExactValue> v_tot;
    std::optional<ExactValue> v_sep;          // separable (or PPT, see ppt_only) volume
    std::optional<ExactValue> p;              // v_sep / v_tot
    std::optional<EffectiveRatio> ratio;
    std::optional<EffectiveRatio> ratio2;     // second factor for product-form S
    std::function<double(double)> s_exact2;   // second factor evaluator (with ratio2)
    std::string dual_id;                      // scenario with S_dual(v) = S(1/v)
    std::string note;
    bool trivial = false;                     // S == c everywhere
    bool ppt_only = false;                    // PPT probability, not separability (n >= 8)
    bool mc_consistent = true;                // reported p survives Monte Carlo cross-check

    ScenarioSpec spec() const { return ScenarioSpec::parse(id); }
};

const std::vector<ScenarioRecord>& all_records();
const ScenarioRecord* find_record(const std::string& id);

struct ConjectureRecord {
    std::string name;
    std::string system;                       // "2x2" or "2x3"
    FieldTag field;
    ExactValue probability;                   // conjectured full-system value
    ExactValue scale;                         // scaling constant of the ansatz fit
    std::optional<ExactValue> v_sep;
    std::vector<ExactValue> alternates;       // inferior candidate scales
    std::string note;
};

const std::vector<ConjectureRecord>& conjectures();

// Whole registry as a JSON document (records + conjectures).
std::string catalog_json();

} // namespace hssep
