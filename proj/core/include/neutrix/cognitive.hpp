#pragma once

#include "neutrix/interval.hpp"

#include <map>
#include <set>

namespace neutrix {

struct NonZeroDiagonal : std::runtime_error {
    NonZeroDiagonal() : std::runtime_error("cognitive map must have a zero diagonal") {}
};

using ConceptState = std::vector<NeutroScalar>;

/// State-vector dynamics options.
///  BinaryThreshold  — simple maps, states {0,1}, raw = sum-product, a > k -> 1.
///  TrinaryThreshold — NCM, states {0,1,I}, raw = sum-product, ncm_threshold.
///  WeightedMaxMin   — weighted maps, raw = max-min, no binarization.
/// clamp_on holds the 0-based indices forced to 1 after every step (the
/// "kept in the on state" nodes of a run).
struct Dynamics {
    enum class Kind { BinaryThreshold, TrinaryThreshold, WeightedMaxMin };
    Kind kind = Kind::WeightedMaxMin;
    Rational threshold = Rational(0);
    std::set<std::size_t> clamp_on;
    std::size_t max_iters = 1000;
};

/// Outcome of an iterated run: the full trajectory from the initial state,
/// and either the fixed point, the cycle states, or nothing (Diverged).
struct HiddenPattern {
    enum class Kind { FixedPoint, LimitCycle, Diverged };
    Kind kind = Kind::Diverged;
    std::size_t period = 0; // LimitCycle only
    std::vector<ConceptState> trajectory;
    ConceptState terminal;               // FixedPoint
    std::vector<ConceptState> cycle;     // LimitCycle

    bool is_fixed_point() const { return kind == Kind::FixedPoint; }
};

ConceptState fcm_step(const ModelMatrix& E, const ConceptState& x, const Dynamics& dyn);

HiddenPattern hidden_pattern(const ModelMatrix& E, const ConceptState& x0, const Dynamics& dyn);

/// Per-key run outcome; an engine error on one key leaves the others intact.
struct RunOutcome {
    std::optional<HiddenPattern> pattern;
    std::string error;
    bool ok() const { return pattern.has_value(); }
};

using PanelPatterns = std::map<std::string, RunOutcome>;

/// Runs every panel member plus the derived matrices; keys are the member
/// ids plus "min", "max", "opt", "avg".
PanelPatterns fcim_panel_run(const IntervalModel& iv, const ConceptState& x0, const Dynamics& dyn);

ConceptState parse_state(const std::string& csv);
std::string print_state(const ConceptState& s);

} // namespace neutrix
