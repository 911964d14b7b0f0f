#pragma once

#include "neutrix/cognitive.hpp"

namespace neutrix {

/// Which side of a rectangular relation a state vector lives on. Domain
/// states have length rows(E); Range states length cols(E).
enum class Side { Domain, Range };

struct BipartiteState {
    Side side = Side::Domain;
    ConceptState values;
};

/// Outcome of a bidirectional run: terminals for both sides, and the
/// alternating trajectory starting at the seed.
struct BidirectionalPattern {
    enum class Kind { FixedPair, LimitCycle, Diverged };
    Kind kind = Kind::Diverged;
    std::size_t period = 0;
    ConceptState domain_terminal;
    ConceptState range_terminal;
    std::vector<BipartiteState> trajectory;

    bool is_fixed_pair() const { return kind == Kind::FixedPair; }
};

/// Alternates x -> xE (range) and y -> yE^T (domain), thresholding per the
/// dynamics kind; clamp_on pins coordinates of the seed's side. The stop
/// test is on the (domain, range) pair, so a single stabilized side is not
/// mistaken for a fixed pair.
BidirectionalPattern frm_hidden_pattern(const ModelMatrix& E, const BipartiteState& seed,
                                        const Dynamics& dyn);

struct BidirectionalOutcome {
    std::optional<BidirectionalPattern> pattern;
    std::string error;
    bool ok() const { return pattern.has_value(); }
};

using PanelPairs = std::map<std::string, BidirectionalOutcome>;

/// Per-member plus min/max/opt/avg bidirectional runs.
PanelPairs frim_panel_run(const IntervalModel& iv, const BipartiteState& seed, const Dynamics& dyn);

} // namespace neutrix
