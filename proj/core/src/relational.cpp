#include "neutrix/relational.hpp"

namespace neutrix {

namespace {

ConceptState threshold_vec(std::vector<NeutroScalar> raw, const Dynamics& dyn) {
    switch (dyn.kind) {
        case Dynamics::Kind::BinaryThreshold:
            for (auto& v : raw)
                v = v.is_pure_real() && v.real > dyn.threshold ? NeutroScalar(1) : NeutroScalar(0);
            break;
        case Dynamics::Kind::TrinaryThreshold:
            for (auto& v : raw) v = signal_scalar(ncm_threshold(v, dyn.threshold));
            break;
        case Dynamics::Kind::WeightedMaxMin:
            break;
    }
    return raw;
}

} // namespace

BidirectionalPattern frm_hidden_pattern(const ModelMatrix& E, const BipartiteState& seed,
                                        const Dynamics& dyn) {
    std::size_t seed_len = seed.side == Side::Domain ? E.rows() : E.cols();
    if (seed.values.size() != seed_len)
        throw DimensionMismatch("seed length " + std::to_string(seed.values.size()) +
                                " does not match the " +
                                (seed.side == Side::Domain ? std::string("domain") : std::string("range")) +
                                " side of a " + std::to_string(E.rows()) + "x" + std::to_string(E.cols()) +
                                " relation");
    for (std::size_t i : dyn.clamp_on)
        if (i >= seed_len) throw DimensionMismatch("clamp index out of range");
    if (dyn.threshold.sign() < 0) throw std::invalid_argument("threshold must be nonnegative");
    if (dyn.kind == Dynamics::Kind::WeightedMaxMin &&
        E.domain().kind == ValueDomain::Kind::Unnormalized)
        throw DomainViolation("combined relations are unnormalized; only sum-product dynamics accept them");

    CompositionRule rule = dyn.kind == Dynamics::Kind::WeightedMaxMin ? CompositionRule::MaxMin
                                                                      : CompositionRule::SumProduct;
    ModelMatrix Et = transpose(E);

    auto forward = [&](const ConceptState& x) { return threshold_vec(compose_row(x, E, rule), dyn); };
    auto backward = [&](const ConceptState& y) { return threshold_vec(compose_row(y, Et, rule), dyn); };
    auto clamp_seed_side = [&](ConceptState v) {
        for (std::size_t i : dyn.clamp_on) v[i] = NeutroScalar(1);
        return v;
    };

    BidirectionalPattern bp;
    bp.trajectory.push_back(seed);

    // One sweep: seed side -> other side -> back to seed side.
    ConceptState cur = seed.values;
    std::vector<std::pair<ConceptState, ConceptState>> visited; // (seed-side, other-side)
    for (std::size_t iter = 0; iter < dyn.max_iters; ++iter) {
        ConceptState other = seed.side == Side::Domain ? forward(cur) : backward(cur);
        ConceptState back =
            clamp_seed_side(seed.side == Side::Domain ? backward(other) : forward(other));
        bp.trajectory.push_back({seed.side == Side::Domain ? Side::Range : Side::Domain, other});
        bp.trajectory.push_back({seed.side, back});

        std::pair<ConceptState, ConceptState> pair{back, other};
        for (std::size_t k = visited.size(); k-- > 0;) {
            if (visited[k] == pair) {
                std::size_t gap = visited.size() - k;
                bp.kind = gap == 1 ? BidirectionalPattern::Kind::FixedPair
                                   : BidirectionalPattern::Kind::LimitCycle;
                bp.period = gap == 1 ? 0 : gap;
                bp.domain_terminal = seed.side == Side::Domain ? pair.first : pair.second;
                bp.range_terminal = seed.side == Side::Domain ? pair.second : pair.first;
                return bp;
            }
        }
        visited.push_back(std::move(pair));
        cur = back;
    }
    bp.kind = BidirectionalPattern::Kind::Diverged;
    return bp;
}

PanelPairs frim_panel_run(const IntervalModel& iv, const BipartiteState& seed, const Dynamics& dyn) {
    PanelPairs out;
    auto run_one = [&](const std::string& key, const ModelMatrix& M) {
        BidirectionalOutcome outcome;
        try {
            outcome.pattern = frm_hidden_pattern(M, seed, dyn);
        } catch (const std::exception& e) {
            outcome.error = e.what();
        }
        out.emplace(key, std::move(outcome));
    };
    for (std::size_t t = 0; t < iv.panel.members.size(); ++t)
        run_one(iv.panel.member_ids[t], iv.panel.members[t]);
    run_one("min", iv.a_min);
    run_one("max", iv.b_max);
    run_one("opt", iv.o_opt);
    run_one("avg", iv.m_avg);
    return out;
}

} // namespace neutrix
