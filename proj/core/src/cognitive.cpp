#include "neutrix/cognitive.hpp"

#include <sstream>

namespace neutrix {

namespace {

void check_map(const ModelMatrix& E, const ConceptState& x, const Dynamics& dyn) {
    if (E.rows() != E.cols()) throw DimensionMismatch("cognitive map must be square");
    if (!E.has_zero_diagonal()) throw NonZeroDiagonal{};
    if (x.size() != E.rows())
        throw DimensionMismatch("state length " + std::to_string(x.size()) + " does not match map order " +
                                std::to_string(E.rows()));
    for (std::size_t i : dyn.clamp_on)
        if (i >= x.size()) throw DimensionMismatch("clamp index out of range");
    if (dyn.threshold.sign() < 0) throw std::invalid_argument("threshold must be nonnegative");
    if (dyn.kind == Dynamics::Kind::WeightedMaxMin && E.domain().kind == ValueDomain::Kind::Unnormalized)
        throw DomainViolation("combined maps are unnormalized; only sum-product dynamics accept them");
}

ConceptState threshold_state(std::vector<NeutroScalar> raw, const Dynamics& dyn) {
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

ConceptState fcm_step(const ModelMatrix& E, const ConceptState& x, const Dynamics& dyn) {
    check_map(E, x, dyn);
    CompositionRule rule = dyn.kind == Dynamics::Kind::WeightedMaxMin ? CompositionRule::MaxMin
                                                                      : CompositionRule::SumProduct;
    ConceptState next = threshold_state(compose_row(x, E, rule), dyn);
    for (std::size_t i : dyn.clamp_on) next[i] = NeutroScalar(1);
    return next;
}

HiddenPattern hidden_pattern(const ModelMatrix& E, const ConceptState& x0, const Dynamics& dyn) {
    HiddenPattern hp;
    hp.trajectory.push_back(x0);
    for (std::size_t iter = 0; iter < dyn.max_iters; ++iter) {
        ConceptState next = fcm_step(E, hp.trajectory.back(), dyn);
        // First repeat of any visited state ends the run: a repeat of the
        // immediately preceding state is a fixed point, an earlier one is a
        // limit cycle whose period is the gap.
        for (std::size_t k = hp.trajectory.size(); k-- > 0;) {
            if (hp.trajectory[k] == next) {
                std::size_t gap = hp.trajectory.size() - k;
                hp.trajectory.push_back(next);
                if (gap == 1) {
                    hp.kind = HiddenPattern::Kind::FixedPoint;
                    hp.terminal = std::move(next);
                } else {
                    hp.kind = HiddenPattern::Kind::LimitCycle;
                    hp.period = gap;
                    hp.cycle.assign(hp.trajectory.begin() + static_cast<std::ptrdiff_t>(k),
                                    hp.trajectory.end() - 1);
                }
                return hp;
            }
        }
        hp.trajectory.push_back(std::move(next));
    }
    hp.kind = HiddenPattern::Kind::Diverged;
    return hp;
}

PanelPatterns fcim_panel_run(const IntervalModel& iv, const ConceptState& x0, const Dynamics& dyn) {
    PanelPatterns out;
    auto run_one = [&](const std::string& key, const ModelMatrix& M) {
        RunOutcome outcome;
        try {
            outcome.pattern = hidden_pattern(M, x0, dyn);
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

ConceptState parse_state(const std::string& csv) {
    ConceptState out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty()) out.push_back(parse_scalar(token));
    return out;
}

std::string print_state(const ConceptState& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += print_scalar(s[i]);
    }
    return out;
}

} // namespace neutrix
