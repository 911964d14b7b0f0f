#include "neutrix/associative.hpp"

namespace neutrix {

FitVector fam_recall(const ModelMatrix& M, const FitVector& fit) {
    std::size_t expected = fit.side == FitVector::Side::Row ? M.rows() : M.cols();
    if (fit.values.size() != expected)
        throw DimensionMismatch("fit vector length " + std::to_string(fit.values.size()) +
                                " does not match its side of a " + std::to_string(M.rows()) + "x" +
                                std::to_string(M.cols()) + " matrix");
    std::vector<NeutroScalar> x;
    x.reserve(fit.values.size());
    for (const auto& v : fit.values) x.emplace_back(v);

    std::vector<NeutroScalar> raw =
        fit.side == FitVector::Side::Row ? compose_row(x, M, CompositionRule::MaxMin)
                                         : compose_row(x, transpose(M), CompositionRule::MaxMin);
    FitVector out;
    out.side = fit.side == FitVector::Side::Row ? FitVector::Side::Column : FitVector::Side::Row;
    out.values.reserve(raw.size());
    for (const auto& v : raw) out.values.push_back(v.real);
    return out;
}

std::string print_signals(const SignalVector& s) {
    std::string out;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (i) out += ' ';
        out += signal_token(s.values[i]);
    }
    return out;
}

namespace {

SignalValue threshold_signal(const NeutroScalar& x, const Rational& u, bool retention,
                             SignalValue previous) {
    if (retention && x.is_pure_real() && x.real == u) return previous;
    // Shift by the threshold so the zero-based signal rule applies.
    return bam_signal({x.real - u, x.indet});
}

std::vector<SignalValue> apply_signals(const std::vector<NeutroScalar>& raw, const Rational& u,
                                       bool retention, const std::vector<SignalValue>& previous) {
    std::vector<SignalValue> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        out[i] = threshold_signal(raw[i], u, retention,
                                  previous.empty() ? SignalValue::Off : previous[i]);
    return out;
}

std::vector<NeutroScalar> to_scalars(const std::vector<SignalValue>& sig) {
    std::vector<NeutroScalar> out;
    out.reserve(sig.size());
    for (SignalValue s : sig) out.push_back(signal_scalar(s));
    return out;
}

} // namespace

FixedSignalPair bam_converge(const ModelMatrix& M, const BamSeed& seed, const BamOptions& opts) {
    std::size_t expected = seed.side == BamSeed::Side::Row ? M.rows() : M.cols();
    if (seed.activation.size() != expected)
        throw DimensionMismatch("seed length " + std::to_string(seed.activation.size()) +
                                " does not match its side of a " + std::to_string(M.rows()) + "x" +
                                std::to_string(M.cols()) + " matrix");
    ModelMatrix Mt = transpose(M);

    FixedSignalPair fsp;
    SignalVector row{SignalVector::Side::Row, {}};
    SignalVector col{SignalVector::Side::Column, {}};

    const Rational& seed_u = seed.side == BamSeed::Side::Row ? opts.row_threshold : opts.col_threshold;
    std::vector<SignalValue> seed_sig = apply_signals(seed.activation, seed_u, false, {});
    if (seed.side == BamSeed::Side::Row)
        row.values = seed_sig;
    else
        col.values = seed_sig;
    fsp.trajectory.push_back({seed.activation, seed.side == BamSeed::Side::Row ? row : col});

    std::vector<std::pair<std::vector<SignalValue>, std::vector<SignalValue>>> visited;
    for (std::size_t sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        if (seed.side == BamSeed::Side::Row) {
            auto raw_col = compose_row(to_scalars(row.values), M, CompositionRule::SumProduct);
            col.values = apply_signals(raw_col, opts.col_threshold, opts.retention, col.values);
            fsp.trajectory.push_back({raw_col, col});
            auto raw_row = compose_row(to_scalars(col.values), Mt, CompositionRule::SumProduct);
            row.values = apply_signals(raw_row, opts.row_threshold, opts.retention, row.values);
            fsp.trajectory.push_back({raw_row, row});
        } else {
            auto raw_row = compose_row(to_scalars(col.values), Mt, CompositionRule::SumProduct);
            row.values = apply_signals(raw_row, opts.row_threshold, opts.retention, row.values);
            fsp.trajectory.push_back({raw_row, row});
            auto raw_col = compose_row(to_scalars(row.values), M, CompositionRule::SumProduct);
            col.values = apply_signals(raw_col, opts.col_threshold, opts.retention, col.values);
            fsp.trajectory.push_back({raw_col, col});
        }
        fsp.sweeps = sweep + 1;

        std::pair<std::vector<SignalValue>, std::vector<SignalValue>> pair{row.values, col.values};
        for (std::size_t k = visited.size(); k-- > 0;) {
            if (visited[k] == pair) {
                std::size_t gap = visited.size() - k;
                fsp.kind = gap == 1 ? FixedSignalPair::Kind::FixedPair
                                    : FixedSignalPair::Kind::LimitCycle;
                fsp.period = gap == 1 ? 0 : gap;
                fsp.row_signal = row;
                fsp.col_signal = col;
                return fsp;
            }
        }
        visited.push_back(std::move(pair));
    }
    fsp.kind = FixedSignalPair::Kind::Diverged;
    fsp.row_signal = row;
    fsp.col_signal = col;
    return fsp;
}

PanelBamResults bam_panel_run(const IntervalModel& iv, const BamSeed& seed, const BamOptions& opts) {
    PanelBamResults out;
    auto run_one = [&](const std::string& key, const ModelMatrix& M) {
        BamOutcome outcome;
        try {
            outcome.pair = bam_converge(M, seed, opts);
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

PanelFamResults fam_panel_run(const IntervalModel& iv, const FitVector& fit) {
    PanelFamResults out;
    auto run_one = [&](const std::string& key, const ModelMatrix& M) {
        FamOutcome outcome;
        try {
            outcome.recalled = fam_recall(M, fit);
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

PanelRunResult panel_run(const IntervalModel& iv, AssociativeEngine engine,
                         const FitVector* fit, const BamSeed* seed, const BamOptions& opts) {
    if (engine == AssociativeEngine::Fam) {
        if (!fit) throw std::invalid_argument("FAM panel run needs a fit vector");
        return fam_panel_run(iv, *fit);
    }
    if (!seed) throw std::invalid_argument("BAM panel run needs a seed activation");
    return bam_panel_run(iv, *seed, opts);
}

std::vector<FixedSignalPair> stack_converge(const std::vector<ModelMatrix>& components,
                                            const std::vector<BamSeed>& seeds,
                                            const BamOptions& opts) {
    if (components.size() != seeds.size())
        throw DimensionMismatch("seed count does not match component count");
    std::vector<FixedSignalPair> out;
    out.reserve(components.size());
    for (std::size_t i = 0; i < components.size(); ++i) {
        try {
            out.push_back(bam_converge(components[i], seeds[i], opts));
        } catch (const std::exception& e) {
            throw StackComponentError(i, e.what());
        }
    }
    return out;
}

std::vector<FixedSignalPair> stack_converge(const IntervalStack& stack, const std::string& key,
                                            const std::vector<BamSeed>& seeds,
                                            const BamOptions& opts) {
    std::vector<ModelMatrix> mats;
    mats.reserve(stack.components.size());
    for (const auto& comp : stack.components) {
        if (key == "min") mats.push_back(comp.a_min);
        else if (key == "max") mats.push_back(comp.b_max);
        else if (key == "opt") mats.push_back(comp.o_opt);
        else if (key == "avg") mats.push_back(comp.m_avg);
        else {
            bool found = false;
            for (std::size_t t = 0; t < comp.panel.members.size(); ++t)
                if (comp.panel.member_ids[t] == key) {
                    mats.push_back(comp.panel.members[t]);
                    found = true;
                    break;
                }
            if (!found) throw std::invalid_argument("unknown stack member key '" + key + "'");
        }
    }
    return stack_converge(mats, seeds, opts);
}

} // namespace neutrix
