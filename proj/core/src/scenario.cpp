#include "neutrix/scenario.hpp"

#include <cstdio>

namespace neutrix {

using nlohmann::json;

ScenarioKind parse_scenario_kind(const std::string& name) {
    if (name == "fcim") return ScenarioKind::Fcim;
    if (name == "frim") return ScenarioKind::Frim;
    if (name == "faim") return ScenarioKind::Faim;
    if (name == "ibam") return ScenarioKind::Ibam;
    if (name == "nbam") return ScenarioKind::Nbam;
    if (name == "ncm") return ScenarioKind::Ncm;
    if (name == "fre") return ScenarioKind::Fre;
    throw ConfigError("unknown scenario kind '" + name + "'");
}

std::string scenario_kind_name(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::Fcim: return "fcim";
        case ScenarioKind::Frim: return "frim";
        case ScenarioKind::Faim: return "faim";
        case ScenarioKind::Ibam: return "ibam";
        case ScenarioKind::Nbam: return "nbam";
        case ScenarioKind::Ncm: return "ncm";
        case ScenarioKind::Fre: return "fre";
    }
    return "?";
}

std::string tool_version() { return "0.1.0"; }

std::string content_digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

json scalar_json(const NeutroScalar& v) {
    return json{{"exact", print_scalar(v)}, {"display", display_scalar(v)}};
}

json state_json(const ConceptState& s) {
    json exact = json::array();
    json display = json::array();
    for (const auto& v : s) {
        exact.push_back(print_scalar(v));
        display.push_back(display_scalar(v));
    }
    return json{{"exact", exact}, {"display", display}};
}

json matrix_json(const ModelMatrix& M) {
    json grid = json::array();
    json display = json::array();
    for (std::size_t r = 0; r < M.rows(); ++r) {
        json row = json::array();
        json drow = json::array();
        for (std::size_t c = 0; c < M.cols(); ++c) {
            row.push_back(print_scalar(M.at(r, c)));
            drow.push_back(display_scalar(M.at(r, c)));
        }
        grid.push_back(row);
        display.push_back(drow);
    }
    json j{{"rows", M.rows()}, {"cols", M.cols()}, {"entries", grid}, {"display", display}};
    if (!M.row_labels.empty()) j["row_labels"] = M.row_labels;
    if (!M.col_labels.empty()) j["col_labels"] = M.col_labels;
    return j;
}

json interval_json(const IntervalModel& iv) {
    return json{{"min", matrix_json(iv.a_min)},
                {"max", matrix_json(iv.b_max)},
                {"opt", matrix_json(iv.o_opt)},
                {"avg", matrix_json(iv.m_avg)}};
}

json signals_json(const SignalVector& s) {
    std::string tokens;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (i) tokens += ' ';
        tokens += signal_token(s.values[i]);
    }
    return tokens;
}

const char* pattern_kind_name(HiddenPattern::Kind k) {
    switch (k) {
        case HiddenPattern::Kind::FixedPoint: return "fixed_point";
        case HiddenPattern::Kind::LimitCycle: return "limit_cycle";
        case HiddenPattern::Kind::Diverged: return "diverged";
    }
    return "?";
}

json hidden_pattern_json(const HiddenPattern& hp, bool trace) {
    json j{{"kind", pattern_kind_name(hp.kind)},
           {"iterations", hp.trajectory.empty() ? 0 : hp.trajectory.size() - 1}};
    if (hp.kind == HiddenPattern::Kind::FixedPoint) j["terminal"] = state_json(hp.terminal);
    if (hp.kind == HiddenPattern::Kind::LimitCycle) {
        j["period"] = hp.period;
        json cyc = json::array();
        for (const auto& s : hp.cycle) cyc.push_back(state_json(s));
        j["cycle"] = cyc;
    }
    if (trace) {
        json t = json::array();
        for (const auto& s : hp.trajectory) t.push_back(state_json(s));
        j["trajectory"] = t;
    }
    return j;
}

json bidirectional_json(const BidirectionalPattern& bp, bool trace) {
    json j{{"kind", bp.kind == BidirectionalPattern::Kind::FixedPair ? "fixed_pair"
                    : bp.kind == BidirectionalPattern::Kind::LimitCycle ? "limit_cycle"
                                                                        : "diverged"}};
    j["domain_terminal"] = state_json(bp.domain_terminal);
    j["range_terminal"] = state_json(bp.range_terminal);
    if (bp.kind == BidirectionalPattern::Kind::LimitCycle) j["period"] = bp.period;
    if (trace) {
        json t = json::array();
        for (const auto& s : bp.trajectory)
            t.push_back(json{{"side", s.side == Side::Domain ? "domain" : "range"},
                             {"state", state_json(s.values)}});
        j["trajectory"] = t;
    }
    return j;
}

json signal_pair_json(const FixedSignalPair& fsp, bool trace) {
    json j{{"kind", fsp.kind == FixedSignalPair::Kind::FixedPair ? "fixed_pair"
                    : fsp.kind == FixedSignalPair::Kind::LimitCycle ? "limit_cycle"
                                                                    : "diverged"},
           {"row_signal", signals_json(fsp.row_signal)},
           {"col_signal", signals_json(fsp.col_signal)},
           {"sweeps", fsp.sweeps}};
    if (fsp.kind == FixedSignalPair::Kind::LimitCycle) j["period"] = fsp.period;
    if (trace) {
        json t = json::array();
        for (const auto& rec : fsp.trajectory) {
            json raw = json::array();
            for (const auto& v : rec.raw) raw.push_back(print_scalar(v));
            t.push_back(json{{"raw", raw}, {"signal", signals_json(rec.signal)}});
        }
        j["trajectory"] = t;
    }
    return j;
}

json fit_json(const FitVector& fit) {
    json exact = json::array();
    json display = json::array();
    for (const auto& v : fit.values) {
        exact.push_back(v.to_string());
        display.push_back(v.to_display());
    }
    return json{{"side", fit.side == FitVector::Side::Row ? "row" : "column"},
                {"exact", exact},
                {"display", display}};
}

ExpertPanel make_panel(const Scenario& sc) {
    if (sc.panel.empty()) throw ConfigError("scenario has an empty panel");
    ExpertPanel panel;
    for (std::size_t i = 0; i < sc.panel.size(); ++i) {
        panel.members.push_back(sc.panel[i].matrix);
        panel.member_ids.push_back(i < sc.panel_ids.size() ? sc.panel_ids[i]
                                                           : "M" + std::to_string(i + 1));
    }
    return panel;
}

std::set<std::size_t> default_clamp(const ConceptState& state) {
    std::set<std::size_t> on;
    for (std::size_t i = 0; i < state.size(); ++i)
        if (!state[i].is_zero()) on.insert(i);
    return on;
}

Side pick_side(const Scenario& sc, std::size_t len, std::size_t rows, std::size_t cols) {
    if (sc.seed_side) {
        std::size_t want = *sc.seed_side == Side::Domain ? rows : cols;
        if (len != want) throw ConfigError("state length does not match the requested side");
        return *sc.seed_side;
    }
    if (len == rows && len == cols)
        throw ConfigError("square relation: pass the seed side explicitly");
    if (len == rows) return Side::Domain;
    if (len == cols) return Side::Range;
    throw ConfigError("state length matches neither side of the relation");
}

json run_fre(const Scenario& sc, bool& empty_out) {
    json j;
    j["rule"] = sc.rule == CompositionRule::MaxMin ? "maxmin" : "maxprod";
    if (sc.fre_p && sc.fre_q && !sc.fre_r) {
        ModelMatrix R = forward(sc.fre_p->matrix, sc.fre_q->matrix, sc.rule);
        j["status"] = "unique_forward";
        j["result"] = matrix_json(R);
        return j;
    }
    if (!sc.fre_q || !sc.fre_r)
        throw ConfigError("fre scenario needs either P and Q (forward) or Q and R (solve)");
    FreSolution sol = max_solution_matrix(sc.fre_q->matrix, sc.fre_r->matrix, sc.rule);
    j["status"] = sol.status == FreSolution::Status::MaxSolution ? "max_solution" : "empty";
    j["residual"] = sol.residual.to_string();
    if (sol.p_hat) j["p_hat"] = matrix_json(*sol.p_hat);
    empty_out = sol.status == FreSolution::Status::Empty;
    return j;
}

} // namespace

RunReport run_scenario(const Scenario& sc) {
    RunReport report;
    json& j = report.body;
    j["tool"] = json{{"name", "neutrix"}, {"version", tool_version()}};
    j["model"] = scenario_kind_name(sc.kind);
    json inputs = json::array();
    for (std::size_t i = 0; i < sc.panel_digests.size(); ++i)
        inputs.push_back(json{{"id", i < sc.panel_ids.size() ? sc.panel_ids[i] : ""},
                              {"digest", sc.panel_digests[i]}});
    j["inputs"] = inputs;

    if (sc.kind == ScenarioKind::Fre) {
        j["fre"] = run_fre(sc, report.fre_empty);
        return report;
    }

    ExpertPanel panel = make_panel(sc);
    BuildOptions opts;
    opts.require_zero_diagonal = sc.kind == ScenarioKind::Fcim || sc.kind == ScenarioKind::Ncm;
    IntervalModel iv = build_interval(std::move(panel), sc.order, opts);
    j["interval"] = interval_json(iv);

    if (sc.states.empty()) return report;

    json runs = json::array();
    for (const auto& state : sc.states) {
        json entry;
        entry["state"] = state_json(state);
        json results;
        switch (sc.kind) {
            case ScenarioKind::Fcim:
            case ScenarioKind::Ncm: {
                Dynamics dyn;
                dyn.kind = sc.kind == ScenarioKind::Ncm ? Dynamics::Kind::TrinaryThreshold
                                                        : Dynamics::Kind::WeightedMaxMin;
                dyn.threshold = sc.threshold;
                dyn.clamp_on = sc.clamp ? *sc.clamp : default_clamp(state);
                dyn.max_iters = sc.max_iters;
                for (const auto& [key, outcome] : fcim_panel_run(iv, state, dyn))
                    results[key] = outcome.ok() ? hidden_pattern_json(*outcome.pattern, sc.trace)
                                                : json{{"error", outcome.error}};
                break;
            }
            case ScenarioKind::Frim: {
                Dynamics dyn;
                dyn.kind = Dynamics::Kind::WeightedMaxMin;
                dyn.max_iters = sc.max_iters;
                BipartiteState seed;
                seed.side = pick_side(sc, state.size(), iv.rows(), iv.cols());
                seed.values = state;
                dyn.clamp_on = sc.clamp ? *sc.clamp : default_clamp(state);
                for (const auto& [key, outcome] : frim_panel_run(iv, seed, dyn))
                    results[key] = outcome.ok() ? bidirectional_json(*outcome.pattern, sc.trace)
                                                : json{{"error", outcome.error}};
                break;
            }
            case ScenarioKind::Faim: {
                FitVector fit;
                Side side = pick_side(sc, state.size(), iv.rows(), iv.cols());
                fit.side = side == Side::Domain ? FitVector::Side::Row : FitVector::Side::Column;
                for (const auto& v : state) {
                    if (!v.is_pure_real()) throw ConfigError("fit vectors are pure fuzzy values");
                    fit.values.push_back(v.real);
                }
                for (const auto& [key, outcome] : fam_panel_run(iv, fit))
                    results[key] = outcome.ok() ? fit_json(*outcome.recalled)
                                                : json{{"error", outcome.error}};
                break;
            }
            case ScenarioKind::Ibam:
            case ScenarioKind::Nbam: {
                BamSeed seed;
                Side side = pick_side(sc, state.size(), iv.rows(), iv.cols());
                seed.side = side == Side::Domain ? BamSeed::Side::Row : BamSeed::Side::Column;
                seed.activation = state;
                BamOptions bopts;
                bopts.retention = sc.retention;
                bopts.max_sweeps = sc.max_iters;
                for (const auto& [key, outcome] : bam_panel_run(iv, seed, bopts))
                    results[key] = outcome.ok() ? signal_pair_json(*outcome.pair, sc.trace)
                                                : json{{"error", outcome.error}};
                break;
            }
            case ScenarioKind::Fre:
                break;
        }
        entry["results"] = results;
        runs.push_back(entry);
    }
    j["runs"] = runs;
    return report;
}

namespace {

// One table row per result key, one column per concept.
void markdown_state_table(std::string& out, const json& results,
                          const std::vector<std::string>& value_keys) {
    std::size_t width = 0;
    for (const auto& [key, val] : results.items()) {
        (void)key;
        for (const auto& vk : value_keys)
            if (val.contains(vk)) {
                const json& cells = val[vk].contains("display") ? val[vk]["display"] : val[vk];
                width = cells.size();
                break;
            }
        if (width) break;
    }
    out += "| key |";
    for (std::size_t c = 0; c < width; ++c) out += " c" + std::to_string(c + 1) + " |";
    out += " kind |\n|---|";
    for (std::size_t c = 0; c < width; ++c) out += "---|";
    out += "---|\n";
    for (const auto& [key, val] : results.items()) {
        out += "| " + key + " |";
        if (val.contains("error")) {
            for (std::size_t c = 0; c < width; ++c) out += " |";
            out += " error: " + val["error"].get<std::string>() + " |\n";
            continue;
        }
        const json* cells = nullptr;
        for (const auto& vk : value_keys)
            if (val.contains(vk)) {
                cells = val[vk].contains("display") ? &val[vk]["display"] : &val[vk];
                break;
            }
        if (cells)
            for (const auto& cell : *cells) out += " " + cell.get<std::string>() + " |";
        else
            for (std::size_t c = 0; c < width; ++c) out += " |";
        out += " " + (val.contains("kind") ? val["kind"].get<std::string>() : std::string("recalled")) +
               " |\n";
    }
}

void markdown_signal_table(std::string& out, const json& results) {
    out += "| key | row signal | col signal | kind |\n|---|---|---|---|\n";
    for (const auto& [key, val] : results.items()) {
        if (val.contains("error")) {
            out += "| " + key + " | | | error: " + val["error"].get<std::string>() + " |\n";
            continue;
        }
        out += "| " + key + " | " + val["row_signal"].get<std::string>() + " | " +
               val["col_signal"].get<std::string>() + " | " + val["kind"].get<std::string>() + " |\n";
    }
}

} // namespace

std::string emit_report(const RunReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) return report.body.dump(2) + "\n";

    const json& j = report.body;
    std::string out = "# " + j["model"].get<std::string>() + " run\n\n";
    if (j.contains("fre")) {
        const json& f = j["fre"];
        out += "status: " + f["status"].get<std::string>() + "\n";
        if (f.contains("residual")) out += "residual: " + f["residual"].get<std::string>() + "\n";
        const char* key = f.contains("p_hat") ? "p_hat" : f.contains("result") ? "result" : nullptr;
        if (key) {
            out += "\n## " + std::string(key) + "\n\n";
            for (const auto& row : f[key]["display"]) {
                out += "|";
                for (const auto& cell : row) out += " " + cell.get<std::string>() + " |";
                out += "\n";
            }
        }
        return out;
    }
    if (j.contains("runs")) {
        for (const auto& run : j["runs"]) {
            out += "## state " + run["state"]["exact"].dump() + "\n\n";
            const json& results = run["results"];
            bool pairs = false;
            for (const auto& [key, val] : results.items()) {
                (void)key;
                pairs = val.contains("row_signal");
                break;
            }
            if (pairs)
                markdown_signal_table(out, results);
            else
                markdown_state_table(out, results, {"terminal", "range_terminal", "display"});
            out += "\n";
        }
    }
    return out;
}

} // namespace neutrix
