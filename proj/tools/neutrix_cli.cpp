// Command line front end: validate matrix files, build intervals from expert
// panels, run the inference engines, and re-render saved reports.
//
// Exit codes: 0 success, 1 input error, 2 engine error, 3 empty relational
// equation solution.

#include "neutrix/scenario.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace neutrix;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitEngine = 2;
constexpr int kExitEmptyFre = 3;

std::string resolve_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (const char* dir = std::getenv("NEUTRIX_FIXTURES")) {
        fs::path candidate = fs::path(dir) / path;
        if (fs::exists(candidate)) return candidate.string();
    }
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

struct LoadedPanel {
    std::vector<MatrixDocument> docs;
    std::vector<std::string> ids;
    std::vector<std::string> digests;
};

LoadedPanel load_panel(const std::vector<std::string>& files) {
    LoadedPanel panel;
    for (const auto& f : files) {
        std::string path = resolve_path(f);
        std::string text = slurp(path);
        panel.docs.push_back(parse_matrix_document(text));
        panel.ids.push_back(stem_of(path));
        panel.digests.push_back(content_digest(text));
    }
    return panel;
}

OrderMode parse_order(const std::string& name) {
    if (name == "usual") return OrderMode::Usual;
    if (name == "pseudo-real") return OrderMode::PseudoReal;
    if (name == "pseudo-neutro") return OrderMode::PseudoNeutrosophic;
    throw ConfigError("unknown order mode '" + name + "'");
}

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "md") return ReportFormat::Markdown;
    throw ConfigError("unknown format '" + name + "'");
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ConfigError("cannot write '" + out_path + "'");
    out << text;
}

std::set<std::size_t> parse_clamp(const std::string& csv) {
    std::set<std::size_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        long v = std::stol(tok);
        if (v < 1) throw ConfigError("clamp indices are 1-based");
        out.insert(static_cast<std::size_t>(v - 1));
    }
    return out;
}

int run_validate(const std::vector<std::string>& files) {
    bool all_ok = true;
    for (const auto& f : files) {
        try {
            MatrixDocument doc = parse_matrix_document(slurp(resolve_path(f)));
            std::cout << f << ": ok (" << model_kind_name(doc.kind) << " "
                      << doc.matrix.rows() << "x" << doc.matrix.cols() << ")\n";
        } catch (const std::exception& e) {
            std::cout << f << ": invalid: " << e.what() << "\n";
            all_ok = false;
        }
    }
    return all_ok ? kExitOk : kExitInput;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy and neutrosophic interval-matrix models"};
    app.require_subcommand(1);

    // validate
    std::vector<std::string> validate_files;
    auto* validate = app.add_subcommand("validate", "parse and check matrix files");
    validate->add_option("files", validate_files, "matrix files")->required();

    // interval build
    auto* interval = app.add_subcommand("interval", "interval-of-matrices operations");
    interval->require_subcommand(1);
    auto* interval_build = interval->add_subcommand("build", "build min/max/opt/avg from a panel");
    std::vector<std::string> iv_experts;
    std::string iv_order = "usual", iv_format = "json", iv_out;
    interval_build->add_option("--experts", iv_experts, "panel matrix files")
        ->required()
        ->delimiter(',');
    interval_build->add_option("--order", iv_order, "usual|pseudo-real|pseudo-neutro");
    interval_build->add_option("--format", iv_format, "json|md");
    interval_build->add_option("-o,--output", iv_out, "output file (default stdout)");

    // run <model>
    auto* run = app.add_subcommand("run", "run an inference model over a panel");
    run->require_subcommand(1);
    std::vector<std::string> run_experts;
    std::vector<std::string> run_states;
    std::string run_order = "usual", run_format = "json", run_out, run_clamp = "auto";
    std::string run_side, run_threshold = "0", run_rule = "maxmin";
    std::string fre_p, fre_q, fre_r;
    bool run_retention = false, run_trace = false;
    std::size_t run_max_iters = 1000;
    std::vector<CLI::App*> models;
    for (const char* name : {"fcim", "frim", "faim", "ibam", "nbam", "ncm", "fre"}) {
        auto* m = run->add_subcommand(name);
        if (std::string(name) != "fre") {
            m->add_option("--experts", run_experts, "panel matrix files")->required()->delimiter(',');
            m->add_option("--state", run_states, "initial state, comma-separated scalar tokens")
                ->required();
        } else {
            m->add_option("--p", fre_p, "known left matrix (forward evaluation)");
            m->add_option("--q", fre_q, "known relation matrix")->required();
            m->add_option("--r", fre_r, "target matrix (solve for the greatest left factor)");
            m->add_option("--rule", run_rule, "maxmin|maxprod");
        }
        m->add_option("--order", run_order, "usual|pseudo-real|pseudo-neutro");
        m->add_option("--clamp", run_clamp, "1-based indices held on, or 'auto'/'none'");
        m->add_option("--threshold", run_threshold, "threshold for trinary dynamics");
        m->add_option("--side", run_side, "domain|range seed side for rectangular models");
        m->add_flag("--retention", run_retention, "keep the previous signal at exact threshold");
        m->add_option("--max-iters", run_max_iters, "iteration guard");
        m->add_flag("--trace", run_trace, "include full trajectories in the report");
        m->add_option("--format", run_format, "json|md");
        m->add_option("-o,--output", run_out, "output file (default stdout)");
        models.push_back(m);
    }

    // report
    auto* report_cmd = app.add_subcommand("report", "re-render a saved json report");
    std::string report_file, report_format = "md", report_out;
    report_cmd->add_option("file", report_file, "report json produced by run")->required();
    report_cmd->add_option("--format", report_format, "json|md");
    report_cmd->add_option("-o,--output", report_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return run_validate(validate_files);

        if (*interval_build) {
            LoadedPanel loaded = load_panel(iv_experts);
            Scenario sc;
            sc.kind = loaded.docs.front().kind == ModelKind::Fcm ||
                              loaded.docs.front().kind == ModelKind::Ncm
                          ? ScenarioKind::Fcim
                          : ScenarioKind::Frim;
            sc.panel = std::move(loaded.docs);
            sc.panel_ids = std::move(loaded.ids);
            sc.panel_digests = std::move(loaded.digests);
            sc.order = parse_order(iv_order);
            RunReport rep = run_scenario(sc); // no states: interval metadata only
            write_output(emit_report(rep, parse_format(iv_format)), iv_out);
            return kExitOk;
        }

        if (*run) {
            Scenario sc;
            for (std::size_t i = 0; i < models.size(); ++i)
                if (*models[i])
                    sc.kind = parse_scenario_kind(
                        std::vector<std::string>{"fcim", "frim", "faim", "ibam", "nbam", "ncm",
                                                 "fre"}[i]);
            sc.order = parse_order(run_order);
            sc.threshold = Rational::from_decimal(run_threshold);
            sc.retention = run_retention;
            sc.max_iters = run_max_iters;
            sc.trace = run_trace;
            sc.rule = run_rule == "maxprod" ? CompositionRule::MaxProduct : CompositionRule::MaxMin;
            if (run_clamp == "none") sc.clamp = std::set<std::size_t>{};
            else if (run_clamp != "auto") sc.clamp = parse_clamp(run_clamp);
            if (!run_side.empty()) {
                if (run_side != "domain" && run_side != "range")
                    throw ConfigError("--side must be domain or range");
                sc.seed_side = run_side == "domain" ? Side::Domain : Side::Range;
            }

            if (sc.kind == ScenarioKind::Fre) {
                auto load_one = [&](const std::string& f) {
                    std::string path = resolve_path(f);
                    std::string text = slurp(path);
                    sc.panel_ids.push_back(stem_of(path));
                    sc.panel_digests.push_back(content_digest(text));
                    return parse_matrix_document(text);
                };
                if (!fre_p.empty()) sc.fre_p = load_one(fre_p);
                sc.fre_q = load_one(fre_q);
                if (!fre_r.empty()) sc.fre_r = load_one(fre_r);
            } else {
                LoadedPanel loaded = load_panel(run_experts);
                sc.panel = std::move(loaded.docs);
                sc.panel_ids = std::move(loaded.ids);
                sc.panel_digests = std::move(loaded.digests);
                for (const auto& s : run_states) sc.states.push_back(parse_state(s));
            }

            RunReport rep;
            try {
                rep = run_scenario(sc);
            } catch (const ConfigError&) {
                throw;
            } catch (const DocSyntaxError&) {
                throw;
            } catch (const std::exception& e) {
                std::cerr << "engine error: " << e.what() << "\n";
                return kExitEngine;
            }
            write_output(emit_report(rep, parse_format(run_format)), run_out);
            return rep.fre_empty ? kExitEmptyFre : kExitOk;
        }

        if (*report_cmd) {
            RunReport rep;
            rep.body = nlohmann::json::parse(slurp(resolve_path(report_file)));
            write_output(emit_report(rep, parse_format(report_format)), report_out);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
