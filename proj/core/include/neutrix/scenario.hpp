#pragma once

#include "neutrix/associative.hpp"
#include "neutrix/cognitive.hpp"
#include "neutrix/document.hpp"
#include "neutrix/fre.hpp"
#include "neutrix/relational.hpp"

#include <json.hpp>

namespace neutrix {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// What a scenario runs. The panel-driven kinds build an interval first;
/// fre solves or evaluates a relational equation.
enum class ScenarioKind { Fcim, Frim, Faim, Ibam, Nbam, Ncm, Fre };

ScenarioKind parse_scenario_kind(const std::string& name);
std::string scenario_kind_name(ScenarioKind kind);

enum class ReportFormat { Json, Markdown };

/// A declarative run request. Panels come in as parsed documents plus the
/// ids to report them under; initial states are token lists.
struct Scenario {
    ScenarioKind kind = ScenarioKind::Fcim;
    std::vector<MatrixDocument> panel;
    std::vector<std::string> panel_ids;
    std::vector<std::string> panel_digests;

    OrderMode order = OrderMode::Usual;
    Rational threshold = Rational(0);
    std::optional<std::set<std::size_t>> clamp; // defaults to the on-coordinates
    bool retention = false;
    std::size_t max_iters = 1000;
    std::optional<Side> seed_side; // disambiguates square relations

    std::vector<ConceptState> states;

    // fre only
    std::optional<MatrixDocument> fre_p; // forward evaluation when present
    std::optional<MatrixDocument> fre_q;
    std::optional<MatrixDocument> fre_r;
    CompositionRule rule = CompositionRule::MaxMin;

    bool trace = false;
};

/// Deterministic report: identical scenario and tool version give identical
/// bytes. Display values are rounded half-up to two decimals; exact token
/// forms ride alongside.
struct RunReport {
    nlohmann::json body;
    bool fre_empty = false; // surfaced so the CLI can exit 3
};

RunReport run_scenario(const Scenario& sc);

std::string emit_report(const RunReport& report, ReportFormat format);

std::string tool_version();

/// FNV-1a 64 content digest used for input fingerprints in reports.
std::string content_digest(const std::string& text);

} // namespace neutrix
