#pragma once

#include "neutrix/interval.hpp"

#include <map>
#include <variant>

namespace neutrix {

/// Fuzzy fit vector for associative recall. Row-side vectors have length
/// rows(M), column-side vectors length cols(M).
struct FitVector {
    enum class Side { Row, Column };
    Side side = Side::Row;
    std::vector<Rational> values;
};

/// Max-min recall through the rule matrix: row fit a gives a o M, column fit
/// b gives b o M^T. The result lands on the opposite side.
FitVector fam_recall(const ModelMatrix& M, const FitVector& fit);

struct SignalVector {
    enum class Side { Row, Column };
    Side side = Side::Row;
    std::vector<SignalValue> values;

    friend bool operator==(const SignalVector&, const SignalVector&) = default;
};

std::string print_signals(const SignalVector& s);

/// Raw activations alternate with signals in the stored trajectory.
struct SweepRecord {
    std::vector<NeutroScalar> raw;
    SignalVector signal;
};

struct FixedSignalPair {
    enum class Kind { FixedPair, LimitCycle, Diverged };
    Kind kind = Kind::Diverged;
    std::size_t period = 0;
    SignalVector row_signal;
    SignalVector col_signal;
    std::size_t sweeps = 0;
    std::vector<SweepRecord> trajectory;

    bool is_fixed_pair() const { return kind == Kind::FixedPair; }
};

/// Discrete synchronous BAM options. Thresholds are per-field constants
/// (the zero default matches every worked run); retention keeps the previous
/// signal at exact threshold equality instead of mapping it to Off.
struct BamOptions {
    bool retention = false;
    Rational row_threshold = Rational(0);
    Rational col_threshold = Rational(0);
    std::size_t max_sweeps = 1000;
};

/// Seed for a BAM run: a raw activation vector on one side.
struct BamSeed {
    enum class Side { Row, Column };
    Side side = Side::Row;
    std::vector<NeutroScalar> activation;
};

/// Synchronous signal/activation sweeps through M and M^T until the
/// (row-signal, column-signal) pair repeats. Neutrosophic matrices make this
/// the trinary variant: a signal of I contributes I*w to each activation.
FixedSignalPair bam_converge(const ModelMatrix& M, const BamSeed& seed, const BamOptions& opts = {});

/// Per-member plus min/max/opt/avg keyed runs over an interval of synaptic
/// matrices.
struct BamOutcome {
    std::optional<FixedSignalPair> pair;
    std::string error;
    bool ok() const { return pair.has_value(); }
};
using PanelBamResults = std::map<std::string, BamOutcome>;

PanelBamResults bam_panel_run(const IntervalModel& iv, const BamSeed& seed, const BamOptions& opts = {});

struct FamOutcome {
    std::optional<FitVector> recalled;
    std::string error;
    bool ok() const { return recalled.has_value(); }
};
using PanelFamResults = std::map<std::string, FamOutcome>;

PanelFamResults fam_panel_run(const IntervalModel& iv, const FitVector& fit);

/// Engine selector used by the scenario layer; FAM recalls fit vectors,
/// BAM/NBAM converge signal pairs (NBAM differs only in allowing I in the
/// matrix and states).
enum class AssociativeEngine { Fam, Bam, Nbam };

using PanelRunResult = std::variant<PanelFamResults, PanelBamResults>;

PanelRunResult panel_run(const IntervalModel& iv, AssociativeEngine engine,
                         const FitVector* fit, const BamSeed* seed, const BamOptions& opts = {});

/// Independent componentwise convergence across a stack of synaptic
/// matrices (the bi/tri/n-model idiom).
std::vector<FixedSignalPair> stack_converge(const std::vector<ModelMatrix>& components,
                                            const std::vector<BamSeed>& seeds,
                                            const BamOptions& opts = {});

std::vector<FixedSignalPair> stack_converge(const IntervalStack& stack, const std::string& key,
                                            const std::vector<BamSeed>& seeds,
                                            const BamOptions& opts = {});

} // namespace neutrix
