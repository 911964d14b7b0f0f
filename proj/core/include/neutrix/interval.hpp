#pragma once

#include "neutrix/matrix.hpp"

#include <string>
#include <vector>

namespace neutrix {

struct DiagonalNonZero : std::runtime_error {
    DiagonalNonZero() : std::runtime_error("cognitive-map panels require a zero diagonal") {}
};

/// An expert panel: homogeneous matrices plus display ids. The declared
/// scale travels on the member matrices' domains.
struct ExpertPanel {
    std::vector<ModelMatrix> members;
    std::vector<std::string> member_ids;

    std::size_t size() const { return members.size(); }
    void check() const;
};

/// Interval of matrices built from a panel: minimal A, maximal B, optimal
/// O = (A+B)/2 and the entrywise panel average.
struct IntervalModel {
    ExpertPanel panel;
    OrderMode mode = OrderMode::Usual;
    ModelMatrix a_min;
    ModelMatrix b_max;
    ModelMatrix o_opt;
    ModelMatrix m_avg;

    std::size_t rows() const { return a_min.rows(); }
    std::size_t cols() const { return a_min.cols(); }
};

struct BuildOptions {
    /// Set for cognitive-map (square, causal) panels; violations raise
    /// DiagonalNonZero instead of being silently zeroed.
    bool require_zero_diagonal = false;
};

IntervalModel build_interval(ExpertPanel panel, OrderMode mode, BuildOptions opts = {});

/// Membership test. Usual mode is componentwise A <= M <= B; an incomparable
/// entry means "not contained". Pseudo modes compare only the selected part.
bool contains(const IntervalModel& iv, const ModelMatrix& M);

/// The midpoint matrix of the interval; identical to O by construction.
const ModelMatrix& medial(const IntervalModel& iv);

/// Whether the interval touches the declared scale ends: Closed touches
/// both, OpenLow misses lo, OpenHigh misses hi, Open misses both.
enum class Closedness { Closed, OpenLow, OpenHigh, Open };

Closedness classify_closedness(const IntervalModel& iv, const Rational& lo, const Rational& hi);

/// Componentwise stack of independent intervals (the bi/tri/n-matrix idiom).
/// Components may have different shapes and scales.
struct IntervalStack {
    std::vector<IntervalModel> components;
};

struct StackComponentError : std::runtime_error {
    std::size_t component;
    StackComponentError(std::size_t idx, const std::string& what)
        : std::runtime_error("component " + std::to_string(idx + 1) + ": " + what), component(idx) {}
};

IntervalStack build_stack(const std::vector<std::pair<ExpertPanel, OrderMode>>& panels,
                          BuildOptions opts = {});

/// Stack membership = membership in every component.
bool stack_contains(const IntervalStack& stack, const std::vector<ModelMatrix>& parts);

} // namespace neutrix
