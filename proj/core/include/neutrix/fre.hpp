#pragma once

#include "neutrix/interval.hpp"

namespace neutrix {

struct NotImplementedError : std::logic_error {
    explicit NotImplementedError(const std::string& what) : std::logic_error(what) {}
};

/// A relational equation instance P o Q = R with Q and R known.
struct FreProblem {
    ModelMatrix Q;          // n x s known relation
    ModelMatrix R;          // m x s target (rows solved independently)
    CompositionRule rule = CompositionRule::MaxMin; // MaxMin or MaxProduct
};

struct FreSolution {
    enum class Status { UniqueForward, MaxSolution, Empty };
    Status status = Status::Empty;
    std::optional<ModelMatrix> p_hat;
    /// Largest entrywise gap between forward(p_hat, Q) and the target;
    /// zero whenever status is MaxSolution.
    Rational residual = Rational(0);
};

/// Forward evaluation: total and deterministic.
ModelMatrix forward(const ModelMatrix& P, const ModelMatrix& Q, CompositionRule rule);

/// Necessary condition for solvability of p o Q = r: false means certainly
/// empty (some target exceeds its column maximum); true proves nothing.
bool solvable_necessary(const ModelMatrix& Q, const std::vector<Rational>& r);

/// Greatest-solution construction for a single row target.
///   MaxMin:     sigma(q, r) = r when q > r, else 1.
///   MaxProduct: sigma(q, r) = min(1, r / q), with q = 0 imposing nothing.
/// p_hat = min_k sigma(q_jk, r_k), then the forward check decides between
/// MaxSolution and Empty (the construction is necessary and sufficient).
FreSolution max_solution(const ModelMatrix& Q, const std::vector<Rational>& r, CompositionRule rule);

/// Row-wise solve of P o Q = R; Empty as soon as any row is unsolvable.
FreSolution max_solution_matrix(const ModelMatrix& Q, const ModelMatrix& R, CompositionRule rule);

/// The minimal-solution family has no construction here; callers must not
/// mistake the maximum solution for the whole solution set.
[[noreturn]] void minimal_solution_set(const ModelMatrix& Q, const std::vector<Rational>& r);

/// Interval-level composition [A,B] o [X,Y] = [A o X, B o Y]; the derived
/// optimal and average come from the endpoint pair (synthetic panel).
IntervalModel frie_compose(const IntervalModel& ivP, const IntervalModel& ivQ, CompositionRule rule);

} // namespace neutrix
