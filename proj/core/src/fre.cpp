#include "neutrix/fre.hpp"

namespace neutrix {

namespace {

void require_fuzzy_rule(CompositionRule rule) {
    if (rule == CompositionRule::SumProduct)
        throw DomainViolation("relational equations are defined for max-min and max-product only");
}

Rational sigma(CompositionRule rule, const Rational& q, const Rational& r) {
    if (rule == CompositionRule::MaxMin) return q > r ? r : Rational(1);
    if (q.is_zero()) return Rational(1);
    return Rational::min(Rational(1), r / q);
}

} // namespace

ModelMatrix forward(const ModelMatrix& P, const ModelMatrix& Q, CompositionRule rule) {
    require_fuzzy_rule(rule);
    return compose(P, Q, rule);
}

bool solvable_necessary(const ModelMatrix& Q, const std::vector<Rational>& r) {
    if (r.size() != Q.cols())
        throw DimensionMismatch("target length " + std::to_string(r.size()) + " does not match " +
                                std::to_string(Q.cols()) + " columns");
    for (std::size_t k = 0; k < Q.cols(); ++k) {
        Rational colmax(0);
        for (std::size_t j = 0; j < Q.rows(); ++j) colmax = Rational::max(colmax, Q.at(j, k).real);
        if (colmax < r[k]) return false;
    }
    return true;
}

FreSolution max_solution(const ModelMatrix& Q, const std::vector<Rational>& r, CompositionRule rule) {
    require_fuzzy_rule(rule);
    if (r.size() != Q.cols())
        throw DimensionMismatch("target length " + std::to_string(r.size()) + " does not match " +
                                std::to_string(Q.cols()) + " columns");

    ModelMatrix p_hat(1, Q.rows(), ValueDomain::fuzzy_unit());
    for (std::size_t j = 0; j < Q.rows(); ++j) {
        Rational acc(1);
        for (std::size_t k = 0; k < Q.cols(); ++k)
            acc = Rational::min(acc, sigma(rule, Q.at(j, k).real, r[k]));
        p_hat.at(0, j) = NeutroScalar(acc);
    }

    ModelMatrix check = compose(p_hat, Q, rule);
    FreSolution sol;
    Rational residual(0);
    for (std::size_t k = 0; k < Q.cols(); ++k)
        residual = Rational::max(residual, (check.at(0, k).real - r[k]).abs());
    sol.residual = residual;
    if (residual.is_zero()) {
        sol.status = FreSolution::Status::MaxSolution;
        sol.p_hat = std::move(p_hat);
    } else {
        sol.status = FreSolution::Status::Empty;
    }
    return sol;
}

FreSolution max_solution_matrix(const ModelMatrix& Q, const ModelMatrix& R, CompositionRule rule) {
    require_fuzzy_rule(rule);
    if (R.cols() != Q.cols())
        throw DimensionMismatch("target width does not match the relation");
    ModelMatrix P(R.rows(), Q.rows(), ValueDomain::fuzzy_unit());
    FreSolution sol;
    for (std::size_t i = 0; i < R.rows(); ++i) {
        std::vector<Rational> row;
        row.reserve(R.cols());
        for (std::size_t k = 0; k < R.cols(); ++k) row.push_back(R.at(i, k).real);
        FreSolution one = max_solution(Q, row, rule);
        sol.residual = Rational::max(sol.residual, one.residual);
        if (one.status != FreSolution::Status::MaxSolution) {
            sol.status = FreSolution::Status::Empty;
            sol.p_hat.reset();
            return sol;
        }
        for (std::size_t j = 0; j < Q.rows(); ++j) P.at(i, j) = one.p_hat->at(0, j);
    }
    sol.status = FreSolution::Status::MaxSolution;
    sol.p_hat = std::move(P);
    return sol;
}

void minimal_solution_set(const ModelMatrix&, const std::vector<Rational>&) {
    throw NotImplementedError(
        "minimal-solution enumeration is not provided; only the maximum solution is constructed");
}

IntervalModel frie_compose(const IntervalModel& ivP, const IntervalModel& ivQ, CompositionRule rule) {
    require_fuzzy_rule(rule);
    if (ivP.mode != OrderMode::Usual || ivQ.mode != OrderMode::Usual)
        throw DomainViolation("interval composition is defined for usual-mode intervals");
    ModelMatrix lower = forward(ivP.a_min, ivQ.a_min, rule);
    ModelMatrix upper = forward(ivP.b_max, ivQ.b_max, rule);
    ExpertPanel synthetic;
    synthetic.members = {lower, upper};
    synthetic.member_ids = {"lower", "upper"};
    return build_interval(std::move(synthetic), OrderMode::Usual);
}

} // namespace neutrix
