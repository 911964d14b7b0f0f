#include "neutrix/interval.hpp"

namespace neutrix {

void ExpertPanel::check() const {
    if (members.empty()) throw EmptyPanel{};
    for (const auto& m : members)
        if (m.rows() != members.front().rows() || m.cols() != members.front().cols())
            throw ShapeError("panel members differ in shape");
    if (!member_ids.empty() && member_ids.size() != members.size())
        throw ShapeError("panel ids do not match member count");
}

IntervalModel build_interval(ExpertPanel panel, OrderMode mode, BuildOptions opts) {
    panel.check();
    if (opts.require_zero_diagonal)
        for (const auto& m : panel.members) {
            if (m.rows() != m.cols()) throw ShapeError("cognitive-map panels must be square");
            if (!m.has_zero_diagonal()) throw DiagonalNonZero{};
        }
    if (panel.member_ids.empty())
        for (std::size_t i = 0; i < panel.members.size(); ++i)
            panel.member_ids.push_back("M" + std::to_string(i + 1));

    IntervalModel iv;
    iv.mode = mode;
    auto pair = elementwise_extrema(panel.members, mode);
    iv.a_min = std::move(pair.min);
    iv.b_max = std::move(pair.max);
    iv.o_opt = iv.a_min;
    Rational half(1, 2);
    for (std::size_t r = 0; r < iv.o_opt.rows(); ++r)
        for (std::size_t c = 0; c < iv.o_opt.cols(); ++c)
            iv.o_opt.at(r, c) = scale(add(iv.a_min.at(r, c), iv.b_max.at(r, c)), half);
    iv.m_avg = average(panel.members);
    iv.m_avg.row_labels = iv.a_min.row_labels;
    iv.m_avg.col_labels = iv.a_min.col_labels;
    iv.panel = std::move(panel);
    return iv;
}

namespace {

bool part_between(OrderMode mode, const NeutroScalar& lo, const NeutroScalar& x, const NeutroScalar& hi) {
    switch (mode) {
        case OrderMode::Usual:
            return leq(lo, x) && leq(x, hi);
        case OrderMode::PseudoReal:
            return lo.real <= x.real && x.real <= hi.real;
        case OrderMode::PseudoNeutrosophic:
            return lo.indet <= x.indet && x.indet <= hi.indet;
    }
    return false;
}

} // namespace

bool contains(const IntervalModel& iv, const ModelMatrix& M) {
    if (M.rows() != iv.rows() || M.cols() != iv.cols())
        throw ShapeError("candidate matrix does not match the interval shape");
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c)
            if (!part_between(iv.mode, iv.a_min.at(r, c), M.at(r, c), iv.b_max.at(r, c)))
                return false;
    return true;
}

const ModelMatrix& medial(const IntervalModel& iv) { return iv.o_opt; }

Closedness classify_closedness(const IntervalModel& iv, const Rational& lo, const Rational& hi) {
    bool touches_lo = false, touches_hi = false;
    for (const auto& e : iv.a_min.entries()) {
        if (!e.is_pure_real()) throw DomainViolation("closedness classification needs real entries");
        if (e.real == lo) touches_lo = true;
    }
    for (const auto& e : iv.b_max.entries()) {
        if (!e.is_pure_real()) throw DomainViolation("closedness classification needs real entries");
        if (e.real == hi) touches_hi = true;
    }
    if (touches_lo && touches_hi) return Closedness::Closed;
    if (touches_hi) return Closedness::OpenLow;
    if (touches_lo) return Closedness::OpenHigh;
    return Closedness::Open;
}

IntervalStack build_stack(const std::vector<std::pair<ExpertPanel, OrderMode>>& panels,
                          BuildOptions opts) {
    IntervalStack stack;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        try {
            stack.components.push_back(build_interval(panels[i].first, panels[i].second, opts));
        } catch (const std::exception& e) {
            throw StackComponentError(i, e.what());
        }
    }
    return stack;
}

bool stack_contains(const IntervalStack& stack, const std::vector<ModelMatrix>& parts) {
    if (parts.size() != stack.components.size())
        throw ShapeError("component count does not match the stack");
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (!contains(stack.components[i], parts[i])) return false;
    return true;
}

} // namespace neutrix
