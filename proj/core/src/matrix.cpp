#include "neutrix/matrix.hpp"

namespace neutrix {

bool ValueDomain::admits(const NeutroScalar& x) const {
    switch (kind) {
        case Kind::FuzzyUnit:
            return x.is_pure_real() && x.real >= Rational(0) && x.real <= Rational(1);
        case Kind::SignedFuzzy:
            return x.is_pure_real() && x.real >= Rational(-1) && x.real <= Rational(1);
        case Kind::BoundedInteger: {
            if (!x.is_pure_real()) return false;
            if (!bound) return true;
            return x.real.abs() <= *bound;
        }
        case Kind::Neutrosophic: {
            if (!bound) return true;
            return x.real.abs() <= *bound && x.indet.abs() <= *bound;
        }
        case Kind::Unnormalized:
            return true;
    }
    return false;
}

ModelMatrix::ModelMatrix(std::size_t rows, std::size_t cols, ValueDomain domain)
    : rows_(rows), cols_(cols), entries_(rows * cols), domain_(std::move(domain)) {}

ModelMatrix::ModelMatrix(std::size_t rows, std::size_t cols, std::vector<NeutroScalar> entries,
                         ValueDomain domain)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), domain_(std::move(domain)) {
    if (entries_.size() != rows_ * cols_)
        throw ShapeError("entry count " + std::to_string(entries_.size()) + " does not match " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
}

ModelMatrix ModelMatrix::from_tokens(const std::vector<std::vector<std::string>>& grid,
                                     ValueDomain domain) {
    if (grid.empty()) throw ShapeError("empty grid");
    std::size_t cols = grid.front().size();
    std::vector<NeutroScalar> entries;
    entries.reserve(grid.size() * cols);
    for (std::size_t r = 0; r < grid.size(); ++r) {
        if (grid[r].size() != cols)
            throw ShapeError("row " + std::to_string(r + 1) + " has " + std::to_string(grid[r].size()) +
                             " entries, expected " + std::to_string(cols));
        for (const auto& tok : grid[r]) entries.push_back(parse_scalar(tok));
    }
    return ModelMatrix(grid.size(), cols, std::move(entries), std::move(domain));
}

void ModelMatrix::validate() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!domain_.admits(at(r, c)))
                throw DomainViolation("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                      ") = " + print_scalar(at(r, c)) + " outside the declared domain");
    if (!row_labels.empty() && row_labels.size() != rows_)
        throw ShapeError("row label count does not match rows");
    if (!col_labels.empty() && col_labels.size() != cols_)
        throw ShapeError("column label count does not match cols");
}

bool ModelMatrix::has_zero_diagonal() const {
    std::size_t n = rows_ < cols_ ? rows_ : cols_;
    for (std::size_t i = 0; i < n; ++i)
        if (!at(i, i).is_zero()) return false;
    return true;
}

bool ModelMatrix::is_pure_real() const {
    for (const auto& e : entries_)
        if (!e.is_pure_real()) return false;
    return true;
}

namespace {

void require_inner(const ModelMatrix& P, const ModelMatrix& Q) {
    if (P.cols() != Q.rows())
        throw DimensionMismatch("inner dimensions disagree: " + std::to_string(P.cols()) + " vs " +
                                std::to_string(Q.rows()));
}

void require_real_for(const char* rule, const ModelMatrix& M) {
    if (!M.is_pure_real())
        throw DomainViolation(std::string(rule) + " requires pure-real operands; use tnorm_compose for I entries");
}

NeutroScalar fold_entry(const ModelMatrix& P, const ModelMatrix& Q, std::size_t i, std::size_t k,
                        CompositionRule rule) {
    NeutroScalar acc;
    for (std::size_t j = 0; j < P.cols(); ++j) {
        const NeutroScalar& p = P.at(i, j);
        const NeutroScalar& q = Q.at(j, k);
        switch (rule) {
            case CompositionRule::MaxMin: {
                Rational term = Rational::min(p.real, q.real);
                if (j == 0 || term > acc.real) acc = NeutroScalar(term);
                break;
            }
            case CompositionRule::MaxProduct: {
                Rational term = p.real * q.real;
                if (j == 0 || term > acc.real) acc = NeutroScalar(term);
                break;
            }
            case CompositionRule::SumProduct:
                acc = add(acc, mul(p, q));
                break;
        }
    }
    return acc;
}

} // namespace

ModelMatrix compose(const ModelMatrix& P, const ModelMatrix& Q, CompositionRule rule) {
    require_inner(P, Q);
    if (rule == CompositionRule::MaxMin) {
        require_real_for("max-min composition", P);
        require_real_for("max-min composition", Q);
    } else if (rule == CompositionRule::MaxProduct) {
        require_real_for("max-product composition", P);
        require_real_for("max-product composition", Q);
        for (const auto& e : P.entries())
            if (e.real.sign() < 0) throw DomainViolation("max-product composition requires nonnegative entries");
        for (const auto& e : Q.entries())
            if (e.real.sign() < 0) throw DomainViolation("max-product composition requires nonnegative entries");
    }
    ValueDomain dom = rule == CompositionRule::SumProduct ? ValueDomain::unnormalized() : P.domain();
    ModelMatrix R(P.rows(), Q.cols(), dom);
    for (std::size_t i = 0; i < P.rows(); ++i)
        for (std::size_t k = 0; k < Q.cols(); ++k)
            R.at(i, k) = fold_entry(P, Q, i, k, rule);
    R.row_labels = P.row_labels;
    R.col_labels = Q.col_labels;
    return R;
}

std::vector<NeutroScalar> compose_row(const std::vector<NeutroScalar>& x, const ModelMatrix& M,
                                      CompositionRule rule) {
    if (x.size() != M.rows())
        throw DimensionMismatch("state length " + std::to_string(x.size()) + " does not match " +
                                std::to_string(M.rows()) + " rows");
    std::vector<NeutroScalar> out(M.cols());
    for (std::size_t k = 0; k < M.cols(); ++k) {
        NeutroScalar acc;
        for (std::size_t i = 0; i < x.size(); ++i) {
            switch (rule) {
                case CompositionRule::MaxMin: {
                    Rational term = Rational::min(x[i].real, M.at(i, k).real);
                    if (i == 0 || term > acc.real) acc = NeutroScalar(term);
                    break;
                }
                case CompositionRule::MaxProduct: {
                    Rational term = x[i].real * M.at(i, k).real;
                    if (i == 0 || term > acc.real) acc = NeutroScalar(term);
                    break;
                }
                case CompositionRule::SumProduct:
                    acc = add(acc, mul(x[i], M.at(i, k)));
                    break;
            }
        }
        out[k] = acc;
    }
    return out;
}

ModelMatrix transpose(const ModelMatrix& M) {
    ModelMatrix T(M.cols(), M.rows(), M.domain());
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c)
            T.at(c, r) = M.at(r, c);
    T.row_labels = M.col_labels;
    T.col_labels = M.row_labels;
    return T;
}

namespace {

void require_homogeneous(const std::vector<ModelMatrix>& panel) {
    if (panel.empty()) throw EmptyPanel{};
    for (const auto& m : panel)
        if (m.rows() != panel.front().rows() || m.cols() != panel.front().cols())
            throw ShapeError("panel members differ in shape");
}

} // namespace

ExtremaPair elementwise_extrema(const std::vector<ModelMatrix>& panel, OrderMode mode) {
    require_homogeneous(panel);
    ModelMatrix lo = panel.front();
    ModelMatrix hi = panel.front();
    for (std::size_t t = 1; t < panel.size(); ++t) {
        for (std::size_t r = 0; r < lo.rows(); ++r) {
            for (std::size_t c = 0; c < lo.cols(); ++c) {
                try {
                    lo.at(r, c) = extremum(mode, lo.at(r, c), panel[t].at(r, c)).min;
                    hi.at(r, c) = extremum(mode, hi.at(r, c), panel[t].at(r, c)).max;
                } catch (const IncomparableError&) {
                    throw IncomparableEntry(r, c);
                }
            }
        }
    }
    lo.row_labels = panel.front().row_labels;
    lo.col_labels = panel.front().col_labels;
    hi.row_labels = panel.front().row_labels;
    hi.col_labels = panel.front().col_labels;
    return {std::move(lo), std::move(hi)};
}

ModelMatrix average(const std::vector<ModelMatrix>& panel) {
    require_homogeneous(panel);
    ModelMatrix acc = panel.front();
    for (std::size_t t = 1; t < panel.size(); ++t)
        for (std::size_t r = 0; r < acc.rows(); ++r)
            for (std::size_t c = 0; c < acc.cols(); ++c)
                acc.at(r, c) = add(acc.at(r, c), panel[t].at(r, c));
    Rational inv(1, static_cast<std::int64_t>(panel.size()));
    for (std::size_t r = 0; r < acc.rows(); ++r)
        for (std::size_t c = 0; c < acc.cols(); ++c)
            acc.at(r, c) = scale(acc.at(r, c), inv);
    return acc;
}

ModelMatrix combined_map(const std::vector<ModelMatrix>& maps) {
    require_homogeneous(maps);
    ModelMatrix acc(maps.front().rows(), maps.front().cols(), ValueDomain::unnormalized());
    acc.row_labels = maps.front().row_labels;
    acc.col_labels = maps.front().col_labels;
    for (const auto& m : maps)
        for (std::size_t r = 0; r < acc.rows(); ++r)
            for (std::size_t c = 0; c < acc.cols(); ++c)
                acc.at(r, c) = add(acc.at(r, c), m.at(r, c));
    return acc;
}

ModelMatrix scale_entries(const ModelMatrix& M, const Rational& c) {
    ModelMatrix out = M;
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t k = 0; k < out.cols(); ++k)
            out.at(r, k) = scale(out.at(r, k), c);
    return out;
}

namespace {

bool has_indet(const NeutroScalar& x) { return !x.indet.is_zero(); }

} // namespace

NeutroScalar tnorm_apply(TNorm n, const NeutroScalar& a, const NeutroScalar& b) {
    if (n == TNorm::Drastic) {
        if (has_indet(a) || has_indet(b)) return NeutroScalar::indeterminate();
        if (b.real == Rational(1)) return a;
        if (a.real == Rational(1)) return b;
        return NeutroScalar(0);
    }
    if (has_indet(a) || has_indet(b)) return NeutroScalar::indeterminate();
    switch (n) {
        case TNorm::StandardMin: return NeutroScalar(Rational::min(a.real, b.real));
        case TNorm::AlgebraicProduct: return NeutroScalar(a.real * b.real);
        case TNorm::BoundedDifference:
            return NeutroScalar(Rational::max(Rational(0), a.real + b.real - Rational(1)));
        case TNorm::Drastic: break;
    }
    return NeutroScalar(0);
}

NeutroScalar tconorm_apply(TCoNorm c, const NeutroScalar& a, const NeutroScalar& b) {
    if (c == TCoNorm::Drastic) {
        if (has_indet(a) || has_indet(b)) return NeutroScalar::indeterminate();
        if (b.real.is_zero()) return a;
        if (a.real.is_zero()) return b;
        return NeutroScalar(1);
    }
    if (has_indet(a) || has_indet(b)) return NeutroScalar::indeterminate();
    switch (c) {
        case TCoNorm::StandardMax: return NeutroScalar(Rational::max(a.real, b.real));
        case TCoNorm::AlgebraicSum: return NeutroScalar(a.real + b.real - a.real * b.real);
        case TCoNorm::BoundedSum: return NeutroScalar(Rational::min(Rational(1), a.real + b.real));
        case TCoNorm::Drastic: break;
    }
    return NeutroScalar(0);
}

ModelMatrix tnorm_compose(const ModelMatrix& P, const ModelMatrix& Q, TNorm norm, TCoNorm conorm) {
    require_inner(P, Q);
    ModelMatrix R(P.rows(), Q.cols(), ValueDomain::neutrosophic(Rational(1)));
    for (std::size_t i = 0; i < P.rows(); ++i) {
        for (std::size_t k = 0; k < Q.cols(); ++k) {
            NeutroScalar acc = tnorm_apply(norm, P.at(i, 0), Q.at(0, k));
            for (std::size_t j = 1; j < P.cols(); ++j)
                acc = tconorm_apply(conorm, acc, tnorm_apply(norm, P.at(i, j), Q.at(j, k)));
            R.at(i, k) = acc;
        }
    }
    R.row_labels = P.row_labels;
    R.col_labels = Q.col_labels;
    return R;
}

} // namespace neutrix
