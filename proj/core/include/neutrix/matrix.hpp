#pragma once

#include "neutrix/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace neutrix {

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DomainViolation : std::runtime_error {
    explicit DomainViolation(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyPanel : std::runtime_error {
    EmptyPanel() : std::runtime_error("panel has no members") {}
};

/// IncomparableEntry carries the offending position so panel builders can
/// point the caller at the exact pair that needs a pseudo mode.
struct IncomparableEntry : std::runtime_error {
    std::size_t row, col;
    IncomparableEntry(std::size_t r, std::size_t c)
        : std::runtime_error("entries at (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                             ") are incomparable under the usual order; rerun with a pseudo mode"),
          row(r), col(c) {}
};

/// Declared value domain of a matrix. Bound is the half-width `a` for
/// BoundedInteger [-a, a] and Neutrosophic <[-a,a] u [-aI,aI]>; ignored for
/// the fuzzy domains. Unnormalized carries no range check and is produced by
/// combined maps whose entrywise sums can leave the declared scale.
struct ValueDomain {
    enum class Kind { FuzzyUnit, SignedFuzzy, BoundedInteger, Neutrosophic, Unnormalized };
    Kind kind = Kind::FuzzyUnit;
    std::optional<Rational> bound;

    static ValueDomain fuzzy_unit() { return {Kind::FuzzyUnit, {}}; }
    static ValueDomain signed_fuzzy() { return {Kind::SignedFuzzy, {}}; }
    static ValueDomain bounded(Rational a) { return {Kind::BoundedInteger, std::move(a)}; }
    static ValueDomain neutrosophic(std::optional<Rational> a = {}) { return {Kind::Neutrosophic, std::move(a)}; }
    static ValueDomain unnormalized() { return {Kind::Unnormalized, {}}; }

    bool admits(const NeutroScalar& x) const;
    friend bool operator==(const ValueDomain&, const ValueDomain&) = default;
};

/// Dense row-major matrix of NeutroScalar with a declared domain and
/// optional labels. Immutable in spirit: operations build new matrices.
class ModelMatrix {
public:
    ModelMatrix() = default;
    ModelMatrix(std::size_t rows, std::size_t cols, ValueDomain domain = ValueDomain::fuzzy_unit());
    ModelMatrix(std::size_t rows, std::size_t cols, std::vector<NeutroScalar> entries,
                ValueDomain domain = ValueDomain::fuzzy_unit());

    /// Row-of-rows helper for tests and fixtures; entries parsed per the
    /// scalar token grammar.
    static ModelMatrix from_tokens(const std::vector<std::vector<std::string>>& grid,
                                   ValueDomain domain = ValueDomain::fuzzy_unit());

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const ValueDomain& domain() const { return domain_; }

    const NeutroScalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    NeutroScalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const std::vector<NeutroScalar>& entries() const { return entries_; }

    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    /// Throws DomainViolation at the first entry outside the declared domain,
    /// ShapeError if labels are present with the wrong arity.
    void validate() const;
    bool has_zero_diagonal() const;
    bool is_pure_real() const;

    friend bool operator==(const ModelMatrix& a, const ModelMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<NeutroScalar> entries_;
    ValueDomain domain_;
};

/// Composition rules for rectangular products.
///  MaxMin and MaxProduct fold with max over pure-real entries; SumProduct is
///  the ring product with neutrosophic multiplication.
enum class CompositionRule { MaxMin, MaxProduct, SumProduct };

ModelMatrix compose(const ModelMatrix& P, const ModelMatrix& Q, CompositionRule rule);

/// Row vector x (1 x n) composed against M (n x m); engines use this shape.
std::vector<NeutroScalar> compose_row(const std::vector<NeutroScalar>& x, const ModelMatrix& M,
                                      CompositionRule rule);

ModelMatrix transpose(const ModelMatrix& M);

/// Entrywise extrema over a panel; A gets the minima, B the maxima.
/// Under Usual mode an incomparable pair raises IncomparableEntry with the
/// offending position.
struct ExtremaPair {
    ModelMatrix min;
    ModelMatrix max;
};
ExtremaPair elementwise_extrema(const std::vector<ModelMatrix>& panel, OrderMode mode);

ModelMatrix average(const std::vector<ModelMatrix>& panel);

/// Entrywise sum; the result is tagged Unnormalized because combined maps
/// may leave the members' declared scale.
ModelMatrix combined_map(const std::vector<ModelMatrix>& maps);

ModelMatrix scale_entries(const ModelMatrix& M, const Rational& c);

/// t-norm / t-conorm catalog extended to I: any argument with an I component
/// absorbs to I except where the drastic case split says otherwise.
enum class TNorm { StandardMin, AlgebraicProduct, BoundedDifference, Drastic };
enum class TCoNorm { StandardMax, AlgebraicSum, BoundedSum, Drastic };

NeutroScalar tnorm_apply(TNorm n, const NeutroScalar& a, const NeutroScalar& b);
NeutroScalar tconorm_apply(TCoNorm c, const NeutroScalar& a, const NeutroScalar& b);

ModelMatrix tnorm_compose(const ModelMatrix& P, const ModelMatrix& Q, TNorm norm, TCoNorm conorm);

} // namespace neutrix
