#pragma once

#include "neutrix/cognitive.hpp"
#include "neutrix/document.hpp"

#include <cstdlib>
#include <random>
#include <string>

namespace test_helpers {

inline std::string fixture_path(const std::string& name) {
    if (const char* env = std::getenv("NEUTRIX_FIXTURES"))
        return std::string(env) + "/" + name;
    return std::string(NEUTRIX_FIXTURE_DIR) + "/" + name;
}

inline neutrix::MatrixDocument load_fixture(const std::string& name) {
    return neutrix::load_matrix_document(fixture_path(name));
}

inline neutrix::Rational R(const std::string& text) {
    return neutrix::Rational::from_decimal(text);
}

inline neutrix::NeutroScalar S(const std::string& token) { return neutrix::parse_scalar(token); }

inline neutrix::ConceptState state(const std::string& csv) { return neutrix::parse_state(csv); }

// Deterministic generator for property-style tests.
inline std::mt19937& rng() {
    static std::mt19937 gen(20240211u);
    return gen;
}

// Uniform member of {0, 0.05, ..., 1}.
inline neutrix::Rational random_grid_value(int steps = 20) {
    std::uniform_int_distribution<int> d(0, steps);
    return neutrix::Rational(d(rng()), steps);
}

inline neutrix::ModelMatrix random_fuzzy_matrix(std::size_t rows, std::size_t cols) {
    neutrix::ModelMatrix m(rows, cols, neutrix::ValueDomain::fuzzy_unit());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = neutrix::NeutroScalar(random_grid_value());
    return m;
}

} // namespace test_helpers
