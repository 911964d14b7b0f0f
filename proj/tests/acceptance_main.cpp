// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Golden values are asserted exactly (rational arithmetic);
// the handful of figures whose source prints disagree with their own
// arithmetic are asserted at the derived value, as annotated in the fixture
// files under fixtures/.

#include "neutrix/associative.hpp"
#include "neutrix/cognitive.hpp"
#include "neutrix/document.hpp"
#include "neutrix/fre.hpp"
#include "neutrix/relational.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace neutrix;

namespace {

std::string fixture_path(const std::string& name) {
    if (const char* env = std::getenv("NEUTRIX_FIXTURES")) return std::string(env) + "/" + name;
    return std::string(NEUTRIX_FIXTURE_DIR) + "/" + name;
}

ModelMatrix fixture(const std::string& name) {
    return load_matrix_document(fixture_path(name)).matrix;
}

struct Checker {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

Rational R(const std::string& s) { return Rational::from_decimal(s); }
NeutroScalar S(const std::string& s) { return parse_scalar(s); }

std::vector<Rational> reals(std::initializer_list<const char*> toks) {
    std::vector<Rational> out;
    for (const char* t : toks) out.push_back(R(t));
    return out;
}

std::string show(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + ")";
}

std::string show_signals(const std::vector<SignalValue>& v) {
    std::string s;
    for (auto x : v) s += signal_token(x);
    return s;
}

std::vector<SignalValue> sigs(const char* tokens) {
    std::vector<SignalValue> out;
    for (const char* p = tokens; *p; ++p) {
        if (*p == ' ') continue;
        out.push_back(*p == '1' ? SignalValue::On
                      : *p == 'I' ? SignalValue::Indeterminate
                                  : SignalValue::Off);
    }
    return out;
}

std::mt19937 gen(987654321u);

Rational grid_value(int steps = 20) {
    std::uniform_int_distribution<int> d(0, steps);
    return Rational(d(gen), steps);
}

ModelMatrix random_fuzzy(std::size_t rows, std::size_t cols) {
    ModelMatrix m(rows, cols, ValueDomain::fuzzy_unit());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = NeutroScalar(grid_value());
    return m;
}

// ---------------------------------------------------------------- criteria

// 2x3 by 3x4 product with indeterminate entries.
void criterion1(Checker& ck) {
    ModelMatrix A = ModelMatrix::from_tokens({{"-1", "2", "-I"}, {"3", "I", "0"}},
                                             ValueDomain::neutrosophic());
    ModelMatrix B = ModelMatrix::from_tokens(
        {{"-I", "1", "2", "4"}, {"1", "I", "0", "2"}, {"5", "-2", "3I", "-I"}},
        ValueDomain::neutrosophic());
    ModelMatrix AB = compose(A, B, CompositionRule::SumProduct);
    const char* expect[2][4] = {{"2-4I", "-1+4I", "-2-3I", "I"}, {"-2I", "3+I", "6", "12+2I"}};
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            ck.expect(AB.at(r, c) == S(expect[r][c]),
                      "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") = " +
                          print_scalar(AB.at(r, c)) + ", want " + expect[r][c]);
}

// Weighted cognitive runs over the five-concept panel.
void criterion2(Checker& ck) {
    ExpertPanel panel;
    panel.members = {fixture("sd_m1.fzm"), fixture("sd_m2.fzm"), fixture("sd_m3.fzm")};
    panel.member_ids = {"M1", "M2", "M3"};
    IntervalModel iv = build_interval(std::move(panel), OrderMode::Usual, {true});
    Dynamics dyn;
    dyn.kind = Dynamics::Kind::WeightedMaxMin;
    dyn.clamp_on = {0};
    PanelPatterns res = fcim_panel_run(iv, parse_state("1,0,0,0,0"), dyn);

    auto check = [&](const char* key, const char* want_csv) {
        const auto& outcome = res.at(key);
        if (!outcome.ok()) {
            ck.expect(false, std::string(key) + " errored: " + outcome.error);
            return;
        }
        ck.expect(outcome.pattern->is_fixed_point(), std::string(key) + " not a fixed point");
        ConceptState want = parse_state(want_csv);
        ck.expect(outcome.pattern->terminal == want,
                  std::string(key) + " = " + print_state(outcome.pattern->terminal) + ", want " +
                      want_csv);
    };
    check("M1", "1,0,0.8,0,0.6");
    check("M2", "1,0.1,0.4,0.1,0.9");
    check("M3", "1,0.3,0.8,0.3,0.6");
    check("min", "1,0,0.4,0,0.6");
    check("max", "1,0.3,0.8,0.3,0.9");
    check("opt", "1,0.15,0.6,0.15,0.75");
    check("avg", "1,0.1,2/3,0.1,0.7"); // exact rational comparison
}

// Bidirectional relational runs over the five-by-three panel.
void criterion3(Checker& ck) {
    ExpertPanel panel;
    panel.members = {fixture("ts_p1.fzm"), fixture("ts_p2.fzm"), fixture("ts_p3.fzm")};
    panel.member_ids = {"P1", "P2", "P3"};
    IntervalModel iv = build_interval(std::move(panel), OrderMode::Usual);
    Dynamics dyn;
    dyn.kind = Dynamics::Kind::WeightedMaxMin;
    dyn.clamp_on = {4};
    PanelPairs res = frim_panel_run(iv, {Side::Domain, parse_state("0,0,0,0,1")}, dyn);

    auto range_of = [&](const char* key) { return res.at(key).pattern->range_terminal; };
    auto check = [&](const char* key, const char* want_csv) {
        ck.expect(res.at(key).ok() && res.at(key).pattern->is_fixed_pair(),
                  std::string(key) + " did not settle to a fixed pair");
        ConceptState want = parse_state(want_csv);
        ck.expect(range_of(key) == want, std::string(key) + " range = " +
                                             print_state(range_of(key)) + ", want " + want_csv);
    };
    // P1's printed terminal (0, 0.3, 0.5) fails its own sweep; the derived
    // fixed pair has 0.4 in the middle (see ts_p1.fzm annotations)
    check("P1", "0,0.4,0.5");
    check("P2", "0.6,0.6,0.8");
    check("P3", "0.6,0.5,0.6");
    check("min", "0,0.3,0.5");
    check("max", "0.6,0.6,0.8");
    check("opt", "0.3,0.45,0.65"); // first coordinate from the corrected maximum
    check("avg", "11/30,7/15,19/30");
    // displayed average within 0.01 of the printed (0.37, 0.47, 0.63)
    const char* printed[] = {"0.37", "0.47", "0.63"};
    for (int i = 0; i < 3; ++i) {
        Rational gap = (range_of("avg")[i].real - R(printed[i])).abs();
        ck.expect(gap <= R("0.01"), "avg display drifts more than 0.01 from print");
    }
}

// Fit-vector recall over the seven-by-ten panel.
void criterion4(Checker& ck) {
    ExpertPanel panel;
    panel.members = {fixture("fam_m1.fzm"), fixture("fam_m2.fzm"), fixture("fam_m3.fzm")};
    panel.member_ids = {"M1", "M2", "M3"};
    IntervalModel iv = build_interval(std::move(panel), OrderMode::Usual);
    FitVector fit;
    fit.side = FitVector::Side::Column;
    fit.values = reals({"0", "1", "1", "0", "0", "0", "0", "0", "1", "0"});
    PanelFamResults res = fam_panel_run(iv, fit);

    auto check = [&](const char* key, std::vector<Rational> want) {
        ck.expect(res.at(key).ok(), std::string(key) + " errored");
        ck.expect(res.at(key).recalled->values == want,
                  std::string(key) + " = " + show(res.at(key).recalled->values) + ", want " +
                      show(want));
    };
    check("M1", reals({"0.8", "0.8", "0.6", "0", "0", "0", "0"}));
    check("M2", reals({"0.7", "0.8", "0.6", "0.1", "0", "0", "0"}));
    check("M3", reals({"0.8", "0.9", "0.6", "0", "0", "0", "0.1"}));
    check("min", reals({"0.7", "0.8", "0.6", "0", "0", "0", "0"}));
}

// Discrete synchronous pairs over the migration panel, with the minimal and
// average matrices checked against an independent straight-loop oracle.
void criterion5(Checker& ck) {
    std::vector<ModelMatrix> panel{fixture("ibam_m1.fzm"), fixture("ibam_m2.fzm"),
                                   fixture("ibam_m3.fzm"), fixture("ibam_m4.fzm")};
    ExpertPanel p;
    p.members = panel;
    p.member_ids = {"M1", "M2", "M3", "M4"};
    IntervalModel iv = build_interval(std::move(p), OrderMode::Usual);
    BamSeed seed;
    seed.side = BamSeed::Side::Row;
    seed.activation = parse_state("3,4,-1,-3,-2,1");
    PanelBamResults res = bam_panel_run(iv, seed);

    auto check_pair = [&](const char* key, const char* row, const char* col) {
        ck.expect(res.at(key).ok() && res.at(key).pair->is_fixed_pair(),
                  std::string(key) + " did not reach a fixed pair");
        ck.expect(res.at(key).pair->row_signal.values == sigs(row),
                  std::string(key) + " row = " + show_signals(res.at(key).pair->row_signal.values) +
                      ", want " + row);
        ck.expect(res.at(key).pair->col_signal.values == sigs(col),
                  std::string(key) + " col = " + show_signals(res.at(key).pair->col_signal.values) +
                      ", want " + col);
    };
    check_pair("M1", "111111", "1111");
    check_pair("max", "111111", "1111");
    for (const char* key : {"M2", "M3", "M4", "opt"}) check_pair(key, "110111", "1111");

    // independent oracle: entrywise minima / averages and synchronous sweeps
    // written as plain loops
    std::size_t rows = 6, cols = 4;
    ModelMatrix A(rows, cols, ValueDomain::unnormalized());
    ModelMatrix Avg(rows, cols, ValueDomain::unnormalized());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            Rational mn = panel[0].at(r, c).real, sum(0);
            for (const auto& M : panel) {
                mn = Rational::min(mn, M.at(r, c).real);
                sum += M.at(r, c).real;
            }
            A.at(r, c) = NeutroScalar(mn);
            Avg.at(r, c) = NeutroScalar(sum / Rational(4));
        }
    auto oracle_pair = [&](const ModelMatrix& M) {
        std::vector<int> row(rows), col(cols);
        for (std::size_t i = 0; i < rows; ++i)
            row[i] = seed.activation[i].real > Rational(0) ? 1 : 0;
        std::vector<std::pair<std::vector<int>, std::vector<int>>> seen;
        while (true) {
            for (std::size_t j = 0; j < cols; ++j) {
                Rational acc(0);
                for (std::size_t i = 0; i < rows; ++i)
                    if (row[i]) acc += M.at(i, j).real;
                col[j] = acc > Rational(0) ? 1 : 0;
            }
            for (std::size_t i = 0; i < rows; ++i) {
                Rational acc(0);
                for (std::size_t j = 0; j < cols; ++j)
                    if (col[j]) acc += M.at(i, j).real;
                row[i] = acc > Rational(0) ? 1 : 0;
            }
            for (const auto& s : seen)
                if (s.first == row && s.second == col) return s;
            seen.emplace_back(row, col);
        }
    };
    auto to_int = [](const std::vector<SignalValue>& v) {
        std::vector<int> out;
        for (auto s : v) out.push_back(s == SignalValue::On ? 1 : 0);
        return out;
    };
    auto oracle_min = oracle_pair(A);
    ck.expect(to_int(res.at("min").pair->row_signal.values) == oracle_min.first &&
                  to_int(res.at("min").pair->col_signal.values) == oracle_min.second,
              "min pair disagrees with the brute-force oracle");
    check_pair("min", "110111", "1110"); // column 4 off; the source claims on
    auto oracle_avg = oracle_pair(Avg);
    ck.expect(to_int(res.at("avg").pair->row_signal.values) == oracle_avg.first &&
                  to_int(res.at("avg").pair->col_signal.values) == oracle_avg.second,
              "avg pair disagrees with the brute-force oracle");
    check_pair("avg", "110111", "1111");
}

// Trinary convergence of the indeterminate migration model.
void criterion6(Checker& ck) {
    ModelMatrix M = fixture("nbam_m.fzm");
    BamSeed seed;
    seed.side = BamSeed::Side::Row;
    seed.activation = parse_state("3,4,-1,-3,-2,1");
    FixedSignalPair fsp = bam_converge(M, seed);

    auto raw_is = [&](std::size_t t, std::initializer_list<const char*> toks, const char* what) {
        std::vector<NeutroScalar> want;
        for (const char* x : toks) want.push_back(S(x));
        ck.expect(t < fsp.trajectory.size() && fsp.trajectory[t].raw == want,
                  std::string(what) + " sweep mismatch");
    };
    raw_is(1, {"9", "7", "9", "7", "I"}, "first forward");
    ck.expect(fsp.trajectory[1].signal.values == sigs("1111I"), "first trinary signal");
    // later sweeps follow the derived expansions, not the printed ones
    raw_is(2, {"15+I", "15", "1+I", "6", "12+4I", "2"}, "first backward");
    raw_is(3, {"10", "13", "18", "10+I", "4+I"}, "second forward");
    raw_is(4, {"15+I", "15", "1+I", "6", "16", "2"}, "second backward");

    ck.expect(fsp.is_fixed_pair(), "no fixed trinary pair");
    ck.expect(fsp.row_signal.values == sigs("111111") && fsp.col_signal.values == sigs("11111"),
              "terminal trinary pair mismatch");
    // stability under one extra sweep, recomputed with plain loops
    std::vector<SignalValue> col_again(M.cols());
    for (std::size_t j = 0; j < M.cols(); ++j) {
        NeutroScalar acc;
        for (std::size_t i = 0; i < M.rows(); ++i)
            acc = add(acc, mul(signal_scalar(fsp.row_signal.values[i]), M.at(i, j)));
        col_again[j] = bam_signal(acc);
    }
    std::vector<SignalValue> row_again(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        NeutroScalar acc;
        for (std::size_t j = 0; j < M.cols(); ++j)
            acc = add(acc, mul(signal_scalar(col_again[j]), M.at(i, j)));
        row_again[i] = bam_signal(acc);
    }
    ck.expect(col_again == fsp.col_signal.values && row_again == fsp.row_signal.values,
              "trinary pair not stable under an extra sweep");
}

// Forward and reverse compositions over the bonded-labour panel.
void criterion7(Checker& ck) {
    std::vector<ModelMatrix> panel{fixture("bl_p1.fzm"), fixture("bl_p2.fzm"),
                                   fixture("bl_p3.fzm")};
    ExpertPanel p;
    p.members = panel;
    IntervalModel iv = build_interval(std::move(p), OrderMode::Usual);
    std::vector<std::pair<std::string, const ModelMatrix*>> keyed{
        {"P1", &panel[0]}, {"P2", &panel[1]}, {"P3", &panel[2]}, {"A", &iv.a_min},
        {"B", &iv.b_max},  {"O", &iv.o_opt},  {"avg", &iv.m_avg}};

    std::vector<Rational> q = reals({"0.8", "0.6", "0.7", "0.5"});
    // derived targets; P2's fifth coordinate is 0.8 by its own row, the
    // print says 0.4 (see bl_p1.fzm annotations)
    std::map<std::string, std::vector<Rational>> forward_want{
        {"P1", reals({"0.8", "0.8", "0.4", "0.1", "0.8", "0.5"})},
        {"P2", reals({"0.7", "0.8", "0.3", "0.1", "0.8", "0.5"})},
        {"P3", reals({"0.8", "0.5", "0.3", "0.2", "0.7", "0.5"})},
        {"A", reals({"0.7", "0.5", "0.3", "0.1", "0.7", "0.5"})},
        {"B", reals({"0.8", "0.8", "0.4", "0.2", "0.8", "0.5"})},
        {"O", reals({"0.8", "0.7", "0.35", "0.15", "0.8", "0.5"})},
        {"avg", {R("0.8"), Rational(11, 15), Rational(1, 3), Rational(2, 15), R("0.8"), R("0.5")}}};
    std::vector<Rational> rvec = reals({"0.2", "0.1", "0.7", "0.8", "0.2", "0.1"});
    std::map<std::string, std::vector<Rational>> reverse_want{
        {"P1", reals({"0.2", "0.2", "0.3", "0.4"})},
        {"P2", reals({"0.2", "0.1", "0.2", "0.3"})},
        {"P3", reals({"0.2", "0.2", "0.2", "0.3"})},
        {"A", reals({"0.2", "0.1", "0.2", "0.3"})},
        {"B", reals({"0.2", "0.2", "0.3", "0.4"})},
        {"O", reals({"0.2", "0.15", "0.25", "0.35"})},
        {"avg", {R("0.2"), Rational(1, 6), Rational(7, 30), Rational(1, 3)}}};

    for (const auto& [key, M] : keyed) {
        // forward: straight-loop oracle and engine must both hit the target
        std::vector<Rational> got;
        for (std::size_t i = 0; i < M->rows(); ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < M->cols(); ++j)
                acc = Rational::max(acc, Rational::min(M->at(i, j).real, q[j]));
            got.push_back(acc);
        }
        ck.expect(got == forward_want[key],
                  key + " forward = " + show(got) + ", want " + show(forward_want[key]));
        ModelMatrix qcol(4, 1, ValueDomain::fuzzy_unit());
        for (std::size_t j = 0; j < 4; ++j) qcol.at(j, 0) = NeutroScalar(q[j]);
        ModelMatrix via_engine = forward(*M, qcol, CompositionRule::MaxMin);
        std::vector<Rational> engine_vals;
        for (std::size_t i = 0; i < 6; ++i) engine_vals.push_back(via_engine.at(i, 0).real);
        ck.expect(engine_vals == got, key + " engine forward disagrees with the loop oracle");

        // reverse
        std::vector<Rational> rev;
        for (std::size_t j = 0; j < M->cols(); ++j) {
            Rational acc(0);
            for (std::size_t i = 0; i < M->rows(); ++i)
                acc = Rational::max(acc, Rational::min(M->at(i, j).real, rvec[i]));
            rev.push_back(acc);
        }
        ck.expect(rev == reverse_want[key],
                  key + " reverse = " + show(rev) + ", want " + show(reverse_want[key]));
    }
}

// Grid agreement of the greatest-solution construction, plus the exact
// passenger verifications under max-product.
void criterion8(Checker& ck) {
    // 500 random instances up to 3x3 on the 0.05 grid
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    int disagreements = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = dim(gen), s = dim(gen);
        ModelMatrix Q = random_fuzzy(n, s);
        std::vector<Rational> r;
        if (coin(gen)) {
            std::vector<Rational> pstar;
            for (std::size_t j = 0; j < n; ++j) pstar.push_back(grid_value());
            for (std::size_t k = 0; k < s; ++k) {
                Rational acc(0);
                for (std::size_t j = 0; j < n; ++j)
                    acc = Rational::max(acc, Rational::min(pstar[j], Q.at(j, k).real));
                r.push_back(acc);
            }
        } else {
            for (std::size_t k = 0; k < s; ++k) r.push_back(grid_value());
        }

        // brute force over the full grid
        std::vector<int> idx(n, 0);
        bool any = false;
        std::vector<Rational> best(n, Rational(0));
        while (true) {
            std::vector<Rational> cand;
            for (int v : idx) cand.emplace_back(v, 20);
            bool solves = true;
            for (std::size_t k = 0; k < s && solves; ++k) {
                Rational acc(0);
                for (std::size_t j = 0; j < n; ++j)
                    acc = Rational::max(acc, Rational::min(cand[j], Q.at(j, k).real));
                solves = acc == r[k];
            }
            if (solves) {
                any = true;
                for (std::size_t j = 0; j < n; ++j) best[j] = Rational::max(best[j], cand[j]);
            }
            std::size_t d = 0;
            while (d < n && ++idx[d] > 20) idx[d++] = 0;
            if (d == n) break;
        }

        FreSolution sol = max_solution(Q, r, CompositionRule::MaxMin);
        bool solver_solvable = sol.status == FreSolution::Status::MaxSolution;
        if (solver_solvable != any) ++disagreements;
        if (solver_solvable && any)
            for (std::size_t j = 0; j < n; ++j)
                if (best[j] > sol.p_hat->at(0, j).real) ++disagreements;
    }
    ck.expect(disagreements == 0,
              std::to_string(disagreements) + " grid disagreements out of 500 instances");

    // all five passenger triples verify exactly under max-product
    ModelMatrix qs = fixture("passenger_q.fzm");
    ModelMatrix rs = fixture("passenger_r.fzm");
    for (int block = 0; block < 5; ++block) {
        ModelMatrix P = fixture("passenger_p" + std::to_string(block + 1) + ".fzm");
        for (std::size_t i = 0; i < 3; ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < 3; ++j)
                acc = Rational::max(acc, P.at(i, j).real * qs.at(j, block).real);
            ck.expect(acc == rs.at(i, block).real,
                      "block " + std::to_string(block + 1) + " row " + std::to_string(i + 1) +
                          " composes to " + acc.to_string() + ", want " +
                          rs.at(i, block).real.to_string());
        }
    }
}

// Invariants of interval construction over random panels.
void criterion9(Checker& ck) {
    std::uniform_int_distribution<std::size_t> dim(1, 5), count(1, 4);
    std::uniform_int_distribution<int> small(0, 4);
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t rows = dim(gen), cols = dim(gen), n = count(gen);
        bool neutro = trial % 2 == 1;
        std::vector<ModelMatrix> members;
        if (!neutro) {
            for (std::size_t t = 0; t < n; ++t) members.push_back(random_fuzzy(rows, cols));
        } else {
            // a comparable chain: each member adds a nonnegative bump to the
            // previous one, so usual-mode extrema always exist
            ModelMatrix current(rows, cols, ValueDomain::neutrosophic());
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c)
                    current.at(r, c) = NeutroScalar(Rational(small(gen)), Rational(small(gen)));
            for (std::size_t t = 0; t < n; ++t) {
                members.push_back(current);
                for (std::size_t r = 0; r < rows; ++r)
                    for (std::size_t c = 0; c < cols; ++c)
                        current.at(r, c) = add(current.at(r, c),
                                               NeutroScalar(Rational(small(gen)), Rational(small(gen))));
            }
        }
        ExpertPanel p;
        p.members = members;
        IntervalModel iv = build_interval(p, OrderMode::Usual);
        for (const auto& M : members)
            if (!contains(iv, M)) ++failures;
        if (!contains(iv, iv.o_opt) || !contains(iv, iv.m_avg)) ++failures;

        ExpertPanel widened = p;
        widened.member_ids.clear();
        widened.members.push_back(iv.a_min);
        widened.members.push_back(iv.b_max);
        widened.members.push_back(iv.o_opt);
        widened.members.push_back(iv.m_avg);
        IntervalModel iv2 = build_interval(widened, OrderMode::Usual);
        if (!(iv2.a_min == iv.a_min && iv2.b_max == iv.b_max)) ++failures;

        ExpertPanel shuffled = p;
        shuffled.member_ids.clear();
        std::shuffle(shuffled.members.begin(), shuffled.members.end(), gen);
        IntervalModel iv3 = build_interval(shuffled, OrderMode::Usual);
        if (!(iv3.a_min == iv.a_min && iv3.b_max == iv.b_max && iv3.o_opt == iv.o_opt &&
              iv3.m_avg == iv.m_avg))
            ++failures;

        // pseudo builds never invent entries, even on incomparable panels
        if (neutro) {
            std::vector<ModelMatrix> wild;
            for (std::size_t t = 0; t < n; ++t) {
                ModelMatrix m(rows, cols, ValueDomain::neutrosophic());
                for (std::size_t r = 0; r < rows; ++r)
                    for (std::size_t c = 0; c < cols; ++c)
                        m.at(r, c) = NeutroScalar(Rational(small(gen) - 2), Rational(small(gen) - 2));
                wild.push_back(std::move(m));
            }
            for (OrderMode mode : {OrderMode::PseudoReal, OrderMode::PseudoNeutrosophic}) {
                ExpertPanel wp;
                wp.members = wild;
                IntervalModel ivp = build_interval(wp, mode);
                for (std::size_t r = 0; r < rows; ++r)
                    for (std::size_t c = 0; c < cols; ++c) {
                        bool found_min = false, found_max = false;
                        for (const auto& M : wild) {
                            found_min |= M.at(r, c) == ivp.a_min.at(r, c);
                            found_max |= M.at(r, c) == ivp.b_max.at(r, c);
                        }
                        if (!found_min || !found_max) ++failures;
                    }
            }
        }
    }
    ck.expect(failures == 0, std::to_string(failures) + " invariant violations over 1000 panels");
}

// Dynamics-level guarantees: verified terminals, bounded termination,
// scaling invariance.
void criterion10(Checker& ck) {
    // fixed points re-verified by one extra step on the cognitive panel
    {
        ExpertPanel panel;
        panel.members = {fixture("sd_m1.fzm"), fixture("sd_m2.fzm"), fixture("sd_m3.fzm")};
        panel.member_ids = {"M1", "M2", "M3"};
        IntervalModel iv = build_interval(std::move(panel), OrderMode::Usual, {true});
        Dynamics dyn;
        dyn.kind = Dynamics::Kind::WeightedMaxMin;
        dyn.clamp_on = {0};
        for (const auto& [key, outcome] : fcim_panel_run(iv, parse_state("1,0,0,0,0"), dyn)) {
            const ModelMatrix& E = key == "min"   ? iv.a_min
                                   : key == "max" ? iv.b_max
                                   : key == "opt" ? iv.o_opt
                                   : key == "avg" ? iv.m_avg
                                                  : iv.panel.members[key[1] - '1'];
            ck.expect(outcome.ok() && outcome.pattern->is_fixed_point(), key + " not fixed");
            ck.expect(fcm_step(E, outcome.pattern->terminal, dyn) == outcome.pattern->terminal,
                      key + " fixed point moved under one more step");
        }
    }
    // binary termination within 2^n steps
    {
        std::uniform_int_distribution<int> edge(-1, 1);
        std::uniform_int_distribution<std::size_t> dim(2, 10);
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t n = dim(gen);
            ModelMatrix E(n, n, ValueDomain::signed_fuzzy());
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (r != c) E.at(r, c) = NeutroScalar(Rational(edge(gen)));
            Dynamics dyn;
            dyn.kind = Dynamics::Kind::BinaryThreshold;
            dyn.clamp_on = {0};
            dyn.max_iters = (std::size_t{1} << n) + 2;
            ConceptState x0(n, NeutroScalar(0));
            x0[0] = NeutroScalar(1);
            HiddenPattern hp = hidden_pattern(E, x0, dyn);
            ck.expect(hp.kind != HiddenPattern::Kind::Diverged, "binary run exhausted 2^n steps");
        }
    }
    // trinary termination within 3^n steps
    {
        std::uniform_int_distribution<int> pick(0, 5);
        std::uniform_int_distribution<std::size_t> dim(2, 6);
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t n = dim(gen);
            ModelMatrix E(n, n, ValueDomain::neutrosophic(Rational(1)));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (r != c) {
                        int p = pick(gen);
                        E.at(r, c) = p == 0 ? S("1") : p == 1 ? S("I") : p == 2 ? S("-1") : S("0");
                    }
            Dynamics dyn;
            dyn.kind = Dynamics::Kind::TrinaryThreshold;
            dyn.clamp_on = {0};
            std::size_t bound = 1;
            for (std::size_t i = 0; i < n; ++i) bound *= 3;
            dyn.max_iters = bound + 2;
            ConceptState x0(n, NeutroScalar(0));
            x0[0] = NeutroScalar(1);
            HiddenPattern hp = hidden_pattern(E, x0, dyn);
            ck.expect(hp.kind != HiddenPattern::Kind::Diverged, "trinary run exhausted 3^n steps");
        }
    }
    // signal trajectories invariant under positive scaling
    {
        std::uniform_int_distribution<int> w(-5, 5), cpick(1, 9);
        for (int trial = 0; trial < 50; ++trial) {
            ModelMatrix M(5, 4, ValueDomain::unnormalized());
            for (std::size_t r = 0; r < 5; ++r)
                for (std::size_t c = 0; c < 4; ++c) M.at(r, c) = NeutroScalar(Rational(w(gen)));
            BamSeed seed;
            seed.side = BamSeed::Side::Row;
            seed.activation = parse_state("2,-1,0,3,-2");
            FixedSignalPair base = bam_converge(M, seed);
            FixedSignalPair scaled =
                bam_converge(scale_entries(M, Rational(cpick(gen), cpick(gen))), seed);
            bool same = base.trajectory.size() == scaled.trajectory.size();
            for (std::size_t t = 0; same && t < base.trajectory.size(); ++t)
                same = base.trajectory[t].signal.values == scaled.trajectory[t].signal.values;
            ck.expect(same, "scaling changed a signal trajectory");
            ck.expect(base.kind != FixedSignalPair::Kind::Diverged, "run diverged");
        }
    }
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<void(Checker&)> body;
    };
    const Criterion criteria[] = {
        {1, "neutrosophic 2x3 by 3x4 product, derived (1,1) = 2-4I", criterion1},
        {2, "five-concept weighted cognitive panel: seven exact fixed points", criterion2},
        {3, "five-by-three relational panel: fixed-pair range terminals", criterion3},
        {4, "seven-by-ten recall panel: exact fit vectors", criterion4},
        {5, "migration synaptic panel: fixed binary pairs incl. derived min/avg", criterion5},
        {6, "indeterminate migration model: trinary sweeps and stable pair", criterion6},
        {7, "bonded-labour compositions: forward and reverse, both directions", criterion7},
        {8, "greatest-solution vs 0.05-grid brute force, passenger blocks exact", criterion8},
        {9, "interval invariants over 1000 random panels", criterion9},
        {10, "dynamics guarantees: verified terminals, bounds, scaling", criterion10},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Checker ck;
        try {
            c.body(ck);
        } catch (const std::exception& e) {
            ck.failures.push_back(std::string("exception: ") + e.what());
        }
        if (ck.failures.empty()) {
            std::cout << "PASS: criterion " << c.id << " - " << c.title << "\n";
        } else {
            ++failed;
            std::cout << "FAIL: criterion " << c.id << " - " << c.title << "\n";
            for (const auto& f : ck.failures) std::cout << "      " << f << "\n";
        }
    }
    if (failed) std::cout << failed << " criteria failed\n";
    return failed == 0 ? 0 : 1;
}
