#pragma once

#include <array>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace nioa {

// How good one run's fitness is relative to the pooled sample extremes.
enum class Optimality { best = 0, average = 1, worst = 2 };

// Pairwise outcome of the primary's run against the alternative's.
enum class Comparability { win = 0, tie = 1, loose = 2 };

// Which samples form the pool that anchors best/worst classification.
enum class PoolMode { both, primary };

// 3x3 contingency structure over paired runs: rows = optimality level of the
// primary's solution, columns = win/tie/loose against the alternative.
// cells hold the mass normalized by the number of pairs, so they sum to 1.
struct PrasatulMatrix {
    std::array<std::array<double, 3>, 3> cells{};
    int total = 0;

    double row_sum(int r) const { return cells[r][0] + cells[r][1] + cells[r][2]; }
    double col_sum(int c) const { return cells[0][c] + cells[1][c] + cells[2][c]; }
};

// best when f >= max(pool) - eps (takes precedence), worst when
// f <= min(pool) + eps, otherwise average. Throws std::domain_error on an
// empty pool.
Optimality classify_optimality(double f, const std::vector<double>& pool, double eps);

// win when f_p > f_q + eps, loose when f_p < f_q - eps, else tie.
Comparability classify_comparability(double f_p, double f_q, double eps);

// Tallies one cell per pair (i-th of runs_p vs i-th of runs_q) and normalizes
// by the pair count. The optimality pool is both lists merged (PoolMode::both)
// or the primary's alone. Throws std::domain_error when the lists are empty or
// of different lengths.
PrasatulMatrix build_prasatul(const std::vector<double>& runs_p,
                              const std::vector<double>& runs_q, double eps,
                              PoolMode pool = PoolMode::both);

// Five scores for one (primary, alternative) pair on one dataset.
struct ScoreSet {
    std::string dataset;
    std::string primary;
    std::string alternative;
    double DO = 0, DC = 0, KO = 0, KC = 0, KT = 0;
};

struct AveragedScores {
    std::string dataset;
    std::string primary;
    double ADO = 0, ADC = 0, AKO = 0, AKC = 0, AKT = 0;
};

// DO = O1 + 0.5*O2 - O3 with O_l the conditional win rate of optimality row l
// (cell(l,win)/rowsum(l), 0 for an empty row); DC = C1 + 0.5*C2 - C3 with C_m
// the conditional best rate of comparability column m.
std::pair<double, double> d_scores(const PrasatulMatrix& m);

// KO/KC from the row/column marginal masses (m1 + 0.5*m2 - m3); KT is the
// overlap mass of {best, average} x {win, tie}.
std::tuple<double, double, double> k_scores(const PrasatulMatrix& m);

// Fieldwise arithmetic mean. Throws std::domain_error on an empty list and
// std::invalid_argument when entries mix datasets or primaries.
AveragedScores average_scores(const std::vector<ScoreSet>& scores);

// Competition ranking, highest score first: rank = 1 + number of strictly
// better scores, so ties share the smaller rank. Output sorted by score
// descending, name ascending (the name order only breaks display ties).
std::vector<std::pair<std::string, int>>
rank(const std::vector<std::pair<std::string, double>>& algorithm_scores);

} // namespace nioa
