#include "nioa/comparison.hpp"

#include <algorithm>
#include <stdexcept>

namespace nioa {

Optimality classify_optimality(double f, const std::vector<double>& pool, double eps) {
    if (pool.empty()) throw std::domain_error("optimality pool is empty");
    const auto [lo, hi] = std::minmax_element(pool.begin(), pool.end());
    if (f >= *hi - eps) return Optimality::best; // best wins when the bands overlap
    if (f <= *lo + eps) return Optimality::worst;
    return Optimality::average;
}

Comparability classify_comparability(double f_p, double f_q, double eps) {
    if (f_p > f_q + eps) return Comparability::win;
    if (f_p < f_q - eps) return Comparability::loose;
    return Comparability::tie;
}

PrasatulMatrix build_prasatul(const std::vector<double>& runs_p,
                              const std::vector<double>& runs_q, double eps, PoolMode pool) {
    if (runs_p.size() != runs_q.size()) {
        throw std::domain_error("paired run lists differ in length: " +
                                std::to_string(runs_p.size()) + " vs " +
                                std::to_string(runs_q.size()));
    }
    if (runs_p.empty()) throw std::domain_error("no pairs to compare");

    std::vector<double> pooled = runs_p;
    if (pool == PoolMode::both) pooled.insert(pooled.end(), runs_q.begin(), runs_q.end());

    PrasatulMatrix m;
    m.total = static_cast<int>(runs_p.size());
    const double w = 1.0 / static_cast<double>(m.total);
    for (std::size_t i = 0; i < runs_p.size(); ++i) {
        const auto row = classify_optimality(runs_p[i], pooled, eps);
        const auto col = classify_comparability(runs_p[i], runs_q[i], eps);
        m.cells[static_cast<int>(row)][static_cast<int>(col)] += w;
    }
    return m;
}

std::pair<double, double> d_scores(const PrasatulMatrix& m) {
    auto rate = [](double part, double whole) { return whole > 0.0 ? part / whole : 0.0; };
    const int win = static_cast<int>(Comparability::win);
    const int best = static_cast<int>(Optimality::best);

    const double O1 = rate(m.cells[0][win], m.row_sum(0));
    const double O2 = rate(m.cells[1][win], m.row_sum(1));
    const double O3 = rate(m.cells[2][win], m.row_sum(2));
    const double DO = O1 + 0.5 * O2 - O3;

    const double C1 = rate(m.cells[best][0], m.col_sum(0));
    const double C2 = rate(m.cells[best][1], m.col_sum(1));
    const double C3 = rate(m.cells[best][2], m.col_sum(2));
    const double DC = C1 + 0.5 * C2 - C3;
    return {DO, DC};
}

std::tuple<double, double, double> k_scores(const PrasatulMatrix& m) {
    const double KO = m.row_sum(0) + 0.5 * m.row_sum(1) - m.row_sum(2);
    const double KC = m.col_sum(0) + 0.5 * m.col_sum(1) - m.col_sum(2);
    // Overlap of {best, average} rows with {win, tie} columns.
    const double KT = m.cells[0][0] + m.cells[0][1] + m.cells[1][0] + m.cells[1][1];
    return {KO, KC, KT};
}

AveragedScores average_scores(const std::vector<ScoreSet>& scores) {
    if (scores.empty()) throw std::domain_error("no score sets to average");
    AveragedScores avg;
    avg.dataset = scores.front().dataset;
    avg.primary = scores.front().primary;
    for (const auto& s : scores) {
        if (s.dataset != avg.dataset || s.primary != avg.primary) {
            throw std::invalid_argument("score sets mix datasets or primaries: (" +
                                        avg.dataset + ", " + avg.primary + ") vs (" +
                                        s.dataset + ", " + s.primary + ")");
        }
        avg.ADO += s.DO;
        avg.ADC += s.DC;
        avg.AKO += s.KO;
        avg.AKC += s.KC;
        avg.AKT += s.KT;
    }
    const double n = static_cast<double>(scores.size());
    avg.ADO /= n;
    avg.ADC /= n;
    avg.AKO /= n;
    avg.AKC /= n;
    avg.AKT /= n;
    return avg;
}

std::vector<std::pair<std::string, int>>
rank(const std::vector<std::pair<std::string, double>>& algorithm_scores) {
    auto sorted = algorithm_scores;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::vector<std::pair<std::string, int>> out;
    out.reserve(sorted.size());
    for (const auto& [name, score] : sorted) {
        int better = 0;
        for (const auto& other : algorithm_scores) {
            if (other.second > score) ++better;
        }
        out.emplace_back(name, better + 1);
    }
    return out;
}

} // namespace nioa
