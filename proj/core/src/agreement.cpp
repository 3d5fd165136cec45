#include "synex/agreement.hpp"

#include <cmath>

#include "synex/errors.hpp"
#include "synex/stats.hpp"

namespace synex {

double rmse(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ArgumentError("rmse needs equal-length inputs");
    if (a.empty()) throw ArgumentError("rmse needs non-empty inputs");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(a.size()));
}

double mae(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ArgumentError("mae needs equal-length inputs");
    if (a.empty()) throw ArgumentError("mae needs non-empty inputs");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
    return acc / static_cast<double>(a.size());
}

AgreementReport agreement_matrix(const BenchmarkDataset& dataset, const AlgoScores* algo) {
    if (dataset.rows.empty()) throw ArgumentError("agreement needs a non-empty dataset");

    AgreementReport report;
    report.raters = {"L1", "L2", "L3", "L4", "Avg"};
    report.row_count = dataset.rows.size();

    // Column vectors over all rows.
    std::vector<std::vector<double>> columns(5);
    for (auto& c : columns) c.reserve(dataset.rows.size());
    for (const auto& row : dataset.rows) {
        for (std::size_t i = 0; i < 4; ++i) columns[i].push_back(row.linguist_scores[i]);
        columns[4].push_back(row.average);
    }

    // Rows the algorithm covers, as parallel restricted vectors.
    std::vector<std::vector<double>> restricted(5);
    std::vector<double> algo_column;
    if (algo) {
        for (const auto& row : dataset.rows) {
            auto it = algo->find({row.synset_id, row.candidate});
            if (it == algo->end()) {
                ++report.algo_missing;
                continue;
            }
            algo_column.push_back(it->second);
            for (std::size_t i = 0; i < 4; ++i) restricted[i].push_back(row.linguist_scores[i]);
            restricted[4].push_back(row.average);
        }
        report.algo_rows = algo_column.size();
        if (algo_column.empty())
            throw ArgumentError("algorithm scores cover none of the dataset rows");
        report.raters.push_back("Algo");
    }

    const std::size_t k = report.raters.size();
    report.rmse_matrix.assign(k, std::vector<double>(k, 0.0));
    report.mae_matrix.assign(k, std::vector<double>(k, 0.0));

    auto column_view = [&](std::size_t i, bool for_algo_pair) -> const std::vector<double>& {
        if (i == 5) return algo_column;
        return for_algo_pair ? restricted[i] : columns[i];
    };
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            bool algo_pair = (j == 5);
            const auto& a = column_view(i, algo_pair);
            const auto& b = column_view(j, algo_pair);
            double r = rmse(a, b);
            double m = mae(a, b);
            report.rmse_matrix[i][j] = report.rmse_matrix[j][i] = r;
            report.mae_matrix[i][j] = report.mae_matrix[j][i] = m;
        }
    }

    for (std::size_t i = 0; i < k; ++i) {
        const auto& c = (i == 5) ? algo_column : columns[i];
        report.means.push_back(mean(c));
        report.stddevs.push_back(sample_stddev(c));
    }
    return report;
}

} // namespace synex
