#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "synex/dataset.hpp"

namespace synex {

// Both require equal-length, non-empty inputs.
double rmse(std::span<const double> a, std::span<const double> b);
double mae(std::span<const double> a, std::span<const double> b);

// Algorithm scores keyed by (synset_id, candidate term).
using AlgoScores = std::map<std::pair<std::string, Term>, double>;

struct AgreementReport {
    // "L1".."L4", "Avg" and optionally "Algo". Matrices are symmetric with a
    // zero diagonal. Pairs involving the algorithm column are computed over
    // the rows the algorithm covers; rater-only pairs use every row.
    std::vector<std::string> raters;
    std::vector<std::vector<double>> rmse_matrix;
    std::vector<std::vector<double>> mae_matrix;
    std::vector<double> means;
    std::vector<double> stddevs; // sample standard deviation, N-1
    std::size_t row_count = 0;
    std::size_t algo_rows = 0;
    std::size_t algo_missing = 0;
};

AgreementReport agreement_matrix(const BenchmarkDataset& dataset,
                                 const AlgoScores* algo = nullptr);

} // namespace synex
