#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "synex/dataset.hpp"
#include "synex/fuzzy.hpp"
#include "synex/lexicon.hpp"

namespace synex {

struct GridSpec {
    std::vector<double> theta1_values; // theta2 = 1 - theta1
    std::vector<int> levels;
    int folds = 10;

    // theta1 0.1 .. 0.9 step 0.1, levels {3, 4}, 10 folds.
    static GridSpec defaults();
};

// fold id per element, folds balanced to within one element.
std::vector<int> kfold_split(std::size_t n, int folds, std::uint64_t seed);

struct TuningCell {
    int level = 0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double mean_rmse = 0.0;
    double mean_mae = 0.0;
};

struct TuningReport {
    std::vector<TuningCell> cells; // levels x theta values, grid order
    std::map<int, TuningCell> best_by_level;
    TuningCell best_overall;
    int folds = 0;
    std::uint64_t seed = 0;
    std::size_t synsets_used = 0;
    std::vector<std::string> skipped_synsets; // dataset ids missing from the lexicon
};

struct TuneOptions {
    GridSpec grid = GridSpec::defaults();
    std::uint64_t seed = 42;
    FirstHop first_hop = FirstHop::synset_terms;
    bool strict_roots = false;
    EnumerationOptions enumeration{};
    int jobs = 0;
};

// K-fold cross validation over the theta grid. Folds partition synsets, not
// rows, so one synset's candidates never straddle folds. Dataset candidates
// the expansion does not propose score 0. Per-cell metrics average the fold
// means; ties on RMSE resolve toward larger theta1.
TuningReport grid_search(const Lexicon& lexicon, const BenchmarkDataset& dataset,
                         const TuneOptions& options = {});

} // namespace synex
