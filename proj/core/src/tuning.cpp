#include "synex/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "synex/agreement.hpp"
#include "synex/errors.hpp"
#include "synex/graph.hpp"
#include "synex/parallel.hpp"
#include "synex/random.hpp"

namespace synex {

GridSpec GridSpec::defaults() {
    GridSpec g;
    for (int i = 1; i <= 9; ++i) g.theta1_values.push_back(i / 10.0);
    g.levels = {3, 4};
    g.folds = 10;
    return g;
}

std::vector<int> kfold_split(std::size_t n, int folds, std::uint64_t seed) {
    if (folds < 2) throw ArgumentError("need at least 2 folds");
    if (static_cast<std::size_t>(folds) > n)
        throw ArgumentError("more folds than elements to split");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rng rng(seed);
    rng.shuffle(perm);
    std::vector<int> assignment(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        assignment[perm[i]] = static_cast<int>(i % static_cast<std::size_t>(folds));
    return assignment;
}

namespace {

struct SynsetRows {
    const Synset* synset = nullptr;
    std::vector<std::size_t> rows;
};

} // namespace

TuningReport grid_search(const Lexicon& lexicon, const BenchmarkDataset& dataset,
                         const TuneOptions& options) {
    const GridSpec& grid = options.grid;
    if (grid.theta1_values.empty()) throw ArgumentError("empty theta grid");
    for (double t : grid.theta1_values)
        if (t < 0.0 || t > 1.0) throw ArgumentError("theta1 values must lie in [0, 1]");
    if (grid.levels.empty()) throw ArgumentError("empty level list");
    for (int level : grid.levels)
        if (level < 2) throw ArgumentError("level must be at least 2");
    if (dataset.rows.empty()) throw ArgumentError("empty dataset");

    TuningReport report;
    report.folds = grid.folds;
    report.seed = options.seed;

    // Group rows by synset id, first-seen order, dropping ids the lexicon
    // does not know.
    std::vector<SynsetRows> groups;
    {
        std::map<std::string, std::size_t> index;
        std::vector<std::string> unknown_seen;
        for (std::size_t r = 0; r < dataset.rows.size(); ++r) {
            const std::string& id = dataset.rows[r].synset_id;
            auto it = index.find(id);
            if (it == index.end()) {
                const Synset* s = lexicon.find(id);
                if (!s) {
                    if (std::find(unknown_seen.begin(), unknown_seen.end(), id) ==
                        unknown_seen.end()) {
                        unknown_seen.push_back(id);
                        report.skipped_synsets.push_back(id);
                    }
                    continue;
                }
                it = index.emplace(id, groups.size()).first;
                groups.push_back({s, {}});
            }
            groups[it->second].rows.push_back(r);
        }
    }
    if (groups.empty()) throw ArgumentError("no dataset synset appears in the lexicon");
    report.synsets_used = groups.size();

    std::vector<int> folds = kfold_split(groups.size(), grid.folds, options.seed);

    // Path and root coverage are theta independent, so each (synset, level)
    // pair is expanded once and every theta cell reuses the coverages.
    SynonymyGraph graph = SynonymyGraph::build(lexicon);
    const std::size_t n_levels = grid.levels.size();
    std::vector<std::vector<std::vector<std::pair<double, double>>>> coverage(n_levels);
    for (auto& per_level : coverage) per_level.resize(groups.size());

    parallel_for(n_levels * groups.size(), options.jobs, [&](std::size_t task) {
        std::size_t li = task / groups.size();
        std::size_t si = task % groups.size();
        ExpandOptions eo;
        eo.params.level = grid.levels[li];
        eo.first_hop = options.first_hop;
        eo.strict_roots = options.strict_roots;
        eo.enumeration = options.enumeration;
        ExpansionResult expansion = expand_synset(graph, *groups[si].synset, eo);

        std::map<Term, std::pair<double, double>> by_term;
        for (const auto& c : expansion.candidates)
            by_term[c.term] = {c.path_coverage, c.root_coverage};

        auto& slot = coverage[li][si];
        slot.reserve(groups[si].rows.size());
        for (std::size_t r : groups[si].rows) {
            auto it = by_term.find(dataset.rows[r].candidate);
            if (it == by_term.end()) slot.emplace_back(0.0, 0.0);
            else slot.push_back(it->second);
        }
    });

    for (std::size_t li = 0; li < n_levels; ++li) {
        for (double theta1 : grid.theta1_values) {
            double theta2 = 1.0 - theta1;
            double rmse_sum = 0.0, mae_sum = 0.0;
            std::size_t folds_counted = 0;
            for (int f = 0; f < grid.folds; ++f) {
                double sq = 0.0, ab = 0.0;
                std::size_t n = 0;
                for (std::size_t si = 0; si < groups.size(); ++si) {
                    if (folds[si] != f) continue;
                    const auto& slot = coverage[li][si];
                    for (std::size_t k = 0; k < slot.size(); ++k) {
                        double predicted = theta1 * slot[k].first + theta2 * slot[k].second;
                        double target = dataset.rows[groups[si].rows[k]].average;
                        double d = predicted - target;
                        sq += d * d;
                        ab += std::abs(d);
                        ++n;
                    }
                }
                if (n == 0) continue;
                rmse_sum += std::sqrt(sq / static_cast<double>(n));
                mae_sum += ab / static_cast<double>(n);
                ++folds_counted;
            }
            TuningCell cell;
            cell.level = grid.levels[li];
            cell.theta1 = theta1;
            cell.theta2 = theta2;
            cell.mean_rmse = folds_counted ? rmse_sum / static_cast<double>(folds_counted) : 0.0;
            cell.mean_mae = folds_counted ? mae_sum / static_cast<double>(folds_counted) : 0.0;
            report.cells.push_back(cell);
        }
    }

    // Ties on RMSE resolve toward the larger theta1.
    auto better = [](const TuningCell& a, const TuningCell& b) {
        if (a.mean_rmse != b.mean_rmse) return a.mean_rmse < b.mean_rmse;
        return a.theta1 > b.theta1;
    };
    for (const TuningCell& cell : report.cells) {
        auto [it, inserted] = report.best_by_level.try_emplace(cell.level, cell);
        if (!inserted && better(cell, it->second)) it->second = cell;
    }
    report.best_overall = report.cells.front();
    for (const TuningCell& cell : report.cells)
        if (better(cell, report.best_overall)) report.best_overall = cell;
    return report;
}

} // namespace synex
