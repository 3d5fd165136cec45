#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "synex/term.hpp"

namespace synex {

// One human-annotated candidate. Scores are stored normalized to [0, 1].
struct AnnotatedCandidate {
    std::string synset_id;
    Term candidate;
    std::array<double, 4> linguist_scores{};
    double average = 0.0;
};

struct BenchmarkDataset {
    std::vector<AnnotatedCandidate> rows;

    std::size_t candidate_count() const noexcept { return rows.size(); }
    std::size_t synset_count() const;
    std::vector<std::string> synset_ids() const; // distinct, in first-seen order
};

struct DatasetLoadStats {
    bool had_header = false;
    std::size_t average_recomputed = 0; // stored average disagreed by > 0.005
    std::vector<std::string> warnings;
};

struct DatasetLoadResult {
    BenchmarkDataset dataset;
    DatasetLoadStats stats;
};

// CSV columns: synset_id, candidate_surface, candidate_lang, score_l1 ..
// score_l4 [, average]. Raw scores are on the 0..100 scale and divided by
// 100; out-of-range values are an error naming the line. A header row is
// detected by a non-numeric score field.
DatasetLoadResult load_dataset(const std::filesystem::path& path);
DatasetLoadResult parse_dataset(std::istream& in, const std::string& name = "<stream>");

void write_dataset(const BenchmarkDataset& dataset, std::ostream& out);

} // namespace synex
