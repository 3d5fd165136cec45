#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synex/fuzzy.hpp"
#include "synex/lexicon.hpp"

namespace synex {

enum class MaskingStrategyKind { highest, lowest, average, random };

std::string to_string(MaskingStrategyKind kind);
MaskingStrategyKind parse_strategy(std::string_view name);

struct MaskingStrategy {
    MaskingStrategyKind kind = MaskingStrategyKind::highest;
    std::uint64_t seed = 42; // random strategy only
};

struct MaskingSample {
    std::string synset_id;
    Term masked;
    std::size_t masked_frequency = 0;
    // Outcome fields, filled by run_masking. rank is 1-based; a tie on the
    // top fuzzy value counts as rank 1.
    std::optional<std::size_t> rank;
    std::optional<double> fuzzy;
    bool no_resident_root = false; // reduced synset had no graph-resident term
};

// One sample per eligible synset. A synset qualifies when it has more than
// two terms and the term the strategy picks has frequency > 1. highest and
// lowest break frequency ties lexicographically; average picks the term
// nearest the synset's mean frequency, preferring the lower frequency and
// then lexicographic order.
std::vector<MaskingSample> select_samples(const Lexicon& lexicon,
                                          const MaskingStrategy& strategy);

struct MaskingReport {
    MaskingStrategyKind strategy = MaskingStrategyKind::highest;
    FuzzyParams params{};
    std::size_t sample_size = 0;
    std::size_t hits = 0; // masked term retrieved at rank 1
    double accuracy = 0.0;
    std::map<std::size_t, std::size_t> rank_histogram;
    std::size_t not_retrieved = 0;
    std::size_t no_resident_root = 0;
    std::vector<MaskingSample> samples;
};

struct MaskOptions {
    FuzzyParams params{};
    FirstHop first_hop = FirstHop::synset_terms;
    bool strict_roots = false;
    EnumerationOptions enumeration{};
    int jobs = 0;
};

// Expands each sample's synset with the masked term removed, against the
// full graph (the graph is not rebuilt), and records the rank of the masked
// term among the returned candidates.
MaskingReport run_masking(const SynonymyGraph& graph, const Lexicon& lexicon,
                          std::vector<MaskingSample> samples,
                          MaskingStrategy strategy, const MaskOptions& options = {});
MaskingReport run_masking(const Lexicon& lexicon, std::vector<MaskingSample> samples,
                          MaskingStrategy strategy, const MaskOptions& options = {});

} // namespace synex
