#pragma once

#include <set>
#include <span>
#include <vector>

#include "synex/graph.hpp"
#include "synex/lexicon.hpp"

namespace synex {

struct FuzzyParams {
    double theta1 = 0.5;
    double theta2 = 0.5;
    int level = 4;

    // theta1 + theta2 must equal 1 within 1e-9, both weights in [0, 1],
    // level >= 2. Throws ArgumentError otherwise.
    void validate() const;
};

struct CandidateSynonym {
    Term term;
    double path_coverage; // P: pooled paths containing the term / pooled paths
    double root_coverage; // Q: roots whose cycles contain the term / root count
    double fuzzy;         // theta1 * P + theta2 * Q
    std::size_t paths_containing = 0;
    std::size_t total_paths = 0;
    std::size_t roots_covered = 0;
    std::size_t total_roots = 0;
};

struct ExpansionResult {
    Synset synset;
    FuzzyParams params;
    // Sorted by fuzzy descending, ties by (lang, surface) ascending.
    std::vector<CandidateSynonym> candidates;
    std::size_t cycle_count = 0;
    std::vector<Term> skipped_terms;
};

struct ExpandOptions {
    FuzzyParams params{};
    FirstHop first_hop = FirstHop::synset_terms;
    // When set, the Q denominator counts every synset term, including ones
    // missing from the graph. Default counts graph-resident roots only.
    bool strict_roots = false;
    EnumerationOptions enumeration{};
};

// Terms occurring in the paths that are not members of the synset.
std::set<Term> extract_candidates(std::span<const CyclicPath> paths, const Synset& synset);

ExpansionResult score_candidates(const SynsetCycles& cycles, const Synset& synset,
                                 const FuzzyParams& params, bool strict_roots = false);

ExpansionResult expand_synset(const SynonymyGraph& graph, const Synset& synset,
                              const ExpandOptions& options = {});
ExpansionResult expand_synset(const Lexicon& lexicon, const Synset& synset,
                              const ExpandOptions& options = {});

// Keeps candidates with fuzzy >= threshold; threshold must lie in [0, 1].
ExpansionResult apply_threshold(ExpansionResult result, double threshold);

} // namespace synex
