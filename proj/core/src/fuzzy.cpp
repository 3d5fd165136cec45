#include "synex/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "synex/errors.hpp"

namespace synex {

void FuzzyParams::validate() const {
    if (level < 2) throw ArgumentError("level must be at least 2");
    if (theta1 < 0.0 || theta1 > 1.0 || theta2 < 0.0 || theta2 > 1.0)
        throw ArgumentError("theta weights must lie in [0, 1]");
    if (std::abs(theta1 + theta2 - 1.0) > 1e-9)
        throw ArgumentError("theta1 + theta2 must equal 1");
}

std::set<Term> extract_candidates(std::span<const CyclicPath> paths, const Synset& synset) {
    std::set<Term> members(synset.terms.begin(), synset.terms.end());
    std::set<Term> out;
    for (const CyclicPath& p : paths)
        for (const Term& t : p.nodes)
            if (!members.contains(t)) out.insert(t);
    return out;
}

ExpansionResult score_candidates(const SynsetCycles& cycles, const Synset& synset,
                                 const FuzzyParams& params, bool strict_roots) {
    params.validate();

    std::set<Term> members(synset.terms.begin(), synset.terms.end());
    struct Tally {
        std::size_t paths = 0;
        std::vector<Term> roots;
    };
    std::map<Term, Tally> tallies;

    for (const CyclicPath& p : cycles.paths) {
        const Term& root = p.nodes.front();
        // Interior nodes only; both endpoints are the root, a synset member.
        for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) {
            const Term& t = p.nodes[i];
            if (members.contains(t)) continue;
            Tally& tally = tallies[t];
            ++tally.paths;
            if (std::find(tally.roots.begin(), tally.roots.end(), root) == tally.roots.end())
                tally.roots.push_back(root);
        }
    }

    ExpansionResult result;
    result.synset = synset;
    result.params = params;
    result.cycle_count = cycles.paths.size();
    result.skipped_terms = cycles.skipped_terms;

    const std::size_t total_paths = cycles.paths.size();
    const std::size_t total_roots =
        strict_roots ? synset.terms.size() : cycles.roots_present.size();

    result.candidates.reserve(tallies.size());
    for (const auto& [term, tally] : tallies) {
        CandidateSynonym c;
        c.term = term;
        c.paths_containing = tally.paths;
        c.total_paths = total_paths;
        c.roots_covered = tally.roots.size();
        c.total_roots = total_roots;
        c.path_coverage = total_paths ? static_cast<double>(tally.paths) / total_paths : 0.0;
        c.root_coverage = total_roots ? static_cast<double>(tally.roots.size()) / total_roots : 0.0;
        c.fuzzy = params.theta1 * c.path_coverage + params.theta2 * c.root_coverage;
        result.candidates.push_back(std::move(c));
    }
    std::stable_sort(result.candidates.begin(), result.candidates.end(),
                     [](const CandidateSynonym& a, const CandidateSynonym& b) {
                         if (a.fuzzy != b.fuzzy) return a.fuzzy > b.fuzzy;
                         return a.term < b.term;
                     });
    return result;
}

ExpansionResult expand_synset(const SynonymyGraph& graph, const Synset& synset,
                              const ExpandOptions& options) {
    options.params.validate();
    SynsetCycles cycles = enumerate_synset_cycles(graph, synset, options.params.level,
                                                  options.first_hop, options.enumeration);
    return score_candidates(cycles, synset, options.params, options.strict_roots);
}

ExpansionResult expand_synset(const Lexicon& lexicon, const Synset& synset,
                              const ExpandOptions& options) {
    return expand_synset(SynonymyGraph::build(lexicon), synset, options);
}

ExpansionResult apply_threshold(ExpansionResult result, double threshold) {
    if (threshold < 0.0 || threshold > 1.0)
        throw ArgumentError("threshold must lie in [0, 1]");
    std::erase_if(result.candidates,
                  [threshold](const CandidateSynonym& c) { return c.fuzzy < threshold; });
    return result;
}

} // namespace synex
