#include "synex/masking.hpp"

#include <algorithm>
#include <cmath>

#include "synex/errors.hpp"
#include "synex/parallel.hpp"
#include "synex/random.hpp"

namespace synex {

std::string to_string(MaskingStrategyKind kind) {
    switch (kind) {
    case MaskingStrategyKind::highest: return "highest";
    case MaskingStrategyKind::lowest: return "lowest";
    case MaskingStrategyKind::average: return "average";
    case MaskingStrategyKind::random: return "random";
    }
    return "unknown";
}

MaskingStrategyKind parse_strategy(std::string_view name) {
    if (name == "highest") return MaskingStrategyKind::highest;
    if (name == "lowest") return MaskingStrategyKind::lowest;
    if (name == "average") return MaskingStrategyKind::average;
    if (name == "random") return MaskingStrategyKind::random;
    throw ArgumentError("unknown masking strategy '" + std::string(name) + "'");
}

namespace {

const Term* pick_term(const Synset& synset, const Lexicon& lexicon,
                      const MaskingStrategy& strategy, Rng& rng) {
    const auto& terms = synset.terms;
    switch (strategy.kind) {
    case MaskingStrategyKind::highest:
    case MaskingStrategyKind::lowest: {
        bool want_highest = strategy.kind == MaskingStrategyKind::highest;
        const Term* best = nullptr;
        std::size_t best_freq = 0;
        for (const Term& t : terms) {
            std::size_t freq = lexicon.term_frequency(t);
            if (!best || (want_highest ? freq > best_freq : freq < best_freq) ||
                (freq == best_freq && t < *best)) {
                best = &t;
                best_freq = freq;
            }
        }
        return best;
    }
    case MaskingStrategyKind::average: {
        double sum = 0.0;
        for (const Term& t : terms) sum += static_cast<double>(lexicon.term_frequency(t));
        double target = sum / static_cast<double>(terms.size());
        const Term* best = nullptr;
        std::size_t best_freq = 0;
        double best_dist = 0.0;
        for (const Term& t : terms) {
            std::size_t freq = lexicon.term_frequency(t);
            double dist = std::abs(static_cast<double>(freq) - target);
            bool take = !best || dist < best_dist ||
                        (dist == best_dist && freq < best_freq) ||
                        (dist == best_dist && freq == best_freq && t < *best);
            if (take) {
                best = &t;
                best_freq = freq;
                best_dist = dist;
            }
        }
        return best;
    }
    case MaskingStrategyKind::random:
        return &terms[rng.below(terms.size())];
    }
    return nullptr;
}

} // namespace

std::vector<MaskingSample> select_samples(const Lexicon& lexicon,
                                          const MaskingStrategy& strategy) {
    std::vector<MaskingSample> samples;
    Rng rng(strategy.seed);
    for (const Synset& synset : lexicon.synsets()) {
        if (synset.terms.size() <= 2) continue;
        const Term* picked = pick_term(synset, lexicon, strategy, rng);
        std::size_t freq = lexicon.term_frequency(*picked);
        if (freq <= 1) continue;
        MaskingSample sample;
        sample.synset_id = synset.id;
        sample.masked = *picked;
        sample.masked_frequency = freq;
        samples.push_back(std::move(sample));
    }
    return samples;
}

MaskingReport run_masking(const SynonymyGraph& graph, const Lexicon& lexicon,
                          std::vector<MaskingSample> samples, MaskingStrategy strategy,
                          const MaskOptions& options) {
    if (samples.empty()) throw ArgumentError("no masking samples");
    options.params.validate();

    parallel_for(samples.size(), options.jobs, [&](std::size_t i) {
        MaskingSample& sample = samples[i];
        const Synset* synset = lexicon.find(sample.synset_id);
        if (!synset) throw ArgumentError("sample synset '" + sample.synset_id +
                                         "' is not in the lexicon");
        Synset reduced;
        reduced.id = synset->id;
        for (const Term& t : synset->terms)
            if (t != sample.masked) reduced.terms.push_back(t);
        if (reduced.terms.size() == synset->terms.size())
            throw ArgumentError("masked term " + to_string(sample.masked) +
                                " is not a member of synset '" + synset->id + "'");

        bool resident = std::any_of(reduced.terms.begin(), reduced.terms.end(),
                                    [&](const Term& t) { return graph.node_of(t).has_value(); });
        if (!resident) {
            sample.no_resident_root = true;
            return;
        }

        ExpandOptions eo;
        eo.params = options.params;
        eo.first_hop = options.first_hop;
        eo.strict_roots = options.strict_roots;
        eo.enumeration = options.enumeration;
        ExpansionResult expansion = expand_synset(graph, reduced, eo);

        for (const CandidateSynonym& c : expansion.candidates) {
            if (c.term == sample.masked) {
                std::size_t greater = 0;
                for (const CandidateSynonym& other : expansion.candidates) {
                    if (other.fuzzy > c.fuzzy) ++greater;
                }
                sample.rank = greater + 1;
                sample.fuzzy = c.fuzzy;
                break;
            }
        }
    });

    MaskingReport report;
    report.strategy = strategy.kind;
    report.params = options.params;
    report.sample_size = samples.size();
    for (const MaskingSample& sample : samples) {
        if (sample.no_resident_root) {
            ++report.no_resident_root;
            ++report.not_retrieved;
            continue;
        }
        if (!sample.rank) {
            ++report.not_retrieved;
            continue;
        }
        ++report.rank_histogram[*sample.rank];
        if (*sample.rank == 1) ++report.hits;
    }
    report.accuracy = static_cast<double>(report.hits) / static_cast<double>(report.sample_size);
    report.samples = std::move(samples);
    return report;
}

MaskingReport run_masking(const Lexicon& lexicon, std::vector<MaskingSample> samples,
                          MaskingStrategy strategy, const MaskOptions& options) {
    return run_masking(SynonymyGraph::build(lexicon), lexicon, std::move(samples), strategy,
                       options);
}

} // namespace synex
