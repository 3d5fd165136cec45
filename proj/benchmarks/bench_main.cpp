#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "synex/fuzzy.hpp"
#include "synex/graph.hpp"
#include "synex/lexicon.hpp"
#include "synex/random.hpp"

namespace {

using namespace synex;

// Synthetic lexicon: `synsets` synsets drawing 2..5 terms from a vocabulary
// about a quarter that size, so terms recur and the graph has real cycles.
Lexicon synthetic_lexicon(std::size_t synsets, std::uint64_t seed) {
    Rng rng(seed);
    std::size_t vocabulary = synsets / 4 + 8;
    std::vector<Synset> out;
    out.reserve(synsets);
    for (std::size_t i = 0; i < synsets; ++i) {
        Synset s;
        s.id = "s" + std::to_string(i);
        std::size_t size = 2 + rng.below(4);
        while (s.terms.size() < size) {
            Term t{"w" + std::to_string(rng.below(vocabulary)), "xx"};
            bool duplicate = false;
            for (const Term& existing : s.terms) duplicate |= existing == t;
            if (!duplicate) s.terms.push_back(std::move(t));
        }
        out.push_back(std::move(s));
    }
    return Lexicon(std::move(out));
}

void BM_BuildGraph(benchmark::State& state) {
    Lexicon lexicon = synthetic_lexicon(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        SynonymyGraph g = SynonymyGraph::build(lexicon);
        benchmark::DoNotOptimize(g.edge_count());
    }
}
BENCHMARK(BM_BuildGraph)->Arg(100)->Arg(1000)->Arg(10000);

void BM_EnumerateCycles(benchmark::State& state) {
    Lexicon lexicon = synthetic_lexicon(2000, 7);
    SynonymyGraph g = SynonymyGraph::build(lexicon);
    const Synset& synset = lexicon.synsets()[42];
    int level = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SynsetCycles cycles = enumerate_synset_cycles(g, synset, level);
        benchmark::DoNotOptimize(cycles.paths.size());
    }
}
BENCHMARK(BM_EnumerateCycles)->Arg(3)->Arg(4);

void BM_ExpandSynset(benchmark::State& state) {
    Lexicon lexicon = synthetic_lexicon(2000, 7);
    SynonymyGraph g = SynonymyGraph::build(lexicon);
    const Synset& synset = lexicon.synsets()[42];
    ExpandOptions eo;
    eo.params.level = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ExpansionResult r = expand_synset(g, synset, eo);
        benchmark::DoNotOptimize(r.candidates.size());
    }
}
BENCHMARK(BM_ExpandSynset)->Arg(3)->Arg(4);

void BM_ExpandAll(benchmark::State& state) {
    Lexicon lexicon = synthetic_lexicon(static_cast<std::size_t>(state.range(0)), 7);
    SynonymyGraph g = SynonymyGraph::build(lexicon);
    ExpandOptions eo;
    eo.params.level = 3;
    for (auto _ : state) {
        std::size_t total = 0;
        for (const Synset& s : lexicon.synsets())
            total += expand_synset(g, s, eo).candidates.size();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_ExpandAll)->Arg(500);

} // namespace

BENCHMARK_MAIN();
