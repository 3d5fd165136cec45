#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "synex/synex.hpp"

namespace {

using namespace synex;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitEmpty = 2;

struct CommonOptions {
    std::string lexicon_path;
    std::string lexicon_format = "auto";
    std::string default_lang;
    bool nfc = false;
    std::string format = "text";
    std::string output_path;
};

LexiconFormat resolve_lexicon_format(const CommonOptions& opts) {
    if (opts.lexicon_format == "tsv") return LexiconFormat::tsv;
    if (opts.lexicon_format == "json") return LexiconFormat::json;
    if (opts.lexicon_path.ends_with(".json")) return LexiconFormat::json;
    return LexiconFormat::tsv;
}

Lexicon load(const CommonOptions& opts) {
    LexiconLoadOptions lo;
    lo.format = resolve_lexicon_format(opts);
    lo.normalize_nfc = opts.nfc;
    if (!opts.default_lang.empty()) lo.default_lang = opts.default_lang;
    LexiconLoadResult result = load_lexicon(opts.lexicon_path, lo);
    for (const std::string& w : result.stats.warnings) std::cerr << "warning: " << w << '\n';
    return std::move(result.lexicon);
}

OutputFormat resolve_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "tsv") return OutputFormat::tsv;
    throw ArgumentError("unknown output format '" + name + "'");
}

void emit(const CommonOptions& opts, const std::string& content) {
    if (opts.output_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(opts.output_path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + opts.output_path);
    out << content;
}

std::vector<Term> parse_terms(const std::string& spec, const std::string& default_lang) {
    std::vector<Term> terms;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t end = spec.find(',', start);
        if (end == std::string::npos) end = spec.size();
        std::string entry = spec.substr(start, end - start);
        auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            if (b == std::string::npos) return std::string();
            auto e = s.find_last_not_of(" \t");
            return s.substr(b, e - b + 1);
        };
        entry = strip(entry);
        if (!entry.empty()) {
            Term t;
            auto colon = entry.find(':');
            if (colon == std::string::npos) {
                if (default_lang.empty())
                    throw ArgumentError("term '" + entry +
                                        "' has no language tag; use lang:surface or --default-lang");
                t.lang = default_lang;
                t.surface = entry;
            } else {
                t.lang = strip(entry.substr(0, colon));
                t.surface = strip(entry.substr(colon + 1));
            }
            if (t.lang.empty() || t.surface.empty())
                throw ArgumentError("malformed term entry '" + entry + "'");
            terms.push_back(std::move(t));
        }
        start = end + 1;
    }
    if (terms.empty()) throw ArgumentError("no terms given");
    return terms;
}

FirstHop resolve_first_hop(const std::string& name) {
    if (name == "synset") return FirstHop::synset_terms;
    if (name == "any") return FirstHop::any_neighbor;
    throw ArgumentError("unknown first-hop mode '" + name + "'");
}

void add_common(CLI::App* cmd, CommonOptions& opts, bool lexicon_required) {
    auto* lex = cmd->add_option("--lexicon", opts.lexicon_path, "Lexicon file (TSV or JSON)")
                    ->envname("SYNEX_LEXICON");
    if (lexicon_required) lex->required();
    cmd->add_option("--lexicon-format", opts.lexicon_format, "Force lexicon format")
        ->check(CLI::IsMember({"auto", "tsv", "json"}));
    cmd->add_option("--default-lang", opts.default_lang,
                    "Language for terms written without a lang: prefix")
        ->envname("SYNEX_DEFAULT_LANG");
    cmd->add_flag("--nfc", opts.nfc, "Apply Unicode NFC to term surfaces while loading");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}))
        ->envname("SYNEX_FORMAT");
    cmd->add_option("-o,--output", opts.output_path, "Write the report to a file");
}

struct ScoringOptions {
    int level = 4;
    double theta1 = 0.5;
    double theta2 = -1.0;
    std::string first_hop = "synset";
    bool strict_roots = false;
    std::size_t max_paths = EnumerationOptions{}.max_paths_per_root;
};

void add_scoring(CLI::App* cmd, ScoringOptions& opts) {
    cmd->add_option("--level", opts.level, "Maximum cycle length k")->envname("SYNEX_LEVEL");
    cmd->add_option("--theta1", opts.theta1, "Path coverage weight")->envname("SYNEX_THETA1");
    cmd->add_option("--theta2", opts.theta2, "Root coverage weight (default 1 - theta1)");
    cmd->add_option("--first-hop", opts.first_hop,
                    "First edge restriction for root cycles: synset or any")
        ->check(CLI::IsMember({"synset", "any"}))
        ->envname("SYNEX_FIRST_HOP");
    cmd->add_flag("--strict-roots", opts.strict_roots,
                  "Count synset terms missing from the graph in the Q denominator");
    cmd->add_option("--max-paths", opts.max_paths, "Per-root cycle budget");
}

ExpandOptions make_expand_options(const ScoringOptions& s) {
    ExpandOptions eo;
    eo.params.level = s.level;
    eo.params.theta1 = s.theta1;
    eo.params.theta2 = s.theta2 < 0.0 ? 1.0 - s.theta1 : s.theta2;
    eo.params.validate();
    eo.first_hop = resolve_first_hop(s.first_hop);
    eo.strict_roots = s.strict_roots;
    eo.enumeration.max_paths_per_root = s.max_paths;
    return eo;
}

int run_expand(const CommonOptions& common, const ScoringOptions& scoring,
               const std::string& terms_spec, const std::string& synset_id, double threshold,
               bool dump_paths) {
    Lexicon lexicon = load(common);
    Synset query;
    if (!synset_id.empty()) {
        const Synset* s = lexicon.find(synset_id);
        if (!s) throw ArgumentError("synset id '" + synset_id + "' is not in the lexicon");
        query = *s;
    } else {
        query.id = "query";
        query.terms = parse_terms(terms_spec, common.default_lang);
    }

    ExpandOptions eo = make_expand_options(scoring);
    SynonymyGraph graph = SynonymyGraph::build(lexicon);

    std::string paths_section;
    ExpansionResult result;
    if (dump_paths) {
        SynsetCycles cycles = enumerate_synset_cycles(graph, query, eo.params.level,
                                                      eo.first_hop, eo.enumeration);
        for (const CyclicPath& p : cycles.paths) paths_section += format_path(p) + "\n";
        result = score_candidates(cycles, query, eo.params, eo.strict_roots);
    } else {
        result = expand_synset(graph, query, eo);
    }
    if (threshold > 0.0) result = apply_threshold(std::move(result), threshold);

    std::string body = render(result, resolve_format(common.format));
    if (dump_paths && resolve_format(common.format) == OutputFormat::text)
        body += "paths:\n" + paths_section;
    emit(common, body);
    return result.candidates.empty() ? kExitEmpty : kExitOk;
}

AlgoScores compute_algo_scores(const Lexicon& lexicon, const BenchmarkDataset& dataset,
                               const ExpandOptions& eo) {
    AlgoScores scores;
    SynonymyGraph graph = SynonymyGraph::build(lexicon);
    for (const std::string& id : dataset.synset_ids()) {
        const Synset* synset = lexicon.find(id);
        if (!synset) continue;
        ExpansionResult result = expand_synset(graph, *synset, eo);
        for (const CandidateSynonym& c : result.candidates)
            scores[{id, c.term}] = c.fuzzy;
    }
    return scores;
}

int run_agree(const CommonOptions& common, const ScoringOptions& scoring,
              const std::string& dataset_path, bool with_algo) {
    DatasetLoadResult loaded = load_dataset(dataset_path);
    for (const std::string& w : loaded.stats.warnings) std::cerr << "warning: " << w << '\n';

    AgreementReport report;
    if (with_algo) {
        if (common.lexicon_path.empty())
            throw ArgumentError("--with-algo needs --lexicon");
        Lexicon lexicon = load(common);
        AlgoScores scores = compute_algo_scores(lexicon, loaded.dataset,
                                                make_expand_options(scoring));
        report = agreement_matrix(loaded.dataset, &scores);
    } else {
        report = agreement_matrix(loaded.dataset);
    }
    emit(common, render(report, resolve_format(common.format)));
    return kExitOk;
}

int run_tune(const CommonOptions& common, const std::string& dataset_path,
             std::vector<int> levels, std::vector<double> theta1_values, int folds,
             std::uint64_t seed, const std::string& first_hop, bool strict_roots, int jobs) {
    Lexicon lexicon = load(common);
    DatasetLoadResult loaded = load_dataset(dataset_path);
    for (const std::string& w : loaded.stats.warnings) std::cerr << "warning: " << w << '\n';

    TuneOptions options;
    if (!levels.empty()) options.grid.levels = std::move(levels);
    if (!theta1_values.empty()) options.grid.theta1_values = std::move(theta1_values);
    options.grid.folds = folds;
    options.seed = seed;
    options.first_hop = resolve_first_hop(first_hop);
    options.strict_roots = strict_roots;
    options.jobs = jobs;

    TuningReport report = grid_search(lexicon, loaded.dataset, options);
    emit(common, render(report, resolve_format(common.format)));
    return kExitOk;
}

int run_mask(const CommonOptions& common, const ScoringOptions& scoring,
             const std::string& strategy_name, std::uint64_t seed, int jobs,
             const std::string& samples_out) {
    Lexicon lexicon = load(common);
    MaskingStrategy strategy;
    strategy.kind = parse_strategy(strategy_name);
    strategy.seed = seed;

    std::vector<MaskingSample> samples = select_samples(lexicon, strategy);
    if (samples.empty()) {
        std::cerr << "no synset qualifies for masking\n";
        return kExitEmpty;
    }

    ExpandOptions eo = make_expand_options(scoring);
    MaskOptions mo;
    mo.params = eo.params;
    mo.first_hop = eo.first_hop;
    mo.strict_roots = eo.strict_roots;
    mo.enumeration = eo.enumeration;
    mo.jobs = jobs;

    MaskingReport report = run_masking(lexicon, std::move(samples), strategy, mo);
    if (!samples_out.empty()) {
        std::ofstream out(samples_out, std::ios::binary);
        if (!out) throw Error("cannot open samples file: " + samples_out);
        out << masking_samples_tsv(report);
    }
    emit(common, render(report, resolve_format(common.format)));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synset expansion via level-k cyclic paths in a synonymy graph"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "synex 0.1.0");

    CommonOptions common;
    ScoringOptions scoring;

    auto* expand = app.add_subcommand("expand", "Expand a synset with candidate synonyms");
    add_common(expand, common, true);
    add_scoring(expand, scoring);
    std::string terms_spec, synset_id;
    double threshold = 0.0;
    bool dump_paths = false;
    expand->add_option("--terms", terms_spec, "Query synset terms, comma-separated lang:surface");
    expand->add_option("--synset-id", synset_id, "Expand a synset from the lexicon by id");
    expand->add_option("--threshold", threshold, "Drop candidates with fuzzy below this")
        ->check(CLI::Range(0.0, 1.0))
        ->envname("SYNEX_THRESHOLD");
    expand->add_flag("--dump-paths", dump_paths, "Also print the enumerated cycles");

    auto* agree = app.add_subcommand("agree", "Rater agreement matrices for a scored dataset");
    add_common(agree, common, false);
    add_scoring(agree, scoring);
    std::string dataset_path;
    bool with_algo = false;
    agree->add_option("--dataset", dataset_path, "Annotated candidate CSV")
        ->required()
        ->envname("SYNEX_DATASET");
    agree->add_flag("--with-algo", with_algo, "Add an algorithm column (needs --lexicon)");

    auto* tune = app.add_subcommand("tune", "Grid-search theta weights with k-fold CV");
    add_common(tune, common, true);
    std::vector<int> levels;
    std::vector<double> theta1_values;
    int folds = 10;
    std::uint64_t seed = 42;
    std::string tune_first_hop = "synset";
    bool tune_strict = false;
    int jobs = 0;
    std::string tune_dataset;
    tune->add_option("--dataset", tune_dataset, "Annotated candidate CSV")
        ->required()
        ->envname("SYNEX_DATASET");
    tune->add_option("--levels", levels, "Levels to evaluate")->delimiter(',');
    tune->add_option("--theta1-values", theta1_values, "theta1 grid")->delimiter(',');
    tune->add_option("--folds", folds, "Cross-validation folds")->envname("SYNEX_FOLDS");
    tune->add_option("--seed", seed, "Fold assignment seed")->envname("SYNEX_SEED");
    tune->add_option("--first-hop", tune_first_hop, "First edge restriction: synset or any")
        ->check(CLI::IsMember({"synset", "any"}));
    tune->add_flag("--strict-roots", tune_strict, "Strict Q denominator");
    tune->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->envname("SYNEX_JOBS");

    auto* mask = app.add_subcommand("mask", "Masked-term retrieval accuracy");
    add_common(mask, common, true);
    add_scoring(mask, scoring);
    std::string strategy_name = "highest";
    std::uint64_t mask_seed = 42;
    int mask_jobs = 0;
    std::string samples_out;
    mask->add_option("--strategy", strategy_name, "highest, lowest, average or random")
        ->check(CLI::IsMember({"highest", "lowest", "average", "random"}))
        ->envname("SYNEX_STRATEGY");
    mask->add_option("--seed", mask_seed, "Seed for the random strategy")->envname("SYNEX_SEED");
    mask->add_option("--jobs", mask_jobs, "Worker threads (0 = all cores)")->envname("SYNEX_JOBS");
    mask->add_option("--samples-out", samples_out, "Write per-sample outcomes TSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11's own exit codes collapse onto the documented 0/1 contract.
        return app.exit(e) == 0 ? kExitOk : kExitError;
    }

    try {
        if (expand->parsed()) {
            if (terms_spec.empty() == synset_id.empty())
                throw ArgumentError("give exactly one of --terms or --synset-id");
            return run_expand(common, scoring, terms_spec, synset_id, threshold, dump_paths);
        }
        if (agree->parsed()) return run_agree(common, scoring, dataset_path, with_algo);
        if (tune->parsed())
            return run_tune(common, tune_dataset, levels, theta1_values, folds, seed,
                            tune_first_hop, tune_strict, jobs);
        if (mask->parsed())
            return run_mask(common, scoring, strategy_name, mask_seed, mask_jobs, samples_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
