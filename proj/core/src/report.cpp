#include "synex/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "synex/errors.hpp"

namespace synex {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return std::string(buf);
}

std::string compact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::string(buf);
}

ordered_json term_to_json(const Term& t) {
    return ordered_json{{"surface", t.surface}, {"lang", t.lang}};
}

Term term_from_json(const json& j) {
    return Term{j.at("surface").get<std::string>(), j.at("lang").get<std::string>()};
}

ordered_json synset_to_json(const Synset& s) {
    ordered_json out;
    out["id"] = s.id;
    out["terms"] = ordered_json::array();
    for (const Term& t : s.terms) out["terms"].push_back(term_to_json(t));
    if (s.gloss) out["gloss"] = *s.gloss;
    if (s.example) out["example"] = *s.example;
    if (s.pos) out["pos"] = *s.pos;
    return out;
}

Synset synset_from_json(const json& j) {
    Synset s;
    s.id = j.at("id").get<std::string>();
    for (const auto& t : j.at("terms")) s.terms.push_back(term_from_json(t));
    if (j.contains("gloss")) s.gloss = j.at("gloss").get<std::string>();
    if (j.contains("example")) s.example = j.at("example").get<std::string>();
    if (j.contains("pos")) s.pos = j.at("pos").get<std::string>();
    return s;
}

ordered_json params_to_json(const FuzzyParams& p) {
    return ordered_json{{"theta1", p.theta1}, {"theta2", p.theta2}, {"level", p.level}};
}

FuzzyParams params_from_json(const json& j) {
    FuzzyParams p;
    p.theta1 = j.at("theta1").get<double>();
    p.theta2 = j.at("theta2").get<double>();
    p.level = j.at("level").get<int>();
    return p;
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what());
    }
}

// Missing or mistyped fields surface as ParseError, not as library exceptions.
template <typename F>
auto convert(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what());
    } catch (const std::logic_error& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what());
    }
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string render(const ExpansionResult& r, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json out;
        out["synset"] = synset_to_json(r.synset);
        out["params"] = params_to_json(r.params);
        out["cycle_count"] = r.cycle_count;
        out["skipped_terms"] = ordered_json::array();
        for (const Term& t : r.skipped_terms) out["skipped_terms"].push_back(term_to_json(t));
        out["candidates"] = ordered_json::array();
        for (const CandidateSynonym& c : r.candidates) {
            ordered_json jc;
            jc["surface"] = c.term.surface;
            jc["lang"] = c.term.lang;
            jc["fuzzy"] = c.fuzzy;
            jc["path_coverage"] = c.path_coverage;
            jc["root_coverage"] = c.root_coverage;
            jc["paths_containing"] = c.paths_containing;
            jc["total_paths"] = c.total_paths;
            jc["roots_covered"] = c.roots_covered;
            jc["total_roots"] = c.total_roots;
            out["candidates"].push_back(std::move(jc));
        }
        return dump(out);
    }
    if (format == OutputFormat::tsv) {
        std::ostringstream out;
        out << "surface\tlang\tfuzzy\tpath_coverage\troot_coverage\tpaths_containing\t"
               "total_paths\troots_covered\ttotal_roots\n";
        for (const CandidateSynonym& c : r.candidates) {
            out << c.term.surface << '\t' << c.term.lang << '\t' << compact(c.fuzzy) << '\t'
                << compact(c.path_coverage) << '\t' << compact(c.root_coverage) << '\t'
                << c.paths_containing << '\t' << c.total_paths << '\t' << c.roots_covered
                << '\t' << c.total_roots << '\n';
        }
        return out.str();
    }

    std::ostringstream out;
    out << "synset " << r.synset.id << ":";
    for (const Term& t : r.synset.terms) out << ' ' << to_string(t);
    out << '\n';
    out << "level " << r.params.level << ", theta1 " << compact(r.params.theta1) << ", theta2 "
        << compact(r.params.theta2) << '\n';
    out << "cycles: " << r.cycle_count << '\n';
    if (!r.skipped_terms.empty()) {
        out << "terms not in graph:";
        for (const Term& t : r.skipped_terms) out << ' ' << to_string(t);
        out << '\n';
    }
    out << "candidates: " << r.candidates.size() << '\n';
    for (const CandidateSynonym& c : r.candidates) {
        out << "  " << to_string(c.term) << "  f=" << fixed(c.fuzzy, 4) << "  P="
            << c.paths_containing << '/' << c.total_paths << " (" << fixed(c.path_coverage, 4)
            << ")  Q=" << c.roots_covered << '/' << c.total_roots << " ("
            << fixed(c.root_coverage, 4) << ")\n";
    }
    return out.str();
}

ExpansionResult expansion_from_json(const std::string& text) {
    json j = parse_json_text(text);
    return convert([&] {
        ExpansionResult r;
        r.synset = synset_from_json(j.at("synset"));
        r.params = params_from_json(j.at("params"));
        r.cycle_count = j.at("cycle_count").get<std::size_t>();
        for (const auto& t : j.at("skipped_terms")) r.skipped_terms.push_back(term_from_json(t));
        for (const auto& jc : j.at("candidates")) {
            CandidateSynonym c;
            c.term = Term{jc.at("surface").get<std::string>(), jc.at("lang").get<std::string>()};
            c.fuzzy = jc.at("fuzzy").get<double>();
            c.path_coverage = jc.at("path_coverage").get<double>();
            c.root_coverage = jc.at("root_coverage").get<double>();
            c.paths_containing = jc.at("paths_containing").get<std::size_t>();
            c.total_paths = jc.at("total_paths").get<std::size_t>();
            c.roots_covered = jc.at("roots_covered").get<std::size_t>();
            c.total_roots = jc.at("total_roots").get<std::size_t>();
            r.candidates.push_back(std::move(c));
        }
        return r;
    });
}

std::string render(const AgreementReport& r, OutputFormat format) {
    const std::size_t k = r.raters.size();
    if (format == OutputFormat::json) {
        ordered_json out;
        out["raters"] = r.raters;
        out["rmse"] = r.rmse_matrix;
        out["mae"] = r.mae_matrix;
        out["means"] = r.means;
        out["stddevs"] = r.stddevs;
        out["row_count"] = r.row_count;
        out["algo_rows"] = r.algo_rows;
        out["algo_missing"] = r.algo_missing;
        return dump(out);
    }
    if (format == OutputFormat::tsv) {
        std::ostringstream out;
        out << "metric\ta\tb\tvalue\n";
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                out << "rmse\t" << r.raters[i] << '\t' << r.raters[j] << '\t'
                    << compact(r.rmse_matrix[i][j]) << '\n';
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                out << "mae\t" << r.raters[i] << '\t' << r.raters[j] << '\t'
                    << compact(r.mae_matrix[i][j]) << '\n';
        for (std::size_t i = 0; i < k; ++i)
            out << "mean\t" << r.raters[i] << "\t\t" << compact(r.means[i]) << '\n';
        for (std::size_t i = 0; i < k; ++i)
            out << "stddev\t" << r.raters[i] << "\t\t" << compact(r.stddevs[i]) << '\n';
        return out.str();
    }

    std::ostringstream out;
    out << "rows: " << r.row_count;
    if (r.algo_rows || r.algo_missing)
        out << " (algorithm coverage: " << r.algo_rows << ", missing: " << r.algo_missing << ")";
    out << '\n';
    auto matrix = [&](const char* title, const std::vector<std::vector<double>>& m) {
        out << title << '\n';
        out << "      ";
        for (const auto& name : r.raters) out << ' ' << name << (name.size() < 4 ? "    " : "  ");
        out << '\n';
        for (std::size_t i = 0; i < k; ++i) {
            out << r.raters[i];
            for (std::size_t pad = r.raters[i].size(); pad < 6; ++pad) out << ' ';
            for (std::size_t j = 0; j < k; ++j) {
                if (i == j) out << " -     ";
                else out << ' ' << fixed(m[i][j], 4) << ' ';
            }
            out << '\n';
        }
    };
    matrix("RMSE", r.rmse_matrix);
    matrix("MAE", r.mae_matrix);
    out << "scores\n";
    for (std::size_t i = 0; i < k; ++i)
        out << "  " << r.raters[i] << "  mean " << fixed(r.means[i], 4) << "  stddev "
            << fixed(r.stddevs[i], 5) << '\n';
    return out.str();
}

AgreementReport agreement_from_json(const std::string& text) {
    json j = parse_json_text(text);
    return convert([&] {
        AgreementReport r;
        r.raters = j.at("raters").get<std::vector<std::string>>();
        r.rmse_matrix = j.at("rmse").get<std::vector<std::vector<double>>>();
        r.mae_matrix = j.at("mae").get<std::vector<std::vector<double>>>();
        r.means = j.at("means").get<std::vector<double>>();
        r.stddevs = j.at("stddevs").get<std::vector<double>>();
        r.row_count = j.at("row_count").get<std::size_t>();
        r.algo_rows = j.at("algo_rows").get<std::size_t>();
        r.algo_missing = j.at("algo_missing").get<std::size_t>();
        return r;
    });
}

namespace {

ordered_json cell_to_json(const TuningCell& c) {
    ordered_json out;
    out["level"] = c.level;
    out["theta1"] = c.theta1;
    out["theta2"] = c.theta2;
    out["mean_rmse"] = c.mean_rmse;
    out["mean_mae"] = c.mean_mae;
    return out;
}

TuningCell cell_from_json(const json& j) {
    TuningCell c;
    c.level = j.at("level").get<int>();
    c.theta1 = j.at("theta1").get<double>();
    c.theta2 = j.at("theta2").get<double>();
    c.mean_rmse = j.at("mean_rmse").get<double>();
    c.mean_mae = j.at("mean_mae").get<double>();
    return c;
}

} // namespace

std::string render(const TuningReport& r, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json out;
        out["folds"] = r.folds;
        out["seed"] = r.seed;
        out["synsets_used"] = r.synsets_used;
        out["skipped_synsets"] = r.skipped_synsets;
        out["cells"] = ordered_json::array();
        for (const TuningCell& c : r.cells) out["cells"].push_back(cell_to_json(c));
        out["best_by_level"] = ordered_json::object();
        for (const auto& [level, cell] : r.best_by_level)
            out["best_by_level"][std::to_string(level)] = cell_to_json(cell);
        out["best_overall"] = cell_to_json(r.best_overall);
        return dump(out);
    }
    if (format == OutputFormat::tsv) {
        std::ostringstream out;
        out << "level\ttheta1\ttheta2\tmean_rmse\tmean_mae\n";
        for (const TuningCell& c : r.cells)
            out << c.level << '\t' << compact(c.theta1) << '\t' << compact(c.theta2) << '\t'
                << compact(c.mean_rmse) << '\t' << compact(c.mean_mae) << '\n';
        return out.str();
    }

    std::ostringstream out;
    out << "folds: " << r.folds << ", seed: " << r.seed << ", synsets: " << r.synsets_used
        << '\n';
    if (!r.skipped_synsets.empty()) {
        out << "skipped (not in lexicon):";
        for (const auto& id : r.skipped_synsets) out << ' ' << id;
        out << '\n';
    }
    out << "level  theta1  theta2  rmse     mae\n";
    for (const TuningCell& c : r.cells)
        out << c.level << "      " << fixed(c.theta1, 1) << "     " << fixed(c.theta2, 1)
            << "     " << fixed(c.mean_rmse, 4) << "   " << fixed(c.mean_mae, 4) << '\n';
    for (const auto& [level, cell] : r.best_by_level)
        out << "best level " << level << ": theta1 " << fixed(cell.theta1, 1) << ", theta2 "
            << fixed(cell.theta2, 1) << ", rmse " << fixed(cell.mean_rmse, 4) << ", mae "
            << fixed(cell.mean_mae, 4) << '\n';
    out << "best overall: level " << r.best_overall.level << ", theta1 "
        << fixed(r.best_overall.theta1, 1) << ", theta2 " << fixed(r.best_overall.theta2, 1)
        << ", rmse " << fixed(r.best_overall.mean_rmse, 4) << ", mae "
        << fixed(r.best_overall.mean_mae, 4) << '\n';
    return out.str();
}

TuningReport tuning_from_json(const std::string& text) {
    json j = parse_json_text(text);
    return convert([&] {
        TuningReport r;
        r.folds = j.at("folds").get<int>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.synsets_used = j.at("synsets_used").get<std::size_t>();
        r.skipped_synsets = j.at("skipped_synsets").get<std::vector<std::string>>();
        for (const auto& c : j.at("cells")) r.cells.push_back(cell_from_json(c));
        for (const auto& [key, value] : j.at("best_by_level").items())
            r.best_by_level.emplace(std::stoi(key), cell_from_json(value));
        r.best_overall = cell_from_json(j.at("best_overall"));
        return r;
    });
}

namespace {

ordered_json sample_to_json(const MaskingSample& s) {
    ordered_json out;
    out["synset_id"] = s.synset_id;
    out["masked"] = term_to_json(s.masked);
    out["frequency"] = s.masked_frequency;
    if (s.rank) out["rank"] = *s.rank;
    if (s.fuzzy) out["fuzzy"] = *s.fuzzy;
    if (s.no_resident_root) out["no_resident_root"] = true;
    return out;
}

MaskingSample sample_from_json(const json& j) {
    MaskingSample s;
    s.synset_id = j.at("synset_id").get<std::string>();
    s.masked = term_from_json(j.at("masked"));
    s.masked_frequency = j.at("frequency").get<std::size_t>();
    if (j.contains("rank")) s.rank = j.at("rank").get<std::size_t>();
    if (j.contains("fuzzy")) s.fuzzy = j.at("fuzzy").get<double>();
    if (j.contains("no_resident_root")) s.no_resident_root = j.at("no_resident_root").get<bool>();
    return s;
}

} // namespace

std::string render(const MaskingReport& r, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json out;
        out["strategy"] = to_string(r.strategy);
        out["params"] = params_to_json(r.params);
        out["sample_size"] = r.sample_size;
        out["hits"] = r.hits;
        out["accuracy"] = r.accuracy;
        out["not_retrieved"] = r.not_retrieved;
        out["no_resident_root"] = r.no_resident_root;
        out["rank_histogram"] = ordered_json::object();
        for (const auto& [rank, count] : r.rank_histogram)
            out["rank_histogram"][std::to_string(rank)] = count;
        out["samples"] = ordered_json::array();
        for (const MaskingSample& s : r.samples) out["samples"].push_back(sample_to_json(s));
        return dump(out);
    }
    if (format == OutputFormat::tsv) {
        std::ostringstream out;
        out << "# strategy=" << to_string(r.strategy) << " level=" << r.params.level
            << " theta1=" << compact(r.params.theta1) << " theta2=" << compact(r.params.theta2)
            << '\n';
        out << "# samples=" << r.sample_size << " hits=" << r.hits << " accuracy="
            << compact(r.accuracy) << " not_retrieved=" << r.not_retrieved
            << " no_resident_root=" << r.no_resident_root << '\n';
        out << "rank\tcount\n";
        for (const auto& [rank, count] : r.rank_histogram)
            out << rank << '\t' << count << '\n';
        return out.str();
    }

    std::ostringstream out;
    out << "strategy: " << to_string(r.strategy) << '\n';
    out << "level " << r.params.level << ", theta1 " << compact(r.params.theta1) << ", theta2 "
        << compact(r.params.theta2) << '\n';
    out << "samples: " << r.sample_size << '\n';
    out << "rank-1 hits: " << r.hits << " (accuracy " << fixed(r.accuracy * 100.0, 2) << "%)\n";
    out << "not retrieved: " << r.not_retrieved << " (no graph-resident root: "
        << r.no_resident_root << ")\n";
    if (!r.rank_histogram.empty()) {
        out << "rank histogram:\n";
        for (const auto& [rank, count] : r.rank_histogram)
            out << "  " << rank << "  " << count << '\n';
    }
    return out.str();
}

MaskingReport masking_from_json(const std::string& text) {
    json j = parse_json_text(text);
    return convert([&] {
        MaskingReport r;
        r.strategy = parse_strategy(j.at("strategy").get<std::string>());
        r.params = params_from_json(j.at("params"));
        r.sample_size = j.at("sample_size").get<std::size_t>();
        r.hits = j.at("hits").get<std::size_t>();
        r.accuracy = j.at("accuracy").get<double>();
        r.not_retrieved = j.at("not_retrieved").get<std::size_t>();
        r.no_resident_root = j.at("no_resident_root").get<std::size_t>();
        for (const auto& [key, value] : j.at("rank_histogram").items())
            r.rank_histogram.emplace(static_cast<std::size_t>(std::stoull(key)),
                                     value.get<std::size_t>());
        for (const auto& s : j.at("samples")) r.samples.push_back(sample_from_json(s));
        return r;
    });
}

std::string masking_samples_tsv(const MaskingReport& r) {
    std::ostringstream out;
    out << "synset_id\tsurface\tlang\tfrequency\trank\tfuzzy\tnote\n";
    for (const MaskingSample& s : r.samples) {
        out << s.synset_id << '\t' << s.masked.surface << '\t' << s.masked.lang << '\t'
            << s.masked_frequency << '\t';
        if (s.rank) out << *s.rank;
        out << '\t';
        if (s.fuzzy) out << compact(*s.fuzzy);
        out << '\t';
        if (s.no_resident_root) out << "no_resident_root";
        out << '\n';
    }
    return out.str();
}

} // namespace synex
