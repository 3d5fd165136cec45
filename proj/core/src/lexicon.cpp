#include "synex/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "synex/errors.hpp"
#include "synex/normalize.hpp"

namespace synex {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

struct RowAccumulator {
    std::vector<Synset> synsets;
    std::map<std::string, std::size_t, std::less<>> by_id;
    LexiconLoadStats stats;

    void add(Synset row, const std::string& file, std::size_t line) {
        auto it = by_id.find(row.id);
        if (it == by_id.end()) {
            by_id.emplace(row.id, synsets.size());
            synsets.push_back(std::move(row));
            return;
        }
        Synset& target = synsets[it->second];
        ++stats.rows_merged;
        stats.warnings.push_back(file + ":" + std::to_string(line) +
                                 ": merged row into earlier synset '" + row.id + "'");
        for (auto& t : row.terms) target.terms.push_back(std::move(t));
        if (!target.gloss && row.gloss) target.gloss = std::move(row.gloss);
        if (!target.example && row.example) target.example = std::move(row.example);
        if (!target.pos && row.pos) target.pos = std::move(row.pos);
    }

    void dedupe_terms() {
        for (auto& s : synsets) {
            std::vector<Term> kept;
            std::set<Term> seen;
            for (auto& t : s.terms) {
                if (seen.insert(t).second) kept.push_back(std::move(t));
                else ++stats.duplicate_terms_dropped;
            }
            s.terms = std::move(kept);
        }
    }
};

Term parse_term(std::string_view field, const std::optional<std::string>& default_lang,
                bool normalize, const std::string& file, std::size_t line) {
    field = trim(field);
    Term t;
    auto colon = field.find(':');
    if (colon == std::string_view::npos) {
        if (!default_lang)
            throw ParseError(file, line,
                             "term '" + std::string(field) +
                                 "' has no language tag and no default language is set");
        t.lang = *default_lang;
        t.surface = std::string(trim(field));
    } else {
        t.lang = std::string(trim(field.substr(0, colon)));
        t.surface = std::string(trim(field.substr(colon + 1)));
    }
    if (t.lang.empty()) throw ParseError(file, line, "empty language tag");
    if (t.surface.empty()) throw ParseError(file, line, "empty term surface");
    if (normalize) t.surface = nfc(t.surface);
    return t;
}

LexiconLoadResult parse_tsv(std::istream& in, const LexiconLoadOptions& options,
                            const std::string& name) {
    RowAccumulator acc;
    std::optional<std::string> default_lang = options.default_lang;
    std::string line;
    std::size_t lineno = 0;
    std::size_t row_ordinal = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view(line);
        std::string_view stripped = trim(view);
        if (stripped.empty()) continue;
        if (stripped.front() == '#') {
            std::string_view directive = trim(stripped.substr(1));
            if (directive.starts_with("default-lang") &&
                (directive.size() == 12 || directive[12] == ' ' || directive[12] == '\t')) {
                std::string_view value = trim(directive.substr(12));
                if (value.empty()) throw ParseError(name, lineno, "#default-lang needs a code");
                default_lang = std::string(value);
            }
            continue;
        }
        ++row_ordinal;
        auto fields = split(view, '\t');
        if (fields.size() < 2)
            throw ParseError(name, lineno, "expected at least 2 tab-separated fields, got " +
                                               std::to_string(fields.size()));
        if (fields.size() > 4)
            throw ParseError(name, lineno, "expected at most 4 tab-separated fields, got " +
                                               std::to_string(fields.size()));

        Synset row;
        row.id = std::string(trim(fields[0]));
        if (row.id.empty()) {
            row.id = std::to_string(row_ordinal);
            ++acc.stats.ids_synthesized;
        }
        auto term_fields = split(fields[1], '|');
        for (auto tf : term_fields) {
            if (trim(tf).empty()) throw ParseError(name, lineno, "empty term entry");
            row.terms.push_back(parse_term(tf, default_lang, options.normalize_nfc, name, lineno));
        }
        if (fields.size() >= 3 && !trim(fields[2]).empty())
            row.gloss = std::string(trim(fields[2]));
        if (fields.size() >= 4 && !trim(fields[3]).empty())
            row.example = std::string(trim(fields[3]));
        acc.add(std::move(row), name, lineno);
    }
    acc.stats.rows_read = row_ordinal;
    acc.dedupe_terms();
    if (acc.synsets.empty()) throw ParseError(name, lineno, "lexicon contains no synsets");
    acc.stats.synsets_loaded = acc.synsets.size();
    LexiconLoadResult result{Lexicon(std::move(acc.synsets)), std::move(acc.stats)};
    return result;
}

LexiconLoadResult parse_json(std::istream& in, const LexiconLoadOptions& options,
                             const std::string& name) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(name + ": " + e.what());
    }
    if (!doc.is_array()) throw ParseError(name + ": top-level JSON value must be an array");

    RowAccumulator acc;
    std::size_t ordinal = 0;
    for (const auto& entry : doc) {
        ++ordinal;
        if (!entry.is_object())
            throw ParseError(name + ": element " + std::to_string(ordinal) + " is not an object");
        Synset row;
        if (entry.contains("id")) {
            const auto& id = entry.at("id");
            if (id.is_string()) row.id = id.get<std::string>();
            else if (id.is_number_integer()) row.id = std::to_string(id.get<long long>());
            else throw ParseError(name + ": element " + std::to_string(ordinal) + " has a non-string id");
        }
        if (row.id.empty()) {
            row.id = std::to_string(ordinal);
            ++acc.stats.ids_synthesized;
        }
        if (!entry.contains("terms") || !entry.at("terms").is_array() || entry.at("terms").empty())
            throw ParseError(name + ": synset '" + row.id + "' needs a non-empty terms array");
        for (const auto& jt : entry.at("terms")) {
            if (!jt.is_object() || !jt.contains("surface") || !jt.at("surface").is_string())
                throw ParseError(name + ": synset '" + row.id + "' has a term without a surface");
            Term t;
            t.surface = std::string(trim(jt.at("surface").get<std::string>()));
            if (jt.contains("lang")) {
                if (!jt.at("lang").is_string())
                    throw ParseError(name + ": synset '" + row.id + "' has a non-string lang");
                t.lang = jt.at("lang").get<std::string>();
            } else if (options.default_lang) {
                t.lang = *options.default_lang;
            }
            if (t.lang.empty())
                throw ParseError(name + ": synset '" + row.id +
                                 "' has a term with no language and no default language is set");
            if (t.surface.empty())
                throw ParseError(name + ": synset '" + row.id + "' has an empty term surface");
            if (options.normalize_nfc) t.surface = nfc(t.surface);
            row.terms.push_back(std::move(t));
        }
        for (const char* key : {"gloss", "example", "pos"}) {
            if (!entry.contains(key)) continue;
            if (!entry.at(key).is_string())
                throw ParseError(name + ": synset '" + row.id + "' has a non-string " + key);
            auto value = entry.at(key).get<std::string>();
            if (value.empty()) continue;
            if (key[0] == 'g') row.gloss = value;
            else if (key[0] == 'e') row.example = value;
            else row.pos = value;
        }
        acc.add(std::move(row), name, ordinal);
    }
    acc.stats.rows_read = ordinal;
    acc.dedupe_terms();
    if (acc.synsets.empty()) throw ParseError(name + ": lexicon contains no synsets");
    acc.stats.synsets_loaded = acc.synsets.size();
    LexiconLoadResult result{Lexicon(std::move(acc.synsets)), std::move(acc.stats)};
    return result;
}

} // namespace

Lexicon::Lexicon(std::vector<Synset> synsets) : synsets_(std::move(synsets)) {
    for (std::size_t i = 0; i < synsets_.size(); ++i) {
        const Synset& s = synsets_[i];
        if (s.id.empty()) throw ArgumentError("synset at index " + std::to_string(i) + " has an empty id");
        if (s.terms.empty()) throw ArgumentError("synset '" + s.id + "' has no terms");
        if (!by_id_.emplace(s.id, i).second)
            throw ArgumentError("duplicate synset id '" + s.id + "'");
        std::set<Term> seen;
        for (const Term& t : s.terms) {
            if (!seen.insert(t).second)
                throw ArgumentError("synset '" + s.id + "' lists term '" + to_string(t) +
                                    "' more than once");
            index_[t].push_back(i);
        }
    }
}

const Synset* Lexicon::find(std::string_view id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &synsets_[it->second];
}

std::size_t Lexicon::term_frequency(const Term& t) const {
    auto it = index_.find(t);
    return it == index_.end() ? 0 : it->second.size();
}

const std::vector<std::size_t>* Lexicon::synsets_of(const Term& t) const {
    auto it = index_.find(t);
    return it == index_.end() ? nullptr : &it->second;
}

LexiconLoadResult load_lexicon(const std::filesystem::path& path,
                               const LexiconLoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open lexicon file: " + path.string());
    return parse_lexicon(in, options, path.string());
}

LexiconLoadResult parse_lexicon(std::istream& in, const LexiconLoadOptions& options,
                                const std::string& name) {
    if (options.format == LexiconFormat::tsv) return parse_tsv(in, options, name);
    return parse_json(in, options, name);
}

void write_lexicon(const Lexicon& lexicon, std::ostream& out, LexiconFormat format) {
    if (format == LexiconFormat::tsv) {
        for (const Synset& s : lexicon.synsets()) {
            out << s.id << '\t';
            for (std::size_t i = 0; i < s.terms.size(); ++i) {
                if (i) out << '|';
                out << s.terms[i].lang << ':' << s.terms[i].surface;
            }
            if (s.gloss || s.example) out << '\t' << s.gloss.value_or("");
            if (s.example) out << '\t' << *s.example;
            out << '\n';
        }
        return;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const Synset& s : lexicon.synsets()) {
        nlohmann::ordered_json entry;
        entry["id"] = s.id;
        entry["terms"] = nlohmann::ordered_json::array();
        for (const Term& t : s.terms)
            entry["terms"].push_back({{"surface", t.surface}, {"lang", t.lang}});
        if (s.gloss) entry["gloss"] = *s.gloss;
        if (s.example) entry["example"] = *s.example;
        if (s.pos) entry["pos"] = *s.pos;
        doc.push_back(std::move(entry));
    }
    out << doc.dump(2) << '\n';
}

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path,
                  LexiconFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open file for writing: " + path.string());
    write_lexicon(lexicon, out, format);
}

} // namespace synex
