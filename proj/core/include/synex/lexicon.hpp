#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synex/term.hpp"

namespace synex {

struct Synset {
    std::string id;
    std::vector<Term> terms;
    std::optional<std::string> gloss;
    std::optional<std::string> example;
    std::optional<std::string> pos;
};

// Immutable collection of synsets with a term index. Construction validates
// that every synset has an id, at least one term, and no duplicate terms.
class Lexicon {
public:
    Lexicon() = default;
    explicit Lexicon(std::vector<Synset> synsets);

    const std::vector<Synset>& synsets() const noexcept { return synsets_; }
    std::size_t size() const noexcept { return synsets_.size(); }

    const Synset* find(std::string_view id) const;

    // Number of synsets the term belongs to; 0 for unknown terms.
    std::size_t term_frequency(const Term& t) const;

    // Indices into synsets() for every synset containing the term, or nullptr.
    const std::vector<std::size_t>* synsets_of(const Term& t) const;

    // Sorted by (lang, surface).
    const std::map<Term, std::vector<std::size_t>>& term_index() const noexcept {
        return index_;
    }
    std::size_t term_count() const noexcept { return index_.size(); }

private:
    std::vector<Synset> synsets_;
    std::map<Term, std::vector<std::size_t>> index_;
    std::map<std::string, std::size_t, std::less<>> by_id_;
};

enum class LexiconFormat { tsv, json };

struct LexiconLoadOptions {
    LexiconFormat format = LexiconFormat::tsv;
    // Applies Unicode NFC to term surfaces at load time. Off by default:
    // matching stays byte exact unless the caller opts in.
    bool normalize_nfc = false;
    std::optional<std::string> default_lang;
};

struct LexiconLoadStats {
    std::size_t rows_read = 0;
    std::size_t synsets_loaded = 0;
    std::size_t ids_synthesized = 0;
    std::size_t rows_merged = 0;
    std::size_t duplicate_terms_dropped = 0;
    std::vector<std::string> warnings;
};

struct LexiconLoadResult {
    Lexicon lexicon;
    LexiconLoadStats stats;
};

// TSV rows are id<TAB>terms[<TAB>gloss[<TAB>example]] with terms as
// lang:surface pairs joined by '|'. A "#default-lang xx" line sets the
// language for bare surfaces; other '#' lines and blank lines are skipped.
// JSON input is an array of {id, terms: [{surface, lang}], gloss, example,
// pos} objects. Rows sharing an id are merged; duplicate terms within a
// synset are dropped and counted. Empty input is an error.
LexiconLoadResult load_lexicon(const std::filesystem::path& path,
                               const LexiconLoadOptions& options = {});
LexiconLoadResult parse_lexicon(std::istream& in, const LexiconLoadOptions& options = {},
                                const std::string& name = "<stream>");

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path,
                  LexiconFormat format);
void write_lexicon(const Lexicon& lexicon, std::ostream& out, LexiconFormat format);

} // namespace synex
