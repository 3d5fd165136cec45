#include "synex/dataset.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "synex/errors.hpp"

namespace synex {

namespace {

// Minimal CSV: comma separated, double quotes wrap fields containing commas
// or quotes, embedded quotes doubled.
std::vector<std::string> split_csv(const std::string& line, const std::string& name,
                                   std::size_t lineno) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (quoted) throw ParseError(name, lineno, "unterminated quoted field");
    fields.push_back(std::move(current));
    return fields;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& field, double& out) {
    std::string t = trim(field);
    if (t.empty()) return false;
    const char* begin = t.data();
    const char* end = begin + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

} // namespace

std::size_t BenchmarkDataset::synset_count() const {
    std::set<std::string_view> ids;
    for (const auto& row : rows) ids.insert(row.synset_id);
    return ids.size();
}

std::vector<std::string> BenchmarkDataset::synset_ids() const {
    std::vector<std::string> out;
    std::set<std::string_view> seen;
    for (const auto& row : rows)
        if (seen.insert(row.synset_id).second) out.push_back(row.synset_id);
    return out;
}

DatasetLoadResult load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open dataset file: " + path.string());
    return parse_dataset(in, path.string());
}

DatasetLoadResult parse_dataset(std::istream& in, const std::string& name) {
    DatasetLoadResult result;
    std::string line;
    std::size_t lineno = 0;
    bool first_row = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        auto fields = split_csv(line, name, lineno);
        if (fields.size() != 7 && fields.size() != 8)
            throw ParseError(name, lineno, "expected 7 or 8 comma-separated fields, got " +
                                               std::to_string(fields.size()));
        if (first_row) {
            first_row = false;
            double probe;
            if (!parse_double(fields[3], probe)) {
                result.stats.had_header = true;
                continue;
            }
        }

        AnnotatedCandidate row;
        row.synset_id = trim(fields[0]);
        row.candidate.surface = trim(fields[1]);
        row.candidate.lang = trim(fields[2]);
        if (row.synset_id.empty()) throw ParseError(name, lineno, "empty synset id");
        if (row.candidate.surface.empty()) throw ParseError(name, lineno, "empty candidate surface");
        if (row.candidate.lang.empty()) throw ParseError(name, lineno, "empty candidate language");

        double sum = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            double raw;
            if (!parse_double(fields[3 + i], raw))
                throw ParseError(name, lineno, "score column " + std::to_string(i + 1) +
                                                   " is not a number: '" + fields[3 + i] + "'");
            if (raw < 0.0 || raw > 100.0)
                throw ParseError(name, lineno, "score column " + std::to_string(i + 1) +
                                                   " is outside 0..100: " + fields[3 + i]);
            row.linguist_scores[i] = raw / 100.0;
            sum += row.linguist_scores[i];
        }
        double computed = sum / 4.0;
        if (fields.size() == 8) {
            double raw;
            if (!parse_double(fields[7], raw))
                throw ParseError(name, lineno, "average column is not a number: '" + fields[7] + "'");
            if (raw < 0.0 || raw > 100.0)
                throw ParseError(name, lineno, "average column is outside 0..100: " + fields[7]);
            double stored = raw / 100.0;
            if (std::abs(stored - computed) > 0.005) {
                ++result.stats.average_recomputed;
                result.stats.warnings.push_back(
                    name + ":" + std::to_string(lineno) +
                    ": stored average disagrees with the recomputed mean, using the mean");
            }
        }
        row.average = computed;
        result.dataset.rows.push_back(std::move(row));
    }
    if (result.dataset.rows.empty()) throw ParseError(name, lineno, "dataset contains no rows");
    return result;
}

void write_dataset(const BenchmarkDataset& dataset, std::ostream& out) {
    auto fmt = [](double normalized) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", normalized * 100.0);
        return std::string(buf);
    };
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        q += '"';
        return q;
    };
    out << "synset_id,candidate,lang,score_l1,score_l2,score_l3,score_l4,average\n";
    for (const auto& row : dataset.rows) {
        out << quote(row.synset_id) << ',' << quote(row.candidate.surface) << ','
            << quote(row.candidate.lang);
        for (double s : row.linguist_scores) out << ',' << fmt(s);
        out << ',' << fmt(row.average) << '\n';
    }
}

} // namespace synex
