#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "synex/lexicon.hpp"
#include "synex/term.hpp"

namespace synex {

using NodeId = std::uint32_t;

// Directed synonymy graph. An edge u -> v exists iff u and v share at least
// one synset, so the relation is symmetric by construction, but the edge list
// stays directed: cycle enumeration traverses each direction separately.
// Nodes are stored sorted by (lang, surface) and successor lists are sorted
// by id, which makes DFS order equal lexicographic order on term sequences.
class SynonymyGraph {
public:
    static SynonymyGraph build(const Lexicon& lexicon);

    // Arbitrary digraph over the given terms, mainly for tests. Self loops
    // and duplicate edges are rejected.
    static SynonymyGraph from_edges(std::vector<Term> nodes,
                                    const std::vector<std::pair<Term, Term>>& edges);

    std::size_t node_count() const noexcept { return terms_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::optional<NodeId> node_of(const Term& t) const;
    const Term& term_of(NodeId id) const { return terms_[id]; }

    std::span<const NodeId> successors(NodeId id) const {
        return {adj_[id].data(), adj_[id].size()};
    }
    bool has_edge(NodeId u, NodeId v) const;

private:
    std::vector<Term> terms_;
    std::vector<std::vector<NodeId>> adj_;
    std::size_t edge_count_ = 0;
};

// A root-anchored simple cycle: nodes.front() == nodes.back() == root and the
// interior nodes are pairwise distinct and different from the root.
struct CyclicPath {
    std::vector<Term> nodes;

    const Term& root() const { return nodes.front(); }
    std::size_t length() const { return nodes.size() - 1; } // edge count
};

struct EnumerationOptions {
    // Per-root budget; exceeding it raises CycleLimitError.
    std::size_t max_paths_per_root = 1'000'000;
};

// All cycles through root with 2..level edges, lexicographic by node
// sequence. level < 2 is an error; an unknown root yields an empty result.
std::vector<CyclicPath> enumerate_cycles(const SynonymyGraph& graph, const Term& root,
                                         int level, const EnumerationOptions& options = {});

// Constrains where the first edge of each root cycle may go. synset_terms
// keeps the first hop inside the query synset, which anchors every path to
// the sense being expanded; any_neighbor allows all successors.
enum class FirstHop { synset_terms, any_neighbor };

struct SynsetCycles {
    std::vector<CyclicPath> paths;  // pooled, grouped by root in synset order
    std::vector<Term> roots_present;
    std::vector<Term> skipped_terms; // synset terms absent from the graph
};

SynsetCycles enumerate_synset_cycles(const SynonymyGraph& graph, const Synset& synset,
                                     int level, FirstHop first_hop = FirstHop::any_neighbor,
                                     const EnumerationOptions& options = {});

// "a -> b -> a" rendering used by path dumps.
std::string format_path(const CyclicPath& path);

} // namespace synex
