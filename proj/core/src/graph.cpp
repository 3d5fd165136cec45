#include "synex/graph.hpp"

#include <algorithm>
#include <set>

#include "cycle_impl.hpp"
#include "synex/errors.hpp"

namespace synex {

SynonymyGraph SynonymyGraph::build(const Lexicon& lexicon) {
    if (lexicon.term_count() == 0) throw ArgumentError("cannot build a graph from an empty lexicon");

    SynonymyGraph g;
    g.terms_.reserve(lexicon.term_count());
    for (const auto& [term, _] : lexicon.term_index()) g.terms_.push_back(term);
    g.adj_.resize(g.terms_.size());

    for (const Synset& s : lexicon.synsets()) {
        std::vector<NodeId> members;
        members.reserve(s.terms.size());
        for (const Term& t : s.terms) members.push_back(*g.node_of(t));
        for (NodeId u : members)
            for (NodeId v : members)
                if (u != v) g.adj_[u].push_back(v);
    }
    for (auto& succ : g.adj_) {
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        g.edge_count_ += succ.size();
    }
    return g;
}

SynonymyGraph SynonymyGraph::from_edges(std::vector<Term> nodes,
                                        const std::vector<std::pair<Term, Term>>& edges) {
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        throw ArgumentError("duplicate node term");

    SynonymyGraph g;
    g.terms_ = std::move(nodes);
    g.adj_.resize(g.terms_.size());

    std::set<std::pair<NodeId, NodeId>> seen;
    for (const auto& [a, b] : edges) {
        auto u = g.node_of(a);
        auto v = g.node_of(b);
        if (!u || !v)
            throw ArgumentError("edge endpoint '" + to_string(u ? b : a) + "' is not a node");
        if (*u == *v) throw ArgumentError("self loop on '" + to_string(a) + "'");
        if (!seen.emplace(*u, *v).second)
            throw ArgumentError("duplicate edge " + to_string(a) + " -> " + to_string(b));
        g.adj_[*u].push_back(*v);
    }
    for (auto& succ : g.adj_) {
        std::sort(succ.begin(), succ.end());
        g.edge_count_ += succ.size();
    }
    return g;
}

std::optional<NodeId> SynonymyGraph::node_of(const Term& t) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
    if (it == terms_.end() || *it != t) return std::nullopt;
    return static_cast<NodeId>(it - terms_.begin());
}

bool SynonymyGraph::has_edge(NodeId u, NodeId v) const {
    const auto& succ = adj_[u];
    return std::binary_search(succ.begin(), succ.end(), v);
}

namespace detail {

std::vector<NodeId> resolve_synset_nodes(const SynonymyGraph& g, const Synset& synset,
                                         std::vector<Term>* skipped) {
    std::vector<NodeId> nodes;
    for (const Term& t : synset.terms) {
        if (auto id = g.node_of(t)) nodes.push_back(*id);
        else if (skipped) skipped->push_back(t);
    }
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

std::vector<NodeId> synset_first_hops(const SynonymyGraph& g, NodeId root,
                                      const std::vector<NodeId>& synset_nodes) {
    auto succ = g.successors(root);
    std::vector<NodeId> hops;
    std::set_intersection(synset_nodes.begin(), synset_nodes.end(), succ.begin(), succ.end(),
                          std::back_inserter(hops));
    std::erase(hops, root);
    return hops;
}

} // namespace detail

namespace {

CyclicPath close_path(const SynonymyGraph& g, const std::vector<NodeId>& open) {
    CyclicPath p;
    p.nodes.reserve(open.size() + 1);
    for (NodeId id : open) p.nodes.push_back(g.term_of(id));
    p.nodes.push_back(g.term_of(open.front()));
    return p;
}

} // namespace

std::vector<CyclicPath> enumerate_cycles(const SynonymyGraph& graph, const Term& root,
                                         int level, const EnumerationOptions& options) {
    if (level < 2) throw ArgumentError("level must be at least 2");
    std::vector<CyclicPath> out;
    auto id = graph.node_of(root);
    if (!id) return out;
    detail::for_each_cycle(graph, *id, level, nullptr, options.max_paths_per_root,
                           [&](const std::vector<NodeId>& open) {
                               out.push_back(close_path(graph, open));
                           });
    return out;
}

SynsetCycles enumerate_synset_cycles(const SynonymyGraph& graph, const Synset& synset,
                                     int level, FirstHop first_hop,
                                     const EnumerationOptions& options) {
    if (level < 2) throw ArgumentError("level must be at least 2");
    SynsetCycles result;
    auto synset_nodes = detail::resolve_synset_nodes(graph, synset, &result.skipped_terms);

    // Iterate in synset order so output grouping follows the synset listing.
    for (const Term& t : synset.terms) {
        auto id = graph.node_of(t);
        if (!id) continue;
        result.roots_present.push_back(t);
        std::vector<NodeId> hops;
        const std::vector<NodeId>* hops_ptr = nullptr;
        if (first_hop == FirstHop::synset_terms) {
            hops = detail::synset_first_hops(graph, *id, synset_nodes);
            hops_ptr = &hops;
        }
        detail::for_each_cycle(graph, *id, level, hops_ptr, options.max_paths_per_root,
                               [&](const std::vector<NodeId>& open) {
                                   result.paths.push_back(close_path(graph, open));
                               });
    }
    return result;
}

std::string format_path(const CyclicPath& path) {
    std::string out;
    for (std::size_t i = 0; i < path.nodes.size(); ++i) {
        if (i) out += " -> ";
        out += to_string(path.nodes[i]);
    }
    return out;
}

} // namespace synex
