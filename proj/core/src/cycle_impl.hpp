#pragma once

#include <span>
#include <utility>
#include <vector>

#include "synex/errors.hpp"
#include "synex/graph.hpp"
#include "synex/term.hpp"

namespace synex::detail {

// Iterative DFS over simple cycles anchored at root, 2..max_len edges. emit
// receives the open path (root first, closing edge implied); paths arrive in
// lexicographic order of the node sequence because successor lists are
// sorted. first_hops, when given, replaces the root's successor list and
// must be a sorted subset of it; an empty list means no cycles at all.
template <typename Fn>
void for_each_cycle(const SynonymyGraph& g, NodeId root, int max_len,
                    const std::vector<NodeId>* first_hops, std::size_t max_paths, Fn&& emit) {
    const std::size_t limit = static_cast<std::size_t>(max_len);
    struct Frame {
        std::span<const NodeId> succ;
        std::size_t next;
    };
    std::vector<Frame> stack;
    std::vector<NodeId> path;
    std::vector<char> on_path(g.node_count(), 0);

    path.push_back(root);
    on_path[root] = 1;
    stack.push_back({first_hops ? std::span<const NodeId>(*first_hops) : g.successors(root), 0});

    std::size_t emitted = 0;
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next >= top.succ.size()) {
            on_path[path.back()] = 0;
            path.pop_back();
            stack.pop_back();
            continue;
        }
        NodeId v = top.succ[top.next++];
        if (v == root) {
            if (path.size() >= 2 && path.size() <= limit) {
                if (emitted >= max_paths)
                    throw CycleLimitError(to_string(g.term_of(root)), max_paths);
                ++emitted;
                emit(std::as_const(path));
            }
            continue;
        }
        if (on_path[v]) continue;
        if (path.size() + 1 <= limit) {
            path.push_back(v);
            on_path[v] = 1;
            stack.push_back({g.successors(v), 0});
        }
    }
}

// Sorted node ids of the synset terms present in the graph.
std::vector<NodeId> resolve_synset_nodes(const SynonymyGraph& g, const Synset& synset,
                                         std::vector<Term>* skipped);

// First-hop whitelist for one root in synset_terms mode: the other resolved
// synset members that really are successors of the root.
std::vector<NodeId> synset_first_hops(const SynonymyGraph& g, NodeId root,
                                      const std::vector<NodeId>& synset_nodes);

} // namespace synex::detail
