#ifndef BNINV_DAG_HPP
#define BNINV_DAG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bninv/error.hpp"

namespace bninv {

/// Sorted, duplicate-free vector of node indices.
using NodeSet = std::vector<int>;

using Edge = std::pair<int, int>;
using NamedEdge = std::pair<std::string, std::string>;

namespace detail {
NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);
NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
bool set_contains(const NodeSet& a, int x);
bool is_subset(const NodeSet& a, const NodeSet& b);
void insert_sorted(NodeSet& a, int x);
} // namespace detail

class UndirectedGraph;
class TopologicalOrdering;

/// Immutable directed acyclic graph over named nodes.
///
/// Node iteration order is construction order and every derived collection
/// (edges, parent sets, ...) is emitted sorted by it, so equal construction
/// input gives byte-equal output downstream. Construction rejects self loops,
/// unknown endpoints, duplicate names, 2-cycles and directed cycles.
class Dag {
public:
    Dag() = default;
    Dag(std::vector<std::string> nodes, const std::vector<NamedEdge>& edges);

    /// Index-based constructor used by the algorithms; same validation.
    Dag(std::vector<std::string> nodes, std::vector<Edge> edges);

    int node_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& node_names() const { return names_; }
    const std::string& name(int v) const;

    /// Index of a node name; throws unknown_node.
    int index_of(std::string_view name) const;
    std::optional<int> find(std::string_view name) const;

    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int s, int t) const;

    const NodeSet& parents(int v) const;
    const NodeSet& children(int v) const;
    NodeSet descendants(int v) const;
    NodeSet ancestors(int v) const;
    NodeSet non_descendants(int v) const;
    NodeSet roots() const;
    NodeSet leaves() const;

    Dag reversed() const;
    UndirectedGraph skeleton() const;
    UndirectedGraph moral_graph() const;
    Dag induced(const NodeSet& keep) const;

    /// True when every node's parent set is complete (all co-parents joined).
    bool is_perfect() const;

    /// True when parents(t) = parents(s) + {s}. The edge must exist.
    bool is_covered(int s, int t) const;

    /// Subgraph test by node name and named edge containment.
    bool subgraph_of(const Dag& g) const;

    /// Same node name set (order may differ).
    bool same_node_set(const Dag& g) const;

    /// Edge-set union over the same node universe; throws on resulting cycle.
    Dag with_edges(const std::vector<Edge>& add) const;
    Dag without_edges(const std::vector<Edge>& remove) const;

    NodeSet all_nodes() const;

    /// Node-set plus edge-set equality on names, not isomorphism.
    friend bool operator==(const Dag& a, const Dag& b);
    friend bool operator!=(const Dag& a, const Dag& b) { return !(a == b); }

private:
    void check_node(int v) const;
    void build(std::vector<Edge> edges);

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::vector<NodeSet> parents_;
    std::vector<NodeSet> children_;
};

/// Rebuild `g` with the node order of `reference`; node sets must be equal.
Dag aligned_to(const Dag& reference, const Dag& g);

/// Validate a node label (non-empty, no whitespace, no "->", ',', ';', ...).
void validate_node_name(std::string_view name);

/// Undirected view with the same determinism rules as Dag.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    UndirectedGraph(std::vector<std::string> nodes, std::vector<Edge> links);

    int node_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& node_names() const { return names_; }

    /// Links normalized to (low index, high index), sorted.
    const std::vector<Edge>& links() const { return links_; }
    bool has_link(int a, int b) const;

    /// Name-based link containment over the same node universe.
    bool contains(const UndirectedGraph& other) const;

    friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b);
    friend bool operator!=(const UndirectedGraph& a, const UndirectedGraph& b) {
        return !(a == b);
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> links_;
};

/// Injective node -> rank map (1..n), stored by name so one ordering can be
/// applied to every graph over the same node universe (G, G*, H_i, ...).
class TopologicalOrdering {
public:
    TopologicalOrdering() = default;
    explicit TopologicalOrdering(std::vector<std::string> names_by_rank);

    int size() const { return static_cast<int>(by_rank_.size()); }
    const std::vector<std::string>& names_by_rank() const { return by_rank_; }
    const std::string& name_at_rank(int rank) const; // 1-based
    int rank_of(std::string_view name) const;        // throws unknown_node

    /// Rank per node index of `g`; throws when node sets differ.
    std::vector<int> ranks_for(const Dag& g) const;

    /// Every edge of `g` ascends in rank. Throws when node sets differ.
    bool consonant_with(const Dag& g) const;

    /// Nodes of `g` with a lower rank than `v`.
    NodeSet predecessors(const Dag& g, int v) const;

    friend bool operator==(const TopologicalOrdering& a, const TopologicalOrdering& b) {
        return a.by_rank_ == b.by_rank_;
    }

private:
    std::vector<std::string> by_rank_;
    std::unordered_map<std::string, int> rank_;
};

/// Canonical ordering: Kahn's scheme, ties broken by construction order.
TopologicalOrdering topological_ordering(const Dag& g);

/// Exhaustive, deterministic enumeration. Throws a bound error when the
/// graph admits more than `bound` orderings.
std::vector<TopologicalOrdering> all_topological_orderings(const Dag& g,
                                                           std::uint64_t bound = 1000000);

} // namespace bninv

#endif
