#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wsnet {

using NodeId = std::uint32_t;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Directed simple graph with unique string labels. Node ids follow
/// insertion order. Self-loops are rejected; parallel edges collapse.
class Graph {
public:
    Graph() = default;

    /// Returns the id of `label`, inserting the node if it is new.
    NodeId add_node(std::string_view label);

    /// Inserts u->v. Returns false if the edge already existed.
    /// Throws GraphError on a self-loop or an unknown node.
    bool add_edge(NodeId u, NodeId v);
    bool add_edge(std::string_view from, std::string_view to) {
        const NodeId u = add_node(from);  // sequenced: ids follow first mention
        return add_edge(u, add_node(to));
    }

    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::string& label(NodeId v) const { return labels_.at(v); }
    std::optional<NodeId> find(std::string_view label) const;
    bool has_edge(NodeId u, NodeId v) const;

    /// Sorted neighbor lists.
    std::span<const NodeId> out_neighbors(NodeId v) const { return out_.at(v); }
    std::span<const NodeId> in_neighbors(NodeId v) const { return in_.at(v); }

    /// All edges, sorted by (source id, target id).
    std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::vector<NodeId>> out_;
    std::vector<std::vector<NodeId>> in_;
    std::size_t edge_count_ = 0;
};

/// Simple undirected graph over node ids 0..n-1, with sorted adjacency.
struct UndirectedGraph {
    std::vector<std::vector<NodeId>> adjacency;

    std::size_t node_count() const noexcept { return adjacency.size(); }
    std::size_t edge_count() const noexcept;
    std::size_t degree(NodeId v) const { return adjacency.at(v).size(); }
};

/// Forgets direction; u->v and v->u merge into one edge.
UndirectedGraph undirected_projection(const Graph& g);

/// Keeps exactly the listed nodes (in ascending id order) and the edges
/// between them. Throws GraphError on an id outside g.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// Directed density L / (N (N - 1)); 0 for graphs with fewer than 2 nodes.
double density(const Graph& g);

struct ComponentDecomposition {
    /// Component id per node: the smallest node id in the component.
    std::vector<NodeId> assignment;
    /// Component id -> node count.
    std::map<NodeId, std::size_t> sizes;
    /// Nodes with zero total degree, ascending.
    std::vector<NodeId> isolated;

    std::vector<NodeId> members(NodeId component) const;
};

/// Weakly connected components (edge direction ignored).
ComponentDecomposition weak_components(const Graph& g);

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Hop counts from `source`; kUnreachable for nodes that cannot be reached.
/// With directed=false edges are traversed both ways.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source, bool directed);

struct TriangleCensus {
    std::uint64_t triangles = 0;
    /// Paths of length 2 counted by centre: sum of d(d-1)/2.
    std::uint64_t connected_triples = 0;

    friend bool operator==(const TriangleCensus&, const TriangleCensus&) = default;
};

/// Computed on the undirected projection.
TriangleCensus triangle_census(const Graph& g);
TriangleCensus triangle_census(const UndirectedGraph& g);

struct DegreeSequences {
    std::vector<std::size_t> in;
    std::vector<std::size_t> out;
    std::vector<std::size_t> total;
};

DegreeSequences degrees(const Graph& g);

// Exports. Edges are written sorted by (source label, target label).

/// "src<TAB>dst" per edge.
void write_edge_list(const Graph& g, std::ostream& os);
/// "index<TAB>label" per node, in id order.
void write_node_table(const Graph& g, std::ostream& os);
/// Graphviz digraph; `omit_isolated` drops degree-0 nodes.
void write_dot(const Graph& g, std::ostream& os, bool omit_isolated, std::string_view name = "network");

}  // namespace wsnet
