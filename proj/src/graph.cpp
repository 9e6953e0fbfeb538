#include "wsnet/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace wsnet {

NodeId Graph::add_node(std::string_view label) {
    std::string key(label);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    if (labels_.size() >= std::numeric_limits<NodeId>::max()) throw GraphError("too many nodes");
    auto id = static_cast<NodeId>(labels_.size());
    labels_.push_back(key);
    index_.emplace(std::move(key), id);
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

bool Graph::add_edge(NodeId u, NodeId v) {
    if (u >= node_count() || v >= node_count()) throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("self-loop on '" + labels_[u] + "' rejected");
    auto& outs = out_[u];
    auto pos = std::lower_bound(outs.begin(), outs.end(), v);
    if (pos != outs.end() && *pos == v) return false;
    outs.insert(pos, v);
    auto& ins = in_[v];
    ins.insert(std::lower_bound(ins.begin(), ins.end(), u), u);
    ++edge_count_;
    return true;
}

std::optional<NodeId> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto& outs = out_.at(u);
    return std::binary_search(outs.begin(), outs.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> result;
    result.reserve(edge_count_);
    for (NodeId u = 0; u < node_count(); ++u) {
        for (auto v : out_[u]) result.emplace_back(u, v);
    }
    return result;
}

std::size_t UndirectedGraph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& adj : adjacency) twice += adj.size();
    return twice / 2;
}

UndirectedGraph undirected_projection(const Graph& g) {
    UndirectedGraph ug;
    ug.adjacency.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto& adj = ug.adjacency[v];
        auto outs = g.out_neighbors(v);
        auto ins = g.in_neighbors(v);
        adj.reserve(outs.size() + ins.size());
        std::set_union(outs.begin(), outs.end(), ins.begin(), ins.end(), std::back_inserter(adj));
    }
    return ug;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
    std::vector<NodeId> keep(nodes.begin(), nodes.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    constexpr NodeId kAbsent = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> remap(g.node_count(), kAbsent);
    Graph sub;
    for (auto v : keep) {
        if (v >= g.node_count()) throw GraphError("induced_subgraph: unknown node " + std::to_string(v));
        remap[v] = sub.add_node(g.label(v));
    }
    for (auto u : keep) {
        for (auto v : g.out_neighbors(u)) {
            if (remap[v] != kAbsent) sub.add_edge(remap[u], remap[v]);
        }
    }
    return sub;
}

double density(const Graph& g) {
    auto n = static_cast<double>(g.node_count());
    if (g.node_count() < 2) return 0.0;
    return static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

std::vector<NodeId> ComponentDecomposition::members(NodeId component) const {
    std::vector<NodeId> result;
    for (NodeId v = 0; v < assignment.size(); ++v) {
        if (assignment[v] == component) result.push_back(v);
    }
    return result;
}

ComponentDecomposition weak_components(const Graph& g) {
    ComponentDecomposition cd;
    const auto n = g.node_count();
    constexpr NodeId kUnassigned = std::numeric_limits<NodeId>::max();
    cd.assignment.assign(n, kUnassigned);

    std::vector<NodeId> stack;
    for (NodeId start = 0; start < n; ++start) {
        if (cd.assignment[start] != kUnassigned) continue;
        // Scanning ids in increasing order makes `start` the smallest member.
        std::size_t size = 0;
        cd.assignment[start] = start;
        stack.push_back(start);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            ++size;
            for (auto nbrs : {g.out_neighbors(v), g.in_neighbors(v)}) {
                for (auto w : nbrs) {
                    if (cd.assignment[w] == kUnassigned) {
                        cd.assignment[w] = start;
                        stack.push_back(w);
                    }
                }
            }
        }
        cd.sizes.emplace(start, size);
        if (g.out_neighbors(start).empty() && g.in_neighbors(start).empty()) cd.isolated.push_back(start);
    }
    return cd;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source, bool directed) {
    if (source >= g.node_count()) throw GraphError("bfs_distances: unknown source node " + std::to_string(source));
    std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
    std::deque<NodeId> queue{source};
    dist[source] = 0;
    auto visit = [&](NodeId v, std::span<const NodeId> nbrs) {
        for (auto w : nbrs) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    };
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        visit(v, g.out_neighbors(v));
        if (!directed) visit(v, g.in_neighbors(v));
    }
    return dist;
}

TriangleCensus triangle_census(const UndirectedGraph& g) {
    TriangleCensus census;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const auto& nu = g.adjacency[u];
        std::uint64_t d = nu.size();
        census.connected_triples += d * (d ? d - 1 : 0) / 2;
        // Count each triangle once, at its smallest vertex u < v < w.
        for (auto v : nu) {
            if (v <= u) continue;
            const auto& nv = g.adjacency[v];
            auto a = std::upper_bound(nu.begin(), nu.end(), v);
            auto b = std::upper_bound(nv.begin(), nv.end(), v);
            while (a != nu.end() && b != nv.end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    ++census.triangles;
                    ++a;
                    ++b;
                }
            }
        }
    }
    return census;
}

TriangleCensus triangle_census(const Graph& g) { return triangle_census(undirected_projection(g)); }

DegreeSequences degrees(const Graph& g) {
    DegreeSequences d;
    const auto n = g.node_count();
    d.in.resize(n);
    d.out.resize(n);
    d.total.resize(n);
    for (NodeId v = 0; v < n; ++v) {
        d.in[v] = g.in_neighbors(v).size();
        d.out[v] = g.out_neighbors(v).size();
        d.total[v] = d.in[v] + d.out[v];
    }
    return d;
}

namespace {

std::vector<std::pair<NodeId, NodeId>> edges_by_label(const Graph& g) {
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end(), [&g](const auto& a, const auto& b) {
        const auto& la = g.label(a.first);
        const auto& lb = g.label(b.first);
        if (la != lb) return la < lb;
        return g.label(a.second) < g.label(b.second);
    });
    return edges;
}

std::string dot_quote(std::string_view s) {
    std::string q = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') q.push_back('\\');
        q.push_back(c);
    }
    q.push_back('"');
    return q;
}

}  // namespace

void write_edge_list(const Graph& g, std::ostream& os) {
    for (const auto& [u, v] : edges_by_label(g)) os << g.label(u) << '\t' << g.label(v) << '\n';
}

void write_node_table(const Graph& g, std::ostream& os) {
    for (NodeId v = 0; v < g.node_count(); ++v) os << v << '\t' << g.label(v) << '\n';
}

void write_dot(const Graph& g, std::ostream& os, bool omit_isolated, std::string_view name) {
    std::vector<NodeId> order(g.node_count());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::sort(order.begin(), order.end(), [&g](NodeId a, NodeId b) { return g.label(a) < g.label(b); });

    os << "digraph " << dot_quote(name) << " {\n";
    for (auto v : order) {
        bool isolated = g.out_neighbors(v).empty() && g.in_neighbors(v).empty();
        if (omit_isolated && isolated) continue;
        os << "  " << dot_quote(g.label(v)) << ";\n";
    }
    for (const auto& [u, v] : edges_by_label(g))
        os << "  " << dot_quote(g.label(u)) << " -> " << dot_quote(g.label(v)) << ";\n";
    os << "}\n";
}

}  // namespace wsnet
