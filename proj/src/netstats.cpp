#include "wsnet/netstats.hpp"

#include <algorithm>
#include <cmath>

#include "wsnet/parallel.hpp"
#include "wsnet/randgraph.hpp"
#include "wsnet/topology.hpp"

namespace wsnet {

std::string_view to_string(DistanceScope scope) noexcept {
    return scope == DistanceScope::LargestComponent ? "largest-component" : "whole-graph";
}

namespace {

double ratio(std::size_t a, std::size_t b) { return b ? static_cast<double>(a) / static_cast<double>(b) : 0.0; }

// Largest non-isolated component id, if any.
std::optional<NodeId> pick_largest(const ComponentDecomposition& cd) {
    std::optional<NodeId> best;
    std::size_t best_size = 1;
    for (const auto& [id, size] : cd.sizes) {
        if (size > best_size) {
            best = id;
            best_size = size;
        }
    }
    return best;
}

}  // namespace

std::vector<NodeId> largest_component_nodes(const Graph& g) {
    auto cd = weak_components(g);
    auto largest = pick_largest(cd);
    return largest ? cd.members(*largest) : std::vector<NodeId>{};
}

Graph largest_component(const Graph& g) {
    auto nodes = largest_component_nodes(g);
    return induced_subgraph(g, nodes);
}

ComponentSummary component_summary(const Graph& g) {
    ComponentSummary s;
    s.nodes = g.node_count();
    s.links = g.edge_count();

    auto cd = weak_components(g);
    s.isolated = cd.isolated.size();
    const auto trimmed = s.nodes - s.isolated;
    s.isolated_fraction_total = ratio(s.isolated, s.nodes);
    s.isolated_fraction_trimmed = ratio(s.isolated, trimmed);

    auto largest = pick_largest(cd);
    for (const auto& [id, size] : cd.sizes) {
        if (size < 2 || (largest && id == *largest)) continue;
        s.small_min_size = s.small_components == 0 ? size : std::min(s.small_min_size, size);
        s.small_max_size = std::max(s.small_max_size, size);
        ++s.small_components;
    }

    if (largest) {
        auto sub = induced_subgraph(g, cd.members(*largest));
        s.largest_nodes = sub.node_count();
        s.largest_links = sub.edge_count();
        s.largest_node_fraction_total = ratio(s.largest_nodes, s.nodes);
        s.largest_node_fraction_trimmed = ratio(s.largest_nodes, trimmed);
        s.largest_link_fraction = ratio(s.largest_links, s.links);
        s.largest_density = density(sub);
    }
    return s;
}

DistanceStats distance_stats(const Graph& g, DistanceConvention convention, unsigned workers) {
    Graph scoped;
    const Graph* target = &g;
    if (convention.scope == DistanceScope::LargestComponent) {
        auto nodes = largest_component_nodes(g);
        if (nodes.empty()) throw NetstatsError("distance: graph has no non-trivial component");
        scoped = induced_subgraph(g, nodes);
        target = &scoped;
    } else if (g.node_count() == 0) {
        throw NetstatsError("distance: empty graph");
    }

    const auto n = target->node_count();
    struct Partial {
        std::uint64_t sum = 0, reached = 0, unreached = 0;
        std::uint32_t max = 0;
    };
    std::vector<Partial> partial(n);
    parallel_for(n, workers, [&](std::size_t s) {
        auto dist = bfs_distances(*target, static_cast<NodeId>(s), convention.directed);
        auto& p = partial[s];
        for (std::size_t t = 0; t < n; ++t) {
            if (t == s) continue;
            if (dist[t] == kUnreachable) {
                ++p.unreached;
            } else {
                p.sum += dist[t];
                ++p.reached;
                p.max = std::max(p.max, dist[t]);
            }
        }
    });

    DistanceStats stats;
    stats.convention = convention;
    std::uint64_t sum = 0;
    for (const auto& p : partial) {
        sum += p.sum;
        stats.pairs_counted += p.reached;
        stats.unreachable_pairs += p.unreached;
        stats.diameter = std::max(stats.diameter, p.max);
    }
    stats.mean = stats.pairs_counted ? static_cast<double>(sum) / static_cast<double>(stats.pairs_counted) : 0.0;
    return stats;
}

DistanceStats average_distance(const Graph& g, DistanceScope scope, bool directed) {
    return distance_stats(g, {scope, directed});
}

std::uint32_t diameter(const Graph& g, DistanceScope scope, bool directed) {
    return distance_stats(g, {scope, directed}).diameter;
}

double transitivity(const Graph& g) {
    auto c = triangle_census(g);
    if (c.connected_triples == 0) return 0.0;
    return 3.0 * static_cast<double>(c.triangles) / static_cast<double>(c.connected_triples);
}

std::optional<double> degree_correlation(const Graph& g) {
    auto ug = undirected_projection(g);
    if (ug.edge_count() == 0) throw NetstatsError("degree correlation: graph has no edges");

    // Sums over both orientations of every edge; the two marginals coincide.
    double m = 0, sum_x = 0, sum_xx = 0, sum_xy = 0;
    for (NodeId u = 0; u < ug.node_count(); ++u) {
        auto du = static_cast<double>(ug.degree(u));
        for (auto v : ug.adjacency[u]) {
            auto dv = static_cast<double>(ug.degree(v));
            m += 1;
            sum_x += du;
            sum_xx += du * du;
            sum_xy += du * dv;
        }
    }
    const double mean = sum_x / m;
    const double var = sum_xx / m - mean * mean;
    if (var <= 1e-12 * std::max(1.0, mean * mean)) return std::nullopt;
    const double r = (sum_xy / m - mean * mean) / var;
    return std::clamp(r, -1.0, 1.0);
}

SmallWorldAssessment small_world_assessment(const Graph& g, const ErEnsembleStats& baseline) {
    if (g.node_count() != baseline.n || g.edge_count() != baseline.l)
        throw NetstatsError("small-world: baseline drawn for N=" + std::to_string(baseline.n) +
                            ", L=" + std::to_string(baseline.l) + " but network has N=" +
                            std::to_string(g.node_count()) + ", L=" + std::to_string(g.edge_count()));
    SmallWorldAssessment a;
    a.network_distance = distance_stats(g, baseline.convention).mean;
    a.er_distance = baseline.average_distance.mean;
    a.small_world = a.network_distance <= a.er_distance;
    return a;
}

Graph measurement_scope(const Graph& g, DistanceScope scope) {
    return scope == DistanceScope::LargestComponent ? largest_component(g) : g;
}

TopologyReport analyze_topology(const Graph& g, std::string network, const AnalysisOptions& options) {
    TopologyReport r;
    r.network = std::move(network);
    r.convention = options.convention;
    r.components = component_summary(g);
    r.component_count = weak_components(g).sizes.size();

    auto scope = measurement_scope(g, options.convention.scope);
    r.scope_nodes = scope.node_count();
    r.scope_links = scope.edge_count();
    if (scope.edge_count() == 0) return r;

    r.distance = distance_stats(scope, options.convention, options.workers);
    r.transitivity = transitivity(scope);
    r.degree_correlation = degree_correlation(scope);
    if (options.er_samples > 0) {
        r.er_baseline = er_ensemble_stats(scope.node_count(), scope.edge_count(), options.er_samples, options.seed,
                                          {options.convention, options.workers});
        r.small_world = small_world_assessment(scope, *r.er_baseline);
    }
    return r;
}

}  // namespace wsnet
