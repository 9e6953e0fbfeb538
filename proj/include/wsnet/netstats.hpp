#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wsnet/graph.hpp"

namespace wsnet {

class NetstatsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class DistanceScope { LargestComponent, WholeGraph };

std::string_view to_string(DistanceScope scope) noexcept;

/// How distance-based metrics are measured. Directed distances over the
/// largest weak component are the default.
struct DistanceConvention {
    DistanceScope scope = DistanceScope::LargestComponent;
    bool directed = true;

    friend bool operator==(const DistanceConvention&, const DistanceConvention&) = default;
};

/// Isolated nodes, small components and the largest component of a graph.
///
/// Fractions come in two bases: `*_total` divides by all nodes, `*_trimmed`
/// by the non-isolated nodes only.
struct ComponentSummary {
    std::size_t nodes = 0;
    std::size_t links = 0;

    std::size_t isolated = 0;
    double isolated_fraction_total = 0.0;
    double isolated_fraction_trimmed = 0.0;

    std::size_t small_components = 0;
    std::size_t small_min_size = 0;
    std::size_t small_max_size = 0;

    std::size_t largest_nodes = 0;  // 0 when every node is isolated
    std::size_t largest_links = 0;
    double largest_node_fraction_total = 0.0;
    double largest_node_fraction_trimmed = 0.0;
    double largest_link_fraction = 0.0;
    double largest_density = 0.0;
};

ComponentSummary component_summary(const Graph& g);

/// Node ids of the largest non-trivial weak component (ties go to the
/// component holding the smallest node id); empty when there is none.
std::vector<NodeId> largest_component_nodes(const Graph& g);
Graph largest_component(const Graph& g);

struct DistanceStats {
    /// Mean hop count over ordered reachable pairs (u != v) in scope.
    double mean = 0.0;
    std::uint64_t pairs_counted = 0;
    std::uint64_t unreachable_pairs = 0;
    /// Largest finite distance in scope.
    std::uint32_t diameter = 0;
    DistanceConvention convention;
};

/// All-pairs BFS over the scope. Throws NetstatsError when the scope is
/// empty (no largest component, or an empty graph).
DistanceStats distance_stats(const Graph& g, DistanceConvention convention = {}, unsigned workers = 1);
DistanceStats average_distance(const Graph& g, DistanceScope scope, bool directed);
std::uint32_t diameter(const Graph& g, DistanceScope scope, bool directed);

/// 3 * triangles / connected triples on the undirected projection; 0 when
/// there are no connected triples.
double transitivity(const Graph& g);

/// Newman's assortativity: Pearson correlation of endpoint degrees over the
/// undirected projection's edges, each edge counted in both orientations.
/// nullopt when the degree variance is zero. Throws on an edgeless graph.
std::optional<double> degree_correlation(const Graph& g);

struct ErEnsembleStats;

struct SmallWorldAssessment {
    double network_distance = 0.0;
    double er_distance = 0.0;
    /// network_distance <= er_distance
    bool small_world = false;
};

/// Compares g's mean distance (measured under the baseline's convention)
/// against the ensemble. Throws NetstatsError if the baseline was not drawn
/// with g's node and link counts.
SmallWorldAssessment small_world_assessment(const Graph& g, const ErEnsembleStats& baseline);

}  // namespace wsnet
