#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "wsnet/graph.hpp"
#include "wsnet/netstats.hpp"
#include "wsnet/randgraph.hpp"

namespace wsnet {

/// Everything the component, small-world, transitivity and degree
/// correlation tables need for one network.
struct TopologyReport {
    std::string network;
    DistanceConvention convention;
    ComponentSummary components;
    std::size_t component_count = 0;  // weak components, isolated nodes included

    /// Size of the measured scope (largest component or whole graph).
    std::size_t scope_nodes = 0;
    std::size_t scope_links = 0;

    std::optional<DistanceStats> distance;  // absent when the scope is empty
    double transitivity = 0.0;
    std::optional<double> degree_correlation;  // nullopt: undefined
    std::optional<ErEnsembleStats> er_baseline;
    std::optional<SmallWorldAssessment> small_world;
};

struct AnalysisOptions {
    DistanceConvention convention;
    std::size_t er_samples = 100;  // 0 skips the random baseline
    std::uint64_t seed = 42;
    unsigned workers = 1;
};

/// Component summary over the whole graph; every other metric over the
/// scope chosen by options.convention.
TopologyReport analyze_topology(const Graph& g, std::string network, const AnalysisOptions& options = {});

/// The graph metrics are measured on: g's largest component or g itself.
Graph measurement_scope(const Graph& g, DistanceScope scope);

}  // namespace wsnet
