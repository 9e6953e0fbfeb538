#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsnet/powerlaw.hpp"
#include "wsnet/topology.hpp"

namespace wsnet {

enum class ReportFormat { Text, Csv };

/// One network's column in the rendered tables.
struct NetworkResult {
    TopologyReport topology;
    std::optional<DegreeDistributionReport> degrees;
    std::string degree_error;  // set when the degree fits could not run at all
};

/// Five blocks in fixed order: component organization, small world,
/// scale-free fits, transitivity, degree correlation. Text mode prints one
/// aligned column per network; CSV mode prints one row per
/// (table, metric, network). Output is locale-independent.
std::string render_tables(const std::vector<NetworkResult>& networks, ReportFormat format);

}  // namespace wsnet
