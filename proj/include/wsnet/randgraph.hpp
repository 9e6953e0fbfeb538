#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "wsnet/graph.hpp"
#include "wsnet/netstats.hpp"

namespace wsnet {

/// Directed G(n, l): exactly l edges drawn uniformly without replacement
/// from the n(n-1) ordered non-loop pairs. Nodes are labelled "0".."n-1".
/// Throws std::invalid_argument when l > n(n-1).
Graph er_gnm(std::size_t n, std::size_t l, std::uint64_t seed);

struct MeanStd {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation; 0 for one sample
};

struct ErEnsembleStats {
    std::size_t n = 0;
    std::size_t l = 0;
    std::size_t samples = 0;
    /// Samples without a non-trivial component, left out of the means (which
    /// stay 0 when every sample is skipped).
    std::size_t skipped = 0;
    std::uint64_t seed = 0;
    DistanceConvention convention;
    MeanStd average_distance;
    MeanStd transitivity;
    /// ln N / ln(L/N) when L > N > 1.
    std::optional<double> closed_form_distance;
};

struct ErEnsembleOptions {
    DistanceConvention convention;
    unsigned workers = 1;
};

/// Sample i uses seed + i. Distances and transitivity are measured per
/// sample under `convention` (scope applies to both), then averaged.
ErEnsembleStats er_ensemble_stats(std::size_t n, std::size_t l, std::size_t samples, std::uint64_t seed,
                                  const ErEnsembleOptions& options = {});

}  // namespace wsnet
