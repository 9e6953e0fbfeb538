#include "wsnet/randgraph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

#include "wsnet/parallel.hpp"
#include "wsnet/rng.hpp"

namespace wsnet {

namespace {

// Floyd's algorithm: k distinct values from [0, m), returned sorted.
std::vector<std::uint64_t> sample_without_replacement(std::uint64_t m, std::uint64_t k, Rng& rng) {
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(k * 2);
    for (std::uint64_t j = m - k; j < m; ++j) {
        auto t = rng.below(j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
    std::sort(out.begin(), out.end());
    return out;
}

MeanStd summarize(const std::vector<double>& xs) {
    MeanStd s;
    if (xs.empty()) return s;
    double sum = 0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0;
        for (double x : xs) ss += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return s;
}

}  // namespace

Graph er_gnm(std::size_t n, std::size_t l, std::uint64_t seed) {
    const std::uint64_t pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1);
    if (l > pairs)
        throw std::invalid_argument("er_gnm: l=" + std::to_string(l) + " exceeds n(n-1)=" + std::to_string(pairs));

    Graph g;
    for (std::size_t v = 0; v < n; ++v) g.add_node(std::to_string(v));

    Rng rng(seed);
    std::vector<std::uint64_t> picks;
    if (2 * l <= pairs) {
        picks = sample_without_replacement(pairs, l, rng);
    } else {
        // Dense case: draw the complement instead.
        auto excluded = sample_without_replacement(pairs, pairs - l, rng);
        picks.reserve(l);
        std::size_t e = 0;
        for (std::uint64_t k = 0; k < pairs; ++k) {
            if (e < excluded.size() && excluded[e] == k) {
                ++e;
            } else {
                picks.push_back(k);
            }
        }
    }
    for (auto k : picks) {
        auto u = static_cast<NodeId>(k / (n - 1));
        auto r = static_cast<NodeId>(k % (n - 1));
        g.add_edge(u, r < u ? r : r + 1);
    }
    return g;
}

ErEnsembleStats er_ensemble_stats(std::size_t n, std::size_t l, std::size_t samples, std::uint64_t seed,
                                  const ErEnsembleOptions& options) {
    if (samples < 1) throw std::invalid_argument("er_ensemble_stats: samples must be >= 1");

    struct Sample {
        bool ok = false;
        double distance = 0.0;
        double transitivity = 0.0;
    };
    std::vector<Sample> results(samples);
    parallel_for(samples, options.workers, [&](std::size_t i) {
        auto g = er_gnm(n, l, seed + i);
        if (options.convention.scope == DistanceScope::LargestComponent) g = largest_component(g);
        if (g.edge_count() == 0) return;
        results[i].ok = true;
        results[i].distance = distance_stats(g, options.convention).mean;
        results[i].transitivity = transitivity(g);
    });

    ErEnsembleStats stats;
    stats.n = n;
    stats.l = l;
    stats.samples = samples;
    stats.seed = seed;
    stats.convention = options.convention;
    std::vector<double> distances;
    std::vector<double> transitivities;
    for (const auto& r : results) {
        if (!r.ok) {
            ++stats.skipped;
            continue;
        }
        distances.push_back(r.distance);
        transitivities.push_back(r.transitivity);
    }
    stats.average_distance = summarize(distances);
    stats.transitivity = summarize(transitivities);
    if (n > 1 && l > n)
        stats.closed_form_distance = std::log(static_cast<double>(n)) / std::log(static_cast<double>(l) / n);
    return stats;
}

}  // namespace wsnet
