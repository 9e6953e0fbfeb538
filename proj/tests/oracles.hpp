// Independent reference implementations used to check the library.
// Everything here is written from the definitions, with no shortcuts shared
// with the code under test.
#pragma once

#include <gsl/gsl_sf_zeta.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wsnet/corpus.hpp"
#include "wsnet/graph.hpp"
#include "wsnet/matching.hpp"
#include "wsnet/rng.hpp"

namespace oracle {

using wsnet::Graph;
using wsnet::NodeId;

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// Distances

inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g, bool directed) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [u, v] : g.edges()) {
        d[u][v] = 1;
        if (!directed) d[v][u] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i][k] == kInf) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (d[k][j] == kInf) continue;
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    return d;
}

/// Node set of the largest weak component with at least two nodes; ties go
/// to the component containing the smallest node id.
inline std::vector<NodeId> largest_weak_component(const Graph& g) {
    auto d = floyd_warshall(g, false);
    const std::size_t n = g.node_count();
    std::vector<NodeId> best;
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<NodeId> members;
        for (std::size_t t = 0; t < n; ++t) {
            if (d[s][t] != kInf) {
                members.push_back(static_cast<NodeId>(t));
                seen[t] = true;
            }
        }
        if (members.size() >= 2 && members.size() > best.size()) best = members;
    }
    return best;
}

struct PathSummary {
    std::uint64_t distance_sum = 0;
    std::uint64_t pairs = 0;
    std::uint64_t unreachable = 0;
    std::uint32_t diameter = 0;
    double mean() const { return pairs ? static_cast<double>(distance_sum) / static_cast<double>(pairs) : 0.0; }
};

/// Ordered pairs (u != v) drawn from `scope`, distances taken in the full
/// graph restricted to `scope` (the caller passes an induced subgraph).
inline PathSummary path_summary(const Graph& g, bool directed) {
    auto d = floyd_warshall(g, directed);
    PathSummary s;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (i == j) continue;
            if (d[i][j] == kInf) {
                ++s.unreachable;
                continue;
            }
            s.distance_sum += d[i][j];
            ++s.pairs;
            s.diameter = std::max(s.diameter, d[i][j]);
        }
    return s;
}

// Triangles

struct Triples {
    std::uint64_t triangles = 0;
    std::uint64_t connected_triples = 0;
};

inline Triples brute_triples(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
    Triples t;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                if (a[i][j] && a[j][k] && a[i][k]) ++t.triangles;
            }
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t w = u + 1; w < n; ++w) {
                if (u != c && w != c && a[c][u] && a[c][w]) ++t.connected_triples;
            }
    return t;
}

// Random inputs

inline Graph random_digraph(wsnet::Rng& rng, std::size_t n, double p) {
    Graph g;
    for (std::size_t i = 0; i < n; ++i) g.add_node(std::to_string(i));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v && rng.uniform() < p) g.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
        }
    return g;
}

/// Up to `max_ops` operations over a vocabulary of up to `max_keys` names.
/// Roughly half the parameters carry a concept drawn from a smaller pool, so
/// syntactic and semantic matching disagree often.
inline wsnet::Corpus random_corpus(wsnet::Rng& rng, std::size_t max_ops, std::size_t max_keys) {
    const std::size_t ops = 1 + rng.below(max_ops);
    const std::size_t keys = 1 + rng.below(max_keys);
    const std::size_t concepts = 1 + rng.below(keys);
    const std::size_t services = 1 + rng.below(3);

    // One concept per name per corpus, or none: mirrors how annotated
    // collections reuse the same annotation for the same name.
    std::vector<std::optional<std::string>> concept_of(keys);
    for (auto& c : concept_of) {
        if (rng.below(2)) c = "http://onto.example/#C" + std::to_string(rng.below(concepts));
    }
    auto param = [&](std::size_t k) {
        wsnet::Parameter p{"k" + std::to_string(k), concept_of[k]};
        // Occasionally annotate a name differently in one place.
        if (rng.below(8) == 0) p.concept_uri = "http://onto.example/#C" + std::to_string(rng.below(concepts));
        return p;
    };

    std::vector<wsnet::Service> svcs(services);
    for (std::size_t s = 0; s < services; ++s) svcs[s].name = "S" + std::to_string(s);
    for (std::size_t o = 0; o < ops; ++o) {
        wsnet::Operation op;
        // Names repeat across services now and then to exercise qualified ids.
        op.name = "op" + std::to_string(rng.below(ops + 2));
        auto& svc = svcs[rng.below(services)];
        bool clash = std::any_of(svc.operations.begin(), svc.operations.end(),
                                 [&](const wsnet::Operation& x) { return x.name == op.name; });
        if (clash) op.name += "_" + std::to_string(o);
        for (std::size_t k = 0; k < keys; ++k) {
            if (rng.below(3) == 0) op.inputs.push_back(param(k));
            if (rng.below(3) == 0) op.outputs.push_back(param(k));
        }
        svc.operations.push_back(std::move(op));
    }
    return wsnet::Corpus(std::move(svcs));
}

// Network definitions

/// Similarity straight from the definitions: equal names, or equal concepts
/// when both occurrences are annotated.
inline bool similar(const wsnet::Parameter& p, const wsnet::Parameter& q, wsnet::MatchMode mode) {
    if (mode == wsnet::MatchMode::Syntactic) return p.name == q.name;
    return p.concept_uri && q.concept_uri && *p.concept_uri == *q.concept_uri;
}

/// Label of the class a parameter occurrence belongs to. Unannotated
/// occurrences in semantic mode are singletons named as the library
/// documents them.
inline std::string class_label(const wsnet::Operation& op, const wsnet::Parameter& p, bool input, wsnet::MatchMode mode) {
    if (mode == wsnet::MatchMode::Syntactic) return p.name;
    if (p.concept_uri) return *p.concept_uri;
    return "unannotated:" + op.service + "/" + op.name + (input ? "/in/" : "/out/") + p.name;
}

struct LabelledGraph {
    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> edges;
};

inline LabelledGraph labelled(const Graph& g) {
    LabelledGraph lg;
    for (NodeId v = 0; v < g.node_count(); ++v) lg.nodes.insert(g.label(v));
    for (auto [u, v] : g.edges()) lg.edges.emplace(g.label(u), g.label(v));
    return lg;
}

inline LabelledGraph dependency(const wsnet::Corpus& corpus, wsnet::MatchMode mode) {
    LabelledGraph lg;
    for (const auto* op : corpus.operations()) {
        for (const auto& p : op->inputs) lg.nodes.insert(class_label(*op, p, true, mode));
        for (const auto& q : op->outputs) lg.nodes.insert(class_label(*op, q, false, mode));
        for (const auto& p : op->inputs)
            for (const auto& q : op->outputs) {
                auto a = class_label(*op, p, true, mode);
                auto b = class_label(*op, q, false, mode);
                if (a != b) lg.edges.emplace(a, b);
            }
    }
    return lg;
}

inline LabelledGraph interaction(const wsnet::Corpus& corpus, wsnet::MatchMode mode, bool full) {
    LabelledGraph lg;
    const auto& ops = corpus.operations();
    for (const auto* op : ops) lg.nodes.insert(op->id);
    for (const auto* i : ops)
        for (const auto* j : ops) {
            if (i == j || j->inputs.empty()) continue;
            std::size_t covered = 0;
            for (const auto& p : j->inputs) {
                bool hit = std::any_of(i->outputs.begin(), i->outputs.end(),
                                       [&](const wsnet::Parameter& q) { return similar(q, p, mode); });
                covered += hit ? 1 : 0;
            }
            bool edge = full ? covered == j->inputs.size() : covered > 0;
            if (edge) lg.edges.emplace(i->id, j->id);
        }
    return lg;
}

// Composition

/// Minimum number of layers needed to make `desired` known from `provided`,
/// by breadth-first search over knowledge states where one step fires any
/// non-empty subset of the currently firable operations. nullopt when the
/// request cannot be met. Keys are the class labels above.
inline std::optional<std::size_t> optimal_layers(const wsnet::Corpus& corpus, wsnet::MatchMode mode,
                                                 const std::set<std::string>& provided,
                                                 const std::set<std::string>& desired) {
    struct OpSets {
        std::set<std::string> in;
        std::set<std::string> out;
    };
    std::vector<OpSets> ops;
    for (const auto* op : corpus.operations()) {
        OpSets s;
        for (const auto& p : op->inputs) s.in.insert(class_label(*op, p, true, mode));
        for (const auto& q : op->outputs) s.out.insert(class_label(*op, q, false, mode));
        ops.push_back(std::move(s));
    }
    auto done = [&](const std::set<std::string>& known) {
        return std::includes(known.begin(), known.end(), desired.begin(), desired.end());
    };

    std::map<std::set<std::string>, std::size_t> depth{{provided, 0}};
    std::queue<std::set<std::string>> frontier;
    frontier.push(provided);
    while (!frontier.empty()) {
        auto known = frontier.front();
        frontier.pop();
        const auto d = depth.at(known);
        if (done(known)) return d;
        std::vector<std::size_t> firable;
        for (std::size_t i = 0; i < ops.size(); ++i) {
            if (std::includes(known.begin(), known.end(), ops[i].in.begin(), ops[i].in.end())) firable.push_back(i);
        }
        for (std::uint32_t mask = 1; mask < (1u << firable.size()); ++mask) {
            auto next = known;
            for (std::size_t b = 0; b < firable.size(); ++b) {
                if (mask & (1u << b)) next.insert(ops[firable[b]].out.begin(), ops[firable[b]].out.end());
            }
            if (depth.emplace(next, d + 1).second) frontier.push(std::move(next));
        }
    }
    return std::nullopt;
}

// Power laws

/// Exact inversion sampler for p(x) = x^-alpha / zeta(alpha, xmin): a
/// cumulative table over [xmin, xmin + table) and bisection on the Hurwitz
/// zeta survival function beyond it.
class PowerLawInversion {
public:
    PowerLawInversion(double alpha, std::uint64_t xmin, std::size_t table = 100000)
        : alpha_(alpha), xmin_(xmin), norm_(gsl_sf_hzeta(alpha, static_cast<double>(xmin))) {
        double acc = 0.0;
        cdf_.reserve(table);
        for (std::size_t i = 0; i < table; ++i) {
            acc += std::pow(static_cast<double>(xmin + i), -alpha) / norm_;
            cdf_.push_back(acc);
        }
    }

    std::uint64_t draw(double u) const {
        auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
        if (it != cdf_.end()) return xmin_ + static_cast<std::uint64_t>(it - cdf_.begin());
        // Smallest x with P(X > x) = zeta(alpha, x + 1) / norm <= 1 - u.
        std::uint64_t lo = xmin_ + cdf_.size();
        std::uint64_t hi = lo;
        while (survival(hi) > 1.0 - u) hi *= 2;
        while (lo < hi) {
            auto mid = lo + (hi - lo) / 2;
            if (survival(mid) > 1.0 - u) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        return lo;
    }

private:
    double survival(std::uint64_t x) const { return gsl_sf_hzeta(alpha_, static_cast<double>(x + 1)) / norm_; }

    double alpha_;
    std::uint64_t xmin_;
    double norm_;
    std::vector<double> cdf_;
};

/// P(X = k) = (1 - q)^(k - 1) q for k >= 1, by inversion.
inline std::uint64_t geometric_draw(double u, double q) {
    return 1 + static_cast<std::uint64_t>(std::floor(std::log1p(-u) / std::log1p(-q)));
}

}  // namespace oracle
