#include "wsnet/networks.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace wsnet {

std::string_view to_string(InteractionMode mode) noexcept { return mode == InteractionMode::Full ? "full" : "partial"; }

InteractionMode parse_interaction_mode(std::string_view text) {
    if (text == "full") return InteractionMode::Full;
    if (text == "partial") return InteractionMode::Partial;
    throw std::invalid_argument("unknown interaction mode '" + std::string(text) + "'");
}

DependencyNetwork build_dependency(const Corpus& corpus, const Matcher& matcher) {
    DependencyNetwork net;
    net.mode = matcher.mode();
    for (const auto* op : corpus.operations()) {
        std::vector<NodeId> ins;
        std::vector<NodeId> outs;
        for (const auto& p : op->inputs) ins.push_back(net.graph.add_node(matcher.key(p, ParamContext::of(*op, Side::Input)).key));
        for (const auto& p : op->outputs)
            outs.push_back(net.graph.add_node(matcher.key(p, ParamContext::of(*op, Side::Output)).key));
        for (auto u : ins) {
            for (auto v : outs) {
                if (u == v) {
                    ++net.diagnostics.dropped_self_loops;
                    continue;
                }
                net.graph.add_edge(u, v);
                net.provenance[{u, v}].insert(op->id);
            }
        }
    }
    return net;
}

DependencyNetwork build_dependency(const Corpus& corpus, MatchMode mode) {
    return build_dependency(corpus, StrictMatcher(mode));
}

InteractionNetwork build_interaction(const Corpus& corpus, const Matcher& matcher, InteractionMode mode) {
    InteractionNetwork net;
    net.matching = matcher.mode();
    net.mode = mode;

    const auto& ops = corpus.operations();
    const auto n = ops.size();
    std::vector<std::vector<std::string>> input_keys(n);
    std::unordered_map<std::string, std::vector<NodeId>> producers;  // key -> operations yielding it

    for (std::size_t i = 0; i < n; ++i) {
        net.graph.add_node(ops[i]->id);
        for (const auto& p : ops[i]->inputs)
            input_keys[i].push_back(matcher.key(p, ParamContext::of(*ops[i], Side::Input)).key);
        std::sort(input_keys[i].begin(), input_keys[i].end());
        input_keys[i].erase(std::unique(input_keys[i].begin(), input_keys[i].end()), input_keys[i].end());

        std::vector<std::string> outs;
        for (const auto& p : ops[i]->outputs) outs.push_back(matcher.key(p, ParamContext::of(*ops[i], Side::Output)).key);
        std::sort(outs.begin(), outs.end());
        outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
        for (auto& k : outs) producers[k].push_back(static_cast<NodeId>(i));
    }

    for (std::size_t j = 0; j < n; ++j) {
        const auto& needed = input_keys[j];
        if (needed.empty()) continue;
        std::map<NodeId, std::size_t> hits;  // producer -> number of j's inputs it covers
        for (const auto& k : needed) {
            auto it = producers.find(k);
            if (it == producers.end()) continue;
            for (auto i : it->second) ++hits[i];
        }
        for (const auto& [i, count] : hits) {
            if (i == j) continue;
            if (mode == InteractionMode::Partial || count == needed.size())
                net.graph.add_edge(i, static_cast<NodeId>(j));
        }
    }
    return net;
}

InteractionNetwork build_interaction(const Corpus& corpus, MatchMode matching, InteractionMode mode) {
    return build_interaction(corpus, StrictMatcher(matching), mode);
}

void write_provenance(const DependencyNetwork& net, std::ostream& os) {
    const auto& g = net.graph;
    std::vector<std::tuple<std::string_view, std::string_view, std::string_view>> rows;
    for (const auto& [edge, ops] : net.provenance) {
        for (const auto& op : ops) rows.emplace_back(g.label(edge.first), g.label(edge.second), op);
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [src, dst, op] : rows) os << src << '\t' << dst << '\t' << op << '\n';
}

}  // namespace wsnet
