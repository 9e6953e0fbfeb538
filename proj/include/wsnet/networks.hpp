#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "wsnet/corpus.hpp"
#include "wsnet/graph.hpp"
#include "wsnet/matching.hpp"

namespace wsnet {

struct DependencyDiagnostics {
    /// Input/output pairs of one operation that collapsed to the same key.
    std::size_t dropped_self_loops = 0;
};

/// Parameters as nodes (one per distinct match key, labelled by the key);
/// an edge p->q whenever some operation takes p as input and yields q.
struct DependencyNetwork {
    MatchMode mode = MatchMode::Syntactic;
    Graph graph;
    /// Edge -> ids of the operations that induced it.
    std::map<std::pair<NodeId, NodeId>, std::set<std::string>> provenance;
    DependencyDiagnostics diagnostics;
};

DependencyNetwork build_dependency(const Corpus& corpus, const Matcher& matcher);
DependencyNetwork build_dependency(const Corpus& corpus, MatchMode mode);

enum class InteractionMode { Full, Partial };

std::string_view to_string(InteractionMode mode) noexcept;
InteractionMode parse_interaction_mode(std::string_view text);

/// Operations as nodes (one per operation, labelled by its id, in corpus
/// order). Full: i->j iff every input of j is matched by an output of i.
/// Partial: i->j iff at least one is. Operations without inputs receive no
/// edges in either mode.
struct InteractionNetwork {
    MatchMode matching = MatchMode::Syntactic;
    InteractionMode mode = InteractionMode::Full;
    Graph graph;
};

InteractionNetwork build_interaction(const Corpus& corpus, const Matcher& matcher, InteractionMode mode);
InteractionNetwork build_interaction(const Corpus& corpus, MatchMode matching, InteractionMode mode);

/// "src<TAB>dst<TAB>opId" per (edge, operation), sorted.
void write_provenance(const DependencyNetwork& net, std::ostream& os);

}  // namespace wsnet
