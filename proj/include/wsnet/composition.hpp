#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsnet/corpus.hpp"
#include "wsnet/matching.hpp"

namespace wsnet {

class PlanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A client request: keys the client can supply and keys it wants back.
struct Request {
    std::set<MatchKey> provided;
    std::set<MatchKey> desired;
    MatchMode mode = MatchMode::Syntactic;
};

/// Builds a request from plain names (syntactic) or concept URIs (semantic).
/// Throws PlanError if `desired` is empty.
Request make_request(MatchMode mode, const std::vector<std::string>& provided, const std::vector<std::string>& desired);

/// Layered composition: all operations of a layer can run in parallel once
/// the previous layers have run. Layers hold operation ids, sorted.
struct Plan {
    std::vector<std::vector<std::string>> layers;
    bool satisfied = false;
    std::set<MatchKey> known_at_end;

    friend bool operator==(const Plan&, const Plan&) = default;
};

/// Forward chaining: every layer fires all not-yet-used operations whose
/// inputs are all known, until the desired keys are known (satisfied) or
/// nothing more can fire. The layer count is minimal.
Plan forward_chain(const Corpus& corpus, const Request& request, const Matcher& matcher);
Plan forward_chain(const Corpus& corpus, const Request& request);

/// Backward relevance sweep: from the last layer down, keeps an operation
/// only if it yields a key still in demand (initially desired keys not
/// already provided), then demands its inputs. Empty layers are dropped.
/// Throws PlanError on an unsatisfied plan or an unknown operation id.
Plan prune_plan(const Corpus& corpus, const Plan& plan, const Request& request, const Matcher& matcher);
Plan prune_plan(const Corpus& corpus, const Plan& plan, const Request& request);

/// Replays `plan` from the provided keys: true iff every operation's inputs
/// are known before its layer and the desired keys are known at the end.
bool replay_plan(const Corpus& corpus, const Plan& plan, const Request& request, const Matcher& matcher);
bool replay_plan(const Corpus& corpus, const Plan& plan, const Request& request);

}  // namespace wsnet
