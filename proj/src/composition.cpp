#include "wsnet/composition.hpp"

#include <algorithm>
#include <unordered_map>

namespace wsnet {

namespace {

struct OpKeys {
    const Operation* op;
    std::vector<MatchKey> inputs;
    std::vector<MatchKey> outputs;
};

std::vector<OpKeys> key_operations(const Corpus& corpus, const Matcher& matcher) {
    std::vector<OpKeys> result;
    result.reserve(corpus.operation_count());
    for (const auto* op : corpus.operations()) {
        OpKeys k{op, {}, {}};
        for (const auto& p : op->inputs) k.inputs.push_back(matcher.key(p, ParamContext::of(*op, Side::Input)));
        for (const auto& p : op->outputs) k.outputs.push_back(matcher.key(p, ParamContext::of(*op, Side::Output)));
        result.push_back(std::move(k));
    }
    return result;
}

bool covers(const std::set<MatchKey>& known, const std::vector<MatchKey>& keys) {
    return std::all_of(keys.begin(), keys.end(), [&](const MatchKey& k) { return known.contains(k); });
}

bool covers(const std::set<MatchKey>& known, const std::set<MatchKey>& keys) {
    return std::includes(known.begin(), known.end(), keys.begin(), keys.end());
}

void check_mode(const Request& request, const Matcher& matcher) {
    if (request.mode != matcher.mode()) throw PlanError("request and matcher use different matching modes");
}

}  // namespace

Request make_request(MatchMode mode, const std::vector<std::string>& provided, const std::vector<std::string>& desired) {
    if (desired.empty()) throw PlanError("request has no desired outputs");
    Request r;
    r.mode = mode;
    for (const auto& s : provided) r.provided.insert(MatchKey{mode, s});
    for (const auto& s : desired) r.desired.insert(MatchKey{mode, s});
    return r;
}

Plan forward_chain(const Corpus& corpus, const Request& request, const Matcher& matcher) {
    check_mode(request, matcher);
    auto ops = key_operations(corpus, matcher);
    std::vector<bool> used(ops.size(), false);

    Plan plan;
    plan.known_at_end = request.provided;
    auto& known = plan.known_at_end;
    while (!covers(known, request.desired)) {
        std::vector<std::size_t> layer;
        for (std::size_t i = 0; i < ops.size(); ++i) {
            if (!used[i] && covers(known, ops[i].inputs)) layer.push_back(i);
        }
        if (layer.empty()) break;

        std::vector<std::string> ids;
        for (auto i : layer) {
            used[i] = true;
            known.insert(ops[i].outputs.begin(), ops[i].outputs.end());
            ids.push_back(ops[i].op->id);
        }
        std::sort(ids.begin(), ids.end());
        plan.layers.push_back(std::move(ids));
    }
    plan.satisfied = covers(known, request.desired);
    return plan;
}

Plan forward_chain(const Corpus& corpus, const Request& request) {
    return forward_chain(corpus, request, StrictMatcher(request.mode));
}

Plan prune_plan(const Corpus& corpus, const Plan& plan, const Request& request, const Matcher& matcher) {
    check_mode(request, matcher);
    if (!plan.satisfied) throw PlanError("prune_plan: plan does not satisfy the request");

    auto ops = key_operations(corpus, matcher);
    std::unordered_map<std::string_view, const OpKeys*> by_id;
    for (const auto& k : ops) by_id.emplace(k.op->id, &k);

    std::set<MatchKey> demand;
    for (const auto& k : request.desired) {
        if (!request.provided.contains(k)) demand.insert(k);
    }

    std::vector<std::vector<std::string>> kept(plan.layers.size());
    for (std::size_t t = plan.layers.size(); t-- > 0;) {
        // Decide the whole layer against the demand from later layers only:
        // operations in one layer cannot feed each other.
        std::vector<const OpKeys*> chosen;
        for (const auto& id : plan.layers[t]) {
            auto it = by_id.find(id);
            if (it == by_id.end()) throw PlanError("prune_plan: unknown operation '" + id + "'");
            const auto& outs = it->second->outputs;
            if (std::any_of(outs.begin(), outs.end(), [&](const MatchKey& k) { return demand.contains(k); }))
                chosen.push_back(it->second);
        }
        for (const auto* k : chosen) {
            kept[t].push_back(k->op->id);
            for (const auto& in : k->inputs) {
                if (!request.provided.contains(in)) demand.insert(in);
            }
        }
    }

    Plan pruned;
    pruned.satisfied = true;
    pruned.known_at_end = request.provided;
    for (auto& layer : kept) {
        if (layer.empty()) continue;
        for (const auto& id : layer) {
            const auto& outs = by_id.at(id)->outputs;
            pruned.known_at_end.insert(outs.begin(), outs.end());
        }
        pruned.layers.push_back(std::move(layer));
    }
    return pruned;
}

Plan prune_plan(const Corpus& corpus, const Plan& plan, const Request& request) {
    return prune_plan(corpus, plan, request, StrictMatcher(request.mode));
}

bool replay_plan(const Corpus& corpus, const Plan& plan, const Request& request, const Matcher& matcher) {
    auto ops = key_operations(corpus, matcher);
    std::unordered_map<std::string_view, const OpKeys*> by_id;
    for (const auto& k : ops) by_id.emplace(k.op->id, &k);

    std::set<MatchKey> known = request.provided;
    std::set<std::string_view> seen;
    for (const auto& layer : plan.layers) {
        std::set<MatchKey> produced;
        for (const auto& id : layer) {
            auto it = by_id.find(id);
            if (it == by_id.end() || !seen.insert(id).second) return false;
            if (!covers(known, it->second->inputs)) return false;
            produced.insert(it->second->outputs.begin(), it->second->outputs.end());
        }
        known.insert(produced.begin(), produced.end());
    }
    return covers(known, request.desired);
}

bool replay_plan(const Corpus& corpus, const Plan& plan, const Request& request) {
    return replay_plan(corpus, plan, request, StrictMatcher(request.mode));
}

}  // namespace wsnet
