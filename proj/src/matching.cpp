#include "wsnet/matching.hpp"

#include <stdexcept>

namespace wsnet {

std::string_view to_string(MatchMode mode) noexcept {
    return mode == MatchMode::Syntactic ? "syntactic" : "semantic";
}

MatchMode parse_match_mode(std::string_view text) {
    if (text == "syntactic") return MatchMode::Syntactic;
    if (text == "semantic") return MatchMode::Semantic;
    throw std::invalid_argument("unknown matching mode '" + std::string(text) + "'");
}

MatchKey match_key(const Parameter& p, MatchMode mode, const ParamContext& context) {
    if (mode == MatchMode::Syntactic) return {mode, p.name};
    if (p.concept_uri) return {mode, *p.concept_uri};

    std::string sentinel(kUnannotatedPrefix);
    sentinel.append(context.service).append("/").append(context.operation);
    sentinel.append(context.side == Side::Input ? "/in/" : "/out/").append(p.name);
    return {mode, std::move(sentinel)};
}

bool similar(const Parameter& p, const ParamContext& pc, const Parameter& q, const ParamContext& qc, MatchMode mode) {
    return match_key(p, mode, pc) == match_key(q, mode, qc);
}

}  // namespace wsnet
