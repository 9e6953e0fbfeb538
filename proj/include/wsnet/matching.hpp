#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "wsnet/corpus.hpp"

namespace wsnet {

/// Syntactic = equal matching on parameter names; Semantic = exact matching
/// on annotated concept URIs.
enum class MatchMode { Syntactic, Semantic };

std::string_view to_string(MatchMode mode) noexcept;
/// Accepts "syntactic" / "semantic"; throws std::invalid_argument otherwise.
MatchMode parse_match_mode(std::string_view text);

enum class Side { Input, Output };

/// Where a parameter occurrence lives. Only semantic keys of unannotated
/// parameters depend on it.
struct ParamContext {
    std::string_view service;
    std::string_view operation;
    Side side = Side::Input;

    static ParamContext of(const Operation& op, Side side) { return {op.service, op.name, side}; }
};

/// Equivalence-class identity of a parameter under a matching mode.
struct MatchKey {
    MatchMode mode = MatchMode::Syntactic;
    std::string key;

    friend bool operator==(const MatchKey&, const MatchKey&) = default;
    friend auto operator<=>(const MatchKey&, const MatchKey&) = default;
};

struct MatchKeyHash {
    std::size_t operator()(const MatchKey& k) const noexcept {
        return std::hash<std::string>{}(k.key) * 2 + static_cast<std::size_t>(k.mode);
    }
};

/// Prefix of the per-occurrence keys given to unannotated parameters in
/// semantic mode; such keys never equal any other key.
inline constexpr std::string_view kUnannotatedPrefix = "unannotated:";

/// Syntactic: the name byte-for-byte. Semantic: the concept URI verbatim, or
/// "unannotated:<service>/<operation>/<in|out>/<name>" when there is none.
MatchKey match_key(const Parameter& p, MatchMode mode, const ParamContext& context);

bool similar(const Parameter& p, const ParamContext& pc, const Parameter& q, const ParamContext& qc, MatchMode mode);

/// Strategy seam for network extraction and composition search. A matcher
/// maps each parameter occurrence to the key of its similarity class; two
/// occurrences are similar iff their keys are equal.
class Matcher {
public:
    virtual ~Matcher() = default;
    virtual MatchMode mode() const noexcept = 0;
    virtual MatchKey key(const Parameter& p, const ParamContext& context) const = 0;
};

/// The two strict matchers: equal (syntactic) and exact (semantic).
class StrictMatcher final : public Matcher {
public:
    explicit StrictMatcher(MatchMode mode) : mode_(mode) {}
    MatchMode mode() const noexcept override { return mode_; }
    MatchKey key(const Parameter& p, const ParamContext& context) const override {
        return match_key(p, mode_, context);
    }

private:
    MatchMode mode_;
};

}  // namespace wsnet
