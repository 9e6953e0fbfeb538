#include "wsnet/corpus.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace wsnet {

CorpusError::CorpusError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

bool is_valid_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    return std::none_of(name.begin(), name.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return u < 0x20 || u == 0x7f || c == ' ';
    });
}

namespace {

bool is_valid_parameter(const Parameter& p) {
    if (!is_valid_name(p.name) || p.name.find('|') != std::string::npos) return false;
    if (p.concept_uri && !is_valid_name(*p.concept_uri)) return false;
    return true;
}

void dedup_parameters(std::vector<Parameter>& params) {
    std::vector<Parameter> kept;
    kept.reserve(params.size());
    for (auto& p : params) {
        if (std::find(kept.begin(), kept.end(), p) == kept.end()) kept.push_back(std::move(p));
    }
    params = std::move(kept);
}

}  // namespace

Corpus::Corpus(std::vector<Service> services) : services_(std::move(services)) {
    std::unordered_set<std::string> service_names;
    std::unordered_map<std::string, std::size_t> name_uses;

    for (auto& svc : services_) {
        if (!is_valid_name(svc.name)) throw CorpusError("invalid service name '" + svc.name + "'");
        if (!service_names.insert(svc.name).second)
            throw CorpusError("duplicate service '" + svc.name + "'");

        std::unordered_set<std::string> op_names;
        for (auto& op : svc.operations) {
            if (!is_valid_name(op.name)) throw CorpusError("invalid operation name '" + op.name + "'");
            if (!op_names.insert(op.name).second)
                throw CorpusError("duplicate operation id '" + svc.name + "/" + op.name + "'");
            op.service = svc.name;
            for (auto* side : {&op.inputs, &op.outputs}) {
                for (const auto& p : *side) {
                    if (!is_valid_parameter(p))
                        throw CorpusError("invalid parameter '" + p.name + "' in " + svc.name + "/" + op.name);
                }
                dedup_parameters(*side);
            }
            ++name_uses[op.name];
        }
    }

    std::unordered_set<std::string> ids;
    for (auto& svc : services_) {
        for (auto& op : svc.operations) {
            op.id = name_uses[op.name] == 1 ? op.name : op.qualified_name();
            if (!ids.insert(op.id).second) throw CorpusError("operation id '" + op.id + "' is ambiguous");
        }
    }
    reindex();
}

void Corpus::reindex() {
    operations_.clear();
    for (const auto& svc : services_) {
        for (const auto& op : svc.operations) operations_.push_back(&op);
    }
}

const Operation* Corpus::find_operation(std::string_view id) const {
    auto it = std::find_if(operations_.begin(), operations_.end(),
                           [&](const Operation* op) { return op->id == id; });
    return it == operations_.end() ? nullptr : *it;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

Parameter parse_parameter_token(std::string_view token, std::size_t line) {
    Parameter p;
    auto bar = token.find('|');
    p.name = std::string(token.substr(0, bar));
    if (bar != std::string_view::npos) {
        p.concept_uri = std::string(token.substr(bar + 1));
        if (p.concept_uri->empty()) throw CorpusError("empty concept URI", line);
    }
    if (!is_valid_parameter(p)) throw CorpusError("invalid parameter token '" + std::string(token) + "'", line);
    return p;
}

}  // namespace

Corpus parse_wsc(std::istream& in) {
    std::vector<Service> services;
    std::unordered_set<std::string> service_names;
    std::unordered_set<std::string> op_names;  // within the current service
    std::string raw;
    std::size_t line_no = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2)
            throw CorpusError("expected '<directive> <argument>', got " + std::to_string(tokens.size()) + " tokens",
                              line_no);

        auto directive = tokens[0];
        auto arg = tokens[1];
        if (directive == "SVC") {
            std::string name(arg);
            if (!service_names.insert(name).second) throw CorpusError("duplicate service '" + name + "'", line_no);
            services.push_back(Service{name, {}});
            op_names.clear();
        } else if (directive == "OP") {
            if (services.empty()) throw CorpusError("OP outside a service", line_no);
            std::string name(arg);
            if (!op_names.insert(name).second)
                throw CorpusError("duplicate operation id '" + services.back().name + "/" + name + "'", line_no);
            Operation op;
            op.name = std::move(name);
            op.service = services.back().name;
            services.back().operations.push_back(std::move(op));
        } else if (directive == "IN" || directive == "OUT") {
            if (services.empty() || services.back().operations.empty())
                throw CorpusError("parameter line outside an operation", line_no);
            auto& op = services.back().operations.back();
            auto& side = directive == "IN" ? op.inputs : op.outputs;
            side.push_back(parse_parameter_token(arg, line_no));
        } else {
            throw CorpusError("unknown directive '" + std::string(directive) + "'", line_no);
        }
    }
    return Corpus(std::move(services));
}

Corpus parse_wsc(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_wsc(in);
}

std::string serialize_wsc(const Corpus& corpus) {
    std::string out;
    auto put_param = [&out](std::string_view directive, const Parameter& p) {
        out.append(directive).append(" ").append(p.name);
        if (p.concept_uri) out.append("|").append(*p.concept_uri);
        out.push_back('\n');
    };
    for (const auto& svc : corpus.services()) {
        out.append("SVC ").append(svc.name).push_back('\n');
        for (const auto& op : svc.operations) {
            out.append("OP ").append(op.name).push_back('\n');
            for (const auto& p : op.inputs) put_param("IN", p);
            for (const auto& p : op.outputs) put_param("OUT", p);
        }
    }
    return out;
}

CorpusStats corpus_stats(const Corpus& corpus) {
    CorpusStats stats;
    std::set<std::string_view> names;
    std::set<std::string_view> concepts;
    std::size_t occurrences = 0;
    std::size_t annotated = 0;

    stats.services = corpus.services().size();
    stats.operations = corpus.operation_count();
    for (const auto* op : corpus.operations()) {
        for (const auto* side : {&op->inputs, &op->outputs}) {
            for (const auto& p : *side) {
                ++occurrences;
                names.insert(p.name);
                if (p.concept_uri) {
                    ++annotated;
                    concepts.insert(*p.concept_uri);
                }
            }
        }
    }
    stats.distinct_names = names.size();
    stats.distinct_concepts = concepts.size();
    stats.annotated_fraction = occurrences ? static_cast<double>(annotated) / static_cast<double>(occurrences) : 0.0;
    return stats;
}

}  // namespace wsnet
