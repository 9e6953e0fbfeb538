#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wsnet {

/// A WSDL message part: its name and, when semantically annotated, the
/// ontology concept URI attached to it.
struct Parameter {
    std::string name;
    std::optional<std::string> concept_uri;

    friend bool operator==(const Parameter&, const Parameter&) = default;
};

/// One service operation with its input set I and output set O.
///
/// `id` is assigned by Corpus: the bare operation name when that name is
/// unique across the corpus, otherwise "service/name".
struct Operation {
    std::string id;
    std::string service;
    std::string name;
    std::vector<Parameter> inputs;
    std::vector<Parameter> outputs;

    /// "service/name", unique whatever `id` ended up being.
    std::string qualified_name() const { return service + "/" + name; }

    friend bool operator==(const Operation&, const Operation&) = default;
};

struct Service {
    std::string name;
    std::vector<Operation> operations;

    friend bool operator==(const Service&, const Service&) = default;
};

class CorpusError : public std::runtime_error {
public:
    explicit CorpusError(const std::string& what, std::size_t line = 0);

    /// 1-based line of the offending WSC input, 0 when not from a parse.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An immutable, validated collection of services.
///
/// Construction deduplicates parameters by (name, concept), checks name
/// validity and uniqueness, and assigns operation ids.
class Corpus {
public:
    Corpus() = default;
    explicit Corpus(std::vector<Service> services);

    Corpus(const Corpus& other) : services_(other.services_) { reindex(); }
    Corpus(Corpus&&) noexcept = default;
    Corpus& operator=(const Corpus& other) {
        if (this != &other) {
            services_ = other.services_;
            reindex();
        }
        return *this;
    }
    Corpus& operator=(Corpus&&) noexcept = default;

    const std::vector<Service>& services() const noexcept { return services_; }

    /// Operations in corpus order (services in order, then their operations).
    const std::vector<const Operation*>& operations() const noexcept { return operations_; }

    std::size_t operation_count() const noexcept { return operations_.size(); }
    const Operation* find_operation(std::string_view id) const;

    friend bool operator==(const Corpus& a, const Corpus& b) { return a.services_ == b.services_; }

private:
    void reindex();

    std::vector<Service> services_;
    std::vector<const Operation*> operations_;
};

/// Parses the line-oriented WSC corpus format:
///
///     # comment
///     SVC <service>
///     OP <operation>
///     IN <name>[|<concept-uri>]
///     OUT <name>[|<concept-uri>]
///
/// Throws CorpusError carrying the line number on any violation.
Corpus parse_wsc(std::istream& in);
Corpus parse_wsc(std::string_view text);

/// Canonical WSC text; parse_wsc(serialize_wsc(c)) == c.
std::string serialize_wsc(const Corpus& corpus);

struct CorpusStats {
    std::size_t services = 0;
    std::size_t operations = 0;
    std::size_t distinct_names = 0;
    std::size_t distinct_concepts = 0;
    /// parameter occurrences carrying a concept / all parameter occurrences
    double annotated_fraction = 0.0;
};

CorpusStats corpus_stats(const Corpus& corpus);

/// Validates a token usable as a service, operation or parameter name in
/// the WSC format: non-empty, no whitespace, no control characters.
bool is_valid_name(std::string_view name) noexcept;

}  // namespace wsnet
