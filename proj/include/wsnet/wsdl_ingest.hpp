#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wsnet/corpus.hpp"

namespace wsnet {

inline constexpr std::string_view kWsdlNamespace = "http://schemas.xmlsoap.org/wsdl/";
inline constexpr std::string_view kSawsdlNamespace = "http://www.w3.org/ns/sawsdl";
inline constexpr std::string_view kXsdNamespace = "http://www.w3.org/2001/XMLSchema";

class WsdlError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IngestNote {
    std::string file;
    std::string message;

    friend bool operator==(const IngestNote&, const IngestNote&) = default;
};

struct IngestReport {
    std::size_t files_read = 0;
    std::size_t services = 0;
    std::size_t operations = 0;
    /// Files that produced no service, with the reason.
    std::vector<IngestNote> skipped;
    /// Non-fatal observations: skipped operations, extra modelReference URIs,
    /// renamed services, missing portType.
    std::vector<IngestNote> notes;
};

/// Loads the text of an imported document given its location attribute, or
/// nullopt when it cannot be resolved.
using ImportResolver = std::function<std::optional<std::string>(std::string_view location)>;

struct IngestedService {
    Service service;
    std::vector<std::string> notes;
};

/// Reads one WSDL 1.1 document (optionally SAWSDL-annotated) into a Service.
///
/// Each portType operation becomes an Operation whose inputs/outputs are the
/// parts of its input/output messages. A part's concept is the first
/// sawsdl:modelReference URI on the part itself, else on the schema element
/// or type it references (following an element's own type attribute once).
///
/// Throws WsdlError for malformed XML or a non-WSDL root element.
IngestedService ingest_wsdl(std::string_view document, std::string_view origin, const ImportResolver& resolver = {});

struct IngestResult {
    Corpus corpus;
    IngestReport report;
};

/// Ingests every regular file in `dir` whose name matches the glob
/// `pattern`, in lexicographic filename order. Per-file failures become
/// `skipped` entries. Imports resolve to files in the same directory only.
IngestResult ingest_directory(const std::filesystem::path& dir, std::string_view pattern = "*.wsdl");

}  // namespace wsnet
