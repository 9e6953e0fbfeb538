#include "wsnet/wsdl_ingest.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_set>

#include "xml_tree.hpp"

namespace wsnet {

namespace {

using xml::Element;

std::string sanitize(std::string_view raw) {
    std::string s(raw);
    for (auto& c : s) {
        auto u = static_cast<unsigned char>(c);
        if (u <= 0x20 || u == 0x7f || c == '|') c = '_';
    }
    return s;
}

std::vector<std::string> split_uri_list(std::string_view list) {
    std::vector<std::string> out;
    std::istringstream in{std::string(list)};
    std::string uri;
    while (in >> uri) out.push_back(uri);
    return out;
}

// Global declarations visible to one WSDL document, including those pulled in
// through imports.
struct Declarations {
    std::map<std::string, const Element*> messages;
    std::map<std::string, const Element*> elements;
    std::map<std::string, const Element*> types;
};

class Collector {
public:
    Collector(const ImportResolver& resolver, std::vector<std::string>& notes) : resolver_(resolver), notes_(notes) {}

    void collect(const Element& root) {
        for (const auto& child : root.children) {
            if (child->is(kWsdlNamespace, "message")) {
                if (const auto* name = child->attribute("name")) decls.messages.emplace(*name, child.get());
            } else if (child->is(kWsdlNamespace, "import")) {
                follow(child->attribute("location"));
            } else if (child->is(kWsdlNamespace, "types")) {
                for (const auto& schema : child->children) {
                    if (schema->is(kXsdNamespace, "schema")) collect_schema(*schema);
                }
            } else if (child->is(kXsdNamespace, "schema")) {
                collect_schema(*child);
            }
        }
        if (root.is(kXsdNamespace, "schema")) collect_schema(root);
    }

    Declarations decls;

private:
    void collect_schema(const Element& schema) {
        for (const auto& child : schema.children) {
            const auto* name = child->attribute("name");
            if (child->is(kXsdNamespace, "element") && name) {
                decls.elements.emplace(*name, child.get());
            } else if ((child->is(kXsdNamespace, "complexType") || child->is(kXsdNamespace, "simpleType")) && name) {
                decls.types.emplace(*name, child.get());
            } else if (child->is(kXsdNamespace, "import") || child->is(kXsdNamespace, "include")) {
                follow(child->attribute("schemaLocation"));
            }
        }
    }

    void follow(const std::string* location) {
        if (!location || !resolver_ || !visited_.insert(*location).second) return;
        auto text = resolver_(*location);
        if (!text) {
            notes_.push_back("unresolved import '" + *location + "'");
            return;
        }
        try {
            imported_.push_back(xml::parse(*text));
            collect(*imported_.back());
        } catch (const xml::ParseError& e) {
            notes_.push_back("import '" + *location + "' ignored: " + e.what());
        }
    }

    const ImportResolver& resolver_;
    std::vector<std::string>& notes_;
    std::set<std::string> visited_;
    std::vector<std::unique_ptr<Element>> imported_;
};

class ConceptFinder {
public:
    ConceptFinder(const Declarations& decls, std::vector<std::string>& notes) : decls_(decls), notes_(notes) {}

    std::optional<std::string> for_part(const Element& part, std::string_view where) const {
        if (auto c = annotation(part, where)) return c;
        if (const auto* el = part.attribute("element")) {
            auto it = decls_.elements.find(part.resolve(*el).local);
            if (it != decls_.elements.end()) {
                if (auto c = annotation(*it->second, where)) return c;
                if (const auto* type = it->second->attribute("type")) return type_annotation(*it->second, *type, where);
            }
        }
        if (const auto* type = part.attribute("type")) return type_annotation(part, *type, where);
        return std::nullopt;
    }

private:
    std::optional<std::string> type_annotation(const Element& from, const std::string& type,
                                               std::string_view where) const {
        auto it = decls_.types.find(from.resolve(type).local);
        if (it == decls_.types.end()) return std::nullopt;
        return annotation(*it->second, where);
    }

    std::optional<std::string> annotation(const Element& el, std::string_view where) const {
        const auto* refs = el.attribute(kSawsdlNamespace, "modelReference");
        if (!refs) return std::nullopt;
        auto uris = split_uri_list(*refs);
        if (uris.empty()) return std::nullopt;
        for (std::size_t i = 1; i < uris.size(); ++i)
            notes_.push_back(std::string(where) + ": extra modelReference '" + uris[i] + "' ignored");
        return uris.front();
    }

    const Declarations& decls_;
    std::vector<std::string>& notes_;
};

// nullopt when the message is referenced but not declared.
std::optional<std::vector<Parameter>> message_parameters(const Element& io, const Declarations& decls,
                                                        const ConceptFinder& concepts, std::string_view op_name,
                                                        std::vector<std::string>& notes) {
    const auto* ref = io.attribute("message");
    if (!ref) return std::vector<Parameter>{};
    auto it = decls.messages.find(io.resolve(*ref).local);
    if (it == decls.messages.end()) return std::nullopt;

    std::vector<Parameter> params;
    for (const auto& part : it->second->children) {
        if (!part->is(kWsdlNamespace, "part")) continue;
        const auto* name = part->attribute("name");
        if (!name || name->empty()) {
            notes.push_back(std::string(op_name) + ": unnamed part in message '" + *ref + "' ignored");
            continue;
        }
        std::string where = std::string(op_name) + "/" + *name;
        params.push_back(Parameter{sanitize(*name), concepts.for_part(*part, where)});
    }
    return params;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw WsdlError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

IngestedService ingest_wsdl(std::string_view document, std::string_view origin, const ImportResolver& resolver) {
    std::unique_ptr<Element> root;
    try {
        root = xml::parse(document);
    } catch (const xml::ParseError& e) {
        throw WsdlError(std::string(origin) + ": " + e.what());
    }
    if (!root->is(kWsdlNamespace, "definitions"))
        throw WsdlError(std::string(origin) + ": root element is not wsdl:definitions");

    IngestedService result;
    auto& notes = result.notes;
    Collector collector(resolver, notes);
    collector.collect(*root);
    ConceptFinder concepts(collector.decls, notes);

    const auto* def_name = root->attribute("name");
    result.service.name = sanitize(def_name && !def_name->empty() ? *def_name
                                                                   : std::filesystem::path(origin).stem().string());
    if (result.service.name.empty()) result.service.name = "unnamed";

    std::unordered_set<std::string> seen_ops;
    bool has_port_type = false;
    for (const auto& pt : root->children) {
        if (!pt->is(kWsdlNamespace, "portType")) continue;
        has_port_type = true;
        for (const auto& op_el : pt->children) {
            if (!op_el->is(kWsdlNamespace, "operation")) continue;
            const auto* op_name = op_el->attribute("name");
            if (!op_name || op_name->empty()) {
                notes.push_back("unnamed operation skipped");
                continue;
            }
            std::string name = sanitize(*op_name);
            if (seen_ops.contains(name)) {
                notes.push_back("operation '" + name + "' repeated in another portType; first kept");
                continue;
            }

            Operation op;
            op.name = name;
            op.service = result.service.name;
            bool ok = true;
            for (const auto& io : op_el->children) {
                bool is_in = io->is(kWsdlNamespace, "input");
                if (!is_in && !io->is(kWsdlNamespace, "output")) continue;
                auto params = message_parameters(*io, collector.decls, concepts, name, notes);
                if (!params) {
                    notes.push_back("operation '" + name + "' skipped: undeclared message '" +
                                    *io->attribute("message") + "'");
                    ok = false;
                    break;
                }
                auto& side = is_in ? op.inputs : op.outputs;
                side.insert(side.end(), params->begin(), params->end());
            }
            if (!ok) continue;
            seen_ops.insert(name);
            result.service.operations.push_back(std::move(op));
        }
    }
    if (!has_port_type) notes.push_back("no portType; empty service");
    return result;
}

IngestResult ingest_directory(const std::filesystem::path& dir, std::string_view pattern) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw WsdlError("not a readable directory: " + dir.string());

    std::vector<fs::path> files;
    std::string pat(pattern);
    for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
        if (!it->is_regular_file()) continue;
        auto fname = it->path().filename().string();
        if (fnmatch(pat.c_str(), fname.c_str(), 0) == 0) files.push_back(it->path());
    }
    if (ec) throw WsdlError("cannot list " + dir.string() + ": " + ec.message());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });

    ImportResolver resolver = [&dir](std::string_view location) -> std::optional<std::string> {
        auto candidate = dir / fs::path(std::string(location)).filename();
        std::error_code e;
        if (!fs::is_regular_file(candidate, e)) return std::nullopt;
        try {
            return read_file(candidate);
        } catch (const WsdlError&) {
            return std::nullopt;
        }
    };

    IngestResult result;
    auto& report = result.report;
    std::vector<Service> services;
    std::set<std::string> taken;

    for (const auto& path : files) {
        auto fname = path.filename().string();
        ++report.files_read;
        IngestedService ingested;
        try {
            ingested = ingest_wsdl(read_file(path), path.stem().string(), resolver);
        } catch (const WsdlError& e) {
            report.skipped.push_back({fname, e.what()});
            continue;
        }
        for (auto& n : ingested.notes) report.notes.push_back({fname, std::move(n)});

        auto& svc = ingested.service;
        if (taken.contains(svc.name)) {
            std::string base = sanitize(path.stem().string());
            std::string renamed = base;
            for (int k = 2; taken.contains(renamed); ++k) renamed = base + "~" + std::to_string(k);
            report.notes.push_back({fname, "service '" + svc.name + "' already defined; renamed to '" + renamed + "'"});
            svc.name = renamed;
            for (auto& op : svc.operations) op.service = renamed;
        }
        taken.insert(svc.name);
        report.operations += svc.operations.size();
        services.push_back(std::move(svc));
    }
    report.services = services.size();
    result.corpus = Corpus(std::move(services));
    return result;
}

}  // namespace wsnet
