#pragma once

// Minimal namespace-aware element tree built on expat. Only what WSDL
// ingestion needs: elements, attributes, and in-scope prefix bindings for
// resolving QName-valued attributes.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wsnet::xml {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QName {
    std::string ns;
    std::string local;
};

struct Attribute {
    QName name;
    std::string value;
};

struct Element {
    QName name;
    std::vector<Attribute> attributes;
    std::vector<std::unique_ptr<Element>> children;
    std::shared_ptr<const std::map<std::string, std::string>> scope;  // prefix -> namespace URI

    bool is(std::string_view ns, std::string_view local) const { return name.ns == ns && name.local == local; }

    /// Attribute by (namespace, local name); unqualified attributes have ns "".
    const std::string* attribute(std::string_view ns, std::string_view local) const;
    const std::string* attribute(std::string_view local) const { return attribute("", local); }

    /// Splits a "prefix:local" value and resolves the prefix in this
    /// element's scope. Unbound prefixes resolve to an empty namespace.
    QName resolve(std::string_view qname_value) const;

    template <class Fn>
    void for_each_descendant(Fn&& fn) const {
        for (const auto& child : children) {
            fn(*child);
            child->for_each_descendant(fn);
        }
    }
};

/// Parses a complete document; throws ParseError on malformed input.
std::unique_ptr<Element> parse(std::string_view document);

}  // namespace wsnet::xml
