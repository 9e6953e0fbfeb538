#include "xml_tree.hpp"

#include <expat.h>

#include <climits>

namespace wsnet::xml {

namespace {

constexpr char kNsSeparator = '\x1f';

QName split_expanded(const XML_Char* raw) {
    std::string_view s(raw);
    auto sep = s.find(kNsSeparator);
    if (sep == std::string_view::npos) return {"", std::string(s)};
    return {std::string(s.substr(0, sep)), std::string(s.substr(sep + 1))};
}

struct Builder {
    std::unique_ptr<Element> root;
    std::vector<Element*> stack;
    std::vector<std::pair<std::string, std::string>> pending_decls;
    std::shared_ptr<const std::map<std::string, std::string>> empty_scope =
        std::make_shared<const std::map<std::string, std::string>>();

    static void on_start(void* data, const XML_Char* name, const XML_Char** attrs) {
        auto* b = static_cast<Builder*>(data);
        auto el = std::make_unique<Element>();
        el->name = split_expanded(name);
        for (auto** a = attrs; a && *a; a += 2) el->attributes.push_back({split_expanded(a[0]), a[1]});

        auto parent_scope = b->stack.empty() ? b->empty_scope : b->stack.back()->scope;
        if (b->pending_decls.empty()) {
            el->scope = parent_scope;
        } else {
            auto scope = std::make_shared<std::map<std::string, std::string>>(*parent_scope);
            for (auto& [prefix, uri] : b->pending_decls) (*scope)[prefix] = uri;
            b->pending_decls.clear();
            el->scope = std::move(scope);
        }

        Element* raw = el.get();
        if (b->stack.empty()) {
            b->root = std::move(el);
        } else {
            b->stack.back()->children.push_back(std::move(el));
        }
        b->stack.push_back(raw);
    }

    static void on_end(void* data, const XML_Char*) { static_cast<Builder*>(data)->stack.pop_back(); }

    static void on_ns_decl(void* data, const XML_Char* prefix, const XML_Char* uri) {
        static_cast<Builder*>(data)->pending_decls.emplace_back(prefix ? prefix : "", uri ? uri : "");
    }
};

}  // namespace

const std::string* Element::attribute(std::string_view ns, std::string_view local) const {
    for (const auto& a : attributes) {
        if (a.name.ns == ns && a.name.local == local) return &a.value;
    }
    return nullptr;
}

QName Element::resolve(std::string_view value) const {
    auto colon = value.find(':');
    std::string prefix = colon == std::string_view::npos ? "" : std::string(value.substr(0, colon));
    std::string local(colon == std::string_view::npos ? value : value.substr(colon + 1));
    QName q{"", std::move(local)};
    if (scope) {
        auto it = scope->find(prefix);
        if (it != scope->end()) q.ns = it->second;
    }
    return q;
}

std::unique_ptr<Element> parse(std::string_view document) {
    if (document.size() > static_cast<std::size_t>(INT_MAX)) throw ParseError("document too large");

    Builder builder;
    std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(XML_ParserCreateNS(nullptr, kNsSeparator),
                                                                        &XML_ParserFree);
    if (!parser) throw ParseError("cannot allocate XML parser");
    XML_SetUserData(parser.get(), &builder);
    XML_SetElementHandler(parser.get(), &Builder::on_start, &Builder::on_end);
    XML_SetStartNamespaceDeclHandler(parser.get(), &Builder::on_ns_decl);

    if (XML_Parse(parser.get(), document.data(), static_cast<int>(document.size()), XML_TRUE) == XML_STATUS_ERROR) {
        throw ParseError("malformed XML at line " + std::to_string(XML_GetCurrentLineNumber(parser.get())) + ": " +
                         XML_ErrorString(XML_GetErrorCode(parser.get())));
    }
    if (!builder.root) throw ParseError("malformed XML: no root element");
    return std::move(builder.root);
}

}  // namespace wsnet::xml
