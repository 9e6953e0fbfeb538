#include "wsnet/report.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace wsnet {

namespace {

constexpr const char* kMissing = "—";  // optional value not computed

struct Row {
    int table;
    std::string metric;
    std::vector<std::string> cells;
};

struct TableTitle {
    int table;
    const char* title;
};

constexpr TableTitle kTitles[] = {
    {1, "Table I. Component organization"},
    {2, "Table II. Small-world property: average distance and diameter"},
    {3, "Table III. Scale-free property: power-law exponent and p-value"},
    {4, "Table IV. Transitivity"},
    {5, "Table V. Degree correlation"},
};

std::string num(double x, int digits = 4) { return fmt::format("{:.{}f}", x, digits); }
std::string pct(double x) { return fmt::format("{:.2f}%", 100.0 * x); }
std::string count(std::uint64_t x) { return fmt::format("{}", x); }

std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q.push_back('"');
        q.push_back(c);
    }
    q.push_back('"');
    return q;
}

template <class Fn>
Row make_row(int table, std::string metric, const std::vector<NetworkResult>& nets, Fn&& cell) {
    Row row{table, std::move(metric), {}};
    for (const auto& n : nets) row.cells.push_back(cell(n));
    return row;
}

std::vector<Row> build_rows(const std::vector<NetworkResult>& nets) {
    std::vector<Row> rows;
    auto add = [&](int table, std::string metric, auto&& cell) {
        rows.push_back(make_row(table, std::move(metric), nets, cell));
    };

    // Table I
    add(1, "nodes", [](const NetworkResult& n) { return count(n.topology.components.nodes); });
    add(1, "links", [](const NetworkResult& n) { return count(n.topology.components.links); });
    add(1, "components", [](const NetworkResult& n) { return count(n.topology.component_count); });
    add(1, "isolated nodes", [](const NetworkResult& n) { return count(n.topology.components.isolated); });
    add(1, "isolated % of all nodes",
        [](const NetworkResult& n) { return pct(n.topology.components.isolated_fraction_total); });
    add(1, "isolated % of trimmed nodes",
        [](const NetworkResult& n) { return pct(n.topology.components.isolated_fraction_trimmed); });
    add(1, "small components", [](const NetworkResult& n) { return count(n.topology.components.small_components); });
    add(1, "small component sizes", [](const NetworkResult& n) {
        const auto& c = n.topology.components;
        return c.small_components ? fmt::format("{}-{}", c.small_min_size, c.small_max_size) : std::string("-");
    });
    add(1, "largest component nodes", [](const NetworkResult& n) { return count(n.topology.components.largest_nodes); });
    add(1, "largest component links", [](const NetworkResult& n) { return count(n.topology.components.largest_links); });
    add(1, "largest nodes % of all nodes",
        [](const NetworkResult& n) { return pct(n.topology.components.largest_node_fraction_total); });
    add(1, "largest nodes % of trimmed nodes",
        [](const NetworkResult& n) { return pct(n.topology.components.largest_node_fraction_trimmed); });
    add(1, "largest links %", [](const NetworkResult& n) { return pct(n.topology.components.largest_link_fraction); });
    add(1, "largest density", [](const NetworkResult& n) { return num(n.topology.components.largest_density); });

    // Table II
    auto dist = [](auto&& f) {
        return [f](const NetworkResult& n) { return n.topology.distance ? f(*n.topology.distance) : std::string("n/a"); };
    };
    auto er = [](auto&& f) {
        return [f](const NetworkResult& n) { return n.topology.er_baseline ? f(*n.topology.er_baseline) : std::string(kMissing); };
    };
    add(2, "average distance", dist([](const DistanceStats& d) { return num(d.mean); }));
    add(2, "ER average distance mean", er([](const ErEnsembleStats& e) { return num(e.average_distance.mean); }));
    add(2, "ER average distance sd", er([](const ErEnsembleStats& e) { return num(e.average_distance.stddev); }));
    add(2, "ER closed-form ln N / ln(L/N)", er([](const ErEnsembleStats& e) {
            return e.closed_form_distance ? num(*e.closed_form_distance) : std::string(kMissing);
        }));
    add(2, "diameter", dist([](const DistanceStats& d) { return count(d.diameter); }));
    add(2, "small world", [](const NetworkResult& n) {
        if (!n.topology.small_world) return std::string(kMissing);
        return std::string(n.topology.small_world->small_world ? "yes" : "no");
    });
    add(2, "reachable pairs", dist([](const DistanceStats& d) { return count(d.pairs_counted); }));
    add(2, "unreachable pairs", dist([](const DistanceStats& d) { return count(d.unreachable_pairs); }));
    add(2, "ER samples", er([](const ErEnsembleStats& e) { return count(e.samples - e.skipped); }));
    add(2, "ER seed", er([](const ErEnsembleStats& e) { return count(e.seed); }));

    // Table III
    struct Part {
        const char* label;
        const DegreeFit DegreeDistributionReport::*member;
    };
    constexpr Part parts[] = {
        {"in-degree", &DegreeDistributionReport::in},
        {"out-degree", &DegreeDistributionReport::out},
        {"joint-degree", &DegreeDistributionReport::total},
    };
    for (const auto& part : parts) {
        auto fit_cell = [member = part.member](auto&& f) {
            return [member, f](const NetworkResult& n) {
                if (!n.degrees || !((*n.degrees).*member).fit) return std::string("n/a");
                return f(*((*n.degrees).*member).fit);
            };
        };
        std::string label = part.label;
        add(3, label + " gamma", fit_cell([](const PowerLawFit& f) { return fmt::format("{:.2f}", f.alpha); }));
        add(3, label + " p-value", fit_cell([](const PowerLawFit& f) {
                return f.pvalue ? fmt::format("{:.2f}", *f.pvalue) : std::string(kMissing);
            }));
        add(3, label + " xmin", fit_cell([](const PowerLawFit& f) { return count(f.xmin); }));
        add(3, label + " tail size", fit_cell([](const PowerLawFit& f) { return count(f.ntail); }));
        add(3, label + " KS", fit_cell([](const PowerLawFit& f) { return num(f.ks); }));
    }

    // Table IV
    add(4, "transitivity", [](const NetworkResult& n) {
        return n.topology.distance ? fmt::format("{:.3f}", n.topology.transitivity) : std::string("n/a");
    });
    add(4, "ER transitivity mean", er([](const ErEnsembleStats& e) { return fmt::format("{:.3f}", e.transitivity.mean); }));
    add(4, "ER transitivity sd", er([](const ErEnsembleStats& e) { return fmt::format("{:.3f}", e.transitivity.stddev); }));

    // Table V
    add(5, "degree correlation", [](const NetworkResult& n) {
        if (!n.topology.distance) return std::string("n/a");
        return n.topology.degree_correlation ? fmt::format("{:.2f}", *n.topology.degree_correlation)
                                             : std::string("undefined");
    });
    return rows;
}

std::string render_text(const std::vector<NetworkResult>& nets, const std::vector<Row>& rows) {
    std::vector<std::string> header{"property"};
    for (const auto& n : nets) header.push_back(n.topology.network);

    std::vector<std::size_t> width(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = display_width(header[c]);
    for (const auto& r : rows) {
        width[0] = std::max(width[0], display_width(r.metric));
        for (std::size_t c = 0; c < r.cells.size(); ++c) width[c + 1] = std::max(width[c + 1], display_width(r.cells[c]));
    }

    auto line = [&](const std::string& first, const std::vector<std::string>& rest) {
        std::string out = first + std::string(width[0] - display_width(first), ' ');
        for (std::size_t c = 0; c < rest.size(); ++c) {
            out += "  ";
            out += std::string(width[c + 1] - display_width(rest[c]), ' ') + rest[c];
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        return out + "\n";
    };

    std::string out;
    for (const auto& t : kTitles) {
        if (!out.empty()) out += "\n";
        out += t.title;
        out += "\n";
        out += line(header[0], std::vector<std::string>(header.begin() + 1, header.end()));
        for (const auto& r : rows) {
            if (r.table == t.table) out += line(r.metric, r.cells);
        }
    }
    if (!nets.empty()) {
        const auto& c = nets.front().topology.convention;
        out += fmt::format("\nconvention: {} distances over {}\n", c.directed ? "directed" : "undirected", to_string(c.scope));
    }
    for (const auto& n : nets) {
        if (!n.degree_error.empty()) out += fmt::format("note: {}: degree fits skipped: {}\n", n.topology.network, n.degree_error);
        if (!n.degrees) continue;
        for (const auto* f : {&n.degrees->in, &n.degrees->out, &n.degrees->total}) {
            if (!f->error.empty()) out += fmt::format("note: {}: {}\n", n.topology.network, f->error);
        }
    }
    return out;
}

std::string render_csv(const std::vector<NetworkResult>& nets, const std::vector<Row>& rows) {
    std::string out = "table,metric,network,value,scope,convention\n";
    for (const auto& t : kTitles) {
        for (const auto& r : rows) {
            if (r.table != t.table) continue;
            for (std::size_t c = 0; c < nets.size(); ++c) {
                const auto& conv = nets[c].topology.convention;
                out += fmt::format("{},{},{},{},{},{}\n", t.table, csv_field(r.metric), csv_field(nets[c].topology.network),
                                   csv_field(r.cells[c]), to_string(conv.scope), conv.directed ? "directed" : "undirected");
            }
        }
    }
    return out;
}

}  // namespace

std::string render_tables(const std::vector<NetworkResult>& networks, ReportFormat format) {
    auto rows = build_rows(networks);
    return format == ReportFormat::Text ? render_text(networks, rows) : render_csv(networks, rows);
}

}  // namespace wsnet
