#include "wsnet/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wsnet/composition.hpp"
#include "wsnet/corpus.hpp"
#include "wsnet/networks.hpp"
#include "wsnet/powerlaw.hpp"
#include "wsnet/report.hpp"
#include "wsnet/topology.hpp"
#include "wsnet/wsdl_ingest.hpp"

namespace wsnet::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string corpus;
    std::string pattern = "*.wsdl";
    std::string matching = "syntactic";
    std::string model = "dependency";
    std::string interaction = "full";
    bool all_networks = false;
    bool undirected = false;
    std::string scope = "largest";
    std::uint64_t seed = 42;
    std::size_t samples = 100;
    std::size_t replicates = 1000;
    unsigned workers = 1;
    std::string format = "text";

    std::string edges_path;
    std::string nodes_path;
    std::string dot_path;
    std::string provenance_path;
    bool trim = false;
    std::string histogram_prefix;

    std::size_t node_count = 0;
    std::size_t link_count = 0;

    std::vector<std::string> provided;
    std::vector<std::string> desired;
    bool prune = false;

    std::string output;
};

struct BuiltNetwork {
    std::string name;
    Graph graph;
    std::optional<DependencyNetwork> dependency;
};

Corpus load_corpus(const RunConfig& cfg, std::ostream& err) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (fs::is_directory(cfg.corpus, ec)) {
        IngestResult r;
        try {
            r = ingest_directory(cfg.corpus, cfg.pattern);
        } catch (const WsdlError& e) {
            throw DataError(e.what());
        }
        err << fmt::format("ingested {} file(s): {} service(s), {} operation(s), {} skipped\n", r.report.files_read,
                           r.report.services, r.report.operations, r.report.skipped.size());
        for (const auto& s : r.report.skipped) err << fmt::format("skipped {}: {}\n", s.file, s.message);
        return std::move(r.corpus);
    }
    std::ifstream in(cfg.corpus, std::ios::binary);
    if (!in) throw DataError("cannot open corpus '" + cfg.corpus + "'");
    return parse_wsc(in);
}

std::string network_name(MatchMode matching, bool dependency, InteractionMode interaction) {
    std::string name = std::string(to_string(matching)) + (dependency ? "-dependency" : "-interaction");
    if (!dependency && interaction == InteractionMode::Partial) name += "-partial";
    return name;
}

BuiltNetwork build_network(const Corpus& corpus, MatchMode matching, bool dependency, InteractionMode interaction) {
    BuiltNetwork b;
    b.name = network_name(matching, dependency, interaction);
    if (dependency) {
        b.dependency = build_dependency(corpus, matching);
        b.graph = b.dependency->graph;
    } else {
        b.graph = build_interaction(corpus, matching, interaction).graph;
    }
    return b;
}

std::vector<BuiltNetwork> build_requested(const Corpus& corpus, const RunConfig& cfg) {
    const auto interaction = parse_interaction_mode(cfg.interaction);
    if (cfg.all_networks) {
        std::vector<BuiltNetwork> nets;
        for (bool dependency : {true, false}) {
            for (auto m : {MatchMode::Syntactic, MatchMode::Semantic})
                nets.push_back(build_network(corpus, m, dependency, interaction));
        }
        return nets;
    }
    std::vector<BuiltNetwork> nets;
    nets.push_back(build_network(corpus, parse_match_mode(cfg.matching), cfg.model == "dependency", interaction));
    return nets;
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw DataError("cannot write '" + path + "'");
    writer(os);
    if (!os) throw DataError("error writing '" + path + "'");
}

void write_exports(const BuiltNetwork& net, const RunConfig& cfg) {
    if (!cfg.edges_path.empty()) write_file(cfg.edges_path, [&](std::ostream& os) { write_edge_list(net.graph, os); });
    if (!cfg.nodes_path.empty()) write_file(cfg.nodes_path, [&](std::ostream& os) { write_node_table(net.graph, os); });
    if (!cfg.dot_path.empty())
        write_file(cfg.dot_path, [&](std::ostream& os) { write_dot(net.graph, os, cfg.trim, net.name); });
    if (!cfg.provenance_path.empty() && net.dependency)
        write_file(cfg.provenance_path, [&](std::ostream& os) { write_provenance(*net.dependency, os); });
}

DistanceConvention convention_of(const RunConfig& cfg) {
    return {cfg.scope == "whole" ? DistanceScope::WholeGraph : DistanceScope::LargestComponent, !cfg.undirected};
}

std::string run_header(std::string_view command, const RunConfig& cfg) {
    auto conv = convention_of(cfg);
    return fmt::format("# wsnet {} matching={} model={} interaction={} seed={} samples={} replicates={} distances={} "
                       "scope={}\n",
                       command, cfg.all_networks ? "all" : cfg.matching, cfg.all_networks ? "all" : cfg.model,
                       cfg.interaction, cfg.seed, cfg.samples, cfg.replicates, conv.directed ? "directed" : "undirected",
                       to_string(conv.scope));
}

std::string csv_run_rows(const RunConfig& cfg) {
    return fmt::format("run,seed,,{},,\nrun,samples,,{},,\nrun,replicates,,{},,\n", cfg.seed, cfg.samples,
                       cfg.replicates);
}

void validate_network_flags(const RunConfig& cfg, const CLI::App& sub) {
    bool model_set = sub.count("--model") > 0;
    bool interaction_set = sub.count("--interaction") > 0;
    if (cfg.all_networks && model_set) throw UsageError("--all-networks conflicts with --model");
    if (cfg.all_networks && sub.count("--matching") > 0) throw UsageError("--all-networks conflicts with --matching");
    if (!cfg.all_networks && cfg.model == "dependency" && interaction_set)
        throw UsageError("--interaction applies only to --model interaction");
    if (!cfg.provenance_path.empty() && (cfg.all_networks || cfg.model != "dependency"))
        throw UsageError("--provenance requires --model dependency");
    if (cfg.all_networks && (!cfg.edges_path.empty() || !cfg.nodes_path.empty() || !cfg.dot_path.empty()))
        throw UsageError("exports need a single network; drop --all-networks");
}

void cmd_convert(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto corpus = load_corpus(cfg, err);
    auto text = serialize_wsc(corpus);
    if (cfg.output.empty()) {
        out << text;
    } else {
        write_file(cfg.output, [&](std::ostream& os) { os << text; });
    }
}

void cmd_extract(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto corpus = load_corpus(cfg, err);
    auto nets = build_requested(corpus, cfg);
    auto& net = nets.front();
    write_exports(net, cfg);
    bool exported = !cfg.edges_path.empty() || !cfg.nodes_path.empty() || !cfg.dot_path.empty() ||
                    !cfg.provenance_path.empty();
    if (!exported) {
        write_edge_list(net.graph, out);
        return;
    }
    out << fmt::format("{}: {} nodes, {} links\n", net.name, net.graph.node_count(), net.graph.edge_count());
    if (net.dependency && net.dependency->diagnostics.dropped_self_loops)
        out << fmt::format("dropped self-loops: {}\n", net.dependency->diagnostics.dropped_self_loops);
}

void cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto corpus = load_corpus(cfg, err);
    auto nets = build_requested(corpus, cfg);
    if (!cfg.all_networks) write_exports(nets.front(), cfg);

    AnalysisOptions opts;
    opts.convention = convention_of(cfg);
    opts.er_samples = cfg.samples;
    opts.seed = cfg.seed;
    opts.workers = cfg.workers;

    std::vector<NetworkResult> results;
    for (const auto& net : nets) {
        NetworkResult r;
        r.topology = analyze_topology(net.graph, net.name, opts);
        try {
            r.degrees = degree_distribution_report(measurement_scope(net.graph, opts.convention.scope),
                                                   {cfg.replicates, cfg.seed, cfg.workers});
        } catch (const PowerLawError& e) {
            r.degree_error = e.what();
        }
        results.push_back(std::move(r));
    }
    auto format = cfg.format == "csv" ? ReportFormat::Csv : ReportFormat::Text;
    out << (format == ReportFormat::Csv ? csv_run_rows(cfg) : run_header("analyze", cfg));
    out << render_tables(results, format);
}

void cmd_fit_degrees(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto corpus = load_corpus(cfg, err);
    auto nets = build_requested(corpus, cfg);
    bool csv = cfg.format == "csv";
    out << (csv ? "network,distribution,gamma,xmin,ntail,ks,pvalue,replicates,seed\n" : run_header("fit-degrees", cfg));
    for (const auto& net : nets) {
        auto scope = measurement_scope(net.graph, convention_of(cfg).scope);
        DegreeDistributionReport report;
        try {
            report = degree_distribution_report(scope, {cfg.replicates, cfg.seed, cfg.workers});
        } catch (const PowerLawError& e) {
            throw DataError(net.name + ": " + e.what());
        }
        const std::pair<const char*, const DegreeFit*> parts[] = {
            {"in", &report.in}, {"out", &report.out}, {"total", &report.total}};
        if (!csv) out << fmt::format("{}\n", net.name);
        for (const auto& [label, fit] : parts) {
            if (!cfg.histogram_prefix.empty() && nets.size() == 1) {
                write_file(cfg.histogram_prefix + "." + label + ".tsv",
                           [&](std::ostream& os) { write_histogram(fit->histogram, os); });
            }
            if (!fit->fit) {
                out << (csv ? fmt::format("{},{},,,,,,,\n", net.name, label)
                            : fmt::format("  {:<6} n/a ({})\n", label, fit->error));
                continue;
            }
            const auto& f = *fit->fit;
            std::string p = f.pvalue ? fmt::format("{:.4f}", *f.pvalue) : (csv ? "" : "—");
            if (csv) {
                out << fmt::format("{},{},{:.4f},{},{},{:.6f},{},{},{}\n", net.name, label, f.alpha, f.xmin, f.ntail,
                                   f.ks, p, f.replicates, f.seed);
            } else {
                out << fmt::format("  {:<6} gamma={:.4f} xmin={} ntail={} ks={:.6f} p={}\n", label, f.alpha, f.xmin,
                                   f.ntail, f.ks, p);
            }
        }
    }
}

void cmd_er_baseline(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::size_t n = cfg.node_count;
    std::size_t l = cfg.link_count;
    auto conv = convention_of(cfg);
    if (!cfg.corpus.empty()) {
        auto corpus = load_corpus(cfg, err);
        auto nets = build_requested(corpus, cfg);
        auto scope = measurement_scope(nets.front().graph, conv.scope);
        n = scope.node_count();
        l = scope.edge_count();
    } else if (n == 0) {
        throw UsageError("er-baseline needs --corpus or --node-count/--link-count");
    }
    if (cfg.samples == 0) throw UsageError("--samples must be at least 1");
    ErEnsembleStats s;
    try {
        s = er_ensemble_stats(n, l, cfg.samples, cfg.seed, {conv, cfg.workers});
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    } catch (const NetstatsError& e) {
        throw DataError(e.what());
    }
    std::string closed = s.closed_form_distance ? fmt::format("{:.4f}", *s.closed_form_distance) : "";
    if (cfg.format == "csv") {
        out << "metric,value\n";
        out << fmt::format("n,{}\nl,{}\nsamples,{}\nskipped,{}\nseed,{}\n", s.n, s.l, s.samples, s.skipped, s.seed);
        out << fmt::format("average_distance_mean,{:.6f}\naverage_distance_sd,{:.6f}\nclosed_form_distance,{}\n",
                           s.average_distance.mean, s.average_distance.stddev, closed);
        out << fmt::format("transitivity_mean,{:.6f}\ntransitivity_sd,{:.6f}\n", s.transitivity.mean,
                           s.transitivity.stddev);
    } else {
        if (cfg.corpus.empty()) {
            out << fmt::format("# wsnet er-baseline seed={} samples={} distances={} scope={}\n", cfg.seed,
                               cfg.samples, conv.directed ? "directed" : "undirected", to_string(conv.scope));
        } else {
            out << run_header("er-baseline", cfg);
        }
        out << fmt::format("N={} L={} samples={} skipped={} seed={}\n", s.n, s.l, s.samples, s.skipped, s.seed);
        out << fmt::format("average distance: {:.4f} ± {:.4f} (closed form {})\n", s.average_distance.mean,
                           s.average_distance.stddev, closed.empty() ? "n/a" : closed);
        out << fmt::format("transitivity: {:.4f} ± {:.4f}\n", s.transitivity.mean, s.transitivity.stddev);
    }
}

void cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto corpus = load_corpus(cfg, err);
    auto mode = parse_match_mode(cfg.matching);
    if (cfg.desired.empty()) throw UsageError("search needs at least one --out key");
    auto request = make_request(mode, cfg.provided, cfg.desired);
    auto plan = forward_chain(corpus, request);
    if (cfg.prune && plan.satisfied) plan = prune_plan(corpus, plan, request);

    out << fmt::format("# wsnet search matching={}{}\n", to_string(mode), cfg.prune ? " pruned" : "");
    for (std::size_t i = 0; i < plan.layers.size(); ++i) {
        out << fmt::format("layer {}: {}\n", i + 1, fmt::join(plan.layers[i], " "));
    }
    out << fmt::format("satisfied: {}\n", plan.satisfied ? "yes" : "no");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Dependency and interaction networks of Web service collections", "wsnet"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);

    const std::vector<std::string> matchings{"syntactic", "semantic"};
    const std::vector<std::string> models{"dependency", "interaction"};
    const std::vector<std::string> interactions{"full", "partial"};

    auto add_corpus = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--corpus", cfg.corpus, "WSDL directory or WSC corpus file");
        if (required) opt->required();
        sub->add_option("--pattern", cfg.pattern, "Filename glob for WSDL directories");
    };
    auto add_network = [&](CLI::App* sub, bool allow_all) {
        sub->add_option("--matching", cfg.matching, "Parameter matching")->check(CLI::IsMember(matchings));
        sub->add_option("--model", cfg.model, "Network model")->check(CLI::IsMember(models));
        sub->add_option("--interaction", cfg.interaction, "Interaction mode")->check(CLI::IsMember(interactions));
        if (allow_all)
            sub->add_flag("--all-networks", cfg.all_networks, "Analyze all four matching x model networks");
    };
    auto add_conventions = [&](CLI::App* sub) {
        sub->add_flag("--undirected", cfg.undirected, "Measure distances on the undirected projection");
        sub->add_option("--scope", cfg.scope, "Measurement scope")->check(CLI::IsMember({"largest", "whole"}));
        sub->add_option("--seed", cfg.seed, "Base random seed");
        sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "csv"}));
    };
    auto add_exports = [&](CLI::App* sub) {
        sub->add_option("--edges", cfg.edges_path, "Write the edge list (src<TAB>dst) here");
        sub->add_option("--nodes", cfg.nodes_path, "Write the node table (index<TAB>label) here");
        sub->add_option("--dot", cfg.dot_path, "Write a Graphviz DOT file here");
        sub->add_option("--provenance", cfg.provenance_path, "Write dependency edge provenance here");
        sub->add_flag("--trim", cfg.trim, "Omit isolated nodes from the DOT export");
    };

    auto* extract = app.add_subcommand("extract", "Build a network and export it");
    add_corpus(extract, true);
    add_network(extract, false);
    add_exports(extract);

    auto* analyze = app.add_subcommand("analyze", "Component, distance, degree, transitivity and correlation tables");
    add_corpus(analyze, true);
    add_network(analyze, true);
    add_conventions(analyze);
    add_exports(analyze);
    analyze->add_option("--samples", cfg.samples, "Random-graph baseline samples (0 skips it)");
    analyze->add_option("--replicates", cfg.replicates, "Bootstrap replicates for p-values (0 skips them)");

    auto* er = app.add_subcommand("er-baseline", "Erdos-Renyi G(N, L) ensemble statistics");
    add_corpus(er, false);
    add_network(er, false);
    add_conventions(er);
    er->add_option("--node-count", cfg.node_count, "N when no corpus is given");
    er->add_option("--link-count", cfg.link_count, "L when no corpus is given");
    er->add_option("--samples", cfg.samples, "Ensemble size");

    auto* fit = app.add_subcommand("fit-degrees", "Power-law fits of the degree distributions");
    add_corpus(fit, true);
    add_network(fit, true);
    add_conventions(fit);
    fit->add_option("--replicates", cfg.replicates, "Bootstrap replicates for p-values (0 skips them)");
    fit->add_option("--histogram-prefix", cfg.histogram_prefix, "Write PREFIX.{in,out,total}.tsv histograms");

    std::string in_keys;
    std::string out_keys;
    auto* search = app.add_subcommand("search", "Forward-chaining composition search");
    add_corpus(search, true);
    search->add_option("--matching", cfg.matching, "Parameter matching")->check(CLI::IsMember(matchings));
    search->add_option("--in", in_keys, "Provided keys, comma-separated (names or concept URIs)");
    search->add_option("--out", out_keys, "Desired keys, comma-separated")->required();
    search->add_flag("--prune", cfg.prune, "Drop operations that do not contribute to the desired keys");

    auto* convert = app.add_subcommand("convert", "Convert a WSDL directory (or WSC file) to canonical WSC text");
    add_corpus(convert, true);
    convert->add_option("--output", cfg.output, "Output file (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return kExitUsage;
    }

    cfg.provided = split_commas(in_keys);
    cfg.desired = split_commas(out_keys);

    try {
        if (*extract) {
            validate_network_flags(cfg, *extract);
            cmd_extract(cfg, out, err);
        } else if (*analyze) {
            validate_network_flags(cfg, *analyze);
            cmd_analyze(cfg, out, err);
        } else if (*er) {
            validate_network_flags(cfg, *er);
            cmd_er_baseline(cfg, out, err);
        } else if (*fit) {
            validate_network_flags(cfg, *fit);
            cmd_fit_degrees(cfg, out, err);
        } else if (*search) {
            cmd_search(cfg, out, err);
        } else if (*convert) {
            cmd_convert(cfg, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitOk;
}

}  // namespace wsnet::cli
