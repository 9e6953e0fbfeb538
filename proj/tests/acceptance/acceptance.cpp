// Acceptance gate: prints one PASS/FAIL/SKIP line per criterion.
//
//   acceptance [--corpus-dir DIR] [--data DIR] [--known-failure N]... [--workers N]
//
// --corpus-dir points at a SAWSDL-TC style WSDL directory; without it the
// collection criterion is skipped. Exit status is 0 when every failing
// criterion was listed with --known-failure.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "wsnet/composition.hpp"
#include "wsnet/corpus.hpp"
#include "wsnet/graph.hpp"
#include "wsnet/netstats.hpp"
#include "wsnet/networks.hpp"
#include "wsnet/parallel.hpp"
#include "wsnet/powerlaw.hpp"
#include "wsnet/randgraph.hpp"
#include "wsnet/rng.hpp"
#include "wsnet/topology.hpp"
#include "wsnet/wsdl_ingest.hpp"

namespace {

using namespace wsnet;

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
    Verdict verdict = Verdict::Fail;
    std::string summary;  // one line, shown after the verdict
    std::string report;   // deterministic measurement record
};

struct Settings {
    std::string data_dir;
    std::string corpus_dir;
    unsigned workers = 1;
};

Outcome make(bool ok, std::string summary, std::string report) {
    return {ok ? Verdict::Pass : Verdict::Fail, std::move(summary), std::move(report)};
}

std::string edge_set(const Graph& g) {
    std::vector<std::string> parts;
    for (auto [u, v] : g.edges()) parts.push_back(g.label(u) + "->" + g.label(v));
    std::sort(parts.begin(), parts.end());
    return fmt::format("{}", fmt::join(parts, ","));
}

std::string node_set(const Graph& g) {
    std::vector<std::string> parts;
    for (NodeId v = 0; v < g.node_count(); ++v) parts.push_back(g.label(v));
    std::sort(parts.begin(), parts.end());
    return fmt::format("{}", fmt::join(parts, ","));
}

Outcome fig1_fixture(const Settings& s) {
    auto wsdl = ingest_directory(s.data_dir + "/fig1");
    auto dep = build_dependency(wsdl.corpus, MatchMode::Syntactic);
    auto inter = build_interaction(wsdl.corpus, MatchMode::Syntactic, InteractionMode::Full);
    auto comps = component_summary(inter.graph);

    bool nodes_ok = node_set(dep.graph) == "a,b,c,d,e,f";
    bool edges_ok = edge_set(dep.graph) == "a->d,b->d,b->e,b->f,c->e,c->f";
    bool inter_ok = inter.graph.node_count() == 2 && inter.graph.edge_count() == 0 && comps.isolated == 2;
    std::string report = fmt::format("dependency nodes {{{}}} edges {{{}}}; interaction {} nodes {} edges {} isolated",
                                     node_set(dep.graph), edge_set(dep.graph), inter.graph.node_count(),
                                     inter.graph.edge_count(), comps.isolated);
    return make(nodes_ok && edges_ok && inter_ok, report, report);
}

Outcome fig2_fixture(const Settings& s) {
    auto wsdl = ingest_directory(s.data_dir + "/fig2");
    auto request = make_request(MatchMode::Syntactic, {"AuthorName", "BookTitle"}, {"PubliDate"});
    auto plan = forward_chain(wsdl.corpus, request);
    std::vector<std::string> layers;
    for (const auto& l : plan.layers) layers.push_back(fmt::format("[{}]", fmt::join(l, ",")));
    std::string text = fmt::format("[{}]", fmt::join(layers, ","));
    bool ok = plan.satisfied && text == "[[AuthorNameBookTitle_ISBN],[ISBN_PubliDate]]";
    std::string report = fmt::format("plan {} satisfied={}", text, plan.satisfied);
    return make(ok, report, report);
}

Outcome metric_oracles(const Settings&) {
    Rng rng(20240601);
    std::size_t distance_checks = 0;
    std::size_t triangle_checks = 0;
    std::vector<std::string> mismatches;
    std::ostringstream record;

    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng.below(50);
        const double p = 0.01 + 0.14 * rng.uniform();
        Graph g = oracle::random_digraph(rng, n, p);

        auto lcc = oracle::largest_weak_component(g);
        for (auto scope : {DistanceScope::WholeGraph, DistanceScope::LargestComponent}) {
            for (bool directed : {true, false}) {
                const bool empty = scope == DistanceScope::LargestComponent && lcc.empty();
                oracle::PathSummary want;
                if (!empty) want = oracle::path_summary(scope == DistanceScope::WholeGraph ? g : induced_subgraph(g, lcc), directed);
                std::optional<DistanceStats> got;
                try {
                    got = distance_stats(g, {scope, directed});
                } catch (const NetstatsError&) {
                }
                ++distance_checks;
                bool ok = empty ? !got.has_value()
                                : got && got->mean == want.mean() && got->diameter == want.diameter &&
                                      got->pairs_counted == want.pairs && got->unreachable_pairs == want.unreachable;
                if (!ok) mismatches.push_back(fmt::format("graph {} distances", i));
                record << fmt::format("{}:{}:{}:{}:{};", i, want.distance_sum, want.pairs, want.diameter,
                                      want.unreachable);
            }
        }
        if (n <= 30) {
            auto want = oracle::brute_triples(g);
            auto got = triangle_census(g);
            ++triangle_checks;
            double expected_t = want.connected_triples ? 3.0 * want.triangles / want.connected_triples : 0.0;
            if (got.triangles != want.triangles || got.connected_triples != want.connected_triples ||
                transitivity(g) != expected_t)
                mismatches.push_back(fmt::format("graph {} triangles", i));
            record << fmt::format("t{}:{};", want.triangles, want.connected_triples);
        }
    }

    Graph star;
    for (int leaf = 1; leaf <= 25; ++leaf) star.add_edge("hub", fmt::format("leaf{}", leaf));
    auto r = degree_correlation(star);
    bool star_ok = r && std::abs(*r + 1.0) <= 1e-9;

    std::string summary = fmt::format("{} distance and {} triangle comparisons, {} mismatches; star r = {}",
                                      distance_checks, triangle_checks, mismatches.size(),
                                      r ? fmt::format("{:.12f}", *r) : "undefined");
    if (!mismatches.empty()) summary += " (first: " + mismatches.front() + ")";
    return make(mismatches.empty() && star_ok, summary, record.str() + summary);
}

Outcome builder_oracles(const Settings&) {
    Rng rng(777);
    std::size_t mismatches = 0;
    std::size_t containment = 0;
    std::size_t edges_seen = 0;
    std::string first;
    for (int i = 0; i < 200; ++i) {
        auto corpus = oracle::random_corpus(rng, 8, 6);
        for (auto mode : {MatchMode::Syntactic, MatchMode::Semantic}) {
            auto dep = oracle::labelled(build_dependency(corpus, mode).graph);
            auto dep_want = oracle::dependency(corpus, mode);
            auto full = oracle::labelled(build_interaction(corpus, mode, InteractionMode::Full).graph);
            auto partial = oracle::labelled(build_interaction(corpus, mode, InteractionMode::Partial).graph);
            auto full_want = oracle::interaction(corpus, mode, true);
            auto partial_want = oracle::interaction(corpus, mode, false);
            edges_seen += dep.edges.size() + full.edges.size() + partial.edges.size();

            auto same = [](const oracle::LabelledGraph& a, const oracle::LabelledGraph& b) {
                return a.nodes == b.nodes && a.edges == b.edges;
            };
            std::string where = fmt::format("corpus {} {}", i, to_string(mode));
            if (!same(dep, dep_want)) {
                ++mismatches;
                if (first.empty()) first = where + " dependency";
            }
            if (!same(full, full_want)) {
                ++mismatches;
                if (first.empty()) first = where + " full interaction";
            }
            if (!same(partial, partial_want)) {
                ++mismatches;
                if (first.empty()) first = where + " partial interaction";
            }
            if (!std::includes(partial.edges.begin(), partial.edges.end(), full.edges.begin(), full.edges.end()))
                ++containment;
        }
    }
    std::string summary = fmt::format("200 corpora x 2 matchings, {} edges compared, {} mismatches, {} Full-not-in-Partial",
                                      edges_seen, mismatches, containment);
    if (!first.empty()) summary += " (first: " + first + ")";
    return make(mismatches == 0 && containment == 0, summary, summary);
}

Outcome powerlaw_recovery(const Settings& s) {
    constexpr std::size_t kDraws = 10000;
    constexpr std::size_t kReplicates = 500;

    Rng rng(2500);
    oracle::PowerLawInversion sampler(2.5, 1);
    std::vector<std::uint64_t> pl(kDraws);
    for (auto& x : pl) x = sampler.draw(rng.uniform());
    auto fit = fit_discrete_power_law(pl);
    fit = ks_pvalue(pl, fit, kReplicates, 99, s.workers);

    Rng grng(3100);
    std::vector<std::uint64_t> geo(kDraws);
    for (auto& x : geo) x = oracle::geometric_draw(grng.uniform(), 0.1);
    auto gfit = fit_discrete_power_law(geo);
    gfit = ks_pvalue(geo, gfit, kReplicates, 99, s.workers);

    bool ok = fit.alpha >= 2.40 && fit.alpha <= 2.60 && *fit.pvalue > 0.1 && *gfit.pvalue < 0.05;
    std::string summary = fmt::format(
        "power law: alpha {:.4f} xmin {} ntail {} p {:.3f}; geometric: alpha {:.4f} xmin {} ntail {} p {:.3f}",
        fit.alpha, fit.xmin, fit.ntail, *fit.pvalue, gfit.alpha, gfit.xmin, gfit.ntail, *gfit.pvalue);
    return make(ok, summary, summary);
}

Outcome er_sanity(const Settings& s) {
    constexpr std::size_t kSamples = 200;
    auto sparse = er_ensemble_stats(269, 633, kSamples, 42, {{DistanceScope::WholeGraph, true}, s.workers});
    const double p = 633.0 / (269.0 * 268.0);
    const double se = sparse.transitivity.stddev / std::sqrt(static_cast<double>(kSamples));
    const bool transitivity_ok = std::abs(sparse.transitivity.mean - p) <= 3.0 * se;
    // The undirected projection of a directed G(n, l) links a pair with
    // probability about 1 - (1 - p)^2; reported for context.
    const double projected = 1.0 - (1.0 - p) * (1.0 - p);

    auto dense = er_ensemble_stats(395, 3666, kSamples, 42, {{}, s.workers});
    const bool distance_ok = dense.average_distance.mean >= 2.3 && dense.average_distance.mean <= 3.3;

    std::string summary = fmt::format(
        "(269,633) transitivity {:.5f} vs l/(n(n-1)) {:.5f}, 3 SE = {:.5f}: {}; projection density {:.5f} at {:.1f} SE; "
        "(395,3666) mean distance {:.4f} in [2.3, 3.3]: {}",
        sparse.transitivity.mean, p, 3.0 * se, transitivity_ok ? "ok" : "outside",
        projected, std::abs(sparse.transitivity.mean - projected) / se, dense.average_distance.mean,
        distance_ok ? "ok" : "outside");
    return make(transitivity_ok && distance_ok, summary, summary);
}

Outcome composition_minimality(const Settings&) {
    Rng rng(4242);
    std::size_t disagreements = 0;
    std::size_t replay_failures = 0;
    std::size_t satisfied = 0;
    std::ostringstream record;
    std::string first;
    for (int i = 0; i < 100; ++i) {
        auto corpus = oracle::random_corpus(rng, 8, 6);
        const auto mode = rng.below(2) ? MatchMode::Semantic : MatchMode::Syntactic;

        // Request keys are drawn from the keys that actually occur.
        std::vector<std::string> keys;
        for (const auto* op : corpus.operations()) {
            for (const auto& p : op->inputs) keys.push_back(oracle::class_label(*op, p, true, mode));
            for (const auto& p : op->outputs) keys.push_back(oracle::class_label(*op, p, false, mode));
        }
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        if (keys.empty()) keys.push_back("k0");
        std::set<std::string> provided;
        std::set<std::string> desired;
        for (const auto& k : keys) {
            if (rng.below(3) == 0) provided.insert(k);
        }
        desired.insert(keys[rng.below(keys.size())]);
        if (rng.below(2)) desired.insert(keys[rng.below(keys.size())]);

        auto request = make_request(mode, {provided.begin(), provided.end()}, {desired.begin(), desired.end()});
        auto plan = forward_chain(corpus, request);
        auto best = oracle::optimal_layers(corpus, mode, provided, desired);

        bool agree = best ? plan.satisfied && plan.layers.size() == *best : !plan.satisfied;
        if (!agree) {
            ++disagreements;
            if (first.empty()) first = fmt::format("corpus {}", i);
        }
        if (plan.satisfied) {
            ++satisfied;
            auto pruned = prune_plan(corpus, plan, request);
            if (!replay_plan(corpus, pruned, request)) ++replay_failures;
            record << fmt::format("{}:{}:{};", i, plan.layers.size(), pruned.layers.size());
        } else {
            record << fmt::format("{}:-;", i);
        }
    }
    std::string summary = fmt::format("100 corpora, {} satisfiable, {} layer-count disagreements, {} pruned replay failures",
                                      satisfied, disagreements, replay_failures);
    if (!first.empty()) summary += " (first: " + first + ")";
    return make(disagreements == 0 && replay_failures == 0, summary, record.str() + summary);
}

// Collection reproduction

struct Expected {
    const char* name;
    MatchMode matching;
    bool dependency;
    double correlation;
};

Outcome collection(const Settings& s) {
    if (s.corpus_dir.empty()) return {Verdict::Skip, "no collection given (--corpus-dir)", ""};
    auto ingested = ingest_directory(s.corpus_dir);
    const Expected nets[] = {
        {"syntactic-dependency", MatchMode::Syntactic, true, -0.21},
        {"semantic-dependency", MatchMode::Semantic, true, -0.22},
        {"syntactic-interaction", MatchMode::Syntactic, false, -0.45},
        {"semantic-interaction", MatchMode::Semantic, false, -0.51},
    };
    struct Fits {
        double in, out, total;
        bool in_ok, out_ok, total_ok;
    };
    const Fits dep_fits[] = {{3.15, 2.01, 3.15, true, false, true}, {2.99, 3.45, 3.04, true, true, true}};

    std::vector<std::string> failures;
    std::vector<std::string> notes;
    int dep_index = 0;
    for (const auto& e : nets) {
        Graph g = e.dependency ? build_dependency(ingested.corpus, e.matching).graph
                               : build_interaction(ingested.corpus, e.matching, InteractionMode::Full).graph;
        auto comps = component_summary(g);
        auto lcc = largest_component(g);
        notes.push_back(fmt::format("{}: N={} L={} largest {}/{} density {:.4f}", e.name, comps.nodes, comps.links,
                                    comps.largest_nodes, comps.largest_links, comps.largest_density));

        if (!e.dependency) {
            double want = e.matching == MatchMode::Syntactic ? 0.0235 : 0.0295;
            if (std::abs(comps.largest_density - want) > 0.0005)
                failures.push_back(fmt::format("{} density {:.4f} vs {}", e.name, comps.largest_density, want));
        }
        if (e.dependency && e.matching == MatchMode::Semantic) {
            if (std::abs(static_cast<double>(comps.largest_nodes) - 268.0) > 0.05 * 268.0 ||
                std::abs(static_cast<double>(comps.largest_links) - 621.0) > 0.05 * 621.0)
                failures.push_back(fmt::format("{} largest component {}/{} vs 268/621", e.name, comps.largest_nodes,
                                               comps.largest_links));
        }
        auto r = degree_correlation(lcc);
        if (!r || std::abs(*r - e.correlation) > 0.05)
            failures.push_back(fmt::format("{} degree correlation {} vs {}", e.name,
                                           r ? fmt::format("{:.3f}", *r) : "undefined", e.correlation));

        auto report = degree_distribution_report(lcc, {500, 42, s.workers});
        const DegreeFit* parts[] = {&report.in, &report.out, &report.total};
        const char* labels[] = {"in", "out", "joint"};
        for (int k = 0; k < 3; ++k) {
            const auto& f = parts[k]->fit;
            if (!f) {
                failures.push_back(fmt::format("{} {}-degree fit failed: {}", e.name, labels[k], parts[k]->error));
                continue;
            }
            notes.push_back(fmt::format("{} {}: gamma {:.2f} p {:.2f}", e.name, labels[k], f->alpha, *f->pvalue));
            if (e.dependency) {
                const auto& want = dep_fits[dep_index];
                double gamma = k == 0 ? want.in : k == 1 ? want.out : want.total;
                bool accept = k == 0 ? want.in_ok : k == 1 ? want.out_ok : want.total_ok;
                if (std::abs(f->alpha - gamma) > 0.2)
                    failures.push_back(fmt::format("{} {} gamma {:.2f} vs {}", e.name, labels[k], f->alpha, gamma));
                if ((*f->pvalue >= 0.1) != accept)
                    failures.push_back(fmt::format("{} {} p {:.2f} verdict differs", e.name, labels[k], *f->pvalue));
            } else if (*f->pvalue >= 0.1) {
                failures.push_back(fmt::format("{} {} fit not rejected (p {:.2f})", e.name, labels[k], *f->pvalue));
            }
        }
        if (e.dependency) ++dep_index;
    }
    for (const auto& n : notes) std::cout << "    " << n << "\n";
    std::string summary = failures.empty() ? "all collection targets met"
                                           : fmt::format("{} target(s) missed: {}", failures.size(),
                                                         fmt::join(failures, "; "));
    return make(failures.empty(), summary, summary);
}

struct Criterion {
    int number;
    const char* title;
    double limit_seconds;
    std::function<Outcome(const Settings&)> check;
};

}  // namespace

int main(int argc, char** argv) {
    Settings settings;
    settings.workers = std::max(4u, default_workers());  // several threads even on one core
    std::vector<int> known;
    CLI::App app{"Acceptance checks"};
    app.add_option("--data", settings.data_dir, "Fixture directory (holds fig1/ and fig2/)")->required();
    app.add_option("--corpus-dir", settings.corpus_dir, "SAWSDL-TC WSDL directory");
    app.add_option("--known-failure", known, "Criterion expected to fail");
    app.add_option("--workers", settings.workers, "Worker threads");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "dependency and interaction networks of the single-service fixture", 1, fig1_fixture},
        {2, "two-service composition plan", 1, fig2_fixture},
        {3, "distance, triangle and correlation metrics against brute force", 30, metric_oracles},
        {4, "network builders against definition enumeration", 10, builder_oracles},
        {5, "power-law exponent recovery and goodness of fit", 120, powerlaw_recovery},
        {6, "random-graph ensemble transitivity and distance", 120, er_sanity},
        {7, "forward chaining optimality and pruned replay", 30, composition_minimality},
        {8, "collection table reproduction", 3600, collection},
    };

    std::vector<std::string> first_reports;
    int failed = 0;
    int unexpected = 0;
    auto record = [&](int number, Verdict v, const std::string& title, const std::string& detail) {
        const char* word = v == Verdict::Pass ? "PASS" : v == Verdict::Fail ? "FAIL" : "SKIP";
        bool expected = std::find(known.begin(), known.end(), number) != known.end();
        std::cout << fmt::format("criterion {}: {} {}: {}{}\n", number, word, title, detail,
                                 v == Verdict::Fail && expected ? " [known failure]" : "");
        std::cout.flush();
        if (v == Verdict::Fail) {
            ++failed;
            if (!expected) ++unexpected;
        }
    };

    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check(settings);
        } catch (const std::exception& e) {
            o = {Verdict::Fail, std::string("exception: ") + e.what(), ""};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.verdict == Verdict::Pass && secs > c.limit_seconds) {
            o.verdict = Verdict::Fail;
            o.summary += fmt::format(" (over the {:.0f} s limit)", c.limit_seconds);
        }
        if (c.number <= 7) first_reports.push_back(o.report);
        record(c.number, o.verdict, c.title, fmt::format("{} [{:.2f} s]", o.summary, secs));
    }

    // Determinism: a second pass with the same seeds, on one thread, must
    // reproduce every report byte for byte.
    Settings serial = settings;
    serial.workers = 1;
    std::size_t differing = 0;
    for (std::size_t i = 0; i < 7; ++i) {
        std::string again;
        try {
            again = criteria[i].check(serial).report;
        } catch (const std::exception& e) {
            again = e.what();
        }
        if (again != first_reports[i]) ++differing;
    }
    record(9, differing == 0 ? Verdict::Pass : Verdict::Fail, "identical reports on rerun",
           fmt::format("{} of 7 reports differ between a {}-thread and a 1-thread run", differing, settings.workers));

    std::cout << fmt::format("summary: {} failed, {} unexpected\n", failed, unexpected);
    return unexpected == 0 ? 0 : 1;
}
