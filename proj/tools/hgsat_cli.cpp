// hgsat: generators, calculators, predicates and searches for K_{l+1}-style
// saturation on uniform hypergraphs, over a flat DIMACS-adjacent file format.
//
// Every command prints one JSON report to standard output. Exit codes:
//   0 affirmative verdict, 1 negative verdict, 2 usage or input error,
//   3 inconclusive (a guard was exhausted).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgsat/hgsat.hpp"

using json = nlohmann::ordered_json;
using namespace hgsat;

namespace {

struct Report {
    std::string command;
    std::string digest;
    json verdict;  // true / false / "inconclusive"
    json witness = nullptr;
    json exact = json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    int finish() {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        json out;
        out["command"] = command;
        out["input_digest"] = digest;
        out["verdict"] = verdict;
        out["witness"] = witness;
        out["exact_values"] = exact;
        out["elapsed_ms"] = elapsed;
        std::cout << out.dump(2) << "\n";
        if (verdict.is_string()) return 3;
        return verdict.get<bool>() ? 0 : 1;
    }
};

json vert1(int v) { return v + 1; }

json set1(const std::vector<int>& s) {
    json a = json::array();
    for (int v : s) a.push_back(v + 1);
    return a;
}

json partition_json(const Partition& p) {
    json a = json::array();
    for (const auto& c : p.classes) a.push_back(set1(c));
    return a;
}

json rat_json(const Rat& r) {
    return json{{"value", r.str()}, {"decimal", r.approx()}};
}

Hypergraph load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_hypergraph(ss.str());
}

Graph load_graph(const std::string& path) {
    Hypergraph h = load(path);
    if (h.r != 2) throw ParseError(path + ": expected a 2-uniform input");
    return hypergraph_to_graph(h);
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << bytes;
}

// Writes the hypergraph, fills the report digest, optionally renders DOT.
void emit_output(Report& rep, const Hypergraph& h, const std::string& out_path,
                 const std::string& dot_path) {
    std::string bytes = emit_hypergraph(h);
    rep.digest = fnv1a_hex(bytes);
    write_file(out_path, bytes);
    if (!dot_path.empty()) {
        if (h.r != 2) throw ParseError("--dot requires a 2-uniform result");
        write_file(dot_path, to_dot(hypergraph_to_graph(h)));
    }
}

std::string digest_of(const Hypergraph& h) { return fnv1a_hex(emit_hypergraph(h)); }

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw ParseError("cannot parse rational '" + s + "'");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"saturation calculator for uniform hypergraphs"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ----- gen ------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate named constructions");
    gen->require_subcommand(1);

    {
        auto* c = gen->add_subcommand("turan", "balanced complete l-partite r-graph");
        auto n = std::make_shared<int>(0);
        auto l = std::make_shared<int>(3);
        auto r = std::make_shared<int>(3);
        auto out = std::make_shared<std::string>();
        auto dot = std::make_shared<std::string>();
        c->add_option("--n", *n)->required();
        c->add_option("--l", *l)->required();
        c->add_option("--r", *r)->required();
        c->add_option("-o,--output", *out)->required();
        c->add_option("--dot", *dot);
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "gen turan";
            Hypergraph h = turan_hypergraph(*n, *l, *r);
            emit_output(rep, h, *out, *dot);
            rep.verdict = true;
            rep.exact["edges"] = h.edge_count();
            rep.exact["turan_count"] = turan_count(*n, *l, *r);
            exit_code = rep.finish();
        });
    }
    {
        auto* c = gen->add_subcommand("wheel", "5-wheel-like graph W_{l,k}");
        auto l = std::make_shared<int>(2);
        auto k = std::make_shared<int>(0);
        auto out = std::make_shared<std::string>();
        auto dot = std::make_shared<std::string>();
        c->add_option("--l", *l)->required();
        c->add_option("--k", *k)->required();
        c->add_option("-o,--output", *out)->required();
        c->add_option("--dot", *dot);
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "gen wheel";
            WheelGraph wg = wheel(*l, *k);
            emit_output(rep, graph_to_hypergraph(wg.graph), *out, *dot);
            rep.verdict = true;
            rep.exact["vertices"] = wg.graph.order();
            rep.exact["edges"] = wg.graph.size();
            rep.witness =
                json{{"top", vert1(wg.witness.top)},
                     {"bottom", set1({wg.witness.bottom.first, wg.witness.bottom.second})},
                     {"q1", set1(wg.witness.q1)},
                     {"q2", set1(wg.witness.q2)},
                     {"r_set", set1(wg.witness.r_set)}};
            exit_code = rep.finish();
        });
    }
    {
        auto* c = gen->add_subcommand("wheel-blowup", "tight co-degree 3-graph");
        auto l = std::make_shared<int>(3);
        auto n = std::make_shared<long long>(0);
        auto out = std::make_shared<std::string>();
        c->add_option("--l", *l)->required();
        c->add_option("--n", *n)->required();
        c->add_option("-o,--output", *out)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "gen wheel-blowup";
            Hypergraph h = wheel_blowup_3graph(*l, *n);
            emit_output(rep, h, *out, "");
            rep.verdict = true;
            rep.exact["edges"] = h.edge_count();
            auto prof = codegree_profile(h);
            rep.exact["min_positive_codegree"] =
                prof.min_positive ? json(*prof.min_positive) : json(nullptr);
            exit_code = rep.finish();
        });
    }
    {
        auto* c = gen->add_subcommand("pss", "recursive gadget, or the full host with --n");
        auto l = std::make_shared<int>(3);
        auto s = std::make_shared<int>(2);
        auto n = std::make_shared<long long>(-1);
        auto topfile = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto dot = std::make_shared<std::string>();
        c->add_option("--l", *l)->required();
        c->add_option("--s", *s)->required();
        c->add_option("--n", *n);
        c->add_option("--top", *topfile)->description("2-uniform graph on s vertices to overlay");
        c->add_option("-o,--output", *out)->required();
        c->add_option("--dot", *dot);
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "gen pss";
            LabeledGraph lg;
            if (*n < 0) {
                lg = pss_gls(*l, *s);
            } else {
                PSSParams pp;
                pp.l = *l;
                pp.s = *s;
                pp.n = *n;
                if (!topfile->empty()) pp.top_graph = load_graph(*topfile);
                lg = pss_full(pp);
            }
            emit_output(rep, graph_to_hypergraph(lg.graph), *out, *dot);
            rep.verdict = true;
            rep.exact["vertices"] = lg.graph.order();
            rep.exact["edges"] = lg.graph.size();
            rep.witness = json{{"classes", partition_json(lg.classes)}};
            exit_code = rep.finish();
        });
    }

    // ----- compute ---------------------------------------------------------
    auto* compute = app.add_subcommand("compute", "shadow/link/co-degree/clique calculators");
    compute->require_subcommand(1);

    {
        auto* c = compute->add_subcommand("shadow", "i-th shadow");
        auto in = std::make_shared<std::string>();
        auto depth = std::make_shared<int>(1);
        auto out = std::make_shared<std::string>();
        auto dot = std::make_shared<std::string>();
        c->add_option("-i,--input", *in)->required();
        c->add_option("--depth", *depth)->description("shadow index, default 1");
        c->add_option("-o,--output", *out)->required();
        c->add_option("--dot", *dot);
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "compute shadow";
            Hypergraph h = load(*in);
            rep.digest = digest_of(h);
            Hypergraph s = shadow(h, *depth);
            write_file(*out, emit_hypergraph(s));
            if (!dot->empty()) {
                if (s.r != 2) throw ParseError("--dot requires a 2-uniform result");
                write_file(*dot, to_dot(hypergraph_to_graph(s)));
            }
            rep.verdict = true;
            rep.exact["edges"] = s.edge_count();
            rep.exact["uniformity"] = s.r;
            exit_code = rep.finish();
        });
    }
    {
        auto* c = compute->add_subcommand("link", "link of a vertex");
        auto in = std::make_shared<std::string>();
        auto v = std::make_shared<int>(1);
        auto out = std::make_shared<std::string>();
        c->add_option("-i,--input", *in)->required();
        c->add_option("--v", *v)->required()->description("vertex, 1-indexed");
        c->add_option("-o,--output", *out)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "compute link";
            Hypergraph h = load(*in);
            rep.digest = digest_of(h);
            Hypergraph lk = link(h, *v - 1);
            write_file(*out, emit_hypergraph(lk));
            rep.verdict = true;
            rep.exact["edges"] = lk.edge_count();
            rep.exact["degree"] = degree(h, *v - 1);
            exit_code = rep.finish();
        });
    }
    {
        auto* c = compute->add_subcommand("codegree", "positive co-degree profile");
        auto in = std::make_shared<std::string>();
        c->add_option("-i,--input", *in)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "compute codegree";
            Hypergraph h = load(*in);
            rep.digest = digest_of(h);
            CodegreeProfile p = codegree_profile(h);
            rep.verdict = true;
            rep.exact["covered_sets"] = p.pairs.size();
            rep.exact["min_positive"] = p.min_positive ? json(*p.min_positive) : json(nullptr);
            std::set<long long> spectrum;
            for (const auto& [k, cnt] : p.pairs) {
                (void)k;
                spectrum.insert(cnt);
            }
            rep.exact["spectrum"] = spectrum;
            exit_code = rep.finish();
        });
    }
    {
        auto* c = compute->add_subcommand("cliques", "exact t-clique count of a graph");
        auto in = std::make_shared<std::string>();
        auto t = std::make_shared<int>(3);
        c->add_option("-i,--input", *in)->required();
        c->add_option("--t", *t)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "compute cliques";
            Hypergraph h = load(*in);
            rep.digest = digest_of(h);
            Graph g = hypergraph_to_graph(h);
            rep.verdict = true;
            rep.exact["count"] = count_cliques(g, *t);
            exit_code = rep.finish();
        });
    }
    {
        auto* c = compute->add_subcommand("tplus", "minimum triangle count over covered edges");
        auto in = std::make_shared<std::string>();
        c->add_option("-i,--input", *in)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "compute tplus";
            Hypergraph h = load(*in);
            rep.digest = digest_of(h);
            auto tp = t_plus(hypergraph_to_graph(h));
            rep.verdict = true;
            rep.exact["t_plus"] = tp ? json(*tp) : json(nullptr);
            exit_code = rep.finish();
        });
    }

    // ----- check -----------------------------------------------------------
    auto* check = app.add_subcommand("check", "predicates with witnesses");
    check->require_subcommand(1);

    {
        auto* c = check->add_subcommand("free", "no (l+1)-set has all pairs covered");
        auto in = std::make_shared<std::string>();
        auto l = std::make_shared<int>(3);
        c->add_option("-i,--input", *in)->required();
        c->add_option("--l", *l)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "check free";
            Hypergraph h = load(*in);
            rep.digest = digest_of(h);
            auto member = contains_member(h, *l);
            rep.verdict = !member.has_value();
            if (member) rep.witness = json{{"member_set", set1(*member)}};
            exit_code = rep.finish();
        });
    }
    {
        auto* c = check->add_subcommand("saturated", "free and every edge addition violates");
        auto in = std::make_shared<std::string>();
        auto l = std::make_shared<int>(3);
        auto method = std::make_shared<std::string>("both");
        c->add_option("-i,--input", *in)->required();
        c->add_option("--l", *l)->required();
        c->add_option("--method", *method)
            ->check(CLI::IsMember({"direct", "shadow", "both"}))
            ->description("direct, shadow, or both (default; cross-validates)");
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "check saturated";
            Hypergraph h = load(*in);
            rep.digest = digest_of(h);
            std::optional<SaturationReport> direct, shad;
            std::string mode = *method;
            if (h.r == 2) {
                if (mode == "shadow")
                    throw ParseError("--method shadow requires uniformity at least 3");
                mode = "direct";
            }
            if (mode == "direct" || mode == "both") direct = is_saturated_direct(h, *l);
            if (mode == "shadow" || mode == "both") shad = is_saturated_via_shadow(h, *l);
            if (direct && shad &&
                (direct->is_saturated != shad->is_saturated || direct->is_free != shad->is_free))
                throw std::logic_error("saturation checkers disagree; this is a bug");
            const SaturationReport& rr = direct ? *direct : *shad;
            rep.verdict = rr.is_saturated;
            rep.exact["is_free"] = rr.is_free;
            rep.exact["method"] = mode;
            if (rr.violating_member)
                rep.witness = json{{"member_set", set1(*rr.violating_member)}};
            if (rr.non_saturating_edge)
                rep.witness = json{{"non_saturating_edge", set1(*rr.non_saturating_edge)}};
            exit_code = rep.finish();
        });
    }
    {
        auto* c = check->add_subcommand("kr-maximal", "K_r-maximal K_{l+1}-free graph");
        auto in = std::make_shared<std::string>();
        auto r = std::make_shared<int>(3);
        auto l = std::make_shared<int>(3);
        c->add_option("-i,--input", *in)->required();
        c->add_option("--r", *r)->required();
        c->add_option("--l", *l)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "check kr-maximal";
            Hypergraph h = load(*in);
            rep.digest = digest_of(h);
            KrMaximalReport km = is_kr_maximal_free(hypergraph_to_graph(h), *r, *l);
            rep.verdict = km.ok();
            rep.exact["is_free"] = km.is_free;
            if (km.clique_witness) rep.witness = json{{"clique", set1(*km.clique_witness)}};
            if (km.bad_rset) rep.witness = json{{"non_saturating_rset", set1(*km.bad_rset)}};
            exit_code = rep.finish();
        });
    }
    {
        auto* c = check->add_subcommand("partite", "witness partition into at most l classes");
        auto in = std::make_shared<std::string>();
        auto l = std::make_shared<int>(3);
        c->add_option("-i,--input", *in)->required();
        c->add_option("--l", *l)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "check partite";
            Hypergraph h = load(*in);
            rep.digest = digest_of(h);
            auto p = is_l_partite(h, *l);
            rep.verdict = p.has_value();
            if (p) rep.witness = json{{"partition", partition_json(*p)}};
            exit_code = rep.finish();
        });
    }
    {
        auto* c = check->add_subcommand(
            "codegree", "co-degree stability instance: saturated with min positive "
                        "co-degree above f(l)n must be l-partite");
        auto in = std::make_shared<std::string>();
        auto l = std::make_shared<int>(3);
        c->add_option("-i,--input", *in)->required();
        c->add_option("--l", *l)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "check codegree";
            Hypergraph h = load(*in);
            if (h.r != 3) throw ParseError("check codegree expects a 3-uniform input");
            rep.digest = digest_of(h);
            CodegreeProfile p = codegree_profile(h);
            bool saturated = is_saturated_via_shadow(h, *l).is_saturated;
            Rat threshold = f_threshold(*l) * Rat(h.n);
            bool above = p.min_positive && Rat(*p.min_positive) > threshold;
            auto partition = is_l_partite(h, *l);
            rep.verdict = !(saturated && above) || partition.has_value();
            rep.exact["is_saturated"] = saturated;
            rep.exact["min_positive"] = p.min_positive ? json(*p.min_positive) : json(nullptr);
            rep.exact["threshold"] = rat_json(threshold);
            rep.exact["is_l_partite"] = partition.has_value();
            if (partition) rep.witness = json{{"partition", partition_json(*partition)}};
            exit_code = rep.finish();
        });
    }
    {
        auto* c = check->add_subcommand("fisher-ryan", "clique chain inequality");
        auto in = std::make_shared<std::string>();
        auto l = std::make_shared<int>(3);
        c->add_option("-i,--input", *in)->required();
        c->add_option("--l", *l)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "check fisher-ryan";
            Hypergraph h = load(*in);
            rep.digest = digest_of(h);
            auto [counts, ok] = fisher_ryan_check(hypergraph_to_graph(h), *l);
            rep.verdict = ok;
            rep.exact["counts"] = counts.counts;
            exit_code = rep.finish();
        });
    }
    {
        auto* c = check->add_subcommand(
            "aes", "minimum-degree instance: free with degree above (3l-4)/(3l-1)n "
                   "must be l-partite");
        auto in = std::make_shared<std::string>();
        auto l = std::make_shared<int>(2);
        c->add_option("-i,--input", *in)->required();
        c->add_option("--l", *l)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "check aes";
            Hypergraph h = load(*in);
            rep.digest = digest_of(h);
            Graph g = hypergraph_to_graph(h);
            rep.verdict = verify_aes_instance(g, *l);
            rep.exact["min_degree"] = g.min_degree();
            rep.exact["threshold"] = rat_json(aes_threshold(*l) * Rat(g.order()));
            exit_code = rep.finish();
        });
    }

    // ----- search ----------------------------------------------------------
    auto* search = app.add_subcommand("search", "exhaustive and structural searches");
    search->require_subcommand(1);

    {
        auto* c = search->add_subcommand("turan", "scan all r-graphs for the family-free maximum");
        auto n = std::make_shared<int>(5);
        auto l = std::make_shared<int>(3);
        auto r = std::make_shared<int>(3);
        auto unique = std::make_shared<bool>(false);
        auto threads = std::make_shared<int>(1);
        c->add_option("--n", *n)->required();
        c->add_option("--l", *l)->required();
        c->add_option("--r", *r)->required();
        c->add_flag("--unique", *unique, "collect extremal instances up to isomorphism");
        c->add_option("--threads", *threads);
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "search turan";
            std::string params = "turan n=" + std::to_string(*n) + " l=" + std::to_string(*l) +
                                 " r=" + std::to_string(*r);
            rep.digest = fnv1a_hex(params);
            SearchProgress progress;
            if (binomial(*n, *r) >= 16)
                progress = [](int done, int total, long long leaves) {
                    std::cerr << "progress: range " << done << "/" << total << ", "
                              << leaves << " free instances so far\n";
                };
            TuranSearchResult res =
                brute_force_turan(*n, *l, *r, *unique, *threads, brute_guard_default(), progress);
            long long expect = turan_count(*n, *l, *r);
            rep.exact["max_edges"] = res.max_edges;
            if (*unique) rep.exact["classes"] = res.extremal_canonical_forms.size();
            rep.exact["count_checked"] = res.count_checked;
            rep.exact["turan_count"] = expect;
            rep.verdict = res.max_edges == expect &&
                          (!*unique || res.extremal_canonical_forms.size() == 1);
            exit_code = rep.finish();
        });
    }
    {
        auto* c = search->add_subcommand("wheel", "embed some 5-wheel-like subgraph");
        auto in = std::make_shared<std::string>();
        auto l = std::make_shared<int>(2);
        c->add_option("-i,--input", *in)->required();
        c->add_option("--l", *l)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "search wheel";
            Hypergraph h = load(*in);
            rep.digest = digest_of(h);
            auto w = find_wheel_subgraph(hypergraph_to_graph(h), *l);
            rep.verdict = w.has_value();
            if (w) {
                rep.witness = json{{"k", w->k},
                                   {"top", vert1(w->top)},
                                   {"bottom", set1({w->bottom.first, w->bottom.second})},
                                   {"q1", set1(w->q1)},
                                   {"q2", set1(w->q2)},
                                   {"r_set", set1(w->r_set)}};
            }
            exit_code = rep.finish();
        });
    }
    {
        auto* c = search->add_subcommand("max-multipartite",
                                         "largest induced complete multipartite subgraph");
        auto in = std::make_shared<std::string>();
        auto l = std::make_shared<int>(3);
        auto guard = std::make_shared<unsigned long long>(
            static_cast<unsigned long long>(bnb_guard_default()));
        c->add_option("-i,--input", *in)->required();
        c->add_option("--l", *l)->required();
        c->add_option("--guard", *guard)->description("node budget before giving up");
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "search max-multipartite";
            Hypergraph h = load(*in);
            rep.digest = digest_of(h);
            MaxMultipartiteResult res = max_complete_multipartite_induced(
                hypergraph_to_graph(h), *l, *guard, [](unsigned long long nodes, int best) {
                    std::cerr << "progress: " << nodes << " nodes, best " << best << "\n";
                });
            rep.exact["nodes"] = res.nodes;
            rep.exact["best_found"] = res.size;
            if (!res.conclusive) {
                rep.verdict = "inconclusive";
            } else {
                rep.verdict = true;
                rep.exact["size"] = res.size;
                rep.witness = json{{"vertices", set1(res.vertices)},
                                   {"partition", partition_json(res.classes)}};
            }
            exit_code = rep.finish();
        });
    }

    // ----- peel ------------------------------------------------------------
    {
        auto* c = app.add_subcommand("peel", "iterated small-vertex deletion");
        auto in = std::make_shared<std::string>();
        auto l = std::make_shared<int>(2);
        auto eta = std::make_shared<std::string>("0");
        auto out = std::make_shared<std::string>();
        c->add_option("-i,--input", *in)->required();
        c->add_option("--l", *l)->required();
        c->add_option("--eta", *eta)->required()->description("rational, e.g. 1/100");
        c->add_option("-o,--output", *out)->description("write the remainder graph");
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "peel";
            Hypergraph h = load(*in);
            rep.digest = digest_of(h);
            PeelResult res = peel_small_vertices(hypergraph_to_graph(h), *l, parse_rat(*eta));
            if (!out->empty())
                write_file(*out, emit_hypergraph(graph_to_hypergraph(res.remainder)));
            rep.verdict = true;
            rep.exact["deleted_count"] = res.deleted.size();
            rep.exact["remainder_order"] = res.remainder.order();
            rep.exact["remainder_min_degree"] = res.remainder.min_degree();
            rep.exact["threshold"] = rat_json(Rat(*l - 1, *l) - res.eta);
            rep.witness = json{{"deleted", set1(res.deleted)}, {"kept", set1(res.kept)}};
            exit_code = rep.finish();
        });
    }

    // ----- bounds ----------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "closed-form thresholds, exact rationals");
    bounds->require_subcommand(1);

    {
        auto* c = bounds->add_subcommand("f", "positive co-degree threshold");
        auto l = std::make_shared<int>(3);
        c->add_option("--l", *l)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "bounds f";
            rep.digest = fnv1a_hex("f l=" + std::to_string(*l));
            rep.verdict = true;
            rep.exact = rat_json(f_threshold(*l));
            exit_code = rep.finish();
        });
    }
    {
        auto* c = bounds->add_subcommand("aes", "minimum-degree threshold");
        auto l = std::make_shared<int>(2);
        c->add_option("--l", *l)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "bounds aes";
            rep.digest = fnv1a_hex("aes l=" + std::to_string(*l));
            rep.verdict = true;
            rep.exact = rat_json(aes_threshold(*l));
            exit_code = rep.finish();
        });
    }
    {
        auto* c = bounds->add_subcommand("epsilon", "degree-stability slack");
        auto l = std::make_shared<int>(3);
        auto r = std::make_shared<int>(3);
        c->add_option("--l", *l)->required();
        c->add_option("--r", *r)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "bounds epsilon";
            rep.digest = fnv1a_hex("epsilon l=" + std::to_string(*l) + " r=" + std::to_string(*r));
            rep.verdict = true;
            rep.exact = rat_json(degree_stability_epsilon(*l, *r));
            exit_code = rep.finish();
        });
    }
    {
        auto* c = bounds->add_subcommand("e1", "wheel edge count");
        auto l = std::make_shared<int>(3);
        auto k = std::make_shared<int>(0);
        c->add_option("--l", *l)->required();
        c->add_option("--k", *k)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "bounds e1";
            rep.digest = fnv1a_hex("e1 l=" + std::to_string(*l) + " k=" + std::to_string(*k));
            rep.verdict = true;
            rep.exact = rat_json(Rat(e1_size(*l, *k)));
            exit_code = rep.finish();
        });
    }
    {
        auto* c = bounds->add_subcommand("e2", "wheel crossing-edge count");
        auto l = std::make_shared<int>(3);
        auto k = std::make_shared<int>(0);
        c->add_option("--l", *l)->required();
        c->add_option("--k", *k)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "bounds e2";
            rep.digest = fnv1a_hex("e2 l=" + std::to_string(*l) + " k=" + std::to_string(*k));
            rep.verdict = true;
            rep.exact = rat_json(Rat(e2_size(*l, *k)));
            exit_code = rep.finish();
        });
    }
    {
        auto* c = bounds->add_subcommand("turan-count", "edge count of the balanced r-graph");
        auto n = std::make_shared<int>(5);
        auto l = std::make_shared<int>(3);
        auto r = std::make_shared<int>(3);
        c->add_option("--n", *n)->required();
        c->add_option("--l", *l)->required();
        c->add_option("--r", *r)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "bounds turan-count";
            rep.digest = fnv1a_hex("turan-count n=" + std::to_string(*n) + " l=" +
                                   std::to_string(*l) + " r=" + std::to_string(*r));
            rep.verdict = true;
            rep.exact = rat_json(Rat(turan_count(*n, *l, *r)));
            exit_code = rep.finish();
        });
    }
    {
        auto* c =
            bounds->add_subcommand("turan-gap", "balanced count against the polynomial bound");
        auto n = std::make_shared<long long>(5);
        auto l = std::make_shared<int>(3);
        auto r = std::make_shared<int>(3);
        c->add_option("--n", *n)->required();
        c->add_option("--l", *l)->required();
        c->add_option("--r", *r)->required();
        c->callback([=, &exit_code] {
            Report rep;
            rep.command = "bounds turan-gap";
            rep.digest = fnv1a_hex("turan-gap n=" + std::to_string(*n) + " l=" +
                                   std::to_string(*l) + " r=" + std::to_string(*r));
            bool ok = turan_lower_bound_check(*n, *l, *r);
            rep.verdict = ok;
            rep.exact["gap"] = (Rat(turan_count(static_cast<int>(*n), *l, *r)) -
                                Rat(binomial(*l, *r)) * rat_pow(Rat(*n, *l), *r))
                                   .str();
            Rat npow(1);
            for (int i = 0; i < *r - 2; ++i) npow = npow * Rat(*n);
            rep.exact["bound"] =
                (-Rat(static_cast<i64>(*l) * *l) *
                 Rat(checked_i64(checked_pow_u128(*r, *r + 1, "bounds"), "bounds")) * npow)
                    .str();
            exit_code = rep.finish();
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const GuardError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
