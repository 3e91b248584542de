#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fourpath/battery.hpp"
#include "fourpath/fourpath.hpp"
#include "fourpath/jsonio.hpp"

namespace fp = fourpath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct GraphInput {
    fp::Graph graph;
    std::optional<fp::NamedGraph> named;
    std::string description;

    fp::Labeler labeler() const {
        if (named) return fp::Labeler::for_named(*named);
        return {};
    }
    int vertex_from_label(const std::string& label) const {
        if (named) return named->label_index(label);
        const int v = std::stoi(label);
        if (v < 1 || v > graph.vertex_count())
            throw fp::Error("vertex label out of range: " + label);
        return v - 1;
    }
};

// Inputs: catalog id, inline graph6 string, or a file (graph6 or edge list).
GraphInput resolve_graph(const std::string& graph_arg, const std::string& in_path) {
    if (!graph_arg.empty()) {
        if (auto named = fp::catalog_lookup(graph_arg))
            return {named->graph, named, graph_arg};
        try {
            return {fp::from_graph6(graph_arg), std::nullopt, "graph6:" + graph_arg};
        } catch (const fp::Error&) {
            throw fp::Error("--graph is neither a catalog id nor graph6: " + graph_arg);
        }
    }
    if (in_path.empty()) throw fp::Error("provide --graph or --in");
    std::ifstream in(in_path);
    if (!in) throw fp::Error("cannot open " + in_path);
    std::string head;
    std::getline(in, head);
    in.clear();
    in.seekg(0);
    const bool edge_list = !head.empty() && (head[0] >= '0' && head[0] <= '9');
    if (edge_list) {
        std::ostringstream text;
        text << in.rdbuf();
        return {fp::from_edge_list_text(text.str()), std::nullopt, in_path};
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        return {fp::from_graph6(line), std::nullopt, in_path};
    }
    throw fp::Error("no graph found in " + in_path);
}

std::string set_str(const fp::VertexSet& vs, const fp::Labeler& lab) {
    std::string out = "{";
    bool first = true;
    for (int v : vs.to_vector()) {
        if (!first) out += ",";
        out += lab(v);
        first = false;
    }
    return out + "}";
}

void write_json(const std::string& path, const fp::Json& j) {
    std::ofstream out(path);
    if (!out) throw fp::Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::vector<fp::Graph> patterns_from_csv(const std::string& csv) {
    std::vector<fp::Graph> out;
    std::istringstream ss(csv);
    std::string id;
    while (std::getline(ss, id, ','))
        if (!id.empty()) out.push_back(fp::catalog_get(id).graph);
    return out;
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<fp::LemmaId> lemmas_from_arg(const std::string& arg, bool sweep_defaults) {
    std::vector<fp::LemmaId> out;
    if (arg == "all") {
        for (const auto& info : fp::lemma_table())
            if (!sweep_defaults || info.in_small_sweep) out.push_back(info.id);
        return out;
    }
    for (const auto& name : split_csv(arg)) out.push_back(fp::lemma_from_name(name));
    return out;
}

bool is_expected_refutation(const fp::Graph& g, fp::LemmaId lemma) {
    for (const auto& entry : fp::default_expected_refutations()) {
        if (entry.lemma != lemma) continue;
        const fp::Graph target = fp::catalog_get(entry.graph_id).graph;
        if (g.vertex_count() == target.vertex_count() &&
            fp::canonical_form(g, 16) == fp::canonical_form(target, 16))
            return true;
    }
    return false;
}

int cmd_catalog(const std::string& action, const std::string& id) {
    if (action == "list") {
        for (const auto& known : fp::catalog_ids()) std::cout << known << "\n";
        return kExitOk;
    }
    const fp::NamedGraph g = fp::catalog_get(id);
    const fp::Labeler lab = fp::Labeler::for_named(g);
    std::cout << g.id << ": " << g.graph.vertex_count() << " vertices, "
              << g.graph.edges().size() << " edges\n";
    std::cout << "edges:";
    for (const auto& [u, v] : g.graph.edges()) std::cout << " " << lab(u) << lab(v);
    std::cout << "\n";
    const int n = g.graph.vertex_count();
    for (int d = 0; d < n; ++d) {
        fp::VertexSet of_degree(n);
        for (int v = 0; v < n; ++v)
            if (g.graph.degree(v) == d) of_degree.add(v);
        if (!of_degree.empty())
            std::cout << "degree-" << d << " set " << set_str(of_degree, lab) << "\n";
    }
    std::cout << "graph6: " << fp::to_graph6(g.graph) << "\n";
    return kExitOk;
}

int cmd_recognize(const GraphInput& input, const std::string& out_path) {
    const fp::Graph& g = input.graph;
    const fp::Labeler lab = input.labeler();
    const fp::Graph gc = fp::complement(g);
    fp::Json j;
    j["input"] = input.description;
    j["graph"] = fp::graph_json(g, lab);

    const fp::Graph p5 = fp::make_p5().graph;
    const bool p5_free = !fp::contains_induced(g, p5);
    const bool p5c_free = !fp::contains_induced(g, fp::complement(p5));
    j["p5_free"] = p5_free;
    j["p5c_free"] = p5c_free;
    std::cout << "p5_free: " << (p5_free ? "yes" : "no") << "\n";
    std::cout << "p5c_free: " << (p5c_free ? "yes" : "no") << "\n";

    const auto split = fp::find_split_partition(g);
    j["split"] = split.has_value();
    if (split) {
        j["split_partition"] = fp::cert_json(fp::LemmaCert{*split}, lab);
        std::cout << "split: yes  clique=" << set_str(split->K, lab)
                  << " stable=" << set_str(split->S, lab) << "\n";
    } else {
        std::cout << "split: no\n";
    }

    const auto homset = fp::find_homogeneous_set(g);
    j["prime"] = fp::is_prime(g);
    j["homogeneous_set"] = nullptr;
    if (homset) j["homogeneous_set"] = fp::vertices_json(homset->X, lab);
    std::cout << "prime: " << (fp::is_prime(g) ? "yes" : "no") << "\n";
    if (homset)
        std::cout << "homogeneous_set: " << set_str(homset->X, lab) << "\n";
    else
        std::cout << "homogeneous_set: none\n";

    const fp::VertexSet simp = fp::simplicial_vertices(g);
    const fp::VertexSet anti = fp::antisimplicial_vertices(g);
    j["simplicial"] = fp::vertices_json(simp, lab);
    j["antisimplicial"] = fp::vertices_json(anti, lab);
    std::cout << "simplicial: " << set_str(simp, lab) << "\n";
    std::cout << "antisimplicial: " << set_str(anti, lab) << "\n";

    for (const bool in_co : {false, true}) {
        const auto join = fp::find_one_join(in_co ? gc : g);
        const std::string key = in_co ? "one_join_complement" : "one_join";
        j[key] = nullptr;
        if (join) j[key] = fp::cert_json(fp::LemmaCert{*join}, lab);
        std::cout << key << ": ";
        if (join)
            std::cout << "A=" << set_str(join->A, lab) << " B=" << set_str(join->B, lab)
                      << " C=" << set_str(join->C, lab) << " D=" << set_str(join->D, lab)
                      << "\n";
        else
            std::cout << "none\n";
    }

    j["half_graph"] = fp::is_half_graph(g);
    j["co_half_graph"] = fp::is_half_graph(gc);
    std::cout << "half_graph: " << (fp::is_half_graph(g) ? "yes" : "no") << "\n";
    std::cout << "co_half_graph: " << (fp::is_half_graph(gc) ? "yes" : "no") << "\n";

    const bool c5_iso = fp::are_isomorphic(g, fp::make_c5().graph);
    j["isomorphic_c5"] = c5_iso;
    std::cout << "isomorphic_c5: " << (c5_iso ? "yes" : "no") << "\n";

    if (!out_path.empty()) write_json(out_path, j);
    return kExitOk;
}

int cmd_find(const std::string& what, const GraphInput& input,
             const std::string& vertex_label, const std::string& pattern_id,
             bool use_complement, const std::string& out_path) {
    const fp::Labeler lab = input.labeler();
    const fp::Graph g = use_complement ? fp::complement(input.graph) : input.graph;
    fp::Json j;
    j["what"] = what;
    j["input"] = input.description;
    j["in_complement"] = use_complement;

    if (what == "simplicial" || what == "antisimplicial") {
        if (vertex_label.empty()) throw fp::Error("find " + what + " needs --vertex");
        const int v = input.vertex_from_label(vertex_label);
        const int found = what == "simplicial"
                              ? fp::find_simplicial_from_antisimplicial(g, v)
                              : fp::find_antisimplicial_from_simplicial(g, v);
        j["from"] = lab(v);
        j["vertex"] = lab(found);
        std::cout << what << ": " << lab(found) << "\n";
    } else if (what == "homogeneous-set") {
        const auto found = fp::find_homogeneous_set(g);
        j["found"] = found.has_value();
        if (found) {
            j["X"] = fp::vertices_json(found->X, lab);
            std::cout << "homogeneous set: " << set_str(found->X, lab) << "\n";
        } else {
            std::cout << "homogeneous set: none\n";
        }
    } else if (what == "split") {
        const auto found = fp::find_split_partition(g);
        j["found"] = found.has_value();
        if (found) {
            j["certificate"] = fp::cert_json(fp::LemmaCert{*found}, lab);
            std::cout << "split: clique=" << set_str(found->K, lab)
                      << " stable=" << set_str(found->S, lab) << "\n";
        } else {
            std::cout << "split: none\n";
        }
    } else if (what == "one-join") {
        const auto found = fp::find_one_join(g);
        j["found"] = found.has_value();
        if (found) {
            j["certificate"] = fp::cert_json(fp::LemmaCert{*found}, lab);
            std::cout << "one-join: A=" << set_str(found->A, lab)
                      << " B=" << set_str(found->B, lab) << " C=" << set_str(found->C, lab)
                      << " D=" << set_str(found->D, lab) << "\n";
        } else {
            std::cout << "one-join: none\n";
        }
    } else if (what == "half-graph") {
        const auto found = fp::find_half_graph_cert(g);
        j["found"] = found.has_value();
        if (found) {
            j["certificate"] = fp::cert_json(fp::LemmaCert{*found}, lab);
            std::cout << "half graph of order " << found->k << "\n";
        } else {
            std::cout << "half graph: no\n";
        }
    } else if (what == "grow-prime") {
        if (pattern_id.empty()) throw fp::Error("find grow-prime needs --pattern");
        const fp::Graph h = fp::catalog_get(pattern_id).graph;
        const auto found = fp::grow_prime_subgraph(g, h);
        j["found"] = found.has_value();
        if (found) {
            j["copy"] = fp::embedding_json(found->first, lab);
            j["added"] = lab(found->second);
            std::cout << "prime extension: copy=" << set_str([&] {
                fp::VertexSet vs(g.vertex_count());
                for (int x : found->first.map) vs.add(x);
                return vs;
            }(), lab) << " plus " << lab(found->second) << "\n";
        }
    } else if (what == "extensions") {
        if (!input.named) throw fp::Error("find extensions needs --graph c5 or --graph p4");
        const auto cases = fp::one_vertex_extensions_of(*input.named);
        fp::Json arr = fp::Json::array();
        int prime_count = 0;
        for (const auto& c : cases) {
            arr.push_back(fp::extension_case_json(c, lab));
            if (c.prime) ++prime_count;
            std::cout << "attach " << set_str(c.attachment, lab) << ": "
                      << (c.prime ? "prime" : "not prime") << "; contains:";
            if (c.has_p5) std::cout << " p5";
            if (c.has_p5c) std::cout << " p5c";
            if (c.has_c5) std::cout << " c5";
            if (c.has_bull) std::cout << " bull";
            std::cout << "\n";
        }
        j["cases"] = arr;
        std::cout << cases.size() << " cases, " << prime_count << " prime\n";
    } else {
        throw fp::Error("unknown --what: " + what +
                        " (simplicial, antisimplicial, homogeneous-set, split, one-join, "
                        "half-graph, grow-prime, extensions)");
    }
    if (!out_path.empty()) write_json(out_path, j);
    return kExitOk;
}

int cmd_check_graph(const std::string& lemma_arg, const GraphInput& input,
                    const fp::CheckOptions& opts, const std::string& out_path) {
    const std::vector<fp::LemmaId> lemmas = lemmas_from_arg(lemma_arg, false);
    const fp::Labeler lab = input.labeler();
    fp::Json arr = fp::Json::array();
    int unexpected = 0;
    for (const fp::LemmaId id : lemmas) {
        const fp::Verdict v = fp::check_lemma(id, input.graph, opts);
        arr.push_back(fp::verdict_json(v, lab));
        std::cout << fp::lemma_info(id).name << ": " << fp::status_name(v.status);
        if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
        if (v.status == fp::LemmaStatus::fails) {
            if (is_expected_refutation(input.graph, id))
                std::cout << " [expected refutation]";
            else
                ++unexpected;
        }
        std::cout << "\n";
    }
    if (!out_path.empty()) write_json(out_path, arr);
    return unexpected == 0 ? kExitOk : kExitViolation;
}

int report_sweep(const fp::SweepReport& report, const std::string& out_path) {
    for (const auto& [n, total] : report.graphs_per_n) {
        uint64_t fails = 0, capped = 0;
        const auto& slots = report.counts.at(n);
        for (const auto& lc : slots) {
            fails += lc.fails;
            capped += lc.capped;
        }
        std::cout << "n=" << n << ": " << total << " graphs, " << fails << " fails";
        if (capped) std::cout << ", " << capped << " capped";
        std::cout << "\n";
    }
    std::cout << "total graphs: " << report.total_graphs << "\n";
    for (const auto& er : report.expected)
        std::cout << "expected refutation " << fp::lemma_info(er.entry.lemma).name
                  << " on " << er.entry.graph_id << ": "
                  << (er.observed ? "confirmed" : "not observed") << "\n";
    std::cout << "unexpected fails: " << report.unexpected_fails << "\n";
    for (const auto& d : report.diagnostics)
        std::cerr << "warning: line " << d.line_number << ": " << d.message << "\n";
    if (!out_path.empty()) write_json(out_path, fp::sweep_report_json(report));
    return report.unexpected_fails == 0 ? kExitOk : kExitViolation;
}

int cmd_enumerate(int n_min, int n_max, const std::string& free_csv,
                  const std::string& out_path, bool allow_n10, bool count_only) {
    if (n_max == 10 && !allow_n10)
        throw fp::Error("n=10 streams ~12M classes; pass --allow-n10 to confirm");
    if (n_max == 10)
        std::cerr << "warning: n=10 holds millions of classes; expect a long run "
                     "and large output\n";
    const auto patterns = patterns_from_csv(free_csv);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw fp::Error("cannot write " + out_path);
        out = &file;
    }
    uint64_t count = 0;
    for (int n = n_min; n <= n_max; ++n) {
        fp::for_each_class(n, patterns, [&](const fp::Graph& g) {
            if (!count_only) (*out) << fp::to_graph6(g) << "\n";
            ++count;
        });
    }
    std::cerr << count << " classes\n";
    if (count_only) std::cout << count << "\n";
    return kExitOk;
}

int cmd_decompose(const GraphInput& input, const std::string& out_path) {
    const fp::Labeler lab = input.labeler();
    const auto tree = fp::decompose_bullfree(input.graph);
    const fp::Graph rebuilt = fp::verify_decomposition(*tree);
    if (!(rebuilt == input.graph))
        throw fp::TheoremViolation("decomposition does not recompose the input");
    int leaves = 0, subs = 0;
    const std::function<void(const fp::DecompositionNode&)> walk =
        [&](const fp::DecompositionNode& node) {
            if (node.kind == fp::DecompositionNode::Kind::leaf) {
                ++leaves;
            } else {
                ++subs;
                walk(*node.quotient);
                walk(*node.expansion);
            }
        };
    walk(*tree);
    std::cout << "decomposition: " << leaves << " leaves, " << subs
              << " substitution nodes\n";
    std::cout << "recomposes exactly: yes\n";
    if (!out_path.empty()) write_json(out_path, fp::decomposition_json(*tree, lab));
    return kExitOk;
}

int cmd_counterexamples(const std::string& out_path) {
    fp::Json j;
    int failures = 0;
    for (const auto& [title, battery] :
         {std::pair{"fig2", fp::fig2_battery()}, std::pair{"fig3", fp::fig3_battery()}}) {
        std::cout << "== " << title << " ==\n";
        fp::Json arr = fp::Json::array();
        for (const auto& c : battery) {
            std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.name;
            if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
            if (!c.pass) ++failures;
            fp::Json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            jc["detail"] = c.detail;
            arr.push_back(jc);
        }
        j[title] = arr;
    }
    j["failing_subchecks"] = failures;
    if (failures == 0) {
        std::cout << "all subchecks pass\n";
    } else {
        std::cout << failures << " subcheck(s) fail; the drawn 10-vertex figure does "
                     "not satisfy its full published battery (its complement admits a "
                     "1-join)\n";
    }
    if (!out_path.empty()) write_json(out_path, j);
    return failures == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recognizers, certificate finders, and theorem checks for "
                 "{P5, coP5}-free graphs"};
    app.require_subcommand(1);

    std::string graph_arg, in_path, out_path, lemma_arg = "all";
    std::string vertex_label, pattern_id, what, free_csv;
    bool use_complement = false, strict = false, allow_n10 = false, count_only = false;
    int n_max = 0, n_min = 1;
    fp::CheckOptions opts;
    int jobs = 1, exemplar_limit = 4;

    auto add_graph_opts = [&](CLI::App* sub) {
        sub->add_option("--graph", graph_arg, "catalog id or graph6 string");
        sub->add_option("--in", in_path, "input file (graph6 or 1-based edge list)");
    };
    auto add_out_opt = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "write a JSON report here");
    };
    auto add_tuning_opts = [&](CLI::App* sub) {
        sub->add_option("--seed", opts.seed, "seed for sampled configurations")
            ->envname("FOURPATH_SEED");
        sub->add_option("--iso-cap", opts.iso_cap, "isomorphism search size cap")
            ->envname("FOURPATH_ISO_CAP");
        sub->add_option("--onejoin-cap", opts.onejoin_cap, "1-join search size cap")
            ->envname("FOURPATH_ONEJOIN_CAP");
        sub->add_option("--samples", opts.sample_count,
                        "sampled configurations per graph for quantified checks")
            ->envname("FOURPATH_SAMPLES");
    };
    auto* cat = app.add_subcommand("catalog", "list or show the named graphs");
    std::string cat_action = "list", cat_id;
    cat->add_option("action", cat_action)->check(CLI::IsMember({"list", "show"}));
    cat->add_option("id", cat_id, "catalog id for show");

    auto* rec = app.add_subcommand("recognize", "run every recognizer on one graph");
    add_graph_opts(rec);
    add_out_opt(rec);

    auto* fnd = app.add_subcommand("find", "run one certificate finder");
    fnd->add_option("--what", what, "which finder")->required();
    add_graph_opts(fnd);
    add_out_opt(fnd);
    fnd->add_option("--vertex", vertex_label, "starting vertex label");
    fnd->add_option("--pattern", pattern_id, "catalog id of the subgraph to grow");
    fnd->add_flag("--complement", use_complement, "search in the complement");

    auto* chk = app.add_subcommand("check", "check lemmas on a graph or a range");
    chk->add_option("--lemma", lemma_arg, "lemma name, comma list, or 'all'");
    add_graph_opts(chk);
    add_out_opt(chk);
    add_tuning_opts(chk);
    chk->add_option("--n-max", n_max, "sweep all classes up to this size")
        ->check(CLI::Range(1, 10));
    chk->add_option("--max-n", n_max, "alias for --n-max");
    chk->add_option("--n", n_max, "alias for --n-max");
    chk->add_option("--free", free_csv, "catalog ids to exclude as induced subgraphs");
    chk->add_option("--jobs", jobs, "worker threads")->envname("FOURPATH_JOBS");

    auto* enu = app.add_subcommand("enumerate", "stream one graph per isomorphism class");
    enu->add_option("--n-max", n_max, "largest vertex count")
        ->check(CLI::Range(1, 10))
        ->required(false);
    enu->add_option("--max-n", n_max, "alias for --n-max");
    enu->add_option("--n", n_max, "alias for --n-max");
    enu->add_option("--n-min", n_min, "smallest vertex count")->check(CLI::Range(1, 10));
    enu->add_option("--free", free_csv, "catalog ids to exclude as induced subgraphs");
    enu->add_option("--out", out_path, "write graph6 lines here instead of stdout");
    enu->add_flag("--allow-n10", allow_n10, "confirm the large n=10 run");
    enu->add_flag("--count-only", count_only, "print the class count only");

    auto* swp = app.add_subcommand("sweep", "check lemmas across a corpus");
    swp->add_option("--lemma", lemma_arg, "lemma name, comma list, or 'all'");
    swp->add_option("--n-max", n_max, "sweep enumerated classes up to this size")
        ->check(CLI::Range(1, 10));
    swp->add_option("--max-n", n_max, "alias for --n-max");
    swp->add_option("--n", n_max, "alias for --n-max");
    swp->add_option("--free", free_csv, "catalog ids to exclude as induced subgraphs");
    swp->add_option("--in", in_path, "graph6 corpus file");
    swp->add_option("--graph", graph_arg, "comma list of catalog ids");
    swp->add_option("--jobs", jobs, "worker threads")->envname("FOURPATH_JOBS");
    swp->add_option("--exemplars", exemplar_limit, "exemplars kept per lemma")
        ->envname("FOURPATH_EXEMPLARS");
    swp->add_flag("--strict", strict, "stop on malformed corpus lines");
    swp->add_option("--report", out_path, "write the sweep report here");
    swp->add_option("--out", out_path, "alias for --report");
    add_tuning_opts(swp);

    auto* dec = app.add_subcommand("decompose", "decompose a {P5,coP5,bull}-free graph");
    add_graph_opts(dec);
    add_out_opt(dec);

    auto* cex = app.add_subcommand("counterexamples",
                                   "verify the bundled counterexample batteries");
    std::string cex_action = "verify";
    cex->add_option("action", cex_action)->check(CLI::IsMember({"verify"}));
    add_out_opt(cex);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cat->parsed()) {
            if (cat_action == "show" && cat_id.empty())
                throw fp::Error("catalog show needs an id");
            return cmd_catalog(cat_action, cat_id);
        }
        if (rec->parsed()) return cmd_recognize(resolve_graph(graph_arg, in_path), out_path);
        if (fnd->parsed())
            return cmd_find(what, resolve_graph(graph_arg, in_path), vertex_label,
                            pattern_id, use_complement, out_path);
        if (chk->parsed()) {
            if (n_max > 0) {
                fp::SweepSource src;
                src.kind = fp::SweepSourceKind::enumeration;
                src.n_max = n_max;
                src.free_names = split_csv(free_csv);
                fp::SweepConfig cfg;
                cfg.lemmas = lemmas_from_arg(lemma_arg, true);
                cfg.check = opts;
                cfg.jobs = jobs;
                return report_sweep(fp::run_suite(src, cfg), out_path);
            }
            return cmd_check_graph(lemma_arg, resolve_graph(graph_arg, in_path), opts,
                                   out_path);
        }
        if (enu->parsed()) {
            if (n_max == 0) throw fp::Error("enumerate needs --n-max");
            if (n_min > n_max) throw fp::Error("--n-min exceeds --n-max");
            return cmd_enumerate(n_min, n_max, free_csv, out_path, allow_n10, count_only);
        }
        if (swp->parsed()) {
            fp::SweepSource src;
            if (!in_path.empty()) {
                src.kind = fp::SweepSourceKind::file;
                src.path = in_path;
                src.strict = strict;
            } else if (!graph_arg.empty()) {
                src.kind = fp::SweepSourceKind::named;
                src.named_ids = split_csv(graph_arg);
            } else {
                if (n_max == 0) throw fp::Error("sweep needs --n-max, --in, or --graph");
                src.kind = fp::SweepSourceKind::enumeration;
                src.n_max = n_max;
                src.free_names = split_csv(free_csv);
            }
            fp::SweepConfig cfg;
            cfg.lemmas = lemmas_from_arg(lemma_arg, true);
            cfg.check = opts;
            cfg.jobs = jobs;
            cfg.exemplar_limit = exemplar_limit;
            return report_sweep(fp::run_suite(src, cfg), out_path);
        }
        if (dec->parsed()) return cmd_decompose(resolve_graph(graph_arg, in_path), out_path);
        if (cex->parsed()) return cmd_counterexamples(out_path);
    } catch (const fp::TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const fp::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
