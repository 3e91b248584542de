#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string>

#include "fourpath/catalog.hpp"
#include "fourpath/graph6.hpp"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary_path() {
    const char* bin = std::getenv("FOURPATH_BIN");
    REQUIRE(bin != nullptr);
    return bin;
}

// runs the CLI with stderr folded into stdout
RunResult run(const std::string& args) {
    const std::string cmd = binary_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("catalog list and show") {
    const RunResult list = run("catalog list");
    REQUIRE(list.exit_code == 0);
    for (const char* id : {"p4", "p5", "p5c", "c4", "2k2", "c5", "bull", "h6", "fig2", "fig3"})
        REQUIRE(contains(list.out, id));

    const RunResult show = run("catalog show h6");
    REQUIRE(show.exit_code == 0);
    REQUIRE(show.out ==
            "h6: 6 vertices, 6 edges\n"
            "edges: v1v2 v2v3 v2v5 v3v4 v3v6 v5v6\n"
            "degree-1 set {v1,v4}\n"
            "degree-2 set {v5,v6}\n"
            "degree-3 set {v2,v3}\n"
            "graph6: EhOg\n");

    REQUIRE(run("catalog show nope").exit_code == 1);
}

TEST_CASE("recognize accepts catalog ids, graph6 strings, and files") {
    const RunResult named = run("recognize --graph fig2");
    REQUIRE(named.exit_code == 0);
    REQUIRE(contains(named.out, "prime: yes"));
    REQUIRE(contains(named.out, "simplicial: {1,4}"));
    REQUIRE(contains(named.out, "antisimplicial: {2,3}"));
    REQUIRE(contains(named.out, "one_join: none"));
    REQUIRE(contains(named.out, "one_join_complement: none"));

    const std::string c5_g6 = fourpath::to_graph6(fourpath::make_c5().graph);
    const RunResult raw = run("recognize --graph " + c5_g6);
    REQUIRE(raw.exit_code == 0);
    REQUIRE(contains(raw.out, "isomorphic_c5: yes"));

    const std::string path = "/tmp/fourpath_cli_edges.txt";
    {
        std::ofstream f(path);
        f << "5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n";
    }
    const RunResult file = run("recognize --in " + path);
    REQUIRE(file.exit_code == 0);
    REQUIRE(contains(file.out, "isomorphic_c5: yes"));
    std::remove(path.c_str());
}

TEST_CASE("check marks manifest refutations and flags new findings") {
    const RunResult expected = run("check --lemma h6conj --graph fig2");
    REQUIRE(expected.exit_code == 0);
    REQUIRE(contains(expected.out, "h6conj: fails"));
    REQUIRE(contains(expected.out, "[expected refutation]"));

    // the same graph defeats the structural disjunction; that is not on the manifest
    const RunResult finding = run("check --lemma structure_conj --graph fig2");
    REQUIRE(finding.exit_code == 2);
    REQUIRE(contains(finding.out, "structure_conj: fails"));
    REQUIRE_FALSE(contains(finding.out, "[expected refutation]"));

    const RunResult fig3 = run("check --lemma structure_conj --graph fig3");
    REQUIRE(fig3.exit_code == 0);
    REQUIRE(contains(fig3.out, "structure_conj: holds"));
    REQUIRE(contains(fig3.out, "1-join in the complement"));

    REQUIRE(run("check --lemma no_such_lemma --graph c5").exit_code == 1);
    const RunResult c5 = run("check --lemma simp_and_anti --graph c5");
    REQUIRE(c5.exit_code == 0);
    REQUIRE(contains(c5.out, "simp_and_anti: precondition_not_met"));
}

TEST_CASE("finders resolve labels through the catalog") {
    const RunResult simp = run("find --what simplicial --vertex 2 --graph fig2");
    REQUIRE(simp.exit_code == 0);
    REQUIRE(contains(simp.out, "simplicial: 4"));

    const RunResult anti = run("find --what antisimplicial --vertex 1 --graph fig2");
    REQUIRE(anti.exit_code == 0);
    REQUIRE((contains(anti.out, "antisimplicial: 2") || contains(anti.out, "antisimplicial: 3")));

    const RunResult precond = run("find --what simplicial --vertex v1 --graph c5");
    REQUIRE(precond.exit_code == 1);
    REQUIRE(contains(precond.out, "a must be antisimplicial"));

    const RunResult badlabel = run("find --what simplicial --vertex 1 --graph c5");
    REQUIRE(badlabel.exit_code == 1);
    REQUIRE(contains(badlabel.out, "no vertex labeled '1' in c5"));

    const RunResult ext = run("find --what extensions --graph p4");
    REQUIRE(ext.exit_code == 0);
    REQUIRE(contains(ext.out, "16 cases"));
}

TEST_CASE("enumerate counts classes and guards the largest size") {
    const RunResult count = run("enumerate --n 5 --count-only");
    REQUIRE(count.exit_code == 0);
    REQUIRE(contains(count.out, "52"));

    const RunResult free_count = run("enumerate --n 7 --free p5,p5c --count-only");
    REQUIRE(free_count.exit_code == 0);
    REQUIRE(contains(free_count.out, "668"));

    REQUIRE(run("enumerate --n 10 --count-only").exit_code == 1);

    const std::string path = "/tmp/fourpath_cli_enum.g6";
    const RunResult lines = run("enumerate --n-min 4 --n-max 4 --out " + path);
    REQUIRE(lines.exit_code == 0);
    std::ifstream in(path);
    size_t n_lines = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++n_lines;
    REQUIRE(n_lines == 11);
    std::remove(path.c_str());
}

TEST_CASE("sweep distinguishes confirmations from new findings") {
    const RunResult confirm = run("sweep --graph fig2,fig3 --lemma h6conj");
    REQUIRE(confirm.exit_code == 0);
    REQUIRE(contains(confirm.out, "expected refutation h6conj on fig2: confirmed"));
    REQUIRE(contains(confirm.out, "expected refutation structure_conj on fig3: not observed"));
    REQUIRE(contains(confirm.out, "unexpected fails: 0"));

    const RunResult finding = run("sweep --graph fig2,fig3 --lemma h6conj,structure_conj");
    REQUIRE(finding.exit_code == 2);
    REQUIRE(contains(finding.out, "unexpected fails: 1"));
}

TEST_CASE("sweep reports are byte-identical across worker counts") {
    const std::string a = "/tmp/fourpath_cli_sweep1.json";
    const std::string b = "/tmp/fourpath_cli_sweep2.json";
    REQUIRE(run("sweep --n-max 5 --lemma all --jobs 1 --report " + a).exit_code == 0);
    REQUIRE(run("sweep --n-max 5 --lemma all --jobs 2 --report " + b).exit_code == 0);
    std::ifstream fa(a), fb(b);
    nlohmann::json ja = nlohmann::json::parse(fa);
    nlohmann::json jb = nlohmann::json::parse(fb);
    REQUIRE(ja.at("total_graphs") == 52);
    REQUIRE(ja.at("lemmas").size() == 17);
    ja.erase("wall_ms");
    jb.erase("wall_ms");
    ja.at("config").erase("jobs");
    jb.at("config").erase("jobs");
    REQUIRE(ja.dump() == jb.dump());
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("decompose handles the bull-free family only") {
    const RunResult c5 = run("decompose --graph c5");
    REQUIRE(c5.exit_code == 0);
    REQUIRE(contains(c5.out, "decomposition: 1 leaves, 0 substitution nodes"));
    REQUIRE(contains(c5.out, "recomposes exactly: yes"));

    const RunResult p5 = run("decompose --graph p5");
    REQUIRE(p5.exit_code == 1);
    REQUIRE(contains(p5.out, "not {P5,coP5,bull}-free"));
}

TEST_CASE("counterexample verification reports the honest failure") {
    const RunResult r = run("counterexamples verify");
    REQUIRE(r.exit_code == 2);
    REQUIRE(contains(r.out, "== fig2 =="));
    REQUIRE(contains(r.out, "== fig3 =="));
    REQUIRE(contains(r.out, "ok   prime"));
    REQUIRE(contains(r.out, "FAIL no 1-join in the complement"));
    REQUIRE(contains(r.out, "A={6} B={1,3,7,9} C={2,4,8,10} D={5}"));
    REQUIRE(contains(r.out, "does not satisfy its full published battery"));
    // every fig2 line passes
    const size_t fig2_at = r.out.find("== fig2 ==");
    const size_t fig3_at = r.out.find("== fig3 ==");
    REQUIRE(fig2_at < fig3_at);
    REQUIRE(r.out.substr(fig2_at, fig3_at - fig2_at).find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit with one") {
    REQUIRE(run("").exit_code == 1);
    REQUIRE(run("check --lemma h6conj").exit_code == 1);        // no graph given
    REQUIRE(run("recognize --graph not_a_graph").exit_code == 1);
    REQUIRE(run("sweep --lemma all").exit_code == 1);           // no source
}

namespace {

nlohmann::ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return nlohmann::ordered_json::parse(in);
}

std::string source_dir() {
    const char* src = std::getenv("FOURPATH_SRC");
    REQUIRE(src != nullptr);
    return src;
}

// structural validator for the subset of JSON Schema the shipped schemas use
const nlohmann::ordered_json& schema_resolve(const nlohmann::ordered_json& s,
                                             const nlohmann::ordered_json& root) {
    if (!s.contains("$ref")) return s;
    const std::string ref = s.at("$ref").get<std::string>();
    if (ref == "#") return root;
    const std::string prefix = "#/definitions/";
    REQUIRE(ref.rfind(prefix, 0) == 0);
    return root.at("definitions").at(ref.substr(prefix.size()));
}

bool schema_valid(const nlohmann::ordered_json& v, const nlohmann::ordered_json& schema,
                  const nlohmann::ordered_json& root, std::string& why) {
    const auto& s = schema_resolve(schema, root);
    if (s.contains("oneOf")) {
        int hits = 0;
        for (const auto& branch : s.at("oneOf")) {
            std::string ignored;
            if (schema_valid(v, branch, root, ignored)) ++hits;
        }
        if (hits == 1) return true;
        why = "oneOf matched " + std::to_string(hits) + " branches for " + v.dump().substr(0, 60);
        return false;
    }
    if (s.contains("enum")) {
        for (const auto& allowed : s.at("enum"))
            if (allowed == v) return true;
        why = "value " + v.dump() + " not in enum";
        return false;
    }
    if (s.contains("type")) {
        const std::string t = s.at("type").get<std::string>();
        const bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
                        (t == "string" && v.is_string()) || (t == "boolean" && v.is_boolean()) ||
                        (t == "integer" && v.is_number_integer()) || (t == "number" && v.is_number());
        if (!ok) {
            why = "expected " + t + ", got " + v.dump().substr(0, 60);
            return false;
        }
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& key : s.at("required"))
                if (!v.contains(key.get<std::string>())) {
                    why = "missing required key " + key.get<std::string>();
                    return false;
                }
        for (const auto& [key, member] : v.items()) {
            if (s.contains("properties") && s.at("properties").contains(key)) {
                if (!schema_valid(member, s.at("properties").at(key), root, why)) {
                    why = key + ": " + why;
                    return false;
                }
            } else if (s.contains("additionalProperties")) {
                const auto& extra = s.at("additionalProperties");
                if (extra.is_boolean()) {
                    if (!extra.get<bool>()) {
                        why = "unexpected key " + key;
                        return false;
                    }
                } else if (!schema_valid(member, extra, root, why)) {
                    why = key + ": " + why;
                    return false;
                }
            }
        }
    }
    if (v.is_array() && s.contains("items"))
        for (size_t i = 0; i < v.size(); ++i)
            if (!schema_valid(v[i], s.at("items"), root, why)) {
                why = "[" + std::to_string(i) + "] " + why;
                return false;
            }
    return true;
}

void require_schema(const nlohmann::ordered_json& v, const nlohmann::ordered_json& root) {
    std::string why;
    const bool ok = schema_valid(v, root, root, why);
    INFO(why);
    REQUIRE(ok);
}

}  // namespace

TEST_CASE("json outputs validate against the shipped schemas") {
    const auto verdict_schema = load_json(source_dir() + "/docs/schemas/verdict.json");
    const auto sweep_schema = load_json(source_dir() + "/docs/schemas/sweep_report.json");
    const auto tree_schema = load_json(source_dir() + "/docs/schemas/decomposition_tree.json");

    const std::string path = "/tmp/fourpath_cli_schema.json";
    std::set<std::string> cert_types;
    for (const std::string id : {"fig2", "fig3", "c5", "p4", "2k2"}) {
        const RunResult r = run("check --lemma all --graph " + id + " --out " + path);
        REQUIRE((r.exit_code == 0 || r.exit_code == 2));
        const auto arr = load_json(path);
        REQUIRE(arr.is_array());
        REQUIRE(!arr.empty());
        for (const auto& verdict : arr) {
            require_schema(verdict, verdict_schema);
            for (const char* key : {"certificate", "counterwitness"})
                if (verdict.contains(key))
                    cert_types.insert(verdict.at(key).at("type").get<std::string>());
        }
    }
    // these five graphs exercise every certificate variant
    REQUIRE(cert_types.size() == 11);

    REQUIRE(run("sweep --n-max 4 --lemma all --report " + path).exit_code == 0);
    require_schema(load_json(path), sweep_schema);

    // a report with exemplars, expected refutations, and an unexpected finding
    REQUIRE(run("sweep --graph fig2,fig3 --lemma h6conj,structure_conj --report " + path)
                .exit_code == 2);
    const auto report = load_json(path);
    require_schema(report, sweep_schema);
    REQUIRE(!report.at("exemplars").empty());
    for (const auto& ex : report.at("exemplars")) require_schema(ex.at("verdict"), verdict_schema);

    // a report with diagnostics from a lenient file read
    const std::string corpus = "/tmp/fourpath_cli_schema.g6";
    {
        std::ofstream out(corpus);
        out << "DqK\n"
            << "not graph6 at all\n"
            << "Bw\n";
    }
    REQUIRE(run("sweep --in " + corpus + " --lemma split_iff --report " + path).exit_code == 0);
    const auto lenient = load_json(path);
    require_schema(lenient, sweep_schema);
    REQUIRE(lenient.at("diagnostics").size() == 1);

    REQUIRE(run("decompose --graph c5 --out " + path).exit_code == 0);
    require_schema(load_json(path), tree_schema);

    const fourpath::Graph p4 = fourpath::catalog_get("p4").graph;
    const std::string sub_g6 = fourpath::to_graph6(fourpath::substitute(p4, 1, fourpath::Graph::from_edges(2, {})));
    REQUIRE(run("decompose --graph '" + sub_g6 + "' --out " + path).exit_code == 0);
    const auto tree = load_json(path);
    require_schema(tree, tree_schema);
    REQUIRE(tree.at("kind") == "substitution");

    std::remove(path.c_str());
    std::remove(corpus.c_str());
}
