#ifndef FOURPATH_SWEEP_HPP
#define FOURPATH_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "fourpath/catalog.hpp"
#include "fourpath/enumerate.hpp"
#include "fourpath/errors.hpp"
#include "fourpath/graph6.hpp"
#include "fourpath/lemmas.hpp"

namespace fourpath {

enum class SweepSourceKind { enumeration, file, named };

struct SweepSource {
    SweepSourceKind kind = SweepSourceKind::enumeration;
    int n_min = 1;
    int n_max = 8;
    std::vector<std::string> free_names;  // catalog ids pruning the enumeration
    std::string path;                     // graph6 file, one graph per line
    std::vector<std::string> named_ids;   // catalog ids
    bool strict = false;
};

struct SweepConfig {
    std::vector<LemmaId> lemmas;
    CheckOptions check;
    int jobs = 1;
    int exemplar_limit = 4;
    int chunk_size = 256;
};

struct LemmaCounts {
    uint64_t holds = 0;
    uint64_t fails = 0;
    uint64_t precondition_not_met = 0;
    uint64_t capped = 0;

    uint64_t total() const { return holds + fails + precondition_not_met + capped; }
    bool operator==(const LemmaCounts&) const = default;
};

struct Exemplar {
    size_t source_index = 0;
    std::string label;  // catalog id, file line, or enumeration position
    LemmaId lemma = LemmaId::prime_conn;
    std::string graph6;
    Verdict verdict;
    bool expected = false;  // matches a declared expected refutation
};

struct ExpectedRefutation {
    LemmaId lemma;
    std::string graph_id;  // catalog id
};

inline const std::vector<ExpectedRefutation>& default_expected_refutations() {
    static const std::vector<ExpectedRefutation> manifest = {
        {LemmaId::h6conj, "fig2"},
        {LemmaId::structure_conj, "fig3"},
    };
    return manifest;
}

struct ExpectedRefutationResult {
    ExpectedRefutation entry;
    bool observed = false;
};

struct SweepReport {
    std::vector<LemmaId> lemmas;
    // counts bucketed by vertex count, one slot per configured lemma
    std::map<int, std::vector<LemmaCounts>> counts;
    std::map<int, uint64_t> graphs_per_n;
    std::vector<Exemplar> exemplars;  // failing or capped checks, bounded per lemma
    std::vector<ExpectedRefutationResult> expected;
    uint64_t unexpected_fails = 0;
    uint64_t total_graphs = 0;
    double wall_ms = 0.0;  // excluded from determinism comparisons
    std::string source_description;
    std::vector<Graph6Diagnostic> diagnostics;
    // configuration echo
    int jobs = 1;
    uint64_t seed = 0;
    int iso_cap = kDefaultIsoCap;
    int onejoin_cap = kDefaultOneJoinCap;
    int sample_count = 200;
    int exemplar_limit = 4;
    std::vector<std::string> free_names;
};

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct WorkItem {
    size_t index;
    std::string label;
    Graph graph;
};

inline std::vector<Graph> patterns_from_names(const std::vector<std::string>& names) {
    std::vector<Graph> out;
    for (const auto& name : names) out.push_back(catalog_get(name).graph);
    return out;
}

struct ChunkResult {
    std::map<int, std::vector<LemmaCounts>> counts;
    std::map<int, uint64_t> graphs_per_n;
    std::vector<Exemplar> exemplars;
    std::vector<char> expected_observed;
    uint64_t unexpected_fails = 0;
};

}  // namespace detail

inline SweepReport run_suite(const SweepSource& source, const SweepConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.lemmas = config.lemmas;
    report.jobs = config.jobs;
    report.seed = config.check.seed;
    report.iso_cap = config.check.iso_cap;
    report.onejoin_cap = config.check.onejoin_cap;
    report.sample_count = config.check.sample_count;
    report.exemplar_limit = config.exemplar_limit;
    report.free_names = source.free_names;

    std::vector<detail::WorkItem> items;
    switch (source.kind) {
        case SweepSourceKind::enumeration: {
            const auto patterns = detail::patterns_from_names(source.free_names);
            size_t index = 0;
            for (int n = source.n_min; n <= source.n_max; ++n) {
                for_each_class(n, patterns, [&](const Graph& g) {
                    items.push_back({index, "n" + std::to_string(n) + "#" +
                                                std::to_string(index),
                                     g});
                    ++index;
                });
            }
            std::ostringstream desc;
            desc << "enumeration n=" << source.n_min << ".." << source.n_max;
            for (const auto& f : source.free_names) desc << " -" << f;
            report.source_description = desc.str();
            break;
        }
        case SweepSourceKind::file: {
            std::ifstream in(source.path);
            if (!in) throw Error("run_suite: cannot open " + source.path);
            const auto graphs = read_graph6_stream(in, source.strict, &report.diagnostics);
            for (size_t i = 0; i < graphs.size(); ++i)
                items.push_back({i, source.path + ":" + std::to_string(i + 1), graphs[i]});
            report.source_description = "file " + source.path;
            break;
        }
        case SweepSourceKind::named: {
            for (size_t i = 0; i < source.named_ids.size(); ++i)
                items.push_back({i, source.named_ids[i],
                                 catalog_get(source.named_ids[i]).graph});
            std::ostringstream desc;
            desc << "named:";
            for (const auto& id : source.named_ids) desc << " " << id;
            report.source_description = desc.str();
            break;
        }
    }
    report.total_graphs = items.size();

    const auto& manifest = default_expected_refutations();
    std::vector<CanonicalForm> manifest_forms;
    for (const auto& entry : manifest)
        manifest_forms.push_back(canonical_form(catalog_get(entry.graph_id).graph, 16));

    const int chunk_size = std::max(1, config.chunk_size);
    const size_t chunk_count = (items.size() + static_cast<size_t>(chunk_size) - 1) /
                               static_cast<size_t>(chunk_size);
    std::vector<detail::ChunkResult> partials(chunk_count);
    std::atomic<size_t> next_chunk{0};

    auto worker = [&]() {
        while (true) {
            const size_t c = next_chunk.fetch_add(1);
            if (c >= chunk_count) return;
            detail::ChunkResult& partial = partials[c];
            partial.expected_observed.assign(manifest.size(), 0);
            const size_t lo = c * static_cast<size_t>(chunk_size);
            const size_t hi = std::min(items.size(), lo + static_cast<size_t>(chunk_size));
            for (size_t i = lo; i < hi; ++i) {
                const detail::WorkItem& item = items[i];
                const int n = item.graph.vertex_count();
                auto& slot = partial.counts[n];
                if (slot.empty()) slot.resize(config.lemmas.size());
                partial.graphs_per_n[n] += 1;
                std::optional<CanonicalForm> form;  // computed at most once per graph
                for (size_t li = 0; li < config.lemmas.size(); ++li) {
                    const LemmaId lemma = config.lemmas[li];
                    CheckOptions opts = config.check;
                    opts.seed = config.check.seed ^ detail::splitmix64(item.index + 1);
                    LemmaCounts& counts = slot[li];
                    std::optional<Verdict> verdict;
                    bool capped = false;
                    try {
                        verdict = check_lemma(lemma, item.graph, opts);
                    } catch (const CapError&) {
                        capped = true;
                    }
                    bool record = false;
                    bool expected = false;
                    if (capped) {
                        counts.capped += 1;
                        record = true;
                    } else {
                        switch (verdict->status) {
                            case LemmaStatus::holds: counts.holds += 1; break;
                            case LemmaStatus::precondition_not_met:
                                counts.precondition_not_met += 1;
                                break;
                            case LemmaStatus::fails: {
                                counts.fails += 1;
                                record = true;
                                if (!form) form = canonical_form(item.graph, 16);
                                for (size_t m = 0; m < manifest.size(); ++m) {
                                    if (manifest[m].lemma == lemma &&
                                        manifest_forms[m] == *form) {
                                        expected = true;
                                        partial.expected_observed[m] = 1;
                                    }
                                }
                                if (!expected) partial.unexpected_fails += 1;
                                break;
                            }
                        }
                    }
                    if (record) {
                        size_t kept = 0;
                        for (const auto& e : partial.exemplars)
                            if (e.lemma == lemma) ++kept;
                        if (kept < static_cast<size_t>(config.exemplar_limit)) {
                            Exemplar e;
                            e.source_index = item.index;
                            e.label = item.label;
                            e.lemma = lemma;
                            e.graph6 = to_graph6(item.graph);
                            if (verdict)
                                e.verdict = *verdict;
                            else {
                                e.verdict.lemma = lemma;
                                e.verdict.status = LemmaStatus::precondition_not_met;
                                e.verdict.detail = "size cap exceeded";
                            }
                            e.expected = expected;
                            partial.exemplars.push_back(std::move(e));
                        }
                    }
                }
            }
        }
    };

    const int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const auto& entry : manifest)
        report.expected.push_back({entry, false});
    std::vector<Exemplar> all_exemplars;
    for (const auto& partial : partials) {
        for (const auto& [n, slots] : partial.counts) {
            auto& dest = report.counts[n];
            if (dest.empty()) dest.resize(config.lemmas.size());
            for (size_t li = 0; li < slots.size(); ++li) {
                dest[li].holds += slots[li].holds;
                dest[li].fails += slots[li].fails;
                dest[li].precondition_not_met += slots[li].precondition_not_met;
                dest[li].capped += slots[li].capped;
            }
        }
        for (const auto& [n, c] : partial.graphs_per_n) report.graphs_per_n[n] += c;
        for (size_t m = 0; m < manifest.size(); ++m)
            if (!partial.expected_observed.empty() && partial.expected_observed[m])
                report.expected[m].observed = true;
        report.unexpected_fails += partial.unexpected_fails;
        all_exemplars.insert(all_exemplars.end(), partial.exemplars.begin(),
                             partial.exemplars.end());
    }
    std::stable_sort(all_exemplars.begin(), all_exemplars.end(),
                     [](const Exemplar& a, const Exemplar& b) {
                         if (a.lemma != b.lemma) return a.lemma < b.lemma;
                         return a.source_index < b.source_index;
                     });
    for (auto& e : all_exemplars) {
        size_t kept = 0;
        for (const auto& existing : report.exemplars)
            if (existing.lemma == e.lemma) ++kept;
        if (kept < static_cast<size_t>(config.exemplar_limit))
            report.exemplars.push_back(std::move(e));
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

// equality modulo wall time, used by the determinism checks
inline bool reports_equivalent(const SweepReport& a, const SweepReport& b) {
    auto exemplar_key = [](const Exemplar& e) {
        return std::tuple(e.source_index, e.label, e.lemma, e.graph6,
                          static_cast<int>(e.verdict.status), e.verdict.detail, e.expected);
    };
    if (a.lemmas != b.lemmas || a.counts != b.counts || a.graphs_per_n != b.graphs_per_n ||
        a.total_graphs != b.total_graphs || a.unexpected_fails != b.unexpected_fails ||
        a.source_description != b.source_description || a.seed != b.seed)
        return false;
    if (a.exemplars.size() != b.exemplars.size()) return false;
    for (size_t i = 0; i < a.exemplars.size(); ++i)
        if (exemplar_key(a.exemplars[i]) != exemplar_key(b.exemplars[i])) return false;
    if (a.expected.size() != b.expected.size()) return false;
    for (size_t i = 0; i < a.expected.size(); ++i)
        if (a.expected[i].entry.lemma != b.expected[i].entry.lemma ||
            a.expected[i].entry.graph_id != b.expected[i].entry.graph_id ||
            a.expected[i].observed != b.expected[i].observed)
            return false;
    return true;
}

}  // namespace fourpath

#endif
