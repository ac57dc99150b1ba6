#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kappa3/canonical.hpp"
#include "kappa3/enumerate.hpp"
#include "kappa3/families.hpp"
#include "kappa3/graph6.hpp"
#include "kappa3/harness.hpp"
#include "kappa3/steiner.hpp"

using json = nlohmann::json;
using namespace kappa3;

namespace {

Graph parse_edges(const std::string& spec, int n_override) {
    std::vector<std::pair<int, int>> edges;
    int max_v = -1;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("edge must look like u-v");
        int u = std::stoi(item.substr(0, dash));
        int v = std::stoi(item.substr(dash + 1));
        edges.emplace_back(u, v);
        max_v = std::max({max_v, u, v});
    }
    int n = n_override > 0 ? n_override : max_v + 1;
    return Graph::from_edges(n, edges);
}

VertexSet parse_set(const std::string& spec) {
    VertexSet s = 0;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int v = std::stoi(item);
        if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex out of range");
        s |= vbit(v);
    }
    return s;
}

json tree_json(const SteinerTree& t) {
    json edges = json::array();
    for (auto [u, v] : t.edges) edges.push_back({u, v});
    return edges;
}

json packing_json(const PackingResult& r) {
    json trees = json::array();
    for (const auto& t : r.cert.trees) trees.push_back(tree_json(t));
    json terms = json::array();
    VertexSet s = r.cert.terminals;
    while (s) {
        terms.push_back(lowest_vertex(s));
        s &= s - 1;
    }
    return {{"kappa", r.count}, {"terminals", terms}, {"trees", trees}};
}

struct Options {
    std::string g6, file, edges_spec, set_spec, cache_path;
    int n = 0;
    bool all_triples = false;
    bool as_json = false;
    int threads = 0;
    int target = 0;
};

Graph load_one_graph(const Options& opt) {
    int sources = !opt.g6.empty() + !opt.file.empty() + !opt.edges_spec.empty();
    if (sources != 1)
        throw std::invalid_argument("provide exactly one of --g6 / --file / --edges");
    if (!opt.g6.empty()) return graph6_decode(opt.g6);
    if (!opt.edges_spec.empty()) return parse_edges(opt.edges_spec, opt.n);
    std::ifstream in(opt.file);
    if (!in) throw std::invalid_argument("cannot open " + opt.file);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) return graph6_decode(line);
    throw std::invalid_argument("no graph6 line in " + opt.file);
}

int run_kappa(const Options& opt) {
    Graph g = load_one_graph(opt);
    std::optional<int> target = opt.target > 0 ? std::optional<int>(opt.target) : std::nullopt;
    if (opt.all_triples) {
        if (g.order() < 3) throw std::invalid_argument("--all-triples needs order >= 3");
        int bar = kappa_bar_k(g, 3);
        if (opt.as_json) {
            json out{{"kappa_bar_3", bar}, {"graph6", graph6_encode(g)}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "kappa_bar_3 = " << bar << "\n";
        }
        if (!opt.cache_path.empty()) {
            KappaCache cache;
            std::ifstream probe(opt.cache_path);
            if (probe.good()) cache.load(opt.cache_path);
            cache.put(canonical_form(g), bar);
            cache.flush(opt.cache_path);
        }
        return 0;
    }
    if (opt.set_spec.empty()) throw std::invalid_argument("need --set or --all-triples");
    VertexSet s = parse_set(opt.set_spec);
    PackingResult r = max_packing(g, s, target);
    if (opt.as_json) {
        std::cout << packing_json(r).dump() << "\n";
    } else {
        std::cout << r.count << "\n";
        for (const auto& t : r.cert.trees) {
            std::cout << "tree:";
            for (auto [u, v] : t.edges) std::cout << " " << u << "-" << v;
            std::cout << "\n";
        }
    }
    return 0;
}

int run_verify(const std::string& which, int n, const Options& opt) {
    KappaCache cache;
    KappaCache* cache_ptr = nullptr;
    if (!opt.cache_path.empty()) {
        std::ifstream probe(opt.cache_path);
        if (probe.good()) cache.load(opt.cache_path);
        cache_ptr = &cache;
    }
    Harness h(opt.threads, cache_ptr);
    std::vector<VerificationReport> reports;
    if (which == "lemma3") reports.push_back(h.verify_lemma3());
    else if (which == "lemma4") reports.push_back(h.verify_lemma4());
    else if (which == "lemma5") reports.push_back(h.verify_lemma5());
    else if (which == "lemma6") reports.push_back(h.verify_lemma6());
    else if (which == "theorem") reports.push_back(h.verify_theorem(n));
    else if (which == "inductive") reports.push_back(h.verify_inductive_lemmas(n));
    else if (which == "observations") reports.push_back(h.verify_observations());
    else if (which == "remark") reports.push_back(h.verify_remark(n, n - 2));
    else if (which == "all") reports = h.verify_all(n);
    else throw std::invalid_argument("unknown verify target: " + which);

    bool all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        if (opt.as_json) {
            std::cout << r.to_json().dump() << "\n";
        } else {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.claim_id << " scanned="
                      << r.scanned << " satisfied=" << r.satisfied;
            if (r.f_value) std::cout << " f=" << *r.f_value;
            std::cout << "\n";
            for (const auto& w : r.witnesses) std::cerr << "witness: " << w.dump() << "\n";
        }
        std::cerr << r.claim_id << " took " << r.elapsed_ms << " ms\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Steiner-tree packing and extremal verification"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("KAPPA3_CACHE")) opt.cache_path = env;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", opt.as_json, "JSON on the primary stream");
        cmd->add_option("--threads", opt.threads, "worker thread cap (0 = all cores)");
        cmd->add_option("--cache", opt.cache_path, "persistent kappa_bar_3 cache file");
    };

    auto* kappa = app.add_subcommand("kappa", "packing number for one graph");
    kappa->add_option("--g6", opt.g6, "graph6 line");
    kappa->add_option("--file", opt.file, "file with one graph6 line");
    kappa->add_option("--edges", opt.edges_spec, "edge list like 0-1,1-2");
    kappa->add_option("--n", opt.n, "order override for --edges");
    kappa->add_option("--set", opt.set_spec, "terminal set, e.g. 0,1,2");
    kappa->add_flag("--all-triples", opt.all_triples, "compute kappa_bar_3");
    kappa->add_option("--target", opt.target, "early-exit threshold");
    add_common(kappa);

    auto* enumerate = app.add_subcommand("enumerate", "emit one graph6 line per class");
    int en_n = 0, en_mmin = 0, en_mmax = -1;
    bool en_connected = false;
    enumerate->add_option("--n", en_n, "order")->required();
    enumerate->add_option("--m-min", en_mmin, "minimum size");
    enumerate->add_option("--m-max", en_mmax, "maximum size");
    enumerate->add_flag("--connected", en_connected, "connected classes only");
    add_common(enumerate);

    auto* family = app.add_subcommand("family", "emit a named construction");
    std::string fam_name, fam_g6;
    int fam_n = 0, fam_ell = 0, fam_d = 0, fam_at = 0;
    family->add_option("--name", fam_name,
                       "complete|cycle|path|wheel|empty|h1|regular|remark|attach-k4")
        ->required();
    family->add_option("--order", fam_n, "order parameter");
    family->add_option("--ell", fam_ell, "ell for remark");
    family->add_option("--d", fam_d, "degree for regular");
    family->add_option("--g6", fam_g6, "base graph for attach-k4");
    family->add_option("--at", fam_at, "attach vertex");
    add_common(family);

    auto* catalog = app.add_subcommand("catalog", "extremal catalog for one order");
    int cat_n = 0;
    catalog->add_option("--n", cat_n, "order")->required();
    add_common(catalog);

    auto* verify = app.add_subcommand("verify", "reproduce a paper claim");
    std::string which;
    int ver_n = 8;
    verify
        ->add_option("target", which,
                     "lemma3|lemma4|lemma5|lemma6|theorem|inductive|observations|remark|all")
        ->required();
    verify->add_option("--n", ver_n, "order for theorem/inductive, max order otherwise");
    add_common(verify);

    auto* cachecmd = app.add_subcommand("cache", "inspect or compact the kappa cache");
    std::string cache_file;
    bool cache_list = false, cache_compact = false;
    cachecmd->add_option("--path", cache_file, "cache file")->required();
    cachecmd->add_flag("--list", cache_list, "print entries");
    cachecmd->add_flag("--compact", cache_compact, "rewrite sorted/deduplicated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (kappa->parsed()) return run_kappa(opt);
        if (enumerate->parsed()) {
            Enumerator en;
            for (const Graph& g : en.matching({en_n, en_mmin, en_mmax, en_connected}))
                std::cout << graph6_encode(g) << "\n";
            return 0;
        }
        if (family->parsed()) {
            Graph g;
            if (fam_name == "complete") g = complete_graph(fam_n);
            else if (fam_name == "cycle") g = cycle(fam_n);
            else if (fam_name == "path") g = path(fam_n);
            else if (fam_name == "wheel") g = wheel(fam_n);
            else if (fam_name == "empty") g = empty_graph(fam_n);
            else if (fam_name == "h1") g = join(complete_graph(2), empty_graph(fam_n - 2));
            else if (fam_name == "regular") g = regular_graph(fam_n, fam_d);
            else if (fam_name == "remark") g = remark_construction(fam_n, fam_ell);
            else if (fam_name == "attach-k4") g = attach_k4(graph6_decode(fam_g6), fam_at);
            else throw std::invalid_argument("unknown family: " + fam_name);
            std::cout << graph6_encode(g) << "\n";
            return 0;
        }
        if (catalog->parsed()) {
            Enumerator en;
            ExtremalCatalog cat = extremal_catalog(en, cat_n, opt.threads);
            if (opt.as_json) {
                std::cout << catalog_json(cat).dump() << "\n";
            } else {
                std::cout << "n=" << cat.n << " f=" << cat.f_value << "\n";
                for (const auto& m : cat.members) std::cout << m << "\n";
            }
            return 0;
        }
        if (verify->parsed()) return run_verify(which, ver_n, opt);
        if (cachecmd->parsed()) {
            KappaCache cache;
            cache.load(cache_file);
            if (cache_list)
                for (const auto& [k, v] : cache.entries()) std::cout << k << "\t" << v << "\n";
            if (cache_compact) cache.flush(cache_file);
            if (!cache_list && !cache_compact)
                std::cout << cache.size() << " entries\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
