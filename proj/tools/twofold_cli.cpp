// twofold_cli: command line front end over the twofold library.
//
// Subcommands: cover, aut, tf, stability, triangles, ztrail, construct,
// census, find-minimal, verify-counterexample. Single-graph commands print
// one JSON object; census and find-minimal print JSON-lines (one record per
// line); cover prints the cover graph itself.
//
// Exit codes: 0 success, 1 a checked property was falsified on concrete
// data, 2 bad input (parse errors, violated preconditions, unusable flags),
// 3 a configured resource cap was exceeded.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "twofold/aut.hpp"
#include "twofold/census.hpp"
#include "twofold/construction.hpp"
#include "twofold/double_cover.hpp"
#include "twofold/errors.hpp"
#include "twofold/graph.hpp"
#include "twofold/graph6.hpp"
#include "twofold/permutation.hpp"
#include "twofold/textio.hpp"
#include "twofold/tf.hpp"
#include "twofold/ztrail.hpp"

using json = nlohmann::ordered_json;
using namespace twofold;

namespace {

// Flags shared by every subcommand. oracle_bound < 0 means "use the
// subcommand's own default" (the tf oracle is comfortable one vertex higher
// than the per-graph census default).
struct GlobalOpts {
    int oracle_bound = -1;
    std::uint64_t enum_cap = kDefaultEnumCap;
    std::string format = "g6";
    std::string out_path;
    int jobs = 1;
};

std::istream& input_stream(const std::string& path, std::ifstream& file) {
    if (path.empty() || path == "-") return std::cin;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open input file: " + path);
    return file;
}

std::ostream& output_stream(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// One graph from either an inline graph6 literal (always graph6, whatever
// --format says; the flag governs streams) or a file/stdin in the selected
// format.
Graph load_graph(const GlobalOpts& g, const std::string& literal, const std::string& in_path) {
    if (!literal.empty()) {
        if (!in_path.empty())
            throw std::invalid_argument("give either an inline graph6 string or --in, not both");
        return parse_graph6(trimmed(literal));
    }
    std::ifstream file;
    std::istream& in = input_stream(in_path, file);
    if (g.format == "edgelist") return parse_edge_list(in);
    std::string line;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (!line.empty()) return parse_graph6(line);
    }
    throw std::invalid_argument("no graph found on input");
}

json perm_json(const Permutation& p) {
    return json{{"cycles", p.cycles()}, {"images", p.images()}};
}

json tf_json(const TFMap& t) {
    return json{{"alpha", perm_json(t.alpha)},
                {"beta", perm_json(t.beta)},
                {"nontrivial", t.nontrivial()}};
}

json arcs_json(const std::vector<Arc>& arcs) {
    json a = json::array();
    for (const auto& [u, v] : arcs) a.push_back(json::array({u, v}));
    return a;
}

json record_json(const CensusRecord& r) {
    json j;
    j["index"] = r.index;
    j["graph6"] = r.graph6;
    if (r.error) {
        j["error"] = *r.error;
        return j;
    }
    j["n"] = r.n;
    j["edge_count"] = r.edge_count;
    j["triangle_count"] = r.triangle_count;
    j["connected"] = r.connected;
    j["bipartite"] = r.bipartite;
    j["vertex_determining"] = r.vertex_determining;
    j["every_edge_on_triangle"] = r.every_edge_on_triangle;
    j["aut_order"] = r.aut_order;
    j["cover_aut_order"] = r.cover_aut_order;
    j["tf_order"] = r.tf_order;
    j["unstable_by_definition"] = r.unstable_by_definition;
    j["has_nontrivial_tf"] = r.has_nontrivial_tf;
    j["tf_criterion_consistent"] = r.tf_criterion_consistent;
    if (r.triangle_config_counts) {
        json counts;
        for (const auto& [cfg, count] : *r.triangle_config_counts) counts[to_string(cfg)] = count;
        j["triangle_config_counts"] = counts;
    }
    return j;
}

void print_object(const GlobalOpts& g, const json& j) {
    std::ofstream file;
    std::ostream& out = output_stream(g.out_path, file);
    out << j.dump(2) << "\n";
}

void print_lines(const GlobalOpts& g, const std::vector<CensusRecord>& records) {
    std::ofstream file;
    std::ostream& out = output_stream(g.out_path, file);
    for (const auto& r : records) out << record_json(r).dump() << "\n";
}

// "cycle:K" -> (C_K, the even/odd double shift on it). The only base family
// wired up: it is the smallest layer shape that is connected,
// vertex-determining, and carries a non-trivial TF-automorphism.
std::pair<Graph, TFMap> parse_base(const std::string& base) {
    std::size_t colon = base.find(':');
    std::string family = base.substr(0, colon == std::string::npos ? base.size() : colon);
    if (family != "cycle")
        throw std::invalid_argument("unknown base family '" + family + "' (supported: cycle:K)");
    if (colon == std::string::npos)
        throw std::invalid_argument("base needs a size, e.g. cycle:8");
    int k = 0;
    try {
        k = std::stoi(base.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad base size in '" + base + "'");
    }
    return {Graph::cycle(k), cycle_even_odd_shift(k)};
}

void run_cover(const GlobalOpts& g, const std::string& literal, const std::string& in_path) {
    Graph base = load_graph(g, literal, in_path);
    DoubleCover dc = build_double_cover(base);
    std::ofstream file;
    std::ostream& out = output_stream(g.out_path, file);
    if (g.format == "edgelist")
        out << write_edge_list(dc.graph);
    else
        out << write_graph6(dc.graph) << "\n";
}

void run_aut(const GlobalOpts& g, const std::string& literal, const std::string& in_path) {
    Graph graph = load_graph(g, literal, in_path);
    AutGroup ag = automorphism_group(graph, std::nullopt, g.enum_cap);
    json j;
    j["n"] = graph.vertex_count();
    j["edge_count"] = graph.edge_count();
    j["aut_order"] = ag.order;
    json gens = json::array();
    for (const auto& p : ag.generators) gens.push_back(perm_json(p));
    j["generators"] = gens;
    j["elements_enumerated"] = ag.elements.has_value();
    print_object(g, j);
}

void run_tf(const GlobalOpts& g, const std::string& literal, const std::string& in_path,
            bool brute, bool via_cover, bool with_elements) {
    Graph graph = load_graph(g, literal, in_path);
    int bound = g.oracle_bound >= 0 ? g.oracle_bound : kDefaultOracleBound;
    if (!brute && !via_cover) {
        if (graph.vertex_count() <= bound)
            brute = true;
        else
            via_cover = true;
    }
    TFGroup tf = brute ? tf_group_brute_force(graph, bound) : tf_group_via_cover(graph, g.enum_cap);
    json j;
    j["n"] = graph.vertex_count();
    j["route"] = brute ? "brute-force" : "via-cover";
    j["tf_order"] = tf.order;
    std::uint64_t nontrivial = 0;
    const TFMap* least_nontrivial = nullptr;
    for (const auto& t : tf.elements) {
        if (!t.nontrivial()) continue;
        ++nontrivial;
        if (least_nontrivial == nullptr) least_nontrivial = &t;
    }
    j["nontrivial_count"] = nontrivial;
    if (least_nontrivial != nullptr) j["least_nontrivial"] = tf_json(*least_nontrivial);
    if (with_elements) {
        json els = json::array();
        for (const auto& t : tf.elements) els.push_back(tf_json(t));
        j["elements"] = els;
    }
    print_object(g, j);
}

void run_stability(const GlobalOpts& g, const std::string& literal, const std::string& in_path) {
    Graph graph = load_graph(g, literal, in_path);
    StabilityReport rep = stability_verdict(graph, g.enum_cap);
    json j;
    j["n"] = graph.vertex_count();
    j["edge_count"] = graph.edge_count();
    j["connected"] = graph.is_connected();
    j["bipartite"] = graph.bipartition().has_value();
    j["aut_order"] = rep.aut_order;
    j["cover_aut_order"] = rep.cover_aut_order;
    j["tf_order"] = rep.tf_order;
    j["unstable"] = rep.unstable_by_definition;
    j["has_nontrivial_tf"] = rep.has_nontrivial_tf;
    j["tf_criterion_consistent"] = rep.tf_criterion_consistent;
    if (rep.tf_certificate) j["tf_certificate"] = tf_json(*rep.tf_certificate);
    if (rep.unexpected_witness) j["unexpected_witness"] = perm_json(*rep.unexpected_witness);
    print_object(g, j);
}

void run_triangles(const GlobalOpts& g, const std::string& literal, const std::string& in_path,
                   const std::string& alpha_text, const std::string& beta_text,
                   bool with_partner) {
    Graph graph = load_graph(g, literal, in_path);
    int n = graph.vertex_count();
    TFMap t{parse_permutation(alpha_text, n), parse_permutation(beta_text, n)};
    if (!is_tf_automorphism(graph, t))
        throw std::invalid_argument("the supplied pair is not a TF-automorphism of the graph");
    json j;
    j["n"] = n;
    j["tf"] = tf_json(t);
    json tris = json::array();
    for (const auto& tri : graph.triangles()) {
        TriangleImageReport rep = classify_triangle_image(graph, t, tri);
        json e;
        e["triangle"] = json::array({tri[0], tri[1], tri[2]});
        e["config"] = to_string(rep.config);
        e["agreeing_vertices"] = rep.agreeing_vertices;
        e["distinct_image_vertices"] = rep.distinct_image_vertices;
        e["image_arcs"] = arcs_json(rep.image_arcs);
        if (with_partner) {
            if (rep.config == TriangleImageConfig::UndirectedTriangle) {
                e["partner"] = nullptr;
            } else {
                ImagePartnerReport par = find_image_partner(graph, t, tri);
                json p;
                p["is_triangle"] = par.partner_is_triangle;
                p["vertices"] = par.partner_vertices;
                p["arcs"] = arcs_json(par.partner_arcs);
                p["shared_vertices"] = par.shared_vertices;
                if (rep.config == TriangleImageConfig::ClosedZ6) {
                    json chords = json::array();
                    for (const auto& [u, v] : par.image_hexagon_chords)
                        chords.push_back(json::array({u, v}));
                    p["image_hexagon_chords"] = chords;
                }
                e["partner"] = p;
            }
        }
        tris.push_back(e);
    }
    j["triangle_count"] = tris.size();
    j["triangles"] = tris;
    print_object(g, j);
}

json trail_json(const ZTrail& z) {
    return json{{"arcs", arcs_json(z.arcs)},
                {"length", z.length()},
                {"closure_class", to_string(classify_ztrail(z))}};
}

void run_ztrail(const GlobalOpts& g, const std::string& literal, const std::string& in_path,
                const std::string& arcs_text, const std::string& alpha_text,
                const std::string& beta_text) {
    ZTrail z = validate_ztrail(parse_arcs(arcs_text));
    bool mapping = !alpha_text.empty() || !beta_text.empty();
    if (mapping && (alpha_text.empty() || beta_text.empty()))
        throw std::invalid_argument("--alpha and --beta come together");
    bool have_host = !literal.empty() || !in_path.empty();
    if (mapping && !have_host)
        throw std::invalid_argument("mapping a trail needs the host graph");

    json j;
    j["trail"] = trail_json(z);
    if (have_host) {
        Graph host = load_graph(g, literal, in_path);
        for (const auto& [u, v] : z.arcs)
            if (u >= host.vertex_count() || v >= host.vertex_count() || !host.adjacent(u, v))
                throw std::invalid_argument("trail arc (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") is not an arc of the graph");
        if (mapping) {
            int n = host.vertex_count();
            TFMap t{parse_permutation(alpha_text, n), parse_permutation(beta_text, n)};
            if (!is_tf_automorphism(host, t))
                throw std::invalid_argument(
                    "the supplied pair is not a TF-automorphism of the graph");
            ZTrail image = map_ztrail(host, t, z);
            j["tf"] = tf_json(t);
            j["image"] = trail_json(image);
            j["class_preserved"] = classify_ztrail(z) == classify_ztrail(image);
        }
    }
    print_object(g, j);
}

json verification_json(const LayeredVerification& v) {
    json j;
    j["tf_valid"] = v.tf_valid;
    if (v.diameter_bfs)
        j["diameter_bfs"] = *v.diameter_bfs;
    else
        j["diameter_bfs"] = nullptr;
    j["formula_printed"] = v.formula_printed;
    j["formula_derived"] = v.formula_derived;
    j["printed_matches"] = v.printed_matches;
    j["derived_matches"] = v.derived_matches;
    j["every_edge_on_triangle"] = v.every_edge_on_triangle;
    j["eccentricity_growth"] = v.eccentricity_growth;
    return j;
}

void emit_layered(const GlobalOpts& g, const LayeredSpec& spec, const LayeredGraph& lg,
                  const TFMap& t, bool verify, bool graph_only) {
    if (graph_only) {
        std::ofstream file;
        std::ostream& out = output_stream(g.out_path, file);
        if (g.format == "edgelist")
            out << write_edge_list(lg.graph);
        else
            out << write_graph6(lg.graph) << "\n";
        return;
    }
    json j;
    j["m"] = spec.layers.size();
    json sizes = json::array();
    for (const auto& layer : spec.layers) sizes.push_back(layer.vertex_count());
    j["layer_sizes"] = sizes;
    j["n"] = lg.graph.vertex_count();
    j["edge_count"] = lg.graph.edge_count();
    j["graph6"] = write_graph6(lg.graph);
    j["tf"] = tf_json(t);
    TFMap cyc = complete_link_cycle({spec.links.begin() + 1, spec.links.end()});
    j["cyclic_product_identity"] = cyc == spec.links.front();
    if (verify) j["verify"] = verification_json(verify_layered_properties(lg, t));
    print_object(g, j);
}

void run_construct_spec(const GlobalOpts& g, const std::string& spec_path, bool verify,
                        bool allow_nonidentity, bool graph_only) {
    std::ifstream file;
    std::istream& in = input_stream(spec_path, file);
    LayeredSpec spec = parse_layered_spec(in);
    LayeredGraph lg = build_layered_graph(spec);
    TFMap t = assemble_tf(spec, lg, !allow_nonidentity);
    emit_layered(g, spec, lg, t, verify, graph_only);
}

void run_construct_demo(const GlobalOpts& g, int m, const std::string& base, bool verify,
                        bool graph_only) {
    auto [layer, link] = parse_base(base);
    LayeredSpec spec = layered_demo_spec(m, layer, link);
    LayeredGraph lg = build_layered_graph(spec);
    TFMap t = assemble_tf(spec, lg);
    emit_layered(g, spec, lg, t, verify, graph_only);
}

CensusOptions census_options(const GlobalOpts& g) {
    CensusOptions opt;
    opt.oracle_bound = g.oracle_bound >= 0 ? g.oracle_bound : kDefaultCensusOracleBound;
    opt.enum_cap = g.enum_cap;
    opt.jobs = g.jobs;
    return opt;
}

void run_census_cmd(const GlobalOpts& g, const std::string& in_path) {
    std::ifstream file;
    std::istream& in = input_stream(in_path, file);
    print_lines(g, run_census(in, census_options(g)));
}

void run_find_minimal(const GlobalOpts& g, const std::string& in_path,
                      const std::string& predicate) {
    std::ifstream file;
    std::istream& in = input_stream(in_path, file);
    std::vector<CensusRecord> records = run_census(in, census_options(g));
    print_lines(g, find_minimal(records, predicate));
}

void run_verify_counterexample(const GlobalOpts& g, int m, const std::string& base) {
    auto [layer, link] = parse_base(base);
    Counterexample cx = build_verified_counterexample(m, layer, link);
    json j;
    j["m"] = m;
    j["base"] = base;
    j["n"] = cx.summary.n;
    j["edge_count"] = cx.summary.edge_count;
    j["connected"] = cx.summary.connected;
    j["diameter"] = *cx.summary.diameter;
    j["every_edge_on_triangle"] = cx.summary.every_edge_on_triangle;
    j["vertex_determining"] = cx.summary.vertex_determining;
    j["tf_valid"] = cx.summary.tf_valid;
    j["tf_nontrivial"] = cx.summary.tf_nontrivial;
    j["tf"] = tf_json(cx.tf);
    j["all_checks_passed"] = true;
    print_object(g, j);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-fold automorphisms, double covers, and graph stability"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--oracle-bound", g.oracle_bound,
                   "max n for the brute-force TF oracle (default: per command)");
    app.add_option("--enum-cap", g.enum_cap, "max group size for explicit element lists");
    app.add_option("--format", g.format, "graph input/output format")
        ->check(CLI::IsMember({"g6", "edgelist"}));
    app.add_option("--out", g.out_path, "output file (default: stdout)");
    app.add_option("--jobs", g.jobs, "worker threads for census")->check(CLI::PositiveNumber);

    // Shared per-command storage; CLI11 callbacks read these after parse.
    std::string literal, in_path, alpha_text, beta_text, arcs_text, predicate, spec_path;
    std::string base = "cycle:8";
    bool brute = false, via_cover = false, with_elements = false, with_partner = false;
    bool verify = false, allow_nonidentity = false, graph_only = false;
    int m = 8;

    auto add_graph_inputs = [&](CLI::App* cmd) {
        cmd->add_option("graph", literal, "graph6 string");
        cmd->add_option("--in", in_path, "input file ('-' = stdin)");
    };

    CLI::App* cover = app.add_subcommand("cover", "emit the canonical double cover");
    add_graph_inputs(cover);
    cover->callback([&] { run_cover(g, literal, in_path); });

    CLI::App* aut = app.add_subcommand("aut", "automorphism group order and generators");
    add_graph_inputs(aut);
    aut->callback([&] { run_aut(g, literal, in_path); });

    CLI::App* tf = app.add_subcommand("tf", "two-fold automorphism group");
    add_graph_inputs(tf);
    tf->add_flag("--brute-force", brute, "scan all permutation pairs");
    tf->add_flag("--via-cover", via_cover, "extract from the cover's class stabiliser");
    tf->add_flag("--elements", with_elements, "list every element");
    tf->callback([&] { run_tf(g, literal, in_path, brute, via_cover, with_elements); });

    CLI::App* stability = app.add_subcommand("stability", "stability verdict with certificate");
    add_graph_inputs(stability);
    stability->callback([&] { run_stability(g, literal, in_path); });

    CLI::App* triangles =
        app.add_subcommand("triangles", "classify every triangle image under a TF-map");
    add_graph_inputs(triangles);
    triangles->add_option("--alpha", alpha_text, "first component (cycles, images, or 'id')")
        ->required();
    triangles->add_option("--beta", beta_text, "second component")->required();
    triangles->add_flag("--partner", with_partner, "also locate the reversed-image partner");
    triangles->callback(
        [&] { run_triangles(g, literal, in_path, alpha_text, beta_text, with_partner); });

    CLI::App* ztrail = app.add_subcommand("ztrail", "validate, classify, and map Z-trails");
    add_graph_inputs(ztrail);
    ztrail->add_option("--arcs", arcs_text, "trail arcs, e.g. '5,6 1,6 1,2'")->required();
    ztrail->add_option("--alpha", alpha_text, "map the trail: first component");
    ztrail->add_option("--beta", beta_text, "map the trail: second component");
    ztrail->callback([&] { run_ztrail(g, literal, in_path, arcs_text, alpha_text, beta_text); });

    CLI::App* construct = app.add_subcommand("construct", "build a cyclic layered graph");
    construct->add_option("--spec", spec_path, "layered-spec file");
    construct->add_flag("--verify", verify, "measure the layered-construction properties");
    construct->add_flag("--allow-nonidentity-product", allow_nonidentity,
                        "accept specs whose cyclic link product is not the identity pair");
    construct->add_flag("--graph-only", graph_only, "print just the built graph");
    CLI::App* demo = construct->add_subcommand("demo", "the standard instance from one base");
    demo->add_option("--m", m, "number of layers")->check(CLI::Range(3, 1000));
    demo->add_option("--base", base, "layer family, e.g. cycle:8");
    construct->callback([&] {
        if (demo->parsed()) {
            if (!spec_path.empty())
                throw std::invalid_argument("give either --spec or the demo subcommand");
            run_construct_demo(g, m, base, verify, graph_only);
        } else {
            if (spec_path.empty()) throw std::invalid_argument("construct needs --spec or demo");
            run_construct_spec(g, spec_path, verify, allow_nonidentity, graph_only);
        }
    });

    CLI::App* census = app.add_subcommand("census", "classify a stream of graph6 lines");
    census->add_option("--in", in_path, "input file ('-' = stdin)");
    census->callback([&] { run_census_cmd(g, in_path); });

    CLI::App* find_min = app.add_subcommand("find-minimal", "smallest census records matching a predicate");
    find_min->add_option("--in", in_path, "input file ('-' = stdin)");
    find_min->add_option("--predicate", predicate, "e.g. 'unstable && has_triangle'")->required();
    find_min->callback([&] { run_find_minimal(g, in_path, predicate); });

    CLI::App* vcx = app.add_subcommand("verify-counterexample",
                                       "build the demo instance and check every claim");
    vcx->add_option("--m", m, "number of layers")->check(CLI::Range(3, 1000));
    vcx->add_option("--base", base, "layer family, e.g. cycle:8");
    vcx->callback([&] { run_verify_counterexample(g, m, base); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const PropertyFalsified& e) {
        std::cerr << "property falsified: " << e.what() << "\n";
        return 1;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
