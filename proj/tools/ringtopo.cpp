// Command-line front end: inspect rings, build the attached graphs, decide
// planarity/projectivity/crosscap with certificates, and run the full
// reproduction suite.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ringtopo/classifier.hpp"
#include "ringtopo/verification.hpp"

using namespace ringtopo;

namespace {

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c)))
            out += c;
        else if (c == ',' || c == 'x' || c == ' ')
            out += '_';
    }
    while (out.find("__") != std::string::npos) out.replace(out.find("__"), 2, "_");
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    out << content;
    std::cout << "wrote " << path.string() << "\n";
}

Graph named_graph(const std::string& name) {
    for (const auto& known : obstruction_names())
        if (known == name) return obstruction(name).graph;
    if (name.size() > 1 && (name[0] == 'K' || name[0] == 'k')) {
        auto body = name.substr(1);
        auto comma = body.find(',');
        if (comma == std::string::npos) return complete_graph(std::stoi(body));
        return complete_bipartite(std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1)));
    }
    return obstruction(name).graph;  // reports the unknown name
}

Graph build_family_graph(const FiniteRing& ring, const std::string& family, const std::string& s_text,
                         bool loops, std::vector<Elem>* s_out = nullptr) {
    if (family == "comaximal") return build_comaximal(ring);
    std::vector<Elem> s;
    if (family == "unit")
        s = {ring.one()};
    else if (family == "cayley")
        s = {ring.neg(ring.one())};
    else if (s_text == "U")
        s = ring.units();
    else
        s = parse_element_set(ring, s_text);
    if (s_out) *s_out = s;
    return build_gamma(ring, validate_S(ring, ring.units(), s), loops);
}

std::string topo_witness_summary(const ComputedClass& c) { return to_string(c.cls) + " (" + c.witness + ")"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring graph topology toolkit"};
    app.require_subcommand(1);

    long long budget = 10'000'000;
    int workers = 1;
    std::string out_dir;
    std::string format = "text";
    app.add_option("--budget", budget, "search budget in backtrack nodes");
    app.add_option("--workers", workers, "worker threads for independent checks");
    app.add_option("--out", out_dir, "output directory for witness files");
    app.add_option("--format", format, "output format: text, tsv or dot")
        ->check(CLI::IsMember({"text", "tsv", "dot"}));

    // ring
    auto* ring_cmd = app.add_subcommand("ring", "inspect a ring given by its spec");
    std::string ring_spec;
    ring_cmd->add_option("spec", ring_spec, "ring spec, e.g. \"Z2 x Z3[x]/(x^2)\"")->required();

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "build a ring graph and print it");
    std::string g_ring, g_family = "gamma", g_s = "U";
    bool g_loops = false, g_report = false;
    graph_cmd->add_option("--ring", g_ring, "ring spec")->required();
    graph_cmd->add_option("--family", g_family, "gamma, unit, cayley or comaximal")
        ->check(CLI::IsMember({"gamma", "unit", "cayley", "comaximal"}));
    graph_cmd->add_option("--S", g_s, "connection set: codes/tuples, or U for all units");
    graph_cmd->add_flag("--loops", g_loops, "keep loops (the gamma-bar variant)");
    graph_cmd->add_flag("--report", g_report, "print the structure report instead of the edge list");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "theory vs computed topological class");
    std::string c_ring, c_family = "gamma", c_s = "U";
    bool c_universe = false;
    classify_cmd->add_option("--ring", c_ring, "ring spec");
    classify_cmd->add_option("--family", c_family, "gamma, unit, cayley or comaximal")
        ->check(CLI::IsMember({"gamma", "unit", "cayley", "comaximal"}));
    classify_cmd->add_option("--S", c_s, "connection set for the gamma family");
    classify_cmd->add_flag("--universe", c_universe, "cross-validate the whole default ring universe");

    // crosscap
    auto* crosscap_cmd = app.add_subcommand("crosscap", "exact crosscap with witnesses");
    std::string x_ring, x_family = "gamma", x_s = "U", x_graph_file, x_named, x_check_cert;
    crosscap_cmd->add_option("--ring", x_ring, "ring spec");
    crosscap_cmd->add_option("--family", x_family, "gamma, unit, cayley or comaximal");
    crosscap_cmd->add_option("--S", x_s, "connection set for the gamma family");
    crosscap_cmd->add_option("--graph", x_graph_file, "edge-list file");
    crosscap_cmd->add_option("--named", x_named, "named graph: K6, K3,3 or a catalog obstruction");
    crosscap_cmd->add_option("--check-cert", x_check_cert, "verify a stored certificate against the input");

    // obstruction
    auto* obs_cmd = app.add_subcommand("obstruction", "catalog of named evidence graphs");
    std::string o_verb = "list", o_name;
    obs_cmd->add_option("verb", o_verb, "list or export")->check(CLI::IsMember({"list", "export"}));
    obs_cmd->add_option("--name", o_name, "catalog entry to export");

    // verify-paper
    auto* verify_cmd = app.add_subcommand("verify-paper", "run the full reproduction suite");
    bool v_slow = false;
    int v_section = 0;
    std::string v_certs_dir;
    verify_cmd->add_flag("--include-slow", v_slow, "also run the slow optional item");
    verify_cmd->add_option("--section", v_section, "run only the items for one section");
    verify_cmd->add_option("--certs-dir", v_certs_dir, "directory with the bundled certificates");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ring_cmd) {
            auto spec = parse_ring_spec(ring_spec);
            auto r = compile_ring(spec);
            std::cout << "spec:    " << spec_to_string(spec) << "\n";
            std::cout << "order:   " << r.order() << "\n";
            std::cout << "units:   " << r.units().size() << " {";
            for (std::size_t i = 0; i < r.units().size(); ++i)
                std::cout << (i ? "," : "") << format_element(r, r.units()[i]);
            std::cout << "}\n";
            std::cout << "radical: " << r.jacobson_radical().size() << " {";
            for (std::size_t i = 0; i < r.jacobson_radical().size(); ++i)
                std::cout << (i ? "," : "") << format_element(r, r.jacobson_radical()[i]);
            std::cout << "}\n";
            std::vector<Elem> m;
            if (r.is_local(&m))
                std::cout << "local:   yes, maximal ideal of size " << m.size() << "\n";
            else
                std::cout << "local:   no\n";
            auto ideals = r.index2_maximal_ideals();
            std::cout << "index-2 maximal ideals: " << ideals.size() << "\n";
            try {
                std::cout << "decomposition: " << canonical_decomposition(r).display << "\n";
            } catch (const NonCanonicalSpec&) {
                std::cout << "decomposition: outside the local-ring catalog\n";
            }
            return 0;
        }

        if (*graph_cmd) {
            auto ring = compile_ring(parse_ring_spec(g_ring));
            auto g = build_family_graph(ring, g_family, g_s, g_loops);
            if (g_report) {
                auto rep = structure_report(g);
                std::cout << "p=" << rep.p << " q=" << rep.q << " components=" << rep.components
                          << " min-degree=" << rep.min_degree
                          << " bipartite=" << (rep.bipartite ? "yes" : "no")
                          << " triangle-free=" << (rep.triangle_free ? "yes" : "no") << "\n";
            } else if (format == "dot") {
                std::cout << graph_to_dot(g);
            } else {
                std::cout << graph_to_text(g);
            }
            return 0;
        }

        if (*classify_cmd) {
            if (c_universe) {
                RingUniverse universe;
                auto rows = cross_validate(universe, budget, workers);
                int disagreements = 0;
                for (const auto& row : rows) {
                    if (!row.agreement) ++disagreements;
                    if (format == "tsv")
                        std::cout << row.ring_spec << "\t" << row.family << "\t" << row.s_desc << "\t"
                                  << to_string(row.theory) << "\t" << to_string(row.computed) << "\t"
                                  << row.witness << "\t" << (row.agreement ? "yes" : "no") << "\n";
                    else
                        std::cout << (row.agreement ? "ok   " : "DIFF ") << row.ring_spec << " "
                                  << row.family << " " << row.s_desc << ": theory "
                                  << to_string(row.theory) << ", computed " << to_string(row.computed)
                                  << "\n";
                }
                std::cerr << rows.size() << " rows, " << disagreements << " disagreements\n";
                return disagreements == 0 ? 0 : 1;
            }
            if (c_ring.empty()) {
                std::cerr << "classify needs --ring or --universe\n";
                return 1;
            }
            auto ring = compile_ring(parse_ring_spec(c_ring));
            std::vector<Elem> s;
            auto g = build_family_graph(ring, c_family, c_s, false, &s);
            TopoClass theory = c_family == "comaximal" ? theory_comaximal_class(ring)
                                                       : theory_gamma_class(ring, s);
            auto computed = compute_topo_class(g, budget);
            std::string witness_path;
            if (!out_dir.empty()) {
                std::string base = c_family + "_" + sanitize(spec_to_string(parse_ring_spec(c_ring)));
                if (c_family != "comaximal") base += "_S" + sanitize(classify_detail::describe_s(ring, s));
                if (computed.certificate) {
                    auto path = std::filesystem::path(out_dir) / (base + ".cert");
                    write_file(path, certificate_to_text(*computed.certificate));
                    witness_path = path.string();
                } else if (computed.obstruction) {
                    auto path = std::filesystem::path(out_dir) / (base + ".obstruction");
                    std::ostringstream os;
                    os << "obstruction " << computed.obstruction->name << "\n";
                    const auto& model = computed.obstruction->model;
                    os << "branch";
                    for (int v : model.branch_vertices) os << " " << v;
                    os << "\n";
                    for (std::size_t i = 0; i < model.paths.size(); ++i) {
                        os << "path " << model.pattern_edges[i].first << " "
                           << model.pattern_edges[i].second << ":";
                        for (int v : model.paths[i]) os << " " << v;
                        os << "\n";
                    }
                    write_file(path, os.str());
                    witness_path = path.string();
                }
            }
            if (format == "tsv") {
                std::cout << c_ring << "\t" << c_family << "\t"
                          << (c_family == "comaximal" ? "" : classify_detail::describe_s(ring, s)) << "\t"
                          << to_string(theory) << "\t" << to_string(computed.cls) << "\t" << witness_path
                          << "\t" << (computed.cls == theory ? "yes" : "no") << "\n";
            } else {
                std::cout << "ring:     " << c_ring << "\n";
                std::cout << "family:   " << c_family << "\n";
                if (c_family != "comaximal")
                    std::cout << "S:        " << classify_detail::describe_s(ring, s) << "\n";
                std::cout << "theory:   " << to_string(theory) << "\n";
                std::cout << "computed: " << topo_witness_summary(computed) << "\n";
                std::cout << "agreement: " << (computed.cls == theory ? "yes" : "NO") << "\n";
            }
            return computed.cls == TopoClass::unknown ? 2 : 0;
        }

        if (*crosscap_cmd) {
            Graph g;
            std::string label;
            if (!x_graph_file.empty()) {
                std::ifstream in(x_graph_file);
                if (!in.good()) {
                    std::cerr << "cannot read " << x_graph_file << "\n";
                    return 1;
                }
                std::stringstream buffer;
                buffer << in.rdbuf();
                g = graph_from_text(buffer.str());
                label = std::filesystem::path(x_graph_file).stem().string();
            } else if (!x_named.empty()) {
                g = named_graph(x_named);
                label = sanitize(x_named);
            } else if (!x_ring.empty()) {
                auto ring = compile_ring(parse_ring_spec(x_ring));
                g = build_family_graph(ring, x_family, x_s, false);
                label = x_family + "_" + sanitize(x_ring);
            } else {
                std::cerr << "crosscap needs --graph, --named or --ring\n";
                return 1;
            }

            if (!x_check_cert.empty()) {
                std::ifstream in(x_check_cert);
                std::stringstream buffer;
                buffer << in.rdbuf();
                auto cert = certificate_from_text(buffer.str());
                auto verdict = verify_certificate(g, cert);
                std::cout << (verdict.ok ? "certificate ok" : "certificate INVALID: " + verdict.reason)
                          << "\n";
                return verdict.ok ? 0 : 1;
            }

            auto result = crosscap_exact(g, budget);
            if (result.exact)
                std::cout << "crosscap: " << *result.upper << " (exact)\n";
            else if (result.upper)
                std::cout << "crosscap: in [" << result.lower << ", " << *result.upper << "]"
                          << (result.unknown ? " (budget-limited)" : "") << "\n";
            else
                std::cout << "crosscap: >= " << result.lower
                          << (result.unknown ? " (budget-limited)" : "") << "\n";
            std::cout << "lower: " << result.lower_reason << "\n";
            if (result.upper) std::cout << "upper: " << result.upper_reason << "\n";
            for (const auto& obs : result.obstructions)
                std::cout << "obstruction witness: " << obs.name << "\n";
            if (!out_dir.empty())
                for (std::size_t i = 0; i < result.certificates.size(); ++i)
                    write_file(std::filesystem::path(out_dir) /
                                   (label + "_cert" + std::to_string(i) + ".cert"),
                               certificate_to_text(result.certificates[i]));
            return result.unknown ? 2 : 0;
        }

        if (*obs_cmd) {
            if (o_verb == "list") {
                for (const auto& name : obstruction_names()) {
                    const auto& entry = obstruction(name);
                    std::cout << name << ": " << entry.graph.vertex_count() << " vertices, "
                              << entry.graph.edge_count() << " edges  [" << entry.provenance << "]\n";
                }
                return 0;
            }
            if (o_name.empty()) {
                std::cerr << "obstruction export needs --name\n";
                return 1;
            }
            const auto& entry = obstruction(o_name);
            std::string text = format == "dot" ? graph_to_dot(entry.graph, o_name)
                                               : graph_to_text(entry.graph);
            if (out_dir.empty())
                std::cout << text;
            else
                write_file(std::filesystem::path(out_dir) / (o_name + (format == "dot" ? ".dot" : ".edges")),
                           text);
            return 0;
        }

        if (*verify_cmd) {
            RunConfig config;
            config.budget = budget;
            config.workers = workers;
            config.out_dir = out_dir;
            config.include_slow = v_slow;
            config.section = v_section;
            config.certs_dir = v_certs_dir.empty()
                                   ? std::string(RINGTOPO_SOURCE_DIR) + "/data/certificates"
                                   : v_certs_dir;
            auto results = run_verification(config);
            for (const auto& r : results) {
                if (format == "tsv")
                    std::cout << r.id << "\t" << r.section << "\t" << to_string(r.status) << "\t"
                              << r.detail << "\n";
                else
                    std::printf("%-7s s%d %-32s %6.2fs  %s\n", to_string(r.status).c_str(), r.section,
                                r.id.c_str(), r.seconds, r.detail.c_str());
            }
            return verification_exit_code(results);
        }
    } catch (const RingParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
