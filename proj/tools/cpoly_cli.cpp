/* Command line front end: mutation graphs, transported polytopes, the
 * verification suite, the equivalence classification, reduced words and
 * polytope fingerprints. Exit codes: 0 on success, 1 when a verification
 * or classification comparison fails, 2 on usage or I/O errors.
 */

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cpoly/equivalence.hpp"
#include "cpoly/flag.hpp"
#include "cpoly/golden.hpp"
#include "cpoly/verify.hpp"
#include "cpoly/words.hpp"

namespace {

using nlohmann::json;
using namespace cpoly;

/* Facet rows printed with aligned columns. */
void print_facets(std::ostream& os, const Polytope& p) {
    std::vector<std::vector<long>> rows;
    std::size_t width = 1;
    for (const Halfspace& h : p.facets()) {
        rows.push_back(vec_to_longs(h.normal));
        for (long x : rows.back()) {
            width = std::max(width, std::to_string(x).size());
        }
    }
    const auto facets = p.facets();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            os << " " << std::setw(static_cast<int>(width)) << rows[i][j];
        }
        os << " ] >= " << format_rational(facets[i].offset) << "\n";
    }
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_longs(m.row(i)));
    return rows;
}

json graph_to_json(const ExchangeGraph& g, int n) {
    json nodes = json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        nodes.push_back(json{{"label", i}, {"seed", seed_to_json(g.nodes[i])}});
    }
    json edges = json::array();
    for (const GraphEdge& e : g.edges) {
        edges.push_back(json{{"a", e.a}, {"b", e.b}, {"dir_a", e.dir_a}, {"dir_b", e.dir_b}});
    }
    return json{{"n", n}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

std::vector<std::vector<int>> involution_orbits(const LabeledGraph& ref) {
    const std::size_t n = static_cast<std::size_t>(ref.n);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    for (std::size_t v = 0; v < n; ++v) {
        parent[static_cast<std::size_t>(find(static_cast<int>(v)))] =
            find(ref.iota[v]);
        parent[static_cast<std::size_t>(find(static_cast<int>(v)))] =
            find(ref.iota_prime[v]);
    }
    std::map<int, std::vector<int>> groups;
    for (std::size_t v = 0; v < n; ++v) {
        groups[find(static_cast<int>(v))].push_back(static_cast<int>(v));
    }
    std::vector<std::vector<int>> orbits;
    for (auto& [root, members] : groups) orbits.push_back(std::move(members));
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

std::string braces(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "}";
    return os.str();
}

int cmd_exchange_graph(int n, bool as_json, std::ostream& os) {
    const ExchangeGraph g = (n == 3) ? labeled_graph_sl3() : labeled_graph_sl4();
    if (as_json) {
        os << graph_to_json(g, n).dump(2) << "\n";
        return 0;
    }
    os << g.nodes.size() << " seed classes, " << g.edges.size() << " exchange edges\n";
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        os << "node " << v << ":";
        for (const auto& [k, t] : g.neighbors[v]) {
            os << "  --" << k << "--> " << t;
        }
        os << "\n";
    }
    return 0;
}

int cmd_polytope(int n, int label, bool as_json, std::ostream& os) {
    const TransportedFamily& fam = (n == 3) ? pipeline().sl3 : pipeline().sl4;
    if (label < 0 || static_cast<std::size_t>(label) >= fam.polytopes.size()) {
        throw std::runtime_error("no node with label " + std::to_string(label));
    }
    const Polytope& p = fam.polytopes[static_cast<std::size_t>(label)];
    if (as_json) {
        json j = polytope_to_json(p);
        j["n"] = n;
        j["label"] = label;
        os << j.dump(2) << "\n";
        return 0;
    }
    const auto fv = p.f_vector();
    os << "node " << label << ": " << p.vertices().size() << " vertices, "
       << p.facets().size() << " facets, f-vector (";
    for (std::size_t i = 0; i < fv.size(); ++i) os << (i ? ", " : "") << fv[i];
    os << "), " << (p.is_reflexive() ? "reflexive" : "not reflexive") << "\n";
    os << "facets (normal | offset):\n";
    print_facets(os, p);
    return 0;
}

int cmd_verify_all(const std::string& only, bool as_json, std::ostream& os) {
    std::vector<CheckResult> results;
    if (only.empty()) {
        results = run_all_checks();
    } else {
        results.push_back(run_check(only));
    }
    bool all_pass = true;
    json report = json::array();
    for (const CheckResult& r : results) {
        all_pass = all_pass && r.pass;
        if (as_json) {
            report.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        } else {
            os << (r.pass ? "PASS" : "FAIL") << " " << r.name;
            if (!r.detail.empty()) os << " - " << r.detail;
            os << "\n";
        }
    }
    if (as_json) os << report.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

int cmd_classify(bool orbits, bool facets, bool as_json, std::ostream& os) {
    const Classification& cls = pipeline().classification;
    const TransportedFamily& fam = pipeline().sl4;
    const LabeledGraph ref = load_reference_graph();

    std::vector<int> twelve;
    for (std::size_t v = 0; v < fam.polytopes.size(); ++v) {
        if (fam.polytopes[v].facets().size() == 12) twelve.push_back(static_cast<int>(v));
    }

    if (as_json) {
        json j;
        j["classes"] = cls.classes;
        j["involutions"] = json{{"iota", json{{"images", ref.iota}}},
                                {"iota_prime", json{{"images", ref.iota_prime}}}};
        json maps = json::array();
        for (const WitnessMap& wm : cls.witnesses) {
            maps.push_back(json{{"from", wm.from}, {"to", wm.to},
                                {"matrix", mat_to_json(wm.map.linear)}});
        }
        j["witness_maps"] = std::move(maps);
        if (orbits) j["orbits"] = involution_orbits(ref);
        if (facets) j["facet_count_12"] = twelve;
        os << j.dump(2) << "\n";
        return 0;
    }

    if (facets) {
        os << "nodes with exactly 12 facets: " << braces(twelve) << "\n";
        return 0;
    }
    if (orbits) {
        const auto orbs = involution_orbits(ref);
        os << orbs.size() << " orbits under the involution group:\n";
        for (const auto& o : orbs) os << "  " << braces(o) << "\n";
        return 0;
    }
    os << cls.classes.size() << " equivalence classes:\n";
    for (std::size_t c = 0; c < cls.classes.size(); ++c) {
        os << "  class " << c + 1 << ": " << braces(cls.classes[c]) << "\n";
    }
    os << cls.witnesses.size() << " verified witness maps:\n";
    for (const WitnessMap& wm : cls.witnesses) {
        os << "  " << wm.from << " -> " << wm.to << ":";
        for (std::size_t i = 0; i < wm.map.linear.rows(); ++i) {
            const auto row = vec_to_longs(wm.map.linear.row(i));
            os << " (";
            for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
            os << ")";
        }
        os << "\n";
    }
    os << "involution images: ";
    for (std::size_t v = 0; v < ref.iota.size(); ++v) {
        os << (v ? ", " : "") << v << "->" << ref.iota[v] << "/" << ref.iota_prime[v];
    }
    os << "\n";
    return 0;
}

int cmd_reduced_words(int n, bool as_json, std::ostream& os) {
    const std::vector<Word> words = reduced_words(n);
    const bool with_moves = n <= 5;
    MoveGraph mg;
    if (with_moves) mg = build_move_graph(n);

    if (as_json) {
        json j;
        j["n"] = n;
        j["count"] = words.size();
        j["words"] = words;
        if (with_moves) {
            j["two_moves"] = mg.two_moves;
            j["three_moves"] = mg.three_moves;
            j["two_move_classes"] = two_move_classes(mg).size();
            j["moves_connect_all"] = moves_connect_all_words(mg);
        }
        os << j.dump(2) << "\n";
        return 0;
    }
    os << words.size() << " reduced words for the longest element of S_" << n << "\n";
    for (const Word& w : words) {
        for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
        os << "\n";
    }
    if (with_moves) {
        os << mg.two_moves.size() << " commutation moves, " << mg.three_moves.size()
           << " long braid moves, " << two_move_classes(mg).size()
           << " commutation classes, "
           << (moves_connect_all_words(mg) ? "connected" : "disconnected") << "\n";
    }
    return 0;
}

int cmd_fingerprint(int n, int label, bool as_json, std::ostream& os) {
    const TransportedFamily& fam = (n == 3) ? pipeline().sl3 : pipeline().sl4;
    if (label < 0 || static_cast<std::size_t>(label) >= fam.polytopes.size()) {
        throw std::runtime_error("no node with label " + std::to_string(label));
    }
    const Polytope& p = fam.polytopes[static_cast<std::size_t>(label)];
    const Fingerprint fp = fingerprint(p);
    if (as_json) {
        json hist, fhist;
        for (const auto& [deg, count] : fp.degree_histogram) {
            hist[std::to_string(deg)] = count;
        }
        for (const auto& [deg, count] : fp.facet_histogram) {
            fhist[std::to_string(deg)] = count;
        }
        json j{{"n", n},
               {"label", label},
               {"f_vector", fp.f_vector},
               {"degree_histogram", std::move(hist)},
               {"facets_per_vertex", std::move(fhist)},
               {"facet_count", fp.facet_count},
               {"lattice_points_d1", fp.lattice_points_d1},
               {"lattice_points_d2", fp.lattice_points_d2},
               {"reflexive", p.is_reflexive()}};
        os << j.dump(2) << "\n";
        return 0;
    }
    os << "node " << label << " fingerprint\n";
    os << "  f-vector: (";
    for (std::size_t i = 0; i < fp.f_vector.size(); ++i) {
        os << (i ? ", " : "") << fp.f_vector[i];
    }
    os << ")\n  degree histogram:";
    for (const auto& [deg, count] : fp.degree_histogram) {
        os << " " << deg << ":" << count;
    }
    os << "\n  facets per vertex:";
    for (const auto& [deg, count] : fp.facet_histogram) {
        os << " " << deg << ":" << count;
    }
    os << "\n  facets: " << fp.facet_count << "\n";
    os << "  lattice points (dilation 1, 2): " << fp.lattice_points_d1 << ", "
       << fp.lattice_points_d2 << "\n";
    os << "  reflexive: " << (p.is_reflexive() ? "yes" : "no") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mutation and transport of flag Newton-Okounkov polytopes"};
    app.require_subcommand(1);

    int n = 4;
    int label = 0;
    int words_n = 4;
    bool as_json = false;
    std::string out_path;
    std::string only;
    bool orbits = false;
    bool facets = false;

    auto* graph_cmd = app.add_subcommand("exchange-graph", "mutation graph of seed classes");
    graph_cmd->add_option("--n", n, "rank selector (3 or 4)")->check(CLI::IsMember({3, 4}));

    auto* poly_cmd = app.add_subcommand("polytope", "transported polytope at a labeled node");
    poly_cmd->add_option("--n", n, "rank selector (3 or 4)")->check(CLI::IsMember({3, 4}));
    poly_cmd->add_option("--seed", label, "node label")->required();

    auto* verify_cmd = app.add_subcommand("verify-all", "run the verification checks");
    verify_cmd->add_option("--only", only, "run a single named check");

    auto* classify_cmd =
        app.add_subcommand("classify", "unimodular equivalence classes and involutions");
    classify_cmd->add_flag("--orbits", orbits, "orbits under the involution group");
    classify_cmd->add_flag("--facets", facets, "nodes whose polytope has exactly 12 facets");

    auto* words_cmd = app.add_subcommand("reduced-words", "reduced words and braid moves");
    words_cmd->add_option("--n", words_n, "symmetric group S_n (2..6)")
        ->check(CLI::Range(2, 6));

    auto* fp_cmd = app.add_subcommand("fingerprint", "equivalence invariants of one polytope");
    fp_cmd->add_option("--n", n, "rank selector (3 or 4)")->check(CLI::IsMember({3, 4}));
    fp_cmd->add_option("--seed", label, "node label")->required();

    for (auto* cmd : {graph_cmd, poly_cmd, verify_cmd, classify_cmd, words_cmd, fp_cmd}) {
        cmd->add_flag("--json", as_json, "emit JSON");
        cmd->add_option("--out", out_path, "write output to a file");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::ofstream file_out;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) {
            std::cerr << "error: cannot open output file " << out_path << "\n";
            return 2;
        }
        os = &file_out;
    }

    try {
        if (*graph_cmd) return cmd_exchange_graph(n, as_json, *os);
        if (*poly_cmd) return cmd_polytope(n, label, as_json, *os);
        if (*verify_cmd) return cmd_verify_all(only, as_json, *os);
        if (*classify_cmd) return cmd_classify(orbits, facets, as_json, *os);
        if (*words_cmd) return cmd_reduced_words(words_n, as_json, *os);
        if (*fp_cmd) return cmd_fingerprint(n, label, as_json, *os);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        /* internal cross-validation failed: report as verification error */
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
