#include "cpoly/golden.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace cpoly {

using nlohmann::json;

std::string golden_dir() {
    if (const char* env = std::getenv("CP_GOLDEN_DIR"); env && *env) return env;
#ifdef CPOLY_SOURCE_GOLDEN_DIR
    return CPOLY_SOURCE_GOLDEN_DIR;
#else
    return "data/golden";
#endif
}

namespace {

json load_json(const std::string& filename) {
    const std::string path = golden_dir() + "/" + filename;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open data file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

std::vector<Halfspace> FacetMatrix::halfspaces() const {
    std::vector<Halfspace> out;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        out.push_back(Halfspace{vec_from_longs(normals[i]), offsets[i]});
    }
    return out;
}

Polytope FacetMatrix::polytope() const {
    return Polytope::from_hrep(halfspaces(), dim);
}

FacetMatrix load_facet_matrix(const std::string& filename) {
    const json j = load_json(filename);
    FacetMatrix m;
    m.name = j.at("name").get<std::string>();
    m.dim = j.at("dim").get<std::size_t>();
    m.normals = j.at("normals").get<std::vector<std::vector<long>>>();
    for (const auto& s : j.at("offsets")) {
        m.offsets.push_back(parse_rational(s.get<std::string>()));
    }
    if (m.normals.size() != m.offsets.size()) {
        throw std::runtime_error(filename + ": normals/offsets length mismatch");
    }
    for (const auto& n : m.normals) {
        if (n.size() != m.dim) {
            throw std::runtime_error(filename + ": normal of wrong dimension");
        }
    }
    return m;
}

std::vector<WordSeedRow> load_word_seed_table() {
    const json j = load_json("table1.json");
    std::vector<WordSeedRow> rows;
    for (const auto& r : j.at("rows")) {
        rows.push_back(WordSeedRow{r.at("word").get<Word>(), r.at("seed").get<int>(),
                                   r.at("nz_seed").get<int>()});
    }
    return rows;
}

std::vector<CaseFVector> load_case_f_vectors() {
    const json j = load_json("table2.json");
    std::vector<CaseFVector> cases;
    for (const auto& c : j.at("cases")) {
        cases.push_back(CaseFVector{c.at("case").get<int>(),
                                    c.at("seeds").get<std::vector<int>>(),
                                    c.at("f_vector").get<std::vector<long>>()});
    }
    return cases;
}

std::vector<CaseHistogram> load_case_histograms() {
    const json j = load_json("table3.json");
    std::vector<CaseHistogram> cases;
    for (const auto& c : j.at("cases")) {
        CaseHistogram h;
        h.case_id = c.at("case").get<int>();
        for (const auto& [deg, count] : c.at("facets_per_vertex").items()) {
            h.histogram[std::stoi(deg)] = count.get<int>();
        }
        cases.push_back(std::move(h));
    }
    return cases;
}

WordMoveGraph load_word_move_graph() {
    const json j = load_json("figure1_edges.json");
    WordMoveGraph g;
    g.words = j.at("words").get<std::vector<Word>>();
    for (const auto& e : j.at("two_moves")) {
        g.two_moves.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    for (const auto& e : j.at("three_moves")) {
        g.three_moves.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return g;
}

std::vector<std::vector<int>> LabeledGraph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

LabeledGraph load_reference_graph() {
    const json j = load_json("figure4_edges.json");
    LabeledGraph g;
    g.n = static_cast<int>(j.at("nodes").size());
    for (const auto& e : j.at("edges")) {
        g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    g.iota = j.at("iota").get<std::vector<int>>();
    g.iota_prime = j.at("iota_prime").get<std::vector<int>>();
    return g;
}

LabeledSeeds load_reference_seeds() {
    const json j = load_json("quivers.json");
    LabeledSeeds out;
    out.sl4.resize(j.at("sl4").size());
    for (const auto& entry : j.at("sl4")) {
        const int label = entry.at("label").get<int>();
        out.sl4[static_cast<std::size_t>(label)] = seed_from_json(entry.at("seed"));
    }
    out.sl3 = seed_from_json(j.at("sl3").at("seed"));
    return out;
}

TransportTree load_transport_tree() {
    const json j = load_json("transport_tree.json");
    TransportTree t;
    t.root = j.at("root").get<int>();
    for (const auto& e : j.at("edges")) {
        t.edges.push_back(TreeEdge{e.at("node").get<int>(), e.at("parent").get<int>(),
                                   e.at("k").get<int>()});
    }
    return t;
}

json seed_to_json(const Seed& s) {
    return json{{"n", s.n}, {"unfrozen", s.unfrozen}, {"epsilon", s.eps}};
}

Seed seed_from_json(const json& j) {
    Seed s;
    s.n = j.at("n").get<int>();
    s.unfrozen = j.at("unfrozen").get<std::vector<int>>();
    s.eps = j.at("epsilon").get<std::vector<std::vector<long>>>();
    if (s.eps.size() != s.unfrozen.size()) {
        throw std::runtime_error("seed: one epsilon row per unfrozen index expected");
    }
    for (const auto& row : s.eps) {
        if (row.size() != static_cast<std::size_t>(s.n)) {
            throw std::runtime_error("seed: epsilon row of wrong length");
        }
    }
    return s;
}

json polytope_to_json(const Polytope& p) {
    json j;
    j["dim"] = p.ambient_dim();
    if (p.dim() == static_cast<int>(p.ambient_dim())) {
        json normals = json::array();
        json offsets = json::array();
        for (const Halfspace& h : p.facets()) {
            normals.push_back(vec_to_longs(h.normal));
            offsets.push_back(format_rational(h.offset));
        }
        j["hrep"] = json{{"normals", std::move(normals)}, {"offsets", std::move(offsets)}};
    }
    json vrep = json::array();
    for (const Vec& v : p.vertices()) {
        json row = json::array();
        for (const Rational& x : v) row.push_back(format_rational(x));
        vrep.push_back(std::move(row));
    }
    j["vrep"] = std::move(vrep);
    return j;
}

}  // namespace cpoly
