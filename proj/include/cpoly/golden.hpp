#pragma once

/* Reference data shipped with the repository (facet matrices, expected
 * f-vectors and degree histograms, labeled seeds, move and mutation
 * graphs), plus the JSON serialization shared with the command line tool.
 * The data directory is resolved from the CP_GOLDEN_DIR environment
 * variable when set, otherwise from the checkout location baked in at
 * configure time.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cpoly/polytope.hpp"
#include "cpoly/seed.hpp"
#include "cpoly/words.hpp"

namespace cpoly {

std::string golden_dir();

/* An H-description with integral primitive normals, stored column-wise in
 * the reference files as one inner array per facet. */
struct FacetMatrix {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::vector<long>> normals;
    std::vector<Rational> offsets;

    std::vector<Halfspace> halfspaces() const;
    Polytope polytope() const;
};

FacetMatrix load_facet_matrix(const std::string& filename);

struct WordSeedRow {
    Word word;
    int seed = 0;     // seed attached to the word
    int nz_seed = 0;  // seed attached to the word in the other normalization
};
std::vector<WordSeedRow> load_word_seed_table();

struct CaseFVector {
    int case_id = 0;
    std::vector<int> seeds;
    std::vector<long> f_vector;
};
std::vector<CaseFVector> load_case_f_vectors();

struct CaseHistogram {
    int case_id = 0;
    std::map<int, int> histogram;  // vertex degree -> count
};
std::vector<CaseHistogram> load_case_histograms();

struct WordMoveGraph {
    std::vector<Word> words;
    std::vector<std::pair<int, int>> two_moves;
    std::vector<std::pair<int, int>> three_moves;
};
WordMoveGraph load_word_move_graph();

/* The labeled 14-node mutation graph together with its two displayed
 * involutions (as image arrays on the labels). */
struct LabeledGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> iota;
    std::vector<int> iota_prime;

    std::vector<std::vector<int>> adjacency() const;
};
LabeledGraph load_reference_graph();

/* Seeds by label: fourteen rank-3 seeds and one rank-1 seed. */
struct LabeledSeeds {
    std::vector<Seed> sl4;
    Seed sl3;
};
LabeledSeeds load_reference_seeds();

struct TreeEdge {
    int node = 0;
    int parent = 0;
    int k = 0;  // mutation direction from parent to node
};
struct TransportTree {
    int root = 0;
    std::vector<TreeEdge> edges;  // in an order where parents precede children
};
TransportTree load_transport_tree();

/* JSON forms used across the data files and the command line tool. */
nlohmann::json seed_to_json(const Seed& s);
Seed seed_from_json(const nlohmann::json& j);
nlohmann::json polytope_to_json(const Polytope& p);

}  // namespace cpoly
