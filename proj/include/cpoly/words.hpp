#pragma once

/* Reduced words for the longest permutation, and the braid moves between
 * them: commutation moves swap adjacent letters i, j with |i - j| >= 2,
 * and long braid moves rewrite (i, j, i) as (j, i, j) when |i - j| = 1.
 */

#include <utility>
#include <vector>

namespace cpoly {

using Word = std::vector<int>;  // letters are adjacent transpositions 1..n-1

/* Every reduced word for the longest element of the symmetric group S_n,
 * in lexicographic order. */
std::vector<Word> reduced_words(int n);

bool is_reduced_word_for_longest(const Word& w, int n);

struct MoveGraph {
    std::vector<Word> words;
    std::vector<std::pair<int, int>> two_moves;    // commutation edges, a < b
    std::vector<std::pair<int, int>> three_moves;  // long braid edges, a < b
};

MoveGraph build_move_graph(int n);

/* Connected components of the commutation-move subgraph, each sorted,
 * ordered by smallest member. */
std::vector<std::vector<int>> two_move_classes(const MoveGraph& g);

/* Whether every pair of words is linked by a chain of moves. */
bool moves_connect_all_words(const MoveGraph& g);

}  // namespace cpoly
