#include "cpoly/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cpoly {

namespace {

void collect_words(int n, std::vector<int>& u, Word& cur, std::size_t target,
                   std::vector<Word>& out) {
    if (cur.size() == target) {
        out.push_back(cur);
        return;
    }
    /* Appending letter i multiplies on the right by the transposition of
     * positions i, i+1; the word stays reduced exactly on ascents. */
    for (int i = 1; i < n; ++i) {
        if (u[static_cast<std::size_t>(i)] < u[static_cast<std::size_t>(i + 1)]) {
            std::swap(u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i + 1)]);
            cur.push_back(i);
            collect_words(n, u, cur, target, out);
            cur.pop_back();
            std::swap(u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i + 1)]);
        }
    }
}

}  // namespace

std::vector<Word> reduced_words(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("reduced_words: n out of range");
    std::vector<int> u(static_cast<std::size_t>(n) + 1);
    std::iota(u.begin(), u.end(), 0);
    Word cur;
    std::vector<Word> out;
    collect_words(n, u, cur, static_cast<std::size_t>(n) * (n - 1) / 2, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_reduced_word_for_longest(const Word& w, int n) {
    if (w.size() != static_cast<std::size_t>(n) * (n - 1) / 2) return false;
    std::vector<int> u(static_cast<std::size_t>(n) + 1);
    std::iota(u.begin(), u.end(), 0);
    for (int i : w) {
        if (i < 1 || i >= n) return false;
        if (u[static_cast<std::size_t>(i)] > u[static_cast<std::size_t>(i + 1)]) return false;
        std::swap(u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i + 1)]);
    }
    return true;
}

MoveGraph build_move_graph(int n) {
    MoveGraph g;
    g.words = reduced_words(n);
    std::map<Word, int> index;
    for (std::size_t i = 0; i < g.words.size(); ++i) {
        index[g.words[i]] = static_cast<int>(i);
    }

    std::set<std::pair<int, int>> twos, threes;
    for (std::size_t i = 0; i < g.words.size(); ++i) {
        const Word& w = g.words[i];
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            if (std::abs(w[p] - w[p + 1]) >= 2) {
                Word m = w;
                std::swap(m[p], m[p + 1]);
                const int j = index.at(m);
                twos.insert(std::minmax(static_cast<int>(i), j));
            }
        }
        for (std::size_t p = 0; p + 2 < w.size(); ++p) {
            if (w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
                /* (a, b, a) becomes (b, a, b) */
                Word m = w;
                std::swap(m[p], m[p + 1]);
                m[p + 2] = m[p];
                const int j = index.at(m);
                threes.insert(std::minmax(static_cast<int>(i), j));
            }
        }
    }
    g.two_moves.assign(twos.begin(), twos.end());
    g.three_moves.assign(threes.begin(), threes.end());
    return g;
}

namespace {

std::vector<std::vector<int>> components(std::size_t n,
                                         const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> comp(n, -1);
    int count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{static_cast<int>(s)};
        comp[s] = count;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    std::vector<std::vector<int>> out(static_cast<std::size_t>(count));
    for (std::size_t v = 0; v < n; ++v) {
        out[static_cast<std::size_t>(comp[v])].push_back(static_cast<int>(v));
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> two_move_classes(const MoveGraph& g) {
    return components(g.words.size(), g.two_moves);
}

bool moves_connect_all_words(const MoveGraph& g) {
    std::vector<std::pair<int, int>> all = g.two_moves;
    all.insert(all.end(), g.three_moves.begin(), g.three_moves.end());
    return components(g.words.size(), all).size() == 1;
}

}  // namespace cpoly
