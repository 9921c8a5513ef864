#include "cpoly/seed.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cpoly {

int Seed::row_of(int label) const {
    const auto it = std::find(unfrozen.begin(), unfrozen.end(), label);
    if (it == unfrozen.end()) throw std::invalid_argument("label is not unfrozen");
    return static_cast<int>(it - unfrozen.begin());
}

bool Seed::is_unfrozen(int label) const {
    return std::find(unfrozen.begin(), unfrozen.end(), label) != unfrozen.end();
}

long Seed::at(int i, int j) const {
    return eps[static_cast<std::size_t>(row_of(i))][static_cast<std::size_t>(j - 1)];
}

namespace {

int sgn(long x) { return (x > 0) - (x < 0); }

}  // namespace

Seed mutate(const Seed& s, int k) {
    if (!s.is_unfrozen(k)) throw std::invalid_argument("mutation direction must be unfrozen");
    Seed out = s;
    for (std::size_t r = 0; r < s.eps.size(); ++r) {
        const int i = s.unfrozen[r];
        for (int j = 1; j <= s.n; ++j) {
            const long e_ij = s.eps[r][static_cast<std::size_t>(j - 1)];
            long v;
            if (i == k || j == k) {
                v = -e_ij;
            } else {
                const long e_ik = s.at(i, k);
                const long e_kj = s.at(k, j);
                v = e_ij + sgn(e_ik) * std::max(e_ik * e_kj, 0L);
            }
            out.eps[r][static_cast<std::size_t>(j - 1)] = v;
        }
    }
    return out;
}

Perm identity_perm(int n) {
    Perm p(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

Seed relabel_seed(const Seed& s, const Perm& sigma) {
    Seed out = s;
    for (std::size_t r = 0; r < s.eps.size(); ++r) {
        const int i = s.unfrozen[r];
        const int si = sigma[static_cast<std::size_t>(i)];
        if (!s.is_unfrozen(si)) {
            throw std::invalid_argument("relabeling must preserve the unfrozen set");
        }
        const std::size_t sr = static_cast<std::size_t>(s.row_of(si));
        for (int j = 1; j <= s.n; ++j) {
            const int sj = sigma[static_cast<std::size_t>(j)];
            out.eps[sr][static_cast<std::size_t>(sj - 1)] =
                s.eps[r][static_cast<std::size_t>(j - 1)];
        }
    }
    return out;
}

Vec relabel_point(const Vec& x, const Perm& sigma) {
    Vec y(x.size());
    for (std::size_t j = 1; j <= x.size(); ++j) {
        y[static_cast<std::size_t>(sigma[j] - 1)] = x[j - 1];
    }
    return y;
}

std::vector<Perm> frozen_fixing_perms(const Seed& s) {
    std::vector<int> images = s.unfrozen;
    std::sort(images.begin(), images.end());
    std::vector<Perm> out;
    do {
        Perm sigma = identity_perm(s.n);
        for (std::size_t r = 0; r < s.unfrozen.size(); ++r) {
            sigma[static_cast<std::size_t>(s.unfrozen[r])] = images[r];
        }
        out.push_back(std::move(sigma));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::optional<Perm> relabeling_between(const Seed& a, const Seed& b) {
    if (a.n != b.n || a.unfrozen != b.unfrozen) return std::nullopt;
    for (const Perm& sigma : frozen_fixing_perms(a)) {
        if (relabel_seed(a, sigma) == b) return sigma;
    }
    return std::nullopt;
}

std::vector<Perm> all_relabelings_between(const Seed& a, const Seed& b) {
    std::vector<Perm> out;
    if (a.n != b.n || a.unfrozen != b.unfrozen) return out;
    for (const Perm& sigma : frozen_fixing_perms(a)) {
        if (relabel_seed(a, sigma) == b) out.push_back(sigma);
    }
    return out;
}

std::vector<std::vector<long>> canonical_eps(const Seed& s) {
    std::vector<std::vector<long>> best;
    for (const Perm& sigma : frozen_fixing_perms(s)) {
        std::vector<std::vector<long>> cur = relabel_seed(s, sigma).eps;
        if (best.empty() || cur < best) best = std::move(cur);
    }
    return best;
}

std::vector<std::vector<int>> ExchangeGraph::adjacency() const {
    std::vector<std::vector<int>> adj(nodes.size());
    for (const GraphEdge& e : edges) {
        adj[static_cast<std::size_t>(e.a)].push_back(e.b);
        adj[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

ExchangeGraph build_exchange_graph(const Seed& start, std::size_t max_nodes) {
    ExchangeGraph g;
    std::map<std::vector<std::vector<long>>, int> index;

    auto add_node = [&](const Seed& s) {
        const auto key = canonical_eps(s);
        const auto it = index.find(key);
        if (it != index.end()) return it->second;
        const int id = static_cast<int>(g.nodes.size());
        index.emplace(key, id);
        g.nodes.push_back(s);
        g.neighbors.emplace_back();
        return id;
    };

    add_node(start);
    for (std::size_t cur = 0; cur < g.nodes.size(); ++cur) {
        if (g.nodes.size() > max_nodes) {
            throw std::runtime_error("exchange graph exceeds the node limit");
        }
        const Seed s = g.nodes[cur];
        for (int k : s.unfrozen) {
            const int to = add_node(mutate(s, k));
            g.neighbors[cur][k] = to;
        }
    }

    std::set<std::pair<int, int>> done;
    for (std::size_t a = 0; a < g.neighbors.size(); ++a) {
        for (const auto& [k, b] : g.neighbors[a]) {
            const int lo = std::min<int>(static_cast<int>(a), b);
            const int hi = std::max<int>(static_cast<int>(a), b);
            if (!done.insert({lo, hi}).second) continue;
            GraphEdge e;
            e.a = lo;
            e.b = hi;
            for (const auto& [ka, ta] : g.neighbors[static_cast<std::size_t>(lo)]) {
                if (ta == hi) e.dir_a = ka;
            }
            for (const auto& [kb, tb] : g.neighbors[static_cast<std::size_t>(hi)]) {
                if (tb == lo) e.dir_b = kb;
            }
            g.edges.push_back(e);
        }
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    return g;
}

namespace {

bool extend_graph_map(const std::vector<std::set<int>>& a,
                      const std::vector<std::set<int>>& b, std::size_t v,
                      std::vector<int>& map, std::vector<bool>& used) {
    const std::size_t n = a.size();
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
        if (used[w] || a[v].size() != b[w].size()) continue;
        bool ok = true;
        for (std::size_t u = 0; u < v; ++u) {
            const bool ea = a[v].count(static_cast<int>(u)) > 0;
            const bool eb = b[w].count(map[u]) > 0;
            if (ea != eb) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[v] = static_cast<int>(w);
        used[w] = true;
        if (extend_graph_map(a, b, v + 1, map, used)) return true;
        used[w] = false;
        map[v] = -1;
    }
    return false;
}

}  // namespace

bool graphs_isomorphic(const std::vector<std::vector<int>>& adj_a,
                       const std::vector<std::vector<int>>& adj_b) {
    if (adj_a.size() != adj_b.size()) return false;
    const std::size_t n = adj_a.size();
    std::vector<std::set<int>> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = std::set<int>(adj_a[i].begin(), adj_a[i].end());
        b[i] = std::set<int>(adj_b[i].begin(), adj_b[i].end());
    }
    std::vector<std::size_t> deg_a, deg_b;
    for (std::size_t i = 0; i < n; ++i) {
        deg_a.push_back(a[i].size());
        deg_b.push_back(b[i].size());
    }
    std::sort(deg_a.begin(), deg_a.end());
    std::sort(deg_b.begin(), deg_b.end());
    if (deg_a != deg_b) return false;

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    return extend_graph_map(a, b, 0, map, used);
}

namespace {

void collect_automorphisms(const std::vector<std::set<int>>& adj,
                           const std::vector<int>& color, std::size_t v,
                           std::vector<int>& map, std::vector<bool>& used,
                           std::vector<std::vector<int>>& out) {
    const std::size_t n = adj.size();
    if (v == n) {
        out.push_back(map);
        return;
    }
    for (std::size_t w = 0; w < n; ++w) {
        if (used[w] || color[v] != color[w] || adj[v].size() != adj[w].size()) continue;
        bool ok = true;
        for (std::size_t u = 0; u < v; ++u) {
            if ((adj[v].count(static_cast<int>(u)) > 0) !=
                (adj[w].count(map[u]) > 0)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[v] = static_cast<int>(w);
        used[w] = true;
        collect_automorphisms(adj, color, v + 1, map, used, out);
        used[w] = false;
        map[v] = -1;
    }
}

}  // namespace

std::vector<std::vector<int>> graph_automorphisms(const std::vector<std::vector<int>>& adj,
                                                  const std::vector<int>& color) {
    const std::size_t n = adj.size();
    std::vector<std::set<int>> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = std::set<int>(adj[i].begin(), adj[i].end());
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::vector<std::vector<int>> out;
    collect_automorphisms(a, color, 0, map, used, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cpoly
