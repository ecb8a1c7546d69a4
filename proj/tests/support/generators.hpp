#ifndef TMLAB_TESTS_GENERATORS_HPP
#define TMLAB_TESTS_GENERATORS_HPP

// Graph generators shared by the unit and acceptance suites.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tmlab/graph.hpp"

namespace tmlab::testing {

namespace detail {

inline std::vector<std::vector<int>> adjacency(int n, const std::vector<std::pair<int, int>>& e) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : e) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

inline std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[v]) {
        if (w != parent) kids.push_back(rooted_code(adj, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    return out + ")";
}

}  // namespace detail

/// AHU code of a tree rooted at its centre(s); equal iff isomorphic.
inline std::string tree_code(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 1) return "()";
    auto adj = detail::adjacency(n, edges);
    std::vector<int> deg(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
            for (int w : adj[v]) {
                if (--deg[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::string best;
    for (int c : layer) {
        auto code = detail::rooted_code(adj, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

/// All non-isomorphic trees with 1..max_n vertices, grouped by vertex count
/// (index 0 is empty).
inline std::vector<std::vector<Graph>> nonisomorphic_trees(int max_n) {
    std::vector<std::vector<std::vector<std::pair<int, int>>>> by_n(max_n + 1);
    if (max_n >= 1) by_n[1].push_back({});
    for (int n = 2; n <= max_n; ++n) {
        std::set<std::string> seen;
        for (const auto& edges : by_n[n - 1]) {
            for (int attach = 0; attach < n - 1; ++attach) {
                auto grown = edges;
                grown.emplace_back(attach, n - 1);
                if (seen.insert(tree_code(n, grown)).second) by_n[n].push_back(grown);
            }
        }
    }
    std::vector<std::vector<Graph>> out(max_n + 1);
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& e : by_n[n]) out[n].emplace_back(n, e);
    }
    return out;
}

/// G(n, p) graph.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

/// Random graph with n in [0, max_n] and a random edge density.
inline Graph random_small_graph(std::mt19937_64& rng, int max_n) {
    std::uniform_int_distribution<int> size(0, max_n);
    std::uniform_real_distribution<double> density(0.15, 0.85);
    const int n = size(rng);
    return random_graph(rng, n, density(rng));
}

/// Uniform labelled tree from a random Prüfer sequence.
inline Graph random_tree(std::mt19937_64& rng, int n) {
    if (n <= 1) return Graph(n, {});
    if (n == 2) return Graph(2, {{0, 1}});
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (auto& x : seq) x = pick(rng);
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (deg[leaf] == 1) {
                edges.emplace_back(leaf, x);
                --deg[leaf];
                --deg[x];
                break;
            }
        }
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
        if (deg[v] == 1) {
            if (u == -1) {
                u = v;
            } else {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace tmlab::testing

#endif
