#include "tmlab/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "tmlab/errors.hpp"

namespace tmlab {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                             ") has an endpoint outside [0," + std::to_string(n) + ")");
        }
        if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw InputError("repeated edge (" + std::to_string(dup->u) + "," +
                         std::to_string(dup->v) + ")");
    }

    neighbors_.assign(n, {});
    incident_.assign(n, {});
    for (int j = 0; j < num_edges(); ++j) {
        const auto [u, v] = edges_[j];
        neighbors_[u].push_back(v);
        neighbors_[v].push_back(u);
        incident_[u].push_back(j);
        incident_[v].push_back(j);
    }
    for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v).has_value(); }

std::optional<int> Graph::edge_index(int u, int v) const {
    const Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

Element Graph::element(int index) const {
    if (index < 0 || index >= num_elements()) {
        throw InputError("element index " + std::to_string(index) + " out of range [0," +
                         std::to_string(num_elements()) + ")");
    }
    if (index < n_) return {ElementKind::Vertex, index};
    return {ElementKind::Edge, index - n_};
}

int Graph::element_index(const Element& e) const {
    const int limit = e.kind == ElementKind::Vertex ? n_ : num_edges();
    if (e.index < 0 || e.index >= limit) {
        throw InputError("element index " + std::to_string(e.index) + " out of range");
    }
    return e.kind == ElementKind::Vertex ? e.index : n_ + e.index;
}

std::string Graph::element_name(int index) const {
    const Element e = element(index);
    if (e.kind == ElementKind::Vertex) return "v" + std::to_string(e.index);
    const auto& ed = edges_[e.index];
    return "e" + std::to_string(ed.u) + "_" + std::to_string(ed.v);
}

bool adjacent(const Graph& g, const Element& a, const Element& b) {
    return adjacent(g, g.element_index(a), g.element_index(b));
}

bool adjacent(const Graph& g, int a, int b) {
    const Element ea = g.element(a);
    const Element eb = g.element(b);
    if (a == b) return true;
    if (ea.kind == ElementKind::Vertex && eb.kind == ElementKind::Vertex) {
        return g.has_edge(ea.index, eb.index);
    }
    if (ea.kind == ElementKind::Edge && eb.kind == ElementKind::Edge) {
        const Edge& x = g.edge(ea.index);
        const Edge& y = g.edge(eb.index);
        return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
    }
    const Edge& ed = g.edge(ea.kind == ElementKind::Edge ? ea.index : eb.index);
    const int vert = ea.kind == ElementKind::Vertex ? ea.index : eb.index;
    return ed.u == vert || ed.v == vert;
}

Graph total_graph(const Graph& g) {
    const int d = g.num_elements();
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            if (adjacent(g, a, b)) pairs.emplace_back(a, b);
        }
    }
    return Graph(d, pairs);
}

bool is_connected(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

bool is_tree(const Graph& g) {
    return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 && is_connected(g);
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> colour(n, -1);
    for (int start = 0; start < n; ++start) {
        if (colour[start] != -1) continue;
        colour[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    q.push(w);
                } else if (colour[w] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> sides;
    for (int v = 0; v < n; ++v) (colour[v] == 0 ? sides.first : sides.second).push_back(v);
    return sides;
}

bool is_complete_bipartite(const Graph& g) {
    auto sides = bipartition(g);
    if (!sides || sides->first.empty() || sides->second.empty()) return false;
    const auto cross = sides->first.size() * sides->second.size();
    return static_cast<std::size_t>(g.num_edges()) == cross;
}

bool is_chordal(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> weight(n, 0);
    std::vector<char> numbered(n, 0);
    std::vector<int> visit;  // MCS order; its reverse is a perfect elimination order
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (!numbered[v] && (best == -1 || weight[v] > weight[best])) best = v;
        }
        numbered[best] = 1;
        visit.push_back(best);
        for (int w : g.neighbors(best)) {
            if (!numbered[w]) ++weight[w];
        }
    }

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[visit[i]] = i;
    // Earlier-visited neighbours of each vertex must form a clique.
    for (int v = 0; v < n; ++v) {
        std::vector<int> earlier;
        for (int w : g.neighbors(v)) {
            if (pos[w] < pos[v]) earlier.push_back(w);
        }
        for (std::size_t i = 0; i < earlier.size(); ++i) {
            for (std::size_t j = i + 1; j < earlier.size(); ++j) {
                if (!g.has_edge(earlier[i], earlier[j])) return false;
            }
        }
    }
    return true;
}

Biclique make_biclique(const Graph& g, std::vector<int> side_r, std::vector<int> side_s) {
    std::sort(side_r.begin(), side_r.end());
    std::sort(side_s.begin(), side_s.end());
    const int n = g.num_vertices();
    std::vector<char> in_r(n, 0);
    for (int v : side_r) {
        if (v < 0 || v >= n) throw InputError("biclique vertex out of range");
        if (in_r[v]) throw InputError("repeated vertex in biclique side");
        in_r[v] = 1;
    }
    if (std::adjacent_find(side_s.begin(), side_s.end()) != side_s.end()) {
        throw InputError("repeated vertex in biclique side");
    }
    for (int w : side_s) {
        if (w < 0 || w >= n) throw InputError("biclique vertex out of range");
        if (in_r[w]) throw InputError("biclique sides intersect at vertex " + std::to_string(w));
        for (int v : side_r) {
            if (!g.has_edge(v, w)) {
                throw InputError("biclique pair (" + std::to_string(v) + "," +
                                 std::to_string(w) + ") is not an edge");
            }
        }
    }
    auto independent = [&](const std::vector<int>& side) {
        for (std::size_t i = 0; i < side.size(); ++i) {
            for (std::size_t j = i + 1; j < side.size(); ++j) {
                if (g.has_edge(side[i], side[j])) return false;
            }
        }
        return true;
    };
    const bool induced = independent(side_r) && independent(side_s);
    return Biclique{std::move(side_r), std::move(side_s), induced};
}

namespace {

/// Calls f on every k-subset of pool in lexicographic order.
void for_each_combination(const std::vector<int>& pool, int k,
                          const std::function<void(const std::vector<int>&)>& f) {
    const int size = static_cast<int>(pool.size());
    if (k > size) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<int> pick(k);
    while (true) {
        for (int i = 0; i < k; ++i) pick[i] = pool[idx[i]];
        f(pick);
        int i = k - 1;
        while (i >= 0 && idx[i] == size - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool is_independent(const Graph& g, const std::vector<int>& set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (g.has_edge(set[i], set[j])) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Biclique> enumerate_induced_bicliques(const Graph& g, int max_side) {
    if (max_side < 1) throw InputError("max_side must be at least 1");
    const int n = g.num_vertices();
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;

    std::vector<Biclique> out;
    for (int r = 1; r <= max_side; ++r) {
        for (int s = r; s <= max_side; ++s) {
            for_each_combination(all, r, [&](const std::vector<int>& side_r) {
                if (!is_independent(g, side_r)) return;
                std::vector<int> common;
                for (int w = 0; w < n; ++w) {
                    bool joined = true;
                    for (int v : side_r) {
                        if (!g.has_edge(v, w)) {
                            joined = false;
                            break;
                        }
                    }
                    if (joined) common.push_back(w);
                }
                for_each_combination(common, s, [&](const std::vector<int>& side_s) {
                    if (r == s && side_s.front() < side_r.front()) return;
                    if (!is_independent(g, side_s)) return;
                    out.push_back(Biclique{side_r, side_s, true});
                });
            });
        }
    }
    return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.num_vertices()) {
        throw InputError("permutation size does not match vertex count");
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
    return Graph(g.num_vertices(), edges);
}

namespace graphs {

Graph empty(int n) { return Graph(n, {}); }

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    }
    return Graph(n, e);
}

Graph complete_bipartite(int r, int s) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < s; ++j) e.emplace_back(i, r + j);
    }
    return Graph(r + s, e);
}

Graph with_pendant(const Graph& g, int attach) {
    std::vector<std::pair<int, int>> e;
    for (const auto& ed : g.edges()) e.emplace_back(ed.u, ed.v);
    e.emplace_back(attach, g.num_vertices());
    return Graph(g.num_vertices() + 1, e);
}

}  // namespace graphs

}  // namespace tmlab
