#ifndef TMLAB_GRAPH_HPP
#define TMLAB_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tmlab {

/// Undirected edge with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class ElementKind { Vertex, Edge };

/// One member of D = V ∪ E. Element indices run over the vertices 0..n-1
/// first, then the edges in canonical order at n..n+m-1.
struct Element {
    ElementKind kind = ElementKind::Vertex;
    int index = 0;

    friend bool operator==(const Element&, const Element&) = default;
};

/**
 * Simple undirected graph with a canonical joint indexing of vertices and
 * edges.
 *
 * Edges are stored sorted by (min endpoint, max endpoint); edge j occupies
 * element index n + j. Every vector in element space uses this order, so two
 * graphs built from the same edge set in any order produce identical
 * coordinates.
 */
class Graph {
public:
    Graph() = default;

    /// Throws InputError on self-loops, repeated edges or endpoints outside
    /// [0, n).
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const noexcept { return n_; }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
    int num_elements() const noexcept { return n_ + num_edges(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(int j) const { return edges_.at(j); }

    const std::vector<int>& neighbors(int v) const { return neighbors_.at(v); }
    /// Edge indices (not element indices) incident to v, ascending.
    const std::vector<int>& incident_edges(int v) const { return incident_.at(v); }
    int degree(int v) const { return static_cast<int>(neighbors_.at(v).size()); }

    bool has_edge(int u, int v) const;
    std::optional<int> edge_index(int u, int v) const;

    /// Throws InputError when out of range.
    Element element(int index) const;
    int element_index(const Element& e) const;
    int edge_element(int j) const { return n_ + j; }

    /// "v3" or "e1_4".
    std::string element_name(int index) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<std::vector<int>> incident_;
};

/// Complete bipartite subgraph with sides R and S. `induced` is true when
/// no edge of the host graph joins two vertices of the same side.
struct Biclique {
    std::vector<int> side_r;
    std::vector<int> side_s;
    bool induced = false;

    int r() const noexcept { return static_cast<int>(side_r.size()); }
    int s() const noexcept { return static_cast<int>(side_s.size()); }

    friend bool operator==(const Biclique&, const Biclique&) = default;
};

/// Validates that every (R, S) pair is an edge and the sides are disjoint;
/// sorts both sides and fills in the induced flag.
Biclique make_biclique(const Graph& g, std::vector<int> side_r, std::vector<int> side_s);

/// Element adjacency: adjacent vertices, edges sharing an endpoint, or an
/// edge and one of its endpoints. Every element is adjacent to itself.
bool adjacent(const Graph& g, int a, int b);
bool adjacent(const Graph& g, const Element& a, const Element& b);

/// Graph on the n+m elements of g whose edges are the adjacent element pairs.
Graph total_graph(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Two-colouring (A1, A2) with vertex 0 in A1 and each component coloured
/// starting from its smallest vertex; nullopt for non-bipartite graphs.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

/// Bipartite with both sides nonempty and all cross pairs joined.
bool is_complete_bipartite(const Graph& g);

/// Maximum cardinality search followed by a perfect-elimination check.
bool is_chordal(const Graph& g);

/// All induced bicliques with 1 <= |R| <= |S| <= max_side, each listed
/// once. For |R| = |S| the side holding the smallest vertex is R. Sorted by
/// (r, s, R, S).
std::vector<Biclique> enumerate_induced_bicliques(const Graph& g, int max_side = 4);

/// Graph with vertex v renamed perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

namespace graphs {

Graph empty(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph complete(int n);
/// Sides {0..r-1} and {r..r+s-1}.
Graph complete_bipartite(int r, int s);
/// g plus a new vertex joined to `attach`.
Graph with_pendant(const Graph& g, int attach);

}  // namespace graphs

}  // namespace tmlab

#endif
