#include "tmlab/totalmatch.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "tmlab/errors.hpp"

namespace tmlab {

namespace {

void check_cap(int size, int cap, const char* what) {
    if (cap > kMaxElementCap) cap = kMaxElementCap;
    if (size > cap) throw CapExceeded(what, size, cap);
}

void enumerate_from(const std::vector<std::uint64_t>& closed, int start, std::uint64_t blocked,
                    std::vector<int>& current,
                    const std::function<void(std::span<const int>)>& visit) {
    visit(current);
    const int d = static_cast<int>(closed.size());
    for (int j = start; j < d; ++j) {
        if (blocked >> j & 1u) continue;
        current.push_back(j);
        enumerate_from(closed, j + 1, blocked | closed[j], current, visit);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::uint64_t> closed_neighbourhoods(const Graph& g) {
    const int d = g.num_elements();
    check_cap(d, kMaxElementCap, "element mask");
    std::vector<std::uint64_t> closed(d, 0);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (adjacent(g, a, b)) closed[a] |= std::uint64_t{1} << b;
        }
    }
    return closed;
}

void for_each_total_matching(const Graph& g, int cap,
                             const std::function<void(std::span<const int>)>& visit) {
    check_cap(g.num_elements(), cap, "total matching enumeration");
    const auto closed = closed_neighbourhoods(g);
    std::vector<int> current;
    enumerate_from(closed, 0, 0, current, visit);
}

std::vector<TotalMatching> enumerate_total_matchings(const Graph& g, int cap) {
    std::vector<TotalMatching> out;
    for_each_total_matching(g, cap, [&](std::span<const int> t) {
        out.push_back(TotalMatching{{t.begin(), t.end()}});
    });
    return out;
}

bool is_total_matching(const Graph& g, std::span<const int> elements) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            if (adjacent(g, elements[i], elements[j])) return false;
        }
    }
    // adjacent() range-checks pairs only; cover the singleton case too.
    for (int a : elements) g.element(a);
    return true;
}

int nu_t(const Graph& g, int cap) {
    if (is_tree(g)) return tree_max(g);
    int best = 0;
    for_each_total_matching(g, cap, [&](std::span<const int> t) {
        best = std::max(best, static_cast<int>(t.size()));
    });
    return best;
}

TotalMatching maximum_total_matching(const Graph& g, int cap) {
    if (is_tree(g)) return tree_max_matching(g);
    TotalMatching best;
    for_each_total_matching(g, cap, [&](std::span<const int> t) {
        if (t.size() > best.size()) best.elements.assign(t.begin(), t.end());
    });
    return best;
}

namespace {

struct TreeTables {
    std::vector<int> order;   // BFS order from vertex 0
    std::vector<int> parent;
    std::vector<int> chosen;  // v is a chosen element
    std::vector<int> edged;   // v covered by a chosen edge to a child
    std::vector<int> free;    // neither
    std::vector<int> edge_child;
};

constexpr int kNone = std::numeric_limits<int>::min() / 4;

int best_of(const TreeTables& t, int v) {
    return std::max({t.chosen[v], t.edged[v], t.free[v]});
}

TreeTables solve_tree(const Graph& g) {
    if (!is_tree(g)) throw InputError("tree_max requires a tree");
    const int n = g.num_vertices();
    TreeTables t;
    t.parent.assign(n, -1);
    t.order.reserve(n);
    std::vector<char> seen(n, 0);
    t.order.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < t.order.size(); ++i) {
        const int v = t.order[i];
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                t.parent[w] = v;
                t.order.push_back(w);
            }
        }
    }

    t.chosen.assign(n, 0);
    t.edged.assign(n, kNone);
    t.free.assign(n, 0);
    t.edge_child.assign(n, -1);
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
        const int v = *it;
        int chosen = 1;
        int free = 0;
        for (int c : g.neighbors(v)) {
            if (c == t.parent[v]) continue;
            chosen += std::max(t.edged[c], t.free[c]);
            free += best_of(t, c);
        }
        int edged = kNone;
        int edge_child = -1;
        for (int c : g.neighbors(v)) {
            if (c == t.parent[v]) continue;
            const int value = free - best_of(t, c) + t.free[c] + 1;
            if (value > edged) {
                edged = value;
                edge_child = c;
            }
        }
        t.chosen[v] = chosen;
        t.free[v] = free;
        t.edged[v] = edged;
        t.edge_child[v] = edge_child;
    }
    return t;
}

}  // namespace

int tree_max(const Graph& g) {
    const auto t = solve_tree(g);
    return best_of(t, 0);
}

TotalMatching tree_max_matching(const Graph& g) {
    const auto t = solve_tree(g);
    enum State { Chosen, Edged, Free };
    auto pick = [&](int v, bool allow_chosen) {
        if (allow_chosen && t.chosen[v] >= t.edged[v] && t.chosen[v] >= t.free[v]) return Chosen;
        return t.edged[v] >= t.free[v] ? Edged : Free;
    };

    const int n = g.num_vertices();
    std::vector<State> state(n, Free);
    TotalMatching out;
    state[0] = pick(0, true);
    for (int v : t.order) {
        if (state[v] == Chosen) out.elements.push_back(v);
        if (state[v] == Edged) {
            out.elements.push_back(g.edge_element(*g.edge_index(v, t.edge_child[v])));
        }
        for (int c : g.neighbors(v)) {
            if (c == t.parent[v]) continue;
            if (state[v] == Edged && c == t.edge_child[v]) {
                state[c] = Free;
            } else {
                state[c] = pick(c, state[v] != Chosen);
            }
        }
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

namespace {

int max_stable(const std::vector<std::uint64_t>& nbr, std::uint64_t candidates) {
    if (candidates == 0) return 0;
    const int v = std::countr_zero(candidates);
    const std::uint64_t rest = candidates & ~(std::uint64_t{1} << v);
    const int skip = max_stable(nbr, rest);
    const int take = 1 + max_stable(nbr, rest & ~nbr[v]);
    return std::max(skip, take);
}

int max_matching(const Graph& g, int j, std::uint64_t used) {
    if (j == g.num_edges()) return 0;
    const int skip = max_matching(g, j + 1, used);
    const auto [u, v] = g.edge(j);
    const std::uint64_t ends = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    if (used & ends) return skip;
    return std::max(skip, 1 + max_matching(g, j + 1, used | ends));
}

bool cover_of_size(const std::vector<std::uint64_t>& closed, int remaining,
                   std::uint64_t covered, std::uint64_t all) {
    if (covered == all) return true;
    if (remaining == 0) return false;
    // The lowest uncovered element must be covered by something in its
    // closed neighbourhood; branch only on those.
    const int target = std::countr_zero(~covered & all);
    std::uint64_t options = closed[target];
    while (options) {
        const int c = std::countr_zero(options);
        options &= options - 1;
        if (cover_of_size(closed, remaining - 1, covered | closed[c], all)) return true;
    }
    return false;
}

}  // namespace

int alpha(const Graph& g, int cap) {
    check_cap(g.num_elements(), cap, "stable set search");
    const int n = g.num_vertices();
    std::vector<std::uint64_t> nbr(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v)) nbr[v] |= std::uint64_t{1} << w;
    }
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return max_stable(nbr, all);
}

int nu(const Graph& g, int cap) {
    check_cap(g.num_elements(), cap, "matching search");
    return max_matching(g, 0, 0);
}

int tau(const Graph& g, int cap) {
    check_cap(g.num_elements(), cap, "total cover search");
    const auto closed = closed_neighbourhoods(g);
    const int d = g.num_elements();
    const std::uint64_t all = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
    for (int k = 0; k <= d; ++k) {
        if (cover_of_size(closed, k, 0, all)) return k;
    }
    return d;
}

RationalVector incidence(const Graph& g, const TotalMatching& t) {
    if (!is_total_matching(g, t.elements)) {
        throw InputError("elements are not pairwise independent");
    }
    RationalVector z(g.num_elements(), Rational(0));
    for (int a : t.elements) z[a] = 1;
    return z;
}

BoundsReport bounds(const Graph& g, int cap) {
    BoundsReport r;
    r.nu_t = nu_t(g, cap);
    r.alpha = alpha(g, cap);
    r.nu = nu(g, cap);
    r.tau = tau(g, cap);
    r.lower_bound_holds = r.nu_t >= std::max(r.alpha, r.nu);
    r.cover_bound_holds = r.tau <= r.nu_t;
    return r;
}

}  // namespace tmlab
