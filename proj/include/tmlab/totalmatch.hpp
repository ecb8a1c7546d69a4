#ifndef TMLAB_TOTALMATCH_HPP
#define TMLAB_TOTALMATCH_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tmlab/graph.hpp"
#include "tmlab/rational.hpp"

namespace tmlab {

/// Default limit on n+m for exhaustive searches over subsets of elements.
inline constexpr int kDefaultElementCap = 24;
/// Exhaustive searches use 64-bit element masks; no cap may exceed this.
inline constexpr int kMaxElementCap = 64;

/// Pairwise independent set of elements, sorted ascending.
struct TotalMatching {
    std::vector<int> elements;

    std::size_t size() const noexcept { return elements.size(); }
    friend auto operator<=>(const TotalMatching&, const TotalMatching&) = default;
};

/// Bit a set iff element a is adjacent to element i (including a == i).
std::vector<std::uint64_t> closed_neighbourhoods(const Graph& g);

/// Visits every total matching of g (including the empty one) exactly once,
/// in lexicographic order of the sorted element lists. Throws CapExceeded
/// when n+m > cap.
void for_each_total_matching(const Graph& g, int cap,
                             const std::function<void(std::span<const int>)>& visit);

std::vector<TotalMatching> enumerate_total_matchings(const Graph& g,
                                                     int cap = kDefaultElementCap);

bool is_total_matching(const Graph& g, std::span<const int> elements);

/// Maximum total matching size. Trees are solved by tree_max regardless of
/// cap; other graphs are enumerated.
int nu_t(const Graph& g, int cap = kDefaultElementCap);
TotalMatching maximum_total_matching(const Graph& g, int cap = kDefaultElementCap);

/// Linear-time dynamic program over a rooted tree. Each vertex is in one of
/// three states: chosen as an element, covered by a chosen edge to a child,
/// or free. Throws InputError when g is not a tree.
int tree_max(const Graph& g);
TotalMatching tree_max_matching(const Graph& g);

/// Maximum stable set size.
int alpha(const Graph& g, int cap = kDefaultElementCap);
/// Maximum matching size.
int nu(const Graph& g, int cap = kDefaultElementCap);
/// Minimum total cover: C covers element a when a is in C or adjacent to a
/// member of C.
int tau(const Graph& g, int cap = kDefaultElementCap);

/// 0/1 characteristic vector in canonical element order. Throws InputError
/// for out-of-range or pairwise dependent elements.
RationalVector incidence(const Graph& g, const TotalMatching& t);

struct BoundsReport {
    int nu_t = 0;
    int alpha = 0;
    int nu = 0;
    int tau = 0;
    bool lower_bound_holds = false;  // nu_t >= max(alpha, nu)
    bool cover_bound_holds = false;  // tau <= nu_t
};

BoundsReport bounds(const Graph& g, int cap = kDefaultElementCap);

}  // namespace tmlab

#endif
