#ifndef TMLAB_SEPARATION_HPP
#define TMLAB_SEPARATION_HPP

#include <string>
#include <vector>

#include "tmlab/graph.hpp"
#include "tmlab/inequality.hpp"
#include "tmlab/rational.hpp"

namespace tmlab {

struct Violation {
    LinearInequality ineq;
    Rational amount;  // coeffs^T z - rhs, always > 0
};

struct ScannedFamily {
    Family family;
    int r = 0;  // biclique sides; 0 for the basic families
    int s = 0;
    int scanned = 0;
};

struct SeparationResult {
    /// Sorted by decreasing amount; ties keep scan order.
    std::vector<Violation> violated;
    std::vector<ScannedFamily> searched;
};

/**
 * Exhaustive separation over the known families: the basic inequalities,
 * every induced K_{r,r} with 2 <= r <= max_side, and the lifted inequalities
 * of every induced K_{r,s} with 1 < r < s <= max_side. Halfspaces that a
 * family repeats are reported once, at their first occurrence.
 *
 * Finding the most violated biclique inequality is NP-hard in general; this
 * scan is meant for small graphs only.
 */
SeparationResult separate(const Graph& g, const RationalVector& z, int max_side = 4);

/// All family members scanned by separate(), in scan order, deduplicated.
std::vector<LinearInequality> family_inequalities(const Graph& g, int max_side = 4);

}  // namespace tmlab

#endif
