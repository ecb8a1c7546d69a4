#ifndef TMLAB_INEQUALITY_HPP
#define TMLAB_INEQUALITY_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tmlab/graph.hpp"
#include "tmlab/rational.hpp"
#include "tmlab/totalmatch.hpp"

namespace tmlab {

enum class Family {
    BasicVertex,       // x_v + sum_{e in delta(v)} y_e <= 1
    BasicEdge,         // x_v + x_w + y_e <= 1
    NonNeg,            // -z_a <= 0
    BalancedBiclique,  // all elements of an induced K_{r,r} sum to <= r
    LiftedBiclique,    // K_{r,s}, s > r > 1, distinguished t in R
    Custom,
};

std::string family_name(Family f);

/// What generated an inequality: the family plus its substructure.
struct InequalityLabel {
    Family family = Family::Custom;
    std::optional<int> element;          // BasicVertex, BasicEdge, NonNeg
    std::optional<Biclique> biclique;    // BalancedBiclique, LiftedBiclique
    std::optional<int> distinguished;    // LiftedBiclique: the vertex t
    std::string note;

    std::string describe(const Graph& g) const;
};

/// coeffs^T z <= rhs over the element space of one graph.
struct LinearInequality {
    RationalVector coeffs;
    Rational rhs;
    InequalityLabel label;

    int dimension() const noexcept { return static_cast<int>(coeffs.size()); }
    Rational evaluate(std::span<const Rational> z) const;
    /// Left-hand side at the characteristic vector of a set of elements.
    Rational evaluate(std::span<const int> elements) const;
};

/// Scales by a positive factor so coefficients and rhs become coprime
/// integers. The inequality's direction is never flipped, so the first
/// nonzero coefficient keeps its sign.
LinearInequality normalize(LinearInequality ineq);

/// Normalized (coeffs, rhs): identical keys describe the same halfspace.
struct InequalityKey {
    RationalVector coeffs;
    Rational rhs;

    friend bool operator==(const InequalityKey&, const InequalityKey&) = default;
    friend bool operator<(const InequalityKey& a, const InequalityKey& b) {
        if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
        return a.rhs < b.rhs;
    }
};

InequalityKey key_of(const LinearInequality& ineq);

/// Same halfspace after normalization; labels are ignored.
bool same_halfspace(const LinearInequality& a, const LinearInequality& b);

/// Vertex stars, then edge inequalities, then nonnegativity, each block in
/// canonical element order: 2n + 2m inequalities.
std::vector<LinearInequality> basic_inequalities(const Graph& g);

/// One inequality per induced K_{r,r} of g.
std::vector<LinearInequality> balanced_biclique_inequalities(const Graph& g, int r);

/// Unit coefficients on every element of the biclique with rhs max(r, s).
/// Valid for any biclique; a facet only when r = s.
LinearInequality biclique_inequality(const Graph& g, const Biclique& b);

/// One inequality per t in R: coefficient s - r + 1 on x_t, 1 on every other
/// biclique element, rhs s. Requires an induced biclique with s > r > 1.
std::vector<LinearInequality> lifted_biclique_inequalities(const Graph& g, const Biclique& b);

/// Builds an inequality from sparse coefficients keyed by element index.
LinearInequality make_inequality(const Graph& g, const std::map<int, Rational>& coeffs,
                                 const Rational& rhs, std::string note = {});

struct ValidityCheck {
    bool valid = true;
    Rational max_lhs;                      // over all total matchings
    TotalMatching argmax;                  // first maximizer in enumeration order
    std::optional<TotalMatching> violator; // first violating total matching
};

/// Exhaustive check of coeffs^T chi[T] <= rhs over every total matching.
ValidityCheck check_validity(const Graph& g, const LinearInequality& ineq,
                             int cap = kDefaultElementCap);
bool is_valid(const Graph& g, const LinearInequality& ineq, int cap = kDefaultElementCap);

struct LiftResult {
    LinearInequality ineq;
    /// Inner maximum for each lifted element, in lifting order.
    std::vector<Rational> inner_optima;
    std::vector<Rational> lifted_coeffs;
};

/**
 * Sequential lifting by exhaustive inner maximization.
 *
 * `base` must be valid on the total matchings that avoid every element of
 * `fixed_zero`. Elements are lifted in `order` (a permutation of
 * fixed_zero); the coefficient of the k-th element a is
 *
 *     rhs - max { current lhs(T) : T total matching, a in T,
 *                 T avoids the elements not yet lifted }
 *
 * where "current lhs" already includes the coefficients lifted before a.
 * The returned inequality is valid for the whole polytope.
 */
LiftResult sequential_lift(const Graph& g, const LinearInequality& base,
                           const std::vector<int>& fixed_zero, const std::vector<int>& order,
                           int cap = kDefaultElementCap);

/// Total matching that is tight for the unit-coefficient biclique
/// inequality and contains edge `edge_elem`: a perfect matching of an
/// induced K_{r,r} through that edge plus the s - r leftover S-vertices.
/// Any coefficient above 1 on that edge makes the inequality invalid.
TotalMatching edge_lift_counterexample(const Graph& g, const Biclique& b, int edge_elem);

}  // namespace tmlab

#endif
