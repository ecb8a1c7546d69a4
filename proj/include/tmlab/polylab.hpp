#ifndef TMLAB_POLYLAB_HPP
#define TMLAB_POLYLAB_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmlab/graph.hpp"
#include "tmlab/inequality.hpp"
#include "tmlab/rational.hpp"
#include "tmlab/totalmatch.hpp"

namespace tmlab {

/// Default limit on the ambient dimension for hull/vertex conversion.
inline constexpr int kDefaultHullDimCap = 12;

/// Dense rows x cols matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Throws InputError on ragged input.
    static RationalMatrix from_rows(std::span<const RationalVector> rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Rational& operator()(int i, int j) { return data_[i * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return data_[i * cols_ + j]; }

    /// Gaussian elimination; returns the pivot columns in order.
    std::vector<int> row_reduce();
    int rank() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// 1 + rank of the differences to the first point. Throws InputError on an
/// empty set or mismatched lengths.
int affine_rank(std::span<const RationalVector> points);

struct PolyOptions {
    int element_cap = kDefaultElementCap;
    int hull_dim_cap = kDefaultHullDimCap;
};

std::vector<RationalVector> incidence_vectors(const Graph& g, int cap = kDefaultElementCap);

/// Dimension of P_T(g); n+m for every graph.
int polytope_dimension(const Graph& g, int cap = kDefaultElementCap);

/// Dimension of the face {z in P_T(g) : coeffs^T z = rhs}; -1 when empty.
/// Throws InvalidInequality when some total matching violates `ineq`.
int face_dimension(const Graph& g, const LinearInequality& ineq, int cap = kDefaultElementCap);

bool is_facet(const Graph& g, const LinearInequality& ineq, int cap = kDefaultElementCap);

class InvalidInequality : public std::runtime_error {
public:
    InvalidInequality(const std::string& what, TotalMatching violator)
        : std::runtime_error(what), violator_(std::move(violator)) {}
    const TotalMatching& violator() const noexcept { return violator_; }

private:
    TotalMatching violator_;
};

/// Paired vertex and facet descriptions. For lower-dimensional point sets
/// `equations` holds the affine hull (each entry read as equality) and
/// `hrep` the facets relative to it.
struct PolytopeRep {
    int dim_ambient = 0;
    std::vector<RationalVector> vrep;
    std::vector<LinearInequality> hrep;
    std::vector<LinearInequality> equations;
};

/// Exact convex hull by double description. Facets are normalized and sorted
/// by key; vertices are the extreme input points, sorted.
PolytopeRep hull(std::span<const RationalVector> points, int dim_cap = kDefaultHullDimCap);

/// Vertices of the bounded polyhedron {z : a^T z <= b for all rows}. Throws
/// Unbounded for unbounded input. `hrep` of the result is the input,
/// normalized and deduplicated.
PolytopeRep vertices(std::span<const LinearInequality> hrep, int dim,
                     int dim_cap = kDefaultHullDimCap);

/// Hull of all incidence vectors of total matchings of g.
PolytopeRep total_matching_polytope(const Graph& g, const PolyOptions& opts = {});

struct CompletenessReport {
    bool complete = false;
    int dimension = 0;
    std::vector<LinearInequality> facets;          // of P_T(g)
    std::vector<LinearInequality> missing_facets;  // facets absent from the input
    std::vector<LinearInequality> redundant;       // valid inputs that are not facets
};

/// Compares the hull's facets with the normalized input. Throws
/// InvalidInequality if an input is not valid for P_T(g).
CompletenessReport check_complete_description(const Graph& g,
                                              std::span<const LinearInequality> ineqs,
                                              const PolyOptions& opts = {});

}  // namespace tmlab

#endif
