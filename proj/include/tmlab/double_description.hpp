#ifndef TMLAB_DOUBLE_DESCRIPTION_HPP
#define TMLAB_DOUBLE_DESCRIPTION_HPP

#include <vector>

#include "tmlab/rational.hpp"

namespace tmlab::dd {

using IntegerVector = std::vector<Integer>;

/**
 * Extreme rays of the pointed cone {y : A y >= 0}.
 *
 * Incremental double description in exact integer arithmetic. Rows are
 * inserted in order of increasing nonzero count (ties by input position);
 * adjacency of ray pairs uses the combinatorial zero-set test. Each ray is
 * returned as a primitive integer vector, sorted lexicographically.
 *
 * Throws InputError if A does not have full column rank (the cone then has
 * a lineality space).
 */
std::vector<IntegerVector> extreme_rays(const std::vector<IntegerVector>& rows, int cols);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
void make_primitive(IntegerVector& v);

}  // namespace tmlab::dd

#endif
