#include "tmlab/polylab.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tmlab/double_description.hpp"
#include "tmlab/errors.hpp"

namespace tmlab {

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows) {
    const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    RationalMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols) {
            throw InputError("dimension mismatch: row " + std::to_string(i) + " has length " +
                             std::to_string(rows[i].size()) + ", expected " +
                             std::to_string(cols));
        }
        for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<int> RationalMatrix::row_reduce() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int piv = row;
        while (piv < rows_ && (*this)(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != row) {
            for (int j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(row, j));
        }
        const Rational inv = 1 / (*this)(row, col);
        for (int j = col; j < cols_; ++j) (*this)(row, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || (*this)(i, col) == 0) continue;
            const Rational f = (*this)(i, col);
            for (int j = col; j < cols_; ++j) {
                if ((*this)(row, j) != 0) (*this)(i, j) -= f * (*this)(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int RationalMatrix::rank() const {
    RationalMatrix copy = *this;
    return static_cast<int>(copy.row_reduce().size());
}

namespace {

RationalMatrix differences(std::span<const RationalVector> points) {
    if (points.empty()) throw InputError("affine rank of an empty point set");
    const std::size_t d = points.front().size();
    RationalMatrix m(static_cast<int>(points.size()) - 1, static_cast<int>(d));
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != d) {
            throw InputError("dimension mismatch: point " + std::to_string(i) + " has length " +
                             std::to_string(points[i].size()) + ", expected " +
                             std::to_string(d));
        }
        for (std::size_t j = 0; j < d; ++j) {
            m(static_cast<int>(i) - 1, static_cast<int>(j)) = points[i][j] - points[0][j];
        }
    }
    return m;
}

dd::IntegerVector integer_row(const RationalVector& r) {
    Integer l = 1;
    for (const auto& q : r) l = boost::multiprecision::lcm(l, Integer(denominator(q)));
    dd::IntegerVector out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        out[i] = numerator(r[i]) * (l / denominator(r[i]));
    }
    return out;
}

void check_dim_cap(int dim, int cap) {
    if (dim > cap) throw CapExceeded("polyhedral conversion", dim, cap);
}

std::vector<LinearInequality> sorted_unique(std::vector<LinearInequality> ineqs) {
    std::map<InequalityKey, LinearInequality> by_key;
    for (auto& i : ineqs) {
        auto n = normalize(std::move(i));
        auto k = key_of(n);
        by_key.emplace(std::move(k), std::move(n));
    }
    std::vector<LinearInequality> out;
    out.reserve(by_key.size());
    for (auto& [k, v] : by_key) out.push_back(std::move(v));
    return out;
}

}  // namespace

int affine_rank(std::span<const RationalVector> points) {
    return 1 + differences(points).rank();
}

std::vector<RationalVector> incidence_vectors(const Graph& g, int cap) {
    std::vector<RationalVector> out;
    const int d = g.num_elements();
    for_each_total_matching(g, cap, [&](std::span<const int> t) {
        RationalVector z(d, Rational(0));
        for (int a : t) z[a] = 1;
        out.push_back(std::move(z));
    });
    return out;
}

int polytope_dimension(const Graph& g, int cap) {
    const auto pts = incidence_vectors(g, cap);
    return affine_rank(pts) - 1;
}

int face_dimension(const Graph& g, const LinearInequality& ineq, int cap) {
    if (ineq.dimension() != g.num_elements()) throw InputError("inequality dimension mismatch");
    std::vector<RationalVector> tight;
    std::optional<TotalMatching> violator;
    const int d = g.num_elements();
    for_each_total_matching(g, cap, [&](std::span<const int> t) {
        if (violator) return;
        const Rational lhs = ineq.evaluate(t);
        if (lhs > ineq.rhs) {
            violator = TotalMatching{{t.begin(), t.end()}};
        } else if (lhs == ineq.rhs) {
            RationalVector z(d, Rational(0));
            for (int a : t) z[a] = 1;
            tight.push_back(std::move(z));
        }
    });
    if (violator) {
        std::string elems;
        for (int a : violator->elements) elems += " " + g.element_name(a);
        throw InvalidInequality("inequality is violated by total matching {" + elems + " }",
                                *violator);
    }
    if (tight.empty()) return -1;
    return affine_rank(tight) - 1;
}

bool is_facet(const Graph& g, const LinearInequality& ineq, int cap) {
    return face_dimension(g, ineq, cap) == polytope_dimension(g, cap) - 1;
}

PolytopeRep hull(std::span<const RationalVector> points, int dim_cap) {
    if (points.empty()) throw InputError("hull of an empty point set");
    const int d = static_cast<int>(points.front().size());
    check_dim_cap(d, dim_cap);

    // Coordinates that parametrize the affine hull.
    RationalMatrix diff = differences(points);
    const std::vector<int> coords = diff.row_reduce();
    const int k = static_cast<int>(coords.size());

    PolytopeRep rep;
    rep.dim_ambient = d;

    // Affine hull equations: null space of the rows (1, p).
    if (k < d) {
        std::vector<RationalVector> lifted;
        for (const auto& p : points) {
            RationalVector row{Rational(1)};
            row.insert(row.end(), p.begin(), p.end());
            lifted.push_back(std::move(row));
        }
        RationalMatrix m = RationalMatrix::from_rows(lifted);
        const auto piv = m.row_reduce();
        std::set<int> pivset(piv.begin(), piv.end());
        for (int free = 0; free <= d; ++free) {
            if (pivset.count(free)) continue;
            RationalVector null(d + 1, Rational(0));
            null[free] = 1;
            for (std::size_t r = 0; r < piv.size(); ++r) null[piv[r]] = -m(static_cast<int>(r), free);
            LinearInequality eq{RationalVector(null.begin() + 1, null.end()), -null[0], {}};
            eq.label.note = "equation";
            rep.equations.push_back(std::move(eq));
        }
        rep.equations = sorted_unique(std::move(rep.equations));
    }

    // Facets of the projection onto `coords` lift back with zeros elsewhere.
    std::vector<dd::IntegerVector> rows;
    rows.reserve(points.size());
    for (const auto& p : points) {
        RationalVector row{Rational(1)};
        for (int c : coords) row.push_back(p[c]);
        rows.push_back(integer_row(row));
    }
    for (const auto& ray : dd::extreme_rays(rows, k + 1)) {
        // ray = (c0, c): c0 + c.z >= 0, i.e. (-c).z <= c0.
        LinearInequality f{RationalVector(d, Rational(0)), Rational(ray[0]), {}};
        bool trivial = true;
        for (int i = 0; i < k; ++i) {
            f.coeffs[coords[i]] = Rational(-ray[i + 1]);
            if (ray[i + 1] != 0) trivial = false;
        }
        if (trivial) continue;
        f.label.note = "hull-facet";
        rep.hrep.push_back(std::move(f));
    }
    rep.hrep = sorted_unique(std::move(rep.hrep));

    // Extreme points: tight facets of rank k in the parametrizing coordinates.
    std::set<RationalVector> seen;
    for (const auto& p : points) {
        if (!seen.insert(p).second) continue;
        std::vector<RationalVector> tight;
        for (const auto& f : rep.hrep) {
            if (f.evaluate(p) == f.rhs) {
                RationalVector r;
                for (int c : coords) r.push_back(f.coeffs[c]);
                tight.push_back(std::move(r));
            }
        }
        const int rank = tight.empty() ? 0 : RationalMatrix::from_rows(tight).rank();
        if (rank == k) rep.vrep.push_back(p);
    }
    std::sort(rep.vrep.begin(), rep.vrep.end());
    return rep;
}

PolytopeRep vertices(std::span<const LinearInequality> hrep, int dim, int dim_cap) {
    check_dim_cap(dim, dim_cap);
    for (const auto& h : hrep) {
        if (h.dimension() != dim) throw InputError("inequality dimension mismatch");
    }

    PolytopeRep rep;
    rep.dim_ambient = dim;
    rep.hrep = sorted_unique({hrep.begin(), hrep.end()});

    // Homogenize: (t, z) with t >= 0 and b t - a.z >= 0.
    std::vector<dd::IntegerVector> rows;
    dd::IntegerVector t_row(dim + 1, Integer(0));
    t_row[0] = 1;
    rows.push_back(t_row);
    for (const auto& h : rep.hrep) {
        RationalVector r{h.rhs};
        for (const auto& c : h.coeffs) r.push_back(-c);
        rows.push_back(integer_row(r));
    }

    std::vector<dd::IntegerVector> rays;
    try {
        rays = dd::extreme_rays(rows, dim + 1);
    } catch (const InputError&) {
        throw Unbounded("inequality system has a lineality space; polyhedron is unbounded");
    }
    for (const auto& ray : rays) {
        if (ray[0] == 0) throw Unbounded("polyhedron has a recession direction");
        RationalVector v(dim);
        for (int i = 0; i < dim; ++i) v[i] = Rational(ray[i + 1], ray[0]);
        rep.vrep.push_back(std::move(v));
    }
    std::sort(rep.vrep.begin(), rep.vrep.end());
    return rep;
}

PolytopeRep total_matching_polytope(const Graph& g, const PolyOptions& opts) {
    check_dim_cap(g.num_elements(), opts.hull_dim_cap);
    const auto pts = incidence_vectors(g, opts.element_cap);
    return hull(pts, opts.hull_dim_cap);
}

CompletenessReport check_complete_description(const Graph& g,
                                              std::span<const LinearInequality> ineqs,
                                              const PolyOptions& opts) {
    check_dim_cap(g.num_elements(), opts.hull_dim_cap);
    for (const auto& i : ineqs) {
        auto v = check_validity(g, i, opts.element_cap);
        if (!v.valid) {
            throw InvalidInequality("input inequality " + i.label.describe(g) + " is not valid",
                                    *v.violator);
        }
    }

    const auto poly = total_matching_polytope(g, opts);
    CompletenessReport report;
    report.dimension = polytope_dimension(g, opts.element_cap);
    report.facets = poly.hrep;

    std::set<InequalityKey> given;
    for (const auto& i : ineqs) given.insert(key_of(i));
    std::set<InequalityKey> facet_keys;
    for (const auto& f : poly.hrep) {
        auto k = key_of(f);
        if (!given.count(k)) report.missing_facets.push_back(f);
        facet_keys.insert(std::move(k));
    }
    std::set<InequalityKey> reported;
    for (const auto& i : ineqs) {
        auto k = key_of(i);
        if (!facet_keys.count(k) && reported.insert(k).second) report.redundant.push_back(i);
    }
    report.complete = report.missing_facets.empty();
    return report;
}

}  // namespace tmlab
