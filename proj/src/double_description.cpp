#include "tmlab/double_description.hpp"

#include <algorithm>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "tmlab/errors.hpp"

namespace tmlab::dd {

namespace {

struct Ray {
    IntegerVector coords;
    boost::dynamic_bitset<> zeros;  // processed rows tight at this ray
};

Integer dot(const IntegerVector& a, const IntegerVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    }
    return s;
}

/// Picks the first `cols` linearly independent rows in `order`.
std::vector<int> independent_rows(const std::vector<IntegerVector>& rows,
                                  const std::vector<int>& order, int cols) {
    std::vector<std::vector<Rational>> basis;  // echelon rows
    std::vector<int> pivots;
    std::vector<int> chosen;
    for (int idx : order) {
        std::vector<Rational> r(rows[idx].begin(), rows[idx].end());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const int p = pivots[b];
            if (r[p] == 0) continue;
            const Rational f = r[p] / basis[b][p];
            for (int j = 0; j < cols; ++j) {
                if (basis[b][j] != 0) r[j] -= f * basis[b][j];
            }
        }
        auto nz = std::find_if(r.begin(), r.end(), [](const Rational& q) { return q != 0; });
        if (nz == r.end()) continue;
        pivots.push_back(static_cast<int>(nz - r.begin()));
        basis.push_back(std::move(r));
        chosen.push_back(idx);
        if (static_cast<int>(chosen.size()) == cols) break;
    }
    return chosen;
}

/// Columns of the inverse of the square matrix formed by `basis_rows`.
std::vector<IntegerVector> inverse_columns(const std::vector<IntegerVector>& rows,
                                           const std::vector<int>& basis_rows, int k) {
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(2 * k, Rational(0)));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = Rational(rows[basis_rows[i]][j]);
        m[i][k + i] = 1;
    }
    for (int col = 0; col < k; ++col) {
        int piv = col;
        while (m[piv][col] == 0) ++piv;
        std::swap(m[piv], m[col]);
        const Rational inv = 1 / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (int i = 0; i < k; ++i) {
            if (i == col || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (int j = 0; j < 2 * k; ++j) {
                if (m[col][j] != 0) m[i][j] -= f * m[col][j];
            }
        }
    }
    std::vector<IntegerVector> out(k, IntegerVector(k));
    for (int c = 0; c < k; ++c) {
        Integer l = 1;
        for (int i = 0; i < k; ++i) {
            l = boost::multiprecision::lcm(l, Integer(denominator(m[i][k + c])));
        }
        for (int i = 0; i < k; ++i) {
            out[c][i] = numerator(m[i][k + c]) * (l / denominator(m[i][k + c]));
        }
        make_primitive(out[c]);
    }
    return out;
}

}  // namespace

void make_primitive(IntegerVector& v) {
    Integer g = 0;
    for (const auto& x : v) {
        if (x != 0) g = boost::multiprecision::gcd(g, Integer(abs(x)));
    }
    if (g > 1) {
        for (auto& x : v) x /= g;
    }
}

std::vector<IntegerVector> extreme_rays(const std::vector<IntegerVector>& rows, int cols) {
    const int m = static_cast<int>(rows.size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols) throw InputError("ragged constraint matrix");
    }
    if (cols == 0) return {};

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    auto nonzeros = [&](int i) {
        return std::count_if(rows[i].begin(), rows[i].end(), [](const Integer& x) { return x != 0; });
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return nonzeros(a) < nonzeros(b); });

    const auto basis = independent_rows(rows, order, cols);
    if (static_cast<int>(basis.size()) < cols) {
        throw InputError("constraint matrix has rank " + std::to_string(basis.size()) +
                         " < " + std::to_string(cols) + "; cone is not pointed");
    }

    std::vector<Ray> rays;
    const auto initial = inverse_columns(rows, basis, cols);
    for (int i = 0; i < cols; ++i) {
        Ray ray{initial[i], boost::dynamic_bitset<>(m)};
        for (int j = 0; j < cols; ++j) {
            if (j != i) ray.zeros.set(basis[j]);
        }
        rays.push_back(std::move(ray));
    }

    std::vector<char> processed(m, 0);
    for (int b : basis) processed[b] = 1;
    const std::size_t adjacency_floor = cols >= 2 ? static_cast<std::size_t>(cols - 2) : 0;

    for (int h : order) {
        if (processed[h]) continue;
        processed[h] = 1;

        std::vector<Integer> value(rays.size());
        std::vector<int> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = dot(rows[h], rays[i].coords);
            if (value[i] > 0) pos.push_back(static_cast<int>(i));
            if (value[i] < 0) neg.push_back(static_cast<int>(i));
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i) {
                if (value[i] == 0) rays[i].zeros.set(h);
            }
            continue;
        }

        std::vector<Ray> next;
        for (int p : pos) {
            for (int q : neg) {
                auto common = rays[p].zeros & rays[q].zeros;
                if (common.count() < adjacency_floor) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (static_cast<int>(r) == p || static_cast<int>(r) == q) continue;
                    if (common.is_subset_of(rays[r].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                IntegerVector v(cols);
                for (int j = 0; j < cols; ++j) {
                    v[j] = value[p] * rays[q].coords[j] - value[q] * rays[p].coords[j];
                }
                make_primitive(v);
                common.set(h);
                next.push_back(Ray{std::move(v), std::move(common)});
            }
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (value[i] < 0) continue;
            if (value[i] == 0) rays[i].zeros.set(h);
            next.push_back(std::move(rays[i]));
        }
        rays = std::move(next);
    }

    std::vector<IntegerVector> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.coords));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tmlab::dd
