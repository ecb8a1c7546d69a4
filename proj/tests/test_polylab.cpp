#include <doctest.h>

#include <numeric>
#include <random>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tmlab/errors.hpp"
#include "tmlab/polylab.hpp"

using namespace tmlab;
using tmlab::testing::keys;

namespace {

Biclique whole(int r, int s) {
    std::vector<int> side_r(r), side_s(s);
    std::iota(side_r.begin(), side_r.end(), 0);
    std::iota(side_s.begin(), side_s.end(), r);
    return Biclique{side_r, side_s, true};
}

// Coefficients (3/2, 1/2) on the two R vertices of K_{2,3}, one elsewhere.
LinearInequality uneven_k23(const Graph& g) {
    auto i = biclique_inequality(g, whole(2, 3));
    i.coeffs[0] = Rational(3, 2);
    i.coeffs[1] = Rational(1, 2);
    return i;
}

std::vector<RationalVector> sorted(std::vector<RationalVector> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("affine rank") {
    const std::vector<RationalVector> line{{0, 0}, {1, 1}, {2, 2}};
    CHECK(affine_rank(line) == 2);
    const std::vector<RationalVector> simplex{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(affine_rank(simplex) == 4);
    const std::vector<RationalVector> one{{Rational(1, 3), 5}};
    CHECK(affine_rank(one) == 1);
    CHECK_THROWS_AS(affine_rank(std::vector<RationalVector>{}), InputError);
    const std::vector<RationalVector> ragged{{0, 0}, {1}};
    CHECK_THROWS_AS(affine_rank(ragged), InputError);
}

TEST_CASE("polytope dimension is full") {
    CHECK(polytope_dimension(graphs::path(2)) == 3);
    CHECK(polytope_dimension(graphs::complete_bipartite(2, 3)) == 11);
    CHECK(polytope_dimension(graphs::empty(0)) == 0);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = tmlab::testing::random_small_graph(rng, 5);
        CHECK(polytope_dimension(g) == g.num_elements());
    }
}

TEST_CASE("face dimensions") {
    const Graph p2 = graphs::path(2);
    const auto basic = basic_inequalities(p2);
    CHECK(face_dimension(p2, basic[2]) == 2);
    CHECK(is_facet(p2, basic[2]));
    // x_0 <= 1 is dominated by the edge inequality on P_2.
    CHECK(face_dimension(p2, basic[0]) == 1);
    CHECK_FALSE(is_facet(p2, basic[0]));
    // Loose bound: empty face.
    CHECK(face_dimension(p2, make_inequality(p2, {{0, 1}}, 2)) == -1);

    const Graph k23 = graphs::complete_bipartite(2, 3);
    const auto unit = biclique_inequality(k23, whole(2, 3));
    CHECK(face_dimension(k23, unit) < 10);
    const auto uneven = uneven_k23(k23);
    CHECK(is_valid(k23, uneven));
    CHECK(face_dimension(k23, uneven) < 10);
    for (const auto& l : lifted_biclique_inequalities(k23, whole(2, 3))) {
        CHECK(face_dimension(k23, l) == 10);
    }

    auto broken = unit;
    broken.rhs = 2;
    try {
        face_dimension(k23, broken);
        FAIL("expected InvalidInequality");
    } catch (const InvalidInequality& e) {
        CHECK(broken.evaluate(e.violator().elements) > 2);
    }
}

TEST_CASE("facets inside host graphs") {
    const Graph c4 = graphs::cycle(4);
    const auto k22_c4 = balanced_biclique_inequalities(c4, 2);
    REQUIRE(k22_c4.size() == 1);
    CHECK(is_facet(c4, k22_c4[0]));

    const Graph c4p = graphs::with_pendant(c4, 0);
    const auto k22_c4p = balanced_biclique_inequalities(c4p, 2);
    REQUIRE(k22_c4p.size() == 1);
    CHECK(is_facet(c4p, k22_c4p[0]));

    const Graph k23 = graphs::complete_bipartite(2, 3);
    for (const auto& l : lifted_biclique_inequalities(k23, whole(2, 3))) CHECK(is_facet(k23, l));

    const Graph host = graphs::with_pendant(k23, 2);
    for (const auto& l : lifted_biclique_inequalities(host, whole(2, 3))) CHECK(is_facet(host, l));
}

TEST_CASE("hull and vertices on P_2") {
    const Graph p2 = graphs::path(2);
    const auto rep = total_matching_polytope(p2);
    REQUIRE(rep.hrep.size() == 4);
    CHECK(rep.equations.empty());
    std::set<InequalityKey> expected{
        key_of(make_inequality(p2, {{0, 1}, {1, 1}, {2, 1}}, 1)),
        key_of(make_inequality(p2, {{0, -1}}, 0)),
        key_of(make_inequality(p2, {{1, -1}}, 0)),
        key_of(make_inequality(p2, {{2, -1}}, 0)),
    };
    CHECK(keys(rep.hrep) == expected);

    const auto basic = basic_inequalities(p2);
    const auto back = vertices(basic, 3);
    CHECK(sorted(back.vrep) == sorted(incidence_vectors(p2)));

    const std::vector<RationalVector> single{{1, 0, Rational(1, 2)}};
    const auto point = hull(single);
    CHECK(point.hrep.empty());
    CHECK(point.vrep.size() == 1);
    CHECK(point.equations.size() == 3);
}

TEST_CASE("hull agrees with brute-force facet search") {
    for (const Graph& g : {graphs::path(3), graphs::star(3), graphs::cycle(3)}) {
        const auto pts = incidence_vectors(g);
        const auto rep = hull(pts);
        CHECK(keys(rep.hrep) == tmlab::testing::brute_force_facets(pts));
        CHECK(sorted(rep.vrep) == sorted(pts));
    }
    // Non-0/1 input with interior and repeated points.
    const std::vector<RationalVector> square{{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {0, 0},
                                             {Rational(1, 2), 2}};
    const auto rep = hull(square);
    CHECK(rep.hrep.size() == 4);
    CHECK(rep.vrep.size() == 4);
    CHECK(keys(rep.hrep) == tmlab::testing::brute_force_facets(square));
}

TEST_CASE("hull and vertices round trip") {
    for (const Graph& g : {graphs::path(2), graphs::path(3), graphs::cycle(4)}) {
        const auto pts = incidence_vectors(g);
        const auto h = hull(pts);
        const auto v = vertices(h.hrep, g.num_elements());
        CHECK(sorted(v.vrep) == sorted(pts));
        const auto h2 = hull(v.vrep);
        CHECK(keys(h2.hrep) == keys(h.hrep));
    }
}

TEST_CASE("lower-dimensional hull") {
    // Triangle in the plane z = 1 of R^3.
    const std::vector<RationalVector> tri{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}};
    const auto rep = hull(tri);
    CHECK(rep.equations.size() == 1);
    CHECK(rep.hrep.size() == 3);
    CHECK(rep.vrep.size() == 3);
    for (const auto& f : rep.hrep) {
        int tight = 0;
        for (const auto& p : tri) {
            CHECK(f.evaluate(p) <= f.rhs);
            if (f.evaluate(p) == f.rhs) ++tight;
        }
        CHECK(tight == 2);
    }
}

TEST_CASE("double description invariants on random graphs") {
    std::mt19937_64 rng(13);
    int tested = 0;
    while (tested < 25) {
        const Graph g = tmlab::testing::random_small_graph(rng, 5);
        if (g.num_elements() > 9 || g.num_elements() == 0) continue;
        ++tested;
        const auto pts = incidence_vectors(g);
        const auto rep = total_matching_polytope(g);
        // Every incidence vector is a vertex of the 0/1 polytope.
        CHECK(rep.vrep.size() == pts.size());
        for (const auto& f : rep.hrep) {
            // Each facet is valid, and tight on exactly dim many affinely
            // independent points.
            std::vector<RationalVector> tight;
            for (const auto& p : pts) {
                REQUIRE(f.evaluate(p) <= f.rhs);
                if (f.evaluate(p) == f.rhs) tight.push_back(p);
            }
            CHECK(affine_rank(tight) == g.num_elements());
            CHECK(is_facet(g, f));
        }
        // Facet iff appears in the hull, over the family inequalities.
        const auto facet_keys = keys(rep.hrep);
        for (const auto& b : basic_inequalities(g)) {
            CHECK(is_facet(g, b) == (facet_keys.count(key_of(b)) == 1));
        }
    }
}

TEST_CASE("facet test is invariant under positive scaling") {
    const Graph k23 = graphs::complete_bipartite(2, 3);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(1, 9), den(1, 7);
    auto family = lifted_biclique_inequalities(k23, whole(2, 3));
    family.push_back(biclique_inequality(k23, whole(2, 3)));
    family.push_back(uneven_k23(k23));
    for (const auto& i : family) {
        for (int trial = 0; trial < 5; ++trial) {
            const Rational f(num(rng), den(rng));
            auto scaled = i;
            for (auto& c : scaled.coeffs) c *= f;
            scaled.rhs *= f;
            CHECK(face_dimension(k23, scaled) == face_dimension(k23, i));
        }
    }
}

TEST_CASE("completeness checks") {
    for (const auto& trees : tmlab::testing::nonisomorphic_trees(5)) {
        for (const auto& t : trees) {
            const auto report = check_complete_description(t, basic_inequalities(t));
            CHECK(report.complete);
            CHECK(report.missing_facets.empty());
        }
    }

    const Graph k23 = graphs::complete_bipartite(2, 3);
    std::vector<LinearInequality> claimed = basic_inequalities(k23);
    const auto basic_only = check_complete_description(k23, claimed);
    CHECK_FALSE(basic_only.complete);
    CHECK(basic_only.dimension == 11);
    const auto lifted = lifted_biclique_inequalities(k23, whole(2, 3));
    // Basic inequalities miss the K_{2,2} ones and the two lifted ones.
    const auto missing = keys(basic_only.missing_facets);
    for (const auto& l : lifted) CHECK(missing.count(key_of(l)) == 1);
    CHECK(basic_only.missing_facets.size() == 5);

    auto b2 = balanced_biclique_inequalities(k23, 2);
    claimed.insert(claimed.end(), b2.begin(), b2.end());
    claimed.insert(claimed.end(), lifted.begin(), lifted.end());
    const auto full = check_complete_description(k23, claimed);
    CHECK(full.complete);
    CHECK(full.facets.size() == 27);
    for (const auto& r : full.redundant) CHECK_FALSE(is_facet(k23, r));

    auto with_unit = claimed;
    with_unit.push_back(biclique_inequality(k23, whole(2, 3)));
    const auto report = check_complete_description(k23, with_unit);
    CHECK(report.complete);
    CHECK(keys(report.redundant).count(key_of(with_unit.back())) == 1);

    auto bad = claimed;
    bad.push_back(make_inequality(k23, {{0, 1}, {1, 1}}, 1));
    CHECK_THROWS_AS(check_complete_description(k23, bad), InvalidInequality);
}

TEST_CASE("caps and unbounded input") {
    const Graph k33 = graphs::complete_bipartite(3, 3);
    CHECK_THROWS_AS(total_matching_polytope(k33), CapExceeded);
    CHECK_THROWS_AS(total_matching_polytope(k33, PolyOptions{10, 15}), CapExceeded);

    const Graph p2 = graphs::path(2);
    std::vector<LinearInequality> open{make_inequality(p2, {{0, 1}}, 1)};
    CHECK_THROWS_AS(vertices(open, 3), Unbounded);
    CHECK_THROWS_AS(vertices(basic_inequalities(k33), 15), CapExceeded);
}
