#include "tmlab/separation.hpp"

#include <algorithm>
#include <set>

#include "tmlab/errors.hpp"

namespace tmlab {

namespace {

struct Scan {
    std::vector<LinearInequality> members;
    std::vector<ScannedFamily> searched;
};

Scan scan_families(const Graph& g, int max_side) {
    if (max_side < 1) throw InputError("max_side must be at least 1");
    Scan scan;
    std::set<InequalityKey> seen;
    auto add = [&](LinearInequality ineq) {
        if (seen.insert(key_of(ineq)).second) scan.members.push_back(std::move(ineq));
    };

    auto basic = basic_inequalities(g);
    scan.searched.push_back({Family::BasicVertex, 0, 0, g.num_vertices()});
    scan.searched.push_back({Family::BasicEdge, 0, 0, g.num_edges()});
    scan.searched.push_back({Family::NonNeg, 0, 0, g.num_elements()});
    for (auto& b : basic) add(std::move(b));

    const auto bicliques = enumerate_induced_bicliques(g, max_side);
    for (int r = 2; r <= max_side; ++r) {
        ScannedFamily fam{Family::BalancedBiclique, r, r, 0};
        for (auto& ineq : balanced_biclique_inequalities(g, r)) {
            ++fam.scanned;
            add(std::move(ineq));
        }
        scan.searched.push_back(fam);
    }
    for (int r = 2; r <= max_side; ++r) {
        for (int s = r + 1; s <= max_side; ++s) {
            ScannedFamily fam{Family::LiftedBiclique, r, s, 0};
            for (const auto& b : bicliques) {
                if (b.r() != r || b.s() != s) continue;
                for (auto& ineq : lifted_biclique_inequalities(g, b)) {
                    ++fam.scanned;
                    add(std::move(ineq));
                }
            }
            scan.searched.push_back(fam);
        }
    }
    return scan;
}

}  // namespace

std::vector<LinearInequality> family_inequalities(const Graph& g, int max_side) {
    return scan_families(g, max_side).members;
}

SeparationResult separate(const Graph& g, const RationalVector& z, int max_side) {
    if (static_cast<int>(z.size()) != g.num_elements()) {
        throw InputError("point has length " + std::to_string(z.size()) + ", graph has " +
                         std::to_string(g.num_elements()) + " elements");
    }
    auto scan = scan_families(g, max_side);
    SeparationResult result;
    result.searched = std::move(scan.searched);
    for (auto& ineq : scan.members) {
        const Rational amount = ineq.evaluate(z) - ineq.rhs;
        if (amount > 0) result.violated.push_back({std::move(ineq), amount});
    }
    std::stable_sort(result.violated.begin(), result.violated.end(),
                     [](const Violation& a, const Violation& b) { return a.amount > b.amount; });
    return result;
}

}  // namespace tmlab
