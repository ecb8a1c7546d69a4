#include "tmlab/inequality.hpp"

#include <algorithm>
#include <set>

#include "tmlab/errors.hpp"

namespace tmlab {

std::string family_name(Family f) {
    switch (f) {
        case Family::BasicVertex: return "basic-vertex";
        case Family::BasicEdge: return "basic-edge";
        case Family::NonNeg: return "nonneg";
        case Family::BalancedBiclique: return "balanced-biclique";
        case Family::LiftedBiclique: return "lifted-biclique";
        case Family::Custom: return "custom";
    }
    return "custom";
}

namespace {

std::string set_string(const std::vector<int>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "}";
}

}  // namespace

std::string InequalityLabel::describe(const Graph& g) const {
    std::string out = family_name(family);
    if (element) out += " " + g.element_name(*element);
    if (biclique) {
        out += " R=" + set_string(biclique->side_r) + " S=" + set_string(biclique->side_s);
    }
    if (distinguished) out += " t=v" + std::to_string(*distinguished);
    if (!note.empty()) out += " " + note;
    return out;
}

Rational LinearInequality::evaluate(std::span<const Rational> z) const {
    if (z.size() != coeffs.size()) {
        throw InputError("point has length " + std::to_string(z.size()) + ", expected " +
                         std::to_string(coeffs.size()));
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (coeffs[i] != 0 && z[i] != 0) sum += coeffs[i] * z[i];
    }
    return sum;
}

Rational LinearInequality::evaluate(std::span<const int> elements) const {
    Rational sum = 0;
    for (int a : elements) sum += coeffs.at(a);
    return sum;
}

LinearInequality normalize(LinearInequality ineq) {
    Integer denom_lcm = 1;
    auto absorb_denominator = [&](const Rational& q) {
        denom_lcm = boost::multiprecision::lcm(denom_lcm, Integer(denominator(q)));
    };
    for (const auto& c : ineq.coeffs) absorb_denominator(c);
    absorb_denominator(ineq.rhs);

    Integer num_gcd = 0;
    auto absorb_numerator = [&](const Rational& q) {
        const Integer scaled = numerator(q) * (denom_lcm / denominator(q));
        num_gcd = boost::multiprecision::gcd(num_gcd, Integer(abs(scaled)));
    };
    for (const auto& c : ineq.coeffs) absorb_numerator(c);
    absorb_numerator(ineq.rhs);
    if (num_gcd == 0) return ineq;  // 0 <= 0

    const Rational factor(denom_lcm, num_gcd);
    for (auto& c : ineq.coeffs) c *= factor;
    ineq.rhs *= factor;
    return ineq;
}

InequalityKey key_of(const LinearInequality& ineq) {
    auto n = normalize(ineq);
    return InequalityKey{std::move(n.coeffs), std::move(n.rhs)};
}

bool same_halfspace(const LinearInequality& a, const LinearInequality& b) {
    return key_of(a) == key_of(b);
}

namespace {

InequalityLabel element_label(Family f, int element) {
    InequalityLabel label;
    label.family = f;
    label.element = element;
    return label;
}

}  // namespace

std::vector<LinearInequality> basic_inequalities(const Graph& g) {
    const int n = g.num_vertices();
    const int d = g.num_elements();
    std::vector<LinearInequality> out;
    out.reserve(2 * d);

    for (int v = 0; v < n; ++v) {
        LinearInequality ineq{RationalVector(d, Rational(0)), 1,
                              element_label(Family::BasicVertex, v)};
        ineq.coeffs[v] = 1;
        for (int j : g.incident_edges(v)) ineq.coeffs[g.edge_element(j)] = 1;
        out.push_back(std::move(ineq));
    }
    for (int j = 0; j < g.num_edges(); ++j) {
        const int e = g.edge_element(j);
        LinearInequality ineq{RationalVector(d, Rational(0)), 1,
                              element_label(Family::BasicEdge, e)};
        ineq.coeffs[g.edge(j).u] = 1;
        ineq.coeffs[g.edge(j).v] = 1;
        ineq.coeffs[e] = 1;
        out.push_back(std::move(ineq));
    }
    for (int a = 0; a < d; ++a) {
        LinearInequality ineq{RationalVector(d, Rational(0)), 0,
                              element_label(Family::NonNeg, a)};
        ineq.coeffs[a] = -1;
        out.push_back(std::move(ineq));
    }
    return out;
}

namespace {

void set_biclique_ones(const Graph& g, const Biclique& b, RationalVector& coeffs) {
    for (int v : b.side_r) coeffs[v] = 1;
    for (int w : b.side_s) coeffs[w] = 1;
    for (int v : b.side_r) {
        for (int w : b.side_s) coeffs[g.edge_element(*g.edge_index(v, w))] = 1;
    }
}

Biclique checked_biclique(const Graph& g, const Biclique& b) {
    return make_biclique(g, b.side_r, b.side_s);
}

}  // namespace

std::vector<LinearInequality> balanced_biclique_inequalities(const Graph& g, int r) {
    if (r < 1) throw InputError("balanced biclique size must be at least 1");
    std::vector<LinearInequality> out;
    for (const auto& b : enumerate_induced_bicliques(g, r)) {
        if (b.r() != r || b.s() != r) continue;
        LinearInequality ineq{RationalVector(g.num_elements(), Rational(0)), r, {}};
        ineq.label.family = Family::BalancedBiclique;
        ineq.label.biclique = b;
        set_biclique_ones(g, b, ineq.coeffs);
        out.push_back(std::move(ineq));
    }
    return out;
}

LinearInequality biclique_inequality(const Graph& g, const Biclique& b) {
    const Biclique bc = checked_biclique(g, b);
    if (bc.r() == 0 || bc.s() == 0) throw InputError("biclique sides must be nonempty");
    LinearInequality ineq{RationalVector(g.num_elements(), Rational(0)),
                          std::max(bc.r(), bc.s()), {}};
    ineq.label.family = Family::Custom;
    ineq.label.biclique = bc;
    ineq.label.note = "unit-biclique";
    set_biclique_ones(g, bc, ineq.coeffs);
    return ineq;
}

std::vector<LinearInequality> lifted_biclique_inequalities(const Graph& g, const Biclique& b) {
    const Biclique bc = checked_biclique(g, b);
    if (!bc.induced) throw InputError("lifted biclique inequalities need an induced biclique");
    if (!(bc.s() > bc.r() && bc.r() > 1)) {
        throw InputError("lifted biclique inequalities need s > r > 1, got r=" +
                         std::to_string(bc.r()) + " s=" + std::to_string(bc.s()));
    }
    std::vector<LinearInequality> out;
    for (int t : bc.side_r) {
        LinearInequality ineq{RationalVector(g.num_elements(), Rational(0)), bc.s(), {}};
        ineq.label.family = Family::LiftedBiclique;
        ineq.label.biclique = bc;
        ineq.label.distinguished = t;
        set_biclique_ones(g, bc, ineq.coeffs);
        ineq.coeffs[t] = bc.s() - bc.r() + 1;
        out.push_back(std::move(ineq));
    }
    return out;
}

LinearInequality make_inequality(const Graph& g, const std::map<int, Rational>& coeffs,
                                 const Rational& rhs, std::string note) {
    LinearInequality ineq{RationalVector(g.num_elements(), Rational(0)), rhs, {}};
    for (const auto& [a, c] : coeffs) {
        g.element(a);
        ineq.coeffs[a] = c;
    }
    ineq.label.note = std::move(note);
    return ineq;
}

ValidityCheck check_validity(const Graph& g, const LinearInequality& ineq, int cap) {
    if (ineq.dimension() != g.num_elements()) {
        throw InputError("inequality has " + std::to_string(ineq.dimension()) +
                         " coefficients, graph has " + std::to_string(g.num_elements()) +
                         " elements");
    }
    ValidityCheck out;
    bool first = true;
    for_each_total_matching(g, cap, [&](std::span<const int> t) {
        const Rational lhs = ineq.evaluate(t);
        if (first || lhs > out.max_lhs) {
            out.max_lhs = lhs;
            out.argmax.elements.assign(t.begin(), t.end());
            first = false;
        }
        if (lhs > ineq.rhs && !out.violator) {
            out.valid = false;
            out.violator = TotalMatching{{t.begin(), t.end()}};
        }
    });
    return out;
}

bool is_valid(const Graph& g, const LinearInequality& ineq, int cap) {
    return check_validity(g, ineq, cap).valid;
}

LiftResult sequential_lift(const Graph& g, const LinearInequality& base,
                           const std::vector<int>& fixed_zero, const std::vector<int>& order,
                           int cap) {
    const int d = g.num_elements();
    if (base.dimension() != d) throw InputError("base inequality dimension mismatch");
    std::set<int> fixed(fixed_zero.begin(), fixed_zero.end());
    if (fixed.size() != fixed_zero.size()) throw InputError("fixed_zero has repeated elements");
    for (int a : fixed) g.element(a);
    if (std::set<int>(order.begin(), order.end()) != fixed || order.size() != fixed.size()) {
        throw InputError("lifting order must be a permutation of fixed_zero");
    }

    std::uint64_t pending = 0;
    for (int a : fixed) pending |= std::uint64_t{1} << a;

    struct Candidate {
        std::uint64_t mask;
        std::vector<int> elements;
    };
    std::vector<Candidate> matchings;
    for_each_total_matching(g, cap, [&](std::span<const int> t) {
        Candidate c{0, {t.begin(), t.end()}};
        for (int a : t) c.mask |= std::uint64_t{1} << a;
        matchings.push_back(std::move(c));
    });

    LiftResult result{base, {}, {}};
    for (const auto& c : matchings) {
        if ((c.mask & pending) == 0 && base.evaluate(c.elements) > base.rhs) {
            throw InputError("base inequality is not valid on the restricted polytope");
        }
    }

    for (int a : order) {
        const std::uint64_t bit = std::uint64_t{1} << a;
        pending &= ~bit;
        std::optional<Rational> best;
        for (const auto& c : matchings) {
            if (!(c.mask & bit) || (c.mask & pending)) continue;
            Rational lhs = 0;
            for (int e : c.elements) {
                if (e != a) lhs += result.ineq.coeffs[e];
            }
            if (!best || lhs > *best) best = lhs;
        }
        // {a} is itself a total matching, so best is always set.
        const Rational coeff = result.ineq.rhs - *best;
        result.ineq.coeffs[a] = coeff;
        result.inner_optima.push_back(*best);
        result.lifted_coeffs.push_back(coeff);
    }
    result.ineq.label = InequalityLabel{};
    result.ineq.label.note = "sequentially-lifted";
    return result;
}

TotalMatching edge_lift_counterexample(const Graph& g, const Biclique& b, int edge_elem) {
    const Biclique bc = checked_biclique(g, b);
    if (!bc.induced) throw InputError("edge lifting counterexample needs an induced biclique");
    if (bc.s() <= bc.r()) throw InputError("edge lifting counterexample needs s > r");
    const Element el = g.element(edge_elem);
    if (el.kind != ElementKind::Edge) throw InputError("element is not an edge");
    const Edge& e = g.edge(el.index);

    auto in = [](const std::vector<int>& side, int v) {
        return std::binary_search(side.begin(), side.end(), v);
    };
    int rv = -1;
    int sw = -1;
    if (in(bc.side_r, e.u) && in(bc.side_s, e.v)) {
        rv = e.u;
        sw = e.v;
    } else if (in(bc.side_r, e.v) && in(bc.side_s, e.u)) {
        rv = e.v;
        sw = e.u;
    } else {
        throw InputError("edge " + g.element_name(edge_elem) + " is not in the biclique");
    }

    // S' = {sw} plus the first r-1 other S-vertices spans an induced K_{r,r}.
    std::vector<int> r_rest;
    for (int v : bc.side_r) {
        if (v != rv) r_rest.push_back(v);
    }
    std::vector<int> s_rest;
    std::vector<int> leftover;
    for (int w : bc.side_s) {
        if (w == sw) continue;
        (s_rest.size() < r_rest.size() ? s_rest : leftover).push_back(w);
    }

    TotalMatching t;
    t.elements.push_back(edge_elem);
    for (std::size_t i = 0; i < r_rest.size(); ++i) {
        t.elements.push_back(g.edge_element(*g.edge_index(r_rest[i], s_rest[i])));
    }
    for (int w : leftover) t.elements.push_back(w);
    std::sort(t.elements.begin(), t.elements.end());
    return t;
}

}  // namespace tmlab
