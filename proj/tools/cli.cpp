#include "cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tmlab/errors.hpp"
#include "tmlab/graph.hpp"
#include "tmlab/inequality.hpp"
#include "tmlab/io.hpp"
#include "tmlab/polylab.hpp"
#include "tmlab/separation.hpp"
#include "tmlab/totalmatch.hpp"

namespace tmlab::cli {

namespace {

using nlohmann::ordered_json;

struct RunConfig {
    std::string command;
    std::string graph_path;
    std::string ineq_path;
    std::string point_path;
    std::string family = "all";
    int r = 2;
    int max_side = 4;
    int element_cap = kDefaultElementCap;
    int hull_dim_cap = kDefaultHullDimCap;
    bool json = false;
};

std::string element_set(const Graph& g, std::span<const int> elements) {
    std::string out = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i) out += ", ";
        out += g.element_name(elements[i]);
    }
    return out + "}";
}

ordered_json element_list(const Graph& g, std::span<const int> elements) {
    ordered_json arr = ordered_json::array();
    for (int a : elements) arr.push_back(g.element_name(a));
    return arr;
}

ordered_json rational_list(const RationalVector& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& q : v) arr.push_back(to_string(q));
    return arr;
}

ordered_json inequality_json(const Graph& g, const LinearInequality& i) {
    return ordered_json{{"label", i.label.describe(g)},
                        {"coeffs", rational_list(i.coeffs)},
                        {"rhs", to_string(i.rhs)}};
}

ordered_json inequality_list(const Graph& g, const std::vector<LinearInequality>& ineqs) {
    ordered_json arr = ordered_json::array();
    for (const auto& i : ineqs) arr.push_back(inequality_json(g, i));
    return arr;
}

std::string graph_line(const Graph& g) {
    return "graph: n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) +
           " elements=" + std::to_string(g.num_elements());
}

/// Attaches family labels to unlabeled inequalities that coincide with a
/// known family member.
void classify(const Graph& g, std::vector<LinearInequality>& ineqs) {
    std::map<InequalityKey, InequalityLabel> known;
    const int side = std::max(1, std::min(4, g.num_vertices()));
    for (const auto& f : family_inequalities(g, side)) known.emplace(key_of(f), f.label);
    for (auto& i : ineqs) {
        if (i.label.family != Family::Custom) continue;
        if (auto it = known.find(key_of(i)); it != known.end()) i.label = it->second;
    }
}

/// Families whose union is claimed to describe P_T(g) completely.
std::pair<std::string, std::vector<LinearInequality>> claimed_families(const Graph& g,
                                                                       int max_side) {
    if (is_tree(g)) return {"basic (tree)", basic_inequalities(g)};
    if (is_complete_bipartite(g)) {
        return {"basic + balanced biclique + lifted biclique (complete bipartite)",
                family_inequalities(g, std::max(1, g.num_vertices()))};
    }
    return {"basic + balanced biclique + lifted biclique (max side " + std::to_string(max_side) +
                ")",
            family_inequalities(g, max_side)};
}

void emit(const RunConfig& cfg, std::ostream& out, const ordered_json& j,
          const std::string& text) {
    if (cfg.json) {
        out << j.dump(2) << "\n";
    } else {
        out << text;
    }
}

int cmd_solve(const RunConfig& cfg, const Graph& g, std::ostream& out, bool bounds_only) {
    const bool tree = is_tree(g);
    const auto best = maximum_total_matching(g, cfg.element_cap);
    const int value = static_cast<int>(best.size());

    std::optional<BoundsReport> b;
    if (g.num_elements() <= std::min(cfg.element_cap, kMaxElementCap)) {
        b = bounds(g, cfg.element_cap);
    }

    ordered_json j;
    std::ostringstream t;
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    j["method"] = tree ? "tree dynamic program" : "exhaustive enumeration";
    j["nu_T"] = value;
    t << graph_line(g) << "\n";
    t << "method: " << j["method"].get<std::string>() << "\n";
    t << "nu_T: " << value << "\n";
    if (!bounds_only) {
        j["optimal"] = element_list(g, best.elements);
        t << "optimal: " << element_set(g, best.elements) << "\n";
    }
    bool ok = true;
    if (b) {
        j["alpha"] = b->alpha;
        j["nu"] = b->nu;
        j["tau"] = b->tau;
        j["lower_bound_holds"] = b->lower_bound_holds;
        j["cover_bound_holds"] = b->cover_bound_holds;
        t << "alpha: " << b->alpha << "\n";
        t << "nu: " << b->nu << "\n";
        t << "tau: " << b->tau << "\n";
        t << "bound nu_T >= max(alpha, nu): " << (b->lower_bound_holds ? "holds" : "VIOLATED")
          << "\n";
        t << "bound tau <= nu_T: " << (b->cover_bound_holds ? "holds" : "VIOLATED") << "\n";
        ok = b->lower_bound_holds && b->cover_bound_holds;
    } else {
        j["alpha"] = nullptr;
        j["nu"] = nullptr;
        j["tau"] = nullptr;
        j["lower_bound_holds"] = nullptr;
        j["cover_bound_holds"] = nullptr;
        t << "alpha, nu, tau: skipped (element cap " << cfg.element_cap << ")\n";
    }
    emit(cfg, out, j, t.str());
    return ok ? kOk : kIncomplete;
}

int cmd_enumerate(const RunConfig& cfg, const Graph& g, std::ostream& out) {
    const auto all = enumerate_total_matchings(g, cfg.element_cap);
    ordered_json j;
    std::ostringstream t;
    j["count"] = all.size();
    j["total_matchings"] = ordered_json::array();
    t << "count: " << all.size() << "\n";
    for (const auto& tm : all) {
        j["total_matchings"].push_back(element_list(g, tm.elements));
        t << element_set(g, tm.elements) << "\n";
    }
    emit(cfg, out, j, t.str());
    return kOk;
}

int cmd_ineq(const RunConfig& cfg, const Graph& g, std::ostream& out) {
    std::vector<LinearInequality> ineqs;
    if (cfg.family == "basic") {
        ineqs = basic_inequalities(g);
    } else if (cfg.family == "biclique") {
        ineqs = balanced_biclique_inequalities(g, cfg.r);
    } else if (cfg.family == "lifted") {
        for (const auto& b : enumerate_induced_bicliques(g, cfg.max_side)) {
            if (b.s() > b.r() && b.r() > 1) {
                auto l = lifted_biclique_inequalities(g, b);
                ineqs.insert(ineqs.end(), l.begin(), l.end());
            }
        }
    } else if (cfg.family == "all") {
        ineqs = family_inequalities(g, cfg.max_side);
    } else {
        throw InputError("unknown family '" + cfg.family +
                         "' (expected basic, biclique, lifted or all)");
    }
    ordered_json j;
    j["inequalities"] = inequality_list(g, ineqs);
    emit(cfg, out, j, io::format_inequalities(ineqs, &g));
    return kOk;
}

int cmd_facet(const RunConfig& cfg, const Graph& g, std::ostream& out) {
    auto ineqs = io::read_inequalities(cfg.ineq_path, g.num_elements());
    classify(g, ineqs);
    const int dim = polytope_dimension(g, cfg.element_cap);
    ordered_json j;
    j["dimension"] = dim;
    j["results"] = ordered_json::array();
    std::ostringstream t;
    t << graph_line(g) << "\n" << "dimension: " << dim << "\n";
    for (const auto& i : ineqs) {
        ordered_json r = inequality_json(g, i);
        t << "# " << i.label.describe(g) << "\n" << io::format_inequality(i) << "\n";
        const auto v = check_validity(g, i, cfg.element_cap);
        if (!v.valid) {
            r["valid"] = false;
            r["facet"] = false;
            r["face_dimension"] = nullptr;
            r["violated_by"] = element_list(g, v.violator->elements);
            t << "invalid (violated by " << element_set(g, v.violator->elements) << ")\n";
        } else {
            const int fd = face_dimension(g, i, cfg.element_cap);
            const bool facet = fd == dim - 1;
            r["valid"] = true;
            r["facet"] = facet;
            r["face_dimension"] = fd;
            t << (facet ? "valid, facet" : "valid, not facet") << " (face dimension " << fd
              << " of " << dim << ")\n";
        }
        j["results"].push_back(std::move(r));
    }
    emit(cfg, out, j, t.str());
    return kOk;
}

void warn_dimension(const RunConfig& cfg, int dim, std::ostream& err) {
    if (dim > kDefaultHullDimCap && dim <= cfg.hull_dim_cap) {
        err << "warning: ambient dimension " << dim << " exceeds the default cap "
            << kDefaultHullDimCap << "; double description may take a long time\n";
    }
}

int cmd_hull(const RunConfig& cfg, const Graph& g, std::ostream& out, std::ostream& err) {
    warn_dimension(cfg, g.num_elements(), err);
    auto rep = total_matching_polytope(g, {cfg.element_cap, cfg.hull_dim_cap});
    classify(g, rep.hrep);
    ordered_json j;
    j["dimension"] = g.num_elements();
    j["vertices"] = rep.vrep.size();
    j["facets"] = inequality_list(g, rep.hrep);
    std::ostringstream t;
    t << "# " << graph_line(g) << "\n# vertices: " << rep.vrep.size()
      << "\n# facets: " << rep.hrep.size() << "\n";
    t << io::format_inequalities(rep.hrep, &g);
    emit(cfg, out, j, t.str());
    return kOk;
}

int cmd_vertices(const RunConfig& cfg, const Graph& g, std::ostream& out, std::ostream& err) {
    const int d = g.num_elements();
    warn_dimension(cfg, d, err);
    const auto ineqs = io::read_inequalities(cfg.ineq_path, d);
    const auto rep = vertices(ineqs, d, cfg.hull_dim_cap);
    ordered_json j;
    j["dimension"] = d;
    j["vertices"] = ordered_json::array();
    std::ostringstream t;
    t << "# vertices: " << rep.vrep.size() << "\n";
    for (const auto& v : rep.vrep) {
        j["vertices"].push_back(rational_list(v));
        for (std::size_t i = 0; i < v.size(); ++i) t << (i ? " " : "") << to_string(v[i]);
        t << "\n";
    }
    emit(cfg, out, j, t.str());
    return kOk;
}

int cmd_check(const RunConfig& cfg, const Graph& g, std::ostream& out, std::ostream& err) {
    warn_dimension(cfg, g.num_elements(), err);
    auto [claim, ineqs] = cfg.ineq_path.empty()
                              ? claimed_families(g, cfg.max_side)
                              : std::pair{std::string("inequality file"),
                                          io::read_inequalities(cfg.ineq_path, g.num_elements())};
    auto report = check_complete_description(g, ineqs, {cfg.element_cap, cfg.hull_dim_cap});
    classify(g, report.missing_facets);

    ordered_json j;
    j["complete"] = report.complete;
    j["dimension"] = report.dimension;
    j["claimed"] = claim;
    j["facet_count"] = report.facets.size();
    j["missing_facets"] = inequality_list(g, report.missing_facets);
    j["redundant"] = inequality_list(g, report.redundant);

    std::ostringstream t;
    t << graph_line(g) << "\n";
    t << "claimed: " << claim << "\n";
    t << "dimension: " << report.dimension << "\n";
    t << "facets: " << report.facets.size() << "\n";
    t << "complete: " << (report.complete ? "true" : "false") << "\n";
    t << "missing facets: " << report.missing_facets.size() << "\n";
    t << io::format_inequalities(report.missing_facets, &g);
    t << "redundant: " << report.redundant.size() << "\n";
    t << io::format_inequalities(report.redundant, &g);
    emit(cfg, out, j, t.str());
    return report.complete ? kOk : kIncomplete;
}

int cmd_separate(const RunConfig& cfg, const Graph& g, std::ostream& out) {
    const auto z = io::read_point(cfg.point_path, g.num_elements());
    const auto res = separate(g, z, cfg.max_side);
    ordered_json j;
    j["violated"] = ordered_json::array();
    std::ostringstream t;
    t << "violated: " << res.violated.size() << "\n";
    for (const auto& v : res.violated) {
        auto e = inequality_json(g, v.ineq);
        e["violation"] = to_string(v.amount);
        j["violated"].push_back(std::move(e));
        t << "# " << v.ineq.label.describe(g) << " violation " << to_string(v.amount) << "\n"
          << io::format_inequality(v.ineq) << "\n";
    }
    j["searched"] = ordered_json::array();
    t << "searched:\n";
    for (const auto& s : res.searched) {
        j["searched"].push_back(
            {{"family", family_name(s.family)}, {"r", s.r}, {"s", s.s}, {"scanned", s.scanned}});
        t << "  " << family_name(s.family);
        if (s.r) t << " r=" << s.r << " s=" << s.s;
        t << ": " << s.scanned << "\n";
    }
    emit(cfg, out, j, t.str());
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Total matching polytope laboratory", "tmlab"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::optional<int> force_dim;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", cfg.graph_path, "graph file")->required();
        sub->add_flag("--json", cfg.json, "machine-readable output");
        sub->add_option("--cap", cfg.element_cap, "element cap for exhaustive search")
            ->check(CLI::Range(1, kMaxElementCap));
        sub->add_option("--max-side", cfg.max_side, "largest biclique side scanned")
            ->check(CLI::PositiveNumber);
    };
    auto add_dim = [&](CLI::App* sub) {
        sub->add_option("--force-dim", force_dim, "raise the hull dimension cap")
            ->check(CLI::Range(1, kMaxElementCap));
    };

    auto* solve = app.add_subcommand("solve", "maximum total matching and bounds");
    auto* enumerate = app.add_subcommand("enumerate", "list all total matchings");
    auto* ineq = app.add_subcommand("ineq", "write an inequality family");
    auto* facet = app.add_subcommand("facet", "validity and facet status of inequalities");
    auto* hull_cmd = app.add_subcommand("hull", "facets of the total matching polytope");
    auto* vert = app.add_subcommand("vertices", "vertices of an inequality system");
    auto* check = app.add_subcommand("check", "verify a complete linear description");
    auto* sep = app.add_subcommand("separate", "violated family members at a point");
    auto* bnd = app.add_subcommand("bounds", "nu_T, alpha, nu, tau and their bounds");
    for (auto* s : {solve, enumerate, ineq, facet, hull_cmd, vert, check, sep, bnd}) add_common(s);
    for (auto* s : {hull_cmd, vert, check}) add_dim(s);
    ineq->add_option("--family", cfg.family, "basic | biclique | lifted | all");
    ineq->add_option("--r", cfg.r, "balanced biclique side")->check(CLI::PositiveNumber);
    facet->add_option("--ineq", cfg.ineq_path, "inequality file")->required();
    vert->add_option("--ineq", cfg.ineq_path, "inequality file")->required();
    check->add_option("--ineq", cfg.ineq_path, "inequality file replacing the claimed families");
    sep->add_option("--point", cfg.point_path, "point file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    if (force_dim) cfg.hull_dim_cap = *force_dim;

    try {
        const Graph g = io::read_graph(cfg.graph_path);
        if (solve->parsed()) return cmd_solve(cfg, g, out, false);
        if (bnd->parsed()) return cmd_solve(cfg, g, out, true);
        if (enumerate->parsed()) return cmd_enumerate(cfg, g, out);
        if (ineq->parsed()) return cmd_ineq(cfg, g, out);
        if (facet->parsed()) return cmd_facet(cfg, g, out);
        if (hull_cmd->parsed()) return cmd_hull(cfg, g, out, err);
        if (vert->parsed()) return cmd_vertices(cfg, g, out, err);
        if (check->parsed()) return cmd_check(cfg, g, out, err);
        if (sep->parsed()) return cmd_separate(cfg, g, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const InvalidInequality& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const Unbounded& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace tmlab::cli
