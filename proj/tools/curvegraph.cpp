// Command-line front end: loads piecewise-linear spatial graphs, reports net
// total curvature and its companion quantities, and drives the bundled
// reproduction experiments. Exit codes: 0 success, 1 usage or input error,
// 2 a numerical cross-check failed.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvegraph/crofton.hpp"
#include "curvegraph/double_cover.hpp"
#include "curvegraph/families.hpp"
#include "curvegraph/graph.hpp"
#include "curvegraph/graph_curvature.hpp"
#include "curvegraph/minimizer.hpp"
#include "curvegraph/projection.hpp"
#include "curvegraph/repro.hpp"
#include "curvegraph/vertex_curvature.hpp"

using curvegraph::HalfInt;
using curvegraph::kPi;
using curvegraph::Vec3;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt_vec(const Vec3& v) {
    return "(" + fmt(v.x) + ", " + fmt(v.y) + ", " + fmt(v.z) + ")";
}

// "3*pi", "5/2*pi", "3/4*pi"; empty when x is not a near-exact small rational
// multiple of pi.
std::string pi_multiple(double x) {
    for (std::int64_t den : {1, 2, 3, 4, 6, 8, 12}) {
        double scaled = x * den / kPi;
        double rounded = std::round(scaled);
        if (std::abs(scaled - rounded) > 1e-9 * std::max(1.0, std::abs(scaled))) continue;
        auto num = static_cast<std::int64_t>(rounded);
        if (num == 0) return "0";
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        num /= g;
        std::int64_t d = den / g;
        std::string head = num == 1 && d == 1 ? "" : num == -1 && d == 1 ? "-" :
                           d == 1 ? std::to_string(num) :
                                    std::to_string(num) + "/" + std::to_string(d);
        return head.empty() || head == "-" ? head + "pi" : head + "*pi";
    }
    return "";
}

std::string with_pi(double x) {
    std::string sym = pi_multiple(x);
    if (sym.empty() || sym == "0") return fmt(x);
    return fmt(x) + " (" + sym + ")";
}

std::string pi_units(HalfInt h) {
    if (h.doubled == 0) return "0";
    if (h == HalfInt::whole(1)) return "pi";
    return h.str() + "*pi";
}

Vec3 parse_vec(const std::string& text) {
    Vec3 v;
    char extra;
    std::string s = text;
    for (char& c : s)
        if (c == ',' || c == ';') c = ' ';
    std::istringstream in(s);
    if (!(in >> v.x >> v.y >> v.z) || (in >> extra))
        throw curvegraph::GraphError(curvegraph::GraphError::Code::BadArgument,
                                     "expected three comma-separated coordinates, got '" +
                                         text + "'");
    return v;
}

std::vector<Vec3> parse_tangents(const std::string& text) {
    std::vector<Vec3> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ';'))
        if (!part.empty()) out.push_back(parse_vec(part));
    return out;
}

struct GraphSource {
    std::string path;
    std::string family;

    void attach(CLI::App* cmd, bool path_required) {
        cmd->add_option("graph", path, "input graph (JSON)")->check(CLI::ExistingFile);
        cmd->add_option("--family", family,
                        "built-in family instead of a file, e.g. theta:4 or bipartite:3,3");
        if (path_required) cmd->require_option();
    }

    curvegraph::SpatialGraph load() const {
        if (!family.empty() && !path.empty())
            throw curvegraph::GraphError(curvegraph::GraphError::Code::BadArgument,
                                         "give either a graph file or --family, not both");
        if (!family.empty()) return curvegraph::embed_family(curvegraph::parse_family(family));
        if (path.empty())
            throw curvegraph::GraphError(curvegraph::GraphError::Code::BadArgument,
                                         "need a graph file or --family");
        return curvegraph::load_graph_file(path);
    }
};

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file)
        throw curvegraph::GraphError(curvegraph::GraphError::Code::BadArgument,
                                     "cannot write '" + path + "'");
    return file;
}

// --- ntc --------------------------------------------------------------------

int run_ntc(const GraphSource& src, const std::string& format, const std::string& functional,
            bool breakdown) {
    curvegraph::SpatialGraph g = src.load();
    curvegraph::CurvatureReport rep = curvegraph::curvature_report(g);
    const bool want_ntc = functional == "all" || functional == "ntc";
    const bool want_tc = functional == "all" || functional == "tc";
    const bool want_ctc = functional == "all" || functional == "ctc";
    if (format == "json") {
        json out;
        out["name"] = g.name;
        if (breakdown || functional == "all") {
            out["vertices"] = json::array();
            for (const auto& v : rep.vertices) {
                json row = {{"id", v.id}, {"degree", v.degree}};
                if (want_ntc) row["ntc"] = v.ntc;
                if (want_tc) row["tc"] = v.tc;
                if (want_ctc) row["ctc"] = v.ctc;
                out["vertices"].push_back(row);
            }
        }
        out["joint_sum"] = rep.joint_sum;
        if (want_tc) out["tc_total"] = rep.tc_total;
        if (want_ctc) out["ctc_total"] = rep.ctc_total;
        if (want_ntc) out["ntc_total"] = rep.ntc_total;
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::size_t joints = 0;
    for (const auto& e : g.edges) joints += e.polyline.size();
    std::cout << "graph: " << g.name << "  (" << g.vertices.size() << " vertices, "
              << g.edges.size() << " edges, " << joints << " interior joints)\n";
    if (breakdown) {
        std::cout << "vertex curvature:\n";
        std::printf("  %-12s %6s %16s %16s %16s\n", "id", "degree", "ntc", "tc", "ctc");
        for (const auto& v : rep.vertices)
            std::printf("  %-12s %6d %16s %16s %16s\n", v.id.c_str(), v.degree,
                        fmt(v.ntc).c_str(), fmt(v.tc).c_str(), fmt(v.ctc).c_str());
    }
    std::cout << "joint bend sum = " << fmt(rep.joint_sum) << "\n";
    if (want_tc) std::cout << "tc_total = " << with_pi(rep.tc_total) << "\n";
    if (want_ctc) std::cout << "ctc_total = " << with_pi(rep.ctc_total) << "\n";
    if (want_ntc) std::cout << "ntc_total = " << with_pi(rep.ntc_total) << "\n";
    return kExitOk;
}

// --- vertex -----------------------------------------------------------------

int run_vertex(const GraphSource& src, const std::string& id, const std::string& tangents_text,
               int mc_samples, std::uint64_t seed, const std::string& format) {
    std::vector<Vec3> tangents;
    if (!tangents_text.empty()) {
        tangents = parse_tangents(tangents_text);
    } else {
        curvegraph::SpatialGraph g = src.load();
        if (id.empty())
            throw curvegraph::GraphError(curvegraph::GraphError::Code::BadArgument,
                                         "need --id with a graph file, or --tangents");
        tangents = curvegraph::tangent_star(g, id).tangents;
    }
    curvegraph::VertexReport rep = curvegraph::vertex_report(tangents);
    std::optional<curvegraph::McEstimate> mc;
    if (mc_samples > 0) mc = curvegraph::ntc_vertex_mc(tangents, mc_samples, seed);
    if (format == "json") {
        json out;
        out["degree"] = rep.degree;
        out["tangents"] = json::array();
        for (const auto& t : tangents) out["tangents"].push_back({t.x, t.y, t.z});
        out["ntc"] = rep.ntc;
        out["tc"] = rep.tc;
        out["ctc"] = rep.ctc;
        out["vtc"] = rep.vtc;
        out["ntc_sym"] = pi_multiple(rep.ntc);
        out["tc_sym"] = pi_multiple(rep.tc);
        out["ctc_sym"] = pi_multiple(rep.ctc);
        if (mc)
            out["monte_carlo"] = {{"estimate", mc->estimate},
                                  {"stderr", mc->stderr_of_mean},
                                  {"samples", mc->samples},
                                  {"seed", seed}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "degree = " << rep.degree << "\n";
    for (std::size_t i = 0; i < tangents.size(); ++i)
        std::cout << "  T" << i + 1 << " = " << fmt_vec(tangents[i]) << "\n";
    std::cout << "ntc = " << with_pi(rep.ntc) << "\n";
    std::cout << "tc  = " << with_pi(rep.tc) << "\n";
    std::cout << "ctc = " << with_pi(rep.ctc) << "\n";
    std::cout << "vtc = " << fmt(rep.vtc) << "\n";
    if (mc)
        std::cout << "monte carlo ntc = " << fmt(mc->estimate) << " +- "
                  << fmt(mc->stderr_of_mean) << "  (" << mc->samples << " samples, seed " << seed
                  << ")\n";
    return kExitOk;
}

// --- mu ---------------------------------------------------------------------

const char* kind_name(curvegraph::CriticalPoint::Kind k) {
    return k == curvegraph::CriticalPoint::Kind::Vertex ? "vertex" : "joint";
}

int run_mu(const GraphSource& src, const std::string& direction_text,
           const std::vector<double>& levels, bool want_width, const std::string& format) {
    curvegraph::SpatialGraph g = src.load();
    Vec3 requested = parse_vec(direction_text).normalized();
    curvegraph::Direction used = curvegraph::ensure_generic(g, requested);
    bool perturbed = curvegraph::dist(used, requested) > 1e-15;
    curvegraph::ProjectionProfile prof = curvegraph::profile(g, used);
    if (format == "json") {
        json out;
        out["requested_direction"] = {requested.x, requested.y, requested.z};
        out["used_direction"] = {used.x, used.y, used.z};
        out["perturbed"] = perturbed;
        out["critical"] = json::array();
        for (const auto& cp : prof.critical) {
            json row = {{"height", cp.height}, {"kind", kind_name(cp.kind)},
                        {"id", cp.id},         {"d_plus", cp.d_plus},
                        {"d_minus", cp.d_minus}, {"nlm", cp.nlm.str()}};
            if (cp.kind == curvegraph::CriticalPoint::Kind::JointExtremum)
                row["joint_index"] = cp.joint_index;
            out["critical"].push_back(row);
        }
        out["mu"] = prof.mu.str();
        out["mu_doubled"] = prof.mu.doubled;
        if (!levels.empty()) {
            out["fibers"] = json::array();
            for (double level : levels)
                out["fibers"].push_back(
                    {{"level", level}, {"count", curvegraph::fiber_count(g, used, level)}});
        }
        if (want_width) out["width"] = curvegraph::width_in_direction(g, used);
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "requested direction = " << fmt_vec(requested) << "\n";
    std::cout << "used direction      = " << fmt_vec(used)
              << (perturbed ? "  [perturbed to reach a generic direction]" : "  [generic]")
              << "\n";
    std::cout << "critical points (bottom to top):\n";
    std::printf("  %14s %-7s %-16s %3s %3s %5s\n", "height", "kind", "where", "d+", "d-",
                "nlm");
    for (const auto& cp : prof.critical) {
        std::string where = cp.id;
        if (cp.kind == curvegraph::CriticalPoint::Kind::JointExtremum)
            where += "[" + std::to_string(cp.joint_index) + "]";
        std::printf("  %14s %-7s %-16s %3d %3d %5s\n", fmt(cp.height).c_str(),
                    kind_name(cp.kind), where.c_str(), cp.d_plus, cp.d_minus,
                    cp.nlm.str().c_str());
    }
    std::cout << "mu = " << prof.mu.str() << "\n";
    for (double level : levels)
        std::cout << "fiber count at level " << fmt(level) << " = "
                  << curvegraph::fiber_count(g, used, level) << "\n";
    if (want_width)
        std::cout << "width = " << curvegraph::width_in_direction(g, used) << "\n";
    return kExitOk;
}

// --- crofton -----------------------------------------------------------------

int run_crofton(const GraphSource& src, int samples, std::uint64_t seed,
                const std::string& scheme) {
    curvegraph::SpatialGraph g = src.load();
    curvegraph::Quadrature q = scheme == "fibonacci" ? curvegraph::Quadrature::Fibonacci
                                                     : curvegraph::Quadrature::MonteCarlo;
    curvegraph::QuadratureResult res = curvegraph::crofton_ntc(g, q, samples, seed);
    double direct = curvegraph::ntc_total(g);
    double diff = std::abs(res.estimate - direct);
    double tol = std::max(3.0 * res.uncertainty, 0.01 * std::abs(direct));
    std::cout << "scheme = " << scheme << ", samples = " << res.samples << ", seed = " << seed
              << ", rejected = " << res.rejected << "\n";
    std::cout << "quadrature ntc = " << fmt(res.estimate) << " +- " << fmt(res.uncertainty)
              << "\n";
    std::cout << "direct ntc     = " << with_pi(direct) << "\n";
    std::cout << "|difference| = " << fmt(diff) << "  tolerance = " << fmt(tol)
              << "  [max(3*stderr, 1%)]\n";
    if (diff <= tol) {
        std::cout << "check: AGREE\n";
        return kExitOk;
    }
    std::cout << "check: DISAGREE\n";
    return kExitNumeric;
}

// --- heatmap -----------------------------------------------------------------

int run_heatmap(const GraphSource& src, int resolution, const std::string& out_path) {
    curvegraph::SpatialGraph g = src.load();
    std::vector<curvegraph::HeatmapCell> cells = curvegraph::mu_heatmap(g, resolution);
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << "lon,lat,mu_doubled,generic\n";
    for (const auto& c : cells)
        out << fmt(c.lon) << "," << fmt(c.lat) << "," << c.mu.doubled << ","
            << (c.generic ? 1 : 0) << "\n";
    if (!out_path.empty())
        std::cout << "wrote " << cells.size() << " cells to " << out_path << "\n";
    return kExitOk;
}

// --- doublecover ---------------------------------------------------------------

int run_doublecover(const GraphSource& src, std::uint64_t seed, int circuits, bool reversing,
                    const std::string& format) {
    curvegraph::SpatialGraph g = src.load();
    curvegraph::CombinatorialGraph cg = curvegraph::combinatorial(g);
    curvegraph::DoubledGraph dg = curvegraph::doubled(cg);
    double reference = 2.0 * curvegraph::ntc_total(g);
    const bool as_json = format == "json";
    json out;
    bool all_ok = true;
    if (as_json) {
        out["name"] = g.name;
        out["edge_copies"] = 2 * cg.edges.size();
        out["nonreversing"] = !reversing;
        out["twice_ntc_total"] = reference;
        out["circuits"] = json::array();
    } else {
        std::cout << "graph: " << g.name << "  (every edge doubled, " << 2 * cg.edges.size()
                  << " edge copies)\n";
    }
    for (int k = 0; k < circuits; ++k) {
        std::uint64_t circuit_seed = seed + static_cast<std::uint64_t>(k);
        curvegraph::Circuit c = curvegraph::euler_circuit(dg, !reversing, circuit_seed);
        double cc = curvegraph::circuit_curvature(g, c);
        double rel = std::abs(cc - reference) / (1.0 + std::abs(reference));
        if (!(rel <= 1e-9)) all_ok = false;
        if (as_json) {
            json jc = {{"seed", circuit_seed},
                       {"curvature", cc},
                       {"relative_deviation", rel},
                       {"components", json::array()}};
            for (const auto& comp : c.components) {
                json names = json::array();
                for (const auto& t : comp)
                    names.push_back(cg.edges[t.edge].id + (t.forward ? "+" : "-") + "/" +
                                    std::to_string(t.copy));
                jc["components"].push_back(names);
            }
            out["circuits"].push_back(jc);
            continue;
        }
        std::cout << "circuit " << k + 1 << " (seed " << circuit_seed << "):\n";
        for (std::size_t ci = 0; ci < c.components.size(); ++ci) {
            std::cout << "  component " << ci + 1 << ":";
            for (const auto& t : c.components[ci])
                std::cout << " " << cg.edges[t.edge].id << (t.forward ? "+" : "-") << "/"
                          << t.copy;
            std::cout << "\n";
        }
        std::cout << "  circuit curvature = " << fmt(cc) << ",  2 * ntc_total = "
                  << fmt(reference) << ",  relative deviation = " << fmt(rel) << "\n";
    }
    if (as_json) {
        out["check"] = all_ok ? "AGREE" : "DISAGREE";
        std::cout << out.dump(2) << "\n";
    } else if (all_ok) {
        std::cout << "check: AGREE (every circuit curvature = 2 * ntc_total within 1e-9)\n";
    } else {
        std::cout << "check: DISAGREE (a circuit curvature differs from 2 * ntc_total)\n";
    }
    return all_ok ? kExitOk : kExitNumeric;
}

// --- minimize -----------------------------------------------------------------

json flat_result_json(const curvegraph::CombinatorialGraph& cg,
                      const curvegraph::FlatResult& fr) {
    json out;
    out["name"] = cg.name;
    out["mu_star"] = fr.mu_star.str();
    out["ntc_star"] = pi_units(fr.ntc_star_pi);
    out["ntc_star_radians"] = fr.ntc_star();
    out["bridge"] = fr.bridge.str();
    out["width_star"] = fr.width_star;
    out["searched"] = fr.searched;
    json argmin = json::array();
    auto loops = cg.loop_edge_indices();
    for (const auto& a : fr.argmin) {
        json item;
        item["order"] = json::array();
        for (int v : a.order) item["order"].push_back(cg.vertex_ids[v]);
        item["loop_up"] = json::array();
        for (std::size_t li = 0; li < a.loop_up.size(); ++li)
            item["loop_up"].push_back({{"edge", cg.edges[loops[li]].id},
                                       {"up", static_cast<bool>(a.loop_up[li])}});
        argmin.push_back(item);
    }
    out["argmin"] = argmin;
    return out;
}

int run_minimize(const GraphSource& src, bool /*combinatorial_flag*/, bool with_oracle,
                 bool with_trivalent) {
    curvegraph::CombinatorialGraph cg;
    if (!src.family.empty())
        cg = curvegraph::make_family(curvegraph::parse_family(src.family));
    else
        cg = curvegraph::combinatorial(curvegraph::load_graph_file(src.path));
    curvegraph::FlatResult fr = curvegraph::flat_min(cg);
    json out = flat_result_json(cg, fr);
    int exit_code = kExitOk;
    if (with_oracle) {
        curvegraph::OracleResult oracle = curvegraph::flat_min_oracle(cg);
        out["oracle"] = {{"mu_star", oracle.mu_star.str()},
                         {"extrema_min", oracle.extrema_min},
                         {"searched", oracle.searched}};
        bool match = oracle.mu_star == fr.mu_star &&
                     oracle.extrema_min == fr.bridge.doubled;
        out["oracle"]["match"] = match;
        if (!match) exit_code = kExitNumeric;
    }
    if (with_trivalent) {
        curvegraph::TrivalentCheck tc = curvegraph::trivalent_formula_check(cg);
        out["trivalent_formula"] = {{"hypothesis_ok", tc.hypothesis_ok},
                                    {"violation", tc.violation},
                                    {"odd_vertices", tc.odd_vertices},
                                    {"lhs", pi_units(tc.lhs_pi)},
                                    {"rhs", pi_units(tc.rhs_pi)},
                                    {"equal", tc.equal}};
    }
    std::cout << out.dump(2) << "\n";
    return exit_code;
}

// --- catalog ------------------------------------------------------------------

int run_catalog(bool verify) {
    auto rows = curvegraph::catalog_rows();
    std::printf("%-14s %-8s %-8s %s\n", "family", "params", "ntc*", "formula");
    bool all_ok = true;
    for (const auto& row : rows) {
        std::string value = pi_units(row.ntc_pi);
        std::string note;
        if (verify) {
            curvegraph::FamilySpec spec = curvegraph::parse_family(
                row.params.empty() ? row.family : row.family + ":" + row.params);
            curvegraph::FlatResult fr = curvegraph::flat_min(curvegraph::make_family(spec));
            bool ok = fr.ntc_star_pi == row.ntc_pi;
            note = ok ? "  [verified]" : "  [MISMATCH: flat_min gives " +
                                             pi_units(fr.ntc_star_pi) + "]";
            if (!ok) all_ok = false;
        }
        std::printf("%-14s %-8s %-8s %s%s\n", row.family.c_str(), row.params.c_str(),
                    value.c_str(), row.formula.c_str(), note.c_str());
    }
    return all_ok ? kExitOk : kExitNumeric;
}

// --- gen ----------------------------------------------------------------------

json combinatorial_json(const curvegraph::CombinatorialGraph& cg) {
    json out;
    out["name"] = cg.name;
    out["vertices"] = cg.vertex_ids;
    out["edges"] = json::array();
    for (const auto& e : cg.edges)
        out["edges"].push_back(
            {{"id", e.id}, {"ends", {cg.vertex_ids[e.u], cg.vertex_ids[e.v]}}});
    return out;
}

int run_gen(const std::string& family, int random_trivalent, const std::string& random_graph,
            std::uint64_t seed, bool embed, const std::string& out_path) {
    int sources = (!family.empty() ? 1 : 0) + (random_trivalent > 0 ? 1 : 0) +
                  (!random_graph.empty() ? 1 : 0);
    if (sources != 1)
        throw curvegraph::GraphError(
            curvegraph::GraphError::Code::BadArgument,
            "give exactly one of --family, --random-trivalent, --random-graph");
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    if (!family.empty()) {
        curvegraph::FamilySpec spec = curvegraph::parse_family(family);
        if (embed) {
            out << curvegraph::save_graph(curvegraph::embed_family(spec));
        } else {
            out << combinatorial_json(curvegraph::make_family(spec)).dump(2) << "\n";
        }
    } else {
        curvegraph::CombinatorialGraph cg;
        if (random_trivalent > 0) {
            cg = curvegraph::random_trivalent(random_trivalent, seed);
        } else {
            int v = 0, e = 0;
            char comma;
            std::istringstream in(random_graph);
            if (!(in >> v >> comma >> e) || comma != ',')
                throw curvegraph::GraphError(curvegraph::GraphError::Code::BadArgument,
                                             "--random-graph wants 'vertices,edges'");
            cg = curvegraph::random_multigraph(v, e, seed);
        }
        if (embed)
            out << curvegraph::save_graph(curvegraph::random_embedding(cg, seed));
        else
            out << combinatorial_json(cg).dump(2) << "\n";
    }
    if (!out_path.empty()) std::cout << "wrote " << out_path << "\n";
    return kExitOk;
}

// --- repro --------------------------------------------------------------------

int run_repro_cmd(std::vector<std::string> ids, bool list_only) {
    if (list_only) {
        for (const auto& id : curvegraph::repro_ids()) std::cout << id << "\n";
        return kExitOk;
    }
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = curvegraph::repro_ids();
    int failed = 0;
    for (const auto& id : ids) {
        curvegraph::ReproReport rep = curvegraph::run_repro(id);
        std::cout << "== " << rep.id << ": " << rep.title << " ==\n";
        for (const auto& c : rep.checks) {
            std::printf("  %-4s %-48s expected=%-14s computed=%-14s tol=%s%s%s\n",
                        c.pass ? "PASS" : "FAIL", c.name.c_str(), fmt(c.expected).c_str(),
                        fmt(c.computed).c_str(), fmt(c.tolerance).c_str(),
                        c.note.empty() ? "" : "  ", c.note.c_str());
        }
        std::printf("result: %s (%s, %.2fs)\n\n", rep.pass ? "PASS" : "FAIL", rep.id.c_str(),
                    rep.seconds);
        if (!rep.pass) ++failed;
    }
    std::cout << "summary: " << ids.size() - failed << "/" << ids.size()
              << " experiments passed\n";
    return failed == 0 ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"net total curvature of piecewise-linear spatial graphs"};
    app.require_subcommand(1);

    // ntc
    GraphSource ntc_src;
    std::string ntc_format = "text";
    std::string ntc_functional = "all";
    bool ntc_breakdown = false;
    auto* ntc_cmd = app.add_subcommand("ntc", "net total curvature report for a graph");
    ntc_src.attach(ntc_cmd, false);
    ntc_cmd->add_option("--format", ntc_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    ntc_cmd->add_option("--functional", ntc_functional, "which totals to report")
        ->check(CLI::IsMember({"ntc", "tc", "ctc", "all"}));
    ntc_cmd->add_flag("--breakdown", ntc_breakdown, "include the per-vertex table");

    // vertex
    GraphSource vertex_src;
    std::string vertex_id, tangents_text;
    std::string vertex_format = "json";
    int vertex_mc = 0;
    std::uint64_t vertex_seed = 1;
    auto* vertex_cmd =
        app.add_subcommand("vertex", "curvature quantities of a single vertex star");
    vertex_src.attach(vertex_cmd, false);
    vertex_cmd->add_option("--id", vertex_id, "vertex id inside the graph file");
    vertex_cmd->add_option("--tangents", tangents_text,
                           "explicit outgoing unit tangents 'x,y,z;x,y,z;...'");
    vertex_cmd->add_option("--mc-samples,--mc", vertex_mc,
                           "Monte Carlo sample count (0 = skip)");
    vertex_cmd->add_option("--seed", vertex_seed, "Monte Carlo seed");
    vertex_cmd->add_option("--format", vertex_format, "json or text")
        ->check(CLI::IsMember({"text", "json"}));

    // mu
    GraphSource mu_src;
    std::string mu_direction = "0,0,1";
    std::string mu_levels_text;
    std::string mu_format = "json";
    double mu_level = 0;
    bool mu_width = false;
    auto* mu_cmd = app.add_subcommand("mu", "projection multiplicity in one direction");
    mu_src.attach(mu_cmd, false);
    mu_cmd->add_option("--dir,--direction", mu_direction, "projection direction 'x,y,z'");
    mu_cmd->add_option("--levels", mu_levels_text,
                       "comma-separated heights whose fibers to count");
    auto* level_opt = mu_cmd->add_option("--level", mu_level, "one more fiber height");
    mu_cmd->add_flag("--width", mu_width, "also report the width in this direction");
    mu_cmd->add_option("--format", mu_format, "json or text")
        ->check(CLI::IsMember({"text", "json"}));

    // crofton
    GraphSource crofton_src;
    int crofton_samples = 200000;
    std::uint64_t crofton_seed = 1;
    std::string crofton_scheme = "mc";
    auto* crofton_cmd =
        app.add_subcommand("crofton", "sphere quadrature of mu, checked against ntc_total");
    crofton_src.attach(crofton_cmd, false);
    crofton_cmd->add_option("--samples", crofton_samples, "direction count");
    crofton_cmd->add_option("--seed", crofton_seed, "quadrature seed");
    crofton_cmd->add_option("--scheme", crofton_scheme, "mc or fibonacci")
        ->check(CLI::IsMember({"mc", "fibonacci"}));

    // heatmap
    GraphSource heatmap_src;
    int heatmap_resolution = 64;
    std::string heatmap_out;
    auto* heatmap_cmd =
        app.add_subcommand("heatmap", "mu over the direction sphere as CSV (lon/lat grid)");
    heatmap_src.attach(heatmap_cmd, false);
    heatmap_cmd->add_option("--resolution", heatmap_resolution, "latitude rows (>= 8)");
    heatmap_cmd->add_option("--out", heatmap_out, "output CSV path (default stdout)");

    // doublecover
    GraphSource dc_src;
    std::uint64_t dc_seed = 1;
    int dc_circuits = 1;
    bool dc_reversing = false, dc_nonreversing = false;
    std::string dc_format = "json";
    auto* dc_cmd = app.add_subcommand(
        "doublecover", "random transition circuits through every doubled edge");
    dc_src.attach(dc_cmd, false);
    dc_cmd->add_option("--seed", dc_seed, "circuit seed");
    dc_cmd->add_option("--circuits", dc_circuits, "how many independent circuits");
    auto* rev_flag =
        dc_cmd->add_flag("--reversing", dc_reversing,
                         "allow immediate turn-backs (default builds non-reversing circuits)");
    dc_cmd->add_flag("--nonreversing", dc_nonreversing, "forbid immediate turn-backs (default)")
        ->excludes(rev_flag);
    dc_cmd->add_option("--format", dc_format, "json or text")
        ->check(CLI::IsMember({"text", "json"}));

    // minimize
    GraphSource min_src;
    bool min_combinatorial = false, min_oracle = false, min_trivalent = false;
    auto* min_cmd = app.add_subcommand(
        "minimize", "brute-force flat minimum of mu over vertex orders and loop choices");
    min_src.attach(min_cmd, false);
    min_cmd->add_flag("--combinatorial", min_combinatorial,
                      "treat the input file combinatorially (positions ignored; implied)");
    min_cmd->add_flag("--oracle", min_oracle,
                      "cross-check against the independent enumeration (<= 6 vertices)");
    min_cmd->add_flag("--trivalent", min_trivalent,
                      "evaluate the bridge-number formula for near-trivalent graphs");

    // catalog
    bool catalog_verify = false;
    auto* catalog_cmd =
        app.add_subcommand("catalog", "closed-form flat minima of the built-in families");
    catalog_cmd->add_flag("--verify", catalog_verify,
                          "recompute every row with flat_min and compare");

    // gen
    std::string gen_family, gen_random_graph, gen_out;
    int gen_random_trivalent = 0;
    std::uint64_t gen_seed = 1;
    bool gen_embed = false;
    auto* gen_cmd = app.add_subcommand("gen", "emit built-in or random graphs as JSON");
    gen_cmd->add_option("--family", gen_family, "family spec, e.g. ring:3");
    gen_cmd->add_option("--random-trivalent", gen_random_trivalent,
                        "random cubic graph on this many vertices");
    gen_cmd->add_option("--random-graph", gen_random_graph,
                        "random multigraph 'vertices,edges' with min degree 2");
    gen_cmd->add_option("--seed", gen_seed, "generator seed");
    gen_cmd->add_flag("--embed", gen_embed, "emit an embedded spatial graph");
    gen_cmd->add_option("--out", gen_out, "output path (default stdout)");

    // repro
    std::vector<std::string> repro_ids_arg;
    bool repro_list = false;
    auto* repro_cmd =
        app.add_subcommand("repro", "run the bundled reproduction experiments");
    repro_cmd->add_option("ids", repro_ids_arg, "experiment ids (default: all)");
    repro_cmd->add_flag("--list", repro_list, "list experiment ids and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (ntc_cmd->parsed())
            return run_ntc(ntc_src, ntc_format, ntc_functional, ntc_breakdown);
        if (vertex_cmd->parsed())
            return run_vertex(vertex_src, vertex_id, tangents_text, vertex_mc, vertex_seed,
                              vertex_format);
        if (mu_cmd->parsed()) {
            std::vector<double> levels;
            if (!mu_levels_text.empty()) {
                std::stringstream in(mu_levels_text);
                std::string part;
                while (std::getline(in, part, ','))
                    if (!part.empty()) levels.push_back(std::stod(part));
            }
            if (level_opt->count()) levels.push_back(mu_level);
            return run_mu(mu_src, mu_direction, levels, mu_width, mu_format);
        }
        if (crofton_cmd->parsed())
            return run_crofton(crofton_src, crofton_samples, crofton_seed, crofton_scheme);
        if (heatmap_cmd->parsed())
            return run_heatmap(heatmap_src, heatmap_resolution, heatmap_out);
        if (dc_cmd->parsed())
            return run_doublecover(dc_src, dc_seed, dc_circuits, dc_reversing, dc_format);
        if (min_cmd->parsed())
            return run_minimize(min_src, min_combinatorial, min_oracle, min_trivalent);
        if (catalog_cmd->parsed()) return run_catalog(catalog_verify);
        if (gen_cmd->parsed())
            return run_gen(gen_family, gen_random_trivalent, gen_random_graph, gen_seed,
                           gen_embed, gen_out);
        if (repro_cmd->parsed()) return run_repro_cmd(repro_ids_arg, repro_list);
    } catch (const curvegraph::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
