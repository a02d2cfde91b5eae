#include "curvegraph/minimizer.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <numeric>
#include <set>

#include "curvegraph/geometry.hpp"
#include "curvegraph/threads.hpp"

namespace curvegraph {

namespace {

// Index-only view of the multigraph, loops separated from proper edges.
struct Compact {
    int n = 0;
    std::vector<std::pair<int, int>> links;  // non-loop edges
    std::vector<int> loop_at;                // loop -> host vertex
};

Compact compact_of(const CombinatorialGraph& cg) {
    Compact c;
    c.n = static_cast<int>(cg.vertex_ids.size());
    for (const auto& e : cg.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= c.n || e.v >= c.n)
            throw GraphError(GraphError::Code::BadArgument, "edge endpoint out of range");
        if (e.is_loop())
            c.loop_at.push_back(e.u);
        else
            c.links.emplace_back(e.u, e.v);
    }
    return c;
}

struct Scratch {
    std::vector<int> rank, dplus, dminus, upc, dnc, diff;

    explicit Scratch(int n)
        : rank(n), dplus(n), dminus(n), upc(n), dnc(n), diff(n + 1) {}
};

AssignmentScore score_assignment(const Compact& c, const std::vector<int>& order,
                                 unsigned long mask, Scratch& s) {
    const int n = c.n;
    for (int r = 0; r < n; ++r) s.rank[order[r]] = r;
    std::fill(s.dplus.begin(), s.dplus.end(), 0);
    std::fill(s.dminus.begin(), s.dminus.end(), 0);
    std::fill(s.upc.begin(), s.upc.end(), 0);
    std::fill(s.dnc.begin(), s.dnc.end(), 0);
    std::fill(s.diff.begin(), s.diff.end(), 0);

    for (const auto& [u, v] : c.links) {
        int ru = s.rank[u], rv = s.rank[v];
        if (ru < rv) {
            ++s.dplus[u];
            ++s.dminus[v];
            ++s.diff[ru];
            --s.diff[rv];
        } else {
            ++s.dplus[v];
            ++s.dminus[u];
            ++s.diff[rv];
            --s.diff[ru];
        }
    }
    int up_loops = 0;
    for (std::size_t i = 0; i < c.loop_at.size(); ++i) {
        int w = c.loop_at[i];
        if ((mask >> i) & 1UL) {
            s.dplus[w] += 2;
            ++s.upc[w];
            ++up_loops;
        } else {
            s.dminus[w] += 2;
            ++s.dnc[w];
        }
    }

    AssignmentScore out;
    std::int64_t mu_doubled = 2 * up_loops;  // one interior maximum per up loop
    int extrema = static_cast<int>(c.loop_at.size());
    for (int v = 0; v < n; ++v) {
        int d = s.dminus[v] - s.dplus[v];
        if (d > 0) mu_doubled += d;
        if (s.dplus[v] == 0) ++extrema;
        if (s.dminus[v] == 0) ++extrema;
    }
    out.mu = HalfInt::from_doubled(mu_doubled);
    out.extrema = extrema;

    // Max fiber cardinality: per inter-rank gap, the proper-edge crossings
    // plus the bump from loop extrema hugging either end of the gap; plus the
    // slabs below the lowest and above the highest vertex, seen only by loops.
    int width = std::max(2 * s.dnc[order[0]], 2 * s.upc[order[n - 1]]);
    int cross = 0;
    for (int g = 0; g + 1 < n; ++g) {
        cross += s.diff[g];
        int bump = std::max(2 * s.upc[order[g]], 2 * s.dnc[order[g + 1]]);
        width = std::max(width, cross + bump);
    }
    out.width = width;
    return out;
}

void check_assignment(const Compact& c, const HeightAssignment& a) {
    if (static_cast<int>(a.order.size()) != c.n)
        throw GraphError(GraphError::Code::BadArgument, "order size does not match vertex count");
    std::vector<char> seen(c.n, 0);
    for (int v : a.order) {
        if (v < 0 || v >= c.n || seen[v])
            throw GraphError(GraphError::Code::BadArgument, "order is not a permutation");
        seen[v] = 1;
    }
    if (a.loop_up.size() != c.loop_at.size())
        throw GraphError(GraphError::Code::BadArgument, "loop choice count mismatch");
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace

AssignmentScore mu_of_assignment(const CombinatorialGraph& cg, const HeightAssignment& a) {
    Compact c = compact_of(cg);
    if (c.n == 0) throw GraphError(GraphError::Code::BadArgument, "empty graph");
    check_assignment(c, a);
    unsigned long mask = 0;
    for (std::size_t i = 0; i < a.loop_up.size(); ++i)
        if (a.loop_up[i]) mask |= 1UL << i;
    Scratch s(c.n);
    return score_assignment(c, a.order, mask, s);
}

double FlatResult::ntc_star() const { return ntc_star_pi.value() * kPi; }

FlatResult flat_min(const CombinatorialGraph& cg) {
    Compact c = compact_of(cg);
    const int n = c.n;
    if (n == 0) throw GraphError(GraphError::Code::BadArgument, "empty graph");
    if (n > kFlatVertexBudget)
        throw GraphError(GraphError::Code::BudgetExceeded, "more than 10 topological vertices");
    const std::size_t n_loops = c.loop_at.size();
    if (n_loops > 24)
        throw GraphError(GraphError::Code::BudgetExceeded, "too many loop edges");
    const std::uint64_t masks = 1ULL << n_loops;
    const std::uint64_t total = factorial(n) * masks;
    if (total > 200'000'000ULL)
        throw GraphError(GraphError::Code::BudgetExceeded, "search space too large");

    struct Block {
        std::int64_t best_mu = std::numeric_limits<std::int64_t>::max();
        int best_ext = std::numeric_limits<int>::max();
        int best_width = std::numeric_limits<int>::max();
        std::vector<HeightAssignment> argmin;
        std::exception_ptr error;
    };
    std::vector<Block> blocks(n);

    parallel_blocks(static_cast<std::size_t>(n), [&](std::size_t b) {
        Block& blk = blocks[b];
        try {
            Scratch s(n);
            std::vector<int> order(n);
            order[0] = static_cast<int>(b);
            int k = 1;
            for (int v = 0; v < n; ++v)
                if (v != static_cast<int>(b)) order[k++] = v;
            do {
                for (std::uint64_t mask = 0; mask < masks; ++mask) {
                    AssignmentScore sc = score_assignment(c, order, mask, s);
                    blk.best_ext = std::min(blk.best_ext, sc.extrema);
                    blk.best_width = std::min(blk.best_width, sc.width);
                    if (sc.mu.doubled < blk.best_mu) {
                        blk.best_mu = sc.mu.doubled;
                        blk.argmin.clear();
                    }
                    if (sc.mu.doubled == blk.best_mu &&
                        blk.argmin.size() < static_cast<std::size_t>(kArgminCap)) {
                        HeightAssignment a;
                        a.order = order;
                        a.loop_up.resize(n_loops);
                        for (std::size_t i = 0; i < n_loops; ++i)
                            a.loop_up[i] = (mask >> i) & 1;
                        blk.argmin.push_back(std::move(a));
                    }
                }
            } while (std::next_permutation(order.begin() + 1, order.end()));
        } catch (...) {
            blk.error = std::current_exception();
        }
    });

    FlatResult r;
    std::int64_t best_mu = std::numeric_limits<std::int64_t>::max();
    int best_ext = std::numeric_limits<int>::max();
    int best_width = std::numeric_limits<int>::max();
    for (const Block& blk : blocks) {
        if (blk.error) std::rethrow_exception(blk.error);
        best_mu = std::min(best_mu, blk.best_mu);
        best_ext = std::min(best_ext, blk.best_ext);
        best_width = std::min(best_width, blk.best_width);
    }
    for (const Block& blk : blocks) {
        if (blk.best_mu != best_mu) continue;
        for (const auto& a : blk.argmin) {
            if (r.argmin.size() >= static_cast<std::size_t>(kArgminCap)) break;
            r.argmin.push_back(a);
        }
    }
    r.mu_star = HalfInt::from_doubled(best_mu);
    r.ntc_star_pi = HalfInt::from_doubled(2 * best_mu);
    r.bridge = HalfInt::from_doubled(best_ext);
    r.width_star = best_width;
    r.searched = total;
    return r;
}

HalfInt bridge_number(const CombinatorialGraph& cg) { return flat_min(cg).bridge; }

TrivalentCheck trivalent_formula_check(const CombinatorialGraph& cg) {
    TrivalentCheck out;
    const int n = static_cast<int>(cg.vertex_ids.size());
    std::vector<int> deg(n, 0);
    for (const auto& e : cg.edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    std::vector<int> irregular;
    for (int v = 0; v < n; ++v) {
        if (deg[v] % 2 == 1) ++out.odd_vertices;
        if (deg[v] != 3) irregular.push_back(v);
    }
    if (irregular.size() > 1) {
        out.hypothesis_ok = false;
        out.violation = "more than one vertex of degree other than 3 (" +
                        cg.vertex_ids[irregular[0]] + ", " + cg.vertex_ids[irregular[1]] + ", ...)";
    } else if (irregular.size() == 1) {
        const int w = irregular[0];
        std::vector<int> neighbors;
        for (const auto& e : cg.edges) {
            if (e.is_loop() && e.u == w) {
                out.hypothesis_ok = false;
                out.violation = "loop at the irregular vertex " + cg.vertex_ids[w];
                break;
            }
            if (e.u == w) neighbors.push_back(e.v);
            if (e.v == w) neighbors.push_back(e.u);
        }
        if (out.hypothesis_ok) {
            std::set<int> distinct(neighbors.begin(), neighbors.end());
            if (distinct.size() != neighbors.size()) {
                out.hypothesis_ok = false;
                out.violation =
                    "parallel edges at the irregular vertex " + cg.vertex_ids[w];
            } else {
                for (int nb : neighbors) {
                    if (deg[nb] != 3) {
                        out.hypothesis_ok = false;
                        out.violation = "neighbor " + cg.vertex_ids[nb] +
                                        " of the irregular vertex is not trivalent";
                        break;
                    }
                }
            }
        }
    }

    FlatResult fr = flat_min(cg);
    out.lhs_pi = fr.ntc_star_pi;
    out.rhs_pi = HalfInt::from_doubled(2 * fr.bridge.doubled + out.odd_vertices);
    out.equal = out.lhs_pi == out.rhs_pi;
    return out;
}

namespace {

// Splits edge `ei` with a fresh degree-2 vertex; returns its index.
int subdivide_edge(CombinatorialGraph& cg, int ei) {
    if (ei < 0 || ei >= static_cast<int>(cg.edges.size()))
        throw GraphError(GraphError::Code::BadArgument, "edge index out of range");
    std::string pid = "p";
    while (cg.index_of(pid) >= 0) pid += "'";
    cg.vertex_ids.push_back(pid);
    const int p = static_cast<int>(cg.vertex_ids.size()) - 1;
    CombinatorialGraph::Edge second;
    second.id = cg.edges[ei].id + ".b";
    second.u = p;
    second.v = cg.edges[ei].v;
    cg.edges[ei].id += ".a";
    cg.edges[ei].v = p;
    cg.edges.push_back(second);
    return p;
}

}  // namespace

UnionCheck one_point_union_check(const CombinatorialGraph& a, int edge_a,
                                 const CombinatorialGraph& b, int edge_b) {
    CombinatorialGraph ua = a;
    const int pa = subdivide_edge(ua, edge_a);
    CombinatorialGraph ub = b;
    const int pb = subdivide_edge(ub, edge_b);

    CombinatorialGraph joined = ua;
    joined.name = a.name + "+" + b.name;
    std::vector<int> remap(ub.vertex_ids.size());
    for (std::size_t i = 0; i < ub.vertex_ids.size(); ++i) {
        if (static_cast<int>(i) == pb) {
            remap[i] = pa;
            continue;
        }
        std::string id = ub.vertex_ids[i];
        while (joined.index_of(id) >= 0) id = "b." + id;
        joined.vertex_ids.push_back(id);
        remap[i] = static_cast<int>(joined.vertex_ids.size()) - 1;
    }
    for (const auto& e : ub.edges) {
        CombinatorialGraph::Edge ne = e;
        ne.u = remap[e.u];
        ne.v = remap[e.v];
        bool clash = true;
        while (clash) {
            clash = false;
            for (const auto& je : joined.edges)
                if (je.id == ne.id) {
                    ne.id = "b." + ne.id;
                    clash = true;
                    break;
                }
        }
        joined.edges.push_back(ne);
    }

    UnionCheck out;
    out.f1_pi = flat_min(a).ntc_star_pi;
    out.f2_pi = flat_min(b).ntc_star_pi;
    out.union_pi = flat_min(joined).ntc_star_pi;
    out.lower_pi = HalfInt::from_doubled(out.f1_pi.doubled + out.f2_pi.doubled - 4);
    out.upper_pi = out.f1_pi + out.f2_pi;
    out.within = out.lower_pi <= out.union_pi && out.union_pi <= out.upper_pi;
    out.floor_attained = out.union_pi == out.lower_pi;
    return out;
}

OracleResult flat_min_oracle(const CombinatorialGraph& cg) {
    Compact c = compact_of(cg);
    const int n = c.n;
    if (n == 0) throw GraphError(GraphError::Code::BadArgument, "empty graph");
    if (n > 6)
        throw GraphError(GraphError::Code::BudgetExceeded, "oracle handles at most 6 vertices");
    const std::size_t n_loops = c.loop_at.size();
    if (n_loops > 8)
        throw GraphError(GraphError::Code::BudgetExceeded, "oracle handles at most 8 loops");

    // Interior shapes a loop can take: both ends up or down with one or three
    // extrema, or split ends with one maximum and one minimum.
    struct LoopShape {
        int dplus, dminus, mu_add, ext_add;
    };
    constexpr LoopShape kShapes[5] = {
        {2, 0, 1, 1},  // up, single maximum
        {0, 2, 0, 1},  // down, single minimum
        {2, 0, 2, 3},  // up, two maxima one minimum
        {0, 2, 1, 3},  // down, one maximum two minima
        {1, 1, 1, 2},  // split ends, one of each
    };

    OracleResult out;
    out.mu_star = HalfInt::from_doubled(std::numeric_limits<std::int64_t>::max());
    out.extrema_min = std::numeric_limits<int>::max();

    std::vector<int> h(n);
    std::vector<int> dplus(n), dminus(n);
    std::vector<int> shape(n_loops);
    for (int m = 1; m <= n; ++m) {
        const std::uint64_t total = [&] {
            std::uint64_t t = 1;
            for (int i = 0; i < n; ++i) t *= static_cast<std::uint64_t>(m);
            return t;
        }();
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t rem = code;
            unsigned used = 0;
            for (int i = 0; i < n; ++i) {
                h[i] = static_cast<int>(rem % m);
                rem /= m;
                used |= 1u << h[i];
            }
            if (used != (1u << m) - 1) continue;  // not surjective onto 0..m-1
            bool tied_link = false;
            for (const auto& [u, v] : c.links)
                if (h[u] == h[v]) {
                    tied_link = true;
                    break;
                }
            if (tied_link) continue;

            std::fill(dplus.begin(), dplus.end(), 0);
            std::fill(dminus.begin(), dminus.end(), 0);
            for (const auto& [u, v] : c.links) {
                if (h[u] < h[v]) {
                    ++dplus[u];
                    ++dminus[v];
                } else {
                    ++dplus[v];
                    ++dminus[u];
                }
            }

            std::fill(shape.begin(), shape.end(), 0);
            for (;;) {
                std::int64_t mu_doubled = 0;
                int extrema = 0;
                ++out.searched;
                // Evaluate with the loop shapes layered on the link degrees.
                for (std::size_t i = 0; i < n_loops; ++i) {
                    const LoopShape& ls = kShapes[shape[i]];
                    dplus[c.loop_at[i]] += ls.dplus;
                    dminus[c.loop_at[i]] += ls.dminus;
                    mu_doubled += 2 * ls.mu_add;
                    extrema += ls.ext_add;
                }
                for (int v = 0; v < n; ++v) {
                    int d = dminus[v] - dplus[v];
                    if (d > 0) mu_doubled += d;
                    if (dplus[v] == 0) ++extrema;
                    if (dminus[v] == 0) ++extrema;
                }
                for (std::size_t i = 0; i < n_loops; ++i) {
                    const LoopShape& ls = kShapes[shape[i]];
                    dplus[c.loop_at[i]] -= ls.dplus;
                    dminus[c.loop_at[i]] -= ls.dminus;
                }
                if (mu_doubled < out.mu_star.doubled)
                    out.mu_star = HalfInt::from_doubled(mu_doubled);
                out.extrema_min = std::min(out.extrema_min, extrema);

                std::size_t pos = 0;
                while (pos < n_loops && shape[pos] == 4) {
                    shape[pos] = 0;
                    ++pos;
                }
                if (pos == n_loops) break;
                ++shape[pos];
            }
        }
    }
    return out;
}

}  // namespace curvegraph
