#include "curvegraph/families.hpp"

#include <cmath>
#include <sstream>

#include "curvegraph/geometry.hpp"
#include "curvegraph/rng.hpp"

namespace curvegraph {

namespace {

[[noreturn]] void bad(const std::string& msg) {
    throw GraphError(GraphError::Code::BadArgument, msg);
}

int parse_int(const std::string& s, int lo, int hi, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        bad("expected an integer for " + what + ", got '" + s + "'");
    }
    if (used != s.size()) bad("expected an integer for " + what + ", got '" + s + "'");
    if (v < lo || v > hi)
        bad(what + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
}

double parse_double(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        bad("expected a number for " + what + ", got '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v))
        bad("expected a number for " + what + ", got '" + s + "'");
    return v;
}

void cg_vertex(CombinatorialGraph& cg, const std::string& id) { cg.vertex_ids.push_back(id); }

void cg_edge(CombinatorialGraph& cg, const std::string& id, int u, int v) {
    CombinatorialGraph::Edge e;
    e.id = id;
    e.u = u;
    e.v = v;
    cg.edges.push_back(e);
}

void sg_edge(SpatialGraph& g, const std::string& id, const std::string& u, const std::string& v,
             std::vector<Point3> polyline = {}) {
    SpatialGraph::Edge e;
    e.id = id;
    e.u = u;
    e.v = v;
    e.polyline = std::move(polyline);
    g.edges.push_back(std::move(e));
}

std::string num(int v) { return std::to_string(v); }

// Interior samples of the circle arc c + r*(cos t * e1 + sin t * e2),
// t running from t0 to t1 (exclusive at both ends).
std::vector<Point3> arc_joints(const Point3& c, double r, const Vec3& e1, const Vec3& e2,
                               double t0, double t1, int samples) {
    std::vector<Point3> pts;
    pts.reserve(samples);
    for (int k = 1; k <= samples; ++k) {
        double t = t0 + (t1 - t0) * static_cast<double>(k) / (samples + 1);
        pts.push_back(c + (e1 * std::cos(t) + e2 * std::sin(t)) * r);
    }
    return pts;
}

constexpr double kDefaultButterflyAlpha = 0.46364760900080609;  // arctan(1/2)
constexpr double kDefaultSinewaveEps = 0.25;

}  // namespace

FamilySpec parse_family(const std::string& text) {
    FamilySpec s;
    const auto colon = text.find(':');
    s.family = text.substr(0, colon);
    std::vector<std::string> params;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) params.push_back(item);
        if (rest.empty() || rest.back() == ',') bad("trailing comma in '" + text + "'");
    }
    auto want = [&](std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi)
            bad("wrong parameter count for family '" + s.family + "'");
    };
    if (s.family == "complete") {
        want(1, 1);
        s.m = parse_int(params[0], 2, 12, "complete order");
    } else if (s.family == "bipartite") {
        want(2, 2);
        s.m = parse_int(params[0], 1, 8, "bipartite side size");
        s.n = parse_int(params[1], 1, 8, "bipartite side size");
    } else if (s.family == "theta") {
        want(1, 1);
        s.m = parse_int(params[0], 2, 12, "theta edge count");
    } else if (s.family == "wheel") {
        want(1, 1);
        s.m = parse_int(params[0], 3, 12, "wheel rim size");
    } else if (s.family == "ladder") {
        want(1, 1);
        s.m = parse_int(params[0], 3, 12, "ladder rung count");
    } else if (s.family == "ring") {
        want(1, 1);
        s.m = parse_int(params[0], 2, 6, "ring circle count");
    } else if (s.family == "sinewave") {
        want(1, 2);
        s.m = parse_int(params[0], 3, 12, "sinewave frequency");
        s.eps = params.size() > 1 ? parse_double(params[1], "sinewave amplitude")
                                  : kDefaultSinewaveEps;
        if (!(s.eps > 0.0) || !(s.eps < 0.9)) bad("sinewave amplitude must be in (0, 0.9)");
    } else if (s.family == "butterfly") {
        want(0, 1);
        s.alpha = params.empty() ? kDefaultButterflyAlpha
                                 : parse_double(params[0], "butterfly angle");
        if (!(s.alpha > 0.0) || !(s.alpha < kPi / 2)) bad("butterfly angle must be in (0, pi/2)");
    } else if (s.family == "triple_circles" || s.family == "triple_theta") {
        want(0, 0);
    } else {
        bad("unknown family '" + s.family + "'");
    }
    return s;
}

std::string family_text(const FamilySpec& s) {
    std::ostringstream out;
    out << s.family;
    if (s.family == "bipartite") out << ":" << s.m << "," << s.n;
    else if (s.family == "sinewave") out << ":" << s.m << "," << s.eps;
    else if (s.family == "butterfly") out << ":" << s.alpha;
    else if (s.m > 0) out << ":" << s.m;
    return out.str();
}

CombinatorialGraph make_family(const FamilySpec& s) {
    CombinatorialGraph cg;
    cg.name = family_text(s);
    if (s.family == "complete") {
        for (int i = 0; i < s.m; ++i) cg_vertex(cg, "v" + num(i));
        for (int i = 0; i < s.m; ++i)
            for (int j = i + 1; j < s.m; ++j) cg_edge(cg, "e" + num(i) + "-" + num(j), i, j);
    } else if (s.family == "bipartite") {
        for (int i = 0; i < s.m; ++i) cg_vertex(cg, "a" + num(i));
        for (int j = 0; j < s.n; ++j) cg_vertex(cg, "b" + num(j));
        for (int i = 0; i < s.m; ++i)
            for (int j = 0; j < s.n; ++j) cg_edge(cg, "e" + num(i) + "-" + num(j), i, s.m + j);
    } else if (s.family == "theta") {
        cg_vertex(cg, "u");
        cg_vertex(cg, "v");
        for (int k = 0; k < s.m; ++k) cg_edge(cg, "e" + num(k), 0, 1);
    } else if (s.family == "wheel") {
        cg_vertex(cg, "h");
        for (int i = 0; i < s.m; ++i) cg_vertex(cg, "r" + num(i));
        for (int i = 0; i < s.m; ++i) {
            cg_edge(cg, "c" + num(i), 1 + i, 1 + (i + 1) % s.m);
            cg_edge(cg, "s" + num(i), 0, 1 + i);
        }
    } else if (s.family == "ladder") {
        for (int i = 0; i < s.m; ++i) cg_vertex(cg, "a" + num(i));
        for (int i = 0; i < s.m; ++i) cg_vertex(cg, "b" + num(i));
        for (int i = 0; i < s.m; ++i) {
            cg_edge(cg, "ca" + num(i), i, (i + 1) % s.m);
            cg_edge(cg, "cb" + num(i), s.m + i, s.m + (i + 1) % s.m);
            cg_edge(cg, "r" + num(i), i, s.m + i);
        }
    } else if (s.family == "ring") {
        for (int i = 0; i < 2 * s.m; ++i) cg_vertex(cg, "v" + num(i));
        for (int i = 0; i < s.m; ++i) {
            for (int j = 0; j < 3; ++j)
                cg_edge(cg, "t" + num(i) + "-" + num(j), 2 * i, 2 * i + 1);
            cg_edge(cg, "s" + num(i), 2 * i + 1, (2 * i + 2) % (2 * s.m));
        }
    } else if (s.family == "sinewave") {
        for (int k = 0; k < 2 * s.m; ++k) cg_vertex(cg, "w" + num(k));
        for (int k = 0; k < 2 * s.m; ++k)
            for (int j = 0; j < 2; ++j)
                cg_edge(cg, "d" + num(k) + "-" + num(j), k, (k + 1) % (2 * s.m));
    } else if (s.family == "butterfly") {
        const char* ids[6] = {"q0p", "q0m", "q1p", "q1m", "q2p", "q2m"};
        for (const char* id : ids) cg_vertex(cg, id);
        cg_edge(cg, "r1", 0, 2);  // q0p - q1p
        cg_edge(cg, "r2", 2, 3);  // q1p - q1m
        cg_edge(cg, "r3", 3, 1);  // q1m - q0m
        cg_edge(cg, "l1", 0, 4);  // q0p - q2p
        cg_edge(cg, "l2", 4, 5);  // q2p - q2m
        cg_edge(cg, "l3", 5, 1);  // q2m - q0m
        cg_edge(cg, "L0", 0, 1);  // q0p - q0m
    } else if (s.family == "triple_circles") {
        cg_vertex(cg, "p0");
        for (int i = 1; i <= 3; ++i) {
            cg_vertex(cg, "p" + num(i));
            cg_edge(cg, "s" + num(i), 0, i);
            cg_edge(cg, "c" + num(i), i, i);
        }
    } else if (s.family == "triple_theta") {
        cg_vertex(cg, "w");
        for (int i = 1; i <= 3; ++i) {
            cg_vertex(cg, "v" + num(i));
            for (int j = 0; j < 3; ++j) cg_edge(cg, "t" + num(i) + "-" + num(j), 0, i);
        }
    } else {
        bad("unknown family '" + s.family + "'");
    }
    return cg;
}

SpatialGraph embed_family(const FamilySpec& s) {
    SpatialGraph g;
    g.name = family_text(s);
    const Vec3 zhat{0, 0, 1};
    if (s.family == "complete") {
        auto pts = fibonacci_sphere(static_cast<std::size_t>(s.m));
        Rotation rot = rng::rotation(77, static_cast<std::uint64_t>(s.m));
        for (int i = 0; i < s.m; ++i) g.vertices["v" + num(i)] = rot.apply(pts[i]);
        for (int i = 0; i < s.m; ++i)
            for (int j = i + 1; j < s.m; ++j)
                sg_edge(g, "e" + num(i) + "-" + num(j), "v" + num(i), "v" + num(j));
    } else if (s.family == "bipartite") {
        for (int i = 0; i < s.m; ++i) {
            double a = 2.0 * kPi * i / s.m + 0.35;
            g.vertices["a" + num(i)] = {0.9 * std::cos(a), 0.9 * std::sin(a), 0.7};
        }
        for (int j = 0; j < s.n; ++j) {
            double a = 2.0 * kPi * j / s.n + 0.05;
            g.vertices["b" + num(j)] = {0.9 * std::cos(a), 0.9 * std::sin(a), -0.7};
        }
        for (int i = 0; i < s.m; ++i)
            for (int j = 0; j < s.n; ++j)
                sg_edge(g, "e" + num(i) + "-" + num(j), "a" + num(i), "b" + num(j));
    } else if (s.family == "theta") {
        g.vertices["u"] = {0, 1, 0};
        g.vertices["v"] = {0, -1, 0};
        for (int k = 0; k < s.m; ++k) {
            double b = s.m == 1 ? 0.0 : -1.0 + 2.0 * k / (s.m - 1);
            if (std::abs(b) < 1e-12) {
                sg_edge(g, "e" + num(k), "u", "v");
                continue;
            }
            double c = (b * b - 1.0) / (2.0 * b);
            double r = std::sqrt(c * c + 1.0);
            double tu = std::atan2(1.0, -c);  // angle of u on the circle, in (0, pi)
            double t0, t1;
            if (b > 0) {
                t0 = tu;  // sweep through t = 0, the point (c + r, 0) = (b, 0)
                t1 = -tu;
            } else {
                t0 = tu;  // sweep through t = pi, the point (c - r, 0) = (b, 0)
                t1 = 2.0 * kPi - tu;
            }
            sg_edge(g, "e" + num(k), "u", "v",
                    arc_joints({c, 0, 0}, r, {1, 0, 0}, {0, 1, 0}, t0, t1, 128));
        }
    } else if (s.family == "wheel") {
        g.vertices["h"] = {0, 0, 0};
        for (int i = 0; i < s.m; ++i) {
            double a = 2.0 * kPi * i / s.m + 0.123;
            g.vertices["r" + num(i)] = {std::cos(a), std::sin(a), 0};
        }
        for (int i = 0; i < s.m; ++i) {
            sg_edge(g, "c" + num(i), "r" + num(i), "r" + num((i + 1) % s.m));
            sg_edge(g, "s" + num(i), "h", "r" + num(i));
        }
    } else if (s.family == "ladder") {
        for (int i = 0; i < s.m; ++i) {
            double a = 2.0 * kPi * i / s.m;
            g.vertices["a" + num(i)] = {std::cos(a), std::sin(a), 0.45};
            g.vertices["b" + num(i)] = {std::cos(a), std::sin(a), -0.45};
        }
        for (int i = 0; i < s.m; ++i) {
            sg_edge(g, "ca" + num(i), "a" + num(i), "a" + num((i + 1) % s.m));
            sg_edge(g, "cb" + num(i), "b" + num(i), "b" + num((i + 1) % s.m));
            sg_edge(g, "r" + num(i), "a" + num(i), "b" + num(i));
        }
    } else if (s.family == "ring") {
        const double d = 0.4 / s.m;
        auto on_circle = [](double a) { return Point3{std::cos(a), std::sin(a), 0}; };
        for (int i = 0; i < s.m; ++i) {
            double phi = 2.0 * kPi * i / s.m;
            g.vertices["v" + num(2 * i)] = on_circle(phi - d);
            g.vertices["v" + num(2 * i + 1)] = on_circle(phi + d);
        }
        for (int i = 0; i < s.m; ++i) {
            double phi = 2.0 * kPi * i / s.m;
            Vec3 e1{std::cos(phi), std::sin(phi), 0};
            Vec3 e2{-std::sin(phi), std::cos(phi), 0};
            Point3 center = e1 * std::cos(d);
            // t0-0: the large-circle arc through angle phi between the pair.
            std::vector<Point3> mid;
            for (int k = 1; k <= 6; ++k) {
                double a = phi - d + 2.0 * d * k / 7.0;
                mid.push_back(on_circle(a));
            }
            sg_edge(g, "t" + num(i) + "-0", "v" + num(2 * i), "v" + num(2 * i + 1),
                    std::move(mid));
            // Small circle halves: outer bulge through t = 0, inner through pi.
            sg_edge(g, "t" + num(i) + "-1", "v" + num(2 * i), "v" + num(2 * i + 1),
                    arc_joints(center, std::sin(d), e1, e2, -kPi / 2, kPi / 2, 10));
            sg_edge(g, "t" + num(i) + "-2", "v" + num(2 * i), "v" + num(2 * i + 1),
                    arc_joints(center, std::sin(d), e1, e2, 3 * kPi / 2, kPi / 2, 10));
            // Large-circle arc to the next pair.
            std::vector<Point3> run;
            double a0 = phi + d, a1 = 2.0 * kPi * (i + 1) / s.m - d;
            for (int k = 1; k <= 12; ++k) run.push_back(on_circle(a0 + (a1 - a0) * k / 13.0));
            sg_edge(g, "s" + num(i), "v" + num(2 * i + 1), "v" + num((2 * i + 2) % (2 * s.m)),
                    std::move(run));
        }
    } else if (s.family == "sinewave") {
        auto polar = [&](double theta, double r) {
            return Point3{r * std::cos(theta), r * std::sin(theta), 0};
        };
        for (int k = 0; k < 2 * s.m; ++k)
            g.vertices["w" + num(k)] = polar(kPi * k / s.m, 1.0);
        for (int k = 0; k < 2 * s.m; ++k) {
            double th0 = kPi * k / s.m, th1 = kPi * (k + 1) / s.m;
            for (int j = 0; j < 2; ++j) {
                double sign = j == 0 ? 1.0 : -1.0;
                std::vector<Point3> pts;
                for (int t = 1; t <= 16; ++t) {
                    double th = th0 + (th1 - th0) * t / 17.0;
                    pts.push_back(polar(th, 1.0 + sign * s.eps * std::sin(s.m * th)));
                }
                sg_edge(g, "d" + num(k) + "-" + num(j), "w" + num(k),
                        "w" + num((k + 1) % (2 * s.m)), std::move(pts));
            }
        }
    } else if (s.family == "butterfly") {
        const double y1 = 1.0 + 1.0 / std::tan(s.alpha);
        g.vertices["q0p"] = {0, 1, 0};
        g.vertices["q0m"] = {0, -1, 0};
        g.vertices["q1p"] = {1, y1, 0};
        g.vertices["q1m"] = {1, -y1, 0};
        g.vertices["q2p"] = {-1, y1, 0};
        g.vertices["q2m"] = {-1, -y1, 0};
        sg_edge(g, "r1", "q0p", "q1p");
        sg_edge(g, "r2", "q1p", "q1m");
        sg_edge(g, "r3", "q1m", "q0m");
        sg_edge(g, "l1", "q0p", "q2p");
        sg_edge(g, "l2", "q2p", "q2m");
        sg_edge(g, "l3", "q2m", "q0m");
        sg_edge(g, "L0", "q0p", "q0m");
    } else if (s.family == "triple_circles") {
        g.vertices["p0"] = {0, 0, 0};
        for (int i = 1; i <= 3; ++i) {
            double a = kPi / 2 + 2.0 * kPi * (i - 1) / 3.0;
            Vec3 u{std::cos(a), std::sin(a), 0};
            Point3 p = u * 2.0;
            g.vertices["p" + num(i)] = p;
            sg_edge(g, "s" + num(i), "p0", "p" + num(i));
            Point3 center = p + u * 0.5;
            Vec3 e2 = cross(zhat, u);
            sg_edge(g, "c" + num(i), "p" + num(i), "p" + num(i),
                    arc_joints(center, 0.5, -u, e2, 0, 2.0 * kPi, 12));
        }
    } else if (s.family == "triple_theta") {
        g.vertices["w"] = {0, 0, 0};
        for (int i = 1; i <= 3; ++i) {
            double a = kPi / 2 + 2.0 * kPi * (i - 1) / 3.0;
            Vec3 u{std::cos(a), std::sin(a), 0};
            Point3 p = u * 1.5;
            g.vertices["v" + num(i)] = p;
            Point3 mid = u * 0.75;
            Vec3 side = cross(zhat, u);
            const Vec3 offs[3] = {zhat * 0.3, side * 0.3, zhat * -0.3};
            for (int j = 0; j < 3; ++j)
                sg_edge(g, "t" + num(i) + "-" + num(j), "w", "v" + num(i), {mid + offs[j]});
        }
    } else {
        bad("unknown family '" + s.family + "'");
    }
    return g;
}

HalfInt family_ntc_pi(const FamilySpec& s) {
    if (s.family == "complete") {
        std::int64_t l = s.m / 2;
        return HalfInt::whole(s.m % 2 == 0 ? l * l : l * (l + 1));
    }
    if (s.family == "bipartite")
        return HalfInt::whole((static_cast<std::int64_t>(s.m) * s.n + 1) / 2);
    if (s.family == "theta") return HalfInt::whole(s.m);
    if (s.family == "wheel") return HalfInt::whole(2 + (s.m + 1) / 2);
    if (s.family == "ladder") return HalfInt::whole(2 + s.m);
    if (s.family == "ring") return HalfInt::whole(2 * (s.m + 1));
    if (s.family == "sinewave") return HalfInt::whole(4);
    if (s.family == "butterfly") return HalfInt::whole(3);
    if (s.family == "triple_circles") return HalfInt::whole(5);
    if (s.family == "triple_theta") return HalfInt::whole(6);
    bad("unknown family '" + s.family + "'");
}

std::vector<CatalogRow> catalog_rows() {
    std::vector<CatalogRow> rows;
    auto push = [&](const std::string& family, const std::string& params,
                    const std::string& formula) {
        FamilySpec s = parse_family(params.empty() ? family : family + ":" + params);
        rows.push_back({family, params, family_ntc_pi(s), formula});
    };
    for (int m = 4; m <= 7; ++m)
        push("complete", std::to_string(m), "pi * l^2 (m = 2l) or pi * l(l+1) (m = 2l+1)");
    const std::pair<int, int> sides[] = {{2, 2}, {3, 2}, {3, 3}, {4, 3}, {4, 4}};
    for (auto [m, n] : sides)
        push("bipartite", std::to_string(m) + "," + std::to_string(n), "pi * ceil(mn/2)");
    for (int m = 3; m <= 6; ++m) push("theta", std::to_string(m), "pi * m");
    for (int m = 4; m <= 6; ++m) push("wheel", std::to_string(m), "pi * (2 + ceil(m/2))");
    for (int m = 3; m <= 5; ++m) push("ladder", std::to_string(m), "pi * (2 + m)");
    push("ring", "3", "2 pi * (m + 1)");
    push("sinewave", "3", "4 pi");
    push("butterfly", "", "3 pi (flat minimum; the planar embedding attains 5 pi - 4 alpha)");
    push("triple_circles", "", "5 pi (bridge 3/2, three loops)");
    push("triple_theta", "", "6 pi (exceeds pi(2B + k/2) = 5 pi)");
    return rows;
}

CombinatorialGraph random_trivalent(int vertices, std::uint64_t seed) {
    if (vertices < 4 || vertices % 2 != 0)
        bad("trivalent graphs need an even vertex count >= 4");
    const int stubs = 3 * vertices;
    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        std::vector<int> stub(stubs);
        for (int i = 0; i < stubs; ++i) stub[i] = i / 3;
        std::uint64_t ctr = 0;
        for (int i = stubs - 1; i > 0; --i) {
            auto j = static_cast<int>(rng::uniform(seed, ctr++, attempt) * (i + 1));
            std::swap(stub[i], stub[std::min(j, i)]);
        }
        bool has_loop = false;
        for (int i = 0; i < stubs; i += 2)
            if (stub[i] == stub[i + 1]) {
                has_loop = true;
                break;
            }
        if (has_loop) continue;
        CombinatorialGraph cg;
        cg.name = "trivalent-" + std::to_string(vertices);
        for (int v = 0; v < vertices; ++v) cg_vertex(cg, "v" + num(v));
        for (int i = 0; i < stubs; i += 2)
            cg_edge(cg, "e" + num(i / 2), stub[i], stub[i + 1]);
        return cg;
    }
    throw GraphError(GraphError::Code::BudgetExceeded,
                     "failed to sample a loop-free cubic pairing");
}

CombinatorialGraph random_multigraph(int vertices, int edges, std::uint64_t seed) {
    if (vertices < 1) bad("need at least one vertex");
    if (edges < vertices) bad("need at least as many edges as vertices for min degree 2");
    for (std::uint64_t attempt = 0; attempt < 4000; ++attempt) {
        CombinatorialGraph cg;
        cg.name = "multigraph-" + std::to_string(vertices) + "-" + std::to_string(edges);
        for (int v = 0; v < vertices; ++v) cg_vertex(cg, "v" + num(v));
        std::uint64_t ctr = 0;
        for (int e = 0; e < edges; ++e) {
            int u = static_cast<int>(rng::uniform(seed, ctr++, attempt) * vertices);
            int v = static_cast<int>(rng::uniform(seed, ctr++, attempt) * vertices);
            cg_edge(cg, "e" + num(e), std::min(u, vertices - 1), std::min(v, vertices - 1));
        }
        bool ok = true;
        for (int v = 0; v < vertices; ++v)
            if (cg.degree(v) < 2) {
                ok = false;
                break;
            }
        if (ok) return cg;
    }
    throw GraphError(GraphError::Code::BudgetExceeded,
                     "failed to sample a multigraph with min degree 2");
}

SpatialGraph random_embedding(const CombinatorialGraph& cg, std::uint64_t seed) {
    SpatialGraph g;
    g.name = cg.name.empty() ? "embedded" : cg.name;
    const double min_sep = 0.15;
    std::vector<Point3> pos(cg.vertex_ids.size());
    std::uint64_t ctr = 0;
    for (std::size_t i = 0; i < cg.vertex_ids.size(); ++i) {
        for (;;) {
            double radius = std::cbrt(rng::uniform(seed, ctr, 7));
            Point3 p = rng::sphere_point(seed, ctr) * radius;
            ++ctr;
            bool clear = true;
            for (std::size_t j = 0; j < i; ++j)
                if (dist(pos[j], p) < min_sep) {
                    clear = false;
                    break;
                }
            if (clear) {
                pos[i] = p;
                break;
            }
        }
        g.vertices[cg.vertex_ids[i]] = pos[i];
    }
    for (std::size_t e = 0; e < cg.edges.size(); ++e) {
        const auto& ce = cg.edges[e];
        std::vector<Point3> joints;
        if (ce.is_loop()) {
            Vec3 a = rng::sphere_point(seed, ctr++);
            Vec3 b = cross(a, rng::sphere_point(seed, ctr++)).normalized();
            joints = {pos[ce.u] + a * 0.35 + b * 0.15, pos[ce.u] + a * 0.35 - b * 0.15};
        } else {
            Point3 mid = (pos[ce.u] + pos[ce.v]) * 0.5;
            joints = {mid + rng::sphere_point(seed, ctr++) * 0.2};
        }
        sg_edge(g, ce.id, cg.vertex_ids[ce.u], cg.vertex_ids[ce.v], std::move(joints));
    }
    return g;
}

std::vector<Vec3> random_star(int degree, std::uint64_t seed) {
    if (degree < 1) bad("star degree must be positive");
    const double min_dot = std::cos(0.1);
    std::vector<Vec3> tangents;
    std::uint64_t ctr = 0;
    while (static_cast<int>(tangents.size()) < degree) {
        Vec3 t = rng::sphere_point(seed, ctr++);
        bool clear = true;
        for (const Vec3& u : tangents)
            if (std::abs(dot(t, u)) > min_dot) {
                clear = false;
                break;
            }
        if (clear) tangents.push_back(t);
        if (ctr > 100000)
            throw GraphError(GraphError::Code::BudgetExceeded,
                             "could not place star tangents with the required separation");
    }
    return tangents;
}

}  // namespace curvegraph
