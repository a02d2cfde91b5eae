#include "curvegraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace curvegraph {

using nlohmann::ordered_json;

const Point3& SpatialGraph::pos(const std::string& id) const {
    auto it = vertices.find(id);
    if (it == vertices.end()) throw GraphError(GraphError::Code::DanglingEndpoint, "unknown vertex id: " + id);
    return it->second;
}

const SpatialGraph::Edge& SpatialGraph::edge(const std::string& id) const {
    for (const auto& e : edges)
        if (e.id == id) return e;
    throw GraphError(GraphError::Code::BadArgument, "unknown edge id: " + id);
}

int SpatialGraph::degree(const std::string& id) const {
    int d = 0;
    for (const auto& e : edges) {
        if (e.u == id) ++d;
        if (e.v == id) ++d;
    }
    return d;
}

std::vector<Point3> SpatialGraph::chain(const Edge& e) const {
    std::vector<Point3> c;
    c.reserve(e.polyline.size() + 2);
    c.push_back(pos(e.u));
    for (const auto& p : e.polyline) c.push_back(p);
    c.push_back(pos(e.v));
    return c;
}

int CombinatorialGraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

int CombinatorialGraph::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < vertex_ids.size(); ++i)
        if (vertex_ids[i] == id) return static_cast<int>(i);
    return -1;
}

std::vector<int> CombinatorialGraph::loop_edge_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].is_loop()) out.push_back(static_cast<int>(i));
    return out;
}

bool CombinatorialGraph::connected() const {
    if (vertex_ids.empty()) return true;
    std::vector<char> seen(vertex_ids.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& e : edges) {
            int w = -1;
            if (e.u == v) w = e.v;
            else if (e.v == v) w = e.u;
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

namespace {

Point3 parse_point(const ordered_json& j, const char* where) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number())
        throw GraphError(GraphError::Code::Schema, std::string("expected [x,y,z] in ") + where);
    Point3 p{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
        throw GraphError(GraphError::Code::Schema, std::string("non-finite coordinate in ") + where);
    return p;
}

void check_edge_geometry(const SpatialGraph& g, const SpatialGraph::Edge& e) {
    if (e.is_loop() && e.polyline.empty())
        throw GraphError(GraphError::Code::LoopWithoutJoint,
                         "loop edge '" + e.id + "' needs at least one interior joint");
    auto c = std::vector<Point3>();
    c.push_back(g.pos(e.u));
    for (const auto& p : e.polyline) c.push_back(p);
    c.push_back(g.pos(e.v));
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (dist(c[i], c[i + 1]) <= kSeparation)
            throw GraphError(GraphError::Code::CoincidentPoints,
                             "edge '" + e.id + "': consecutive points coincide at segment " + std::to_string(i));
}

}  // namespace

SpatialGraph load_graph(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw GraphError(GraphError::Code::Schema, std::string("JSON parse failure: ") + ex.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw GraphError(GraphError::Code::Schema, "document must carry 'vertices' and 'edges'");

    SpatialGraph g;
    g.name = doc.value("name", "");
    for (const auto& jv : doc["vertices"]) {
        if (!jv.contains("id") || !jv.contains("pos"))
            throw GraphError(GraphError::Code::Schema, "vertex entries need 'id' and 'pos'");
        std::string id = jv["id"].get<std::string>();
        if (g.vertices.count(id))
            throw GraphError(GraphError::Code::Schema, "duplicate vertex id: " + id);
        g.vertices[id] = parse_point(jv["pos"], "vertex pos");
    }
    for (const auto& je : doc["edges"]) {
        if (!je.contains("id") || !je.contains("ends"))
            throw GraphError(GraphError::Code::Schema, "edge entries need 'id' and 'ends'");
        SpatialGraph::Edge e;
        e.id = je["id"].get<std::string>();
        if (!je["ends"].is_array() || je["ends"].size() != 2)
            throw GraphError(GraphError::Code::Schema, "edge 'ends' must be [u,v]");
        e.u = je["ends"][0].get<std::string>();
        e.v = je["ends"][1].get<std::string>();
        if (!g.vertices.count(e.u)) throw GraphError(GraphError::Code::DanglingEndpoint, "unknown endpoint id: " + e.u);
        if (!g.vertices.count(e.v)) throw GraphError(GraphError::Code::DanglingEndpoint, "unknown endpoint id: " + e.v);
        if (je.contains("polyline"))
            for (const auto& jp : je["polyline"]) e.polyline.push_back(parse_point(jp, "polyline"));
        check_edge_geometry(g, e);
        for (const auto& other : g.edges)
            if (other.id == e.id)
                throw GraphError(GraphError::Code::Schema, "duplicate edge id: " + e.id);
        g.edges.push_back(std::move(e));
    }
    return g;
}

SpatialGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError(GraphError::Code::Schema, "cannot read: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_graph(ss.str());
}

namespace {

ordered_json point_json(const Point3& p) {
    return ordered_json::array({p.x, p.y, p.z});
}

}  // namespace

std::string save_graph(const SpatialGraph& g) {
    ordered_json doc;
    doc["name"] = g.name;
    doc["vertices"] = ordered_json::array();
    for (const auto& [id, p] : g.vertices) {  // std::map iterates sorted by id
        ordered_json jv;
        jv["id"] = id;
        jv["pos"] = point_json(p);
        doc["vertices"].push_back(jv);
    }
    std::vector<const SpatialGraph::Edge*> sorted;
    for (const auto& e : g.edges) sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto* a, const auto* b) { return a->id < b->id; });
    doc["edges"] = ordered_json::array();
    for (const auto* e : sorted) {
        ordered_json je;
        je["id"] = e->id;
        je["ends"] = ordered_json::array({e->u, e->v});
        je["polyline"] = ordered_json::array();
        for (const auto& p : e->polyline) je["polyline"].push_back(point_json(p));
        doc["edges"].push_back(je);
    }
    return doc.dump(2) + "\n";
}

ValidationReport validate(const SpatialGraph& g) {
    for (const auto& e : g.edges) {
        g.pos(e.u);
        g.pos(e.v);
        check_edge_geometry(g, e);
    }
    ValidationReport r;
    r.vertex_count = static_cast<int>(g.vertices.size());
    r.edge_count = static_cast<int>(g.edges.size());
    auto cg = combinatorial(g);
    for (const auto& e : cg.edges)
        if (e.is_loop()) ++r.loop_count;
    r.connected = cg.connected();
    return r;
}

CombinatorialGraph combinatorial(const SpatialGraph& g) {
    CombinatorialGraph cg;
    cg.name = g.name;
    for (const auto& [id, _] : g.vertices) cg.vertex_ids.push_back(id);
    for (const auto& e : g.edges) {
        CombinatorialGraph::Edge ce;
        ce.id = e.id;
        ce.u = cg.index_of(e.u);
        ce.v = cg.index_of(e.v);
        cg.edges.push_back(ce);
    }
    return cg;
}

std::uint64_t graph_hash(const SpatialGraph& g) {
    std::string s = save_graph(g);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

VertexStar tangent_star(const SpatialGraph& g, const std::string& vertex_id) {
    const Point3& q = g.pos(vertex_id);
    VertexStar star;
    star.vertex_id = vertex_id;
    auto push_tangent = [&](const Point3& first) {
        Vec3 d = first - q;
        double n = d.norm();
        if (n <= kSeparation)
            throw GraphError(GraphError::Code::ZeroLengthSegment,
                             "zero-length first segment at vertex '" + vertex_id + "'");
        star.tangents.push_back(d / n);
    };
    for (const auto& e : g.edges) {
        auto c = g.chain(e);
        if (e.u == vertex_id) push_tangent(c[1]);
        if (e.v == vertex_id) push_tangent(c[c.size() - 2]);
    }
    if (star.tangents.empty())
        throw GraphError(GraphError::Code::BadArgument, "vertex '" + vertex_id + "' has no incident edges");
    return star;
}

SpatialGraph subdivide(const SpatialGraph& g, const std::string& edge_id, int joint_index) {
    SpatialGraph out = g;
    auto it = std::find_if(out.edges.begin(), out.edges.end(),
                           [&](const auto& e) { return e.id == edge_id; });
    if (it == out.edges.end())
        throw GraphError(GraphError::Code::BadArgument, "unknown edge id: " + edge_id);
    SpatialGraph::Edge e = *it;
    if (joint_index < 0 || joint_index >= static_cast<int>(e.polyline.size()))
        throw GraphError(GraphError::Code::BadArgument,
                         "joint index " + std::to_string(joint_index) + " out of range for edge '" + edge_id + "'");

    std::string nid = edge_id + ".s";
    for (int k = 0; out.vertices.count(nid); ++k) nid = edge_id + ".s" + std::to_string(k);
    out.vertices[nid] = e.polyline[joint_index];

    SpatialGraph::Edge a, b;
    a.id = e.id + ".a";
    a.u = e.u;
    a.v = nid;
    a.polyline.assign(e.polyline.begin(), e.polyline.begin() + joint_index);
    b.id = e.id + ".b";
    b.u = nid;
    b.v = e.v;
    b.polyline.assign(e.polyline.begin() + joint_index + 1, e.polyline.end());
    out.edges.erase(std::find_if(out.edges.begin(), out.edges.end(),
                                 [&](const auto& ed) { return ed.id == edge_id; }));
    out.edges.push_back(std::move(a));
    out.edges.push_back(std::move(b));
    return out;
}

SpatialGraph inscribe(const std::string& name, const std::vector<Point3>& samples, bool closed) {
    if (samples.size() < 2)
        throw GraphError(GraphError::Code::BadArgument, "inscribe needs at least 2 samples");
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
        if (dist(samples[i], samples[i + 1]) <= kSeparation)
            throw GraphError(GraphError::Code::CoincidentPoints,
                             "duplicate consecutive sample at index " + std::to_string(i));
    SpatialGraph g;
    g.name = name;
    if (!closed) {
        g.vertices["a"] = samples.front();
        g.vertices["b"] = samples.back();
        SpatialGraph::Edge e;
        e.id = "arc";
        e.u = "a";
        e.v = "b";
        e.polyline.assign(samples.begin() + 1, samples.end() - 1);
        g.edges.push_back(std::move(e));
        return g;
    }
    // Closed: split at the first sample and the one halfway around, giving a
    // plain 2-vertex cycle (loop edges would need their own vertex anyway).
    if (samples.size() < 3)
        throw GraphError(GraphError::Code::BadArgument, "closed inscribe needs at least 3 samples");
    if (dist(samples.front(), samples.back()) <= kSeparation)
        throw GraphError(GraphError::Code::CoincidentPoints,
                         "closed inscribe: omit the repeated closing sample");
    std::size_t half = samples.size() / 2;
    g.vertices["a"] = samples.front();
    g.vertices["b"] = samples[half];
    SpatialGraph::Edge e1, e2;
    e1.id = "arc0";
    e1.u = "a";
    e1.v = "b";
    e1.polyline.assign(samples.begin() + 1, samples.begin() + half);
    e2.id = "arc1";
    e2.u = "b";
    e2.v = "a";
    e2.polyline.assign(samples.begin() + half + 1, samples.end());
    g.edges.push_back(std::move(e1));
    g.edges.push_back(std::move(e2));
    return g;
}

SpatialGraph graph_union(const SpatialGraph& a, const SpatialGraph& b) {
    SpatialGraph out = a;
    std::map<std::string, std::string> rename;  // b vertex id -> out vertex id
    for (const auto& [bid, bp] : b.vertices) {
        std::string target;
        for (const auto& [aid, ap] : out.vertices)
            if (dist(ap, bp) <= kSeparation) {
                target = aid;
                break;
            }
        if (target.empty()) {
            target = bid;
            while (out.vertices.count(target)) target = "b." + target;
            out.vertices[target] = bp;
        }
        rename[bid] = target;
    }
    for (const auto& e : b.edges) {
        SpatialGraph::Edge ne = e;
        ne.u = rename[e.u];
        ne.v = rename[e.v];
        bool clash = std::any_of(out.edges.begin(), out.edges.end(),
                                 [&](const auto& oe) { return oe.id == ne.id; });
        if (clash) ne.id = "b." + ne.id;
        out.edges.push_back(std::move(ne));
    }
    return out;
}

}  // namespace curvegraph
