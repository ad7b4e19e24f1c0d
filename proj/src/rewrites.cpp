// Local rewrite rules and script replay.

#include "tilecount/rewrites.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace tilecount {

namespace {

using json = nlohmann::json;

void need_vertex(const MatchGraph& g, int v, const char* rule) {
    if (!g.has_vertex(v))
        throw std::invalid_argument(std::string(rule) + ": vertex " + std::to_string(v) +
                                    " not in graph");
}

void need_distinct(const std::vector<int>& ids, const char* rule) {
    std::set<int> s(ids.begin(), ids.end());
    if (s.size() != ids.size())
        throw std::invalid_argument(std::string(rule) + ": site vertices must be distinct");
}

// The unique neighbor of v outside `inside`; throws unless there is exactly
// one and the edge to it has weight 1.
int unit_corner(const MatchGraph& g, int v, const std::set<int>& inside, const char* rule) {
    int corner = -1;
    for (int u : g.neighbors(v)) {
        if (inside.count(u)) continue;
        if (corner >= 0)
            throw std::invalid_argument(std::string(rule) + ": vertex " + std::to_string(v) +
                                        " has more than one outside neighbor");
        corner = u;
    }
    if (corner < 0)
        throw std::invalid_argument(std::string(rule) + ": vertex " + std::to_string(v) +
                                    " has no outside neighbor");
    if (g.weight(v, corner) != 1)
        throw std::invalid_argument(std::string(rule) + ": leg at vertex " + std::to_string(v) +
                                    " must have weight 1");
    return corner;
}

void need_new_edge(const MatchGraph& g, int u, int v, const char* rule) {
    if (g.has_edge(u, v))
        throw std::invalid_argument(std::string(rule) + ": corners " + std::to_string(u) +
                                    " and " + std::to_string(v) + " are already adjacent");
}

Color other(Color c) { return c == Color::Black ? Color::White : Color::Black; }

}  // namespace

RewriteResult vertex_split(const MatchGraph& g, int v, const std::vector<int>& h) {
    need_vertex(g, v, "vertex-split");
    need_distinct(h, "vertex-split");
    std::vector<int> nbrs = g.neighbors(v);
    std::set<int> nbr_set(nbrs.begin(), nbrs.end());
    for (int u : h) {
        if (!nbr_set.count(u))
            throw std::invalid_argument("vertex-split: " + std::to_string(u) +
                                        " is not a neighbor of " + std::to_string(v));
    }
    std::set<int> h_set(h.begin(), h.end());
    const VertexData vd = g.vertex(v);

    RewriteResult r{g, {"vertex-split", {v}, Rat(1)}};
    std::vector<std::pair<int, Rat>> saved;
    for (int u : nbrs) saved.push_back({u, g.weight(v, u)});
    r.graph.remove_vertex(v);
    int vp = r.graph.add_vertex(vd.x, vd.y, vd.color);
    int vpp = r.graph.add_vertex(vd.x + Rat(1, 2), vd.y + Rat(1, 2), vd.color);
    int x = r.graph.add_vertex(vd.x + Rat(1, 4), vd.y + Rat(1, 4), other(vd.color));
    for (const auto& [u, w] : saved) r.graph.add_edge(h_set.count(u) ? vp : vpp, u, w);
    r.graph.add_edge(vp, x, 1);
    r.graph.add_edge(vpp, x, 1);
    return r;
}

RewriteResult star_scale(const MatchGraph& g, int v, const Rat& t) {
    need_vertex(g, v, "star");
    if (t <= 0) throw std::invalid_argument("star: scale factor must be positive");
    RewriteResult r{g, {"star", {v}, Rat(1) / t}};
    for (int u : r.graph.neighbors(v)) r.graph.set_weight(v, u, g.weight(v, u) * t);
    return r;
}

RewriteResult urban_renewal(const MatchGraph& g, const std::vector<int>& cycle) {
    if (cycle.size() != 4) throw std::invalid_argument("spider-a: site needs 4 cycle vertices");
    need_distinct(cycle, "spider-a");
    for (int v : cycle) need_vertex(g, v, "spider-a");
    std::set<int> inside(cycle.begin(), cycle.end());
    Rat w[4];
    for (int i = 0; i < 4; ++i) {
        int u = cycle[i], v = cycle[(i + 1) % 4];
        if (!g.has_edge(u, v))
            throw std::invalid_argument("spider-a: missing cycle edge " + std::to_string(u) +
                                        "-" + std::to_string(v));
        w[i] = g.weight(u, v);
    }
    int q[4];
    for (int i = 0; i < 4; ++i) q[i] = unit_corner(g, cycle[i], inside, "spider-a");
    std::vector<int> qs(q, q + 4);
    need_distinct(qs, "spider-a");

    Rat delta = w[0] * w[2] + w[1] * w[3];
    RewriteResult r{g, {"spider-a", cycle, delta}};
    for (int v : cycle) r.graph.remove_vertex(v);
    const Rat nw[4] = {w[2] / delta, w[3] / delta, w[0] / delta, w[1] / delta};
    for (int i = 0; i < 4; ++i) {
        need_new_edge(r.graph, q[i], q[(i + 1) % 4], "spider-a");
        r.graph.add_edge(q[i], q[(i + 1) % 4], nw[i]);
    }
    return r;
}

RewriteResult urban_renewal_b(const MatchGraph& g, const std::vector<int>& path) {
    if (path.size() != 3) throw std::invalid_argument("spider-b: site needs 3 path vertices");
    need_distinct(path, "spider-b");
    for (int v : path) need_vertex(g, v, "spider-b");
    int p = path[0], q = path[1], rr = path[2];
    if (!g.has_edge(p, q) || !g.has_edge(q, rr))
        throw std::invalid_argument("spider-b: site is not a path");
    Rat x = g.weight(p, q), y = g.weight(q, rr);
    std::set<int> inside(path.begin(), path.end());
    int a = unit_corner(g, p, inside, "spider-b");
    int b = unit_corner(g, q, inside, "spider-b");
    int c = unit_corner(g, rr, inside, "spider-b");
    need_distinct({a, b, c}, "spider-b");

    RewriteResult res{g, {"spider-b", path, Rat(2)}};
    const VertexData qd = g.vertex(q);
    Color pcol = g.vertex(p).color;
    for (int v : path) res.graph.remove_vertex(v);
    int d = res.graph.add_vertex(qd.x + Rat(1, 4), qd.y + Rat(1, 4), pcol);
    need_new_edge(res.graph, a, b, "spider-b");
    need_new_edge(res.graph, b, c, "spider-b");
    res.graph.add_edge(a, b, Rat(1) / (2 * x));
    res.graph.add_edge(b, c, Rat(1) / (2 * y));
    res.graph.add_edge(c, d, x / 2);
    res.graph.add_edge(d, a, y / 2);
    return res;
}

RewriteResult urban_renewal_c(const MatchGraph& g, const std::vector<int>& edge) {
    if (edge.size() != 2) throw std::invalid_argument("spider-c: site needs 2 edge vertices");
    need_distinct(edge, "spider-c");
    for (int v : edge) need_vertex(g, v, "spider-c");
    int p = edge[0], q = edge[1];
    if (!g.has_edge(p, q)) throw std::invalid_argument("spider-c: site is not an edge");
    Rat x = g.weight(p, q);
    std::set<int> inside(edge.begin(), edge.end());
    int a = unit_corner(g, p, inside, "spider-c");
    int b = unit_corner(g, q, inside, "spider-c");

    RewriteResult res{g, {"spider-c", edge, Rat(2)}};
    const VertexData pd = g.vertex(p), qd = g.vertex(q);
    Color pcol = pd.color, qcol = qd.color;
    for (int v : edge) res.graph.remove_vertex(v);
    int c = res.graph.add_vertex(qd.x + Rat(1, 4), qd.y + Rat(1, 4), qcol);
    int d = res.graph.add_vertex(pd.x + Rat(1, 4), pd.y + Rat(1, 4), pcol);
    need_new_edge(res.graph, a, b, "spider-c");
    res.graph.add_edge(a, b, Rat(1) / (2 * x));
    res.graph.add_edge(b, c, Rat(1, 2));
    res.graph.add_edge(c, d, x / 2);
    res.graph.add_edge(d, a, Rat(1, 2));
    return res;
}

RewriteResult double_4cycle(const MatchGraph& g, int a, const std::vector<int>& b,
                            const std::vector<int>& c) {
    if (b.size() != 3 || c.size() != 3)
        throw std::invalid_argument("double-4-cycle: site needs two 3-vertex arcs");
    std::vector<int> all{a};
    all.insert(all.end(), b.begin(), b.end());
    all.insert(all.end(), c.begin(), c.end());
    need_distinct(all, "double-4-cycle");
    for (int v : all) need_vertex(g, v, "double-4-cycle");
    auto arc_check = [&](const std::vector<int>& arc) {
        if (!g.has_edge(a, arc[0]) || !g.has_edge(arc[0], arc[1]) ||
            !g.has_edge(arc[1], arc[2]) || !g.has_edge(arc[2], a))
            throw std::invalid_argument("double-4-cycle: missing cycle edge");
        if (g.degree(arc[0]) != 2 || g.degree(arc[1]) != 2)
            throw std::invalid_argument("double-4-cycle: inner arc vertices must have degree 2");
        if (g.weight(a, arc[0]) * g.weight(arc[1], arc[2]) !=
            g.weight(arc[0], arc[1]) * g.weight(arc[2], a))
            throw std::invalid_argument("double-4-cycle: opposite edge products differ");
    };
    arc_check(b);
    arc_check(c);
    if (g.degree(a) != 4)
        throw std::invalid_argument("double-4-cycle: center must have exactly the cycle edges");

    RewriteResult r{g,
                    {"double-4-cycle",
                     {b[0], b[1], c[0], c[1]},
                     2 * g.weight(b[0], b[1]) * g.weight(c[0], c[1])}};
    for (int v : {b[0], b[1], c[0], c[1]}) r.graph.remove_vertex(v);
    return r;
}

RewriteResult forced_edges(const MatchGraph& g) {
    ReduceResult red = reduce_forced(g);
    std::vector<int> removed;
    for (int id : g.vertex_ids()) {
        if (!red.graph.has_vertex(id)) removed.push_back(id);
    }
    return {std::move(red.graph), {"forced-edge", std::move(removed), red.factor}};
}

namespace {

Rat json_rat(const json& j, const char* what) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw std::invalid_argument(std::string(what) + " must be an integer or a \"p/q\" string");
}

std::vector<int> json_ints(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<int> v;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw std::invalid_argument(std::string(what) + " must hold integers");
        v.push_back(e.get<int>());
    }
    return v;
}

ScriptStep parse_step(const json& j, std::size_t index) {
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("script step " + std::to_string(index) + ": " + msg);
    };
    if (!j.is_object()) fail("not an object");
    if (!j.contains("rule") || !j.at("rule").is_string()) fail("missing string field 'rule'");
    ScriptStep step;
    step.rule = j.at("rule").get<std::string>();
    std::set<std::string> allowed{"rule"};
    try {
        if (step.rule == "vertex-split") {
            allowed.insert({"v", "h"});
            step.ids.push_back(j.at("v").get<int>());
            for (int u : json_ints(j.at("h"), "'h'")) step.ids.push_back(u);
        } else if (step.rule == "star") {
            allowed.insert({"v", "t"});
            step.ids.push_back(j.at("v").get<int>());
            step.t = json_rat(j.at("t"), "'t'");
        } else if (step.rule == "spider-a") {
            allowed.insert("cycle");
            step.ids = json_ints(j.at("cycle"), "'cycle'");
        } else if (step.rule == "spider-b") {
            allowed.insert("path");
            step.ids = json_ints(j.at("path"), "'path'");
        } else if (step.rule == "spider-c") {
            allowed.insert("edge");
            step.ids = json_ints(j.at("edge"), "'edge'");
        } else if (step.rule == "double-4-cycle") {
            allowed.insert({"a", "b", "c"});
            step.ids.push_back(j.at("a").get<int>());
            for (int u : json_ints(j.at("b"), "'b'")) step.ids.push_back(u);
            for (int u : json_ints(j.at("c"), "'c'")) step.ids.push_back(u);
            if (step.ids.size() != 7) fail("'b' and 'c' must hold 3 vertices each");
        } else if (step.rule == "forced-edge") {
            // no parameters
        } else {
            fail("unknown rule '" + step.rule + "'");
        }
    } catch (const json::exception& e) {
        fail(e.what());
    }
    for (const auto& [key, value] : j.items()) {
        if (!allowed.count(key)) fail("unknown field '" + key + "'");
    }
    return step;
}

}  // namespace

std::vector<ScriptStep> parse_script(std::istream& in) {
    json root;
    try {
        root = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("script: ") + e.what());
    }
    if (!root.is_array()) throw std::invalid_argument("script: top level must be an array");
    std::vector<ScriptStep> steps;
    for (std::size_t i = 0; i < root.size(); ++i) steps.push_back(parse_step(root[i], i));
    return steps;
}

std::vector<ScriptStep> parse_script_string(const std::string& text) {
    std::istringstream in(text);
    return parse_script(in);
}

ReplayResult replay_script(const MatchGraph& g, const std::vector<ScriptStep>& steps) {
    ReplayResult res{g, Rat(1), {}};
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const ScriptStep& s = steps[i];
        try {
            RewriteResult r = [&] {
                if (s.rule == "vertex-split") {
                    if (s.ids.empty()) throw std::invalid_argument("missing split vertex");
                    return vertex_split(res.graph, s.ids[0],
                                        {s.ids.begin() + 1, s.ids.end()});
                }
                if (s.rule == "star") {
                    if (s.ids.empty()) throw std::invalid_argument("missing star vertex");
                    return star_scale(res.graph, s.ids[0], s.t);
                }
                if (s.rule == "spider-a") return urban_renewal(res.graph, s.ids);
                if (s.rule == "spider-b") return urban_renewal_b(res.graph, s.ids);
                if (s.rule == "spider-c") return urban_renewal_c(res.graph, s.ids);
                if (s.rule == "double-4-cycle") {
                    if (s.ids.size() != 7)
                        throw std::invalid_argument("site needs 7 vertices");
                    return double_4cycle(res.graph, s.ids[0], {s.ids[1], s.ids[2], s.ids[3]},
                                         {s.ids[4], s.ids[5], s.ids[6]});
                }
                if (s.rule == "forced-edge") return forced_edges(res.graph);
                throw std::invalid_argument("unknown rule '" + s.rule + "'");
            }();
            res.factor *= r.step.factor;
            res.steps.push_back(std::move(r.step));
            res.graph = std::move(r.graph);
        } catch (const std::exception& e) {
            throw std::runtime_error("script step " + std::to_string(i) + " (" + s.rule +
                                     "): " + e.what());
        }
    }
    return res;
}

}  // namespace tilecount
