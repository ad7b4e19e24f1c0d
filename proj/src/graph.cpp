#include "tilecount/graph.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace tilecount {

int MatchGraph::add_vertex(Rat x, Rat y, Color color) {
    int id = next_id_++;
    verts_.emplace(id, VertexData{std::move(x), std::move(y), color});
    adj_.emplace(id, std::map<int, Rat>{});
    return id;
}

void MatchGraph::add_edge(int u, int v, const Rat& w) {
    if (u == v) throw std::invalid_argument("add_edge: self loop");
    if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("add_edge: missing vertex");
    if (verts_.at(u).color == verts_.at(v).color)
        throw std::invalid_argument("add_edge: endpoints share a color");
    if (adj_.at(u).count(v)) throw std::invalid_argument("add_edge: edge already present");
    if (w == 0) throw std::invalid_argument("add_edge: zero weight");
    adj_.at(u).emplace(v, w);
    adj_.at(v).emplace(u, w);
}

void MatchGraph::remove_vertex(int v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("remove_vertex: missing vertex");
    for (auto& [u, w] : it->second) adj_.at(u).erase(v);
    adj_.erase(it);
    verts_.erase(v);
}

void MatchGraph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw std::invalid_argument("remove_edge: missing edge");
    adj_.at(u).erase(v);
    adj_.at(v).erase(u);
}

void MatchGraph::set_weight(int u, int v, const Rat& w) {
    if (!has_edge(u, v)) throw std::invalid_argument("set_weight: missing edge");
    if (w == 0) throw std::invalid_argument("set_weight: zero weight");
    adj_.at(u).at(v) = w;
    adj_.at(v).at(u) = w;
}

bool MatchGraph::has_edge(int u, int v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

const Rat& MatchGraph::weight(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("weight: missing edge");
    return adj_.at(u).at(v);
}

const VertexData& MatchGraph::vertex(int v) const {
    auto it = verts_.find(v);
    if (it == verts_.end()) throw std::invalid_argument("vertex: missing vertex");
    return it->second;
}

std::size_t MatchGraph::edge_count() const {
    std::size_t twice = 0;
    for (auto& [v, nbrs] : adj_) twice += nbrs.size();
    return twice / 2;
}

std::size_t MatchGraph::degree(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("degree: missing vertex");
    return it->second.size();
}

std::vector<int> MatchGraph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("neighbors: missing vertex");
    std::vector<int> out;
    out.reserve(it->second.size());
    for (auto& [u, w] : it->second) out.push_back(u);
    return out;
}

std::vector<int> MatchGraph::vertex_ids() const {
    std::vector<int> out;
    out.reserve(verts_.size());
    for (auto& [v, data] : verts_) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> MatchGraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (auto& [v, nbrs] : adj_)
        for (auto& [u, w] : nbrs)
            if (v < u) out.emplace_back(v, u);
    return out;
}

void MatchGraph::flip_colors() {
    for (auto& [v, data] : verts_)
        data.color = data.color == Color::Black ? Color::White : Color::Black;
}

MatchGraph dual_graph(const Region& region) {
    MatchGraph g;
    std::map<Cell, int> index;
    for (const Cell& cell : region.cells) {
        auto [x, y] = cell_center(cell);
        int id = g.add_vertex(x, y, cell_is_black(cell) ? Color::Black : Color::White);
        index.emplace(cell, id);
    }
    for (const Cell& cell : region.cells) {
        for (const Cell& nbr : cell_neighbors(cell)) {
            if (!(cell < nbr)) continue;
            auto it = index.find(nbr);
            if (it == index.end()) continue;
            Rat w(1);
            auto wit = region.tile_weights.find({cell, nbr});
            if (wit != region.tile_weights.end()) w = wit->second;
            g.add_edge(index.at(cell), it->second, w);
        }
    }
    return g;
}

std::string dump_graph(const MatchGraph& g) {
    std::ostringstream os;
    for (int v : g.vertex_ids()) {
        const VertexData& d = g.vertex(v);
        os << "vertex " << v << " " << rat_str(d.x) << " " << rat_str(d.y) << " "
           << (d.color == Color::Black ? "b" : "w") << "\n";
    }
    for (auto [u, v] : g.edge_list())
        os << "edge " << u << " " << v << " " << rat_str(g.weight(u, v)) << "\n";
    return os.str();
}

MatchGraph parse_graph(std::istream& in) {
    MatchGraph g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        auto bad = [&](const std::string& what) {
            throw std::invalid_argument("graph line " + std::to_string(lineno) + ": " + what);
        };
        if (tag == "vertex") {
            int id;
            std::string xs, ys, cs;
            if (!(ls >> id >> xs >> ys >> cs)) bad("expected: vertex <id> <x> <y> <b|w>");
            if (cs != "b" && cs != "w") bad("color must be 'b' or 'w'");
            if (g.has_vertex(id)) bad("duplicate vertex id");
            g.verts_.emplace(id,
                             VertexData{parse_rat(xs), parse_rat(ys),
                                        cs == "b" ? Color::Black : Color::White});
            g.adj_.emplace(id, std::map<int, Rat>{});
            g.next_id_ = std::max(g.next_id_, id + 1);
        } else if (tag == "edge") {
            int u, v;
            std::string ws;
            if (!(ls >> u >> v >> ws)) bad("expected: edge <u> <v> <weight>");
            g.add_edge(u, v, parse_rat(ws));
        } else {
            bad("unknown line tag '" + tag + "'");
        }
    }
    return g;
}

MatchGraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

ReduceResult reduce_forced(const MatchGraph& g) {
    ReduceResult res{g, Rat(1)};
    MatchGraph& h = res.graph;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v : h.vertex_ids()) {
            if (h.degree(v) != 1) continue;
            int u = h.neighbors(v).front();
            res.factor *= h.weight(v, u);
            h.remove_vertex(v);
            h.remove_vertex(u);
            progress = true;
            break;
        }
    }
    return res;
}

std::vector<std::vector<int>> connected_components(const MatchGraph& g) {
    std::vector<std::vector<int>> comps;
    std::map<int, bool> seen;
    for (int start : g.vertex_ids()) {
        if (seen[start]) continue;
        std::vector<int> comp, stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

MatchGraph connected_sum(const MatchGraph& g1, const std::vector<int>& marks1,
                         const MatchGraph& g2, const std::vector<int>& marks2) {
    if (marks1.size() != marks2.size())
        throw std::invalid_argument("connected_sum: mark lists differ in length");
    if (marks1.empty()) throw std::invalid_argument("connected_sum: no marks");
    auto distinct = [](const std::vector<int>& v) {
        std::vector<int> s = v;
        std::sort(s.begin(), s.end());
        return std::adjacent_find(s.begin(), s.end()) == s.end();
    };
    if (!distinct(marks1) || !distinct(marks2))
        throw std::invalid_argument("connected_sum: repeated mark");
    for (int v : marks1)
        if (!g1.has_vertex(v)) throw std::invalid_argument("connected_sum: bad mark in g1");
    for (int v : marks2)
        if (!g2.has_vertex(v)) throw std::invalid_argument("connected_sum: bad mark in g2");

    bool same = true, opposite = true;
    for (std::size_t i = 0; i < marks1.size(); ++i) {
        bool eq = g1.vertex(marks1[i]).color == g2.vertex(marks2[i]).color;
        same &= eq;
        opposite &= !eq;
    }
    if (!same && !opposite)
        throw std::invalid_argument("connected_sum: mark colors cannot be aligned");

    MatchGraph out = g1;
    Rat dx = g1.vertex(marks1[0]).x - g2.vertex(marks2[0]).x;
    Rat dy = g1.vertex(marks1[0]).y - g2.vertex(marks2[0]).y;
    std::map<int, int> to_out;
    for (std::size_t i = 0; i < marks2.size(); ++i) to_out[marks2[i]] = marks1[i];
    for (int v : g2.vertex_ids()) {
        if (to_out.count(v)) continue;
        const VertexData& d = g2.vertex(v);
        Color c = d.color;
        if (opposite) c = c == Color::Black ? Color::White : Color::Black;
        to_out[v] = out.add_vertex(d.x + dx, d.y + dy, c);
    }
    for (auto [u, v] : g2.edge_list()) {
        int a = to_out.at(u), b = to_out.at(v);
        if (out.has_edge(a, b))
            throw std::invalid_argument("connected_sum: identification creates a parallel edge");
        out.add_edge(a, b, g2.weight(u, v));
    }
    return out;
}

CutResult symmetry_cut(const MatchGraph& g, const Rat& axis) {
    // Verify the mirror symmetry: a color- and weight-preserving bijection.
    std::map<std::pair<Rat, Rat>, int> at_pos;
    for (int v : g.vertex_ids()) {
        const VertexData& d = g.vertex(v);
        if (!at_pos.emplace(std::make_pair(d.x, d.y), v).second)
            throw std::invalid_argument("symmetry_cut: coincident vertex positions");
    }
    std::map<int, int> mirror;
    for (int v : g.vertex_ids()) {
        const VertexData& d = g.vertex(v);
        auto it = at_pos.find(std::make_pair(2 * axis - d.x, d.y));
        if (it == at_pos.end())
            throw std::invalid_argument("symmetry_cut: graph not mirror-symmetric about axis");
        if (g.vertex(it->second).color != d.color)
            throw std::invalid_argument("symmetry_cut: mirror image has the wrong color");
        mirror[v] = it->second;
    }
    for (auto [u, v] : g.edge_list()) {
        int mu = mirror.at(u), mv = mirror.at(v);
        if (!g.has_edge(mu, mv) || g.weight(mu, mv) != g.weight(u, v))
            throw std::invalid_argument("symmetry_cut: edges not mirror-symmetric about axis");
    }

    // On-axis vertices, top to bottom: a_1, b_1, a_2, b_2, ...
    std::vector<int> on_axis;
    for (int v : g.vertex_ids())
        if (g.vertex(v).x == axis) on_axis.push_back(v);
    std::sort(on_axis.begin(), on_axis.end(),
              [&](int u, int v) { return g.vertex(u).y > g.vertex(v).y; });
    if (on_axis.size() % 2 != 0)
        throw std::invalid_argument("symmetry_cut: odd number of on-axis vertices");

    MatchGraph h = g;
    if (!on_axis.empty() && h.vertex(on_axis.front()).color != Color::White) h.flip_colors();

    for (std::size_t i = 0; i < on_axis.size(); ++i) {
        int v = on_axis[i];
        bool is_a = i % 2 == 0;
        bool white = h.vertex(v).color == Color::White;
        // a-vertices keep their right edges when white; b-vertices when black.
        bool keep_right = is_a == white;
        for (int u : h.neighbors(v)) {
            const Rat& ux = h.vertex(u).x;
            if (ux == axis) continue;  // axis-axis edges are halved below
            if ((ux > axis) != keep_right) h.remove_edge(v, u);
        }
    }
    for (std::size_t i = 0; i < on_axis.size(); ++i)
        for (std::size_t j = i + 1; j < on_axis.size(); ++j)
            if (h.has_edge(on_axis[i], on_axis[j]))
                h.set_weight(on_axis[i], on_axis[j],
                             h.weight(on_axis[i], on_axis[j]) / 2);

    CutResult result;
    result.width = static_cast<int>(on_axis.size() / 2);
    for (const std::vector<int>& comp : connected_components(h)) {
        bool left = false, right = false;
        for (int v : comp) {
            if (h.vertex(v).x < axis) left = true;
            if (h.vertex(v).x > axis) right = true;
        }
        if (left && right)
            throw std::invalid_argument("symmetry_cut: a component still spans the axis");
        MatchGraph& side = right ? result.minus : result.plus;
        std::map<int, int> to_side;
        for (int v : comp) {
            const VertexData& d = h.vertex(v);
            to_side[v] = side.add_vertex(d.x, d.y, d.color);
        }
        for (int v : comp)
            for (int u : h.neighbors(v))
                if (v < u) side.add_edge(to_side.at(v), to_side.at(u), h.weight(v, u));
    }
    return result;
}

std::optional<std::vector<std::pair<int, int>>> first_matching(const MatchGraph& g) {
    std::vector<int> ids = g.vertex_ids();
    if (ids.size() % 2 != 0) return std::nullopt;
    std::map<int, int> mate;
    std::vector<std::pair<int, int>> picked;
    std::function<bool()> solve = [&]() {
        int v = -1;
        for (int id : ids)
            if (!mate.count(id)) {
                v = id;
                break;
            }
        if (v < 0) return true;
        for (int u : g.neighbors(v)) {
            if (mate.count(u)) continue;
            mate[v] = u;
            mate[u] = v;
            picked.emplace_back(std::min(u, v), std::max(u, v));
            if (solve()) return true;
            picked.pop_back();
            mate.erase(u);
            mate.erase(v);
        }
        return false;
    };
    if (!solve()) return std::nullopt;
    std::sort(picked.begin(), picked.end());
    return picked;
}

}  // namespace tilecount
