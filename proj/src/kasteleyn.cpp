// Determinant-based counting on plane bipartite graphs.
//
// Pipeline per connected component: split along bridges until the pieces are
// 2-edge-connected, then run the signed-determinant computation on each
// piece.  The embedding given by the vertex positions is validated exactly
// (rational arithmetic, no epsilons) before any face is traced.

#include "tilecount/engines.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tilecount {

namespace {

struct Pt {
    Rat x, y;
};

// Sign of the cross product (a - o) x (b - o): +1 for a left turn o->a->b.
int orient(const Pt& o, const Pt& a, const Pt& b) {
    Rat c = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    if (c.is_zero()) return 0;
    return c < 0 ? -1 : 1;
}

bool within_box(const Pt& a, const Pt& b, const Pt& p) {
    const Rat& xlo = a.x < b.x ? a.x : b.x;
    const Rat& xhi = a.x < b.x ? b.x : a.x;
    const Rat& ylo = a.y < b.y ? a.y : b.y;
    const Rat& yhi = a.y < b.y ? b.y : a.y;
    return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi;
}

// Exact straight-line plane check: distinct positions, no vertex interior to
// an edge, no two edges properly crossing.  Collinear overlaps always put
// some vertex in the interior of some edge, so the first two checks cover
// them.
void validate_plane(const MatchGraph& g) {
    std::vector<int> ids = g.vertex_ids();
    auto pt = [&](int id) {
        const VertexData& v = g.vertex(id);
        return Pt{v.x, v.y};
    };
    std::map<std::pair<Rat, Rat>, int> seen;
    for (int id : ids) {
        Pt p = pt(id);
        auto [it, fresh] = seen.emplace(std::make_pair(p.x, p.y), id);
        if (!fresh) {
            std::ostringstream msg;
            msg << "kasteleyn engine: vertices " << it->second << " and " << id
                << " share a position";
            throw std::invalid_argument(msg.str());
        }
    }
    auto edges = g.edge_list();
    for (auto [a, b] : edges) {
        Pt pa = pt(a), pb = pt(b);
        for (int v : ids) {
            if (v == a || v == b) continue;
            Pt pv = pt(v);
            if (orient(pa, pb, pv) == 0 && within_box(pa, pb, pv)) {
                std::ostringstream msg;
                msg << "kasteleyn engine: vertex " << v << " lies on edge (" << a
                    << ", " << b << ")";
                throw std::invalid_argument(msg.str());
            }
        }
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Pt pa = pt(edges[i].first), pb = pt(edges[i].second);
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (edges[i].first == edges[j].first || edges[i].first == edges[j].second ||
                edges[i].second == edges[j].first || edges[i].second == edges[j].second)
                continue;
            Pt pc = pt(edges[j].first), pd = pt(edges[j].second);
            int o1 = orient(pa, pb, pc);
            int o2 = orient(pa, pb, pd);
            int o3 = orient(pc, pd, pa);
            int o4 = orient(pc, pd, pb);
            if (o1 * o2 < 0 && o3 * o4 < 0) {
                std::ostringstream msg;
                msg << "kasteleyn engine: edges (" << edges[i].first << ", "
                    << edges[i].second << ") and (" << edges[j].first << ", "
                    << edges[j].second << ") cross";
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

MatchGraph induced_subgraph(const MatchGraph& g, const std::vector<int>& keep) {
    MatchGraph h;
    std::map<int, int> remap;
    for (int id : keep) {
        const VertexData& v = g.vertex(id);
        remap[id] = h.add_vertex(v.x, v.y, v.color);
    }
    for (int id : keep) {
        for (int nb : g.neighbors(id)) {
            if (nb <= id) continue;
            auto it = remap.find(nb);
            if (it != remap.end()) h.add_edge(remap.at(id), it->second, g.weight(id, nb));
        }
    }
    return h;
}

// Bridges of a connected graph, via one depth-first pass.
std::vector<std::pair<int, int>> find_bridges(const MatchGraph& g) {
    std::map<int, int> disc, low;
    int timer = 0;
    std::vector<std::pair<int, int>> bridges;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        for (int u : g.neighbors(v)) {
            if (u == parent) {
                parent = -1;  // skip the tree edge once; no parallel edges exist
                continue;
            }
            auto it = disc.find(u);
            if (it != disc.end()) {
                low[v] = std::min(low[v], it->second);
            } else {
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] > disc[v]) bridges.push_back({v, u});
            }
        }
    };
    for (int id : g.vertex_ids()) {
        if (!disc.count(id)) dfs(id, -1);
    }
    return bridges;
}

// Signed-determinant count for a 2-edge-connected, balanced, even piece with
// strictly positive weights.
Rat fkt(const MatchGraph& g) {
    const std::vector<int> ids = g.vertex_ids();
    const int n = static_cast<int>(ids.size());
    std::map<int, int> idx;
    std::vector<Pt> pts(n);
    for (int i = 0; i < n; ++i) {
        idx[ids[i]] = i;
        const VertexData& v = g.vertex(ids[i]);
        pts[i] = {v.x, v.y};
    }

    // Counterclockwise rotation of the darts around each vertex.  Two darts
    // from one vertex never share a direction (the plane check rules that
    // out), so the comparator is a strict order.
    std::vector<std::vector<int>> ring(n);
    std::vector<std::map<int, int>> ring_pos(n);
    for (int i = 0; i < n; ++i) {
        for (int nb : g.neighbors(ids[i])) ring[i].push_back(idx.at(nb));
        std::sort(ring[i].begin(), ring[i].end(), [&](int p, int q) {
            Rat dxp = pts[p].x - pts[i].x, dyp = pts[p].y - pts[i].y;
            Rat dxq = pts[q].x - pts[i].x, dyq = pts[q].y - pts[i].y;
            int hp = (dyp < 0 || (dyp.is_zero() && dxp < 0)) ? 1 : 0;
            int hq = (dyq < 0 || (dyq.is_zero() && dxq < 0)) ? 1 : 0;
            if (hp != hq) return hp < hq;
            return dxp * dyq - dyp * dxq > 0;
        });
        for (std::size_t k = 0; k < ring[i].size(); ++k) ring_pos[i][ring[i][k]] = static_cast<int>(k);
    }

    // Trace face orbits: the dart after (u, v) is the clockwise-next dart at
    // v starting from (v, u), which walks each face with its interior on the
    // left.
    std::map<std::pair<int, int>, int> dart_face;
    std::vector<std::vector<std::pair<int, int>>> faces;
    for (int i = 0; i < n; ++i) {
        for (int start_nb : ring[i]) {
            if (dart_face.count({i, start_nb})) continue;
            int fid = static_cast<int>(faces.size());
            faces.emplace_back();
            std::pair<int, int> cur{i, start_nb};
            do {
                dart_face[cur] = fid;
                faces[fid].push_back(cur);
                int v = cur.second;
                int k = ring_pos[v].at(cur.first);
                int deg = static_cast<int>(ring[v].size());
                cur = {v, ring[v][(k + deg - 1) % deg]};
            } while (cur != std::make_pair(i, start_nb));
        }
    }

    const int nf = static_cast<int>(faces.size());
    int outer = -1;
    for (int f = 0; f < nf; ++f) {
        Rat area2 = 0;
        for (auto [u, v] : faces[f]) area2 += pts[u].x * pts[v].y - pts[v].x * pts[u].y;
        if (area2.is_zero()) throw std::logic_error("fkt: degenerate face");
        if (area2 < 0) {
            if (outer >= 0) throw std::logic_error("fkt: two clockwise faces");
            outer = f;
        }
    }
    if (outer < 0) throw std::logic_error("fkt: no outer face");

    std::map<std::pair<int, int>, std::pair<int, int>> edge_faces;
    std::vector<std::vector<std::pair<int, int>>> face_edges(nf);
    for (int f = 0; f < nf; ++f) {
        for (auto [u, v] : faces[f]) {
            std::pair<int, int> key{std::min(u, v), std::max(u, v)};
            face_edges[f].push_back(key);
            auto [it, fresh] = edge_faces.emplace(key, std::make_pair(f, -1));
            if (!fresh) {
                if (it->second.first == f) throw std::logic_error("fkt: bridge reached the face stage");
                it->second.second = f;
            }
        }
    }

    std::vector<int> depth(nf, -1);
    std::vector<std::pair<int, int>> parent_edge(nf, {-1, -1});
    std::queue<int> bfs;
    depth[outer] = 0;
    bfs.push(outer);
    while (!bfs.empty()) {
        int f = bfs.front();
        bfs.pop();
        for (const auto& key : face_edges[f]) {
            auto [f1, f2] = edge_faces.at(key);
            int other = f1 == f ? f2 : f1;
            if (depth[other] < 0) {
                depth[other] = depth[f] + 1;
                parent_edge[other] = key;
                bfs.push(other);
            }
        }
    }

    // Fix bounded faces from the deepest inward: a face bounded by 2l edges
    // must carry sign product (-1)^(l+1), and only its parent edge (shared
    // with a strictly shallower face) is still free when its turn comes.
    std::vector<int> order;
    for (int f = 0; f < nf; ++f) {
        if (f != outer) order.push_back(f);
    }
    std::sort(order.begin(), order.end(), [&](int f, int h) {
        if (depth[f] != depth[h]) return depth[f] > depth[h];
        return f < h;
    });
    std::map<std::pair<int, int>, int> esign;
    for (const auto& [key, ff] : edge_faces) esign[key] = 1;
    auto face_target = [&](int f) {
        std::size_t l = face_edges[f].size() / 2;
        if (face_edges[f].size() % 2 != 0) throw std::logic_error("fkt: odd face");
        return l % 2 == 1 ? 1 : -1;
    };
    auto face_product = [&](int f) {
        int p = 1;
        for (const auto& key : face_edges[f]) p *= esign.at(key);
        return p;
    };
    for (int f : order) {
        if (face_product(f) != face_target(f)) esign.at(parent_edge[f]) *= -1;
    }
    for (int f : order) {
        if (face_product(f) != face_target(f)) throw std::logic_error("fkt: sign assignment failed");
    }

    // Biadjacency determinant over the signed, denominator-cleared weights.
    std::vector<int> blacks, whites;
    for (int i = 0; i < n; ++i) {
        (g.vertex(ids[i]).color == Color::Black ? blacks : whites).push_back(i);
    }
    std::map<int, int> brow, wcol;
    for (std::size_t i = 0; i < blacks.size(); ++i) brow[blacks[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < whites.size(); ++i) wcol[whites[i]] = static_cast<int>(i);
    Int lcm_den = 1;
    for (auto [u, v] : g.edge_list()) lcm_den = boost::multiprecision::lcm(lcm_den, den(g.weight(u, v)));
    IntMatrix m(blacks.size(), whites.size());
    for (auto [u, v] : g.edge_list()) {
        int iu = idx.at(u), iv = idx.at(v);
        int bi = g.vertex(u).color == Color::Black ? iu : iv;
        int wi = bi == iu ? iv : iu;
        Rat scaled = g.weight(u, v) * lcm_den;
        std::pair<int, int> key{std::min(iu, iv), std::max(iu, iv)};
        m.at(brow.at(bi), wcol.at(wi)) = esign.at(key) * num(scaled);
    }
    Int d = det_exact(m);
    if (d < 0) d = -d;
    Int denom = 1;
    for (std::size_t i = 0; i < blacks.size(); ++i) denom *= lcm_den;
    return Rat(d) / Rat(denom);
}

Rat solve_graph(const MatchGraph& g);

// Recursive split along bridges; `g` is one nonempty connected component.
Rat solve_component(const MatchGraph& g) {
    std::size_t n = g.vertex_count();
    if (n % 2 != 0) return 0;
    int balance = 0;
    for (int id : g.vertex_ids()) balance += g.vertex(id).color == Color::Black ? 1 : -1;
    if (balance != 0) return 0;

    auto bridges = find_bridges(g);
    if (bridges.empty()) return fkt(g);

    auto [u, v] = bridges.front();
    Rat w = g.weight(u, v);
    MatchGraph cut = g;
    cut.remove_edge(u, v);
    auto comps = connected_components(cut);
    if (comps.size() != 2) throw std::logic_error("bridge removal did not split the component");
    std::vector<int> side_u = std::count(comps[0].begin(), comps[0].end(), u) ? comps[0] : comps[1];
    std::vector<int> side_v = std::count(comps[0].begin(), comps[0].end(), u) ? comps[1] : comps[0];
    if (side_u.size() % 2 == 1) {
        // Every matching uses the bridge; dropping its endpoints can
        // disconnect a side, so recurse through the component splitter.
        side_u.erase(std::find(side_u.begin(), side_u.end(), u));
        side_v.erase(std::find(side_v.begin(), side_v.end(), v));
        Rat left = solve_graph(induced_subgraph(cut, side_u));
        if (left.is_zero()) return 0;
        return w * left * solve_graph(induced_subgraph(cut, side_v));
    }
    Rat left = solve_component(induced_subgraph(cut, side_u));
    if (left.is_zero()) return 0;
    return left * solve_component(induced_subgraph(cut, side_v));
}

// Product over connected components; 1 for the empty graph.
Rat solve_graph(const MatchGraph& g) {
    Rat total = 1;
    for (const auto& comp : connected_components(g)) {
        Rat part = solve_component(induced_subgraph(g, comp));
        if (part.is_zero()) return 0;
        total *= part;
    }
    return total;
}

}  // namespace

Rat count_kasteleyn(const MatchGraph& g) {
    for (auto [u, v] : g.edge_list()) {
        if (g.weight(u, v) < 0)
            throw std::invalid_argument("kasteleyn engine requires positive edge weights");
    }
    validate_plane(g);
    return solve_graph(g);
}

}  // namespace tilecount
