#pragma once

// Weighted bipartite graphs with exact rational vertex positions, plus the
// structural operations the counting engines and graph surgeries build on:
// dual graphs of regions, forced-edge reduction, connected sums, and the
// symmetry cut along a vertical axis.
//
// Vertex ids are stable: deletions never renumber, new vertices always get
// the smallest id never used before.  Rewrite scripts rely on this.

#include "tilecount/numeric.hpp"
#include "tilecount/region.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tilecount {

enum class Color : unsigned char { Black, White };

struct VertexData {
    Rat x, y;
    Color color;
};

class MatchGraph {
public:
    int add_vertex(Rat x, Rat y, Color color);
    // Endpoints must exist, be distinct, carry opposite colors, and not be
    // joined already; weight must be nonzero.
    void add_edge(int u, int v, const Rat& w);
    void remove_vertex(int v);  // drops all incident edges
    void remove_edge(int u, int v);
    void set_weight(int u, int v, const Rat& w);

    bool has_vertex(int v) const { return verts_.count(v) != 0; }
    bool has_edge(int u, int v) const;
    const Rat& weight(int u, int v) const;
    const VertexData& vertex(int v) const;

    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const;
    std::size_t degree(int v) const;
    std::vector<int> neighbors(int v) const;      // ascending
    std::vector<int> vertex_ids() const;          // ascending
    std::vector<std::pair<int, int>> edge_list() const;  // (u < v), lexicographic

    // Flips every vertex color (the matching structure is color-symmetric).
    void flip_colors();

    int peek_next_id() const { return next_id_; }

private:
    friend MatchGraph parse_graph(std::istream& in);
    std::map<int, VertexData> verts_;
    std::map<int, std::map<int, Rat>> adj_;
    int next_id_ = 0;
};

// Dual graph of a region: one vertex per cell (ids 0..N-1 in the region's
// sorted cell order) at the cell's center, edges between adjacent cells
// weighted by the region's tile weights.
MatchGraph dual_graph(const Region& region);

// Line-oriented dump, bit-exact and sorted:
//   vertex <id> <x> <y> <b|w>
//   edge <u> <v> <p/q>
std::string dump_graph(const MatchGraph& g);
MatchGraph parse_graph(std::istream& in);
MatchGraph parse_graph_string(const std::string& text);

// Repeatedly matches pendant (degree-1) vertices along their unique edge,
// removing both endpoints and accumulating the edge weights.  The matching
// generating function satisfies M(g) = factor * M(reduced).  Isolated
// vertices are kept (they witness M = 0 downstream).
struct ReduceResult {
    MatchGraph graph;
    Rat factor;
};
ReduceResult reduce_forced(const MatchGraph& g);

// Vertex sets of connected components, each ascending; components ordered by
// smallest member.
std::vector<std::vector<int>> connected_components(const MatchGraph& g);

// Glues g2 onto g1 by identifying marks2[i] with marks1[i].  The identified
// pairs must match colorwise after flipping all of g2's colors if needed;
// identification must not create parallel edges.  Unmatched g2 vertices get
// fresh ids (in g2's id order); g2's positions are translated so that
// marks2[0] lands on marks1[0].
MatchGraph connected_sum(const MatchGraph& g1, const std::vector<int>& marks1,
                         const MatchGraph& g2, const std::vector<int>& marks2);

// Cuts a graph that is mirror-symmetric about the vertical line x = axis.
// The on-axis vertices (say 2w of them, ordered top to bottom as
// a_1, b_1, a_2, b_2, ...) keep only their right or left edges according to
// their color after recoloring the graph so a_1 is white: a-vertices keep
// right edges when white, b-vertices keep right edges when black.  Edges
// between on-axis vertices have their weight halved.  The pieces left and
// right of the axis then satisfy M(g) = 2^w * M(plus) * M(minus), with
// `plus` the left piece.
struct CutResult {
    MatchGraph plus;
    MatchGraph minus;
    int width = 0;  // w = half the number of on-axis vertices
};
CutResult symmetry_cut(const MatchGraph& g, const Rat& axis);

// First perfect matching found by deterministic backtracking (smallest
// vertex, smallest neighbor first), as sorted (u, v) pairs with u < v;
// nullopt if the graph has none.  Used for render overlays.
std::optional<std::vector<std::pair<int, int>>> first_matching(const MatchGraph& g);

}  // namespace tilecount
