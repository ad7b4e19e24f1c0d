#pragma once

// Matching-preserving local graph transformations.  Every rule returns the
// rewritten graph together with a step record whose factor satisfies
// M(before) = factor * M(after), exactly.

#include "tilecount/graph.hpp"
#include "tilecount/numeric.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tilecount {

struct RewriteStep {
    std::string rule;       // vertex-split, star, spider-a, spider-b, spider-c,
                            // double-4-cycle, forced-edge
    std::vector<int> site;  // vertex ids consumed by the rule
    Rat factor;             // M(before) = factor * M(after); always > 0
};

struct RewriteResult {
    MatchGraph graph;
    RewriteStep step;
};

// Splits v into v' (keeping the edges into h) and v'' (keeping the rest),
// joined through a fresh vertex x by two unit edges.  The three new vertices
// get ids in the order v', v'', x.  Factor 1.
RewriteResult vertex_split(const MatchGraph& g, int v, const std::vector<int>& h);

// Multiplies every edge at v by t > 0.  Factor 1/t.
RewriteResult star_scale(const MatchGraph& g, int v, const Rat& t);

// Urban renewal on an inner 4-cycle p0-p1-p2-p3 whose vertices each have
// exactly one outside neighbor (their corner), reached by a unit edge.  With
// x = w(p0,p1), y = w(p1,p2), z = w(p2,p3), t = w(p3,p0) and D = xz + yt,
// the inner cycle is deleted and the corners are joined in a 4-cycle with
// weights z/D, t/D, x/D, y/D.  Factor D.
RewriteResult urban_renewal(const MatchGraph& g, const std::vector<int>& cycle);

// Variant on a path p-q-r (weights x, y) whose vertices carry unit legs to
// outside corners A, B, C and nothing else.  The path is deleted, a fresh
// vertex D appears, and A,B,C,D are joined in a 4-cycle with weights
// 1/(2x), 1/(2y), x/2, y/2.  Factor 2.
RewriteResult urban_renewal_b(const MatchGraph& g, const std::vector<int>& path);

// Variant on a single edge p-q (weight x) with unit legs A-p and q-B and no
// other incidences.  The edge is deleted, fresh vertices C and D appear, and
// A,B,C,D are joined in a 4-cycle with weights 1/(2x), 1/2, x/2, 1/2.
// Factor 2.
RewriteResult urban_renewal_c(const MatchGraph& g, const std::vector<int>& edge);

// Two 4-cycles a-b1-b2-b3 and a-c1-c2-c3 sharing a, where a has exactly the
// four cycle edges and b1, b2, c1, c2 have only their cycle edges; requires
// w(a,b1) w(b2,b3) = w(b1,b2) w(b3,a) and the same on the c side.  Deletes
// b1, b2, c1, c2.  Factor 2 w(b1,b2) w(c1,c2).
RewriteResult double_4cycle(const MatchGraph& g, int a, const std::vector<int>& b,
                            const std::vector<int>& c);

// reduce_forced as a script step.  Factor = product of forced edge weights.
RewriteResult forced_edges(const MatchGraph& g);

// One parsed script entry; `ids` holds the site list in rule order
// (vertex-split: v then h; double-4-cycle: a, b1..b3, c1..c3).
struct ScriptStep {
    std::string rule;
    std::vector<int> ids;
    Rat t = 1;  // star only
};

// JSON array of steps: {"rule": "vertex-split", "v": 0, "h": [2,3]},
// {"rule": "star", "v": 13, "t": "2"}, {"rule": "spider-a", "cycle": [...]},
// {"rule": "spider-b", "path": [...]}, {"rule": "spider-c", "edge": [...]},
// {"rule": "double-4-cycle", "a": 0, "b": [...], "c": [...]},
// {"rule": "forced-edge"}.  Unknown rules or fields are rejected.
std::vector<ScriptStep> parse_script(std::istream& in);
std::vector<ScriptStep> parse_script_string(const std::string& text);

struct ReplayResult {
    MatchGraph graph;
    Rat factor;  // product of the step factors
    std::vector<RewriteStep> steps;
};

// Applies the steps in order; M(g) = factor * M(result).  A failing step
// reports its index and rule.
ReplayResult replay_script(const MatchGraph& g, const std::vector<ScriptStep>& steps);

}  // namespace tilecount
