#pragma once

// The three independent counting engines.  They share no mathematics: brute
// force enumerates matchings directly, the Kasteleyn engine evaluates a
// signed determinant over a plane embedding, and the lattice-path engine
// evaluates a binomial determinant.  Tests and the verify/identity commands
// lean on that independence.

#include "tilecount/graph.hpp"
#include "tilecount/numeric.hpp"
#include "tilecount/region.hpp"

namespace tilecount {

// Exact matching generating function by branch-and-prune enumeration
// (pendant-edge propagation, component splitting, minimum-degree branching).
// M(empty) = 1; odd or unbalanced graphs give 0.  Throws std::runtime_error
// when the graph exceeds `guard` vertices.
Rat count_brute(const MatchGraph& g, std::size_t guard = 40);

// Exact matching generating function via a Kasteleyn-signed biadjacency
// determinant.  Requires the vertex positions to be a plane straight-line
// embedding (checked exactly; throws std::invalid_argument otherwise).
// Bridges are split off first; each bridgeless piece gets its bounded faces
// signed so that a face bounded by 2*l edges carries sign product (-1)^(l+1).
Rat count_kasteleyn(const MatchGraph& g);

// Lattice-path determinant for the quartered-hexagon family only.
// QH(2k-1, n, a) uses entries C(a_i + j - 2, 2j - 2); QH(2k, n, a) uses
// C(a_i + j - 1, 2j - 1).  Throws std::invalid_argument for other families.
IntMatrix lgv_matrix(const RegionSpec& spec);
Int count_lgv(const RegionSpec& spec);

// Brute force when the graph is small enough, Kasteleyn otherwise.
Rat count_auto(const MatchGraph& g, std::size_t brute_limit = 40);

}  // namespace tilecount
