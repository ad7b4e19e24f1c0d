#pragma once

// Closed-form counts, the product identities relating the region families,
// and the determinant identity used by the random checks.  Everything here
// is independent of the counting engines, so formula-vs-engine comparisons
// are genuine cross-checks.

#include "tilecount/numeric.hpp"
#include "tilecount/region.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace tilecount {

// The four fundamental product formulas over a nonempty strictly increasing
// list of positive integers (n = |a|):
//   E(a)    = 2^(n^2) / (0!2!...(2n-2)!) * prod_{i<j}(a_j-a_i) * prod_{i<j}(a_i+a_j-1)
//   O(a)    = 2^(n^2) / (1!3!...(2n-1)!) * prod_{i<j}(a_j-a_i) * prod_{i<=j}(a_i+a_j-1)
//   Ebar(a) = 2^(n^2) * prod a_i / (0!2!...(2n-2)!) * prod_{i<j}(a_j-a_i) * prod_{i<=j}(a_i+a_j)
//   Obar(a) = 2^(n^2) * prod a_i / (1!3!...(2n-1)!) * prod_{i<j}(a_j-a_i) * prod_{i<j}(a_i+a_j)
Rat eval_E(const std::vector<int>& a);
Rat eval_O(const std::vector<int>& a);
Rat eval_Ebar(const std::vector<int>& a);
Rat eval_Obar(const std::vector<int>& a);

// Exact closed-form matching count of a region.  Covers every family except
// TA and TR, which have no closed form here and throw std::invalid_argument.
// AztecRectangle counts 0 unless m == n.
Rat closed_form(const RegionSpec& spec);

// E(2,4,...,2n) and O(1,3,...,2n-1) both equal
// 2^(n(3n-1)/2) * prod_{i<j<=n} (2i+2j-1)/(i+j-1).
struct Eq9Report {
    Rat even_side, odd_side, product;
    bool pass = false;
};
Eq9Report check_eq9(int n);

// det over the matrix with entries
//   prod_{t=j+1..n}(x_i - a_t - c) * prod_{t=j+1..n}(x_i + a_t)
// equals prod_{i<j} (x_j - x_i)(c - x_i - x_j).  a[0] never enters.
struct KratReport {
    Int det, product;
    bool pass = false;
};
KratReport check_krattenthaler(const std::vector<Int>& x, const std::vector<Int>& a, const Int& c);

// Product of pairwise differences over the sorted order of a nonempty set.
Int delta(std::vector<int> s);

// Named identities between region counts, checked with the counting engines
// on both sides (never with closed forms).
const std::vector<std::string>& identity_tags();

struct IdentityReport {
    std::string description;
    Rat lhs, rhs;    // rhs includes the predicted factor
    Rat factor;
    bool pass = false;
};
IdentityReport check_identity(const std::string& tag, int k, int n, const std::vector<int>& a);

// All (k, n, a) triples valid for the tag with k <= kmax, n <= nmax.
std::vector<std::tuple<int, int, std::vector<int>>> identity_instances(const std::string& tag,
                                                                       int kmax, int nmax);

// Closed form versus engine (and for QH also versus the lattice-path
// determinant) across a family sweep.  For the single-parameter families the
// sweep runs over orders 1..nmax; for labeled families it runs over
// k <= kmax, both row parities, n <= nmax, and every admissible label list.
struct VerifyCase {
    std::string description;
    Rat formula, engine;
    bool pass = false;
};
std::vector<VerifyCase> verify_family(Family family, int kmax, int nmax);

}  // namespace tilecount
