#pragma once

// Lattice regions whose tilings we count: Aztec diamonds/rectangles and their
// trimmed, quartered, holey and barred variants on the square lattice, plus
// semihexagons and quartered hexagons on the triangular lattice.
//
// Square-lattice conventions (the rotated dual-grid picture):
//   - A region of "order m by n" lives on rows r = 1..2m+1, numbered bottom-up.
//     Odd rows hold n cells (columns 1..n), even rows hold n+1 (columns
//     1..n+1).  Cell centers: odd rows at (c, r/2), even rows at (c-1/2, r/2),
//     so adjacent cells touch diagonally and the whole picture is plane.
//   - A cell in an odd row is adjacent to the even-row cells at columns c and
//     c+1 directly above and below it.
//   - Bipartition by row parity: odd rows are black, even rows white.
//
// Triangular-lattice conventions:
//   - Cells are unit up/down triangles addressed by (band t, left edge L):
//     t counts rows from the bottom (t = 0 is the bottom row) and L is the
//     left end of the triangle's horizontal span measured in half-units.
//     up(t,L) spans [L, L+2] with apex up; down(t,L) likewise with apex down.
//   - up(t,L) is adjacent to down(t,L-1), down(t,L+1) and down(t-1,L).
//   - Up-triangles are black, down-triangles white.

#include "tilecount/numeric.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace tilecount {

enum class Family {
    AztecDiamond,
    TrimmedAztecDiamond,
    AztecRectangle,
    TrimmedAztecRectangle,
    RE,
    RO,
    TE,
    TO,
    BarRE,
    BarRO,
    BarTE,
    BarTO,
    QuarteredR,
    QuarteredKa,
    QuarteredKna,
    QH,
    BarQH,
    SemiHexagon,
    HoleyAR,
    HoleyARBar,
};

// Family tag as used by the CLI and region-spec files ("AD", "BarRE", ...).
std::string family_name(Family f);
// Accepts the short tag or the long name ("AD" or "AztecDiamond").
Family family_from_name(const std::string& name);

struct RegionSpec {
    Family family;
    // Square families use (m, n); single-parameter families use n (the
    // quartered-diamond order also lands in n); SemiHexagon uses m for the
    // side length `a` and n for `b`.  `a` carries the hole/side labels
    // (the s-list for SemiHexagon).
    int m = 0;
    int n = 0;
    std::vector<int> a;
};

std::string spec_str(const RegionSpec& spec);

enum class CellKind : unsigned char { Square = 0, Up = 1, Down = 2 };

struct Cell {
    CellKind kind;
    int r;  // square: row (1-based, bottom-up); triangle: band t (0 = bottom)
    int c;  // square: column (1-based); triangle: left span end L

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Side { SW, SE, NW, NE };

struct Region {
    RegionSpec spec;
    std::vector<Cell> cells;  // sorted ascending, unique
    // Tile weights for cell pairs that differ from 1 (only the barred
    // quartered hexagons use this: their leftmost vertical lozenges weigh 1/2).
    std::map<std::pair<Cell, Cell>, Rat> tile_weights;
    // Labeled boundary sides, in label order; populated for the four base
    // rectangle families only (the derived families consume their sides
    // during construction).
    std::map<Side, std::vector<Cell>> sides;

    bool contains(const Cell& cell) const;
};

// Exact center of a cell in the plane drawing described above.
std::pair<Rat, Rat> cell_center(const Cell& cell);

// True for black cells (odd square rows / up-triangles).
bool cell_is_black(const Cell& cell);

// Cells adjacent to `cell` on its lattice (whether or not they lie in any
// particular region).
std::vector<Cell> cell_neighbors(const Cell& cell);

// Validates `spec` and builds the region.  Throws std::invalid_argument
// with a message naming the violated constraint.
Region build_region(const RegionSpec& spec);

// The labeled cells of a boundary side, in label order (1, 2, ...).
// Throws if the family does not define that side.
std::vector<Cell> side_cells(const Region& region, Side side);

}  // namespace tilecount
