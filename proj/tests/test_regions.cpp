// Region construction: cell sets, boundary sides, tile weights, and the
// validation and JSON-parsing paths.

#include "tilecount/region.hpp"
#include "tilecount/spec_json.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace tilecount;

namespace {

RegionSpec mk(Family f, int m, int n, std::vector<int> a = {}) {
    RegionSpec s;
    s.family = f;
    s.m = m;
    s.n = n;
    s.a = std::move(a);
    return s;
}

}  // namespace

TEST_CASE("family names round-trip") {
    for (const char* tag : {"AD", "TA", "AR", "TR", "R", "Ka", "Kna", "RE", "RO", "TE", "TO",
                            "BarRE", "BarRO", "BarTE", "BarTO", "QH", "BarQH", "SH", "HoleyAR",
                            "HoleyARBar"})
        CHECK(family_name(family_from_name(tag)) == tag);
    CHECK(family_from_name("AztecDiamond") == Family::AztecDiamond);
    CHECK(family_from_name("SemiHexagon") == Family::SemiHexagon);
    CHECK_THROWS_AS(family_from_name("XYZ"), std::invalid_argument);
}

TEST_CASE("spec strings") {
    CHECK(spec_str(mk(Family::AztecDiamond, 0, 2)) == "AD(2)");
    CHECK(spec_str(mk(Family::AztecRectangle, 2, 3)) == "AR(2,3)");
    CHECK(spec_str(mk(Family::QuarteredR, 0, 5)) == "R(5)");
    CHECK(spec_str(mk(Family::RE, 3, 4, {1, 3})) == "RE(3,4,[1,3])");
    CHECK(spec_str(mk(Family::SemiHexagon, 2, 1, {1, 3})) == "SH(2,1,[1,3])");
}

TEST_CASE("cell geometry and bipartition") {
    Cell odd{CellKind::Square, 1, 2};
    CHECK(cell_center(odd) == std::pair<Rat, Rat>{2, Rat(1, 2)});
    CHECK(cell_is_black(odd));

    Cell even{CellKind::Square, 2, 1};
    CHECK(cell_center(even) == std::pair<Rat, Rat>{Rat(1, 2), 1});
    CHECK_FALSE(cell_is_black(even));

    Cell up{CellKind::Up, 0, 0};
    CHECK(cell_center(up) == std::pair<Rat, Rat>{Rat(1, 2), Rat(1, 3)});
    CHECK(cell_is_black(up));

    Cell down{CellKind::Down, 0, 1};
    CHECK(cell_center(down) == std::pair<Rat, Rat>{1, Rat(2, 3)});
    CHECK_FALSE(cell_is_black(down));

    // Square cells touch four cells of the other row parity; triangles three
    // of the other orientation.
    CHECK(cell_neighbors(odd).size() == 4);
    CHECK(cell_neighbors(even).size() == 4);
    auto up_nbs = cell_neighbors(up);
    REQUIRE(up_nbs.size() == 3);
    for (const Cell& nb : up_nbs) CHECK(nb.kind == CellKind::Down);
    CHECK(std::count(up_nbs.begin(), up_nbs.end(), Cell{CellKind::Down, 0, 1}) == 1);
    CHECK(std::count(up_nbs.begin(), up_nbs.end(), Cell{CellKind::Down, -1, 0}) == 1);
}

TEST_CASE("diamond and rectangle cell counts") {
    CHECK(build_region(mk(Family::AztecDiamond, 0, 1)).cells.size() == 4);
    CHECK(build_region(mk(Family::AztecDiamond, 0, 2)).cells.size() == 12);
    CHECK(build_region(mk(Family::AztecDiamond, 0, 5)).cells.size() == 60);
    CHECK(build_region(mk(Family::AztecRectangle, 1, 3)).cells.size() == 10);
    CHECK(build_region(mk(Family::TrimmedAztecDiamond, 0, 3)).cells.size() == 18);
    CHECK(build_region(mk(Family::TrimmedAztecRectangle, 1, 3)).cells.size() == 6);

    Region ad2 = build_region(mk(Family::AztecDiamond, 0, 2));
    CHECK(ad2.contains(Cell{CellKind::Square, 1, 1}));
    CHECK_FALSE(ad2.contains(Cell{CellKind::Square, 6, 1}));
    CHECK(std::is_sorted(ad2.cells.begin(), ad2.cells.end()));
    CHECK(ad2.tile_weights.empty());
}

TEST_CASE("rectangle boundary sides") {
    Region ar = build_region(mk(Family::AztecRectangle, 2, 3));
    CHECK(side_cells(ar, Side::SE).size() == 3);
    CHECK(side_cells(ar, Side::SW).size() == 2);
    CHECK(side_cells(ar, Side::NW).size() == 3);
    CHECK(side_cells(ar, Side::NE).size() == 2);
    // SE labels run along the bottom row; SW up the first even column.
    CHECK(side_cells(ar, Side::SE).front() == Cell{CellKind::Square, 1, 1});
    CHECK(side_cells(ar, Side::SE).back() == Cell{CellKind::Square, 1, 3});
    CHECK(side_cells(ar, Side::SW) ==
          std::vector<Cell>{{CellKind::Square, 2, 1}, {CellKind::Square, 4, 1}});

    Region tr = build_region(mk(Family::TrimmedAztecRectangle, 2, 3));
    CHECK(side_cells(tr, Side::SE).size() == 3);
    CHECK(side_cells(tr, Side::SW).size() == 2);

    Region quartered = build_region(mk(Family::RE, 1, 3, {2}));
    CHECK_THROWS_AS(side_cells(quartered, Side::SE), std::invalid_argument);
}

TEST_CASE("quartered rectangles") {
    CHECK(build_region(mk(Family::RE, 1, 3, {2})).cells.size() == 8);
    // RE/TO choose among the odd labels (ceil(m/2) of them), RO/TE among the
    // even ones (floor(m/2)).
    CHECK_NOTHROW(build_region(mk(Family::RE, 2, 3, {1})));
    CHECK_NOTHROW(build_region(mk(Family::RO, 2, 3, {1})));
    CHECK_NOTHROW(build_region(mk(Family::TE, 3, 4, {2})));
    CHECK_NOTHROW(build_region(mk(Family::TO, 3, 4, {1, 3})));
    CHECK_THROWS_WITH_AS(build_region(mk(Family::RE, 3, 4, {1})),
                         "RE: a-list must have exactly 2 entries (got 1)", std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_region(mk(Family::TO, 1, 2, {3})),
                         "TO: a-list entries must be <= 2 (got 3)", std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_region(mk(Family::RE, 1, 2, {2, 1})),
                         "RE: a-list must have exactly 1 entries (got 2)", std::invalid_argument);
    CHECK_THROWS_AS(build_region(mk(Family::RO, 1, 3, {2})), std::invalid_argument);
}

TEST_CASE("barred quartered rectangles") {
    // Label ranges shrink by one on the non-trimmed barred families.
    CHECK_NOTHROW(build_region(mk(Family::BarRE, 2, 3, {2})));
    CHECK_THROWS_WITH_AS(build_region(mk(Family::BarRE, 2, 3, {3})),
                         "BarRE: a-list entries must be <= 2 (got 3)", std::invalid_argument);
    CHECK_NOTHROW(build_region(mk(Family::BarTE, 2, 3, {3})));
    CHECK_THROWS_AS(build_region(mk(Family::BarTO, 3, 1, {1})), std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_region(mk(Family::BarRO, 1, 1, {1})), "BarRO: requires k < n",
                         std::invalid_argument);
}

TEST_CASE("one-parameter quartered families") {
    CHECK(build_region(mk(Family::QuarteredR, 0, 5)).cells.size() == 15);
    CHECK(build_region(mk(Family::QuarteredKa, 0, 1)).cells.empty());
    CHECK(build_region(mk(Family::QuarteredKa, 0, 3)).cells.empty());
    CHECK(build_region(mk(Family::QuarteredKa, 0, 5)).cells.size() == 6);
    CHECK_FALSE(build_region(mk(Family::QuarteredKna, 0, 4)).cells.empty());
    CHECK_THROWS_WITH_AS(build_region(mk(Family::QuarteredR, 0, 0)), "R: order must be >= 1",
                         std::invalid_argument);
}

TEST_CASE("quartered hexagons and weights") {
    CHECK(build_region(mk(Family::QH, 3, 4, {1, 3})).cells.size() == 16);

    Region barred = build_region(mk(Family::BarQH, 2, 3, {1}));
    REQUIRE_FALSE(barred.tile_weights.empty());
    for (const auto& [cells, w] : barred.tile_weights) CHECK(w == Rat(1, 2));

    CHECK(build_region(mk(Family::QH, 3, 4, {1, 3})).tile_weights.empty());
    CHECK_THROWS_WITH_AS(build_region(mk(Family::BarQH, 4, 2, {1, 2})), "BarQH: requires k < n",
                         std::invalid_argument);
}

TEST_CASE("semihexagons") {
    Region sh = build_region(mk(Family::SemiHexagon, 2, 1, {1, 3}));
    CHECK(sh.cells.size() == 6);
    int ups = 0, downs = 0;
    for (const Cell& cell : sh.cells) (cell.kind == CellKind::Up ? ups : downs)++;
    CHECK(ups == 3);
    CHECK(downs == 3);
    CHECK_THROWS_WITH_AS(build_region(mk(Family::SemiHexagon, 2, 1, {1})),
                         "SH: s-list must have exactly 2 entries (got 1)", std::invalid_argument);
    CHECK_THROWS_AS(build_region(mk(Family::SemiHexagon, 0, 1, {})), std::invalid_argument);
}

TEST_CASE("holey rectangles") {
    CHECK(build_region(mk(Family::HoleyAR, 1, 2, {1})).cells.size() == 6);
    CHECK_THROWS_WITH_AS(build_region(mk(Family::HoleyAR, 2, 3, {1, 4})),
                         "HoleyAR: a-list entries must be <= 3 (got 4)", std::invalid_argument);
    // The barred variant drops the bottom row and punches holes in the first
    // even row, whose labels run to n + 1.
    CHECK_NOTHROW(build_region(mk(Family::HoleyARBar, 2, 3, {1, 4})));
    CHECK_THROWS_AS(build_region(mk(Family::HoleyARBar, 2, 3, {1, 5})), std::invalid_argument);
}

TEST_CASE("region spec JSON") {
    RegionSpec re = parse_region_spec(R"({"family": "RE", "params": {"m": 3, "n": 4, "a": [1, 3]}})");
    CHECK(spec_str(re) == "RE(3,4,[1,3])");

    CHECK(spec_str(parse_region_spec(R"({"family": "AD", "params": {"n": 2}})")) == "AD(2)");
    CHECK(spec_str(parse_region_spec(R"({"family": "AztecRectangle", "params": {"m": 1, "n": 3}})")) ==
          "AR(1,3)");
    CHECK(spec_str(parse_region_spec(R"({"family": "R", "params": {"order": 5}})")) == "R(5)");
    CHECK(spec_str(parse_region_spec(R"({"family": "R", "params": {"n": 5}})")) == "R(5)");
    CHECK(spec_str(parse_region_spec(R"({"family": "SH", "params": {"a": 2, "b": 1, "s": [1, 3]}})")) ==
          "SH(2,1,[1,3])");
    CHECK(spec_str(parse_region_spec(R"({"family": "QH", "params": {"m": 3, "n": 4}})")) ==
          "QH(3,4,[])");

    CHECK_THROWS_WITH_AS(
        parse_region_spec(R"({"family": "RE", "params": {"m": 3, "n": 4, "a": [1], "z": 1}})"),
        "region spec: unknown key \"z\" in params", std::invalid_argument);
    CHECK_THROWS_AS(parse_region_spec(R"({"family": "R", "params": {"order": 5, "n": 5}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_region_spec(R"({"family": "AD", "params": {"n": 2.5}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_region_spec(R"({"family": "AD", "params": {}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_region_spec(R"({"params": {"n": 2}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_region_spec("not json"), std::invalid_argument);
}
