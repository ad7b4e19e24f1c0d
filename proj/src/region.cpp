#include "tilecount/region.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tilecount {

namespace {

const std::pair<Family, const char*> kFamilyNames[] = {
    {Family::AztecDiamond, "AD"},
    {Family::TrimmedAztecDiamond, "TA"},
    {Family::AztecRectangle, "AR"},
    {Family::TrimmedAztecRectangle, "TR"},
    {Family::RE, "RE"},
    {Family::RO, "RO"},
    {Family::TE, "TE"},
    {Family::TO, "TO"},
    {Family::BarRE, "BarRE"},
    {Family::BarRO, "BarRO"},
    {Family::BarTE, "BarTE"},
    {Family::BarTO, "BarTO"},
    {Family::QuarteredR, "R"},
    {Family::QuarteredKa, "Ka"},
    {Family::QuarteredKna, "Kna"},
    {Family::QH, "QH"},
    {Family::BarQH, "BarQH"},
    {Family::SemiHexagon, "SH"},
    {Family::HoleyAR, "HoleyAR"},
    {Family::HoleyARBar, "HoleyARBar"},
};

const std::pair<const char*, Family> kFamilyAliases[] = {
    {"AztecDiamond", Family::AztecDiamond},
    {"TrimmedAztecDiamond", Family::TrimmedAztecDiamond},
    {"AztecRectangle", Family::AztecRectangle},
    {"TrimmedAztecRectangle", Family::TrimmedAztecRectangle},
    {"QuarteredR", Family::QuarteredR},
    {"QuarteredKa", Family::QuarteredKa},
    {"QuarteredKna", Family::QuarteredKna},
    {"SemiHexagon", Family::SemiHexagon},
};

[[noreturn]] void fail(const std::string& ctx, const std::string& what) {
    throw std::invalid_argument(ctx + ": " + what);
}

void check_alist(const std::string& ctx, const std::vector<int>& a, std::size_t arity,
                 int max_label, const char* list_name = "a") {
    if (a.size() != arity) {
        std::ostringstream os;
        os << list_name << "-list must have exactly " << arity << " entries (got " << a.size()
           << ")";
        fail(ctx, os.str());
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1) fail(ctx, std::string(list_name) + "-list entries must be >= 1");
        if (i > 0 && a[i] <= a[i - 1])
            fail(ctx, std::string(list_name) + "-list must be strictly increasing");
    }
    if (!a.empty() && a.back() > max_label) {
        std::ostringstream os;
        os << list_name << "-list entries must be <= " << max_label << " (got " << a.back()
           << ")";
        fail(ctx, os.str());
    }
}

Cell sq(int r, int c) { return Cell{CellKind::Square, r, c}; }
Cell up_cell(int t, int left) { return Cell{CellKind::Up, t, left}; }
Cell down_cell(int t, int left) { return Cell{CellKind::Down, t, left}; }

// Aztec rectangle of order m x n with all four labeled sides.
Region make_aztec_rectangle(Family family, int m, int n) {
    Region region;
    region.spec = RegionSpec{family, m, n, {}};
    for (int r = 1; r <= 2 * m + 1; ++r) {
        int width = (r % 2 == 1) ? n : n + 1;
        for (int c = 1; c <= width; ++c) region.cells.push_back(sq(r, c));
    }
    std::sort(region.cells.begin(), region.cells.end());
    auto& sides = region.sides;
    for (int c = 1; c <= n; ++c) sides[Side::SE].push_back(sq(1, c));
    for (int r = 2; r <= 2 * m; r += 2) sides[Side::SW].push_back(sq(r, 1));
    for (int c = 1; c <= n; ++c) sides[Side::NW].push_back(sq(2 * m + 1, c));
    for (int r = 2; r <= 2 * m; r += 2) sides[Side::NE].push_back(sq(r, n + 1));
    return region;
}

// Trimmed variant: the top row and the rightmost cell of every even row are
// gone, so all 2m remaining rows hold exactly n cells.
Region make_trimmed_rectangle(Family family, int m, int n) {
    Region region;
    region.spec = RegionSpec{family, m, n, {}};
    for (int r = 1; r <= 2 * m; ++r)
        for (int c = 1; c <= n; ++c) region.cells.push_back(sq(r, c));
    std::sort(region.cells.begin(), region.cells.end());
    auto& sides = region.sides;
    for (int c = 1; c <= n; ++c) sides[Side::SE].push_back(sq(1, c));
    for (int r = 2; r <= 2 * m; r += 2) sides[Side::SW].push_back(sq(r, 1));
    for (int c = 1; c <= n; ++c) sides[Side::NW].push_back(sq(2 * m, c));
    for (int r = 2; r <= 2 * m; r += 2) sides[Side::NE].push_back(sq(r, n));
    return region;
}

void remove_cell(Region& region, const Cell& cell) {
    auto it = std::lower_bound(region.cells.begin(), region.cells.end(), cell);
    if (it == region.cells.end() || *it != cell)
        throw std::logic_error("remove_cell: cell not present");
    region.cells.erase(it);
}

// Removes the side cells whose 1-based labels satisfy `pick`.
void remove_side_labels(Region& region, const std::vector<Cell>& side, auto pick) {
    for (std::size_t i = 0; i < side.size(); ++i)
        if (pick(static_cast<int>(i) + 1)) remove_cell(region, side[i]);
}

Region build_quartered(const RegionSpec& spec) {
    const std::string ctx = family_name(spec.family);
    int order = spec.n;
    if (order < 1) fail(ctx, "order must be >= 1");
    bool ka = spec.family == Family::QuarteredKa;
    // Even orders quarter a diamond of half the order; odd orders quarter a
    // trimmed diamond.  The abutting odd quarter coincides with the
    // non-abutting quarter two orders down, hence its smaller base.
    int half = order % 2 == 0 ? order / 2 : ka ? (order - 1) / 2 : (order + 1) / 2;
    if (half == 0) {
        Region empty;
        empty.spec = spec;
        return empty;
    }
    Region region = (order % 2 == 0) ? make_aztec_rectangle(spec.family, half, half)
                                     : make_trimmed_rectangle(spec.family, half, half);
    std::vector<Cell> sw = region.sides[Side::SW];
    std::vector<Cell> se = region.sides[Side::SE];
    region.sides.clear();
    region.spec = spec;
    bool odd_ka = ka && order % 2 == 1;
    bool remove_odd_sw = odd_ka || spec.family != Family::QuarteredKa;
    bool remove_odd_se = odd_ka || spec.family == Family::QuarteredKna;
    remove_side_labels(region, sw, [&](int i) { return (i % 2 == 1) == remove_odd_sw; });
    remove_side_labels(region, se, [&](int i) { return (i % 2 == 1) == remove_odd_se; });
    return region;
}

Region build_quartered_rectangle(const RegionSpec& spec) {
    const std::string ctx = family_name(spec.family);
    int m = spec.m, n = spec.n;
    if (m < 1 || n < 1) fail(ctx, "m and n must be >= 1");
    bool trimmed = spec.family == Family::TE || spec.family == Family::TO;
    bool keep_odd_sw = spec.family == Family::RE || spec.family == Family::TE;
    // The label count k matches the SW squares kept (RE/RO) or removed
    // (TE/TO), which is what keeps the region balanced: odd labels are
    // 1,3,5,... so keeping them retains ceil(m/2) of the m SW squares.
    std::size_t arity = keep_odd_sw != trimmed ? static_cast<std::size_t>((m + 1) / 2)
                                               : static_cast<std::size_t>(m / 2);
    if (arity == 0) fail(ctx, "m too small: no side labels to choose");
    if (static_cast<int>(arity) >= n) fail(ctx, "requires k < n");
    check_alist(ctx, spec.a, arity, n);

    Region region = trimmed ? make_trimmed_rectangle(spec.family, m, n)
                            : make_aztec_rectangle(spec.family, m, n);
    std::vector<Cell> sw = region.sides[Side::SW];
    std::vector<Cell> se = region.sides[Side::SE];
    region.sides.clear();
    region.spec = spec;
    remove_side_labels(region, sw, [&](int i) { return (i % 2 == 1) != keep_odd_sw; });
    std::set<int> labels(spec.a.begin(), spec.a.end());
    // RE/RO keep exactly the chosen SE squares; TE/TO remove exactly them.
    bool remove_chosen = trimmed;
    remove_side_labels(region, se,
                       [&](int i) { return labels.count(i) == (remove_chosen ? 1 : 0); });
    return region;
}

Region build_barred_rectangle(const RegionSpec& spec) {
    const std::string ctx = family_name(spec.family);
    int m = spec.m, n = spec.n;
    if (m < 1 || n < 1) fail(ctx, "m and n must be >= 1");
    bool from_bottom_row = spec.family == Family::BarTE || spec.family == Family::BarTO;
    std::size_t arity;
    bool remove_odd_sw;
    switch (spec.family) {
        case Family::BarRE:
            arity = m / 2;
            remove_odd_sw = false;
            break;
        case Family::BarRO:
            arity = (m + 1) / 2;
            remove_odd_sw = true;
            break;
        case Family::BarTE:
            arity = m / 2;
            remove_odd_sw = false;
            break;
        default:  // BarTO
            arity = (m - 1) / 2;
            remove_odd_sw = true;
            break;
    }
    if (arity == 0) fail(ctx, "m too small: no side labels to choose");
    if (static_cast<int>(arity) >= n) fail(ctx, "requires k < n");
    int max_label = from_bottom_row ? n : n - 1;
    check_alist(ctx, spec.a, arity, max_label);

    Region region = make_aztec_rectangle(spec.family, m, n);
    region.sides.clear();
    region.spec = spec;

    std::vector<Cell> new_sw, new_se;
    if (from_bottom_row) {
        // Remove the whole bottom row, then the bottommost remaining cell.
        for (int c = 1; c <= n; ++c) remove_cell(region, sq(1, c));
        remove_cell(region, sq(2, 1));
        for (int r = 4; r <= 2 * m; r += 2) new_sw.push_back(sq(r, 1));
        for (int c = 2; c <= n + 1; ++c) new_se.push_back(sq(2, c));
    } else {
        // Remove the old SW side, then the bottommost remaining cell.
        for (int r = 2; r <= 2 * m; r += 2) remove_cell(region, sq(r, 1));
        remove_cell(region, sq(1, 1));
        for (int r = 3; r <= 2 * m + 1; r += 2) new_sw.push_back(sq(r, 1));
        for (int c = 2; c <= n; ++c) new_se.push_back(sq(1, c));
    }
    remove_side_labels(region, new_sw, [&](int i) { return (i % 2 == 1) == remove_odd_sw; });
    std::set<int> labels(spec.a.begin(), spec.a.end());
    // The bar variants of RE/RO keep the chosen squares; those of TE/TO
    // remove them.
    bool remove_chosen = from_bottom_row;
    remove_side_labels(region, new_se,
                       [&](int i) { return labels.count(i) == (remove_chosen ? 1 : 0); });
    return region;
}

Region build_semihexagon(const RegionSpec& spec) {
    const std::string ctx = family_name(spec.family);
    int rows = spec.m, b = spec.n;
    if (rows < 1) fail(ctx, "side a must be >= 1");
    if (b < 0) fail(ctx, "side b must be >= 0");
    check_alist(ctx, spec.a, static_cast<std::size_t>(rows), rows + b, "s");

    Region region;
    region.spec = spec;
    std::set<int> holes(spec.a.begin(), spec.a.end());
    for (int r = 1; r <= rows; ++r) {
        int t = rows - r;
        for (int j = 1; j <= b + r; ++j) {
            if (r == rows && holes.count(j)) continue;
            region.cells.push_back(up_cell(t, t + 2 * j - 2));
        }
        for (int j = 1; j <= b + r - 1; ++j)
            region.cells.push_back(down_cell(t, t + 2 * j - 1));
    }
    std::sort(region.cells.begin(), region.cells.end());
    return region;
}

// Shared skeleton for the quartered hexagons: the part of the semihexagon
// of sides (m, 2(n-k)+1) strictly right of the vertical center line of the
// full hexagon it halves.  Row r (top-down, 1-based) keeps up-triangles
// j >= ceil((b+r)/2) + 1 and down-triangles j >= ceil((b+r+1)/2); the bottom
// row then holds exactly n up-triangles.
struct QuarterSkeleton {
    int b;
    std::vector<Cell> cells;
    std::vector<Cell> bottom_ups;                       // left to right
    std::vector<std::pair<Cell, Cell>> boundary_pairs;  // top-down, rows (1,2), (3,4), ...
};

QuarterSkeleton make_quarter_skeleton(int m, int n, int k) {
    QuarterSkeleton s;
    s.b = 2 * (n - k) + 1;
    for (int r = 1; r <= m; ++r) {
        int t = m - r;
        int up_min = (s.b + r) / 2 + 1 + ((s.b + r) % 2);
        for (int j = up_min; j <= s.b + r; ++j) {
            Cell cell = up_cell(t, t + 2 * j - 2);
            s.cells.push_back(cell);
            if (r == m) s.bottom_ups.push_back(cell);
        }
        int dn_min = (s.b + r + 1) / 2 + ((s.b + r + 1) % 2);
        for (int j = dn_min; j <= s.b + r - 1; ++j)
            s.cells.push_back(down_cell(t, t + 2 * j - 1));
    }
    // The leftmost kept up of each odd row sits right on the cut line (left
    // span end m + b) and forms a vertical lozenge with the leftmost kept
    // down of the row below.
    for (int r = 1; r + 1 <= m; r += 2)
        s.boundary_pairs.emplace_back(up_cell(m - r, m + s.b), down_cell(m - r - 1, m + s.b));
    return s;
}

Region build_quartered_hexagon(const RegionSpec& spec) {
    const std::string ctx = family_name(spec.family);
    int m = spec.m, n = spec.n;
    if (m < 1 || n < 1) fail(ctx, "m and n must be >= 1");
    bool barred = spec.family == Family::BarQH;
    int k = (m + 1) / 2;
    std::size_t arity = barred && m % 2 == 1 ? static_cast<std::size_t>(k - 1)
                                             : static_cast<std::size_t>(k);
    if (arity == 0) fail(ctx, "m too small: no holes to choose");
    if (static_cast<int>(arity) >= n) fail(ctx, "requires k < n");
    bool shifted = barred && m % 2 == 1;  // odd barred variant drops the leftmost bottom up
    check_alist(ctx, spec.a, arity, shifted ? n - 1 : n);

    QuarterSkeleton skel = make_quarter_skeleton(m, n, k);
    Region region;
    region.spec = spec;
    region.cells = skel.cells;
    std::sort(region.cells.begin(), region.cells.end());

    std::vector<Cell> bottom = skel.bottom_ups;
    if (shifted) {
        remove_cell(region, bottom.front());
        bottom.erase(bottom.begin());
    }
    std::set<int> holes(spec.a.begin(), spec.a.end());
    for (std::size_t i = 0; i < bottom.size(); ++i)
        if (holes.count(static_cast<int>(i) + 1)) remove_cell(region, bottom[i]);

    if (barred) {
        for (auto& [up, down] : skel.boundary_pairs) {
            std::pair<Cell, Cell> key = std::minmax(up, down);
            region.tile_weights[key] = Rat(1, 2);
        }
    }
    return region;
}

Region build_holey(const RegionSpec& spec) {
    const std::string ctx = family_name(spec.family);
    int m = spec.m, n = spec.n;
    if (m < 1 || n < 1) fail(ctx, "m and n must be >= 1");
    bool barred = spec.family == Family::HoleyARBar;
    check_alist(ctx, spec.a, static_cast<std::size_t>(m), barred ? n + 1 : n);

    Region region = make_aztec_rectangle(spec.family, m, n);
    region.sides.clear();
    region.spec = spec;
    std::set<int> labels(spec.a.begin(), spec.a.end());
    if (barred) {
        // Drop the whole bottom row, then punch the chosen holes into the new
        // bottom row (the first even row, n+1 cells).
        for (int c = 1; c <= n; ++c) remove_cell(region, sq(1, c));
        for (int c : spec.a) remove_cell(region, sq(2, c));
    } else {
        // Keep only the chosen cells of the bottom row.
        for (int c = 1; c <= n; ++c)
            if (!labels.count(c)) remove_cell(region, sq(1, c));
    }
    return region;
}

}  // namespace

std::string family_name(Family f) {
    for (auto& [fam, name] : kFamilyNames)
        if (fam == f) return name;
    throw std::logic_error("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
    for (auto& [fam, tag] : kFamilyNames)
        if (name == tag) return fam;
    for (auto& [alias, fam] : kFamilyAliases)
        if (name == alias) return fam;
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::string spec_str(const RegionSpec& spec) {
    std::ostringstream os;
    os << family_name(spec.family) << "(";
    switch (spec.family) {
        case Family::AztecDiamond:
        case Family::TrimmedAztecDiamond:
        case Family::QuarteredR:
        case Family::QuarteredKa:
        case Family::QuarteredKna:
            os << spec.n;
            break;
        case Family::AztecRectangle:
        case Family::TrimmedAztecRectangle:
            os << spec.m << "," << spec.n;
            break;
        default:
            os << spec.m << "," << spec.n << ",[";
            for (std::size_t i = 0; i < spec.a.size(); ++i)
                os << (i ? "," : "") << spec.a[i];
            os << "]";
            break;
    }
    os << ")";
    return os.str();
}

bool Region::contains(const Cell& cell) const {
    return std::binary_search(cells.begin(), cells.end(), cell);
}

std::pair<Rat, Rat> cell_center(const Cell& cell) {
    switch (cell.kind) {
        case CellKind::Square:
            if (cell.r % 2 == 1) return {Rat(cell.c), Rat(cell.r, 2)};
            return {Rat(2 * cell.c - 1, 2), Rat(cell.r, 2)};
        case CellKind::Up:
            return {Rat(cell.c + 1, 2), Rat(3 * cell.r + 1, 3)};
        default:
            return {Rat(cell.c + 1, 2), Rat(3 * cell.r + 2, 3)};
    }
}

bool cell_is_black(const Cell& cell) {
    if (cell.kind == CellKind::Square) return cell.r % 2 == 1;
    return cell.kind == CellKind::Up;
}

std::vector<Cell> cell_neighbors(const Cell& cell) {
    int r = cell.r, c = cell.c;
    switch (cell.kind) {
        case CellKind::Square:
            if (r % 2 == 1) return {sq(r - 1, c), sq(r - 1, c + 1), sq(r + 1, c), sq(r + 1, c + 1)};
            return {sq(r - 1, c - 1), sq(r - 1, c), sq(r + 1, c - 1), sq(r + 1, c)};
        case CellKind::Up:
            return {down_cell(r, c - 1), down_cell(r, c + 1), down_cell(r - 1, c)};
        default:
            return {up_cell(r, c - 1), up_cell(r, c + 1), up_cell(r + 1, c)};
    }
}

Region build_region(const RegionSpec& spec) {
    switch (spec.family) {
        case Family::AztecDiamond:
            if (spec.n < 1) fail("AD", "n must be >= 1");
            return make_aztec_rectangle(spec.family, spec.n, spec.n);
        case Family::TrimmedAztecDiamond:
            if (spec.n < 1) fail("TA", "n must be >= 1");
            return make_trimmed_rectangle(spec.family, spec.n, spec.n);
        case Family::AztecRectangle:
            if (spec.m < 1 || spec.n < 1) fail("AR", "m and n must be >= 1");
            return make_aztec_rectangle(spec.family, spec.m, spec.n);
        case Family::TrimmedAztecRectangle:
            if (spec.m < 1 || spec.n < 1) fail("TR", "m and n must be >= 1");
            return make_trimmed_rectangle(spec.family, spec.m, spec.n);
        case Family::QuarteredR:
        case Family::QuarteredKa:
        case Family::QuarteredKna:
            return build_quartered(spec);
        case Family::RE:
        case Family::RO:
        case Family::TE:
        case Family::TO:
            return build_quartered_rectangle(spec);
        case Family::BarRE:
        case Family::BarRO:
        case Family::BarTE:
        case Family::BarTO:
            return build_barred_rectangle(spec);
        case Family::QH:
        case Family::BarQH:
            return build_quartered_hexagon(spec);
        case Family::SemiHexagon:
            return build_semihexagon(spec);
        case Family::HoleyAR:
        case Family::HoleyARBar:
            return build_holey(spec);
    }
    throw std::logic_error("build_region: unknown family");
}

std::vector<Cell> side_cells(const Region& region, Side side) {
    auto it = region.sides.find(side);
    if (it == region.sides.end())
        throw std::invalid_argument(family_name(region.spec.family) +
                                    ": side not defined for this family");
    return it->second;
}

}  // namespace tilecount
