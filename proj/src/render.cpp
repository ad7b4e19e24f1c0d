// Region renderers: ASCII schematics and exact-integer SVG drawings.

#include "tilecount/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tilecount {
namespace {

// ASCII squares: each cell occupies the two text columns of its half-column
// index h (odd rows h = 2c, even rows h = 2c-1, matching the cell centers).
std::string ascii_squares(const Region& region) {
    int hmin = 0, hmax = 0, rmin = 0, rmax = 0;
    bool first = true;
    std::map<int, std::set<int>> rows;  // row -> half-column indices
    for (const Cell& cell : region.cells) {
        const int h = 2 * cell.c - (cell.r % 2 == 0 ? 1 : 0);
        rows[cell.r].insert(h);
        if (first) {
            hmin = hmax = h;
            rmin = rmax = cell.r;
            first = false;
        } else {
            hmin = std::min(hmin, h);
            hmax = std::max(hmax, h);
            rmin = std::min(rmin, cell.r);
            rmax = std::max(rmax, cell.r);
        }
    }
    std::ostringstream out;
    for (int r = rmax; r >= rmin; --r) {
        std::string line;
        auto it = rows.find(r);
        if (it != rows.end()) {
            line.assign(2 * static_cast<std::size_t>(*it->second.rbegin() - hmin + 1), ' ');
            for (int h : it->second) {
                line[2 * static_cast<std::size_t>(h - hmin)] = '[';
                line[2 * static_cast<std::size_t>(h - hmin) + 1] = ']';
            }
        }
        out << line << '\n';
    }
    return out.str();
}

// ASCII triangles: one glyph per cell, '^' up and 'v' down, column L.
std::string ascii_triangles(const Region& region) {
    int lmin = 0, lmax = 0, tmin = 0, tmax = 0;
    bool first = true;
    std::map<int, std::map<int, char>> bands;  // band -> L -> glyph
    for (const Cell& cell : region.cells) {
        bands[cell.r][cell.c] = cell.kind == CellKind::Up ? '^' : 'v';
        if (first) {
            lmin = lmax = cell.c;
            tmin = tmax = cell.r;
            first = false;
        } else {
            lmin = std::min(lmin, cell.c);
            lmax = std::max(lmax, cell.c);
            tmin = std::min(tmin, cell.r);
            tmax = std::max(tmax, cell.r);
        }
    }
    std::ostringstream out;
    for (int t = tmax; t >= tmin; --t) {
        std::string line;
        auto it = bands.find(t);
        if (it != bands.end()) {
            line.assign(static_cast<std::size_t>(it->second.rbegin()->first - lmin + 1), ' ');
            for (const auto& [l, glyph] : it->second) {
                line[static_cast<std::size_t>(l - lmin)] = glyph;
            }
        }
        out << line << '\n';
    }
    return out.str();
}

// Pixel coordinates: 24 pixels per lattice unit, so every vertex, center and
// segment midpoint used below lands on an integer.
constexpr int kScale = 24;
constexpr int kMargin = 12;

std::vector<std::pair<int, int>> cell_polygon(const Cell& cell) {
    if (cell.kind == CellKind::Square) {
        const int cx = kScale * cell.c - (cell.r % 2 == 0 ? kScale / 2 : 0);
        const int cy = kScale / 2 * cell.r;
        return {{cx - kScale / 2, cy}, {cx, cy + kScale / 2}, {cx + kScale / 2, cy}, {cx, cy - kScale / 2}};
    }
    const int x0 = kScale / 2 * cell.c;
    const int y0 = kScale * cell.r;
    if (cell.kind == CellKind::Up) {
        return {{x0, y0}, {x0 + kScale, y0}, {x0 + kScale / 2, y0 + kScale}};
    }
    return {{x0, y0 + kScale}, {x0 + kScale, y0 + kScale}, {x0 + kScale / 2, y0}};
}

std::pair<int, int> center_px(const Cell& cell) {
    const auto [x, y] = cell_center(cell);
    const Rat sx = x * kScale;
    const Rat sy = y * kScale;
    return {static_cast<int>(num(sx)), static_cast<int>(num(sy))};
}

}  // namespace

std::string render_ascii(const Region& region) {
    if (region.cells.empty()) {
        return "(empty region)\n";
    }
    return region.cells.front().kind == CellKind::Square ? ascii_squares(region)
                                                         : ascii_triangles(region);
}

std::string render_svg(const Region& region, const std::vector<std::pair<int, int>>& tiling) {
    const int n_cells = static_cast<int>(region.cells.size());
    for (const auto& [i, j] : tiling) {
        if (i < 0 || j < 0 || i >= n_cells || j >= n_cells || i == j) {
            throw std::invalid_argument("tiling overlay refers to cell indices outside the region");
        }
    }

    int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    std::vector<std::vector<std::pair<int, int>>> polygons;
    polygons.reserve(region.cells.size());
    for (const Cell& cell : region.cells) {
        polygons.push_back(cell_polygon(cell));
        for (const auto& [x, y] : polygons.back()) {
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            } else {
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        }
    }
    const int width = (xmax - xmin) + 2 * kMargin;
    const int height = (ymax - ymin) + 2 * kMargin;
    const auto px = [&](int x) { return x - xmin + kMargin; };
    const auto py = [&](int y) { return ymax - y + kMargin; };  // y grows upward in the lattice

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    for (std::size_t i = 0; i < polygons.size(); ++i) {
        const bool black = cell_is_black(region.cells[i]);
        out << "  <polygon points=\"";
        for (std::size_t k = 0; k < polygons[i].size(); ++k) {
            if (k > 0) {
                out << ' ';
            }
            out << px(polygons[i][k].first) << ',' << py(polygons[i][k].second);
        }
        out << "\" fill=\"" << (black ? "#9ecae1" : "#fff7e6")
            << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    for (const auto& [pair, weight] : region.tile_weights) {
        const auto [ax, ay] = center_px(pair.first);
        const auto [bx, by] = center_px(pair.second);
        out << "  <circle cx=\"" << px((ax + bx) / 2) << "\" cy=\"" << py((ay + by) / 2)
            << "\" r=\"4\" fill=\"#d62728\"><title>" << rat_str(weight) << "</title></circle>\n";
    }
    for (const auto& [i, j] : tiling) {
        const auto [ax, ay] = center_px(region.cells[static_cast<std::size_t>(i)]);
        const auto [bx, by] = center_px(region.cells[static_cast<std::size_t>(j)]);
        out << "  <line x1=\"" << px(ax) << "\" y1=\"" << py(ay) << "\" x2=\"" << px(bx)
            << "\" y2=\"" << py(by)
            << "\" stroke=\"#1a9641\" stroke-width=\"6\" stroke-linecap=\"round\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace tilecount
