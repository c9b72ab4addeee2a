#pragma once

#include <string>

#include "tessella/gallery.hpp"
#include "tessella/padic.hpp"
#include "tessella/wang.hpp"

namespace tessella {

/// Class index per cell of a 2D box (-1 = empty), coordinate 0 fastest.
struct Raster {
    Vec lo, hi;
    std::vector<int> classes;

    i64 extent(int i) const { return hi[i] - lo[i] + 1; }
};

Raster rasterize(const WindowSet& w);
Raster rasterize(const PeriodicSet& a, const Vec& lo, const Vec& hi);
/// Cells classed by the covering tile index (lowest wins on multi-cover).
Raster rasterize(const TilingCertificate& cert, const Vec& lo, const Vec& hi);
Raster rasterize(const SudokuWindow& s); // x = column n, y = row m, class = value
Raster rasterize(const WangAssignment& a);

/// One unit square x + [0,1]^2 per nonempty cell, y axis pointing up,
/// deterministic fill palette per class.
std::string render_svg(const Raster& r);
/// One glyph per class, rows printed top-down.
std::string render_ascii(const Raster& r);

}  // namespace tessella
