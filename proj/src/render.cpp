#include "tessella/render.hpp"

#include <sstream>

namespace tessella {

namespace {
Raster blank(const Vec& lo, const Vec& hi) {
    if (lo.size() != 2 || hi.size() != 2 || lo[0] > hi[0] || lo[1] > hi[1])
        throw dimension_error("raster needs a nonempty 2D box");
    Raster r{lo, hi, {}};
    r.classes.assign(r.extent(0) * r.extent(1), -1);
    return r;
}

int& cell(Raster& r, i64 x, i64 y) {
    return r.classes[(x - r.lo[0]) + r.extent(0) * (y - r.lo[1])];
}
}  // namespace

Raster rasterize(const WindowSet& w) {
    Raster r = blank(w.lo, w.hi);
    for (i64 k = 0; k < w.cells(); ++k)
        if (w.membership[k]) r.classes[k] = 0;
    return r;
}

Raster rasterize(const PeriodicSet& a, const Vec& lo, const Vec& hi) {
    return rasterize(window_of(a, lo, hi));
}

Raster rasterize(const TilingCertificate& cert, const Vec& lo, const Vec& hi) {
    Raster r = blank(lo, hi);
    const GroupSpec& g = cert.system.group();
    if (!g.torsion.empty())
        throw dimension_error("certificate rendering needs a torsion-free group");
    for (i64 y = lo[1]; y <= hi[1]; ++y)
        for (i64 x = lo[0]; x <= hi[0]; ++x)
            for (size_t t = 0; t < cert.system.tiles.size() && cell(r, x, y) < 0; ++t)
                for (const GroupElement& p : cert.system.tiles[t].points) {
                    if (!member(cert.solution[t],
                                make_element(g, {x - p.free[0], y - p.free[1]})))
                        continue;
                    cell(r, x, y) = static_cast<int>(t);
                    break;
                }
    return r;
}

Raster rasterize(const SudokuWindow& s) {
    Raster r = blank({1, s.m0}, {s.ctx.M, s.m1});
    for (i64 m = s.m0; m <= s.m1; ++m)
        for (i64 n = 1; n <= s.ctx.M; ++n)
            cell(r, n, m) = static_cast<int>(s.at(n, m));
    return r;
}

Raster rasterize(const WangAssignment& a) {
    Vec lo = a.torus ? Vec{0, 0} : a.lo;
    Vec hi{lo[0] + a.extent(0) - 1, lo[1] + a.extent(1) - 1};
    Raster r = blank(lo, hi);
    r.classes.assign(a.squares.begin(), a.squares.end());
    return r;
}

std::string render_svg(const Raster& r) {
    static const char* palette[] = {"#335577", "#cc6644", "#559955", "#aa4488",
                                    "#888833", "#44aaaa", "#774422", "#6666bb"};
    constexpr int npal = 8;
    std::ostringstream out;
    i64 w = r.extent(0), h = r.extent(1);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' ' << h
        << "\" width=\"" << 16 * w << "\" height=\"" << 16 * h << "\">\n";
    for (i64 y = r.lo[1]; y <= r.hi[1]; ++y)
        for (i64 x = r.lo[0]; x <= r.hi[0]; ++x) {
            int c = r.classes[(x - r.lo[0]) + w * (y - r.lo[1])];
            if (c < 0) continue;
            // y flipped: the square x + [0,1]^2 sits with y pointing up
            out << "<rect x=\"" << x - r.lo[0] << "\" y=\"" << r.hi[1] - y
                << "\" width=\"1\" height=\"1\" fill=\"" << palette[c % npal]
                << "\" stroke=\"#222\" stroke-width=\"0.03\"/>\n";
        }
    out << "</svg>\n";
    return out.str();
}

std::string render_ascii(const Raster& r) {
    static const char glyphs[] = "#123456789abcdefghijklmnopqrstuvwxyz";
    constexpr int ng = static_cast<int>(sizeof(glyphs)) - 1;
    std::ostringstream out;
    for (i64 y = r.hi[1]; y >= r.lo[1]; --y) {
        for (i64 x = r.lo[0]; x <= r.hi[0]; ++x) {
            int c = r.classes[(x - r.lo[0]) + r.extent(0) * (y - r.lo[1])];
            out << (c < 0 ? '.' : glyphs[c % ng]);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace tessella
