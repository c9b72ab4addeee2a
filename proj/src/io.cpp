#include "tessella/io.hpp"

#include <algorithm>

namespace tessella {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw format_error(msg); }

Vec vec_from_json(const json& j) {
    if (!j.is_array()) bad("expected an integer array");
    Vec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) bad("expected an integer array");
        v.push_back(x.get<i64>());
    }
    return v;
}

std::pair<int, int> line_col(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte);
        throw format_error(e.what(), line, col);
    }
    if (!j.is_object() || !j.contains("schema_version") || !j.contains("kind") ||
        !j.contains("payload"))
        bad("manifest needs schema_version, kind, payload");
    if (!j["schema_version"].is_number_integer() || j["schema_version"].get<int>() != 1)
        bad("unsupported schema_version");
    if (!j["kind"].is_string()) bad("kind must be a string");
    return {j["schema_version"].get<int>(), j["kind"].get<std::string>(), j["payload"]};
}

std::string serialize_manifest(const Manifest& m) {
    json j{{"schema_version", m.schema_version}, {"kind", m.kind}, {"payload", m.payload}};
    return j.dump() + "\n";
}

Manifest make_manifest(std::string kind, json payload) {
    return {1, std::move(kind), std::move(payload)};
}

json to_json(const GroupSpec& g) {
    return {{"d", g.rank}, {"torsion", g.torsion}};
}

GroupSpec group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d")) bad("group needs d");
    std::vector<i64> tor;
    if (j.contains("torsion")) tor = vec_from_json(j["torsion"]);
    try {
        return make_group(j["d"].get<int>(), std::move(tor));
    } catch (const error& e) {
        bad(e.what());
    }
}

json to_json(const Lattice& lat) {
    json rows = json::array();
    for (int i = 0; i < lat.dim(); ++i) {
        json row = json::array();
        for (int k = 0; k < lat.dim(); ++k) row.push_back(lat.at(i, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

Lattice lattice_from_json(const json& j) {
    if (!j.is_array() || j.empty()) bad("lattice must be a nonempty matrix");
    int d = static_cast<int>(j.size());
    std::vector<Vec> cols(d, Vec(d));
    for (int i = 0; i < d; ++i) {
        Vec row = vec_from_json(j[i]);
        if (static_cast<int>(row.size()) != d) bad("lattice matrix must be square");
        for (int k = 0; k < d; ++k) cols[k][i] = row[k];
    }
    try {
        return lattice_from_columns(d, std::move(cols));
    } catch (const error& e) {
        bad(e.what());
    }
}

json to_json(const GroupSpec&, const GroupElement& e) {
    Vec flat(e.free);
    flat.insert(flat.end(), e.tor.begin(), e.tor.end());
    return flat;
}

GroupElement element_from_json(const GroupSpec& g, const json& j) {
    Vec flat = vec_from_json(j);
    if (static_cast<int>(flat.size()) != g.rank + g.torsion_rank())
        bad("element length does not match the group");
    Vec free(flat.begin(), flat.begin() + g.rank);
    Vec tor(flat.begin() + g.rank, flat.end());
    return make_element(g, std::move(free), std::move(tor));
}

json to_json(const Tile& f) {
    json pts = json::array();
    for (const GroupElement& p : f.points) pts.push_back(to_json(f.group, p));
    return {{"group", to_json(f.group)}, {"points", pts}};
}

Tile tile_from_json(const json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("points"))
        bad("tile needs group and points");
    GroupSpec g = group_from_json(j["group"]);
    std::vector<GroupElement> pts;
    for (const auto& p : j["points"]) pts.push_back(element_from_json(g, p));
    if (pts.empty()) bad("tile must be nonempty");
    return make_tile(g, std::move(pts), /*normalized=*/false);
}

json to_json(const TileSystem& sys) {
    json tiles = json::array();
    for (const Tile& f : sys.tiles) tiles.push_back(to_json(f));
    return {{"level", sys.level}, {"tiles", tiles}};
}

TileSystem system_from_json(const json& j) {
    if (!j.is_object() || !j.contains("tiles")) bad("system needs tiles");
    std::vector<Tile> tiles;
    for (const auto& t : j["tiles"]) tiles.push_back(tile_from_json(t));
    if (tiles.empty()) bad("system must have at least one tile");
    int level = j.contains("level") ? j["level"].get<int>() : 1;
    if (level < 1) bad("level must be positive");
    try {
        return make_system(std::move(tiles), level);
    } catch (const error& e) {
        bad(e.what());
    }
}

json to_json(const PeriodicSet& a) {
    json pts = json::array();
    for (const GroupElement& p : residue_points(a)) pts.push_back(to_json(a.group, p));
    return {{"group", to_json(a.group)}, {"lattice", to_json(a.lattice)}, {"points", pts}};
}

PeriodicSet periodic_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("lattice") ||
        !j.contains("points"))
        bad("periodic_set needs group, lattice, points");
    GroupSpec g = group_from_json(j["group"]);
    Lattice lat = lattice_from_json(j["lattice"]);
    std::vector<GroupElement> pts;
    for (const auto& p : j["points"]) pts.push_back(element_from_json(g, p));
    try {
        PeriodicSet a = periodic_set_from_points(g, lat, pts);
        if (a.residues.size() != pts.size()) bad("duplicate residues in points");
        return a;
    } catch (const format_error&) {
        throw;
    } catch (const error& e) {
        bad(e.what());
    }
}

json to_json(const WindowSet& w) {
    json rows = json::array();
    i64 e0 = w.extent(0);
    for (i64 base = 0; base < w.cells(); base += e0) {
        json runs = json::array();
        i64 run = 0;
        char cur = 0;
        for (i64 x = 0; x < e0; ++x) {
            if (w.membership[base + x] == cur) {
                ++run;
            } else {
                runs.push_back(run);
                cur = w.membership[base + x];
                run = 1;
            }
        }
        runs.push_back(run);
        rows.push_back(std::move(runs));
    }
    return {{"lo", w.lo}, {"hi", w.hi}, {"rows", rows}};
}

WindowSet window_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lo") || !j.contains("hi") || !j.contains("rows"))
        bad("window needs lo, hi, rows");
    WindowSet w{vec_from_json(j["lo"]), vec_from_json(j["hi"]), {}};
    if (w.lo.size() != w.hi.size() || w.lo.empty()) bad("window corners disagree");
    i64 cells = 1;
    for (int i = 0; i < w.dim(); ++i) {
        if (w.lo[i] > w.hi[i]) bad("empty window box");
        cells *= w.extent(i);
    }
    i64 e0 = w.extent(0);
    if (static_cast<i64>(j["rows"].size()) != cells / e0)
        bad("window row count disagrees with the box");
    for (const auto& runs : j["rows"]) {
        char cur = 0;
        i64 total = 0;
        for (const auto& r : runs) {
            i64 n = r.get<i64>();
            if (n < 0) bad("negative run length");
            w.membership.insert(w.membership.end(), n, cur);
            cur = 1 - cur;
            total += n;
        }
        if (total != e0) bad("window run lengths disagree with the row width");
    }
    return w;
}

json to_json(const WangInstance& w) {
    json squares = json::array();
    for (const WangSquare& s : w.squares)
        squares.push_back({w.colors[s.east], w.colors[s.south], w.colors[s.west],
                           w.colors[s.north]});
    return {{"colors", w.colors}, {"squares", squares}};
}

WangInstance wang_from_json(const json& j) {
    if (!j.is_object() || !j.contains("colors") || !j.contains("squares"))
        bad("wang needs colors and squares");
    WangInstance w;
    for (const auto& c : j["colors"]) w.colors.push_back(c.get<std::string>());
    auto idx = [&](const json& name) {
        auto it = std::find(w.colors.begin(), w.colors.end(), name.get<std::string>());
        if (it == w.colors.end()) bad("square uses an unknown color");
        return static_cast<int>(it - w.colors.begin());
    };
    for (const auto& s : j["squares"]) {
        if (!s.is_array() || s.size() != 4) bad("square must list east,south,west,north");
        w.squares.push_back({idx(s[0]), idx(s[1]), idx(s[2]), idx(s[3])});
    }
    if (w.squares.empty()) bad("wang instance must have squares");
    return w;
}

json to_json(const WangAssignment& a) {
    json j{{"squares", a.squares}};
    if (a.torus)
        j["torus"] = to_json(*a.torus);
    else {
        j["lo"] = a.lo;
        j["hi"] = a.hi;
    }
    return j;
}

WangAssignment wang_assignment_from_json(const json& j) {
    if (!j.is_object() || !j.contains("squares")) bad("assignment needs squares");
    WangAssignment a;
    for (const auto& s : j["squares"]) a.squares.push_back(s.get<int>());
    if (j.contains("torus")) {
        a.torus = lattice_from_json(j["torus"]);
    } else {
        if (!j.contains("lo") || !j.contains("hi")) bad("assignment needs a domain");
        a.lo = vec_from_json(j["lo"]);
        a.hi = vec_from_json(j["hi"]);
    }
    if (a.cells() != a.extent(0) * a.extent(1)) bad("assignment size disagrees with domain");
    return a;
}

json to_json(const SudokuWindow& s) {
    json rows = json::array();
    for (i64 m = s.m0; m <= s.m1; ++m) {
        json row = json::array();
        for (i64 n = 1; n <= s.ctx.M; ++n) row.push_back(s.at(n, m));
        rows.push_back(std::move(row));
    }
    return {{"p", s.ctx.p}, {"rows", json::array({s.m0, s.m1})}, {"cells", rows}};
}

SudokuWindow sudoku_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("rows") || !j.contains("cells"))
        bad("sudoku needs p, rows, cells");
    PadicContext ctx;
    try {
        ctx = make_padic(j["p"].get<i64>());
    } catch (const error& e) {
        bad(e.what());
    }
    Vec rows = vec_from_json(j["rows"]);
    if (rows.size() != 2 || rows[0] > rows[1]) bad("rows must be [m0, m1]");
    SudokuWindow s{ctx, rows[0], rows[1], {}};
    if (static_cast<i64>(j["cells"].size()) != rows[1] - rows[0] + 1)
        bad("cell row count disagrees with rows");
    for (const auto& row : j["cells"]) {
        if (static_cast<i64>(row.size()) != ctx.M) bad("cell row width must be M");
        for (const auto& v : row) {
            i64 x = v.get<i64>();
            if (x < 1 || x >= ctx.p) bad("cell value outside Sigma_p");
            s.cells.push_back(x);
        }
    }
    return s;
}

json to_json(const ColoringInstance& inst) {
    if (!inst.name.empty()) return {{"name", inst.name}};
    json omega = json::array();
    for (const auto& [cv, cx, cy] : inst.table)
        omega.push_back({cv, cx, cy});
    return {{"N", inst.N},     {"dirs", inst.dirs},   {"orthos", inst.orthos},
            {"sigma", inst.sigma}, {"omega", omega}};
}

ColoringInstance coloring_from_json(const json& j) {
    if (!j.is_object()) bad("coloring must be an object");
    if (j.contains("name")) {
        std::string name = j["name"].get<std::string>();
        if (name.rfind("sudoku_p", 0) == 0) {
            try {
                return sudoku_as_coloring(make_padic(std::stoll(name.substr(8))));
            } catch (const std::exception& e) {
                bad(e.what());
            }
        }
        bad("unknown predicate-backed coloring: " + name);
    }
    if (!j.contains("N") || !j.contains("dirs") || !j.contains("orthos") ||
        !j.contains("sigma") || !j.contains("omega"))
        bad("coloring needs N, dirs, orthos, sigma, omega");
    std::vector<Vec> dirs, orthos;
    for (const auto& v : j["dirs"]) dirs.push_back(vec_from_json(v));
    for (const auto& v : j["orthos"]) orthos.push_back(vec_from_json(v));
    std::vector<std::tuple<std::vector<i64>, i64, i64>> table;
    for (const auto& t : j["omega"]) {
        if (!t.is_array() || t.size() != 3) bad("omega entries are [colors, cx, cy]");
        table.emplace_back(vec_from_json(t[0]), t[1].get<i64>(), t[2].get<i64>());
    }
    try {
        return make_coloring(std::move(dirs), std::move(orthos), j["N"].get<i64>(),
                             vec_from_json(j["sigma"]), std::move(table));
    } catch (const error& e) {
        bad(e.what());
    }
}

}  // namespace tessella
