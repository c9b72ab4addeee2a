// Command-line surface: reads interchange manifests, runs the engine,
// writes result manifests to stdout and human summaries to stderr.
// Exit codes: 0 positive, 1 negative, 2 unknown/budget, 64 usage, 65 format.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tessella/io.hpp"
#include "tessella/render.hpp"

namespace {

using namespace tessella;

constexpr int kPositive = 0, kNegative = 1, kUnknown = 2, kFormat = 65;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Manifest load(const std::string& path) { return parse_manifest(slurp(path)); }

void emit(const Manifest& m) { std::cout << serialize_manifest(m); }

TileSystem system_from_manifest(const Manifest& m) {
    if (m.kind == "tile") return single(tile_from_json(m.payload));
    if (m.kind == "system") return system_from_json(m.payload);
    throw format_error("expected a tile or system manifest, got " + m.kind);
}

json fraction_json(const Fraction& f) { return json::array({f.num, f.den}); }

json cert_json(const TilingCertificate& cert) {
    json sol = json::array();
    for (const PeriodicSet& s : cert.solution) sol.push_back(to_json(s));
    return {{"report", "certificate"},
            {"system", to_json(cert.system)},
            {"solution", sol},
            {"verified", cert.verified}};
}

TilingCertificate cert_from_json(const json& j) {
    if (!j.is_object() || j.value("report", "") != "certificate")
        throw format_error("expected a certificate report");
    TilingCertificate cert;
    cert.system = system_from_json(j.at("system"));
    for (const auto& s : j.at("solution")) cert.solution.push_back(periodic_set_from_json(s));
    if (cert.solution.size() != cert.system.tiles.size())
        throw format_error("certificate needs one solution set per tile");
    cert.verified = j.value("verified", false);
    return cert;
}

WangAssignment assignment_from_manifest(const Manifest& m) {
    if (m.kind != "report" || m.payload.value("report", "") != "wang_assignment")
        throw format_error("expected a wang_assignment report");
    return wang_assignment_from_json(m.payload);
}

std::function<bool()> env_deadline() {
    const char* ms = std::getenv("TESSELLA_BUDGET_MS");
    if (!ms) return {};
    auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(std::atoll(ms));
    return [deadline] { return std::chrono::steady_clock::now() > deadline; };
}

Vec parse_window(const std::vector<i64>& w) {
    if (w.size() != 4) throw format_error("--window needs x0,x1,y0,y1");
    if (w[0] > w[1] || w[2] > w[3]) throw format_error("--window box is empty");
    return w;
}

int cmd_solve(const std::string& in, i64 max_index, int level) {
    TileSystem sys = system_from_manifest(load(in));
    if (level > 0) sys.level = level;
    std::vector<Lattice> lats = enumerate_lattices(sys.group().rank, max_index);
    for (const Lattice& lat : lats) {
        std::optional<TilingCertificate> cert;
        try {
            cert = solve_periodic(sys, lat);
        } catch (const budget_error&) {
            continue;
        }
        if (!cert || !cert->verified) continue;
        emit(make_manifest("report", cert_json(*cert)));
        std::cerr << "tiling found at lattice index " << lat.index() << "\n";
        return kPositive;
    }
    std::cerr << "no periodic tiling up to index " << max_index << "\n";
    emit(make_manifest("report", {{"report", "no_tiling"}, {"max_index", max_index}}));
    return kNegative;
}

int cmd_decide1d(const std::string& in) {
    Manifest m = load(in);
    Tile f = normalize(tile_from_json(m.kind == "tile" ? m.payload : throw format_error(
                                                             "decide1d expects a tile")));
    Decision1D d = decide_1d(f);
    if (const auto* t = std::get_if<Tileable1D>(&d)) {
        emit(make_manifest("report", {{"report", "decide1d"},
                                      {"tileable", true},
                                      {"universal_period", t->universal_period},
                                      {"witness", to_json(t->witness)}}));
        std::cerr << "tileable with period " << t->universal_period << "\n";
        return kPositive;
    }
    const auto& n = std::get<NotTileable1D>(d);
    emit(make_manifest("report", {{"report", "decide1d"},
                                  {"tileable", false},
                                  {"stuck_prefix", n.stuck_prefix}}));
    std::cerr << "not tileable\n";
    return kNegative;
}

int cmd_semidecide(const std::string& in, i64 max_index, i64 max_radius) {
    TileSystem sys = system_from_manifest(load(in));
    SemiBudget b;
    b.max_index = max_index;
    b.max_radius = max_radius;
    b.interrupt = env_deadline();
    SemiResult r = semi_decide(sys, b);
    json payload{{"report", "semidecide"}};
    switch (r.kind) {
        case SemiResult::Kind::tileable:
            payload["result"] = "tileable";
            payload["certificate"] = cert_json(*r.certificate);
            emit(make_manifest("report", payload));
            std::cerr << "tileable\n";
            return kPositive;
        case SemiResult::Kind::not_tileable:
            payload["result"] = "not_tileable";
            payload["obstruction_radius"] = r.obstruction->radius;
            emit(make_manifest("report", payload));
            std::cerr << "not tileable (box obstruction at radius "
                      << r.obstruction->radius << ")\n";
            return kNegative;
        default:
            payload["result"] = "unknown";
            emit(make_manifest("report", payload));
            std::cerr << "unknown within budgets\n";
            return kUnknown;
    }
}

int cmd_verify(const std::vector<std::string>& ins) {
    TilingCertificate cert;
    if (ins.size() == 1) {
        Manifest m = load(ins[0]);
        if (m.kind != "report") throw format_error("verify expects a certificate report");
        cert = cert_from_json(m.payload);
    } else {
        cert.system = system_from_manifest(load(ins[0]));
        for (size_t i = 1; i < ins.size(); ++i) {
            Manifest m = load(ins[i]);
            if (m.kind != "periodic_set") throw format_error("expected a periodic_set");
            cert.solution.push_back(periodic_set_from_json(m.payload));
        }
        if (cert.solution.size() != cert.system.tiles.size())
            throw format_error("need one periodic_set per tile");
    }
    CheckResult r = check_tiling(cert.system, cert.solution);
    if (!r) {
        emit(make_manifest("report", {{"report", "verify"}, {"ok", true}}));
        std::cerr << "tiling verified\n";
        return kPositive;
    }
    emit(make_manifest("report",
                       {{"report", "verify"},
                        {"ok", false},
                        {"point", to_json(cert.system.group(), r->point)},
                        {"count", r->count}}));
    std::cerr << "violation: coverage " << r->count << "\n";
    return kNegative;
}

int cmd_dilate(const std::string& tile_in, const std::string& set_in, i64 q,
               std::vector<i64> rs) {
    Tile f = tile_from_json(load(tile_in).payload);
    PeriodicSet a = periodic_set_from_json(load(set_in).payload);
    DilationReport rep = dilation_check(f, a, q, std::move(rs));
    json rows = json::array();
    for (size_t i = 0; i < rep.tested_r.size(); ++i) {
        json row{{"r", rep.tested_r[i]}, {"ok", !rep.results[i].has_value()}};
        if (rep.results[i]) row["count"] = rep.results[i]->count;
        rows.push_back(std::move(row));
    }
    emit(make_manifest("report", {{"report", "dilation"}, {"q", rep.q}, {"results", rows}}));
    std::cerr << (rep.all_ok() ? "all dilations tile\n" : "some dilation fails\n");
    return rep.all_ok() ? kPositive : kNegative;
}

int cmd_density(const std::string& in, const std::vector<i64>& radii) {
    Manifest m = load(in);
    json payload{{"report", "density"}};
    if (m.kind == "periodic_set") {
        PeriodicSet a = periodic_set_from_json(m.payload);
        payload["exact"] = fraction_json(exact_density(a));
        json windowed = json::array();
        for (const Fraction& f : density_estimate(a, radii)) windowed.push_back(fraction_json(f));
        payload["windowed"] = windowed;
    } else if (m.kind == "window") {
        WindowSet w = window_from_json(m.payload);
        i64 hits = 0;
        for (char c : w.membership) hits += c;
        payload["windowed"] = json::array({fraction_json(Fraction(hits, w.cells()))});
    } else {
        throw format_error("density expects a periodic_set or window");
    }
    emit(make_manifest("report", payload));
    return kPositive;
}

int cmd_decompose(const std::string& tile_in, const std::string& set_in, i64 q) {
    Tile f = normalize(tile_from_json(load(tile_in).payload));
    PeriodicSet a = periodic_set_from_json(load(set_in).payload);
    i64 q0 = q > 0 ? q : f.group.torsion_exponent() * f.size();
    for (i64 mult : {1, 2, 4}) {
        auto dec = weak_periodic_decompose(f, a, q0 * mult);
        if (!dec) continue;
        DecompositionReport chk = verify_decomposition(f, a, *dec);
        json parts = json::array();
        for (size_t i = 0; i < dec->parts.size(); ++i)
            parts.push_back({{"v", dec->dirs[i]}, {"set", to_json(dec->parts[i])}});
        json payload{{"report", "decomposition"},
                     {"q", dec->q},
                     {"parts", parts},
                     {"verified", chk.ok}};
        if (chk.detected) payload["detected_period"] = to_json(*chk.detected);
        emit(make_manifest("report", payload));
        std::cerr << "decomposed into " << dec->parts.size() << " part(s) at q = "
                  << dec->q << "\n";
        return kPositive;
    }
    emit(make_manifest("report", {{"report", "decomposition"}, {"found", false}}));
    std::cerr << "no weak-periodic decomposition found\n";
    return kNegative;
}

int cmd_structure_check(const std::string& tile_in, const std::string& set_in, i64 q) {
    Tile f = normalize(tile_from_json(load(tile_in).payload));
    PeriodicSet a = periodic_set_from_json(load(set_in).payload);
    ConsequenceReport rep = structure_consequence_check(f, a, q);
    emit(make_manifest("report", {{"report", "structure_check"},
                                  {"ok", rep.ok},
                                  {"detail", rep.detail}}));
    std::cerr << (rep.ok ? "structure consequences hold\n" : rep.detail + "\n");
    return rep.ok ? kPositive : kNegative;
}

int cmd_gallery(const std::string& kind, const std::vector<i64>& a,
                const std::vector<i64>& b, const std::string& alpha,
                const std::vector<i64>& window) {
    auto parse_alpha = [&]() -> std::pair<i64, i64> {
        auto slash = alpha.find('/');
        if (slash == std::string::npos) throw format_error("--alpha needs the form p/q");
        return {std::stoll(alpha.substr(0, slash)), std::stoll(alpha.substr(slash + 1))};
    };
    bool windowed = !window.empty();
    Vec w = windowed ? parse_window(window) : Vec{};
    auto table_fn = [](const std::vector<i64>& t) {
        return [t](i64 n) { return t[mod_floor(n, static_cast<i64>(t.size()))]; };
    };
    if (kind == "tile") {
        emit(make_manifest("tile", to_json(equidistributed_level4_tile())));
        return kPositive;
    }
    if (kind == "square" || kind == "rows") {
        if (a.empty()) throw format_error("--a is required");
        Orientation o = kind == "square" ? Orientation::columns : Orientation::rows;
        if (windowed)
            emit(make_manifest("window", to_json(gen_square_tiling(
                                             table_fn(a), o, {w[0], w[2]}, {w[1], w[3]}))));
        else
            emit(make_manifest("periodic_set", to_json(gen_square_tiling(a, o))));
        return kPositive;
    }
    if (kind == "disconnected") {
        if (a.empty() || b.empty()) throw format_error("--a and --b are required");
        if (windowed)
            emit(make_manifest("window",
                               to_json(gen_disconnected_tiling(table_fn(a), table_fn(b),
                                                               {w[0], w[2]}, {w[1], w[3]}))));
        else
            emit(make_manifest("periodic_set", to_json(gen_disconnected_tiling(a, b))));
        return kPositive;
    }
    if (kind == "alpha") {
        auto [p, q] = parse_alpha();
        if (windowed)
            emit(make_manifest("window", to_json(gen_a_alpha(p, q, {w[0], w[2]}, {w[1], w[3]}))));
        else
            emit(make_manifest("periodic_set", to_json(gen_a_alpha(p, q))));
        return kPositive;
    }
    throw format_error("unknown gallery kind: " + kind);
}

int cmd_render(const std::string& in, const std::string& format,
               const std::vector<i64>& window) {
    Manifest m = load(in);
    Raster r;
    if (m.kind == "window") {
        r = rasterize(window_from_json(m.payload));
    } else if (m.kind == "periodic_set") {
        Vec w = parse_window(window.empty() ? std::vector<i64>{0, 7, 0, 7} : window);
        r = rasterize(periodic_set_from_json(m.payload), {w[0], w[2]}, {w[1], w[3]});
    } else if (m.kind == "sudoku") {
        r = rasterize(sudoku_from_json(m.payload));
    } else if (m.kind == "report" && m.payload.value("report", "") == "wang_assignment") {
        r = rasterize(wang_assignment_from_json(m.payload));
    } else if (m.kind == "report" && m.payload.value("report", "") == "certificate") {
        Vec w = parse_window(window.empty() ? std::vector<i64>{0, 7, 0, 7} : window);
        r = rasterize(cert_from_json(m.payload), {w[0], w[2]}, {w[1], w[3]});
    } else {
        throw format_error("render does not handle this payload");
    }
    if (format == "svg")
        std::cout << render_svg(r);
    else if (format == "ascii")
        std::cout << render_ascii(r);
    else
        throw format_error("--format must be svg or ascii");
    return kPositive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for translational tiling equations"};
    app.require_subcommand(1);

    std::string in = "-", in2, format = "svg", gkind = "square", alpha;
    std::vector<std::string> ins;
    i64 max_index = 36, max_radius = 8, q = 0;
    int level = 0;
    std::vector<i64> window, rs, radii{4, 8}, avec, bvec, period{1, 1};

    auto* solve = app.add_subcommand("solve", "search for a periodic tiling");
    solve->add_option("input", in);
    solve->add_option("--max-index", max_index);
    solve->add_option("--level", level);

    auto* d1 = app.add_subcommand("decide1d", "decide tileability over Z");
    d1->add_option("input", in);

    auto* semi = app.add_subcommand("semidecide", "interleaved solve/obstruction search");
    semi->add_option("input", in);
    semi->add_option("--max-index", max_index)->default_val(256);
    semi->add_option("--max-radius", max_radius);

    auto* verify = app.add_subcommand("verify", "check a tiling certificate");
    verify->add_option("inputs", ins)->expected(1, -1);

    auto* dil = app.add_subcommand("dilate", "dilation-lemma check");
    dil->add_option("tile", in)->required();
    dil->add_option("set", in2)->required();
    dil->add_option("--q", q);
    dil->add_option("--r", rs)->delimiter(',');

    auto* dens = app.add_subcommand("density", "exact and windowed density");
    dens->add_option("input", in);
    dens->add_option("--radius", radii)->delimiter(',');

    auto* dec = app.add_subcommand("decompose", "weak-periodic decomposition");
    dec->add_option("tile", in)->required();
    dec->add_option("set", in2)->required();
    dec->add_option("--q", q);

    auto* sc = app.add_subcommand("structure-check", "slice-decomposition consequences");
    sc->add_option("tile", in)->required();
    sc->add_option("set", in2)->required();
    sc->add_option("--q", q);

    auto* gal = app.add_subcommand("gallery", "closed-form tiling generators");
    gal->add_option("--kind", gkind)->check(
        CLI::IsMember({"square", "rows", "disconnected", "alpha", "tile"}));
    gal->add_option("--a", avec)->delimiter(',');
    gal->add_option("--b", bvec)->delimiter(',');
    gal->add_option("--alpha", alpha);
    gal->add_option("--window", window)->delimiter(',');

    auto* wang = app.add_subcommand("wang", "Wang squares and the Golomb encoding");
    wang->require_subcommand(1);
    auto* wcheck = wang->add_subcommand("check", "matching rules on an assignment");
    wcheck->add_option("instance", in)->required();
    wcheck->add_option("assignment", in2)->required();
    auto* wsolve = wang->add_subcommand("solve", "periodic Wang solving");
    wsolve->add_option("instance", in)->required();
    wsolve->add_option("--period", period)->delimiter(',');
    auto* wenc = wang->add_subcommand("encode", "squares to polyominoes");
    wenc->add_option("instance", in)->required();
    auto* wdec = wang->add_subcommand("decode", "certificate back to an assignment");
    wdec->add_option("instance", in)->required();
    wdec->add_option("certificate", in2)->required();

    i64 sp = 3, sn = 2, sa = 0, sd = 1;
    std::vector<i64> rows{1, 9};
    std::vector<std::string> lines;
    auto* sud = app.add_subcommand("sudoku", "p-adic Sudoku boards");
    sud->require_subcommand(1);
    auto* sgen = sud->add_subcommand("gen", "standard solution window");
    sgen->add_option("--p", sp);
    sgen->add_option("--rows", rows)->delimiter(',');
    auto* sver = sud->add_subcommand("verify", "column and line rules on a window");
    sver->add_option("input", in);
    sver->add_option("--line", lines);
    auto* svdw = sud->add_subcommand("vdw", "van-der-Waerden failure witness");
    svdw->add_option("--p", sp);
    svdw->add_option("--N", sn);
    svdw->add_option("--a", sa);
    svdw->add_option("--d", sd);

    auto* col = app.add_subcommand("coloring", "Coloring(V,N,Sigma,Omega) instances");
    col->require_subcommand(1);
    auto* ccheck = col->add_subcommand("check", "membership over a box");
    ccheck->add_option("instance", in)->required();
    ccheck->add_option("tables", in2)->required();
    ccheck->add_option("--window", window)->delimiter(',');

    auto* ren = app.add_subcommand("render", "SVG / ASCII figures");
    ren->add_option("input", in);
    ren->add_option("--format", format);
    ren->add_option("--window", window)->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }

    try {
        if (*solve) return cmd_solve(in, max_index, level);
        if (*d1) return cmd_decide1d(in);
        if (*semi) return cmd_semidecide(in, max_index, max_radius);
        if (*verify) return cmd_verify(ins);
        if (*dil) return cmd_dilate(in, in2, q, rs);
        if (*dens) return cmd_density(in, radii);
        if (*dec) return cmd_decompose(in, in2, q);
        if (*sc) return cmd_structure_check(in, in2, q);
        if (*gal) return cmd_gallery(gkind, avec, bvec, alpha, window);
        if (*ren) return cmd_render(in, format, window);

        if (*wcheck) {
            WangInstance w = wang_from_json(load(in).payload);
            auto v = wang_check(w, assignment_from_manifest(load(in2)));
            json payload{{"report", "wang_check"}, {"ok", !v.has_value()}};
            if (v) {
                payload["pos"] = v->pos;
                payload["edge"] = v->horizontal ? "horizontal" : "vertical";
            }
            emit(make_manifest("report", payload));
            return v ? kNegative : kPositive;
        }
        if (*wsolve) {
            WangInstance w = wang_from_json(load(in).payload);
            if (period.size() != 2) throw format_error("--period needs p1,p2");
            auto a = wang_solve_periodic(w, period[0], period[1]);
            if (!a) {
                emit(make_manifest("report", {{"report", "wang_solve"}, {"found", false}}));
                return kNegative;
            }
            json payload = to_json(*a);
            payload["report"] = "wang_assignment";
            emit(make_manifest("report", payload));
            return kPositive;
        }
        if (*wenc) {
            GolombEncoding enc = golomb_encode(wang_from_json(load(in).payload));
            emit(make_manifest("report", {{"report", "encoding"},
                                          {"K", enc.K},
                                          {"instance", to_json(enc.instance)},
                                          {"system", to_json(enc.system)}}));
            return kPositive;
        }
        if (*wdec) {
            GolombEncoding enc = golomb_encode(wang_from_json(load(in).payload));
            Manifest cm = load(in2);
            WangAssignment a = decode_tiling(enc, cert_from_json(cm.payload));
            bool ok = !wang_check(enc.instance, a).has_value();
            json payload = to_json(a);
            payload["report"] = "wang_assignment";
            payload["matching_ok"] = ok;
            emit(make_manifest("report", payload));
            return ok ? kPositive : kNegative;
        }
        if (*sgen) {
            if (rows.size() != 2) throw format_error("--rows needs m0,m1");
            emit(make_manifest("sudoku",
                               to_json(standard_solution(make_padic(sp), rows[0], rows[1]))));
            return kPositive;
        }
        if (*sver) {
            SudokuWindow s = sudoku_from_json(load(in).payload);
            std::vector<std::pair<i64, i64>> slopes;
            for (const std::string& l : lines) {
                auto comma = l.find(',');
                if (comma == std::string::npos) throw format_error("--line needs a,b");
                slopes.emplace_back(std::stoll(l.substr(0, comma)),
                                    std::stoll(l.substr(comma + 1)));
            }
            SudokuReport rep = verify_sudoku_window(s.ctx, s, slopes);
            json cols = json::array(), lns = json::array();
            for (const auto& c : rep.columns)
                cols.push_back({{"n", c.n}, {"state", c.satisfied ? "satisfied" : "unconfirmed"}});
            for (const auto& l : rep.lines)
                lns.push_back({{"a", l.a}, {"b", l.b}, {"accepted", l.accepted}});
            emit(make_manifest("report", {{"report", "sudoku_verify"},
                                          {"columns", cols},
                                          {"lines", lns}}));
            return rep.lines_ok() ? kPositive : kNegative;
        }
        if (*svdw) {
            i64 j = vdw_violation(make_padic(sp), sn, sa, sd);
            emit(make_manifest("report", {{"report", "vdw"}, {"j", j}}));
            return kPositive;
        }
        if (*ccheck) {
            ColoringInstance inst = coloring_from_json(load(in).payload);
            json tj = load(in2).payload;
            std::vector<IntTable> tables;
            for (const auto& t : tj.at("tables")) {
                IntTable it;
                it.lo = t.at("lo").get<i64>();
                for (const auto& v : t.at("vals")) it.vals.push_back(v.get<i64>());
                tables.push_back(std::move(it));
            }
            std::optional<Clock2D> clock;
            if (tj.contains("clock"))
                clock = Clock2D{{tj["clock"][0].get<i64>(), tj["clock"][1].get<i64>()}};
            Vec w = parse_window(window.empty() ? std::vector<i64>{0, 5, 0, 5} : window);
            ColoringResult r =
                coloring_check(inst, tables, clock, {w[0], w[2]}, {w[1], w[3]});
            json payload{{"report", "coloring_check"}, {"ok", r.ok}};
            if (r.violation) payload["violation"] = *r.violation;
            if (r.offset) payload["offset"] = *r.offset;
            emit(make_manifest("report", payload));
            return r.ok ? kPositive : kNegative;
        }
    } catch (const format_error& e) {
        std::cerr << "format error";
        if (e.line) std::cerr << " at line " << e.line << ", column " << e.col;
        std::cerr << ": " << e.what() << "\n";
        return kFormat;
    } catch (const budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kUnknown;
    } catch (const json::exception& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kFormat;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFormat;
    }
    return 64;
}
