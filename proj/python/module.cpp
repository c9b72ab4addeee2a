// Python bindings: thin JSON-string bridge over the C++ engine.  Domain
// objects travel as interchange payloads (see docs/format.md); the package
// wrapper converts to and from dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tessella/io.hpp"
#include "tessella/render.hpp"

namespace py = pybind11;
using namespace tessella;

namespace {

json parse(const std::string& s) { return json::parse(s); }
std::string dump(const json& j) { return j.dump(); }

TileSystem system_arg(const std::string& s, int level) {
    json j = parse(s);
    TileSystem sys = j.contains("tiles") ? system_from_json(j)
                                         : make_system({tile_from_json(j)});
    if (level > 0) sys.level = level;
    return sys;
}

std::string cert_json(const TilingCertificate& cert) {
    json sol = json::array();
    for (const PeriodicSet& s : cert.solution) sol.push_back(to_json(s));
    return dump({{"system", to_json(cert.system)},
                 {"solution", sol},
                 {"verified", cert.verified}});
}

}  // namespace

PYBIND11_MODULE(_tessella, m) {
    m.doc() = "exact engine for translational tiling equations";

    // translators run newest-first, so the base class goes in first
    py::register_exception<error>(m, "EngineError", PyExc_RuntimeError);
    py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<format_error>(m, "FormatError", PyExc_ValueError);

    m.def("solve", [](const std::string& sys_json, i64 max_index, int level)
                       -> std::optional<std::string> {
        TileSystem sys = system_arg(sys_json, level);
        for (const Lattice& lat : enumerate_lattices(sys.group().rank, max_index))
            if (auto cert = solve_periodic(sys, lat)) return cert_json(*cert);
        return std::nullopt;
    }, py::arg("system"), py::arg("max_index") = 36, py::arg("level") = 0);

    m.def("decide_1d", [](const std::string& tile_json) {
        Decision1D d = decide_1d(normalize(tile_from_json(parse(tile_json))));
        if (const auto* t = std::get_if<Tileable1D>(&d))
            return dump({{"tileable", true},
                         {"universal_period", t->universal_period},
                         {"witness", to_json(t->witness)}});
        return dump({{"tileable", false},
                     {"stuck_prefix", std::get<NotTileable1D>(d).stuck_prefix}});
    }, py::arg("tile"));

    m.def("semi_decide", [](const std::string& sys_json, i64 max_index, i64 max_radius) {
        SemiBudget b;
        b.max_index = max_index;
        b.max_radius = max_radius;
        SemiResult r = semi_decide(system_arg(sys_json, 0), b);
        switch (r.kind) {
            case SemiResult::Kind::tileable:
                return dump({{"result", "tileable"},
                             {"certificate", parse(cert_json(*r.certificate))}});
            case SemiResult::Kind::not_tileable:
                return dump({{"result", "not_tileable"},
                             {"obstruction_radius", r.obstruction->radius}});
            default:
                return dump({{"result", "unknown"}});
        }
    }, py::arg("system"), py::arg("max_index") = 64, py::arg("max_radius") = 4);

    m.def("check_tiling", [](const std::string& sys_json,
                             const std::vector<std::string>& sets) {
        std::vector<PeriodicSet> a;
        for (const std::string& s : sets) a.push_back(periodic_set_from_json(parse(s)));
        CheckResult r = check_tiling(system_arg(sys_json, 0), a);
        if (!r) return dump({{"ok", true}});
        TileSystem sys = system_arg(sys_json, 0);
        return dump({{"ok", false},
                     {"point", to_json(sys.group(), r->point)},
                     {"count", r->count}});
    }, py::arg("system"), py::arg("sets"));

    m.def("dilation_check", [](const std::string& tile_json, const std::string& set_json,
                               i64 q, std::vector<i64> rs) {
        DilationReport rep = dilation_check(tile_from_json(parse(tile_json)),
                                            periodic_set_from_json(parse(set_json)), q,
                                            std::move(rs));
        json rows = json::array();
        for (size_t i = 0; i < rep.tested_r.size(); ++i)
            rows.push_back({{"r", rep.tested_r[i]}, {"ok", !rep.results[i].has_value()}});
        return dump({{"q", rep.q}, {"all_ok", rep.all_ok()}, {"results", rows}});
    }, py::arg("tile"), py::arg("set"), py::arg("q") = 0,
       py::arg("rs") = std::vector<i64>{});

    m.def("exact_density", [](const std::string& set_json) {
        Fraction f = exact_density(periodic_set_from_json(parse(set_json)));
        return std::make_pair(f.num, f.den);
    }, py::arg("set"));

    m.def("decompose", [](const std::string& tile_json, const std::string& set_json,
                          i64 q) -> std::optional<std::string> {
        Tile f = normalize(tile_from_json(parse(tile_json)));
        PeriodicSet a = periodic_set_from_json(parse(set_json));
        auto dec = weak_periodic_decompose(f, a, q);
        if (!dec) return std::nullopt;
        DecompositionReport chk = verify_decomposition(f, a, *dec);
        json parts = json::array();
        for (size_t i = 0; i < dec->parts.size(); ++i)
            parts.push_back({{"v", dec->dirs[i]}, {"set", to_json(dec->parts[i])}});
        json out{{"q", dec->q}, {"parts", parts}, {"verified", chk.ok}};
        if (chk.detected) out["detected_period"] = to_json(*chk.detected);
        return dump(out);
    }, py::arg("tile"), py::arg("set"), py::arg("q") = 0);

    m.def("structure_check", [](const std::string& tile_json,
                                const std::string& set_json, i64 q) {
        ConsequenceReport rep =
            structure_consequence_check(normalize(tile_from_json(parse(tile_json))),
                                        periodic_set_from_json(parse(set_json)), q);
        return dump({{"ok", rep.ok}, {"detail", rep.detail}});
    }, py::arg("tile"), py::arg("set"), py::arg("q") = 0);

    m.def("gen_a_alpha", [](i64 p, i64 q) { return dump(to_json(gen_a_alpha(p, q))); },
          py::arg("p"), py::arg("q"));
    m.def("equidistributed_tile",
          [] { return dump(to_json(equidistributed_level4_tile())); });

    m.def("wang_solve", [](const std::string& w_json, i64 p1, i64 p2)
                            -> std::optional<std::string> {
        auto a = wang_solve_periodic(wang_from_json(parse(w_json)), p1, p2);
        if (!a) return std::nullopt;
        return dump(to_json(*a));
    }, py::arg("instance"), py::arg("p1"), py::arg("p2"));

    m.def("wang_check", [](const std::string& w_json, const std::string& a_json) {
        auto v = wang_check(wang_from_json(parse(w_json)),
                            wang_assignment_from_json(parse(a_json)));
        if (!v) return dump({{"ok", true}});
        return dump({{"ok", false},
                     {"pos", v->pos},
                     {"edge", v->horizontal ? "horizontal" : "vertical"}});
    }, py::arg("instance"), py::arg("assignment"));

    m.def("wang_encode", [](const std::string& w_json) {
        GolombEncoding enc = golomb_encode(wang_from_json(parse(w_json)));
        return dump({{"K", enc.K}, {"system", to_json(enc.system)}});
    }, py::arg("instance"));

    m.def("f_p", [](i64 p, i64 n) { return f_p(make_padic(p), n); }, py::arg("p"),
          py::arg("n"));

    m.def("is_sp_cutoff", [](i64 p, const std::vector<i64>& word) {
        return is_sp_cutoff(make_padic(p), word).has_value();
    }, py::arg("p"), py::arg("word"));

    m.def("standard_sudoku", [](i64 p, i64 m0, i64 m1) {
        return dump(to_json(standard_solution(make_padic(p), m0, m1)));
    }, py::arg("p"), py::arg("m0"), py::arg("m1"));

    m.def("verify_sudoku", [](const std::string& s_json,
                              const std::vector<std::pair<i64, i64>>& slopes) {
        SudokuWindow s = sudoku_from_json(parse(s_json));
        SudokuReport rep = verify_sudoku_window(s.ctx, s, slopes);
        json lines = json::array();
        for (const auto& l : rep.lines)
            lines.push_back({{"a", l.a}, {"b", l.b}, {"accepted", l.accepted}});
        return dump({{"lines_ok", rep.lines_ok()}, {"lines", lines}});
    }, py::arg("sudoku"), py::arg("slopes"));

    m.def("render_svg", [](const std::string& set_json, const Vec& lo, const Vec& hi) {
        return render_svg(rasterize(periodic_set_from_json(parse(set_json)), lo, hi));
    }, py::arg("set"), py::arg("lo"), py::arg("hi"));

    m.def("render_ascii", [](const std::string& set_json, const Vec& lo, const Vec& hi) {
        return render_ascii(rasterize(periodic_set_from_json(parse(set_json)), lo, hi));
    }, py::arg("set"), py::arg("lo"), py::arg("hi"));
}
