"""Smoke tests for the python bindings; run under ctest with PYTHONPATH
pointing at python/ and the build directory."""

import tessella as t


def group2():
    return {"d": 2, "torsion": []}


def tile(points, d=2):
    return {"group": {"d": d, "torsion": []}, "points": points}


def run():
    assert t.f_p(5, 50) == 2
    assert t.f_p(3, 0) == 1
    assert t.is_sp_cutoff(3, [1, 2, 1, 1, 2, 2, 1, 2, 1])
    assert not t.is_sp_cutoff(3, [1, 1, 2, 2, 1, 1, 2, 2, 1])

    assert not t.decide_1d(tile([[0], [2], [3]], d=1))["tileable"]
    one_d = t.decide_1d(tile([[0], [2]], d=1))
    assert one_d["tileable"] and one_d["universal_period"] >= 2

    square = tile([[0, 0], [0, 1], [1, 0], [1, 1]])
    cert = t.solve(square)
    assert cert and cert["verified"]
    assert t.check_tiling(square, cert["solution"])["ok"]

    a = cert["solution"][0]
    assert t.exact_density(a) == (1, 4)
    assert t.dilation_check(square, a)["all_ok"]
    dec = t.decompose(square, a)
    assert dec and dec["verified"]
    assert t.structure_check(square, a)["ok"]

    alpha = t.gen_a_alpha(1, 2)
    eq_tile = t.equidistributed_tile()
    sysm = {"level": 4, "tiles": [eq_tile]}
    assert t.check_tiling(sysm, [alpha])["ok"]
    assert "<svg" in t.render_svg(alpha, [0, 0], [7, 7])
    assert t.render_ascii(alpha, [0, 0], [7, 7]).count("\n") == 8

    mono = {"colors": ["a"], "squares": [["a", "a", "a", "a"]]}
    asg = t.wang_solve(mono, 1, 1)
    assert asg and t.wang_check(mono, asg)["ok"]
    assert t.wang_encode(mono)["K"] == 8

    sud = t.standard_sudoku(3, -12, 12)
    rep = t.verify_sudoku(sud, [(1, 0), (0, 3)])
    assert rep["lines_ok"]

    semi = t.semi_decide(tile([[0], [2], [3]], d=1))
    assert semi["result"] == "not_tileable"

    try:
        t.solve({"group": "nonsense"})
    except t.FormatError:
        pass
    else:
        raise AssertionError("malformed payload accepted")

    print("python smoke tests passed")


if __name__ == "__main__":
    run()
