"""Exact engine for translational tiling equations.

Thin dict-based wrapper over the compiled ``_tessella`` module: domain
objects are interchange payloads (see docs/format.md) passed as dicts.
"""

import json as _json

try:
    from tessella import _tessella as _core  # installed package layout
except ImportError:  # build-tree layout: extension next to the package dir
    import _tessella as _core

FormatError = _core.FormatError
BudgetError = _core.BudgetError
EngineError = _core.EngineError

f_p = _core.f_p
is_sp_cutoff = _core.is_sp_cutoff


def _out(s):
    return None if s is None else _json.loads(s)


def solve(system, max_index=36, level=0):
    return _out(_core.solve(_json.dumps(system), max_index, level))


def decide_1d(tile):
    return _out(_core.decide_1d(_json.dumps(tile)))


def semi_decide(system, max_index=64, max_radius=4):
    return _out(_core.semi_decide(_json.dumps(system), max_index, max_radius))


def check_tiling(system, sets):
    return _out(_core.check_tiling(_json.dumps(system), [_json.dumps(s) for s in sets]))


def dilation_check(tile, set_, q=0, rs=()):
    return _out(_core.dilation_check(_json.dumps(tile), _json.dumps(set_), q, list(rs)))


def exact_density(set_):
    return _core.exact_density(_json.dumps(set_))


def decompose(tile, set_, q=0):
    return _out(_core.decompose(_json.dumps(tile), _json.dumps(set_), q))


def structure_check(tile, set_, q=0):
    return _out(_core.structure_check(_json.dumps(tile), _json.dumps(set_), q))


def gen_a_alpha(p, q):
    return _out(_core.gen_a_alpha(p, q))


def equidistributed_tile():
    return _out(_core.equidistributed_tile())


def wang_solve(instance, p1, p2):
    return _out(_core.wang_solve(_json.dumps(instance), p1, p2))


def wang_check(instance, assignment):
    return _out(_core.wang_check(_json.dumps(instance), _json.dumps(assignment)))


def wang_encode(instance):
    return _out(_core.wang_encode(_json.dumps(instance)))


def standard_sudoku(p, m0, m1):
    return _out(_core.standard_sudoku(p, m0, m1))


def verify_sudoku(sudoku, slopes):
    return _out(_core.verify_sudoku(_json.dumps(sudoku), [tuple(s) for s in slopes]))


def render_svg(set_, lo, hi):
    return _core.render_svg(_json.dumps(set_), list(lo), list(hi))


def render_ascii(set_, lo, hi):
    return _core.render_ascii(_json.dumps(set_), list(lo), list(hi))
