import os

import pytest

from hodgeideals import jets
from hodgeideals.errors import GroundFieldError, NotSquarefreeError
from hodgeideals.poly import Polynomial, parse
from hodgeideals.projective import (
    DECLARED,
    ProjectiveHypersurface,
    assemble_Zk,
    check_multiplicity_conditions,
    check_degree_bound,
    check_independent_conditions,
    check_jet_separation,
    check_triviality_bound,
    dehomogenize,
    is_squarefree_form,
    jet_level,
    load,
    verify,
)
from hodgeideals.surface import hodge_ideals

DATA = os.path.join(os.path.dirname(__file__), "data")
XYZ = ["x", "y", "z"]
P4 = ["x0", "x1", "x2", "x3", "x4"]
QUARTIC = "x0*(x1^3+x2^3+x3^3+x4^3)+x1^4+x2^4+x3^4+x4^4"


def plane(eq):
    return ProjectiveHypersurface(parse(eq, XYZ), XYZ)


def test_xyz():
    hyp = plane("x*y*z")
    assert len(hyp.points) == 3
    Z = assemble_Zk(hyp, 1)
    assert Z.degree == 3 and Z.dimension == 0
    assert all(ideal.colength == 1 for _, ideal in Z.components)
    assert check_degree_bound(hyp, 1).passed
    entry = check_independent_conditions(hyp, 1)
    assert entry.passed and "rank 3 of 3" in entry.detail
    assert assemble_Zk(hyp, 0).is_empty
    assert check_triviality_bound(hyp, 0).passed


def test_cuspidal_cubic():
    hyp = plane("z*y^2-x^3")
    Z = assemble_Zk(hyp, 1)
    assert Z.degree == 4
    entry = check_independent_conditions(hyp, 1)
    assert entry.passed and "degree 3: rank 4 of 4" in entry.detail
    tb = check_triviality_bound(hyp, 1)
    assert tb.passed and tb.vacuous


def test_smooth_conic_is_empty():
    hyp = plane("x^2+y^2-z^2")
    for k in range(3):
        assert assemble_Zk(hyp, k).is_empty
    assert verify(hyp).passed


def test_points_at_infinity_are_found():
    # the lines x = 0, y = 0 and x = y meet at [0:0:1] and the node y*z... at infinity
    hyp = plane("x*y*(x-y)*z")
    coords = sorted(p.coords for p in hyp.points)
    assert (0, 1, 0) in coords and (1, 0, 0) in coords and (1, 1, 0) in coords
    assert verify(hyp, [0, 1]).passed


def _homogenize(f, chart, deg):
    """Form of degree ``deg`` in x, y, z restricting to f on the chart-th affine chart."""
    terms = {}
    for e, c in f.terms.items():
        full = list(e)
        full.insert(chart, deg - sum(e))
        terms[tuple(full)] = c
    return Polynomial(3, terms)


def test_two_charts_agree():
    # three lines through [1:1:1]; compute there in the charts z = 1 and x = 1
    H = parse("(x-y)*(y-z)*(x-z)", XYZ)
    hyp = ProjectiveHypersurface(H, XYZ)
    assert [p.coords for p in hyp.points] == [(1, 1, 1)]
    for k in range(3):
        via_z = hodge_ideals(dehomogenize(H, 2), (1, 1), k)[k]
        via_x = hodge_ideals(dehomogenize(H, 0), (1, 1), k)[k]
        assert via_z.colength == via_x.colength
        # a generator moves to the other chart by homogenizing and dehomogenizing (a unit factor)
        for src, dst, c_src, c_dst in ((via_z, via_x, 2, 0), (via_x, via_z, 0, 2)):
            for g in src.generators():
                G = _homogenize(g, c_src, max(g.degree(), 0))
                assert jets.member(dst, dehomogenize(G, c_dst))


def test_descending_cosupport():
    hyp = plane("x*y*(x-y)*z")
    prev = set()
    for k in range(3):
        cos = {p.coords for p, _ in assemble_Zk(hyp, k).components}
        assert prev <= cos
        prev = cos


def test_declared_quartic_in_P4():
    hyp = ProjectiveHypersurface(parse(QUARTIC, P4), P4, DECLARED, [(["1", "0", "0", "0", "0"], 3)])
    Z = assemble_Zk(hyp, 1)
    assert Z.degree == 5
    assert check_independent_conditions(hyp, 1).passed
    assert check_multiplicity_conditions(hyp, 3).passed
    for j in (1, 2, 3):
        assert check_jet_separation(hyp, 3, j).passed
    with pytest.raises(ValueError):
        hyp.local_ideal(hyp.points[0], 2)  # m k = 6 >= n


def test_declared_point_validation():
    with pytest.raises(ValueError):
        ProjectiveHypersurface(parse(QUARTIC, P4), P4, DECLARED, [(["1", "0", "0", "0", "0"], 2)])
    with pytest.raises(ValueError):
        ProjectiveHypersurface(parse(QUARTIC, P4), P4, DECLARED, [(["0", "1", "0", "0", "0"], 3)])


def test_jet_levels():
    # n = 4, m = 3: j <= 2 uses m, j >= 3 uses m - 2
    assert [jet_level(4, 3, j) for j in (1, 2, 3, 4)] == [1, 1, 4, 5]
    with pytest.raises(ValueError):
        jet_level(4, 2, 1)


def test_squarefree_forms():
    assert is_squarefree_form(parse("x*y*z", XYZ))
    assert not is_squarefree_form(parse("x^2*y", XYZ))
    with pytest.raises(NotSquarefreeError):
        plane("x^2*z")


def test_irrational_singular_points_raise():
    with pytest.raises(GroundFieldError):
        plane("(x^2+y^2-z^2)*(x-y)")


def test_load_files():
    for name in ("xyz.json", "cuspidal_cubic.json", "smooth_quadric.json", "quartic_triple_point_P4.json"):
        hyp, ks = load(os.path.join(DATA, name))
        assert verify(hyp, ks).passed
