"""Embedded resolution of plane curve singularities by point blow-ups over Q.

Every point that is visited is described in local coordinates (u, v) in which
the exceptional divisors through the point are coordinate axes.  Blowing up
the origin uses the two standard charts

    chart 1: (u, v) -> (u, u*v)    exceptional divisor {u = 0}
    chart 2: (u, v) -> (u*v, v)    exceptional divisor {v = 0}

and chart 2 is only consulted at its origin, the one point chart 1 misses.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction

from . import univariate as uni
from .errors import ArityError, GroundFieldError, IterationCapError, NotSquarefreeError
from .jets import as_point
from .poly import Polynomial

DEFAULT_BLOWUP_CAP = 128

_U = Polynomial.variable(0, 2)
_V = Polynomial.variable(1, 2)


@dataclass(frozen=True)
class ChartStep:
    kind: str  # "translate", "blowup1" or "blowup2"
    offset: tuple = ()

    def pullback(self, p):
        if self.kind == "translate":
            return p.translate(self.offset)
        if self.kind == "blowup1":
            return p.compose([_U, _U * _V])
        if self.kind == "blowup2":
            return p.compose([_U * _V, _V])
        raise ValueError(f"unknown chart step {self.kind!r}")

    def describe(self):
        if self.kind == "translate":
            return "translate(" + ", ".join(str(c) for c in self.offset) + ")"
        return {"blowup1": "(u,v)->(u,u*v)", "blowup2": "(u,v)->(u*v,v)"}[self.kind]


@dataclass(frozen=True)
class ChartMap:
    steps: tuple = ()

    def then(self, step):
        return ChartMap(self.steps + (step,))

    def pullback(self, p):
        for step in self.steps:
            p = step.pullback(p)
        return p

    def describe(self):
        return [s.describe() for s in self.steps]


def _translate(offset):
    return ChartStep("translate", as_point(offset))


BLOWUP1 = ChartStep("blowup1")
BLOWUP2 = ChartStep("blowup2")


@dataclass(frozen=True)
class ExceptionalDivisor:
    """E_i with v = ord_E(f*D), k = coefficient in K_{Y/X}, rho = ord_E of the maximal ideal."""

    id: int
    chart: ChartMap
    v: int
    k: int
    rho: int
    parents: tuple = ()

    @property
    def parent(self):
        return max(self.parents) if self.parents else None

    def to_json(self):
        return {
            "id": self.id,
            "v": self.v,
            "k": self.k,
            "rho": self.rho,
            "parent": self.parent,
            "chart": self.chart.describe(),
        }


@dataclass(frozen=True)
class PointState:
    chart: ChartMap
    strict: Polynomial
    u_div: int = None
    v_div: int = None

    @property
    def through(self):
        return tuple(d for d in (self.u_div, self.v_div) if d is not None)

    def strict_passes(self):
        return self.strict.constant_term() == 0


class PlaneCurve:
    """A reduced plane curve V(h) in A^2 over Q."""

    def __init__(self, h, names=("x", "y")):
        if h.nvars != 2:
            raise ArityError("a plane curve needs a polynomial in exactly two variables")
        if h.is_zero():
            raise ValueError("the zero polynomial does not define a curve")
        self.h = h
        self.names = tuple(names)
        if not is_squarefree(h):
            raise NotSquarefreeError(f"{h.render(self.names)} is not squarefree (the divisor is not reduced)")

    def __repr__(self):
        return f"PlaneCurve({self.h.render(self.names)})"


@dataclass(frozen=True)
class ResolutionTree:
    curve: PlaneCurve
    center: tuple
    divisors: tuple
    final_points: tuple = ()
    certificate: tuple = field(default=(), compare=False)

    def __len__(self):
        return len(self.divisors)

    def divisor(self, i):
        return self.divisors[i]

    def ord_divisor(self, i, p):
        return ord_divisor(self, i, p)

    def lct(self):
        return lct(self)

    def with_extra_blowup(self, point_index=0):
        """Blow up one more (already SNC) point; the result is again a log resolution."""
        state = self.final_points[point_index]
        mult = state.strict.order() if state.strict_passes() else 0
        through = [self.divisors[i] for i in state.through]
        new = ExceptionalDivisor(
            id=len(self.divisors),
            chart=state.chart.then(BLOWUP1),
            v=mult + sum(d.v for d in through),
            k=1 + sum(d.k for d in through),
            rho=sum(d.rho for d in through) or 1,
            parents=tuple(sorted(state.through)),
        )
        return replace(self, divisors=self.divisors + (new,), final_points=())

    def to_json(self):
        return {
            "center": [str(c) for c in self.center],
            "divisors": [d.to_json() for d in self.divisors],
            "snc_points": list(self.certificate),
        }


# -- squarefreeness and singular points ---------------------------------------------


def _shear(h):
    """(lam, g) with g(x, y) = h(x + lam*y, y) having a nonzero constant y^deg coefficient."""
    d = h.degree()
    top = h.homogeneous_part(d)
    lam = 0
    while top.evaluate((lam, 1)) == 0:
        lam += 1
    x, y = Polynomial.variable(0, 2), Polynomial.variable(1, 2)
    return lam, h.compose([x + lam * y, y])


def _in_y(p, x0):
    return p.substitute_value(0, x0).to_univariate(1)


def is_squarefree(h):
    d = h.degree()
    if d <= 1:
        return True
    _, g = _shear(h)
    gy = g.derivative(1)
    for x0 in range(d * (d - 1) + 1):
        a = _in_y(g, x0)
        if len(uni.gcd_poly(a, _in_y(gy, x0))) == 1:
            return True
    return False


def _resultant_in_x(f, g, bound):
    """Res_y(f, g) as a univariate polynomial in x (f has constant leading y-coefficient)."""
    df, dg = f.degree_in(1), g.degree_in(1)
    xs = [Fraction(i) for i in range(bound + 1)]
    ys = [uni.resultant(_in_y(f, x0), _in_y(g, x0), df, dg) for x0 in xs]
    return uni.interpolate(xs, ys)


def _as_coefficient_lists(p):
    """p(x, y) as a list over powers of y of univariate coefficient lists in x."""
    out = [[] for _ in range(p.degree_in(1) + 1)]
    for (ex, ey), c in p.terms.items():
        row = out[ey]
        while len(row) <= ex:
            row.append(Fraction(0))
        row[ex] += c
    return [uni.trim(r) for r in out]


def singular_points(h):
    """Rational singular points of V(h) in A^2, sorted; raises GroundFieldError for irrational ones."""
    d = h.degree()
    if d <= 1:
        return []
    lam, g = _shear(h)
    gx, gy = g.derivative(0), g.derivative(1)
    bound = d * (d - 1)
    proj = None
    found = 0
    for c in range(d + 2):
        comb = gx + gy * c
        if comb.is_zero():
            continue
        res = _resultant_in_x(g, comb, bound)
        if not res:
            continue
        proj = res if proj is None else uni.gcd_poly(proj, res)
        found += 1
        if found >= 3:
            break
    if proj is None or len(proj) <= 1:
        return []
    roots, rest = uni.remove_rational_roots(proj)
    points = []
    for x0 in sorted(roots):
        common = uni.gcd_poly(uni.gcd_poly(_in_y(g, x0), _in_y(gx, x0)), _in_y(gy, x0))
        if len(common) <= 1:
            continue
        yroots, yrest = uni.remove_rational_roots(common)
        if len(yrest) > 1:
            raise GroundFieldError(
                f"singular point over x = {x0} (after the shear x -> x + {lam}*y) has irrational "
                f"y-coordinates: factor {Polynomial.from_univariate(yrest).render(('t',))}"
            )
        for y0 in sorted(yroots):
            points.append((x0 + lam * y0, y0))
    rest = uni.squarefree_part(rest)
    if len(rest) > 1:
        polys = [_as_coefficient_lists(p) for p in (g, gx, gy)]
        for factor, deg in uni.gcd_degree_over_quotient(polys, rest):
            if deg >= 1:
                raise GroundFieldError(
                    f"V({h}) has singular points over the roots of the irrational factor "
                    f"{Polynomial.from_univariate(factor).render(('t',))} (x-coordinate after the shear "
                    f"x -> x + {lam}*y); only rational singular points are supported"
                )
    return sorted(points)


# -- blow-ups -----------------------------------------------------------------------


def _is_snc(state):
    s = state.strict
    if not state.strict_passes():
        return True
    if s.order() >= 2:
        return False
    through = state.through
    if len(through) == 0:
        return True
    if len(through) == 2:
        return False
    if state.u_div is not None:
        return s.terms.get((0, 1), 0) != 0
    return s.terms.get((1, 0), 0) != 0


def _describe_point(state):
    return {
        "chart": state.chart.describe(),
        "divisors": list(state.through),
        "strict_transform_passes": state.strict_passes(),
    }


def resolve(curve, center=(0, 0), cap=DEFAULT_BLOWUP_CAP):
    """Embedded log resolution of ``curve`` over ``center`` by rational point blow-ups."""
    if isinstance(curve, Polynomial):
        curve = PlaneCurve(curve)
    center = as_point(center)
    h = curve.h
    if h.evaluate(center) != 0:
        raise ValueError(f"center {tuple(map(str, center))} does not lie on the curve")
    chart0 = ChartMap((_translate(center),))
    start = PointState(chart0, h.translate(center))
    if start.strict.order() == 1:
        return ResolutionTree(curve, center, (), (start,), (_describe_point(start),))
    divisors = []
    finals = []
    work = [start]
    while work:
        state = work.pop(0)
        if _is_snc(state):
            finals.append(state)
            continue
        if len(divisors) >= cap:
            raise IterationCapError(f"resolution needed more than {cap} blow-ups")
        new_states, junctions, divisor = _blow_up(state, len(divisors), divisors)
        divisors.append(divisor)
        finals.extend(junctions)
        work.extend(new_states)
    cert = tuple(_describe_point(s) for s in finals)
    return ResolutionTree(curve, center, tuple(divisors), tuple(finals), cert)


def _blow_up(state, new_id, divisors):
    s = state.strict
    m = s.order()
    through = [divisors[i] for i in state.through]
    divisor = ExceptionalDivisor(
        id=new_id,
        chart=state.chart.then(BLOWUP1),
        v=m + sum(d.v for d in through),
        k=1 + sum(d.k for d in through),
        rho=sum(d.rho for d in through) or 1,
        parents=tuple(sorted(state.through)),
    )
    new_states, junctions = [], []

    chart1 = state.chart.then(BLOWUP1)
    e, s1 = s.compose([_U, _U * _V]).divmod_by_monomial_power(0)
    assert e == m
    on_e = s1.substitute_value(0, 0).to_univariate(1)
    roots, rest = uni.remove_rational_roots(on_e)
    if len(rest) > 1 and len(uni.gcd_poly(rest, uni.derivative(rest))) > 1:
        raise GroundFieldError(
            f"strict transform is tangent to or singular on E{new_id} over an irrational point "
            f"(chart {chart1.describe()}, factor {Polynomial.from_univariate(rest).render(('t',))})"
        )
    for t in sorted(roots):
        if t == 0:
            new_states.append(PointState(chart1, s1, new_id, state.v_div))
        else:
            new_states.append(
                PointState(chart1.then(_translate((0, t))), s1.translate((0, t)), new_id, None)
            )
    if state.v_div is not None and 0 not in roots:
        junctions.append(PointState(chart1, s1, new_id, state.v_div))

    chart2 = state.chart.then(BLOWUP2)
    e2, s2 = s.compose([_U * _V, _V]).divmod_by_monomial_power(1)
    assert e2 == m
    here = PointState(chart2, s2, state.u_div, new_id)
    if here.strict_passes():
        new_states.append(here)
    elif state.u_div is not None:
        junctions.append(here)
    return new_states, junctions, divisor


# -- the valuation oracle ---------------------------------------------------------


def ord_divisor(tree, i, p):
    """ord_{E_i}(p) for a polynomial p in the original coordinates."""
    if p.is_zero():
        raise ValueError("the zero polynomial has infinite order")
    pulled = tree.divisors[i].chart.pullback(p)
    return pulled.divmod_by_monomial_power(0)[0]


def lct(tree):
    """Log canonical threshold at the center: min(1, min (k_i + 1) / v_i)."""
    best = Fraction(1)
    for d in tree.divisors:
        best = min(best, Fraction(d.k + 1, d.v))
    return best
