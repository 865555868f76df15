"""Ideals cut out by divisorial valuation thresholds on a resolution tree.

For thresholds c_i the ideal {g : ord_{E_i}(g) >= c_i for all i} contains
every monomial of degree >= max ceil(c_i / rho_i), so it is determined by a
finite linear system on the coefficients of lower-degree jets.
"""

from fractions import Fraction

from .jets import _from_local, monomials_of_degree, unit_ideal
from .linalg import nullspace
from .poly import Polynomial

_X = Polynomial.variable(0, 2)
_Y = Polynomial.variable(1, 2)


def _ceil_div(a, b):
    return -(-a // b)


def _local_pullbacks(divisor):
    """Pullbacks of the local coordinates at the center through the divisor's chart."""
    steps = divisor.chart.steps[1:]  # drop the translation to the center
    coords = [_X, _Y]
    for step in steps:
        coords = [step.pullback(c) for c in coords]
    return coords


def valuation_ideal(tree, thresholds):
    """JetIdeal at the tree's center of {g : ord_{E_i}(g) >= thresholds[i]}."""
    thresholds = list(thresholds)
    if len(thresholds) != len(tree.divisors):
        raise ValueError("one threshold per exceptional divisor is required")
    if any(c < 0 for c in thresholds):
        raise ValueError("thresholds must be non-negative")
    active = [(d, c) for d, c in zip(tree.divisors, thresholds) if c > 0]
    if not active:
        return unit_ideal(2, tree.center)
    top = max(_ceil_div(c, d.rho) for d, c in active)
    monos = [e for deg in range(top) for e in monomials_of_degree(2, deg)]
    rows = []
    for divisor, c in active:
        u, v = _local_pullbacks(divisor)
        upow, vpow = [Polynomial.constant(1, 2)], [Polynomial.constant(1, 2)]
        for _ in range(top):
            upow.append(upow[-1] * u)
            vpow.append(vpow[-1] * v)
        constraints = {}
        for col, (a, b) in enumerate(monos):
            pulled = upow[a] * vpow[b]
            for (eu, ev), coef in pulled.terms.items():
                if eu < c:
                    constraints.setdefault((eu, ev), {})[col] = coef
        for key in sorted(constraints):
            row = [Fraction(0)] * len(monos)
            for col, coef in constraints[key].items():
                row[col] = coef
            rows.append(row)
    basis = nullspace(rows, len(monos)) if rows else [
        [Fraction(int(i == j)) for i in range(len(monos))] for j in range(len(monos))
    ]
    gens = [Polynomial(2, {monos[i]: c for i, c in enumerate(vec) if c}) for vec in basis]
    gens.extend(Polynomial.monomial(e) for e in monomials_of_degree(2, top))
    return _from_local(gens, 2, tree.center, hint=top)


def multiplier_thresholds(tree):
    return [max(0, d.v - d.k - 1) for d in tree.divisors]


def adjoint_thresholds(tree):
    return [max(0, d.v - d.k) for d in tree.divisors]


def multiplier_ideal_I0(tree):
    """I_0(D), the multiplier ideal of (1 - eps) D, at the tree's center."""
    return valuation_ideal(tree, multiplier_thresholds(tree))


def adjoint_ideal(tree):
    """adj(D) at the tree's center."""
    return valuation_ideal(tree, adjoint_thresholds(tree))
