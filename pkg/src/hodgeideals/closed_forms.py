"""Closed-form Hodge ideals in arbitrary dimension.

Three situations have explicit answers: simple normal crossing divisors
(monomial ideals), ordinary singular points of multiplicity m in the range
mk < n (powers of the maximal ideal), and diagonal hypersurfaces, whose
log-canonicity threshold is read off from alpha = sum 1/a_i.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .jets import monomials_of_degree


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _render_monomial(e, names):
    parts = []
    for name, p in zip(names, e):
        if p == 1:
            parts.append(name)
        elif p > 1:
            parts.append(f"{name}^{p}")
    return "*".join(parts) or "1"


def default_names(n):
    return [f"x{i + 1}" for i in range(n)]


class MonomialIdeal:
    """A monomial ideal in n variables, stored by its minimal generators."""

    def __init__(self, arity, generators):
        self.arity = arity
        gens = {tuple(g) for g in generators}
        for g in gens:
            if len(g) != arity:
                raise ValueError("generator exponent has the wrong length")
        minimal = [g for g in gens if not any(o != g and _divides(o, g) for o in gens)]
        self.generators = tuple(sorted(minimal, key=lambda e: (sum(e), tuple(-x for x in e))))

    @classmethod
    def unit(cls, arity):
        return cls(arity, [(0,) * arity])

    @classmethod
    def maximal_power(cls, arity, q):
        """m^q (the unit ideal when q <= 0)."""
        if q <= 0:
            return cls.unit(arity)
        return cls(arity, monomials_of_degree(arity, q))

    @property
    def is_unit(self):
        return self.generators == ((0,) * self.arity,)

    def contains(self, exponent):
        return any(_divides(g, exponent) for g in self.generators)

    def colength(self):
        """Length of O/I at the origin; None when the ideal is not primary to the origin."""
        pure = {}
        for g in self.generators:
            support = [i for i, p in enumerate(g) if p]
            if len(support) == 1:
                i = support[0]
                pure[i] = min(pure.get(i, g[i]), g[i])
            elif not support:
                return 0
        if len(pure) < self.arity:
            return None
        return sum(1 for e in product(*(range(pure[i]) for i in range(self.arity))) if not self.contains(e))

    def render(self, names=None):
        names = names or default_names(self.arity)
        if self.is_unit:
            return "(1)"
        return "(" + ", ".join(_render_monomial(g, names) for g in self.generators) + ")"

    def to_json(self, names=None):
        names = names or default_names(self.arity)
        return {"arity": self.arity, "generators": [_render_monomial(g, names) for g in self.generators]}

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and (self.arity, self.generators) == (other.arity, other.generators)

    def __hash__(self):
        return hash((self.arity, self.generators))

    def __repr__(self):
        return f"MonomialIdeal{self.render()}"


def _check_range(name, value, low):
    if not isinstance(value, int) or value < low:
        raise ValueError(f"{name} must be an integer >= {low}, got {value!r}")


def snc_hodge_ideal(n, r, k):
    """I_k of the SNC divisor x_1 ... x_r = 0 in n-space.

    Generated by x^a with 0 <= a_i <= k and sum a_i = k(r - 1), in the first r
    variables.
    """
    _check_range("n", n, 1)
    _check_range("r", r, 1)
    _check_range("k", k, 0)
    if r > n:
        raise ValueError("r must not exceed n")
    target = k * (r - 1)
    gens = [a + (0,) * (n - r) for a in product(range(k + 1), repeat=r) if sum(a) == target]
    return MonomialIdeal(n, gens)


@dataclass(frozen=True)
class OrdinaryQuery:
    n: int
    m: int
    k: int = 0

    def __post_init__(self):
        _check_range("n", self.n, 2)
        _check_range("m", self.m, 2)
        _check_range("k", self.k, 0)


@dataclass(frozen=True)
class SandwichBounds:
    """(h)*m^a + m^b  <=  I_1  <=  (h)*m^(a-1) + m^(b-1), with dim(I_1 / lower) known."""

    n: int
    m: int
    lower_h_power: int
    lower_m_power: int
    upper_h_power: int
    upper_m_power: int
    defect_length: int

    def render(self):
        def part(hp, mp):
            h_part = "(h)" if hp <= 0 else f"(h)*m^{hp}"
            return f"{h_part} + m^{mp}"

        return (
            f"{part(self.lower_h_power, self.lower_m_power)}  <=  I_1  <=  "
            f"{part(self.upper_h_power, self.upper_m_power)};  length(I_1 / lower) = {self.defect_length}"
        )

    def to_json(self):
        return {
            "kind": "bounds",
            "lower": {"h_times_m_power": self.lower_h_power, "m_power": self.lower_m_power},
            "upper": {"h_times_m_power": self.upper_h_power, "m_power": self.upper_m_power},
            "defect_length": self.defect_length,
            "text": self.render(),
        }


@dataclass(frozen=True)
class NoClosedForm:
    reason: str = "no closed form known for this (n, m, k)"

    def render(self):
        return self.reason

    def to_json(self):
        return {"kind": "none", "reason": self.reason}


@dataclass(frozen=True)
class ExactOrdinary:
    n: int
    exponent: int
    ideal: MonomialIdeal

    def render(self):
        return "O (unit ideal)" if self.exponent == 0 else f"m^{self.exponent}"

    def to_json(self):
        return {"kind": "exact", "m_power": self.exponent, "text": self.render()}


def ordinary_hodge_ideal(q):
    """I_k at an ordinary point of multiplicity m on a hypersurface in n-space.

    Exact m^((k+1)m - n) when mk < n; the two-sided bound for k = 1, m >= n;
    otherwise a NoClosedForm marker.
    """
    n, m, k = q.n, q.m, q.k
    if m * k < n:
        e = max(0, (k + 1) * m - n)
        return ExactOrdinary(n, e, MonomialIdeal.maximal_power(n, e))
    if k == 1 and m >= n:
        return SandwichBounds(
            n=n,
            m=m,
            lower_h_power=m - n - 1,
            lower_m_power=2 * m - n,
            upper_h_power=m - n - 2,
            upper_m_power=2 * m - n - 1,
            defect_length=m * comb(m - 2, n - 2),
        )
    return NoClosedForm()


def triviality_threshold(n, m):
    """Largest k with I_k trivial at an ordinary m-fold point in n-space (-1 if none)."""
    _check_range("n", n, 1)
    _check_range("m", m, 1)
    return n // m - 1


def diagonal_alpha(exponents):
    exps = list(exponents)
    if not exps or any(not isinstance(a, int) or a < 2 for a in exps):
        raise ValueError("diagonal exponents must be integers >= 2")
    return sum((Fraction(1, a) for a in exps), Fraction(0))


def diagonal_triviality_bound(exponents):
    """alpha - 1 for f = sum x_i^a_i; every integer k up to it has I_k trivial at 0."""
    return diagonal_alpha(exponents) - 1


def symbolic_power_bound(n, m, r, k):
    """The q with I_k contained in the q-th symbolic power of the multiplicity-m locus."""
    if m < 1 or not 1 <= r <= n:
        raise ValueError("need m >= 1 and 1 <= r <= n")
    return max(0, min(m - 1, (k + 1) * m - r))


def lattice_point_count(r, k):
    """Number of a in [0, k]^r with sum k(r - 1), by inclusion-exclusion."""
    target = k * (r - 1)
    total = 0
    for j in range(r + 1):
        rest = target - j * (k + 1)
        if rest < 0:
            break
        total += (-1) ** j * comb(r, j) * comb(rest + r - 1, r - 1)
    return total


__all__ = [
    "ExactOrdinary",
    "MonomialIdeal",
    "NoClosedForm",
    "OrdinaryQuery",
    "SandwichBounds",
    "diagonal_alpha",
    "diagonal_triviality_bound",
    "lattice_point_count",
    "ordinary_hodge_ideal",
    "snc_hodge_ideal",
    "symbolic_power_bound",
    "triviality_threshold",
]
