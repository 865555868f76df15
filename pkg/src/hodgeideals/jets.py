"""Local m-primary ideals at rational points, represented by truncated jets.

A :class:`JetIdeal` stores the image of a local ideal ``a`` in the jet ring
O/m^M at its center, in echelon form, together with the least ``M0`` such
that m^M0 is contained in ``a``.  Since M = M0 + 1 by default, every
question about ``a`` (membership, containment, colength) is a finite linear
algebra question.

Certification uses Nakayama's lemma: if every monomial of degree t lies in
a + m^(t+1) then m^t lies in a.  Jet columns are ordered by degree, so the
image of ``a`` in O/m^(t+1) is read off from the pivots of lower degree.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, lcm

from .errors import ArityError, CenterMismatchError, NotPrimaryError
from .linalg import Echelon
from .poly import Polynomial, default_names

DEFAULT_CAP = 64


def as_point(coords):
    return tuple(Fraction(c) for c in coords)


def monomials_of_degree(n, d):
    """Exponent tuples of total degree d, in lex-descending order."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


@lru_cache(maxsize=None)
def _table(n, T):
    monos = []
    starts = []
    for d in range(T):
        starts.append(len(monos))
        monos.extend(monomials_of_degree(n, d))
    starts.append(len(monos))
    index = {e: i for i, e in enumerate(monos)}
    return tuple(monos), index, tuple(starts)


@lru_cache(maxsize=None)
def _shift_table(n, T, var):
    monos, index, _ = _table(n, T)
    out = []
    for e in monos:
        f = list(e)
        f[var] += 1
        out.append(index.get(tuple(f), -1))
    return tuple(out)


def jet_count(n, T):
    """Number of monomials of degree < T in n variables."""
    return comb(n + T - 1, n) if T > 0 else 0


def _jet_vector(local_poly, T):
    monos, index, _ = _table(local_poly.nvars, T)
    kept = [(index[e], c) for e, c in local_poly.terms.items() if e in index]
    den = 1
    for _, c in kept:
        den = lcm(den, c.denominator)
    vec = [0] * len(monos)
    for j, c in kept:
        vec[j] = c.numerator * (den // c.denominator)
    return vec


def _shift(row, shift_table, ncols):
    vec = [0] * ncols
    nonzero = False
    for i, v in row[1]:
        j = shift_table[i]
        if j >= 0:
            vec[j] = v
            nonzero = True
    return vec if nonzero else None


def _closure(local_gens, n, T):
    """Echelon basis of the image of the ideal generated by local_gens in O/m^T."""
    ncols = jet_count(n, T)
    ech = Echelon(ncols)
    shifts = [_shift_table(n, T, i) for i in range(n)]
    todo = []
    for g in local_gens:
        row = ech.add(_jet_vector(g, T))
        if row is not None:
            todo.append(row)
    while todo:
        row = todo.pop()
        for st in shifts:
            vec = _shift(row, st, ncols)
            if vec is None:
                continue
            new = ech.add(vec)
            if new is not None:
                todo.append(new)
    return ech


def _certified_order(ech, n, T):
    """Least t < T with every degree-t column a pivot, or None."""
    _, _, starts = _table(n, T)
    pivots = ech.pivots
    for t in range(T):
        if all(pivots[j] is not None for j in range(starts[t], starts[t + 1])):
            return t
    return None


def _restrict(ech, ncols):
    out = Echelon(ncols)
    for row in ech.rows:
        p, entries = row
        if entries[0][0] >= ncols:
            continue
        kept = [(i, v) for i, v in entries if i < ncols]
        new = (p, kept)
        out.pivots[kept[0][0]] = new
        out.rows.append(new)
    out.rows.sort(key=lambda r: r[1][0][0])
    return out


@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple
    center: tuple

    def __init__(self, generators, center):
        object.__setattr__(self, "generators", tuple(generators))
        object.__setattr__(self, "center", as_point(center))


class JetIdeal:
    """An m-primary local ideal at a rational point (immutable)."""

    __slots__ = ("arity", "center", "M", "M0", "_ech", "_mingens")

    def __init__(self, arity, center, M, M0, ech):
        self.arity = arity
        self.center = as_point(center)
        self.M = M
        self.M0 = M0
        self._ech = ech
        self._mingens = None

    # -- queries -----------------------------------------------------------

    @property
    def is_unit(self):
        return self.M0 == 0

    @property
    def colength(self):
        ncols = jet_count(self.arity, self.M0)
        return ncols - sum(1 for j in self._ech.pivot_columns() if j < ncols)

    def jet_basis(self):
        """Canonical reduced echelon basis (rows of Fractions over degree < M monomials)."""
        return self._ech.reduced_rows()

    def cobasis(self):
        """Monomials (local coordinates) spanning the quotient O/a."""
        monos, _, _ = _table(self.arity, self.M0)
        pivots = self._ech.pivots
        return [monos[j] for j in range(len(monos)) if pivots[j] is None]

    def _local_vector(self, local_poly):
        return _jet_vector(local_poly, self.M)

    def contains_local(self, local_poly):
        if local_poly.is_zero():
            return True
        return self._ech.reduce(self._local_vector(local_poly)) < 0

    def normal_form(self, local_poly):
        """Coordinates of local_poly in O/a with respect to :meth:`cobasis` (exact)."""
        monos, index, _ = _table(self.arity, self.M)
        ncols = jet_count(self.arity, self.M0)
        vals = [Fraction(0)] * len(monos)
        for e, c in local_poly.terms.items():
            j = index.get(e)
            if j is not None:
                vals[j] = c
        for j, row in zip(self._ech.pivot_columns(), self.jet_basis()):
            c = vals[j]
            if c:
                for i in range(j, len(vals)):
                    if row[i]:
                        vals[i] -= c * row[i]
        pivots = self._ech.pivots
        return [vals[j] for j in range(ncols) if pivots[j] is None]

    def local_generators(self):
        """Lifted jet basis plus every monomial of degree M0 (local coordinates)."""
        monos, _, _ = _table(self.arity, self.M)
        gens = []
        for row in self.jet_basis():
            gens.append(Polynomial(self.arity, {monos[i]: c for i, c in enumerate(row) if c}))
        gens.extend(Polynomial.monomial(e) for e in monomials_of_degree(self.arity, self.M0))
        return gens

    def minimal_local_generators(self):
        """Generators whose classes form a basis of a / m*a, chosen by (degree, grlex)."""
        if self._mingens is not None:
            return self._mingens
        if self.is_unit:
            self._mingens = [Polynomial.constant(1, self.arity)]
            return self._mingens
        ncols = jet_count(self.arity, self.M)
        quotient = Echelon(ncols)
        shifts = [_shift_table(self.arity, self.M, i) for i in range(self.arity)]
        for row in self._ech.rows:
            for st in shifts:
                vec = _shift(row, st, ncols)
                if vec is not None:
                    quotient.add(vec)
        candidates = sorted(self.local_generators(), key=_display_key)
        chosen = []
        for g in candidates:
            if quotient.add(_jet_vector(g, self.M)) is not None:
                chosen.append(g.primitive())
        self._mingens = chosen
        return chosen

    def generators(self):
        """Minimal generating set in global coordinates."""
        back = tuple(-c for c in self.center)
        return [g.translate(back) for g in self.minimal_local_generators()]

    def at_truncation(self, M):
        """The same ideal represented with a larger truncation order."""
        if M <= self.M:
            return self
        return _from_local(self.minimal_local_generators(), self.arity, self.center, truncation=M, hint=self.M0)

    def to_json(self, names=None):
        names = names or default_names(self.arity)
        return {
            "center": [str(c) for c in self.center],
            "M0": self.M0,
            "colength": self.colength,
            "generators": [g.render(names) for g in self.generators()],
        }

    def render(self, names=None):
        names = names or default_names(self.arity)
        return "(" + ", ".join(g.render(names) for g in self.generators()) + ")"

    def __eq__(self, other):
        if not isinstance(other, JetIdeal):
            return NotImplemented
        if self.arity != other.arity or self.center != other.center or self.M0 != other.M0:
            return False
        return contains(self, other) and contains(other, self)

    def __hash__(self):
        return hash((self.arity, self.center, self.M0, self.colength))

    def __repr__(self):
        return f"JetIdeal{self.render()} at {tuple(str(c) for c in self.center)}"


# -- construction -------------------------------------------------------------


def _from_local(local_gens, n, center, cap=DEFAULT_CAP, truncation=None, hint=None):
    local_gens = [g for g in local_gens if not g.is_zero()]
    if not local_gens:
        raise NotPrimaryError("the zero ideal is not m-primary")
    if any(g.nvars != n for g in local_gens):
        raise ArityError("generators live in different rings")
    low = min(g.order() for g in local_gens)
    T = max(low + 2, (hint + 1) if hint is not None else 0, 2)
    T = min(T, cap + 1)
    while True:
        ech = _closure(local_gens, n, T)
        M0 = _certified_order(ech, n, T)
        if M0 is not None:
            break
        if T >= cap + 1:
            raise NotPrimaryError(
                f"could not certify m^t inside the ideal for t <= {cap}; the ideal is not m-primary "
                "at this point or needs a larger cap"
            )
        T = min(cap + 1, T + max(2, T // 2))
    M = max(M0 + 1, truncation or 0)
    if M > T:
        ech = _closure(local_gens, n, M)
        T = M
    return JetIdeal(n, center, M, M0, _restrict(ech, jet_count(n, M)))


def from_generators(gens, center=None, *, cap=DEFAULT_CAP, truncation=None, hint=None):
    """JetIdeal of the local ideal generated by ``gens`` at ``center``."""
    if isinstance(gens, GeneratorSet):
        center = gens.center
        gens = gens.generators
    gens = list(gens)
    if not gens:
        raise NotPrimaryError("no generators given")
    n = gens[0].nvars
    center = as_point(center if center is not None else (0,) * n)
    if len(center) != n:
        raise ArityError("center has the wrong number of coordinates")
    local = [g.translate(center) for g in gens]
    return _from_local(local, n, center, cap=cap, truncation=truncation, hint=hint)


def unit_ideal(arity, center=None):
    center = as_point(center if center is not None else (0,) * arity)
    return _from_local([Polynomial.constant(1, arity)], arity, center)


def maximal_power(center, q, arity=None):
    """m^q at ``center`` (the unit ideal when q <= 0)."""
    center = as_point(center)
    arity = arity or len(center)
    if q <= 0:
        return unit_ideal(arity, center)
    gens = [Polynomial.monomial(e) for e in monomials_of_degree(arity, q)]
    return _from_local(gens, arity, center, hint=q)


def _display_key(g):
    # by degree, then graded-lex with x before y
    return (g.degree(), tuple(-e for e in g.leading_exponent()))


def _check_pair(a, b):
    if a.arity != b.arity:
        raise ArityError("ideals live in different rings")
    if a.center != b.center:
        raise CenterMismatchError(f"centers differ: {a.center} vs {b.center}")


def contains(a, b):
    """True iff the local ideal b is contained in a."""
    _check_pair(a, b)
    return all(a.contains_local(g) for g in b.minimal_local_generators())


def member(a, p):
    """True iff the polynomial p lies in the local ideal a."""
    if p.nvars != a.arity:
        raise ArityError("polynomial and ideal live in different rings")
    if p.is_zero():
        return True
    return a.contains_local(p.translate(a.center))


def product(a, b):
    _check_pair(a, b)
    gens = [g * h for g in a.minimal_local_generators() for h in b.minimal_local_generators()]
    return _from_local(gens, a.arity, a.center, hint=a.M0 + b.M0)


def ideal_sum(a, b):
    _check_pair(a, b)
    gens = a.minimal_local_generators() + b.minimal_local_generators()
    return _from_local(gens, a.arity, a.center, hint=min(a.M0, b.M0))


def power(a, e):
    if e < 0:
        raise ValueError("exponent must be non-negative")
    result = unit_ideal(a.arity, a.center)
    for _ in range(e):
        result = product(result, a)
    return result


def colength(a):
    return a.colength


def order_at_center(p, center):
    """Vanishing order of p at center."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no order")
    return p.translate(as_point(center)).order()
