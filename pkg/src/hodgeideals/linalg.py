"""Exact echelon forms over Q on top of the row-reduction kernels.

The compiled kernel (``_kernels``) is used when it has been built; otherwise
the pure-Python one.  Set ``HODGEIDEALS_PURE_PYTHON=1`` to force the fallback.
"""

import os
from fractions import Fraction
from math import lcm

from . import _kernels_py

KERNEL_NAME = "python"
_kernel = _kernels_py
if not os.environ.get("HODGEIDEALS_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        _kernel = _compiled
        KERNEL_NAME = "cython"


def use_kernel(name):
    """Switch kernels at runtime ("python" or "cython"); returns the previous name."""
    global _kernel, KERNEL_NAME
    previous = KERNEL_NAME
    if name == "python":
        _kernel = _kernels_py
    elif name == "cython":
        from . import _kernels as compiled

        _kernel = compiled
    else:
        raise ValueError(f"unknown kernel {name!r}")
    KERNEL_NAME = name
    return previous


def integer_vector(values):
    """Scale a sequence of rationals to integers (positive multiple)."""
    den = 1
    for v in values:
        if v:
            den = lcm(den, Fraction(v).denominator)
    return [int(Fraction(v) * den) for v in values]


class Echelon:
    """A subspace of Q^ncols kept in (non-reduced) row echelon form.

    The pivot of a row is its first nonzero column.  Insertion never modifies
    existing rows, so rows can be handed out and multiplied by callers.
    """

    __slots__ = ("ncols", "pivots", "rows")

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = [None] * ncols
        self.rows = []

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Reduce an integer vector in place; return its first surviving column or -1."""
        return _kernel.reduce_vector(vec, self.pivots)

    def add(self, vec):
        """Insert an integer vector (consumed); return the new sparse row or None."""
        lead = _kernel.reduce_vector(vec, self.pivots)
        if lead < 0:
            return None
        row = _kernel.make_row(vec, lead)
        self.pivots[lead] = row
        self.rows.append(row)
        return row

    def contains(self, vec):
        return self.reduce(list(vec)) < 0

    def pivot_columns(self):
        return [j for j, r in enumerate(self.pivots) if r is not None]

    def reduced_rows(self):
        """Canonical reduced row echelon form as dense Fraction rows, sorted by pivot."""
        order = self.pivot_columns()
        dense = {}
        for j in reversed(order):
            p, entries = self.pivots[j]
            row = [Fraction(0)] * self.ncols
            for i, v in entries:
                row[i] = Fraction(v, p)
            for i in range(j + 1, self.ncols):
                c = row[i]
                if c and i in dense:
                    other = dense[i]
                    for t in range(i, self.ncols):
                        if other[t]:
                            row[t] -= c * other[t]
            dense[j] = row
        return [dense[j] for j in order]


def rank(rows):
    """Rank of a matrix given as rows of rationals."""
    ech = Echelon(len(rows[0]) if rows else 0)
    for r in rows:
        ech.add(integer_vector(r))
    return ech.rank


def nullspace(rows, ncols):
    """Basis of {a : rows . a = 0} as Fraction vectors, one per free column."""
    ech = Echelon(ncols)
    for r in rows:
        ech.add(integer_vector(r))
    rref = ech.reduced_rows()
    pivots = ech.pivot_columns()
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for pcol, row in zip(pivots, rref):
            vec[pcol] = -row[free]
        basis.append(vec)
    return basis
