"""Pure-Python row-reduction kernels (reference implementation and fallback).

Rows live in a fraction-free sparse form ``(pivot_value, entries)`` where
``entries`` is a list of ``(column, value)`` pairs with positive pivot value
at the first column and coprime integer values.  Vectors being reduced are
dense lists of Python ints and are modified in place.
"""

from math import gcd


def reduce_vector(vec, pivots):
    """Eliminate every pivot column of ``vec``; return the first surviving column or -1.

    ``pivots[j]`` is the sparse row whose pivot is column j, or None.  The
    result is a nonzero integer multiple of the reduced vector.
    """
    n = len(vec)
    lead = -1
    j = 0
    while j < n:
        a = vec[j]
        if a:
            row = pivots[j]
            if row is None:
                if lead < 0:
                    lead = j
            else:
                p, entries = row
                if p != 1:
                    g = gcd(p, a)
                    p //= g
                    a //= g
                    start = lead if lead >= 0 else j
                    for i in range(start, n):
                        if vec[i]:
                            vec[i] *= p
                for i, r in entries:
                    vec[i] -= a * r
        j += 1
    return lead


def make_row(vec, lead):
    """Primitive sparse row from a reduced dense vector with first nonzero at ``lead``."""
    g = 0
    n = len(vec)
    for i in range(lead, n):
        if vec[i]:
            g = gcd(g, vec[i])
            if g == 1:
                break
    if vec[lead] < 0:
        g = -g
    entries = [(i, vec[i] // g) for i in range(lead, n) if vec[i]]
    return entries[0][1], entries
