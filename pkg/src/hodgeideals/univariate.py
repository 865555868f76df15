"""Dense univariate polynomials over Q.

A polynomial is a list of :class:`~fractions.Fraction` coefficients, lowest
degree first, with no trailing zeros; the zero polynomial is ``[]``.  These
helpers back root finding, resultants and the small amount of number-field
arithmetic the singular-point search needs.
"""

from fractions import Fraction
from math import gcd, isqrt


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p):
    return len(p) - 1


def add(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p, q):
    return add(p, [-c for c in q])


def scale(p, c):
    if c == 0:
        return []
    return [c * a for a in p]


def mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def derivative(p):
    return trim([i * p[i] for i in range(1, len(p))])


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def divmod_(p, q):
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    p = [Fraction(c) for c in p]
    dq = len(q) - 1
    lead = Fraction(q[-1])
    quot = [Fraction(0)] * max(len(p) - dq, 0)
    while len(p) - 1 >= dq and p:
        shift = len(p) - 1 - dq
        c = p[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            p[shift + i] -= c * b
        p = trim(p)
    return trim(quot), p


def monic(p):
    if not p:
        return []
    lead = Fraction(p[-1])
    return [Fraction(c) / lead for c in p]


def gcd_poly(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def squarefree_part(p):
    p = trim(p)
    if len(p) <= 1:
        return monic(p) if p else []
    g = gcd_poly(p, derivative(p))
    return monic(divmod_(p, g)[0])


def integer_content_form(p):
    """Scale p to a primitive integer polynomial (same roots)."""
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    return ints


def _divisors(n):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(p):
    """Distinct rational roots of p, with multiplicities, as a dict root -> multiplicity."""
    p = trim(p)
    if not p:
        raise ValueError("the zero polynomial has every number as a root")
    roots = {}
    zero_mult = 0
    while p and p[0] == 0:
        p = p[1:]
        zero_mult += 1
    if zero_mult:
        roots[Fraction(0)] = zero_mult
    work = [Fraction(c) for c in p]
    if len(work) <= 1:
        return roots
    ints = integer_content_form(squarefree_part(work))
    candidates = set()
    for a in _divisors(ints[0]):
        for b in _divisors(ints[-1]):
            candidates.add(Fraction(a, b))
            candidates.add(Fraction(-a, b))
    for r in sorted(candidates):
        if evaluate(ints, r) != 0:
            continue
        mult = 0
        lin = [-r, Fraction(1)]
        while True:
            q, rem = divmod_(work, lin)
            if rem:
                break
            work = q
            mult += 1
        roots[r] = mult
    return roots


def remove_rational_roots(p):
    """Return (roots, rest) where rest has no rational root and p = rest * prod (t - r)^mult."""
    roots = rational_roots(p)
    rest = [Fraction(c) for c in trim(p)]
    for r, mult in roots.items():
        for _ in range(mult):
            rest = divmod_(rest, [-r, Fraction(1)])[0]
    return roots, rest


def determinant(rows):
    """Exact determinant of a square matrix of Fractions by Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        pv = a[col][col]
        det *= pv
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                f = f / pv
                row_r, row_c = a[r], a[col]
                for c in range(col, n):
                    row_r[c] -= f * row_c[c]
    return det


def resultant(p, q, dp=None, dq=None):
    """Sylvester resultant with optional formal degrees dp, dq (coefficients padded with zeros)."""
    dp = degree(p) if dp is None else dp
    dq = degree(q) if dq is None else dq
    if dp < 0 or dq < 0:
        return Fraction(0)
    if dp == 0 and dq == 0:
        return Fraction(1)
    pp = list(p) + [Fraction(0)] * (dp + 1 - len(p))
    qq = list(q) + [Fraction(0)] * (dq + 1 - len(q))
    size = dp + dq
    rows = []
    for i in range(dq):
        row = [Fraction(0)] * size
        for j, c in enumerate(reversed(pp)):
            row[i + j] = c
        rows.append(row)
    for i in range(dp):
        row = [Fraction(0)] * size
        for j, c in enumerate(reversed(qq)):
            row[i + j] = c
        rows.append(row)
    return determinant(rows)


def interpolate(xs, ys):
    """Newton interpolation through the points (xs[i], ys[i])."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = []
    for i in range(n - 1, -1, -1):
        poly = add(mul(poly, [-Fraction(xs[i]), Fraction(1)]), [coef[i]])
    return poly


# -- arithmetic in Q[t]/(modulus), with splitting on zero divisors -----------


class ZeroDivisorSplit(Exception):
    """Raised when an element is a proper zero divisor; carries a nontrivial factor."""

    def __init__(self, factor):
        self.factor = factor
        super().__init__()


def _reduce_mod(p, modulus):
    return divmod_(p, modulus)[1]


def _inverse_mod(a, modulus):
    r0, r1 = monic(modulus), trim(a)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisorSplit(monic(r0))
    return scale(_reduce_mod(s0, modulus), 1 / r0[0])


def gcd_degree_over_quotient(polys, modulus):
    """Degrees of gcd(polys) over each factor of Q[t]/(modulus) found by splitting.

    ``polys`` are polynomials in y whose coefficients are univariate in t.
    ``modulus`` must be squarefree.  Returns a list of (factor, degree) pairs
    whose factors multiply to ``modulus``.
    """
    modulus = monic(modulus)
    try:
        red = []
        for poly in polys:
            coeffs = [_reduce_mod(c, modulus) for c in poly]
            while coeffs and not coeffs[-1]:
                coeffs.pop()
            red.append(coeffs)
        red = [p for p in red if p]
        if not red:
            return [(modulus, -1)]
        g = red[0]
        for other in red[1:]:
            g = _gcd_over_quotient(g, other, modulus)
        return [(modulus, len(g) - 1)]
    except ZeroDivisorSplit as split:
        other, rem = divmod_(modulus, split.factor)
        assert not rem
        return gcd_degree_over_quotient(polys, split.factor) + gcd_degree_over_quotient(polys, other)


def _gcd_over_quotient(a, b, modulus):
    def strip(p):
        p = [_reduce_mod(c, modulus) for c in p]
        while p and not p[-1]:
            p.pop()
        return p

    a, b = strip(a), strip(b)
    while b:
        inv = _inverse_mod(b[-1], modulus)
        while len(a) >= len(b):
            f = _reduce_mod(mul(a[-1], inv), modulus)
            shift = len(a) - len(b)
            a = list(a)
            for i, c in enumerate(b):
                a[shift + i] = _reduce_mod(sub(a[shift + i], mul(f, c)), modulus)
            a = strip(a)
            if not a:
                break
        a, b = b, a
    if a:
        _inverse_mod(a[-1], modulus)
    return a
