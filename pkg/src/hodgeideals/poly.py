"""Exact multivariate polynomials over Q.

Polynomials are sparse: a dict from exponent tuples to nonzero
:class:`~fractions.Fraction` coefficients.  Values are treated as immutable
once built; every operation returns a new polynomial.
"""

import re
from fractions import Fraction
from itertools import product as iproduct
from math import comb

from . import univariate as uni
from .errors import ArityError, ParseError, UnknownVariableError

DEFAULT_NAMES = {1: ("t",), 2: ("x", "y"), 3: ("x", "y", "z")}


def default_names(n):
    return DEFAULT_NAMES.get(n, tuple(f"x{i}" for i in range(n)))


def grlex_key(exps):
    return (sum(exps), exps)


class Polynomial:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        if nvars < 1:
            raise ArityError("a polynomial ring needs at least one variable")
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != nvars:
                    raise ArityError(f"monomial {exps} does not have {nvars} exponents")
                if c:
                    clean[tuple(exps)] = Fraction(c)
        self.terms = clean
        self._hash = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, c, nvars):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i, nvars):
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def from_univariate(cls, coeffs, nvars=1, var=0):
        terms = {}
        for d, c in enumerate(coeffs):
            exps = [0] * nvars
            exps[var] = d
            terms[tuple(exps)] = c
        return cls(nvars, terms)

    # -- basic queries --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def order(self):
        """Lowest total degree of a term (vanishing order at the origin)."""
        if not self.terms:
            raise ValueError("the zero polynomial has no order")
        return min(sum(e) for e in self.terms)

    def degree_in(self, var):
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def homogeneous_part(self, d):
        return Polynomial(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def truncate(self, below):
        """Keep only the terms of total degree < below."""
        return Polynomial(self.nvars, {e: c for e, c in self.terms.items() if sum(e) < below})

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self):
        """Terms in descending graded-lex order (the canonical display order)."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_exponent(self):
        return max(self.terms, key=grlex_key)

    def evaluate(self, point):
        point = [Fraction(p) for p in point]
        if len(point) != self.nvars:
            raise ArityError("point has the wrong number of coordinates")
        total = Fraction(0)
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def to_univariate(self, var=0):
        """Coefficient list in ``var``; the polynomial may not involve other variables."""
        out = [Fraction(0)] * (self.degree_in(var) + 1)
        for exps, c in self.terms.items():
            if any(e for i, e in enumerate(exps) if i != var):
                raise ArityError("polynomial involves more than one variable")
            out[exps[var]] += c
        return uni.trim(out)

    def coefficients_in(self, var):
        """Map d -> coefficient polynomial (same ring, var removed) of var^d."""
        out = {}
        for exps, c in self.terms.items():
            rest = exps[:var] + (0,) + exps[var + 1 :]
            out.setdefault(exps[var], {})[rest] = c
        return {d: Polynomial(self.nvars, t) for d, t in out.items()}

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ArityError(f"cannot combine polynomials in {self.nvars} and {other.nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def divmod_by_monomial_power(self, var):
        """Largest e with var^e dividing self, together with the quotient."""
        if not self.terms:
            raise ValueError("zero polynomial")
        e = min(exps[var] for exps in self.terms)
        if e == 0:
            return 0, self
        terms = {}
        for exps, c in self.terms.items():
            new = list(exps)
            new[var] -= e
            terms[tuple(new)] = c
        return e, Polynomial(self.nvars, terms)

    def exact_quotient(self, divisor):
        """self / divisor, raising ArithmeticError when the division is not exact."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e = max(divisor.terms)  # lex order
        lead_c = divisor.terms[lead_e]
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem)
            if any(a < b for a, b in zip(e, lead_e)):
                raise ArithmeticError("polynomial division is not exact")
            shift = tuple(a - b for a, b in zip(e, lead_e))
            c = rem[e] / lead_c
            quot[shift] = c
            for de, dc in divisor.terms.items():
                key = tuple(a + b for a, b in zip(de, shift))
                v = rem.get(key, 0) - c * dc
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return Polynomial(self.nvars, quot)

    # -- calculus and substitution --------------------------------------------

    def derivative(self, var):
        if not 0 <= var < self.nvars:
            raise ArityError(f"variable index {var} out of range")
        terms = {}
        for exps, c in self.terms.items():
            if exps[var]:
                new = list(exps)
                new[var] -= 1
                terms[tuple(new)] = c * exps[var]
        return Polynomial(self.nvars, terms)

    def compose(self, substitution):
        """Substitute ``substitution[i]`` for the i-th variable."""
        substitution = list(substitution)
        if len(substitution) != self.nvars:
            raise ArityError(f"expected {self.nvars} substitutions, got {len(substitution)}")
        if not substitution:
            return self
        target = substitution[0].nvars
        if any(s.nvars != target for s in substitution):
            raise ArityError("substituted polynomials live in different rings")
        powers = [{0: Polynomial.constant(1, target)} for _ in substitution]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * substitution[i]
            return cache[e]

        out = {}
        for exps, c in self.terms.items():
            term = None
            for i, e in enumerate(exps):
                if e:
                    term = power(i, e) if term is None else term * power(i, e)
            if term is None:
                key = (0,) * target
                out[key] = out.get(key, 0) + c
                continue
            for te, tc in term.terms.items():
                out[te] = out.get(te, 0) + c * tc
        return Polynomial(target, out)

    def translate(self, shift):
        """p(x + shift): moves the point ``shift`` to the origin."""
        shift = [Fraction(s) for s in shift]
        if not any(shift):
            return self
        n = self.nvars
        out = {}
        for exps, c in self.terms.items():
            # expand prod (x_i + s_i)^{e_i} with binomial coefficients
            choices = []
            for e, s in zip(exps, shift):
                if s == 0:
                    choices.append([(e, Fraction(1))])
                else:
                    choices.append([(j, comb(e, j) * s ** (e - j)) for j in range(e + 1)])
            for combo in iproduct(*choices):
                key = tuple(j for j, _ in combo)
                v = c
                for _, f in combo:
                    v *= f
                out[key] = out.get(key, 0) + v
        return Polynomial(n, out)

    def substitute_value(self, var, value):
        """Set variable ``var`` to a rational number (ring arity unchanged)."""
        value = Fraction(value)
        out = {}
        for exps, c in self.terms.items():
            key = exps[:var] + (0,) + exps[var + 1 :]
            out[key] = out.get(key, 0) + c * value ** exps[var]
        return Polynomial(self.nvars, out)

    # -- display --------------------------------------------------------------

    def render(self, names=None):
        names = names or default_names(self.nvars)
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                (names[i] if e == 1 else f"{names[i]}^{e}") for i, e in enumerate(exps) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def primitive(self):
        """Positive rational multiple with coprime integer coefficients and positive leading term."""
        if not self.terms:
            return self
        ints = uni.integer_content_form([c for _, c in self.sorted_terms()])
        scale = Fraction(ints[0]) / self.sorted_terms()[0][1]
        if ints[0] < 0:
            scale = -scale
        return self * scale

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.render()!r})"


# -- module-level operations --------------------------------------------------


def partial_derivative(p, var):
    return p.derivative(var)


def derivative_multi(p, beta):
    for var, times in enumerate(beta):
        for _ in range(times):
            p = p.derivative(var)
    return p


def twisted_derivative(g, h, beta, k):
    """h^(k+1) * d^beta(g / h), as an exact polynomial.

    The quotient-rule recursion keeps the derivative in the form N / h^j;
    the final rescaling by h^(k+1-j) is a multiplication when |beta| <= k.
    """
    if h.is_zero():
        raise ZeroDivisionError("h must be nonzero")
    numer, power = g, 1
    grads = [h.derivative(i) for i in range(h.nvars)]
    for var, times in enumerate(beta):
        for _ in range(times):
            numer = numer.derivative(var) * h - numer * grads[var] * power
            power += 1
    shift = k + 1 - power
    if shift >= 0:
        return numer * h**shift
    try:
        return numer.exact_quotient(h ** (-shift))
    except ArithmeticError as exc:
        raise AssertionError("twisted derivative is not a polynomial; arithmetic bug") from exc


def compose(p, substitution):
    return p.compose(substitution)


def rational_roots(p):
    """Distinct rational roots of a univariate polynomial (multiplicities via univariate.rational_roots)."""
    coeffs = p.to_univariate(0) if isinstance(p, Polynomial) else uni.trim([Fraction(c) for c in p])
    return set(uni.rational_roots(coeffs))


# -- parser ---------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[col]!r}", col)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, names):
        self.tokens = _tokenize(text)
        self.i = 0
        self.names = list(names)
        self.n = len(self.names)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def expr(self):
        node = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                node = node + rhs if val == "+" else node - rhs
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                node = node * self.unary()
            elif kind == "op" and val == "/":
                self.take()
                divisor = self.unary()
                if not divisor.is_constant() or divisor.is_zero():
                    raise ParseError("division is only allowed by a nonzero constant", pos)
                node = node * Polynomial.constant(1 / divisor.constant_term(), self.n)
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                raise ParseError("implicit multiplication is not supported", pos)
            else:
                return node

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            inner = self.unary()
            return -inner if val == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer literal", pos)
            return base**val
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return Polynomial.constant(val, self.n)
        if kind == "name":
            if val not in self.names:
                raise UnknownVariableError(f"unknown variable {val!r}", pos)
            return Polynomial.variable(self.names.index(val), self.n)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {val!r}", pos)


def parse(text, variables):
    """Parse an expression over the named variables into a Polynomial."""
    variables = list(variables)
    if not variables:
        raise ArityError("at least one variable name is required")
    parser = _Parser(text, variables)
    node = parser.expr()
    kind, val, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected token {val!r}", pos)
    return node
