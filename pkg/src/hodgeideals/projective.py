"""Global checks for hypersurfaces in projective space.

The local Hodge ideals at the singular points assemble into the subscheme
Z_k.  Its length is bounded by a binomial coefficient, and for forms of degree
at least (k+1)d - n - 1 it imposes independent conditions.  Both statements are
checked here by exact linear algebra: the evaluation map from degree-l forms to
the direct sum of the local Artinian quotients must be surjective.
"""

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import jets
from .errors import NotSquarefreeError, ParseError
from .jets import monomials_of_degree
from .linalg import Echelon, integer_vector
from .poly import Polynomial, parse
from .resolution import PlaneCurve, singular_points
from .surface import hodge_ideals
from . import univariate as uni

COMPUTED = "computed"
DECLARED = "declared"
SQUAREFREE_TRIALS = 32


def _ceil_div(a, b):
    return -(-a // b)


def parse_rational(text):
    """Exact rational from an int, Fraction, or a "num/den" string."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not an exact rational number: {text!r}") from exc


def _line_restriction(H, a, b):
    """Coefficients (in t) of H(a + t b)."""
    n1 = H.nvars
    t = Polynomial.variable(0, 1)
    subs = [Polynomial.constant(a[i], 1) + t * b[i] for i in range(n1)]
    return H.compose(subs).to_univariate(0)


def is_squarefree_form(H, trials=SQUAREFREE_TRIALS, seed=0):
    """Squarefreeness of a form, tested on pseudo-random lines.

    A reduced hypersurface meets a general line in d distinct points, and a
    non-reduced one meets every line with multiplicity; one squarefree
    restriction of full degree certifies the answer "yes".
    """
    d = H.degree()
    if d <= 1:
        return True
    rng = random.Random(seed)
    for _ in range(trials):
        a = [rng.randint(-50, 50) for _ in range(H.nvars)]
        b = [rng.randint(-50, 50) for _ in range(H.nvars)]
        f = _line_restriction(H, a, b)
        if uni.degree(f) != d:
            continue
        if uni.degree(uni.gcd_poly(f, uni.derivative(f))) == 0:
            return True
    return False


@dataclass
class SingularPoint:
    """A singular point of V(H) with its local Hodge-ideal data.

    ``chart`` is the index of the homogeneous coordinate set to 1; ``local``
    holds the coordinates of the point in that affine chart (other variables in
    their original order).
    """

    coords: tuple
    chart: int
    local: tuple
    multiplicity: int
    ideals: dict = field(default_factory=dict)
    family: object = None

    def render_coords(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"


def _normalize(coords):
    """Scale so the last nonzero coordinate is 1 (a canonical representative)."""
    coords = [Fraction(c) for c in coords]
    nz = [i for i, c in enumerate(coords) if c]
    if not nz:
        raise ValueError("the zero vector is not a projective point")
    c = coords[nz[-1]]
    return tuple(x / c for x in coords), nz[-1]


def dehomogenize(H, chart):
    """H with the chart-th variable set to 1, as a polynomial in the others."""
    n1 = H.nvars
    terms = {}
    for e, c in H.terms.items():
        key = tuple(e[i] for i in range(n1) if i != chart)
        terms[key] = terms.get(key, 0) + c
    return Polynomial(n1 - 1, terms)


class ProjectiveHypersurface:
    """V(H) in P^n for a squarefree form H in n + 1 variables."""

    def __init__(self, H, names=None, mode=COMPUTED, declared=None):
        if not H.is_homogeneous() or H.is_zero():
            raise ValueError("the equation must be a nonzero homogeneous polynomial")
        self.H = H
        self.n = H.nvars - 1
        self.d = H.degree()
        self.names = tuple(names) if names else tuple(f"x{i}" for i in range(H.nvars))
        if mode not in (COMPUTED, DECLARED):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        if self.n < 1:
            raise ValueError("need at least two homogeneous variables")
        if not is_squarefree_form(H):
            raise NotSquarefreeError(f"{H.render(self.names)} is not squarefree (the divisor is not reduced)")
        if mode == COMPUTED:
            if self.n != 2:
                raise ValueError("computed mode is only available for plane curves (n = 2); use declared mode")
            self.points = self._compute_points()
        else:
            self.points = [self._declared_point(c, m) for c, m in (declared or [])]
        self.points.sort(key=lambda p: p.coords)

    # -- singular points ------------------------------------------------------------

    def _compute_points(self):
        H = self.H
        pts = []
        # chart z = 1
        for x0, y0 in self._affine_singular(dehomogenize(H, 2)):
            pts.append((x0, y0, Fraction(1)))
        # line at infinity z = 0 away from [0:1:0], chart x = 1 with coordinates (y, z)
        for y0, z0 in self._affine_singular(dehomogenize(H, 0)):
            if z0 == 0:
                pts.append((Fraction(1), y0, Fraction(0)))
        # the point [0:1:0], chart y = 1 with coordinates (x, z)
        f = dehomogenize(H, 1)
        if f.evaluate((0, 0)) == 0 and f.order() >= 2:
            pts.append((Fraction(0), Fraction(1), Fraction(0)))
        return [self._make_point(c) for c in pts]

    @staticmethod
    def _affine_singular(h):
        if h.is_constant():
            return []
        return singular_points(h)

    def _make_point(self, coords, multiplicity=None):
        coords, chart = _normalize(coords)
        local = tuple(c for i, c in enumerate(coords) if i != chart)
        f = dehomogenize(self.H, chart)
        if f.evaluate(local) != 0:
            raise ValueError(f"point {list(map(str, coords))} does not lie on the hypersurface")
        mult = f.translate(local).order()
        if multiplicity is not None and mult != multiplicity:
            raise ValueError(
                f"point {list(map(str, coords))} has multiplicity {mult}, not the declared {multiplicity}"
            )
        return SingularPoint(coords, chart, local, mult)

    def _declared_point(self, coords, multiplicity):
        if len(coords) != self.n + 1:
            raise ValueError(f"declared point needs {self.n + 1} homogeneous coordinates")
        if multiplicity < 2:
            raise ValueError("declared singular points need multiplicity >= 2")
        return self._make_point([parse_rational(c) for c in coords], multiplicity)

    def local_equation(self, point):
        """The equation in the point's affine chart (global chart coordinates)."""
        return dehomogenize(self.H, point.chart)

    def chart_names(self, point):
        return tuple(nm for i, nm in enumerate(self.names) if i != point.chart)

    # -- local ideals ---------------------------------------------------------------

    def local_ideal(self, point, k):
        if k in point.ideals:
            return point.ideals[k]
        if self.mode == COMPUTED:
            if point.family is None or point.family.kmax < k:
                curve = PlaneCurve(self.local_equation(point), self.chart_names(point))
                point.family = hodge_ideals(curve, point.local, max(k, 1))
            ideal = point.family.ideals[k]
        else:
            m = point.multiplicity
            if m * k >= self.n:
                raise ValueError(
                    f"declared mode needs m*k < n (got m = {m}, k = {k}, n = {self.n}); "
                    "outside that range the local ideal has no exact closed form"
                )
            ideal = jets.maximal_power(point.local, (k + 1) * m - self.n, self.n)
        point.ideals[k] = ideal
        return ideal


@dataclass
class SubschemeZk:
    k: int
    n: int
    components: list  # (SingularPoint, JetIdeal) with non-unit ideal

    @property
    def is_empty(self):
        return not self.components

    @property
    def dimension(self):
        return -1 if self.is_empty else 0

    @property
    def degree(self):
        """Total colength; -1 for the empty scheme."""
        if self.is_empty:
            return -1
        return sum(ideal.colength for _, ideal in self.components)

    @property
    def length(self):
        return sum(ideal.colength for _, ideal in self.components)

    def to_json(self, hyp):
        return {
            "k": self.k,
            "dimension": self.dimension,
            "degree": self.degree,
            "points": [
                {
                    "coords": [str(c) for c in p.coords],
                    "multiplicity": p.multiplicity,
                    "chart": hyp.names[p.chart] + " = 1",
                    "colength": ideal.colength,
                    "ideal": ideal.render(hyp.chart_names(p)),
                }
                for p, ideal in self.components
            ],
        }


def assemble_Zk(hyp, k):
    comps = []
    for p in hyp.points:
        ideal = hyp.local_ideal(p, k)
        if not ideal.is_unit:
            comps.append((p, ideal))
    return SubschemeZk(k, hyp.n, comps)


@dataclass
class CheckEntry:
    name: str
    k: int
    statement: str
    passed: bool
    vacuous: bool = False
    detail: str = ""

    def to_json(self):
        return {
            "name": self.name,
            "k": self.k,
            "statement": self.statement,
            "passed": self.passed,
            "vacuous": self.vacuous,
            "detail": self.detail,
        }


def check_triviality_bound(hyp, k, Z=None):
    Z = Z or assemble_Zk(hyp, k)
    bound = hyp.n - (k + 1) * hyp.d + 1
    statement = f"z_{k} < {bound}  =>  Z_{k} empty"
    if Z.dimension < bound:
        return CheckEntry("triviality_bound", k, statement, Z.is_empty, detail=f"z_{k} = {Z.dimension}")
    return CheckEntry("triviality_bound", k, statement, True, vacuous=True, detail=f"z_{k} = {Z.dimension}")


def check_degree_bound(hyp, k, Z=None):
    Z = Z or assemble_Zk(hyp, k)
    top = (k + 1) * hyp.d - 1
    if Z.is_empty or Z.dimension < hyp.n - (k + 1) * hyp.d + 1:
        return CheckEntry(
            "degree_bound", k, f"deg Z_{k} <= C({top}, n - z_{k})", True, vacuous=True,
            detail=f"deg Z_{k} = {Z.degree}",
        )
    bound = comb(top, hyp.n - Z.dimension) if top >= 0 else 0
    return CheckEntry(
        "degree_bound", k, f"deg Z_{k} <= C({top}, {hyp.n - Z.dimension}) = {bound}", Z.degree <= bound,
        detail=f"deg Z_{k} = {Z.degree}",
    )


def evaluation_rank(hyp, degree, targets):
    """Rank of degree-``degree`` forms -> direct sum of O/a over (point, JetIdeal a) pairs."""
    n1 = hyp.n + 1
    monos = monomials_of_degree(n1, degree)
    blocks = []
    for point, ideal in targets:
        shift = point.local
        block = []
        for e in monos:
            f = dehomogenize(Polynomial.monomial(e), point.chart).translate(shift)
            block.append(ideal.normal_form(f))
        blocks.append(block)
    total = sum(ideal.colength for _, ideal in targets)
    if total == 0:
        return 0, 0, len(monos)
    # rows indexed by target coordinates, columns by monomials: rank of the transpose
    ech = Echelon(total)
    for j in range(len(monos)):
        row = []
        for block in blocks:
            row.extend(block[j])
        ech.add(integer_vector(row))
        if ech.rank == total:
            break
    return ech.rank, total, len(monos)


def _independence_entry(hyp, name, k, ell_raw, targets, statement):
    ell = max(0, ell_raw)
    rank, total, nforms = evaluation_rank(hyp, ell, targets)
    detail = f"degree {ell}: rank {rank} of {total} (forms: {nforms})"
    vacuous = ell_raw < 0
    if vacuous:
        detail += f"; threshold {ell_raw} < 0 clamped to 0"
    return CheckEntry(name, k, statement, rank == total, vacuous=vacuous, detail=detail)


def check_independent_conditions(hyp, k, j=None, Z=None):
    """Forms of degree (k+1)d - n - 1 surject onto O/I_k (or onto O/m^j) at the points of Z_k."""
    Z = Z or assemble_Zk(hyp, k)
    ell = (k + 1) * hyp.d - hyp.n - 1
    if j is None:
        targets = Z.components
        statement = f"Z_{k} imposes independent conditions on forms of degree {max(ell, 0)}"
    else:
        targets = [(p, jets.maximal_power(p.local, j, hyp.n)) for p, _ in Z.components]
        statement = f"forms of degree {max(ell, 0)} surject onto sum of O/m^{j} over Z_{k}"
    return _independence_entry(hyp, "independent_conditions", k, ell, targets, statement)


def check_multiplicity_conditions(hyp, m):
    """Isolated points of multiplicity >= m impose independent conditions in degree ([n/m]+1)d - n - 1."""
    pts = [p for p in hyp.points if p.multiplicity >= m]
    k = hyp.n // m
    ell = (k + 1) * hyp.d - hyp.n - 1
    targets = [(p, jets.maximal_power(p.local, 1, hyp.n)) for p in pts]
    statement = f"S_{m} imposes independent conditions on forms of degree {max(ell, 0)}"
    return _independence_entry(hyp, f"multiplicity_conditions[m={m}]", k, ell, targets, statement)


def jet_level(n, m, j):
    """k_{m,j}: ceil((n-m+j)/m) for j <= m-1, else ceil((n-m+j)/(m-2))."""
    if m < 3 or j < 1:
        raise ValueError("jet separation needs m >= 3 and j >= 1")
    return _ceil_div(n - m + j, m if j <= m - 1 else m - 2)


def check_jet_separation(hyp, m, j):
    """Forms of degree (k_{m,j}+1)d - n - 1 separate (j-1)-jets at points of multiplicity >= m."""
    pts = [p for p in hyp.points if p.multiplicity >= m]
    k = jet_level(hyp.n, m, j)
    ell = (k + 1) * hyp.d - hyp.n - 1
    targets = [(p, jets.maximal_power(p.local, j, hyp.n)) for p in pts]
    statement = f"forms of degree {max(ell, 0)} separate {j - 1}-jets along S_{m}"
    return _independence_entry(hyp, f"jet_separation[m={m},j={j}]", k, ell, targets, statement)


@dataclass
class ProjectiveReport:
    hypersurface: ProjectiveHypersurface
    subschemes: list
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_json(self):
        hyp = self.hypersurface
        return {
            "equation": hyp.H.render(hyp.names),
            "n": hyp.n,
            "degree": hyp.d,
            "mode": hyp.mode,
            "singular_points": [
                {"coords": [str(c) for c in p.coords], "multiplicity": p.multiplicity} for p in hyp.points
            ],
            "subschemes": [Z.to_json(hyp) for Z in self.subschemes],
            "checks": [c.to_json() for c in self.checks],
            "passed": self.passed,
        }


def default_levels(hyp, kmax=None):
    if kmax is not None:
        return list(range(kmax + 1))
    if hyp.mode == DECLARED:
        mults = [p.multiplicity for p in hyp.points]
        top = min(((hyp.n - 1) // m for m in mults), default=1)
        return list(range(top + 1))
    return [0, 1, 2]


def verify(hyp, ks=None, jet_orders=True):
    """Run the Z_k checks for each k, plus the multiplicity corollaries when n >= 3."""
    ks = default_levels(hyp) if ks is None else list(ks)
    subs, checks = [], []
    if ks:
        assemble_Zk(hyp, max(ks))  # computes each local family once, at the top level
    for k in ks:
        Z = assemble_Zk(hyp, k)
        subs.append(Z)
        checks.append(check_triviality_bound(hyp, k, Z))
        checks.append(check_degree_bound(hyp, k, Z))
        checks.append(check_independent_conditions(hyp, k, Z=Z))
    if hyp.n >= 3:
        for m in sorted({p.multiplicity for p in hyp.points}):
            checks.append(check_multiplicity_conditions(hyp, m))
            if jet_orders and m >= 3:
                for j in range(1, m + 1):
                    checks.append(check_jet_separation(hyp, m, j))
    return ProjectiveReport(hyp, subs, checks)


def load(source):
    """ProjectiveHypersurface plus requested k levels from a JSON description (dict, path, or text)."""
    if isinstance(source, dict):
        data = source
    else:
        try:
            with open(source) as fh:
                data = json.load(fh)
        except OSError:
            data = json.loads(source)
    try:
        names = data["vars"]
        if isinstance(names, str):
            names = [v.strip() for v in names.split(",")]
        H = parse(data["equation"], names)
    except KeyError as exc:
        raise ParseError(f"projective input is missing the field {exc.args[0]!r}") from exc
    mode = data.get("mode", COMPUTED)
    declared = [(pt["coords"], int(pt["multiplicity"])) for pt in data.get("points", [])]
    hyp = ProjectiveHypersurface(H, names, mode, declared if mode == DECLARED else None)
    ks = data.get("k")
    if ks is not None:
        ks = [int(ks)] if not isinstance(ks, list) else [int(k) for k in ks]
    return hyp, ks


__all__ = [
    "ProjectiveHypersurface",
    "ProjectiveReport",
    "SubschemeZk",
    "assemble_Zk",
    "check_multiplicity_conditions",
    "check_degree_bound",
    "check_independent_conditions",
    "check_jet_separation",
    "check_triviality_bound",
    "dehomogenize",
    "evaluation_rank",
    "is_squarefree_form",
    "jet_level",
    "load",
    "verify",
]
