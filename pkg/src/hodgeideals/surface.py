"""Hodge ideals of reduced plane curves.

On a smooth surface the Hodge ideals agree with the ideals J_k(D) generated
by h^(k+1) * d^beta(g / h) for g in I_0(D) and |beta| <= k, so the whole
family is computable from a log resolution (for I_0) plus exact
differentiation.  This identity is special to surfaces; the pipeline refuses
other arities.
"""

from dataclasses import dataclass, field
from itertools import product as iproduct

from . import jets
from .errors import ArityError
from .jets import GeneratorSet, JetIdeal, as_point
from .poly import Polynomial, twisted_derivative
from .resolution import DEFAULT_BLOWUP_CAP, PlaneCurve, resolve, singular_points
from .valuation import adjoint_ideal, multiplier_ideal_I0

PROVENANCE = "I_k computed as J_k (Hodge ideals equal J_k on smooth surfaces)"


def _betas(n, k):
    """Multi-indices of total order <= k."""
    return [b for b in iproduct(range(k + 1), repeat=n) if sum(b) <= k]


def _jk_local(h_loc, gens_loc, k):
    out = []
    for g in gens_loc:
        for beta in _betas(h_loc.nvars, k):
            t = twisted_derivative(g, h_loc, beta, k)
            if not t.is_zero():
                out.append(t)
    return out


def Jk_generators(h, I0gens, k):
    """Generators of J_k(D) at the center of ``I0gens`` (a GeneratorSet for I_0)."""
    if h.nvars != 2:
        raise ArityError("J_k generators are only used for plane curves here")
    center = I0gens.center
    back = tuple(-c for c in center)
    local = _jk_local(h.translate(center), [g.translate(center) for g in I0gens.generators], k)
    return GeneratorSet([g.translate(back) for g in local], center)


def is_node(h, center=(0, 0)):
    """Multiplicity two with two distinct tangent lines (over the algebraic closure)."""
    local = h.translate(as_point(center))
    if local.order() != 2:
        return False
    cone = local.homogeneous_part(2)
    a = cone.terms.get((2, 0), 0)
    b = cone.terms.get((1, 1), 0)
    c = cone.terms.get((0, 2), 0)
    return b * b - 4 * a * c != 0


@dataclass
class HodgeIdealFamily:
    curve: PlaneCurve
    center: tuple
    kmax: int
    ideals: list
    tree: object
    multiplicity: int
    adjoint: JetIdeal
    provenance: str = PROVENANCE

    def __getitem__(self, k):
        return self.ideals[k]

    @property
    def lct(self):
        return self.tree.lct()

    def to_json(self, names=("x", "y")):
        return {
            "center": [str(c) for c in self.center],
            "multiplicity": self.multiplicity,
            "node": is_node(self.curve.h, self.center) if self.multiplicity == 2 else False,
            "lct": str(self.lct),
            "resolution": self.tree.to_json(),
            "adjoint": self.adjoint.to_json(names),
            "provenance": self.provenance,
            "ideals": [
                dict(k=k, generating_set=True, **ideal.to_json(names)) for k, ideal in enumerate(self.ideals)
            ],
        }


def hodge_ideals(curve, center=(0, 0), kmax=2, cap=jets.DEFAULT_CAP, blowup_cap=DEFAULT_BLOWUP_CAP):
    """I_0, ..., I_kmax of a reduced plane curve at a rational point on it."""
    if isinstance(curve, Polynomial):
        curve = PlaneCurve(curve)
    if curve.h.nvars != 2:
        raise ArityError("the J_k = I_k pipeline is only valid on surfaces")
    center = as_point(center)
    tree = resolve(curve, center, cap=blowup_cap)
    h_loc = curve.h.translate(center)
    mult = h_loc.order()
    I0 = multiplier_ideal_I0(tree)
    gens0 = I0.minimal_local_generators()
    ideals = [I0]
    for k in range(1, kmax + 1):
        local = _jk_local(h_loc, gens0, k)
        ideals.append(jets._from_local(local, 2, center, cap=cap, hint=ideals[-1].M0 + mult))
    fam = HodgeIdealFamily(curve, center, kmax, ideals, tree, mult, adjoint_ideal(tree))
    _assert_chain(fam)
    return fam


def _assert_chain(fam):
    h = fam.curve.h
    for k, ideal in enumerate(fam.ideals):
        if not jets.member(ideal, h ** (k + 1)):
            raise AssertionError(f"h^{k + 1} is not in I_{k}")
        if k and not jets.contains(fam.ideals[k - 1], ideal):
            raise AssertionError(f"I_{k} is not contained in I_{k - 1}")


def jacobian_ideal(ideal):
    """Jac(a) = a + (partial derivatives of generators of a)."""
    gens = ideal.minimal_local_generators()
    out = list(gens)
    for g in gens:
        out.extend(g.derivative(i) for i in range(ideal.arity))
    return jets._from_local(out, ideal.arity, ideal.center, hint=max(ideal.M0 - 1, 0))


def recursive_estimate(h, ideal):
    """(h) * Jac(a) + a * Jac((h)) at the center of a, for an m-primary a."""
    h_loc = h.translate(ideal.center)
    jac_h = [h_loc] + [h_loc.derivative(i) for i in range(ideal.arity)]
    gens = ideal.minimal_local_generators()
    out = [h_loc * g for g in jacobian_ideal(ideal).minimal_local_generators()]
    out.extend(a * b for a in gens for b in jac_h)
    return jets._from_local(out, ideal.arity, ideal.center, hint=ideal.M0)


# -- verification harness ------------------------------------------------------------


@dataclass
class CheckRecord:
    name: str
    k: int
    expected: str
    passed: bool
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "k": self.k, "expected": self.expected, "passed": self.passed, "detail": self.detail}


@dataclass
class VerificationReport:
    center: tuple
    records: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.records)

    def add(self, name, k, expected, passed, detail=""):
        self.records.append(CheckRecord(name, k, expected, bool(passed), detail))

    def failures(self):
        return [r for r in self.records if not r.passed]

    def to_json(self):
        return {"passed": self.passed, "checks": [r.to_json() for r in self.records]}


def _witness(big, small):
    """A generator of ``small`` outside ``big`` (global coordinates), for failure reports."""
    back = tuple(-c for c in small.center)
    for g in small.minimal_local_generators():
        if not big.contains_local(g):
            return g.translate(back).render()
    return ""


def _contain_check(report, name, k, expected, big, small):
    ok = jets.contains(big, small)
    report.add(name, k, expected, ok, "" if ok else f"witness {_witness(big, small)}")
    return ok


def ideal_order(ideal):
    """Largest t with a contained in m^t."""
    if ideal.is_unit:
        return 0
    return min(g.order() for g in ideal.minimal_local_generators())


def verify_theorems(fam, tree=None):
    """Run every containment / nontriviality statement the theory predicts for this family."""
    tree = tree or fam.tree
    h = fam.curve.h
    c = fam.center
    m = fam.multiplicity
    node = m == 2 and is_node(h, c)
    report = VerificationReport(c)
    mpow = lambda q: jets.maximal_power(c, q, 2)  # noqa: E731
    adj = fam.adjoint
    m_prime = ideal_order(fam.ideals[0])
    lct = tree.lct()
    report.add("log_canonical_iff_I0_trivial", 0, "I_0 = O  <=>  lct >= 1", fam.ideals[0].is_unit == (lct >= 1), f"lct = {lct}")
    for k, ideal in enumerate(fam.ideals):
        report.add("h_power_membership", k, f"h^{k + 1} in I_{k}", jets.member(ideal, h ** (k + 1)))
        if k >= 1:
            prev = fam.ideals[k - 1]
            _contain_check(report, "descending_chain", k, f"I_{k} in I_{k - 1}", prev, ideal)
            back = tuple(-x for x in c)
            twisted = all(jets.member(ideal, g.translate(back) * h) for g in prev.minimal_local_generators())
            report.add("twist_inclusion", k, f"I_{k - 1} * (h) in I_{k}", twisted)
            _contain_check(report, "adjoint_inclusion", k, f"I_{k} in adj(D)", adj, ideal)
            _contain_check(
                report, "recursive_estimate", k, f"I_{k} in (h)Jac(I_{k - 1}) + I_{k - 1}Jac(h)",
                recursive_estimate(h, prev), ideal,
            )
            smooth = m == 1
            report.add(
                "smoothness_criterion", k, f"I_{k} = O  <=>  D smooth at the point", ideal.is_unit == smooth,
                f"multiplicity {m}",
            )
        q = min(m - 1, (k + 1) * m - 2)
        _contain_check(report, "symbolic_power_bound", k, f"I_{k} in m^{max(q, 0)}", mpow(q), ideal)
        if m >= 2:
            e = (k + 1) * (m - 1) - 1
            _contain_check(report, "multiplicity_bound", k, f"I_{k} in m^{max(e, 0)}", mpow(e), ideal)
            j = (k + 1) * (m - 2)
            _contain_check(report, "divisorial_bound", k, f"I_{k} in m^{j}", mpow(j), ideal)
        if m == 2:
            inside = jets.contains(mpow(k + 1), ideal)
            if node:
                report.add("non_node_refinement", k, f"node: exempt (I_{k} not in m^{k + 1})", not inside, "node")
            else:
                report.add("non_node_refinement", k, f"I_{k} in m^{k + 1}", inside)
        e = k * (m - 1) + m_prime
        _contain_check(report, "J_multiplicity_bound", k, f"J_{k} in m^{e}", mpow(e), ideal)
    return report


def curve_families(h, kmax=2, points=None, cap=jets.DEFAULT_CAP):
    """Families at the given points, or at every rational singular point of V(h)."""
    curve = h if isinstance(h, PlaneCurve) else PlaneCurve(h)
    if points is None:
        points = singular_points(curve.h)
    return [hodge_ideals(curve, p, kmax, cap=cap) for p in points]


__all__ = [
    "CheckRecord",
    "HodgeIdealFamily",
    "Jk_generators",
    "VerificationReport",
    "curve_families",
    "hodge_ideals",
    "is_node",
    "jacobian_ideal",
    "recursive_estimate",
    "verify_theorems",
]
