import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgeideals import jets
from hodgeideals.closed_forms import MonomialIdeal
from hodgeideals.errors import NotPrimaryError
from hodgeideals.jets import from_generators, maximal_power, monomials_of_degree, unit_ideal
from hodgeideals.poly import Polynomial

from conftest import P

coeff = st.integers(-3, 3)


@st.composite
def primary_ideals(draw):
    """Small m-primary ideals at the origin: pure powers plus a random extra generator."""
    a = draw(st.integers(1, 4))
    b = draw(st.integers(1, 4))
    extra = Polynomial(2, draw(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), coeff, max_size=3)))
    gens = [P(f"x^{a}"), P(f"y^{b}") + extra * P("x")]
    if not extra.is_zero():
        gens.append(extra * P("x*y"))
    return gens


@st.composite
def monomial_gens(draw):
    a = draw(st.integers(1, 5))
    b = draw(st.integers(1, 5))
    mixed = draw(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=3))
    return [(a, 0), (0, b)] + mixed


def test_basic_values():
    a = from_generators([P("x^2"), P("x*y"), P("y^3")])
    assert a.M0 == 3 and a.colength == 4
    assert not jets.member(a, P("y^2"))
    assert jets.member(a, P("y^3 + x*y^7"))
    assert from_generators([P("x^2"), P("y^3")]).colength == 6
    assert maximal_power((0, 0), 3).colength == 6
    assert unit_ideal(2).is_unit and unit_ideal(2).colength == 0


def test_non_primary_input_is_rejected():
    with pytest.raises(NotPrimaryError):
        from_generators([P("x^2"), P("x*y")], cap=12)
    with pytest.raises(NotPrimaryError):
        from_generators([P("0")])


def test_translated_center():
    a = from_generators([P("(x-1)^2"), P("y+2")], (1, -2))
    assert a.colength == 2
    assert jets.member(a, P("(x-1)*(y+2)"))
    assert not jets.member(a, P("x-1"))


@settings(max_examples=40, deadline=None)
@given(monomial_gens())
def test_monomial_oracle(gens):
    mono = MonomialIdeal(2, gens)
    ideal = from_generators([Polynomial.monomial(e) for e in gens])
    assert ideal.colength == mono.colength()
    for d in range(ideal.M0 + 2):
        for e in monomials_of_degree(2, d):
            assert jets.member(ideal, Polynomial.monomial(e)) == mono.contains(e)


@settings(max_examples=30, deadline=None)
@given(primary_ideals())
def test_nakayama_certificate_is_sound(gens):
    a = from_generators(gens)
    for e in monomials_of_degree(2, a.M0):
        assert jets.member(a, Polynomial.monomial(e))
    # and M0 is the least such degree
    if a.M0 > 0:
        assert not all(jets.member(a, Polynomial.monomial(e)) for e in monomials_of_degree(2, a.M0 - 1))


@settings(max_examples=30, deadline=None)
@given(primary_ideals(), st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=1, max_size=4))
def test_retruncation_invariance(gens, probes):
    a = from_generators(gens)
    b = a.at_truncation(a.M + 3)
    assert b.colength == a.colength
    assert jets.contains(a, b) and jets.contains(b, a)
    for e in probes:
        probe = Polynomial.monomial(e) + P("x*y")
        assert jets.member(a, probe) == jets.member(b, probe)


@settings(max_examples=25, deadline=None)
@given(primary_ideals(), primary_ideals())
def test_operations_match_generator_oracle(ga, gb):
    a, b = from_generators(ga), from_generators(gb)
    assert jets.product(a, b) == from_generators([f * g for f in ga for g in gb])
    assert jets.ideal_sum(a, b) == from_generators(ga + gb)
    assert jets.power(a, 2) == from_generators([f * g for f in ga for g in ga])


@settings(max_examples=25, deadline=None)
@given(primary_ideals(), primary_ideals())
def test_contains_is_a_partial_order(ga, gb):
    a, b = from_generators(ga), from_generators(gb)
    s = jets.ideal_sum(a, b)
    assert jets.contains(a, a)
    assert jets.contains(s, a) and jets.contains(s, b)
    if jets.contains(a, b) and jets.contains(b, a):
        assert a == b
    assert (a.colength == 0) == a.is_unit


@settings(max_examples=25, deadline=None)
@given(primary_ideals())
def test_minimal_generators_regenerate_the_ideal(gens):
    a = from_generators(gens)
    mins = a.generators()
    assert from_generators(mins) == a
    # no generator is redundant
    for i in range(len(mins)):
        rest = mins[:i] + mins[i + 1:]
        if rest:
            try:
                smaller = from_generators(rest, cap=a.M0 + 8)
            except NotPrimaryError:
                continue
            assert smaller != a


def test_normal_form_is_linear_and_kills_the_ideal():
    a = from_generators([P("x^2"), P("x*y"), P("y^3")])
    assert a.normal_form(P("x^2 + 7*y^3")) == [0] * a.colength
    f, g = P("1 + 2*x + y^2"), P("3*y - x")
    nf = [u + v for u, v in zip(a.normal_form(f), a.normal_form(g))]
    assert a.normal_form(f + g) == nf
