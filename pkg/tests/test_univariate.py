from fractions import Fraction as F

from hodgeideals import univariate as uni


def test_rational_roots_with_multiplicity():
    # (t - 1/2)^2 (t + 3) (t^2 + 1)
    p = uni.mul(uni.mul(uni.mul([F(-1, 2), F(1)], [F(-1, 2), F(1)]), [F(3), F(1)]), [F(1), F(0), F(1)])
    assert uni.rational_roots(p) == {F(1, 2): 2, F(-3): 1}
    roots, rest = uni.remove_rational_roots(p)
    assert set(roots) == {F(1, 2), F(-3)}
    assert uni.monic(rest) == [F(1), F(0), F(1)]


def test_gcd_and_squarefree_part():
    a = uni.mul([F(-1), F(1)], [F(-2), F(1)])
    b = uni.mul([F(-1), F(1)], [F(5), F(1)])
    assert uni.monic(uni.gcd_poly(a, b)) == [F(-1), F(1)]
    sq = uni.mul(a, a)
    assert uni.monic(uni.squarefree_part(sq)) == uni.monic(a)


def test_resultant_detects_common_root():
    a = [F(-1), F(0), F(1)]  # t^2 - 1
    assert uni.resultant(a, [F(-1), F(1)], 2, 1) == 0
    assert uni.resultant(a, [F(-2), F(1)], 2, 1) != 0


def test_interpolation_recovers_polynomial():
    p = [F(3), F(-1), F(0), F(2)]
    xs = [F(i) for i in range(4)]
    ys = [uni.evaluate(p, x) for x in xs]
    assert uni.trim(uni.interpolate(xs, ys)) == p


def test_gcd_over_quotient_splits_on_zero_divisors():
    # modulus (t^2 - 2)(t^2 - 3); polys share the root y = t only where t^2 = 2
    modulus = uni.mul([F(-2), F(0), F(1)], [F(-3), F(0), F(1)])
    # y^2 - 2 and y - t as coefficient lists over Q[t]: [[-2], [], [1]] / [[0,-1], [1]]
    polys = [[[F(-2)], [], [F(1)]], [[F(0), F(-1)], [F(1)]]]
    out = uni.gcd_degree_over_quotient(polys, modulus)
    degrees = {tuple(uni.monic(f)): d for f, d in out}
    assert degrees[(F(-2), F(0), F(1))] == 1
    assert degrees[(F(-3), F(0), F(1))] == 0
