from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from oracles import (
    oracle_class_count,
    oracle_quadratic,
    oracle_square_class,
    padic_digits,
    square_roots_mod,
    unit_squares,
)

from hyperlab.algebra import GF, QQ, PolyRing, Polynomial
from hyperlab.errors import (
    InsufficientPrecisionError,
    InvalidPrimeError,
    NoConvergenceError,
    NotIrreducibleError,
    UnnormalizedInputError,
    UnsupportedCharacteristicError,
)
from hyperlab.localnum import (
    INF,
    KrasnerVerdict,
    LaurentField,
    PAdicField,
    ValExponent,
    count_quadratic_extensions,
    hadic_norm_ratfunc,
    hensel_lift,
    krasner_certificate,
    krasner_radius_bound,
    krasner_separates,
    padic_norm_rational,
    square_class,
    square_class_representatives,
)


def qpoly(*cs):
    return Polynomial(QQ, cs)


# -- norms -------------------------------------------------------------------


def test_padic_norm_examples():
    assert padic_norm_rational(12, 2) == ValExponent(2)
    assert padic_norm_rational(12, 2).norm(2) == Fraction(1, 4)
    assert padic_norm_rational(0, 5).is_infinite
    assert padic_norm_rational(Fraction(5, 10), 5) == ValExponent(0)
    with pytest.raises(InvalidPrimeError):
        padic_norm_rational(3, 6)


def test_hadic_norm_examples():
    F = GF(3)
    t = Polynomial.x(F)
    assert hadic_norm_ratfunc(t**2 * (t + 1), t) == ValExponent(2)
    for a in (1, 2):
        assert hadic_norm_ratfunc(Polynomial(F, [a]), t + 1) == ValExponent(0)
    assert hadic_norm_ratfunc((t**2 + 1, t**5), degree_norm=True) == ValExponent(3)
    with pytest.raises(NotIrreducibleError):
        hadic_norm_ratfunc(t, t**2 - 1)


def test_valexponent_is_exact():
    half = ValExponent(Fraction(1, 2))
    assert half + half == ValExponent(1)
    assert ValExponent(0) < half < ValExponent(1) < ValExponent(INF)


# -- truncated arithmetic against integer residues ------------------------------

PREC = 8
units5 = st.integers(1, 5**PREC - 1).filter(lambda n: n % 5)


@settings(max_examples=150, deadline=None)
@given(units5, units5)
def test_padic_ring_ops_match_integers(a, b):
    K = PAdicField(5, precision=PREC)
    x, y = K(a), K(b)
    assert (x * y).digits == padic_digits(a * b, 5, PREC)
    s = a + b
    assume(s % 5**PREC)
    z = x + y
    v = 0
    while s % 5 == 0:
        s //= 5
        v += 1
    assert z.valuation == v
    assert z.digits == padic_digits(s, 5, z.prec)


@settings(max_examples=150, deadline=None)
@given(units5, st.integers(-3, 3), units5, st.integers(-3, 3))
def test_ultrametric_and_multiplicativity(a, va, b, vb):
    K = PAdicField(5, precision=PREC)
    x = K(Fraction(a) * Fraction(5) ** va)
    y = K(Fraction(b) * Fraction(5) ** vb)
    assert (x * y).val == x.val + y.val
    try:
        s = x + y
    except InsufficientPrecisionError:
        assume(False)
    assert s.val >= min(x.val, y.val)
    if x.val != y.val:
        assert s.val == min(x.val, y.val)


def test_inverse_matches_modular_inverse():
    K = PAdicField(7, precision=6)
    for a in range(1, 200):
        if a % 7:
            assert K(a).inverse().digits == padic_digits(pow(a, -1, 7**6), 7, 6)


def test_total_cancellation_refuses():
    K = PAdicField(5)
    with pytest.raises(InsufficientPrecisionError):
        K(3) + K(-3)


# -- Hensel ------------------------------------------------------------------


def test_hensel_sqrt6_mod_125():
    K = PAdicField(5)
    root = hensel_lift(qpoly(-6, 0, 1), K(1), 3)
    brute = square_roots_mod(6, 125)
    assert brute == [16, 109]
    assert int(root.exact_value()) % 125 == 16


def test_hensel_linear_and_failure():
    K = PAdicField(5)
    root = hensel_lift(qpoly(-7, 1), K(123), 5)
    assert int(root.exact_value()) % 5**5 == 7
    assert square_roots_mod(2, 5) == []
    with pytest.raises(NoConvergenceError):
        hensel_lift(qpoly(-2, 0, 1), K(1), 4)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 5, 7, 11]), st.integers(1, 10**6), st.integers(1, 8))
def test_hensel_root_is_a_root(p, a, k):
    roots = square_roots_mod(a, p)
    assume(a % p and roots)
    K = PAdicField(p)
    root = hensel_lift(qpoly(-a, 0, 1), K(roots[0]), k)
    r = int(root.exact_value()) % p**k
    assert (r * r - a) % p**k == 0
    assert r % p == roots[0]


def test_hensel_in_laurent_field():
    F = GF(3)
    L = LaurentField(F)
    R = PolyRing(F)
    f = Polynomial(R, [Polynomial(F, [-1, -1]), 0, 1])  # X^2 - (1 + t)
    root = hensel_lift(f, L(1), 6)
    sq = root * root
    assert sq.digits[:6] == (F(1), F(1), F(0), F(0), F(0), F(0))


# -- square classes -------------------------------------------------------------


def test_square_class_examples():
    K = PAdicField(5)
    assert square_class(K(9)).is_trivial
    assert square_class(K(30)) == square_class(K(5))
    assert not square_class(K(2)).is_trivial
    with pytest.raises(ValueError):
        square_class(K(0))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_square_class_matches_brute_force(p):
    K = PAdicField(p)
    nums = [n for n in range(-150, 151) if n]
    for m in nums:
        for n in nums[::7]:
            same_lib = square_class(K(m)) == square_class(K(n))
            assert same_lib == (oracle_square_class(m, p) == oracle_square_class(n, p)), (m, n)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_odd_p_has_three_quadratic_extensions(p):
    assert count_quadratic_extensions(PAdicField(p)) == 3 == oracle_class_count(p) - 1


def test_q2_has_seven_quadratic_extensions():
    assert unit_squares(2, 5) == {1, 9, 17, 25}
    assert count_quadratic_extensions(PAdicField(2)) == 7 == oracle_class_count(2) - 1


@pytest.mark.parametrize("q", [3, 5, 9])
def test_laurent_quadratic_extensions(q):
    p, k = {3: (3, 1), 5: (5, 1), 9: (3, 2)}[q]
    F = GF(p, k)
    squares = {x * x for x in F.units()}
    oracle = 2 * (len(F.units()) // len(squares)) - 1
    assert count_quadratic_extensions(LaurentField(F)) == oracle == 3


def test_characteristic_two_laurent_rejected():
    with pytest.raises(UnsupportedCharacteristicError):
        count_quadratic_extensions(LaurentField(GF(2)))


def test_representatives_cover_every_class():
    K = PAdicField(5)
    reps = {square_class(u) for u in square_class_representatives(K)}
    assert reps == {square_class(K(n)) for n in (1, 2, 5, 10)}


# -- Krasner ------------------------------------------------------------------


def test_radius_bound_examples():
    K = PAdicField(5)
    assert krasner_radius_bound(qpoly(-5, 0, 1), K) == ValExponent(Fraction(1, 2))
    assert krasner_radius_bound(qpoly(-2, 0, 1), K) == ValExponent(0)
    assert krasner_radius_bound(qpoly(1, 1, 1), K) == ValExponent(0)


def test_radius_bound_errors():
    K = PAdicField(5)
    with pytest.raises(UnnormalizedInputError):
        krasner_radius_bound(qpoly(Fraction(1, 5), 0, 1), K)
    with pytest.raises(NotIrreducibleError):
        krasner_radius_bound(qpoly(1, 0, 1), K)
    with pytest.raises(ValueError):
        krasner_radius_bound(qpoly(1, 2, 1), K)


def test_krasner_examples():
    K = PAdicField(5)
    p = qpoly(-5, 0, 1)
    cert = krasner_certificate(p, qpoly(-30, 0, 1), K)
    assert cert.verdict is KrasnerVerdict.CERTIFIED_ISOMORPHIC
    assert cert.resultant_valuation == ValExponent(4)
    assert krasner_separates(p, p, K) is KrasnerVerdict.CERTIFIED_ISOMORPHIC
    assert krasner_separates(p, qpoly(-2, 0, 1), K) is KrasnerVerdict.INCONCLUSIVE
    assert oracle_quadratic(0, -5, 5) != oracle_quadratic(0, -2, 5)
    with pytest.raises(ValueError):
        krasner_separates(p, qpoly(-5, 0, 0, 1), K)


def test_krasner_never_certifies_falsely_small_corpus():
    K = PAdicField(5)
    fs = [(b, c) for b in range(-3, 4) for c in range(-3, 4) if oracle_quadratic(b, c, 5)]
    for b, c in fs:
        for b2 in range(-10, 11):
            for c2 in range(-10, 11):
                if krasner_separates(qpoly(c, b, 1), qpoly(c2, b2, 1), K) is KrasnerVerdict.CERTIFIED_ISOMORPHIC:
                    assert oracle_quadratic(b2, c2, 5) == oracle_quadratic(b, c, 5)


def test_krasner_over_laurent_field():
    F = GF(3)
    L = LaurentField(F)
    R = PolyRing(F)
    t = Polynomial.x(F)

    def quad(c):
        return Polynomial(R, [c, 0, 1])

    assert krasner_separates(quad(-t), quad(-t - t**3), L) is KrasnerVerdict.CERTIFIED_ISOMORPHIC
    assert krasner_separates(quad(-t), quad(t), L) is KrasnerVerdict.INCONCLUSIVE
