import random
from fractions import Fraction

import pytest

from dlaplace.exact import PHI, PSI, QuadExt
from dlaplace.polys import (PFTerm, Poly, RatFunc, T, factor_roots,
                            partial_fractions, poly_gcd,
                            squarefree_decomposition)
from dlaplace.errors import (ImproperRational, PoleEvaluation,
                             UnsupportedFactorization)

FIB_DEN = Poly((-1, -1, 1))  # t^2 - t - 1


def test_zero_polynomial_degree_sentinel():
    assert Poly().degree == -1
    assert Poly((0, 0)).degree == -1
    assert Poly((0, 0)).is_zero
    assert Poly((3,)).degree == 0


def test_arithmetic_basics():
    p = Poly((1, 2))           # 1 + 2t
    q = Poly((-1, 1))          # t - 1
    assert p * q == Poly((-1, -1, 2))
    assert p + q == Poly((0, 3))
    assert p - p == Poly()
    assert (T ** 3).degree == 3
    assert Poly.from_roots(1, 3) == Poly((3, -4, 1))


def test_divmod_hand_checked():
    # (t^2 - t - 1) = t*(t - 1) + (-1), long division by hand
    q, r = divmod(FIB_DEN, Poly((-1, 1)))
    assert q == Poly((0, 1))
    assert r == Poly((-1,))
    back = q * Poly((-1, 1)) + r
    assert back == FIB_DEN


def test_divmod_random_roundtrip():
    rng = random.Random(7)
    for _ in range(120):
        a = Poly([Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                  for _ in range(rng.randint(0, 6))])
        b = Poly([Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                  for _ in range(rng.randint(1, 4))])
        if b.is_zero:
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_division_by_zero_poly():
    with pytest.raises(ZeroDivisionError):
        divmod(Poly((1,)), Poly())


def test_gcd():
    a = Poly.from_roots(1, 1, 2)
    b = Poly.from_roots(1, 3)
    assert poly_gcd(a, b) == Poly.from_roots(1)
    assert poly_gcd(a, Poly()) == a.monic()
    assert poly_gcd(Poly((2,)), a) == Poly((1,))
    with pytest.raises(ValueError):
        poly_gcd(Poly(), Poly())


def test_squarefree_decomposition():
    f = Poly.from_roots(1, 1, 1, 1)
    assert squarefree_decomposition(f) == [(Poly.from_roots(1), 4)]
    g = Poly.from_roots(1, 2, 2, 3, 3, 3)
    assert squarefree_decomposition(g) == [
        (Poly.from_roots(1), 1),
        (Poly.from_roots(2), 2),
        (Poly.from_roots(3), 3),
    ]


def test_eval_and_derivative():
    p = FIB_DEN
    assert p(2) == 1
    assert p(PHI) == 0
    assert p(PSI) == 0
    assert p.derivative() == Poly((-1, 2))
    assert Poly((5,)).derivative().is_zero


def test_factor_golden_denominator():
    assert factor_roots(FIB_DEN) == [(PSI, 1), (PHI, 1)]


def test_factor_repeated_and_mixed_roots():
    assert factor_roots(Poly.from_roots(1, 1, 1, 1)) == [(QuadExt(1), 4)]
    got = factor_roots(Poly.from_roots(1, 3))
    assert got == [(QuadExt(1), 1), (QuadExt(3), 1)]
    got = factor_roots(Poly.from_roots(0, 0, Fraction(1, 2)))
    assert got == [(QuadExt(0), 2), (QuadExt(Fraction(1, 2)), 1)]


def test_factor_radical_coefficients_by_norm():
    den = Poly.from_roots(PHI)  # t - phi, radical coefficients
    assert factor_roots(den) == [(PHI, 1)]
    den2 = Poly.from_roots(PHI, PHI, 2)
    assert factor_roots(den2) == [(QuadExt(2), 1), (PHI, 2)]


def test_factor_unsupported_cases():
    with pytest.raises(UnsupportedFactorization):
        factor_roots(Poly((-1, -1, 0, 1)))  # t^3 - t - 1, irreducible
    with pytest.raises(UnsupportedFactorization):
        factor_roots(Poly((1, 0, 1)))       # t^2 + 1, complex pair
    with pytest.raises(UnsupportedFactorization):
        factor_roots(Poly((-QuadExt(0, 1, 5), 0, 1)))  # t^2 - sqrt(5)
    with pytest.raises(ValueError):
        factor_roots(Poly((2, 2)))          # not monic
    with pytest.raises(ValueError):
        factor_roots(Poly((1,)))            # constant


def test_ratfunc_normalization():
    a = RatFunc(Poly((0, 2)), Poly((0, 0, 4)))   # 2t/4t^2 -> 1/(2t) -> monic
    b = RatFunc(Poly((Fraction(1, 2),)), Poly((0, 1)))
    assert a == b
    assert RatFunc(Poly((1, 1)), Poly((1, 1))) == RatFunc(Poly((1,)))
    assert RatFunc(Poly(), Poly((3, 7))).is_zero
    with pytest.raises(ZeroDivisionError):
        RatFunc(Poly((1,)), Poly())


def test_ratfunc_arithmetic_and_eval():
    fib = RatFunc(Poly((0, 1)), FIB_DEN)
    assert fib(2) == 2                  # 2/(4-2-1)
    geo5 = RatFunc(Poly((1,)), Poly((-5, 1)))
    assert geo5(6) == 1
    assert (geo5 + geo5) == 2 * geo5
    assert geo5 / geo5 == RatFunc(Poly((1,)))
    with pytest.raises(PoleEvaluation):
        RatFunc(Poly((1,)), Poly((-1, 1)))(1)
    with pytest.raises(ZeroDivisionError):
        geo5 / RatFunc()


def test_d_ds_is_t_times_derivative():
    # d/ds of 1/(t-1) with t = e^s is -t/(t-1)^2
    a = RatFunc(Poly((1,)), Poly((-1, 1)))
    assert a.d_ds() == RatFunc(Poly((0, -1)), Poly((1, -2, 1)))


def test_partial_fractions_fibonacci_oracle():
    # t/(t^2 - t - 1) = (1/2 + sqrt(5)/10)/(t - phi)
    #                 + (1/2 - sqrt(5)/10)/(t - psi), derived by hand
    terms = partial_fractions(RatFunc(Poly((0, 1)), FIB_DEN))
    expected = {
        PHI: QuadExt(Fraction(1, 2), Fraction(1, 10), 5),
        PSI: QuadExt(Fraction(1, 2), Fraction(-1, 10), 5),
    }
    assert {t.root: t.coefficient for t in terms} == expected
    assert all(t.multiplicity == 1 for t in terms)


def test_partial_fractions_affine_shape():
    # beta/((t-1)(t-lam)) = beta/(lam-1)/(t-lam) + beta/(1-lam)/(t-1)
    beta, lam = Fraction(3), Fraction(4)
    quotient = RatFunc(Poly((beta,)), Poly.from_roots(1, lam))
    terms = {(t.root, t.multiplicity): t.coefficient
             for t in partial_fractions(quotient)}
    assert terms == {
        (QuadExt(lam), 1): QuadExt(beta / (lam - 1)),
        (QuadExt(1), 1): QuadExt(beta / (1 - lam)),
    }


def test_partial_fractions_drops_zero_terms():
    # t/(t-1)^2 = 1/(t-1) + 1/(t-1)^2; (t-1)/(t-1)^2 collapses entirely
    terms = partial_fractions(RatFunc(Poly((0, 1)), Poly((1, -2, 1))))
    assert {(t.multiplicity): t.coefficient for t in terms} == \
        {1: QuadExt(1), 2: QuadExt(1)}


def test_partial_fractions_improper_rejected():
    with pytest.raises(ImproperRational):
        partial_fractions(RatFunc(Poly((1, 0, 1)), Poly((-1, 1))))
    with pytest.raises(ImproperRational):
        partial_fractions(RatFunc(Poly((1,)), Poly((2,))) * 1)


def test_partial_fractions_recombination_randomized():
    rng = random.Random(424242)
    roots_pool = [QuadExt(1), QuadExt(2), QuadExt(Fraction(1, 2)),
                  QuadExt(-1), QuadExt(3), PHI, PSI]
    checked = 0
    while checked < 100:
        count = rng.randint(1, 3)
        chosen = rng.sample(roots_pool, count)
        mults = [rng.randint(1, 3) for _ in chosen]
        den = Poly((1,))
        for r, m in zip(chosen, mults):
            den = den * Poly.from_roots(*([r] * m))
        num = Poly([Fraction(rng.randint(-9, 9)) for _ in range(den.degree)])
        quotient = RatFunc(num, den)
        if quotient.is_zero:
            continue
        back = RatFunc()
        for term in partial_fractions(quotient):
            back = back + term.as_ratfunc()
        assert back == quotient
        checked += 1


def test_rendering():
    assert str(FIB_DEN) == "t^2 - t - 1"
    assert FIB_DEN.render("e^s") == "e^(2s) - e^s - 1"
    fib = RatFunc(Poly((0, 1)), FIB_DEN)
    assert str(fib) == "t/(t^2 - t - 1)"
    assert fib.render("e^s") == "e^s/(e^(2s) - e^s - 1)"
    assert str(RatFunc(Poly((1,)), Poly((-5, 1)))) == "1/(t - 5)"
    assert str(RatFunc(Poly((1,)), Poly((0, 1)))) == "1/t"
    assert str(RatFunc()) == "0"
    assert str(Poly((0, Fraction(-1, 2)))) == "-1/2*t"
    assert str(Poly.from_roots(PHI)) == "t + (-1/2 - 1/2*sqrt(5))"
