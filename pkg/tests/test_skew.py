"""Operators on Q[h,hb] built from h, hb, the hb-derivative and the h-shift.

Composition has to thread the two rewrite rules (derivative past hb,
shift past h); everything here cross-checks the composed normal form
against direct application.
"""

import random

from takiff import BiPoly, Q
from takiff.skew import SkewOperator


def random_poly(rng, deg=3):
    p = BiPoly.zero()
    for _ in range(rng.randrange(1, 5)):
        p = p + BiPoly.monomial(Q(rng.randrange(-5, 6)),
                                rng.randrange(deg + 1), rng.randrange(deg + 1))
    return p


def random_operator(rng):
    op = SkewOperator.zero()
    for _ in range(rng.randrange(1, 4)):
        op = op + SkewOperator.word(Q(rng.randrange(-4, 5)),
                                    i=rng.randrange(3), j=rng.randrange(3),
                                    k=rng.randrange(3), m=rng.randrange(-2, 3))
    return op


def test_compose_matches_apply():
    rng = random.Random(21)
    for _ in range(25):
        A, B = random_operator(rng), random_operator(rng)
        p = random_poly(rng)
        assert (A * B).apply(p) == A.apply(B.apply(p))


def test_rewrite_relations():
    db = SkewOperator.dbar()
    hb = SkewOperator.mult(BiPoly.var_hb())
    h = SkewOperator.mult(BiPoly.var_h())
    one = SkewOperator.identity()
    # the derivative slides past hb at the cost of the identity
    assert db * hb - hb * db == one
    # and commutes with the other variable outright
    assert db * h == h * db
    # the shift walks past h, dropping it by two per step
    for m in (1, 2, 3):
        s = SkewOperator.sigma(m)
        assert s * h == h * s - s.scale(2 * m)
    assert SkewOperator.sigma(2) * SkewOperator.sigma(-2) == one
    assert SkewOperator.sigma(1) * SkewOperator.sigma(1) == SkewOperator.sigma(2)


def test_apply_examples():
    p = BiPoly.parse("h^2*hb + 3*h")
    assert SkewOperator.sigma(2).apply(p) == BiPoly.parse(
        "h^2*hb - 8*h*hb + 3*h + 16*hb - 12")
    assert SkewOperator.dbar().apply(p) == BiPoly.parse("h^2")
    assert SkewOperator.mult(BiPoly.var_hb()).apply(p) == BiPoly.parse(
        "h^2*hb^2 + 3*h*hb")
    assert SkewOperator.mult(p).apply(BiPoly.const(1)) == p


def test_commutator_and_linearity():
    rng = random.Random(22)
    for _ in range(15):
        A, B = random_operator(rng), random_operator(rng)
        p = random_poly(rng)
        assert A.commutator(B) == A * B - B * A
        assert (A + B).apply(p) == A.apply(p) + B.apply(p)
        assert A.scale(Q(3, 2)).apply(p) == BiPoly.const(Q(3, 2)) * A.apply(p)
        assert (-A).apply(p) == -A.apply(p)


def test_powers():
    db = SkewOperator.dbar()
    assert (db ** 3).apply(BiPoly.parse("hb^4")) == BiPoly.parse("24*hb")
    assert db ** 0 == SkewOperator.identity()
    assert SkewOperator.sigma(1) ** 3 == SkewOperator.sigma(3)
    rng = random.Random(23)
    A = random_operator(rng)
    assert A ** 2 == A * A
