import random
from fractions import Fraction as F

import pytest

from h3orbifold.classical import (CPoly, cpoly_polarization, cpoly_relation,
                                  q0, RELATION_TERMS)


def test_polarization_examples():
    q1 = cpoly_polarization(1, (0,))
    expected = (CPoly.variable("x", 1, 0) + CPoly.variable("x", 2, 0)
                + CPoly.variable("x", 3, 0))
    assert q1 == expected
    q2 = cpoly_polarization(2, (0, 1))
    assert len(q2.terms) == 3
    with pytest.raises(ValueError):
        cpoly_polarization(2, (0,))
    with pytest.raises(ValueError):
        cpoly_polarization(1, (-1,))


def test_diagonal_family():
    assert q0(1, (3,)) == CPoly.variable("y", 1, 3)
    q2 = q0(2, (0, 1))
    assert len(q2.terms) == 2
    q3 = q0(3, (0, 0, 0))
    assert len(q3.terms) == 2


def test_cpoly_ring_ops():
    x = CPoly.variable("y", 2, 0)
    y = CPoly.variable("y", 3, 1)
    assert (x + y) * (x - y) == x * x - y * y
    assert (x * 0).is_zero()
    assert x * F(1, 2) + x * F(1, 2) == x


def test_relations_vanish_at_distinct_labels():
    # distinct formal labels make this a polynomial-identity proof
    assert cpoly_relation("D6C1", (0, 1, 2, 3, 4, 5)).is_zero()
    assert cpoly_relation("D6C2", (0, 1, 2, 3, 4, 5)).is_zero()
    assert cpoly_relation("D5C", (0, 1, 2, 3, 4)).is_zero()


def test_relations_vanish_on_random_indices():
    rng = random.Random(23)
    for _ in range(25):
        assert cpoly_relation("D6C1", [rng.randint(0, 3) for _ in range(6)]).is_zero()
        assert cpoly_relation("D6C2", [rng.randint(0, 3) for _ in range(6)]).is_zero()
        assert cpoly_relation("D5C", [rng.randint(0, 3) for _ in range(5)]).is_zero()


def test_arity_checks():
    with pytest.raises(ValueError):
        cpoly_relation("D5C", (0, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        cpoly_relation("nope", (0,) * 6)


def test_printed_cubic_tail_defect_is_documented():
    """Freeze the source-display defect: the four-term half-integer tail does
    not cancel the mixed part of the cubic products.  The catalog's eight-term
    tail (three of whose terms coincide with the display) is what vanishes."""
    printed_tail = [
        (F(1, 2), [(2, (0, 2)), (2, (1, 5)), (2, (3, 4))]),
        (F(-1, 2), [(2, (0, 3)), (2, (1, 4)), (2, (2, 5))]),
        (F(1, 2), [(2, (0, 4)), (2, (1, 2)), (2, (3, 5))]),
        (F(-1, 2), [(2, (0, 4)), (2, (1, 3)), (2, (2, 5))]),
    ]
    idx = (0, 1, 2, 3, 4, 5)
    out = (q0(3, (0, 1, 2)) * q0(3, (3, 4, 5))
           - q0(3, (0, 1, 3)) * q0(3, (2, 4, 5)))
    for coeff, factors in printed_tail:
        term = CPoly.constant(coeff)
        for k, pos in factors:
            term = term * q0(k, tuple(idx[p] for p in pos))
        out = out + term
    assert not out.is_zero()
    # and three of the four printed pairings appear in the corrected tail
    corrected_pairings = {tuple(pos for _, pos in factors)
                          for _, factors in RELATION_TERMS["D6C2"][2:]}
    printed_pairings = {tuple(pos for _, pos in factors)
                        for _, factors in printed_tail}
    assert len(printed_pairings & corrected_pairings) == 3
