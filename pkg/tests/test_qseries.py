from fractions import Fraction as F

import pytest

from h3orbifold.qseries import (FracSeries, burnside_trace, fock_trace_series,
                                module_character, orbifold_character,
                                pochhammer_inv, twist_weight,
                                w_algebra_free_character)
from h3orbifold.symmetry import GROUPS


def test_pochhammer_examples():
    p1 = pochhammer_inv(1, 10)
    assert p1.integer_slice(8) == [1, 1, 2, 3, 5, 7, 11, 15]
    p3 = pochhammer_inv(3, 10)
    assert p3.integer_slice(7) == [1, 0, 0, 1, 0, 0, 2]
    cube = p1 * p1 * p1
    assert cube.coefficient(6) == 221
    half = pochhammer_inv(F(1, 2), 3)
    assert half.D == 2
    assert half.coefficient(F(1, 2)) == 1


def test_burnside_traces():
    full = burnside_trace((1, 1, 1), 8)
    assert full.offset == F(-1, 8)
    assert full.integer_slice(5) == [1, 3, 9, 22, 51]
    swap = burnside_trace((2, 1), 8)
    assert swap.integer_slice(7) == [1, 1, 3, 4, 9, 12, 23]
    cyc = burnside_trace((3,), 9)
    assert cyc.integer_slice(7) == [1, 0, 0, 1, 0, 0, 2]


def test_burnside_matches_direct_fock_traces():
    by_type = {}
    for sigma in GROUPS["S3"]:
        direct = fock_trace_series(sigma, 6)
        formula = burnside_trace(sigma.cycle_type(), 6)
        assert direct == formula, sigma
        # depends only on the cycle type
        prev = by_type.setdefault(sigma.cycle_type(), direct)
        assert prev == direct


def test_orbifold_characters():
    s3 = orbifold_character("S3", 8)
    z3 = orbifold_character("Z3", 8)
    assert s3.integer_slice(7) == [1, 1, 3, 6, 13, 24, 49]
    assert z3.integer_slice(7) == [1, 1, 3, 8, 17, 36, 75]
    assert all(a <= b for a, b in zip(s3.integer_slice(9), z3.integer_slice(9)))
    with pytest.raises(ValueError):
        orbifold_character("S4")


def test_twist_weights():
    assert twist_weight(3, (1, 1)) == F(1, 9)
    assert twist_weight(2, (1,)) == F(1, 16)
    assert twist_weight(2, (0,)) == 0
    with pytest.raises(ValueError):
        twist_weight(3, (1,))


def test_module_characters():
    sgn = module_character("sgn", 8)
    assert sgn.integer_slice(4) == [0, 0, 0, 2]
    # cross-checked against the isotypic decomposition:
    # st_w = (vac_w - orb_w - sgn_w) / 2
    st = module_character("st", 8)
    assert st.integer_slice(5) == [0, 1, 3, 7, 17]
    sig = module_character("sigma", 4, weights=(0,))
    assert sig.offset == F(-1, 72)
    assert sig.coefficient(F(-1, 72) + F(1, 3)) == 1
    th = module_character("theta", 4, weights=(0, 0))
    assert th.offset == F(-1, 16)
    fr = module_character("fock", 6, weights=(F(1, 2), 0, 0))
    assert fr.offset == F(1, 8) - F(1, 8) + F(0)  # w^2/2 - 1/8 = 0
    with pytest.raises(ValueError):
        module_character("sigma", 4, weights=(0, 0))


def test_isotypic_decomposition():
    lhs = module_character("vac", 12)
    rhs = (module_character("orb", 12) + module_character("sgn", 12)
           + module_character("st", 12).scale(2))
    assert lhs == rhs


def test_free_type_character_mismatch_exponents():
    wf = w_algebra_free_character([1, 2, 3, 4, 5, 6, 6], 12)
    orb = orbifold_character("S3", 12).shift(F(1, 8))
    assert orb.first_difference(wf) == 9
    wf9 = wf - wf.shift(9)
    assert orb.first_difference(wf9) == 10


def test_series_arithmetic():
    a = FracSeries(2, F(-1, 8), {0: F(1), 1: F(2)}, order=4)
    b = FracSeries(3, F(-1, 8), {0: F(1)}, order=4)
    s = a + b
    assert s.coefficient(F(-1, 8)) == 2
    assert s.D == 6
    prod = a * a
    assert prod.offset == F(-1, 4)
    assert prod.coefficient(F(-1, 4) + F(1, 2)) == 4
    with pytest.raises(ValueError):
        a + FracSeries(2, F(1, 7), {0: F(1)}, order=4)  # misaligned offsets
    with pytest.raises(ValueError):
        a.coefficient(100)  # beyond truncation


def test_series_json_shape():
    s = orbifold_character("S3", 3)
    data = s.to_json()
    assert set(data) == {"D", "offset", "order", "coeffs"}
    assert data["offset"] == "-1/8"
