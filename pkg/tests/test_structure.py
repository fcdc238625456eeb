from fractions import Fraction as F

import pytest

from h3orbifold.fock import BETA, FockState, enumerate_basis
from h3orbifold.linalg import Echelon, det_bareiss, lagrange_interpolate, poly_eval
from h3orbifold.structure import (DET_A_PATTERNS, S3_GENERATOR_IDS,
                                  Z3_GENERATOR_IDS, build_D,
                                  check_decomposition,
                                  cubic_family_coefficients, det_A,
                                  det_A_closed_form, det_A_matrix, span_dims)
from h3orbifold.symmetry import GROUPS, GeneratorId, act, gen
from h3orbifold.relations import D3, Tk
from h3orbifold.vertex import nth_product


def test_build_D_weights():
    # at all-equal indices the alternating sums cancel outright
    assert build_D("D5", (0, 0, 0, 0, 0)).is_zero()
    assert build_D("D5", (0, 0, 0, 1, 1)).weight() == 7
    assert build_D("D6_1", (0, 0, 0, 0, 1, 1)).weight() == 8
    assert build_D("D6_2", (0, 0, 0, 0, 1, 1)).weight() == 8
    with pytest.raises(ValueError):
        build_D("D5", (0, 0, 0))
    with pytest.raises(ValueError):
        build_D("D9", (0,) * 6)


def test_D5_is_pure_cubic():
    for idx in [(0, 0, 0, 0, 0), (0, 0, 0, 1, 1), (0, 0, 1, 1, 2), (1, 0, 2, 0, 1)]:
        st = build_D("D5", idx)
        assert all(len(m) == 3 for m in st.terms), idx


def test_check_decomposition_D5():
    rep = check_decomposition("D5", (0, 0, 0, 1, 1))
    assert rep.ok
    assert rep.cubic and not rep.quartic and not rep.quadratic
    assert all(sum(k) == 4 for k in rep.cubic)
    rep0 = check_decomposition("D5", (0, 0, 0, 0, 0))
    assert rep0.ok


def test_check_decomposition_D6():
    for rel in ("D6_1", "D6_2"):
        rep = check_decomposition(rel, (0, 0, 0, 0, 1, 1))
        assert rep.ok, rel
        # no six-mode residue: the sextic part cancels identically
        assert rep.residual_monomials == 0
        assert all(sum(a) + sum(b) == 4 for a, b in rep.quartic)
        assert all(sum(k) == 6 for k in rep.quadratic)


def test_cubic_family_coefficients_unique_readoff():
    st = gen("omega3_0", 0, 1, 2).scale(F(5, 3)) + gen("omega3_0", 0, 0, 0).scale(-2)
    mu = cubic_family_coefficients(st)
    assert mu == {(0, 1, 2): F(5, 3), (0, 0, 0): F(-2)}
    with pytest.raises(ValueError):
        cubic_family_coefficients(gen("omega2_0", 0, 0))
    with pytest.raises(ValueError):
        cubic_family_coefficients(gen("omega222_0", 0, 0, 0))


def test_det_A_basic_contract():
    with pytest.raises(ValueError):
        det_A(7)
    with pytest.raises(ValueError):
        det_A(4)
    # collision-free arguments give a nonzero determinant
    for a in (10, 12):
        assert det_A(a) != 0
    # label collisions at 6 and 8 force repeated rows
    m6 = det_A_matrix(6)
    assert m6[2] == m6[4]
    assert det_A(6) == 0


def test_det_A_even_branch_has_the_quoted_singular_factors():
    """The determinant, as a polynomial over even arguments, is divisible by
    exactly the singular factors of the quoted closed form."""
    pts = [(a, det_A(a)) for a in range(10, 38, 2)]
    poly = lagrange_interpolate(pts[:13])
    for a, v in pts[13:]:
        assert poly_eval(poly, a) == v
    assert len(poly) - 1 == 11  # same degree as the closed form

    def divide_out(coeffs, root):
        out = []
        carry = F(0)
        for c in reversed(coeffs):
            carry = c + carry * root
            out.append(carry)
        assert out[-1] == 0, f"not divisible by (a - {root})"
        return list(reversed(out[:-1]))

    res = poly
    for root in (4, 4, 3, 1, -2):
        res = divide_out(res, root)
    assert len(res) - 1 == 6  # a degree-6 factor remains, as in the closed form


def test_span_matches_burnside_targets():
    rep = span_dims(S3_GENERATOR_IDS, 5, "S3")
    assert [rep.dims_spanned[w] for w in range(6)] == [1, 1, 3, 6, 13, 24]
    assert rep.all_matched
    rep = span_dims(Z3_GENERATOR_IDS, 5, "Z3")
    assert [rep.dims_spanned[w] for w in range(6)] == [1, 1, 3, 8, 17, 36]
    assert rep.all_matched


def test_span_monotone_in_generators():
    small = span_dims(S3_GENERATOR_IDS[:4], 5, "S3")
    full = span_dims(S3_GENERATOR_IDS, 5, "S3")
    for w in range(6):
        assert small.dims_spanned[w] <= full.dims_spanned[w]


def test_span_rejects_non_invariant_generator():
    bad = FockState.monomial(3, [(1, 1)])
    with pytest.raises(ValueError):
        span_dims([bad], 3, "S3")


def test_span_full_initial_family_saturates():
    # every invariant of the initial families up to the cap stays inside
    gens = []
    for a in range(5):
        gens.append(GeneratorId("omega1", (a,)))
    for a in range(4):
        for b in range(a, 4):
            if a + b <= 3:
                gens.append(GeneratorId("omega2", (a, b)))
    for t in [(0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 0, 2), (1, 1, 1)]:
        gens.append(GeneratorId("omega3", t))
    rep = span_dims(gens, 5, "S3")
    assert rep.all_matched


def test_reynolds_rank_equals_burnside_count():
    from h3orbifold.qseries import orbifold_character
    from h3orbifold.symmetry import reynolds
    for group in ("S3", "Z3"):
        ch = orbifold_character(group, 9)
        for w in range(9):
            ech = Echelon()
            for monomial in enumerate_basis(3, w):
                state = FockState(3, "a", {monomial: F(1)})
                ech.insert(reynolds(group, state).terms)
            assert ech.rank == ch.coefficient(ch.offset + w), (group, w)


def test_z3_mirror_relations():
    # the field-2 cube identities hold verbatim for the field-3 cube family
    w333 = lambda *i: gen("omega333_0", *i)
    w23 = lambda a, b: gen("omega23_0", a, b)

    def D3m(a, b):
        # mirrored tool: couple through the opposite quadratic order
        return (nth_product(w23(a, 0), -1, w333(0, 0, b))
                - nth_product(w23(a, b), -1, w333(0, 0, 0)))

    for a in (3, 4, 5):
        rhs = (Tk(w333(0, 0, a - 1), 1)
               + D3m(a - 3, 1).scale(F((-1) ** a, a - 2))).scale(F(1, 3 * a + 1))
        assert (w333(0, 0, a) - rhs).is_zero(), a


def test_z3_setup_derivative_displays():
    # weight-4/5 cube reductions; the translation coefficient on the second
    # line reads 2/3 in the display but the identity requires 1/3
    for fam in ("omega222_0", "omega333_0"):
        w = lambda *i: gen(fam, *i)
        assert (w(0, 0, 1) - Tk(w(0, 0, 0), 1).scale(F(1, 3))).is_zero()
        lhs = w(0, 1, 1)
        rhs = w(0, 0, 2).scale(-1) + Tk(w(0, 0, 0), 2).scale(F(1, 3))
        assert (lhs - rhs).is_zero()
