"""Symmetric-group actions on Fock states, Reynolds averaging, and the
named invariant generator families.

On the standard basis a permutation just relabels field indices.  On the
diagonalized rank-3 basis the induced action is monomial: transpositions swap
fields 2 and 3 (possibly with a cube-root-of-unity factor) and 3-cycles scale
fields 2 and 3 by z and z^2.  The action matrices are derived once, exactly,
from the change-of-basis matrices, so no case analysis is hard-coded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _perms

from .fock import ALPHA, BETA, FockState, canonical
from .scalars import Scalar
from .vertex import nth_product, translate_power
from . import fock as _fock


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a bijection of 1..{len(images)}")
        self.images = images

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition self after other."""
        if len(self.images) != len(other.images):
            raise ValueError("size mismatch")
        return Permutation(tuple(self(other(i)) for i in range(1, len(self.images) + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def cycle_type(self) -> tuple:
        seen = set()
        lengths = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            length = 0
            cur = start
            while cur not in seen:
                seen.add(cur)
                cur = self(cur)
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{self.images}"


def symmetric_group(n: int) -> list:
    return [Permutation(p) for p in _perms(range(1, n + 1))]


#: supported group specs for averaging (rank 3 unless noted)
GROUPS = {
    "S3": [Permutation(p) for p in _perms((1, 2, 3))],
    "Z3": [Permutation((1, 2, 3)), Permutation((2, 3, 1)), Permutation((3, 1, 2))],
    "S2": [Permutation((1, 2, 3)), Permutation((1, 3, 2))],
}


@lru_cache(maxsize=None)
def _beta_action_table(images: tuple) -> tuple:
    """For a rank-3 permutation, the monomial matrix of its action on the
    diagonalized basis: field -> (scalar, new_field)."""
    sigma = Permutation(images)
    inv = sigma.inverse()
    m_b2a = _fock._B_TO_A
    m_a2b = _fock._A_TO_B
    table = {}
    for a in (1, 2, 3):
        # sigma . b_a = sum_j coeff(sigma^-1 j) a_j, re-expanded over b;
        # the 1/sqrt(3) factors combine to exactly 1/3
        row = {}
        b2a = dict(m_b2a[a])
        for j in (1, 2, 3):
            cj = b2a[inv(j)]
            for b, w in m_a2b[j]:
                cur = row.get(b, Scalar(0))
                row[b] = cur + cj * w
        entries = [(b, c * Fraction(1, 3)) for b, c in row.items() if c * Fraction(1, 3)]
        if len(entries) != 1:
            raise AssertionError("group action is not monomial in this basis")
        b, c = entries[0]
        table[a] = (c, b)
    return tuple(table[a] for a in (1, 2, 3))


def act(sigma: Permutation, v: FockState) -> FockState:
    """The linear action of a permutation on a Fock state."""
    if len(sigma.images) != v.rank:
        raise ValueError(f"permutation of size {len(sigma.images)} on rank {v.rank}")
    out = FockState(v.rank, v.basis)
    if v.basis == ALPHA:
        for mon, c in v.terms.items():
            moved = canonical(tuple((lv, sigma(f)) for lv, f in mon))
            out._add_term(moved, c)
        return out
    table = _beta_action_table(sigma.images)
    for mon, c in v.terms.items():
        coeff = c
        modes = []
        for lv, f in mon:
            s, nf = table[f - 1]
            modes.append((lv, nf))
            coeff = coeff * s
        out._add_term(canonical(modes), coeff)
    return out


def reynolds(group: str, v: FockState) -> FockState:
    """Group-average projector onto invariants; idempotent."""
    members = GROUPS.get(group)
    if members is None:
        raise ValueError(f"unknown group spec {group!r} (use S3, Z3 or S2)")
    out = FockState(v.rank, v.basis)
    for sigma in members:
        out = out + act(sigma, v)
    return out.scale(Fraction(1, len(members)))


def is_invariant(group: str, v: FockState) -> bool:
    return all(act(sigma, v) == v for sigma in GROUPS[group])


# -- named generator families -------------------------------------------------


@dataclass(frozen=True)
class GeneratorId:
    """Symbolic handle for one of the named invariant generators."""
    family: str
    indices: tuple

    def __str__(self):
        return f"{self.family}({','.join(str(i) for i in self.indices)})"


_FAMILY_ARITY = {
    "omega1": 1, "omega2": 2, "omega3": 3,
    "omega1_0": 1, "omega2_0": 2, "omega3_0": 3,
    "omega23_0": 2, "omega222_0": 3, "omega333_0": 3,
}


def generator_weight(gid: GeneratorId) -> int:
    return sum(gid.indices) + _FAMILY_ARITY[gid.family]


def build_generator(gid: GeneratorId) -> FockState:
    """The named state, exactly as defined by its family.

    Families "omega1/2/3" live in the standard basis (sums over the three
    fields); the "_0" families live in the diagonalized basis.
    """
    family, idx = gid.family, tuple(gid.indices)
    arity = _FAMILY_ARITY.get(family)
    if arity is None:
        raise ValueError(f"unknown generator family {family!r}")
    if len(idx) != arity:
        raise ValueError(f"{family} takes {arity} indices, got {len(idx)}")
    if any(i < 0 for i in idx):
        raise ValueError("generator indices must be >= 0")
    levels = [i + 1 for i in idx]

    if family in ("omega1", "omega2", "omega3"):
        out = FockState(3, ALPHA)
        for i in (1, 2, 3):
            out._add_term(canonical([(lv, i) for lv in levels]), Fraction(1))
        return out
    out = FockState(3, BETA)
    if family == "omega1_0":
        out._add_term(((levels[0], 1),), Fraction(1))
    elif family == "omega2_0":
        a, b = levels
        out._add_term(canonical([(a, 2), (b, 3)]), Fraction(1))
        out._add_term(canonical([(a, 3), (b, 2)]), Fraction(1))
    elif family == "omega3_0":
        out._add_term(canonical([(lv, 2) for lv in levels]), Fraction(1))
        out._add_term(canonical([(lv, 3) for lv in levels]), Fraction(1))
    elif family == "omega23_0":
        a, b = levels
        out._add_term(canonical([(a, 2), (b, 3)]), Fraction(1))
    elif family == "omega222_0":
        out._add_term(canonical([(lv, 2) for lv in levels]), Fraction(1))
    elif family == "omega333_0":
        out._add_term(canonical([(lv, 3) for lv in levels]), Fraction(1))
    return out


def gen(family: str, *indices: int) -> FockState:
    return build_generator(GeneratorId(family, tuple(indices)))


def power_of_three_ratio(lhs: FockState, rhs: FockState):
    """If lhs == 3^k * rhs for a single integer k, return k, else None.

    The stored diagonal-basis normalization absorbs one factor of sqrt(3) per
    mode, so a convention slip in a cross-basis identity shows up as a global
    integral power of 3.  Checks should report that factor instead of
    silently rescaling.
    """
    if lhs.rank != rhs.rank or lhs.basis != rhs.basis:
        return None
    if lhs.is_zero() and rhs.is_zero():
        return 0
    if lhs.is_zero() or rhs.is_zero():
        return None
    if set(lhs.terms) != set(rhs.terms):
        return None
    ratios = set()
    for mon, c in lhs.terms.items():
        d = rhs.terms[mon]
        if isinstance(c, Scalar) or isinstance(d, Scalar):
            c = c if isinstance(c, Scalar) else Scalar(c)
            d = d if isinstance(d, Scalar) else Scalar(d)
            ratio = c * d.inverse()
            if not ratio.is_rational():
                return None
            ratio = ratio.as_rational()
        else:
            ratio = c / d
        ratios.add(ratio)
        if len(ratios) > 1:
            return None
    ratio = ratios.pop()
    if ratio <= 0:
        return None
    num, den = ratio.numerator, ratio.denominator
    for k in range(0, 64):
        if num == 3 ** k and den == 1:
            return k
        if den == 3 ** k and num == 1:
            return -k
    return None


def verify_generator_translation(a: int, b: int = None, c: int = None) -> FockState:
    """Residual of the bridge between the two generator families.

    With the stored normalization (each diagonal-basis mode absorbs one
    1/sqrt(3)), the bridge identities read, after rewriting the standard-basis
    state in the diagonalized basis:

        rewrite(omega1(a))     = 3 * omega1_0(a)
        rewrite(omega2(a,b))   = omega2_0(a,b) + omega1_0(a)_{-1} omega1_0(b)
        rewrite(omega3(a,b,c)) = omega3_0(a,b,c)
                                 + omega1_0(a)_{-1} omega2_0(b,c)
                                 + omega1_0(b)_{-1} omega2_0(a,c)
                                 + omega1_0(c)_{-1} omega2_0(a,b)
                                 + omega1_0(a)_{-1} omega1_0(b)_{-1} omega1_0(c)

    (the square root powers all collapse to integral powers of 3 because the
    identities are homogeneous in the number of modes.)  Returns LHS - RHS.
    """
    from .fock import change_basis
    if b is None:
        lhs = change_basis(gen("omega1", a), BETA)
        return lhs - gen("omega1_0", a).scale(Fraction(3))
    if c is None:
        lhs = change_basis(gen("omega2", a, b), BETA)
        rhs = gen("omega2_0", a, b) + nth_product(gen("omega1_0", a), -1,
                                                  gen("omega1_0", b))
        return lhs - rhs
    lhs = change_basis(gen("omega3", a, b, c), BETA)
    rhs = gen("omega3_0", a, b, c)
    for (x, yz) in ((a, (b, c)), (b, (a, c)), (c, (a, b))):
        rhs = rhs + nth_product(gen("omega1_0", x), -1, gen("omega2_0", *yz))
    rhs = rhs + nth_product(gen("omega1_0", a), -1,
                            nth_product(gen("omega1_0", b), -1, gen("omega1_0", c)))
    return lhs - rhs
