"""Truncated q-series with fractional exponents and the orbifold characters.

A series is a rational offset plus coefficients on the lattice (1/D)Z,
complete for exponents up to a stated truncation order.  Character formulas
are products of inverse Pochhammer symbols; graded dimensions come from
averaging trace series over conjugacy classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

DEFAULT_ORDER = 12
DEFAULT_LATTICE = 72


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class FracSeries:
    """sum_k coeffs[k] q^(offset + k/D), truncated at exponent <= order."""

    __slots__ = ("D", "offset", "coeffs", "order")

    def __init__(self, D: int = 1, offset=0, coeffs=None, order=DEFAULT_ORDER):
        if D < 1:
            raise ValueError("lattice denominator must be positive")
        self.D = D
        self.offset = Fraction(offset)
        self.order = Fraction(order)
        self.coeffs: dict = {}
        if coeffs:
            for k, c in coeffs.items():
                c = Fraction(c)
                if c and self.offset + Fraction(k, D) <= self.order:
                    self.coeffs[k] = c

    @classmethod
    def one(cls, order=DEFAULT_ORDER, D: int = 1) -> "FracSeries":
        return cls(D, 0, {0: Fraction(1)}, order)

    def copy(self) -> "FracSeries":
        return FracSeries(self.D, self.offset, dict(self.coeffs), self.order)

    def rebase(self, D: int) -> "FracSeries":
        """Move to a finer lattice (D must be a multiple of the current one)."""
        if D % self.D:
            raise ValueError("new lattice must refine the old one")
        f = D // self.D
        return FracSeries(D, self.offset,
                          {k * f: c for k, c in self.coeffs.items()}, self.order)

    def coefficient(self, exponent) -> Fraction:
        """Coefficient of q^exponent (absolute, offset included)."""
        e = Fraction(exponent)
        if e > self.order:
            raise ValueError(f"exponent {e} beyond truncation {self.order}")
        rel = (e - self.offset) * self.D
        if rel.denominator != 1:
            return Fraction(0)
        return self.coeffs.get(int(rel), Fraction(0))

    def integer_slice(self, count: int) -> list:
        """Coefficients at offset + 0, offset + 1, ..., offset + count - 1."""
        return [self.coefficient(self.offset + n) for n in range(count)]

    # -- arithmetic -----------------------------------------------------

    def _aligned(self, other: "FracSeries"):
        """Rebase both series onto a common lattice and common offset."""
        D = _lcm(self.D, other.D)
        offset = min(self.offset, other.offset)
        out = []
        for s in (self.rebase(D), other.rebase(D)):
            shift = (s.offset - offset) * D
            if shift.denominator != 1:
                raise ValueError("offsets differ by a non-lattice amount")
            out.append({k + int(shift): c for k, c in s.coeffs.items()})
        return D, offset, out[0], out[1]

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FracSeries(1, 0, {0: Fraction(other)}, self.order)
        D, offset, ca, cb = self._aligned(other)
        order = min(self.order, other.order)
        for k, c in cb.items():
            ca[k] = ca.get(k, Fraction(0)) + c
        return FracSeries(D, offset, ca, order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FracSeries(1, 0, {0: Fraction(other)}, self.order)
        return self + other.scale(-1)

    def scale(self, c) -> "FracSeries":
        c = Fraction(c)
        out = FracSeries(self.D, self.offset, {}, self.order)
        if c:
            out.coeffs = {k: v * c for k, v in self.coeffs.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        D = _lcm(self.D, other.D)
        a = self.rebase(D)
        b = other.rebase(D)
        offset = a.offset + b.offset
        # truncation: a is complete to order_a, so products are complete to
        # min(order_a + offset_b-part, ...); keep the conservative bound
        order = min(a.order + b.offset, b.order + a.offset)
        coeffs: dict = {}
        bound = (order - offset) * D
        for k1, c1 in a.coeffs.items():
            for k2, c2 in b.coeffs.items():
                k = k1 + k2
                if k > bound:
                    continue
                coeffs[k] = coeffs.get(k, Fraction(0)) + c1 * c2
        return FracSeries(D, offset, coeffs, order)

    def shift(self, delta) -> "FracSeries":
        """Multiply by q^delta."""
        return FracSeries(self.D, self.offset + Fraction(delta),
                          dict(self.coeffs), self.order + Fraction(delta))

    def __eq__(self, other):
        if not isinstance(other, FracSeries):
            return NotImplemented
        return self.first_difference(other) is None

    def first_difference(self, other):
        """Smallest exponent (within both truncations) where the two series
        differ, or None."""
        D, offset, ca, cb = self._aligned(other)
        order = min(self.order, other.order)
        diffs = [k for k in set(ca) | set(cb)
                 if offset + Fraction(k, D) <= order
                 and ca.get(k, 0) != cb.get(k, 0)]
        if not diffs:
            return None
        return offset + Fraction(min(diffs), D)

    def __repr__(self):
        bits = []
        for k in sorted(self.coeffs)[:8]:
            e = self.offset + Fraction(k, self.D)
            bits.append(f"{self.coeffs[k]}*q^({e})")
        more = " + ..." if len(self.coeffs) > 8 else ""
        return f"<FracSeries {' + '.join(bits) or '0'}{more} (order {self.order})>"

    def to_json(self) -> dict:
        return {
            "D": self.D,
            "offset": str(self.offset),
            "order": str(self.order),
            "coeffs": {str(k): str(c) for k, c in sorted(self.coeffs.items())},
        }


def pochhammer_inv(step, order=DEFAULT_ORDER) -> FracSeries:
    """Expansion of prod_{n>=1} (1 - q^(step*n))^(-1) up to the order.

    Accepts fractional steps; the lattice adapts.
    """
    step = Fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    D = step.denominator
    order_f = Fraction(order)
    n_slots = int((order_f * D))
    stepD = int(step * D)
    coeffs = [Fraction(0)] * (n_slots + 1)
    coeffs[0] = Fraction(1)
    n = 1
    while stepD * n <= n_slots:
        part = stepD * n
        for k in range(part, n_slots + 1):
            coeffs[k] += coeffs[k - part]
        n += 1
    return FracSeries(D, 0, {k: c for k, c in enumerate(coeffs) if c}, order_f)


def pochhammer_single_inv(start: int, order=DEFAULT_ORDER) -> FracSeries:
    """prod_{m>=start} (1 - q^m)^(-1)."""
    order_f = Fraction(order)
    n = int(order_f)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[0] = Fraction(1)
    for part in range(start, n + 1):
        for k in range(part, n + 1):
            coeffs[k] += coeffs[k - part]
    return FracSeries(1, 0, {k: c for k, c in enumerate(coeffs) if c}, order_f)


def burnside_trace(cycle_type, order=DEFAULT_ORDER) -> FracSeries:
    """Trace series of a permutation with the given cycle type on the rank-n
    Fock space, including the q^(-n/24) prefactor."""
    cycle_type = tuple(cycle_type)
    n = sum(cycle_type)
    out = FracSeries.one(order)
    for ell in cycle_type:
        out = out * pochhammer_inv(ell, order)
    return out.shift(Fraction(-n, 24))


_CLASS_DATA = {
    "S3": (6, (((1, 1, 1), 1), ((2, 1), 3), ((3,), 2))),
    "Z3": (3, (((1, 1, 1), 1), ((3,), 2))),
}


def orbifold_character(group: str, order=DEFAULT_ORDER) -> FracSeries:
    """Graded dimension series of the invariant subalgebra, by averaging the
    class traces."""
    data = _CLASS_DATA.get(group)
    if data is None:
        raise ValueError(f"unknown group {group!r} (use S3 or Z3)")
    size, classes = data
    out = None
    for cycle_type, mult in classes:
        term = burnside_trace(cycle_type, order).scale(mult)
        out = term if out is None else out + term
    return out.scale(Fraction(1, size))


def twist_weight(p: int, r) -> Fraction:
    """Lowest conformal weight of the cyclically twisted module:
    (1/(4p^2)) * sum_i i (p-i) r_i."""
    r = tuple(r)
    if p < 2:
        raise ValueError("order must be >= 2")
    if len(r) != p - 1:
        raise ValueError(f"need {p - 1} eigenspace dimensions")
    total = sum(i * (p - i) * ri for i, ri in enumerate(r, start=1))
    return Fraction(total, 4 * p * p)


def module_character(kind: str, order=DEFAULT_ORDER, weights=()) -> FracSeries:
    """Characters of the named module families.

    kind: "vac" (full rank-3 Fock space), "orb" / "sgn" / "st" (isotypic
    pieces), "fock" (highest weight w1,w2,w3), "theta" (2-cycle twist, w1,w3),
    "sigma" (3-cycle twist, w).
    """
    weights = tuple(Fraction(w) for w in weights)
    if kind == "vac":
        return burnside_trace((1, 1, 1), order)
    if kind == "orb":
        return orbifold_character("S3", order)
    if kind == "sgn":
        e = burnside_trace((1, 1, 1), order)
        t = burnside_trace((2, 1), order).scale(3)
        c = burnside_trace((3,), order).scale(2)
        return (e - t + c).scale(Fraction(1, 6))
    if kind == "st":
        e = burnside_trace((1, 1, 1), order)
        c = burnside_trace((3,), order)
        return (e - c).scale(Fraction(1, 3))
    if kind == "fock":
        if len(weights) != 3:
            raise ValueError("fock takes three highest weights")
        shift = sum(w * w / 2 for w in weights)
        return burnside_trace((1, 1, 1), order).shift(shift)
    if kind == "theta":
        if len(weights) != 2:
            raise ValueError("theta takes two highest weights")
        shift = sum(w * w / 2 for w in weights)
        h = twist_weight(2, (1,))
        base = pochhammer_inv(Fraction(1, 2), order) * pochhammer_inv(1, order)
        return base.shift(h - Fraction(3, 24) + shift)
    if kind == "sigma":
        if len(weights) != 1:
            raise ValueError("sigma takes one highest weight")
        shift = weights[0] ** 2 / 2
        h = twist_weight(3, (1, 1))
        base = pochhammer_inv(Fraction(1, 3), order)
        return base.shift(h - Fraction(3, 24) + shift)
    raise ValueError(f"unknown module kind {kind!r}")


def w_algebra_free_character(gen_weights, order=DEFAULT_ORDER) -> FracSeries:
    """Graded dimensions of a freely generated algebra with one generator per
    listed weight: prod_w prod_{m>=w} (1-q^m)^(-1)."""
    out = FracSeries.one(order)
    for w in gen_weights:
        out = out * pochhammer_single_inv(int(w), order)
    return out


def fock_trace_series(sigma, max_weight: int) -> FracSeries:
    """Direct Fock-space trace of a permutation: counts fixed monomials per
    weight (used as the independent oracle for burnside_trace)."""
    from .fock import enumerate_basis, FockState
    from .symmetry import act
    coeffs = {}
    for w in range(max_weight + 1):
        count = 0
        for mon in enumerate_basis(3, w):
            moved = act(sigma, FockState(3, "a", {mon: Fraction(1)}))
            if list(moved.terms) == [mon]:
                count += 1
        if count:
            coeffs[w] = Fraction(count)
    return FracSeries(1, 0, coeffs, max_weight).shift(Fraction(-3, 24))
