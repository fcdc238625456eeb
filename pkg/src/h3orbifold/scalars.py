"""Exact coefficient arithmetic: rationals and the quadratic extension Q(z).

Every coefficient in the package is either a plain ``fractions.Fraction`` or a
``Scalar`` a + b*z, where z is a primitive cube root of unity satisfying
z**2 = -1 - z.  Scalars with b == 0 compare equal to the corresponding
rational, so the two kinds mix freely inside state coefficients.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to a rational")


class Scalar:
    """Element a + b*z of Q(z), z a primitive cube root of unity."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b)

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        # (a1 + b1 z)(a2 + b2 z) with z^2 = -1 - z
        bb = self.b * o.b
        return Scalar(self.a * o.a - bb, self.a * o.b + self.b * o.a - bb)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Multiplicative inverse, via the norm N(a + b*z) = a^2 - a*b + b^2."""
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(z)")
        # conjugate / norm
        return Scalar((self.a - self.b) / n, -self.b / n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self) -> "Scalar":
        """The automorphism z -> z^2 = -1 - z; fixes rationals."""
        return Scalar(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.a * self.b + self.b * self.b

    # -- predicates ------------------------------------------------------

    def is_rational(self) -> bool:
        return self.b == 0

    def as_rational(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is not rational")
        return self.a

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    # -- text ------------------------------------------------------------

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.b == 1:
            zpart = "z"
        elif self.b == -1:
            zpart = "-z"
        else:
            zpart = f"{self.b}*z"
        if self.a == 0:
            return zpart
        sign = "+" if self.b > 0 else "-"
        mag = zpart.lstrip("-")
        return f"{self.a} {sign} {mag}"

    def __repr__(self):
        return f"Scalar({self.a!r}, {self.b!r})"


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(x)
    return NotImplemented


ZETA = Scalar(0, 1)
ONE = Scalar(1, 0)


def parse_scalar(text: str) -> Scalar:
    """Parse "a + b*z" style input; bare "z" is accepted for the root."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    # split into signed chunks
    chunks = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-/*(":
            chunks.append(cur)
            cur = ch
        else:
            cur += ch
    chunks.append(cur)
    a = _ZERO
    b = _ZERO
    for chunk in chunks:
        if not chunk:
            continue
        neg = chunk.startswith("-")
        body = chunk.lstrip("+-")
        if body.endswith("z"):
            body = body[:-1].rstrip("*")
            coef = _ONE if body == "" else Fraction(body)
            b += -coef if neg else coef
        else:
            coef = Fraction(body)
            a += -coef if neg else coef
    return Scalar(a, b)


def scalar_add(x: Scalar, y: Scalar) -> Scalar:
    return _coerce(x) + y


def scalar_mul(x: Scalar, y: Scalar) -> Scalar:
    return _coerce(x) * y


def scalar_neg(x: Scalar) -> Scalar:
    return -_coerce(x)


def scalar_inv(x: Scalar) -> Scalar:
    return _coerce(x).inverse()


def scalar_conj(x: Scalar) -> Scalar:
    return _coerce(x).conjugate()
