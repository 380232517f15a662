from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Union

from errors import InvalidInputError

from .rational import format_rational, parse_rational

_ROOT = 5


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class QuadExt:
    """Exact element a + b*sqrt(5) of Q(sqrt(5)).

    Not registered with the numbers tower on purpose: Fraction's binary
    operators return NotImplemented for it and fall through to the
    reflected methods below.
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a: Fraction | int = 0, b: Fraction | int = 0) -> None:
        self._a = Fraction(a)
        self._b = Fraction(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    @classmethod
    def coerce(cls, x: Scalar) -> QuadExt:
        if isinstance(x, QuadExt):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to QuadExt")

    def __repr__(self) -> str:
        return f"QuadExt({self._a!r}, {self._b!r})"

    def __str__(self) -> str:
        return f"{format_rational(self._a)}{'+' if self._b >= 0 else '-'}{format_rational(abs(self._b))}√5"

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        if isinstance(other, QuadExt):
            return self._a == other._a and self._b == other._b
        return NotImplemented

    def __lt__(self, other: Scalar) -> bool:
        if not isinstance(other, (int, Fraction, QuadExt)):
            return NotImplemented
        return sign_quadext(self - other) < 0

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __neg__(self) -> QuadExt:
        return QuadExt(-self._a, -self._b)

    def __pos__(self) -> QuadExt:
        return self

    def __abs__(self) -> QuadExt:
        return -self if sign_quadext(self) < 0 else self

    def __add__(self, other: Scalar) -> QuadExt:
        if isinstance(other, (int, Fraction)):
            return QuadExt(self._a + other, self._b)
        if isinstance(other, QuadExt):
            return QuadExt(self._a + other._a, self._b + other._b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> QuadExt:
        if isinstance(other, (int, Fraction, QuadExt)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: Scalar) -> QuadExt:
        return (-self) + other

    def __mul__(self, other: Scalar) -> QuadExt:
        if isinstance(other, (int, Fraction)):
            return QuadExt(self._a * other, self._b * other)
        if isinstance(other, QuadExt):
            return QuadExt(
                self._a * other._a + _ROOT * self._b * other._b,
                self._a * other._b + self._b * other._a,
            )
        return NotImplemented

    __rmul__ = __mul__

    @property
    def conjugate(self) -> QuadExt:
        return QuadExt(self._a, -self._b)

    @property
    def norm(self) -> Fraction:
        return self._a * self._a - _ROOT * self._b * self._b

    def inverse(self) -> QuadExt:
        norm = self.norm
        # sqrt(5) is irrational, so the norm vanishes only at zero
        if norm == 0:
            raise ZeroDivisionError("QuadExt division by zero")
        return QuadExt(self._a / norm, -self._b / norm)

    def __truediv__(self, other: Scalar) -> QuadExt:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("QuadExt division by zero")
            return QuadExt(self._a / other, self._b / other)
        if isinstance(other, QuadExt):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: Scalar) -> QuadExt:
        return QuadExt.coerce(other) * self.inverse()

    def to_json(self) -> dict[str, str]:
        return {"a": format_rational(self._a), "b": format_rational(self._b)}

    @classmethod
    def from_json(cls, data: dict) -> QuadExt:
        try:
            return cls(parse_rational(data["a"]), parse_rational(data["b"]))
        except (KeyError, TypeError):
            raise InvalidInputError(f"not a QuadExt object: {data!r}") from None


Scalar = Union[int, Fraction, QuadExt]


def sign_quadext(x: QuadExt) -> int:
    """Exact sign of a + b*sqrt(5) by comparing a^2 with 5*b^2."""
    sa, sb = _sign(x.a), _sign(x.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: the larger magnitude wins
    if x.a * x.a > _ROOT * x.b * x.b:
        return sa
    return sb


def sign(x: Scalar) -> int:
    if isinstance(x, QuadExt):
        return sign_quadext(x)
    return _sign(Fraction(x))


def is_rational_scalar(x: Scalar) -> bool:
    return not isinstance(x, QuadExt) or x.is_rational


def as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, QuadExt):
        if not x.is_rational:
            raise InvalidInputError(f"{x} is irrational")
        return x.a
    return Fraction(x)


def simplify(x: Scalar) -> Scalar:
    """Drop to Fraction when the sqrt(5) part vanishes."""
    if isinstance(x, QuadExt) and x.is_rational:
        return x.a
    return x


def sqrt5() -> QuadExt:
    return QuadExt(0, 1)
