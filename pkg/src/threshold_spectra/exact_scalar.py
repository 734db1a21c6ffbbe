"""Exact arithmetic in Q[sqrt 2], optionally carrying a symbolic factor lambda.

``ExactScalar(a, b)`` denotes ``(a + b*sqrt(2)) * lambda``; with
``scaled=False`` it denotes the dimensionless number ``a + b*sqrt(2)``.
Every weight produced by the construction is homogeneous of degree one in
lambda, so two lambda-carrying scalars are never multiplied together.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DimensionError, LambdaZeroError

Rational = Union[int, Fraction]

SQRT2_FLOAT = math.sqrt(2.0)


@dataclass(frozen=True)
class ExactScalar:
    a: Fraction
    b: Fraction = Fraction(0)
    scaled: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    # ring operations -------------------------------------------------

    def _coerce(self, other: object) -> ExactScalar | None:
        if isinstance(other, ExactScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactScalar(other, 0, scaled=False)
        return None

    def __add__(self, other: object) -> ExactScalar:
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        if y.scaled != self.scaled:
            raise DimensionError("cannot add a lambda-carrying and a dimensionless scalar")
        return ExactScalar(self.a + y.a, self.b + y.b, self.scaled)

    __radd__ = __add__

    def __neg__(self) -> ExactScalar:
        return ExactScalar(-self.a, -self.b, self.scaled)

    def __sub__(self, other: object) -> ExactScalar:
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        return self + (-y)

    def __rsub__(self, other: object) -> ExactScalar:
        return (-self) + other

    def __mul__(self, other: object) -> ExactScalar:
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        if self.scaled and y.scaled:
            raise DimensionError("product of two lambda-carrying scalars")
        return ExactScalar(
            self.a * y.a + 2 * self.b * y.b,
            self.a * y.b + self.b * y.a,
            self.scaled or y.scaled,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> ExactScalar:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of an exact scalar by zero")
        return ExactScalar(self.a / other, self.b / other, self.scaled)

    def mul_sqrt2(self, power: int = 1) -> ExactScalar:
        """Multiply by ``sqrt(2)**power`` for ``power >= 0``."""
        if power < 0:
            return self.div_sqrt2(-power)
        x = self
        if power % 2:
            x = ExactScalar(2 * x.b, x.a, x.scaled)
        return x * (2 ** (power // 2))

    def div_sqrt2(self, power: int = 1) -> ExactScalar:
        """Divide by ``sqrt(2)**power`` exactly, using ``1/sqrt(2) = sqrt(2)/2``."""
        if power < 0:
            return self.mul_sqrt2(-power)
        x = self
        if power % 2:
            x = ExactScalar(x.b, x.a / 2, x.scaled)
        return x / (2 ** (power // 2))

    # predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(2)`` (lambda taken positive)."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        return sa if self.a * self.a > 2 * self.b * self.b else sb

    def lambda_multiple(self) -> int | None:
        """Return ``c`` when this scalar is exactly ``c * lambda`` for an integer ``c``."""
        if not self.scaled or self.b != 0 or self.a.denominator != 1:
            return None
        return int(self.a)

    # realisation and serialisation --------------------------------------

    def to_float(self, lam: float = 1.0) -> float:
        value = float(self.a) + float(self.b) * SQRT2_FLOAT
        if not self.scaled:
            return value
        if lam == 0:
            raise LambdaZeroError("lambda must be nonzero")
        return value * lam

    def to_json(self) -> dict[str, int]:
        return {
            "a_num": self.a.numerator,
            "a_den": self.a.denominator,
            "b_num": self.b.numerator,
            "b_den": self.b.denominator,
        }

    @classmethod
    def from_json(cls, data: dict[str, int], scaled: bool = True) -> ExactScalar:
        return cls(
            Fraction(data["a_num"], data["a_den"]),
            Fraction(data["b_num"], data["b_den"]),
            scaled,
        )

    def __str__(self) -> str:
        terms = []
        if self.a:
            terms.append(str(self.a))
        if self.b:
            coef = "" if abs(self.b) == 1 else str(abs(self.b))
            sign = "-" if self.b < 0 else ("+" if terms else "")
            terms.append(f"{sign}{coef}√2")
        body = "".join(terms) or "0"
        if not self.scaled:
            return body
        if body == "0":
            return "0"
        if body in ("1", "-1"):
            return body[:-1] + "λ"
        if self.b == 0 and self.a.denominator == 1:
            return f"{body}λ"
        return f"({body})λ"


ZERO = ExactScalar(0)
LAMBDA = ExactScalar(1)
ONE = ExactScalar(1, scaled=False)
SQRT2 = ExactScalar(0, 1, scaled=False)


def div_sqrt2(x: ExactScalar, power: int) -> ExactScalar:
    return x.div_sqrt2(power)


def to_float(x: ExactScalar, lam: float) -> float:
    if lam == 0:
        raise LambdaZeroError("lambda must be nonzero")
    return x.to_float(lam)


def sqrt_rational(q: Rational) -> ExactScalar | None:
    """Exact dimensionless ``sqrt(q)`` when it lies in Q[sqrt 2], else ``None``."""
    q = Fraction(q)
    if q < 0:
        return None
    for factor, b_part in ((1, False), (2, True)):
        s = q / factor
        num, den = s.numerator, s.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn == num and rd * rd == den:
            root = Fraction(rn, rd)
            return ExactScalar(0, root, scaled=False) if b_part else ExactScalar(root, 0, scaled=False)
    return None
