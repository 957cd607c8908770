"""Quantum integers ``[n] = (q^n - q^-n) / (q - q^-1)`` and their shifted forms.

A bracket whose argument depends on the symbolic weight ``(a, b)`` is written
through the substitution ``A = q^a``, ``B = q^b``, so ``[c_a*a + c_b*b + c]``
becomes ``(A^c_a B^c_b q^c - A^-c_a B^-c_b q^-c) / (q - q^-1)``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .exactalg import LaurentPoly, RationalFn

__all__ = [
    "LinearWeightForm",
    "WeightShift",
    "bracket_numerator",
    "qint_const",
    "qlin",
    "fold",
    "qint_cubed",
    "vanishes_at",
    "bracket_text",
]


class WeightShift(NamedTuple):
    da: int = 0
    db: int = 0

    def __add__(self, other):  # componentwise, not tuple concatenation
        return WeightShift(self.da + other[0], self.db + other[1])


class LinearWeightForm(NamedTuple):
    """The affine argument ``c_a*a + c_b*b + c`` of a bracket."""

    c_a: int
    c_b: int
    c: int

    def fold(self, shift: tuple[int, int]) -> LinearWeightForm:
        da, db = shift
        return LinearWeightForm(self.c_a, self.c_b, self.c + self.c_a * da + self.c_b * db)

    def at(self, a: int, b: int) -> int:
        return self.c_a * a + self.c_b * b + self.c

    def scaled(self, k: int) -> LinearWeightForm:
        return LinearWeightForm(k * self.c_a, k * self.c_b, k * self.c)

    def is_constant(self) -> bool:
        return self.c_a == 0 and self.c_b == 0

    def __str__(self) -> str:
        return bracket_text(self)


def bracket_numerator(f: tuple[int, int, int]) -> LaurentPoly:
    ca, cb, c = f
    return LaurentPoly({(c, ca, cb): 1, (-c, -ca, -cb): -1})


_Q_MINUS_QINV = bracket_numerator((0, 0, 1))


@lru_cache(maxsize=None)
def qlin(f: tuple[int, int, int]) -> RationalFn:
    """The bracket ``[c_a*a + c_b*b + c]`` as a RationalFn (zero form gives 0)."""
    f = LinearWeightForm(*f)
    if f == (0, 0, 0):
        return RationalFn(0)
    return RationalFn.factor(bracket_numerator(f)) * RationalFn.factor(_Q_MINUS_QINV, -1)


def qint_const(n: int) -> RationalFn:
    return qlin(LinearWeightForm(0, 0, n))


def fold(f: LinearWeightForm, s: tuple[int, int]) -> LinearWeightForm:
    return LinearWeightForm(*f).fold(s)


def qint_cubed(n: int) -> RationalFn:
    """``[n]_{q^3}``, built directly from its definition in q^3."""
    num = LaurentPoly({(3 * n, 0, 0): 1, (-3 * n, 0, 0): -1})
    return RationalFn(num, LaurentPoly({(3, 0, 0): 1, (-3, 0, 0): -1}))


def vanishes_at(f: LinearWeightForm, a: int, b: int) -> bool:
    return LinearWeightForm(*f).at(a, b) == 0


def _linear_text(f: tuple[int, int, int]) -> str:
    ca, cb, c = f
    parts: list[str] = []
    for coef, sym in ((ca, "a"), (cb, "b")):
        if not coef:
            continue
        mag = "" if abs(coef) == 1 else str(abs(coef))
        if not parts:
            parts.append(("-" if coef < 0 else "") + mag + sym)
        else:
            parts.append(("-" if coef < 0 else "+") + mag + sym)
    if c or not parts:
        if not parts:
            parts.append(str(c))
        else:
            parts.append(("-" if c < 0 else "+") + str(abs(c)))
    return "".join(parts)


def bracket_text(f: tuple[int, int, int]) -> str:
    """``[a+3b+4]``, ``[3b]``, ``[7]``."""
    return f"[{_linear_text(f)}]"
