"""Independent oracles used by the tests.

Nothing here imports the package's arithmetic: brackets are rebuilt in sympy,
formula text is parsed from the printed form, and Weyl data is recomputed
from the Gram matrix by brute force.
"""

from __future__ import annotations

import re
from fractions import Fraction

import sympy

q, A, B = sympy.symbols("q A B")

_BRACKET = re.compile(r"\[([^\]]*)\]")
_TERM = re.compile(r"([+-]?)(\d*)([ab]?)")


def parse_linear(text: str) -> tuple[int, int, int]:
    """``"2a+3b-5"`` -> ``(2, 3, -5)``."""
    ca = cb = c = 0
    pos = 0
    text = text.replace(" ", "")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r}")
        sign, digits, var = m.groups()
        k = int(digits) if digits else 1
        k = -k if sign == "-" else k
        if var == "a":
            ca += k
        elif var == "b":
            cb += k
        else:
            c += k
        pos = m.end()
    return ca, cb, c


def parse_product(text: str) -> tuple[int, list, list]:
    """``"-[a+1][a+2]/[3][a]"`` -> ``(sign, num_forms, den_forms)``.

    Accepts the printed shape ``sign num / den`` where both sides are
    concatenated brackets (a bare ``1`` numerator is allowed).
    """
    text = text.replace(" ", "")
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    num, _, den = text.partition("/")
    den = den.strip("()")
    nums = [parse_linear(x) for x in _BRACKET.findall(num)]
    dens = [parse_linear(x) for x in _BRACKET.findall(den)]
    return sign, nums, dens


def sym_bracket(form, qq=q, AA=A, BB=B):
    ca, cb, c = form
    x = AA**ca * BB**cb * qq**c
    return (x - 1 / x) / (qq - 1 / qq)


def sym_product(sign, nums, dens, qq=q, AA=A, BB=B):
    value = sympy.Integer(sign)
    for f in nums:
        value *= sym_bracket(f, qq, AA, BB)
    for f in dens:
        value /= sym_bracket(f, qq, AA, BB)
    return value


def exact_bracket(form, q0: Fraction, A0: Fraction, B0: Fraction) -> Fraction:
    ca, cb, c = form
    x = A0**ca * B0**cb * q0**c
    return (x - 1 / x) / (q0 - 1 / q0)


def exact_product(sign, nums, dens, point) -> Fraction:
    value = Fraction(sign)
    for f in nums:
        value *= exact_bracket(f, *point)
    for f in dens:
        value /= exact_bracket(f, *point)
    return value


# -- Weyl data from the Gram matrix alone ---------------------------------------

GRAM = ((2, -3), (-3, 6))


def form(x, y) -> int:
    return sum(x[i] * y[j] * GRAM[i][j] for i in range(2) for j in range(2))


def all_roots() -> set[tuple[int, int]]:
    """Integer vectors of squared length 2 or 6 (in a generous box)."""
    return {(m, n) for m in range(-4, 5) for n in range(-4, 5) if form((m, n), (m, n)) in (2, 6)}


def positive_roots() -> set[tuple[int, int]]:
    return {r for r in all_roots() if r[0] >= 0 and r[1] >= 0}


def reflect(alpha, v):
    k = Fraction(2 * form(v, alpha), form(alpha, alpha))
    return (v[0] - k * alpha[0], v[1] - k * alpha[1])


def weight_to_root_basis(w):
    """Fundamental-weight coordinates -> simple-root coordinates (rationals).

    w1 = 2 as + at, w2 = 3 as + 2 at (inverse Cartan matrix).
    """
    a, b = w
    return (Fraction(2 * a + 3 * b), Fraction(a + 2 * b))


def weyl_dimension(lam) -> Fraction:
    """prod over positive roots of (lam + rho, alpha) / (rho, alpha)."""
    rho = weight_to_root_basis((1, 1))
    lr = weight_to_root_basis((lam[0] + 1, lam[1] + 1))
    value = Fraction(1)
    for r in positive_roots():
        value *= Fraction(form(lr, r)) / Fraction(form(rho, r))
    return value
