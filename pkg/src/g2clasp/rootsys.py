"""G2 root data, the Weyl group action on weights and roots, and inversion sets.

Conventions:

* weights ``(a, b)`` are in the fundamental-weight basis, ``a*w1 + b*w2``;
* roots ``(m, n)`` are in the simple-root basis, ``m*as + n*at``;
* coroots ``(p, r)`` are in the simple-coroot basis, so that
  ``<p*as^ + r*at^, (a, b)> = p*a + r*b``;
* the invariant form has ``(as, as) = 2`` and ``(at, at) = 6``.

A word ``"x1 x2 ... xn"`` acts as ``x1(x2(...xn(v)))``.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import NamedTuple

from .exactalg import RationalFn
from .qint import LinearWeightForm, qint_const, qint_cubed

__all__ = [
    "Weight",
    "Root",
    "Coroot",
    "NotReduced",
    "NotDominant",
    "GRAM",
    "SIMPLE",
    "POSITIVE_ROOTS",
    "POSITIVE_COROOTS",
    "RHO",
    "FUNDAMENTAL",
    "ExtremalRecord",
    "root_norm",
    "is_long",
    "root_length_class",
    "coroot_of",
    "root_as_weight",
    "reflect_weight",
    "reflect_root",
    "apply_word",
    "apply_word_root",
    "inversion_set",
    "inversion_set_bruteforce",
    "pairing",
    "pairing_form",
    "is_dominant",
    "qdim",
    "classical_dim",
    "extremal_table",
    "extremal_lookup",
    "shortest_dominating_word",
    "root_text",
]


class NotReduced(ValueError):
    pass


class NotDominant(ValueError):
    pass


class Weight(NamedTuple):
    a: int
    b: int

    def __add__(self, other):
        return Weight(self.a + other[0], self.b + other[1])

    def __neg__(self):
        return Weight(-self.a, -self.b)


class Root(NamedTuple):
    m: int
    n: int

    def __neg__(self):
        return Root(-self.m, -self.n)


class Coroot(NamedTuple):
    p: int
    r: int


GRAM = ((2, -3), (-3, 6))
SIMPLE = {"s": Root(1, 0), "t": Root(0, 1)}
RHO = Weight(1, 1)
FUNDAMENTAL = {1: Weight(1, 0), 2: Weight(0, 1)}

POSITIVE_ROOTS = (
    Root(1, 0),
    Root(3, 1),
    Root(2, 1),
    Root(3, 2),
    Root(1, 1),
    Root(0, 1),
)
# listed exactly as printed, in the same order as POSITIVE_ROOTS
POSITIVE_COROOTS = (
    Coroot(1, 0),
    Coroot(1, 1),
    Coroot(2, 3),
    Coroot(1, 2),
    Coroot(1, 3),
    Coroot(0, 1),
)

# simple roots in the fundamental-weight basis (rows of the Cartan matrix)
_ROOT_TO_WEIGHT = {"s": Weight(2, -1), "t": Weight(-3, 2)}


def _form(x: tuple[int, int], y: tuple[int, int]) -> int:
    return (
        x[0] * y[0] * GRAM[0][0]
        + x[0] * y[1] * GRAM[0][1]
        + x[1] * y[0] * GRAM[1][0]
        + x[1] * y[1] * GRAM[1][1]
    )


def root_norm(r: tuple[int, int]) -> int:
    return _form(r, r)


def is_long(r: tuple[int, int]) -> bool:
    return root_norm(r) == 6


def root_length_class(r: tuple[int, int]) -> int:
    """The exponent l(alpha): 1 for short roots, 3 for long roots."""
    n = root_norm(r)
    if n == 2:
        return 1
    if n == 6:
        return 3
    raise ValueError(f"{r} is not a root")


def coroot_of(r: tuple[int, int]) -> Coroot:
    """``2*alpha/(alpha, alpha)`` in the simple-coroot basis."""
    m, n = r
    norm = root_norm(r)
    # as = as^ and at = 3*at^
    p = Fraction(2 * m, norm)
    q = Fraction(6 * n, norm)
    if p.denominator != 1 or q.denominator != 1:
        raise ValueError(f"{r} is not a root")
    return Coroot(int(p), int(q))


def root_as_weight(r: tuple[int, int]) -> Weight:
    s, t = _ROOT_TO_WEIGHT["s"], _ROOT_TO_WEIGHT["t"]
    return Weight(r[0] * s.a + r[1] * t.a, r[0] * s.b + r[1] * t.b)


def reflect_weight(g: str, w: tuple[int, int]) -> Weight:
    a, b = w
    if g == "s":
        return Weight(-a, a + b)
    if g == "t":
        return Weight(a + 3 * b, -b)
    raise ValueError(f"unknown generator {g!r}")


def reflect_root(g: str, r: tuple[int, int]) -> Root:
    alpha = SIMPLE[g]
    k = Fraction(2 * _form(r, alpha), root_norm(alpha))
    assert k.denominator == 1
    k = int(k)
    return Root(r[0] - k * alpha.m, r[1] - k * alpha.n)


def apply_word(word: str, v: tuple[int, int]) -> Weight:
    v = Weight(*v)
    for g in reversed(word):
        v = reflect_weight(g, v)
    return v


def apply_word_root(word: str, r: tuple[int, int]) -> Root:
    r = Root(*r)
    for g in reversed(word):
        r = reflect_root(g, r)
    return r


def _is_positive(r: Root) -> bool:
    return r in POSITIVE_ROOTS


def inversion_set(word: str) -> list[Root]:
    """Roots sent negative by ``word``, via the telescoping formula.

    For ``w = s_1 ... s_n`` the set is ``{b_n, s_n(b_{n-1}), ..., s_n...s_2(b_1)}``.
    Returned in that order.
    """
    out: list[Root] = []
    for k, g in enumerate(word):
        r = apply_word_root(word[k + 1:][::-1], SIMPLE[g])
        if not _is_positive(r) or r in out:
            raise NotReduced(f"{word!r} is not a reduced word")
        out.append(r)
    return out[::-1]


def inversion_set_bruteforce(word: str) -> set[Root]:
    return {r for r in POSITIVE_ROOTS if not _is_positive(apply_word_root(word, r))}


def pairing(c: tuple[int, int], w: tuple[int, int]) -> int:
    return c[0] * w[0] + c[1] * w[1]


def pairing_form(c: tuple[int, int], offset: tuple[int, int] = (0, 0)) -> LinearWeightForm:
    """``<c, (a, b) + offset>`` with ``(a, b)`` symbolic."""
    return LinearWeightForm(c[0], c[1], pairing(c, offset))


def is_dominant(w: tuple[int, int]) -> bool:
    return w[0] >= 0 and w[1] >= 0


def _bracket_l(n: int, ell: int) -> RationalFn:
    return qint_const(n) if ell == 1 else qint_cubed(n)


def qdim(lam: tuple[int, int]) -> RationalFn:
    """Quantum dimension of V(lam): product over positive roots of
    ``[<a^, lam + rho>]_{q^l} / [<a^, rho>]_{q^l}``."""
    if not is_dominant(lam):
        raise NotDominant(f"{tuple(lam)} is not dominant")
    shifted = Weight(*lam) + RHO
    value = RationalFn(1)
    for root, co in zip(POSITIVE_ROOTS, POSITIVE_COROOTS):
        ell = root_length_class(root)
        value = value * _bracket_l(pairing(co, shifted), ell) / _bracket_l(pairing(co, RHO), ell)
    return value


def classical_dim(lam: tuple[int, int]) -> int:
    """Weyl dimension at q = 1 from integer pairings."""
    if not is_dominant(lam):
        raise NotDominant(f"{tuple(lam)} is not dominant")
    shifted = Weight(*lam) + RHO
    value = Fraction(1)
    for root, co in zip(POSITIVE_ROOTS, POSITIVE_COROOTS):
        ell = root_length_class(root)
        value *= Fraction(ell * pairing(co, shifted), ell * pairing(co, RHO))
    assert value.denominator == 1
    return int(value)


class ExtremalRecord(NamedTuple):
    fund: int
    mu: Weight
    word: str


_EXTREMAL = (
    (1, (1, 0), ""),
    (1, (-1, 1), "s"),
    (1, (2, -1), "st"),
    (1, (-2, 1), "sts"),
    (1, (1, -1), "stst"),
    (1, (-1, 0), "ststs"),
    (2, (0, 1), ""),
    (2, (3, -1), "t"),
    (2, (-3, 2), "ts"),
    (2, (3, -2), "tst"),
    (2, (-3, 1), "tsts"),
    (2, (0, -1), "tstst"),
)


def extremal_table() -> list[ExtremalRecord]:
    return [ExtremalRecord(f, Weight(*mu), w) for f, mu, w in _EXTREMAL]


def extremal_lookup(mu: tuple[int, int]) -> ExtremalRecord:
    for rec in extremal_table():
        if rec.mu == tuple(mu):
            return rec
    raise KeyError(f"{tuple(mu)} is not an extremal weight of a fundamental representation")


def shortest_dominating_word(mu: tuple[int, int], max_len: int = 6) -> str:
    """Breadth-first search for a shortest word taking ``mu`` to a dominant weight.

    Words are grown on the left, matching the action order of :func:`apply_word`.
    """
    queue = deque([""])
    while queue:
        w = queue.popleft()
        if is_dominant(apply_word(w, mu)):
            return w
        if len(w) < max_len:
            for g in "st":
                queue.append(g + w)
    raise ValueError(f"no dominating word of length <= {max_len} for {mu}")


def root_text(r: tuple[int, int]) -> str:
    return f"{r[0]}*as+{r[1]}*at"
