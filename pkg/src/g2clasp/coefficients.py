"""Explicit triple-clasp coefficients for the two G2 fundamental representations.

``K[mu]`` are the coefficients for the 7-dimensional representation V(w1),
``R[mu]`` those for the 14-dimensional V(w2), and ``R00[i, j]`` is the 2x2
block at the zero weight of V(w2) together with its determinant ``D``.

All formulas are evaluated through a *backend*, which decides what a bracket
``[c_a*a + c_b*b + c]`` is:

* :class:`SymbolicBackend` returns exact :class:`~g2clasp.exactalg.RationalFn`
  values in ``q, A = q^a, B = q^b``;
* :class:`ProbeBackend` returns exact :class:`fractions.Fraction` values at a
  numeric point ``(q0, A0, B0)``.

The same formula code runs on both, which is what makes the numeric probe an
independent check of the symbolic kernel.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .exactalg import RationalFn
from .qint import LinearWeightForm, WeightShift, bracket_text, qlin
from .rootsys import Weight

__all__ = [
    "F1",
    "F2",
    "CoeffKey",
    "ProductFormula",
    "R00Record",
    "UnknownDisplacement",
    "MissingMatrixIndex",
    "AmbiguousMatrixIndex",
    "DegenerateWeight",
    "SingularSystem",
    "SymbolicBackend",
    "ProbeBackend",
    "CoefficientTable",
    "K_FORMULAS",
    "R_FORMULAS",
    "DET_FORMULA",
    "support",
    "all_keys",
    "coeff",
    "r00",
    "det_explicit",
    "denominator_atoms",
    "degenerate_atoms",
    "specialize_coeff",
]

F1 = 1
F2 = 2


class UnknownDisplacement(KeyError):
    pass


class MissingMatrixIndex(ValueError):
    pass


class AmbiguousMatrixIndex(ValueError):
    pass


class SingularSystem(ArithmeticError):
    pass


class DegenerateWeight(ValueError):
    """Some denominator bracket vanishes at the requested integer weight."""

    def __init__(self, atoms: Sequence[LinearWeightForm], a: int, b: int):
        self.atoms = list(atoms)
        self.a, self.b = a, b
        names = ", ".join(f"{bracket_text(f)} = 0 at a={a}, b={b}" for f in self.atoms)
        super().__init__(f"degenerate weight: {names}")


class ProductFormula(NamedTuple):
    """``sign * prod([num]) / prod([den])``."""

    sign: int
    num: tuple[tuple[int, int, int], ...]
    den: tuple[tuple[int, int, int], ...]


def _pf(sign, num, den) -> ProductFormula:
    return ProductFormula(sign, tuple(map(LinearWeightForm._make, num)), tuple(map(LinearWeightForm._make, den)))


# Coefficients of the V(w1) expansion, in printed order.
K_FORMULAS: dict[tuple[int, int], ProductFormula] = {
    (1, 0): _pf(1, [], []),
    (-1, 1): _pf(-1, [(1, 0, 1)], [(1, 0, 0)]),
    (2, -1): _pf(1, [(0, 3, 3), (1, 3, 4)], [(0, 3, 0), (1, 3, 3)]),
    (0, 0): _pf(-1, [(1, 0, 2), (1, 3, 5), (2, 3, 6)], [(0, 0, 2), (1, 0, 0), (1, 3, 3), (2, 3, 4)]),
    (-2, 1): _pf(1, [(1, 0, 1), (2, 3, 5), (3, 3, 6)], [(1, 0, -1), (2, 3, 4), (3, 3, 3)]),
    (1, -1): _pf(
        -1,
        [(0, 3, 3), (1, 3, 4), (2, 3, 5), (3, 6, 9)],
        [(0, 3, 0), (1, 3, 2), (2, 3, 4), (3, 6, 6)],
    ),
    (-1, 0): _pf(
        1,
        [(1, 0, 1), (1, 3, 4), (2, 3, 5), (3, 3, 6), (3, 6, 9)],
        [(1, 0, 0), (1, 3, 3), (2, 3, 3), (3, 3, 3), (3, 6, 6)],
    ),
}

# Coefficients of the V(w2) expansion with a one-dimensional weight space.
R_FORMULAS: dict[tuple[int, int], ProductFormula] = {
    (0, 1): _pf(1, [], []),
    (3, -1): _pf(-1, [(0, 3, 3)], [(0, 3, 0)]),
    (1, 0): _pf(1, [(1, 0, 3), (1, 3, 6)], [(0, 0, 3), (1, 0, 0), (1, 3, 3)]),
    (-1, 1): _pf(-1, [(1, 0, 1), (1, 0, 2), (2, 3, 7)], [(0, 0, 3), (1, 0, -1), (1, 0, 0), (2, 3, 4)]),
    (2, -1): _pf(
        1,
        [(0, 3, 3), (1, 3, 4), (1, 3, 5), (2, 3, 7)],
        [(0, 0, 3), (0, 3, 0), (1, 3, 2), (1, 3, 3), (2, 3, 4)],
    ),
    (-3, 2): _pf(1, [(1, 0, 1), (3, 3, 6)], [(1, 0, -2), (3, 3, 3)]),
    (3, -2): _pf(1, [(0, 3, 3), (1, 3, 4), (3, 6, 9)], [(0, 3, -3), (1, 3, 1), (3, 6, 6)]),
    (-2, 1): _pf(
        1,
        [(1, 0, 1), (1, 3, 6), (2, 3, 5), (2, 3, 6), (3, 3, 6)],
        [(0, 0, 3), (1, 0, -1), (1, 3, 3), (2, 3, 3), (2, 3, 4), (3, 3, 3)],
    ),
    (1, -1): _pf(
        -1,
        [(1, 0, 3), (0, 3, 3), (1, 3, 4), (2, 3, 5), (2, 3, 6), (3, 6, 9)],
        [(0, 0, 3), (1, 0, 0), (0, 3, 0), (1, 3, 2), (2, 3, 3), (2, 3, 4), (3, 6, 6)],
    ),
    (-1, 0): _pf(
        1,
        [(1, 0, 1), (1, 0, 2), (1, 3, 4), (1, 3, 5), (2, 3, 5), (3, 3, 6), (3, 6, 9)],
        [(0, 0, 3), (1, 0, -1), (1, 0, 0), (1, 3, 2), (1, 3, 3), (2, 3, 3), (3, 3, 3), (3, 6, 6)],
    ),
    (-3, 1): _pf(
        -1,
        [(1, 0, 1), (2, 3, 5), (3, 3, 6), (3, 6, 9)],
        [(1, 0, -2), (2, 3, 2), (3, 3, 0), (3, 6, 6)],
    ),
    (0, -1): _pf(
        1,
        [(0, 3, 3), (1, 3, 4), (2, 3, 5), (3, 3, 6), (3, 6, 9)],
        [(0, 3, 0), (1, 3, 1), (2, 3, 2), (3, 3, 3), (3, 6, 3)],
    ),
}

DET_FORMULA = _pf(
    1,
    [(0, 0, 4), (0, 0, 6), (1, 0, 2), (0, 3, 6), (1, 3, 5), (2, 3, 6), (3, 3, 9), (3, 6, 12)],
    [(0, 0, 2), (0, 0, 3), (0, 0, 12), (1, 0, 0), (0, 3, 0), (1, 3, 3), (2, 3, 4), (3, 3, 3), (3, 6, 6)],
)

# The (1,1) entry: a sum of signed bracket products.
R11_TERMS: tuple[ProductFormula, ...] = (
    _pf(-1, [(0, 0, 6), (0, 0, 8), (0, 0, 15)], [(0, 0, 3), (0, 0, 5), (0, 0, 12)]),
    _pf(1, [(0, 0, 2), (1, 0, 2), (1, 3, 5), (2, 3, 2)], [(0, 0, 3), (1, 0, 1), (1, 3, 4), (2, 3, 4)]),
    _pf(1, [(1, 0, -2), (0, 3, 6), (2, 3, 2), (3, 3, 0)], [(1, 0, 0), (0, 3, 3), (2, 3, 3), (3, 3, 3)]),
    _pf(
        1,
        [(1, 0, -1), (0, 3, 6), (1, 3, 5), (1, 3, 6), (2, 3, 6)],
        [(0, 0, 3), (1, 0, 0), (0, 3, 3), (1, 3, 3), (1, 3, 4), (2, 3, 3)],
    ),
    _pf(1, [(0, 3, 0), (1, 3, 1), (2, 3, 2), (3, 6, 3)], [(0, 3, 3), (1, 3, 3), (2, 3, 3), (3, 6, 6)]),
    _pf(
        1,
        [(1, 0, 2), (1, 0, 3), (0, 3, 0), (1, 3, 2), (2, 3, 6)],
        [(0, 0, 3), (1, 0, 0), (1, 0, 1), (0, 3, 3), (1, 3, 3), (2, 3, 3)],
    ),
)

# First linear constraint: r22/[2] + r12 = E1_PREFACTOR * (sum of E1_BRACKET_TERMS).
E1_PREFACTOR = _pf(
    -1,
    [(0, 0, 3), (1, 0, 2), (3, 6, 9)],
    [(0, 0, 2), (0, 3, 0), (1, 3, 3), (2, 3, 4), (3, 3, 3), (3, 6, 6)],
)
E1_BRACKET_TERMS: tuple[ProductFormula, ...] = (
    _pf(1, [(3, 3, 6), (2, 3, 5)], []),
    _pf(1, [(1, 3, 4), (0, 3, 3)], []),
    _pf(1, [(3, 3, 6), (0, 3, 3), (0, 0, 2), (0, 0, 2)], [(0, 0, 3)]),
    _pf(1, [(1, 0, 4)], []),
    _pf(-1, [(1, 0, -2)], []),
)

# Second constraint: (c1^2 r22 + 2 c1 c3 r12 + c3^2 r11) / D = sum of E2_TERMS,
# with c1 = [4][6]^2/([2][3]^2[12]) and c3 = [4][6]/([2][12]).
E2_TERMS: tuple[ProductFormula, ...] = (
    _pf(-1, [(0, 0, 6), (0, 0, 8), (0, 0, 15)], [(0, 0, 3), (0, 0, 5), (0, 0, 12)]),
    _pf(
        1,
        [(1, 0, 3), (0, 3, 0), (1, 3, 2), (1, 3, 3), (2, 3, 4)],
        [(0, 0, 3), (1, 0, 2), (0, 3, 3), (1, 3, 4), (1, 3, 5), (2, 3, 7)],
    ),
    _pf(
        1,
        [(1, 0, -1), (1, 0, 0), (0, 3, 6), (1, 3, 6), (2, 3, 4)],
        [(0, 0, 3), (1, 0, 1), (1, 0, 2), (0, 3, 3), (1, 3, 5), (2, 3, 7)],
    ),
    _pf(1, [(0, 0, 2), (1, 0, 0), (1, 3, 3), (2, 3, 8)], [(0, 0, 3), (1, 0, 1), (1, 3, 4), (2, 3, 6)]),
    _pf(1, [(1, 0, 4), (0, 3, 0), (2, 3, 8), (3, 3, 12)], [(1, 0, 2), (0, 3, 3), (2, 3, 7), (3, 3, 9)]),
    _pf(1, [(0, 3, 6), (1, 3, 7), (2, 3, 8), (3, 6, 15)], [(0, 3, 3), (1, 3, 5), (2, 3, 7), (3, 6, 12)]),
)


class CoeffKey(NamedTuple):
    fund: int
    mu: Weight
    idx: Optional[tuple[int, int]] = None

    def validate(self) -> CoeffKey:
        mu = Weight(*self.mu)
        if self.fund == F1:
            if mu not in K_FORMULAS:
                raise UnknownDisplacement(f"K has no displacement {tuple(mu)}")
            if self.idx is not None:
                raise AmbiguousMatrixIndex("matrix index only applies to R at (0,0)")
        elif self.fund == F2:
            if mu == (0, 0):
                if self.idx is None:
                    raise MissingMatrixIndex("R at (0,0) needs a matrix index (i, j)")
                i, j = self.idx
                if i not in (1, 2) or j not in (1, 2):
                    raise MissingMatrixIndex(f"matrix index {self.idx} out of range")
                return CoeffKey(F2, mu, (i, j))
            if mu not in R_FORMULAS:
                raise UnknownDisplacement(f"R has no displacement {tuple(mu)}")
            if self.idx is not None:
                raise AmbiguousMatrixIndex("matrix index only applies to R at (0,0)")
        else:
            raise ValueError(f"fundamental must be 1 or 2, got {self.fund}")
        return CoeffKey(self.fund, mu, None)

    def label(self) -> str:
        name = "K" if self.fund == F1 else "R"
        m, n = self.mu
        if self.idx:
            return f"{self.idx[0]},{self.idx[1]}{name}({m},{n})"
        return f"{name}({m},{n})"


_SUPPORT = {
    F1: [(1, 0), (-1, 1), (2, -1), (0, 0), (-2, 1), (1, -1), (-1, 0)],
    F2: [
        (0, 1), (3, -1), (1, 0), (-1, 1), (2, -1), (-3, 2), (0, 0), (0, 0),
        (3, -2), (-2, 1), (1, -1), (-1, 0), (-3, 1), (0, -1),
    ],
}


def support(fund: int) -> list[Weight]:
    """Weights of V(w_fund) with multiplicity, in the printed expansion order."""
    return [Weight(*m) for m in _SUPPORT[fund]]


def all_keys() -> list[CoeffKey]:
    """Every coefficient key: 7 for K, 12 scalar R keys, then the 4 matrix entries."""
    keys = [CoeffKey(F1, m) for m in support(F1)]
    seen = set()
    for m in support(F2):
        if m == (0, 0):
            if m not in seen:
                keys.extend(CoeffKey(F2, m, (i, j)) for i in (1, 2) for j in (1, 2))
        else:
            keys.append(CoeffKey(F2, m))
        seen.add(m)
    return keys


# -- backends -----------------------------------------------------------------


class SymbolicBackend:
    name = "symbolic"

    def bracket(self, f: tuple[int, int, int]) -> RationalFn:
        return qlin(tuple(f))

    def const(self, n) -> RationalFn:
        return RationalFn._coerce(n)

    @staticmethod
    def is_zero(x) -> bool:
        return x.is_zero() if isinstance(x, RationalFn) else x == 0


class ProbeBackend:
    """Exact evaluation at ``q = q0, A = A0, B = B0``."""

    name = "numeric"

    def __init__(self, q0, A0, B0):
        self.point = (Fraction(q0), Fraction(A0), Fraction(B0))
        if 0 in self.point or self.point[0] in (1, -1):
            raise ValueError("probe point needs nonzero coordinates and q0 != ±1")
        self._cache: dict[tuple[int, int, int], Fraction] = {}
        q0 = self.point[0]
        self._qq = q0 - 1 / q0

    def bracket(self, f: tuple[int, int, int]) -> Fraction:
        f = tuple(f)
        v = self._cache.get(f)
        if v is None:
            q0, A0, B0 = self.point
            x = A0 ** f[0] * B0 ** f[1] * q0 ** f[2]
            v = self._cache[f] = (x - 1 / x) / self._qq
        return v

    def const(self, n) -> Fraction:
        return Fraction(n)

    @staticmethod
    def is_zero(x) -> bool:
        return x == 0


def _eval_product(backend, pf: ProductFormula, shift: tuple[int, int]):
    value = backend.const(pf.sign)
    for f in pf.num:
        value = value * backend.bracket(f.fold(shift))
    for f in pf.den:
        value = value / backend.bracket(f.fold(shift))
    return value


class R00Record(NamedTuple):
    r11: object
    r12: object
    r21: object
    r22: object
    det: object


class CoefficientTable:
    """Memoised coefficient values on one backend.

    ``base`` is an extra weight shift folded into every lookup, and
    ``overrides`` replaces individual product formulas (used for mutation
    tests).  The cache is per instance and guarded by a lock.
    """

    def __init__(
        self,
        backend=None,
        base: tuple[int, int] = (0, 0),
        overrides: dict[tuple[int, tuple[int, int]], ProductFormula] | None = None,
    ):
        self.backend = backend if backend is not None else SymbolicBackend()
        self.base = WeightShift(*base)
        self.overrides = dict(overrides or {})
        self._cache: dict[tuple, object] = {}
        self._lock = threading.RLock()

    # -- formula access -----------------------------------------------------

    def formula(self, fund: int, mu: tuple[int, int]) -> ProductFormula:
        mu = tuple(mu)
        if (fund, mu) in self.overrides:
            return self.overrides[(fund, mu)]
        table = K_FORMULAS if fund == F1 else R_FORMULAS
        if mu not in table:
            raise UnknownDisplacement(f"{'K' if fund == F1 else 'R'} has no displacement {mu}")
        return table[mu]

    def _memo(self, key, build):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = build()
        with self._lock:
            return self._cache.setdefault(key, value)

    def _shift(self, shift) -> WeightShift:
        return self.base + tuple(shift)

    def br(self, n: int):
        return self.backend.bracket((0, 0, n))

    def product(self, pf: ProductFormula, shift=(0, 0)):
        return _eval_product(self.backend, pf, self._shift(shift))

    # -- coefficients -------------------------------------------------------

    def K(self, mu, shift=(0, 0)):
        s = self._shift(shift)
        mu = tuple(mu)
        return self._memo(("K", mu, s), lambda: _eval_product(self.backend, self.formula(F1, mu), s))

    def R(self, mu, shift=(0, 0)):
        s = self._shift(shift)
        mu = tuple(mu)
        if mu == (0, 0):
            raise MissingMatrixIndex("R at (0,0) needs a matrix index; use R00")
        return self._memo(("R", mu, s), lambda: _eval_product(self.backend, self.formula(F2, mu), s))

    def D(self, shift=(0, 0)):
        s = self._shift(shift)
        pf = self.overrides.get((0, "det"), DET_FORMULA)
        return self._memo(("D", s), lambda: _eval_product(self.backend, pf, s))

    def R00(self, i: int, j: int, shift=(0, 0)):
        rec = self.r00(shift)
        return {(1, 1): rec.r11, (1, 2): rec.r12, (2, 1): rec.r21, (2, 2): rec.r22}[(i, j)]

    def get(self, key: CoeffKey, shift=(0, 0)):
        key = key.validate()
        if key.fund == F1:
            return self.K(key.mu, shift)
        if key.mu == (0, 0):
            return self.R00(*key.idx, shift)
        return self.R(key.mu, shift)

    # -- the zero-weight block ----------------------------------------------

    def r11(self, shift=(0, 0)):
        s = self._shift(shift)

        def build():
            bk = self.backend
            total = bk.const(0)
            for pf in R11_TERMS:
                total = total + _eval_product(bk, pf, s)
            return total

        return self._memo(("r11", s), build)

    def constraint_rhs(self, shift=(0, 0)):
        """Right-hand sides ``(E1, E2)`` of the two linear constraints."""
        s = self._shift(shift)

        def build():
            bk = self.backend
            inner = bk.const(0)
            for pf in E1_BRACKET_TERMS:
                inner = inner + _eval_product(bk, pf, s)
            e1 = _eval_product(bk, E1_PREFACTOR, s) * inner
            e2 = bk.const(0)
            for pf in E2_TERMS:
                e2 = e2 + _eval_product(bk, pf, s)
            return e1, e2

        return self._memo(("E", s), build)

    def block_constants(self):
        """``(c1, c2, c3)`` with c2 = c1*c3, as they appear in the constraints."""

        def build():
            b = self.br
            c1 = b(4) * b(6) ** 2 / (b(2) * b(3) ** 2 * b(12))
            c2 = b(4) ** 2 * b(6) ** 3 / (b(2) ** 2 * b(3) ** 2 * b(12) ** 2)
            c3 = b(4) * b(6) / (b(2) * b(12))
            return c1, c2, c3

        return self._memo(("c",), build)

    def system_determinant(self):
        """Determinant of the 2x2 system solved for (r12, r22)."""
        c1, c2, _ = self.block_constants()
        return c1 ** 2 - 2 * c2 / self.br(2)

    def r00(self, shift=(0, 0)) -> R00Record:
        s = self._shift(shift)

        def build():
            bk = self.backend
            r11 = self.r11(shift)
            det = self.D(shift)
            e1, e2 = self.constraint_rhs(shift)
            c1, c2, c3 = self.block_constants()
            # rows: [1, 1/[2]] (r12, r22) = e1 ; [2 c2, c1^2] (r12, r22) = f
            f = det * e2 - c3 ** 2 * r11
            sysdet = self.system_determinant()
            if bk.is_zero(sysdet):
                raise SingularSystem("constraint system is singular")
            r12 = (e1 * c1 ** 2 - f / self.br(2)) / sysdet
            r22 = (f - 2 * c2 * e1) / sysdet
            return R00Record(r11, r12, r12, r22, det)

        return self._memo(("r00", s), build)


# -- module-level symbolic conveniences ----------------------------------------

_default_table: CoefficientTable | None = None
_default_lock = threading.Lock()


def _table() -> CoefficientTable:
    global _default_table
    with _default_lock:
        if _default_table is None:
            _default_table = CoefficientTable(SymbolicBackend())
        return _default_table


def coeff(key: CoeffKey, shift: tuple[int, int] = (0, 0)) -> RationalFn:
    return _table().get(CoeffKey(*key), shift)


def r00(shift: tuple[int, int] = (0, 0)) -> R00Record:
    return _table().r00(shift)


def det_explicit(shift: tuple[int, int] = (0, 0)) -> RationalFn:
    return _table().D(shift)


def _formulas_for(key: CoeffKey) -> list[ProductFormula]:
    key = key.validate()
    if key.fund == F1:
        return [K_FORMULAS[key.mu]]
    if key.mu != (0, 0):
        return [R_FORMULAS[key.mu]]
    return [*R11_TERMS, E1_PREFACTOR, *E1_BRACKET_TERMS, *E2_TERMS, DET_FORMULA]


def denominator_atoms(key: CoeffKey, shift: tuple[int, int] = (0, 0)) -> list[LinearWeightForm]:
    """Bracket atoms in the coefficient's denominator after folding the shift.

    For the zero-weight block entries this is the union, with multiplicity,
    of every denominator in the formulas the entries are solved from.
    """
    out: list[LinearWeightForm] = []
    for pf in _formulas_for(CoeffKey(*key)):
        out.extend(f.fold(shift) for f in pf.den)
    return out


def degenerate_atoms(key: CoeffKey, a: int, b: int, shift: tuple[int, int] = (0, 0)) -> list[LinearWeightForm]:
    """Distinct denominator atoms (before folding to (a, b)) that vanish at (a, b)."""
    seen: list[LinearWeightForm] = []
    for f in denominator_atoms(key, shift):
        if f.at(a, b) == 0 and f not in seen:
            seen.append(f)
    return seen


def specialize_coeff(key: CoeffKey, a: int, b: int, shift: tuple[int, int] = (0, 0)) -> RationalFn:
    """The coefficient at the integer weight ``(a, b)``, univariate in q."""
    key = CoeffKey(*key).validate()
    bad = degenerate_atoms(key, a, b, shift)
    if bad:
        raise DegenerateWeight(bad, a, b)
    return coeff(key, shift).fold(a, b)
