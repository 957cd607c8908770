"""The 22 recursions satisfied by the triple-clasp coefficients.

Each recursion is a function of a :class:`~g2clasp.coefficients.CoefficientTable`
returning ``(lhs, rhs)``; the residual is ``lhs - rhs``.  Inside the
transcriptions ``K(m, n, da, db)`` is the coefficient K^{(m,n)} at the weight
``(a + da, b + db)``, likewise ``R``; ``R11`` .. ``R22`` are the zero-weight
block entries and ``D`` its determinant.

Verification runs in two independent modes:

* ``symbolic``: the residual is built as an exact rational function in
  ``q, A, B`` and passes iff its numerator is the zero polynomial;
* ``numeric``: the residual is evaluated in exact rational arithmetic at
  seeded random points ``(q0, A0, B0)`` (Schwartz-Zippel style), resampling
  any point where some subexpression has a pole.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .coefficients import CoefficientTable, ProbeBackend, SymbolicBackend
from .report import SYMBOLIC, VerificationReport, run_check, vanishes

__all__ = [
    "RECURSIONS",
    "rec6_literal",
    "residual",
    "verify",
    "verify_all",
    "verify_matrix",
    "recursion_atoms",
    "safe_weight_corners",
]


class _Terms:
    """Short names used by the transcriptions below."""

    def __init__(self, t: CoefficientTable):
        self.t = t

    def K(self, m, n, da=0, db=0):
        return self.t.K((m, n), (da, db))

    def R(self, m, n, da=0, db=0):
        return self.t.R((m, n), (da, db))

    def R11(self, da=0, db=0):
        return self.t.R00(1, 1, (da, db))

    def R12(self, da=0, db=0):
        return self.t.R00(1, 2, (da, db))

    def R21(self, da=0, db=0):
        return self.t.R00(2, 1, (da, db))

    def R22(self, da=0, db=0):
        return self.t.R00(2, 2, (da, db))

    def D(self, da=0, db=0):
        return self.t.D((da, db))

    def b(self, n):
        return self.t.br(n)

    def one(self):
        return self.t.backend.const(1)


def _rec1(t):
    x = _Terms(t)
    return x.K(1, 0), x.one()


def _rec2(t):
    x = _Terms(t)
    K, b = x.K, x.b
    return K(-1, 1), -b(2) - 1 / K(-1, 1, -1, 0)


def _rec3(t):
    x = _Terms(t)
    K, R, b = x.K, x.R, x.b
    rhs = (
        b(7) / b(3)
        - 1 / R(3, -1, 0, -1) * K(-1, 1, 3, -2)
        - 1 / R(1, 0, 0, -1) / b(3) ** 2
    )
    return K(2, -1), rhs


def _rec4(t):
    x = _Terms(t)
    K, b = x.K, x.b
    rhs = (
        -b(3) * b(8) / (b(2) * b(4))
        - K(2, -1, -2, 1) / K(-1, 1, -1, 0)
        - K(-1, 1, 1, -1) / K(2, -1, -1, 0)
        - 1 / (b(2) ** 2 * K(0, 0, -1, 0))
    )
    return K(0, 0), rhs


def _rec5(t):
    x = _Terms(t)
    K, b = x.K, x.b
    rhs = (
        -b(3) * b(8) / (b(2) * b(4)) * K(-1, 1, -1, 0)
        - 1 / K(-1, 1, -1, 0) * (1 / K(-1, 1, -2, 0)) ** 2 * K(0, 0, -2, 1)
        - 1 / K(0, 0, -1, 0) * (b(3) / b(2) + 1 / K(-1, 1, -2, 0)) ** 2 * K(-1, 1, -1, 0)
        - 1 / K(-2, 1, -1, 0) * (-b(3) / b(2) + 1 / K(-1, 1, -2, 0) / K(-1, 1, -3, 0) / b(2)) ** 2
    )
    return K(-2, 1), rhs


def _rec6_parts(t):
    x = _Terms(t)
    K, R, b = x.K, x.R, x.b
    c1 = b(4) * b(6) ** 2 / (b(2) * b(3) ** 2 * b(12))
    c3 = b(4) * b(6) / (b(2) * b(12))
    scalar = (
        -b(6) * b(8) * b(15) / (b(3) * b(5) * b(12))
        - 1 / R(3, -1, 0, -1) * K(-2, 1, 3, -2)
        - 1 / R(1, 0, 0, -1) * (b(2) / b(3)) ** 2 * K(0, 0, 1, -1)
        - 1 / R(2, -1, 0, -1) * (1 / b(3)) ** 2 * K(-1, 1, 2, -2)
        - 1 / R(-1, 1, 0, -1) * (1 / b(3)) ** 2 * K(2, -1, -1, 0)
    )
    return x, K(1, -1), scalar, c1, c3


def _rec6(t):
    # The zero-weight terms are entries of the inverse block matrix:
    # (R^-1)_11 = R22/D, (R^-1)_22 = R11/D, (R^-1)_12 = (R^-1)_21 = -R12/D.
    x, lhs, scalar, c1, c3 = _rec6_parts(t)
    d = x.D(0, -1)
    inv11 = x.R22(0, -1) / d
    inv22 = x.R11(0, -1) / d
    inv12 = -x.R12(0, -1) / d
    inv21 = -x.R21(0, -1) / d
    return lhs, scalar - inv11 * c1 ** 2 - inv22 * c3 ** 2 + (inv12 + inv21) * c1 * c3


def rec6_literal(t):
    """Recursion 6 with the zero-weight terms read as scalar reciprocals.

    Kept so the failure of that reading stays reproducible; it does not hold.
    """
    x, lhs, scalar, c1, c3 = _rec6_parts(t)
    rhs = (
        scalar
        - 1 / x.R11(0, -1) * c1 ** 2
        - 1 / x.R22(0, -1) * c3 ** 2
        + (1 / x.R12(0, -1) + 1 / x.R21(0, -1)) * c1 * c3
    )
    return lhs, rhs


def _rec7(t):
    x = _Terms(t)
    K, b = x.K, x.b
    rhs = (
        b(2) * b(7) * b(12) / (b(4) * b(6))
        - 1 / K(-1, 1, -1, 0) * K(1, -1, -2, 1)
        - 1 / K(2, -1, -1, 0) * K(-2, 1, 1, -1)
        - 1
        - 1 / K(-2, 1, -1, 0) * K(2, -1, -3, 1)
        - 1 / K(1, -1, -1, 0) * K(-1, 1, 0, -1)
        - 1 / K(-1, 0, -1, 0)
    )
    return K(-1, 0), rhs


def _rec8(t):
    x = _Terms(t)
    return x.R(0, 1), x.one()


def _rec9(t):
    x = _Terms(t)
    R, b = x.R, x.b
    return R(3, -1), -b(6) / b(3) - 1 / R(3, -1, 0, -1)


def _rec10(t):
    x = _Terms(t)
    K, R, b = x.K, x.R, x.b
    rhs = b(7) / b(3) - 1 / K(-1, 1, -1, 0) * R(3, -1, -2, 1) - 1 / K(2, -1, -1, 0)
    return R(1, 0), rhs


def _rec11(t):
    x = _Terms(t)
    K, R, b = x.K, x.R, x.b
    rhs = (
        -b(7) / b(2)
        - 1 / K(-1, 1, -2, 0) * b(7) / b(3)
        - 1 / K(-1, 1, -1, 0) * (1 / K(-1, 1, -2, 0)) ** 2 * R(1, 0, -2, 1)
        - 1 / K(0, 0, -1, 0) * (b(3) / b(2) + 1 / K(-1, 1, -2, 0)) ** 2
    )
    return R(-1, 1), rhs


def _rec12(t):
    x = _Terms(t)
    R, b = x.R, x.b
    rhs = (
        b(8) * b(10) / (b(3) ** 2 * b(5))
        - 1 / R(3, -1, 0, -1) * R(-1, 1, 3, -2)
        - 1 / R(1, 0, 0, -1) * b(2) ** 2 / b(3) ** 2 * R(1, 0, 1, -1)
        - 1 / R(-1, 1, 0, -1) / b(3) ** 2 * R(3, -1, -1, 0)
        - 1 / R(2, -1, 0, -1) / b(3) ** 2
    )
    return R(2, -1), rhs


def _rec13(t):
    x = _Terms(t)
    K, R, b = x.K, x.R, x.b
    k2, k3 = K(-1, 1, -2, 0), K(-1, 1, -3, 0)
    tail = b(3) / b(2) + 1 / K(-1, 1, -4, 1)
    rhs = (
        b(7) / b(3) * (-b(3) / b(2) * k2 + 1 / (k2 * k3 ** 2) * tail)
        - R(-1, 1, -2, 1) / (K(-1, 1, -1, 0) * (k2 * k3) ** 2)
        - 1 / K(-2, 1, -1, 0) * (-b(3) / b(2) * k2 + 1 / k2 * (1 / k3) ** 2 * tail) ** 2
    )
    return R(-3, 2), rhs


def _rec14(t):
    x = _Terms(t)
    K, R, b = x.K, x.R, x.b
    rhs = (
        -b(6) * b(8) * b(15) / (b(3) * b(5) * b(12))
        - 1 / K(-1, 1, -1, 0) * R(2, -1, -2, 1)
        - 1 / K(2, -1, -1, 0) * R(-1, 1, 1, -1)
        - 1 / K(0, 0, -1, 0) * R(1, 0, -1, 0)
        - 1 / K(-2, 1, -1, 0) * R(3, -1, -3, 1)
        - 1 / K(1, -1, -1, 0)
    )
    return x.R11(), rhs


def _rec15(t):
    x = _Terms(t)
    R, b = x.R, x.b
    d = x.D(0, -1)
    rhs = (
        -b(4) * b(6) ** 2 * b(18) / (b(3) * b(9) * b(12))
        - 1 / R(3, -1, 0, -1) * R(-3, 2, 3, -2)
        - 1 / R(1, 0, 0, -1) * R(-1, 1, 1, -1)
        - 1 / R(-1, 1, 0, -1) * R(1, 0, -1, 0)
        - 1 / R(-3, 2, 0, -1) * R(3, -1, -3, 1)
        - x.R22(0, -1) / d * (b(4) * b(6) / (b(2) * b(12))) ** 2
        - (x.R12(0, -1) / d + x.R21(0, -1) / d) * b(4) ** 2 * b(6) ** 2 / (b(2) * b(12) ** 2)
        - x.R11(0, -1) / d * (b(4) * b(6) / b(12)) ** 2
    )
    return x.R22(), rhs


def _rec16(t):
    x = _Terms(t)
    K, R, b = x.K, x.R, x.b
    d = x.D(0, -1)
    k1, k2, k3 = K(-1, 1, -1, -1), K(-1, 1, -2, -1), K(-1, 1, -3, -1)
    c3 = b(4) * b(6) / (b(2) * b(12))
    tail = 1 / b(2) + 1 / (b(3) * k1) - b(4) * b(6) / (b(2) ** 2 * b(12))
    rhs = (
        b(4) * b(6) ** 2 * b(18) / (b(2) * b(3) * b(9) * b(12))
        + R(-1, 1, 1, -1) / R(1, 0, 0, -1) * (b(4) / b(3) + 1 / k1)
        + R(1, 0, -1, 0) / R(-1, 1, 0, -1) * (b(4) / b(3) - b(2) / (b(3) * k1 * k2))
        + R(3, -1, -3, 1) / R(-3, 2, 0, -1) * (b(4) / b(3) + 1 / (b(3) * k1 * k2 * k3))
        + x.R21(0, -1) / d * c3 ** 2
        + x.R11(0, -1) / d * b(4) ** 2 * b(6) ** 2 / (b(2) * b(12) ** 2)
        - x.R22(0, -1) / d * c3 * tail
        - x.R12(0, -1) / d * b(4) * b(6) / b(12) * tail
    )
    return x.R12(), rhs


def _rec17(t):
    x = _Terms(t)
    R, b = x.R, x.b
    d = x.D(0, -1)
    r1 = R(3, -1, 0, -1)
    r2 = R(3, -1, 0, -2)
    r3 = R(3, -1, 0, -3)
    c3 = b(4) * b(6) / (b(2) * b(12))
    c46 = b(4) * b(6) / b(12)
    rhs = (
        -b(4) * b(6) ** 2 * b(18) / (b(3) * b(9) * b(12)) * r1
        - 1 / r1 * (
            b(3) ** 2 * x.R11(3, -2)
            - 2 * b(3) / r2 * x.R12(3, -2)
            + x.R22(3, -2) / r2 ** 2
        )
        - 1 / R(1, 0, 0, -1) * R(2, -1, 1, -1)
        - 1 / R(2, -1, 0, -1) * r1 ** 2 * R(1, 0, 2, -2)
        - x.R22(0, -1) / d * c3 ** 2 * r1
        - 2 * x.R12(0, -1) / d * c3 * (c46 + r1) * r1
        - x.R11(0, -1) / d * (c46 + r1) ** 2 * r1
        - 1 / R(3, -2, 0, -1) * (
            c46 - b(6) / b(3) + 1 / r2 * (b(4) * b(6) ** 2 / (b(3) * b(12)) - 1 + 1 / r3 * c46)
        ) ** 2
    )
    return R(3, -2), rhs


def _rec18(t):
    x = _Terms(t)
    K, R, b = x.K, x.R, x.b
    k2, k3 = K(-1, 1, -2, 0), K(-1, 1, -3, 0)
    rhs = (
        -b(6) * b(8) * b(15) / (b(3) * b(5) * b(12)) * K(-1, 1, -1, 0)
        - 1 / K(-1, 1, -1, 0) * (
            x.R11(-2, 1) / k2 ** 2 - 2 * x.R12(-2, 1) / k2 + x.R22(-2, 1)
        )
        - 1 / K(2, -1, -1, 0) * R(-3, 2, 1, -1)
        - 1 / K(0, 0, -1, 0) * R(-1, 1, -1, 0) / k2 ** 2
        - 1 / K(-2, 1, -1, 0) * R(1, 0, -3, 1) / (k2 * k3) ** 2
        - 1 / K(-1, 0, -1, 0) * K(-1, 1, -1, 0) ** 2
    )
    return R(-2, 1), rhs


def _rec19(t):
    x = _Terms(t)
    K, R, b = x.K, x.R, x.b
    r31 = R(3, -1, -1, -1)
    r10 = R(1, 0, -1, -1)
    ka, kb, kc = K(-1, 1, 1, -2), K(-1, 1, 0, -2), K(-1, 1, -1, -2)
    kd = K(-1, 1, -2, -1)
    X = b(2) ** 2 / b(3) - 1 / r10 / b(3) ** 2 + 1 / r31 / ka
    rhs = (
        -b(6) * b(8) * b(15) / (b(3) * b(5) * b(12)) * K(2, -1, -1, 0)
        - 1 / K(-1, 1, -1, 0) * R(3, -2, -2, 1)
        - 1 / K(2, -1, -1, 0) * (
            X ** 2 * x.R11(1, -1)
            + (1 / r31) ** 2 * x.R22(1, -1)
            - 2 * X * (1 / r31) * x.R12(1, -1)
        )
        - 1 / K(0, 0, -1, 0) * (
            b(2) / b(3)
            + 1 / r31 / ka * (1 / b(2) + 1 / kb / kc * (-b(3) / b(2) - 1 / kd))
            - 1 / r10 / b(3) * (1 / (b(2) * b(3)) - b(3) / b(2) - 1 / kd)
        ) ** 2 * R(2, -1, -1, 0)
        - 1 / K(1, -1, -1, 0) * (
            -b(4) / b(3) - 1 / r31 / ka / kb - 1 / r10 * b(2) / b(3) ** 2
        ) ** 2 * R(1, 0, 0, -1)
        - 1 / K(-1, 0, -1, 0) * (
            -b(4) / b(3)
            - 1 / r31 * (1 / b(3) + 1 / ka / kb / kc * (b(4) / b(3) + 1 / kd))
            + 1 / r10 / b(3) * (b(4) / b(3) + 1 / kd)
        ) ** 2 * R(3, -1, -2, 0)
    )
    return R(1, -1), rhs


def _rec20(t):
    x = _Terms(t)
    K, R, b = x.K, x.R, x.b
    k2 = K(-1, 1, -2, 0)
    k3 = K(-1, 1, -3, 0)
    k4 = K(-1, 1, -4, 0)
    k11 = K(-1, 1, -1, -1)
    k21 = K(-1, 1, -2, -1)
    k02, k12, k22 = K(-1, 1, 0, -2), K(-1, 1, -1, -2), K(-1, 1, -2, -2)
    K21_2, K21_3 = K(2, -1, -2, 0), K(2, -1, -3, 0)
    K00_2 = K(0, 0, -2, 0)
    R10_3, R31_3 = R(1, 0, -3, 0), R(3, -1, -3, 0)

    Z = 1 / (k2 * R31_3) - 1 / K21_2
    Y = (
        -b(3) / b(2)
        - 1 / k2 * (b(2) ** 2 / b(3) - 1 / (b(3) ** 2 * R10_3))
        - 1 / k11 * Z
        - 1 / (b(2) ** 2 * K00_2)
    )
    rhs = (
        -b(6) * b(8) * b(15) / (b(3) * b(5) * b(12)) * K(0, 0, -1, 0)
        - 1 / K(-1, 1, -1, 0) * 1 / k2 ** 2 * R(1, -1, -2, 1)
        - 1 / K(2, -1, -1, 0) * (
            1 / b(2)
            + 1 / K21_2 * (
                b(5) / (b(2) * b(3))
                + 1 / R(3, -1, -2, -1) * (1 / b(2) ** 2 + 1 / (b(2) ** 2 * k02 * k12))
                + 1 / (b(2) * b(3) ** 2 * R(1, 0, -2, -1))
            )
        ) ** 2 * R(-2, 1, 1, -1)
        - 1 / K(0, 0, -1, 0) * (
            Y ** 2 * x.R11(-1, 0) + 2 * Y * Z * x.R12(-1, 0) + Z ** 2 * x.R22(-1, 0)
        )
        - 1 / K(-2, 1, -1, 0) * (
            b(3) / b(2)
            - 1 / k2 * (
                b(2) / (b(3) * k3)
                + 1 / (b(3) * R10_3 * k3) * (b(4) / b(3) + 1 / k4)
            )
            - 1 / (b(2) * K00_2) * (b(3) / b(2) + 1 / k3)
        ) ** 2 * R(2, -1, -3, 1)
        - 1 / K(1, -1, -1, 0) * (
            -b(3) / b(2)
            + 1 / K21_2 * (
                b(5) / (b(2) * b(3))
                + 1 / (R(3, -1, -2, -1) * k02 * k12)
                + b(2) / (b(3) ** 2 * R(1, 0, -2, -1))
            )
            + (1 / (b(2) * K00_2) + 1 / (K21_2 * k11 * k21)) * (
                b(4) / b(2) ** 2
                - 1 / K21_3 * (
                    b(5) / (b(2) * b(3))
                    + 1 / R(3, -1, -3, -1) * (1 / b(2) ** 2 + 1 / (b(2) ** 2 * k12 * k22))
                    + 1 / (b(2) * b(3) ** 2 * R(1, 0, -3, -1))
                )
            )
        ) ** 2 * R(-1, 1, 0, -1)
        - 1 / K(-1, 0, -1, 0) * (
            1 / k2 * (b(4) / b(3) + b(2) / (b(3) ** 2 * R10_3))
            + Z / (k11 * k21)
            - 1 / (b(2) * K00_2)
        ) ** 2 * R(1, 0, -2, 0)
    )
    return R(-1, 0), rhs


def _rec21(t):
    x = _Terms(t)
    K, R, b = x.K, x.R, x.b
    k2, k3, k4 = K(-1, 1, -2, 0), K(-1, 1, -3, 0), K(-1, 1, -4, 0)
    k41 = K(-1, 1, -4, 1)
    K00_2 = K(0, 0, -2, 0)
    K21m_2 = K(-2, 1, -2, 0)
    R31_51, R10_51 = R(3, -1, -5, 1), R(1, 0, -5, 1)
    K2m_41 = K(2, -1, -4, 1)
    K00_41 = K(0, 0, -4, 1)
    h = b(3) / b(2) + 1 / k3

    U = (
        b(3) / (b(2) * k3)
        - 1 / (k2 * k3 ** 2) * (
            -b(3) / b(2)
            - 1 / k41 * (b(2) ** 2 / b(3) + 1 / (R31_51 * k3) - 1 / (b(3) ** 2 * R10_51))
            + 1 / (K2m_41 * k3)
            - 1 / (b(2) ** 2 * K00_41)
        )
        + 1 / K00_2 * h ** 2 / k3
        - 1 / K21m_2 * (b(3) / b(2) - 1 / (b(2) * k3 * k4)) ** 2
    )
    V = (
        -b(3) / b(2)
        - 1 / (k2 * k3 ** 2) * (1 / (k41 * R31_51) - 1 / K2m_41)
        - 1 / K00_2 * h ** 2
    )
    rhs = (
        -b(6) * b(8) * b(15) / (b(3) * b(5) * b(12)) * K(-2, 1, -1, 0)
        - 1 / K(-1, 1, -1, 0) * R(-1, 0, -2, 1) / (k2 * k3) ** 2
        - 1 / K(0, 0, -1, 0) * (
            -b(3) / b(2)
            + 1 / (k2 * k3) * (b(2) / b(3) + 1 / (b(3) * R(1, 0, -3, 0)) * (b(4) / b(3) + 1 / k4))
            + 1 / (b(2) * K00_2) * h
        ) ** 2 * R(-2, 1, -1, 0)
        - 1 / K(-2, 1, -1, 0) * (
            U ** 2 * x.R11(-3, 1) + 2 * V * U * x.R12(-3, 1) + V ** 2 * x.R22(-3, 1)
        )
        - 1 / K(1, -1, -1, 0) * (
            b(3) / b(2)
            + 1 / K00_2 * h * (
                b(4) / b(2) ** 2
                - 1 / K(2, -1, -3, 0) * (
                    b(5) / (b(2) * b(3))
                    - 1 / (b(2) * R(3, -1, -3, -1) * K(-1, 1, -1, -2))
                    + 1 / (b(2) * b(3) ** 2 * R(1, 0, -3, -1))
                )
            )
        ) ** 2 * R(-3, 2, 0, -1)
        - 1 / K(-1, 0, -1, 0) * (
            1 / k2 / k3 * (
                -b(3) / b(2)
                + 1 / (K2m_41 * k3) * (
                    -b(5) / b(3)
                    + 1 / (R(3, -1, -4, 0) * K(-1, 1, -2, -1))
                    - 1 / (b(3) ** 2 * R(1, 0, -4, 0))
                )
                + 1 / (b(2) * K00_41) * (
                    b(4) / b(2) ** 2
                    - 1 / K(2, -1, -5, 1) * (
                        b(5) / (b(2) * b(3))
                        - 1 / (b(2) * R(3, -1, -5, 0) * K(-1, 1, -3, -1))
                        + 1 / (b(2) * b(3) ** 2 * R(1, 0, -5, 0))
                    )
                )
            )
            - 1 / K00_2 * h / k3
            + 1 / K21m_2 * (b(3) / b(2) - 1 / (b(2) * k3 * k4))
        ) ** 2 * R(-1, 1, -2, 0)
    )
    return R(-3, 1), rhs


def _rec22(t):
    x = _Terms(t)
    R, b = x.R, x.b
    d = x.D(0, -1)
    r11, r12, r21, r22 = x.R11(0, -1), x.R12(0, -1), x.R21(0, -1), x.R22(0, -1)
    rhs = (
        b(7) * b(8) * b(15) / (b(3) * b(4) * b(5))
        - 1 / R(3, -1, 0, -1) * R(-3, 1, 3, -2)
        - 1 / R(1, 0, 0, -1) * R(-1, 0, 1, -1)
        - 1 / R(-1, 1, 0, -1) * R(1, -1, -1, 0)
        - 1 / R(2, -1, 0, -1) * R(-2, 1, 2, -2)
        - 1 / R(-3, 2, 0, -1) * R(3, -2, -3, 1)
        - r22 / d * r11
        + r12 / d * r12
        + r21 / d * r21
        - r11 / d * r22
        - 1 / R(3, -2, 0, -1) * R(-3, 2, 3, -3)
        - 1 / R(-2, 1, 0, -1) * R(2, -1, -2, 0)
        - 1 / R(1, -1, 0, -1) * R(-1, 1, 1, -2)
        - 1 / R(-1, 0, 0, -1) * R(1, 0, -1, -1)
        - 1 / R(-3, 1, 0, -1) * R(3, -1, -3, 0)
        - 1 / R(0, -1, 0, -1) * R(0, 1, 0, -2)
    )
    return R(0, -1), rhs


RECURSIONS: dict[int, Callable] = {
    i: f
    for i, f in enumerate(
        [
            _rec1, _rec2, _rec3, _rec4, _rec5, _rec6, _rec7, _rec8, _rec9, _rec10, _rec11,
            _rec12, _rec13, _rec14, _rec15, _rec16, _rec17, _rec18, _rec19, _rec20, _rec21, _rec22,
        ],
        start=1,
    )
}


def residual(rid: int, table: CoefficientTable | None = None, recursion: Callable | None = None):
    """``lhs - rhs`` of recursion ``rid`` on ``table`` (symbolic by default).

    ``recursion`` replaces the transcription, which is how mutated fixtures
    are fed through the same machinery.
    """
    if table is None:
        table = CoefficientTable(SymbolicBackend())
    lhs, rhs = (recursion or RECURSIONS[rid])(table)
    return lhs - rhs


def verify(
    rid: int,
    mode: str = SYMBOLIC,
    points: int = 5,
    seed: int = 0,
    *,
    base: tuple[int, int] = (0, 0),
    overrides: Optional[dict] = None,
    recursion: Callable | None = None,
    table: CoefficientTable | None = None,
) -> VerificationReport:
    """Check one recursion.

    ``base`` pre-folds every coefficient by a global weight shift, and
    ``overrides`` swaps individual product formulas (mutation fixtures).
    Failures are reported, never raised.
    """
    if rid not in RECURSIONS:
        raise ValueError(f"recursion id must be in 1..22, got {rid}")
    return run_check(
        "recursion",
        rid,
        lambda t: residual(rid, t, recursion),
        mode,
        points,
        seed,
        base,
        overrides,
        table,
    )


def _verify_worker(args):
    rid, mode, points, seed, base, overrides = args
    return verify(rid, mode, points, seed, base=base, overrides=overrides)


def verify_all(
    mode: str = SYMBOLIC,
    points: int = 5,
    seed: int = 0,
    *,
    ids: Iterable[int] | None = None,
    parallelism: int = 1,
    base: tuple[int, int] = (0, 0),
    overrides: Optional[dict] = None,
) -> list[VerificationReport]:
    """Reports for the requested recursions (all 22 by default), in id order.

    With ``parallelism > 1`` the checks run in that many worker processes;
    the merged list is ordered by id whatever the completion order.
    """
    ids = sorted(set(ids)) if ids is not None else sorted(RECURSIONS)
    for rid in ids:
        if rid not in RECURSIONS:
            raise ValueError(f"recursion id must be in 1..22, got {rid}")
    if parallelism < 1:
        raise ValueError("parallelism must be >= 1")
    if parallelism == 1 or len(ids) <= 1:
        shared = None
        if mode == SYMBOLIC:
            shared = CoefficientTable(SymbolicBackend(), base=base, overrides=overrides)
        return [
            verify(rid, mode, points, seed, base=base, overrides=overrides, table=shared) for rid in ids
        ]
    # the heaviest checks are the last ids, so submit them first
    jobs = [(rid, mode, points, seed, base, overrides) for rid in reversed(ids)]
    with ProcessPoolExecutor(max_workers=min(parallelism, len(ids))) as pool:
        reports = list(pool.map(_verify_worker, jobs))
    return sorted(reports, key=lambda r: r.id)


def _matrix_residual(t: CoefficientTable):
    """Zero iff the block is symmetric and its determinant is the explicit one."""
    rec = t.r00()
    sym = rec.r12 - rec.r21
    det = rec.r11 * rec.r22 - rec.r12 * rec.r21 - rec.det
    return _Pair(sym, det)


class _Pair:
    """Two residuals that must both vanish; witness names the first that does not."""

    def __init__(self, sym, det):
        self.sym, self.det = sym, det

    def is_zero(self) -> bool:
        return vanishes(self.sym) and vanishes(self.det)

    def witness_term(self):
        if not vanishes(self.sym):
            return f"r12 - r21: {self.sym.witness_term()}"
        return f"r11*r22 - r12*r21 - D: {self.det.witness_term()}"


def verify_matrix(
    mode: str = SYMBOLIC,
    points: int = 5,
    seed: int = 0,
    *,
    base: tuple[int, int] = (0, 0),
    overrides: Optional[dict] = None,
) -> VerificationReport:
    """Symmetry and determinant checks of the zero-weight block.

    r12 and r22 come from the linear solve, so agreement with the explicit
    determinant is an independent check.
    """
    return run_check("matrix", "R00", _matrix_residual, mode, points, seed, base, overrides)


class _RecordingBackend(ProbeBackend):
    """Probe backend that remembers every bracket argument it is asked for."""

    def __init__(self, *point):
        super().__init__(*point)
        self.seen: set[tuple[int, int, int]] = set()

    def bracket(self, f):
        self.seen.add(tuple(f))
        return super().bracket(f)


def recursion_atoms() -> set[tuple[int, int, int]]:
    """Every weight-dependent bracket argument touched by the 22 recursions."""
    backend = _RecordingBackend(Fraction(3, 2), Fraction(5, 7), Fraction(11, 3))
    table = CoefficientTable(backend)
    for fn in RECURSIONS.values():
        fn(table)
    return {f for f in backend.seen if f[:2] != (0, 0)}


def safe_weight_corners() -> list[tuple[int, int]]:
    """Minimal corners ``(a0, b0)`` such that no bracket used by the
    recursions vanishes anywhere in ``a >= a0, b >= b0``.

    All arguments have non-negative weight coefficients, so a corner beyond
    ``box`` in either direction never helps; zeros are scanned over twice
    that range so arguments like ``[a-7]`` (zero for every b) are seen
    above every candidate corner.
    """
    atoms = recursion_atoms()
    if any(ca < 0 or cb < 0 for ca, cb, _ in atoms):
        raise ValueError("a bracket argument has a negative weight coefficient")
    box = max(abs(c) for _, _, c in atoms) + 2
    zeros = {
        (a, b)
        for a in range(2 * box)
        for b in range(2 * box)
        for ca, cb, c in atoms
        if ca * a + cb * b + c == 0
    }
    ok = [
        (a0, b0)
        for a0 in range(box + 1)
        for b0 in range(box + 1)
        if not any(a >= a0 and b >= b0 for a, b in zeros)
    ]
    return [p for p in ok if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in ok)]
