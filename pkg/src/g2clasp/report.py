"""Verification reports and the seeded probe sampler shared by all checks."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from .coefficients import CoefficientTable, ProbeBackend, SymbolicBackend
from .exactalg import DivisionByZero

__all__ = [
    "PASS",
    "FAIL",
    "SYMBOLIC",
    "NUMERIC",
    "PROBE_POOL",
    "MAX_RESAMPLES",
    "VerificationReport",
    "probe_points",
    "run_probes",
    "run_check",
    "vanishes",
]

PASS = "Pass"
FAIL = "Fail"
SYMBOLIC = "symbolic"
NUMERIC = "numeric"

#: Every n/d with 2 <= n, d <= 13 and n != d, without duplicates, ascending.
#: None of them is 0 or +-1, so q - 1/q never vanishes.
PROBE_POOL: tuple[Fraction, ...] = tuple(
    sorted({Fraction(n, d) for n in range(2, 14) for d in range(2, 14) if n != d})
)

#: Resampling budget per requested point before a check gives up.
MAX_RESAMPLES = 1000


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check.

    ``witness`` is present exactly when ``status`` is ``Fail``: a nonzero
    monomial of the residual numerator in symbolic mode, the failing point in
    numeric mode.  ``probes`` lists the points actually used in numeric mode.
    """

    target: str
    id: Any
    mode: str
    status: str
    witness: Optional[str] = None
    elapsed_ms: Optional[float] = None
    probes: tuple[tuple[str, str, str], ...] = ()
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "target": self.target,
            "id": self.id,
            "mode": self.mode,
            "status": self.status,
            "witness": self.witness,
            "elapsed_ms": round(self.elapsed_ms, 3) if timing and self.elapsed_ms is not None else None,
        }
        out.update(self.detail)
        if self.mode == NUMERIC:
            out["probes"] = [list(p) for p in self.probes]
        return out


def probe_points(seed: int, count: int) -> list[tuple[Fraction, Fraction, Fraction]]:
    """The first ``count`` candidate points of the stream for ``seed``.

    Points that hit a pole are skipped by :func:`run_probes`, which keeps
    drawing from the same stream.
    """
    rng = random.Random(seed)
    return [tuple(rng.choice(PROBE_POOL) for _ in range(3)) for _ in range(count)]


def _fmt(p) -> tuple[str, str, str]:
    return tuple(str(x) for x in p)


def run_probes(
    vanishes: Callable[[tuple[Fraction, Fraction, Fraction]], bool],
    points: int,
    seed: int,
) -> tuple[bool, Optional[str], tuple[tuple[str, str, str], ...]]:
    """Evaluate a residual at ``points`` pole-free random points.

    ``vanishes(p)`` reports whether the residual is zero at ``p``; any
    :class:`ZeroDivisionError` means the point sits on a pole of some
    subexpression and is resampled.  Returns ``(passed, witness, probes)``
    and stops at the first failing point.
    """
    if points < 1:
        raise ValueError("points must be >= 1")
    rng = random.Random(seed)
    used: list[tuple[str, str, str]] = []
    misses = 0
    while len(used) < points:
        p = tuple(rng.choice(PROBE_POOL) for _ in range(3))
        try:
            ok = vanishes(p)
        except ZeroDivisionError:
            misses += 1
            if misses > MAX_RESAMPLES:
                return False, "no pole-free probe point found", tuple(used)
            continue
        used.append(_fmt(p))
        if not ok:
            return False, "q={}, A={}, B={}".format(*_fmt(p)), tuple(used)
    return True, None, tuple(used)


def vanishes(x) -> bool:
    """Zero test for both backends (RationalFn or Fraction)."""
    return x.is_zero() if hasattr(x, "is_zero") else x == 0


def _symbolic_check(value_fn: Callable[[CoefficientTable], object], table: CoefficientTable):
    try:
        res = value_fn(table)
    except DivisionByZero as exc:
        return False, f"division by zero: {exc}"
    if res.is_zero():
        return True, None
    return False, str(res.witness_term())


def run_check(
    target: str,
    ident,
    value_fn: Callable[[CoefficientTable], object],
    mode: str,
    points: int,
    seed: int,
    base: tuple[int, int],
    overrides: Optional[dict],
    table: CoefficientTable | None = None,
    detail: dict | None = None,
) -> VerificationReport:
    """Run ``value_fn`` (a residual builder over a coefficient table) in ``mode``.

    Symbolic mode builds one table (or uses ``table``); numeric mode builds a
    fresh probe table per sampled point.
    """
    start = time.perf_counter()
    probes = ()
    if mode == SYMBOLIC:
        if table is None:
            table = CoefficientTable(SymbolicBackend(), base=base, overrides=overrides)
        ok, witness = _symbolic_check(value_fn, table)
    elif mode == NUMERIC:
        ok, witness, probes = run_probes(
            lambda p: vanishes(value_fn(CoefficientTable(ProbeBackend(*p), base=base, overrides=overrides))),
            points,
            seed,
        )
    else:
        raise ValueError(f"unknown mode {mode!r}")
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        target=target,
        id=ident,
        mode=mode,
        status=PASS if ok else FAIL,
        witness=witness,
        elapsed_ms=elapsed,
        probes=probes,
        detail=dict(detail or {}),
    )
