"""The clasp-conjecture product formula and the quantum-dimension loop checks.

For an extremal weight ``mu`` of a fundamental representation with minimal
dominating word ``d_mu``, the conjectured coefficient is

    prod over alpha in inv(d_mu) of
        [<alpha^, lambda + rho>]_{q^l} / [<alpha^, lambda + mu + rho>]_{q^l}

with ``l = 1`` for short and ``l = 3`` for long roots.  The printed formula
carries no sign, so each case's sign is derived from the explicit
coefficient, frozen in ``data/conjecture_signs.csv``, and checked against.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .coefficients import F1, CoefficientTable, SymbolicBackend
from .qint import LinearWeightForm
from .report import SYMBOLIC, VerificationReport, run_check, vanishes
from .rootsys import (
    FUNDAMENTAL,
    POSITIVE_COROOTS,
    POSITIVE_ROOTS,
    RHO,
    Weight,
    classical_dim,
    coroot_of,
    extremal_table,
    inversion_set,
    pairing,
    pairing_form,
    qdim,
    root_length_class,
)

__all__ = [
    "NotConstantSign",
    "ExtremalCase",
    "ConjectureFactor",
    "SIGN_TABLE",
    "QDIM_EXPECTED",
    "extremal_cases",
    "product_factors",
    "product_formula",
    "conjecture_coefficient",
    "derive_sign",
    "load_sign_table",
    "sign_table_csv",
    "verify_case",
    "verify_conjecture",
    "verify_qdim_loops",
]

SIGN_TABLE = "conjecture_signs.csv"


class NotConstantSign(ArithmeticError):
    """coefficient / product is not the constant +1 or -1."""


@dataclass(frozen=True)
class ExtremalCase:
    fund: int
    mu: Weight
    word: str
    sign: Optional[int] = None

    @property
    def label(self) -> str:
        name = "K" if self.fund == F1 else "R"
        return f"{name}({self.mu[0]},{self.mu[1]})"


@dataclass(frozen=True)
class ConjectureFactor:
    """One factor of the product: numerator and denominator arguments."""

    root: tuple[int, int]
    ell: int
    num: LinearWeightForm
    den: LinearWeightForm


def product_factors(case: ExtremalCase) -> list[ConjectureFactor]:
    """Factors over ``inversion_set(case.word)``, in telescoping order."""
    shifted = Weight(*case.mu) + RHO
    out = []
    for root in inversion_set(case.word):
        co = coroot_of(root)
        out.append(
            ConjectureFactor(
                root=tuple(root),
                ell=root_length_class(root),
                num=pairing_form(co, RHO),
                den=pairing_form(co, shifted),
            )
        )
    return out


def _bracket_l(backend, form: LinearWeightForm, ell: int):
    if ell == 1:
        return backend.bracket(form)
    # [n]_{q^3} = [3n] / [3], kept in the single-q ring
    return backend.bracket(form.scaled(3)) / backend.bracket((0, 0, 3))


def product_formula(case: ExtremalCase, backend=None, perturb: Optional[int] = None):
    """The unsigned conjectured coefficient on ``backend`` (symbolic by default).

    ``perturb`` bumps the numerator pairing of that factor by +1; it exists
    only to build mutation fixtures.
    """
    backend = backend if backend is not None else SymbolicBackend()
    value = backend.const(1)
    for k, fac in enumerate(product_factors(case)):
        num = fac.num
        if perturb == k:
            num = LinearWeightForm(num.c_a, num.c_b, num.c + 1)
        value = value * _bracket_l(backend, num, fac.ell) / _bracket_l(backend, fac.den, fac.ell)
    return value


def conjecture_coefficient(case: ExtremalCase, table: CoefficientTable | None = None):
    """The explicit coefficient K^mu or R^mu at the unshifted weight."""
    table = table if table is not None else CoefficientTable(SymbolicBackend())
    return table.K(case.mu) if case.fund == F1 else table.R(case.mu)


def derive_sign(case: ExtremalCase, table: CoefficientTable | None = None) -> int:
    """The constant ``eps`` with ``coefficient == eps * product``."""
    ratio = conjecture_coefficient(case, table) / product_formula(case)
    value = ratio.constant_value()
    if value not in (1, -1):
        raise NotConstantSign(f"{case.label}: coefficient / product is not +-1")
    return int(value)


def sign_table_csv(cases: list[ExtremalCase]) -> str:
    """Serialise signed cases in the golden-file format."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["fund", "m", "n", "word", "sign"])
    for c in cases:
        w.writerow([c.fund, c.mu[0], c.mu[1], c.word, c.sign])
    return buf.getvalue()


def load_sign_table(text: str | None = None) -> dict[tuple[int, tuple[int, int]], tuple[str, int]]:
    """``{(fund, mu): (word, sign)}`` from the packaged golden file (or ``text``)."""
    if text is None:
        text = resources.files("g2clasp").joinpath("data").joinpath(SIGN_TABLE).read_text(encoding="utf-8")
    out = {}
    for row in csv.DictReader(io.StringIO(text)):
        out[(int(row["fund"]), (int(row["m"]), int(row["n"])))] = (row["word"], int(row["sign"]))
    return out


def extremal_cases(signed: bool = True) -> list[ExtremalCase]:
    """The 12 extremal cases in table order, with golden signs attached."""
    signs = load_sign_table() if signed else {}
    out = []
    for rec in extremal_table():
        sign = signs.get((rec.fund, tuple(rec.mu)), (None, None))[1]
        out.append(ExtremalCase(rec.fund, rec.mu, rec.word, sign))
    return out


def _case_residual(case: ExtremalCase, perturb: Optional[int]):
    def build(t: CoefficientTable):
        return conjecture_coefficient(case, t) - case.sign * product_formula(case, t.backend, perturb)

    return build


def verify_case(
    case: ExtremalCase,
    mode: str = SYMBOLIC,
    points: int = 5,
    seed: int = 0,
    *,
    perturb: Optional[int] = None,
) -> VerificationReport:
    if case.sign is None:
        raise ValueError(f"{case.label} has no sign; load the golden table first")
    detail = {"fund": case.fund, "mu": list(case.mu), "word": case.word, "sign": case.sign}
    return run_check(
        "conjecture", case.label, _case_residual(case, perturb), mode, points, seed, (0, 0), None, detail=detail
    )


def verify_conjecture(mode: str = SYMBOLIC, points: int = 5, seed: int = 0) -> list[VerificationReport]:
    """One report per extremal case, in table order."""
    return [verify_case(c, mode, points, seed) for c in extremal_cases()]


QDIM_EXPECTED = {
    1: ((2, 7, 12), (4, 6), 7),
    2: ((7, 8, 15), (3, 4, 5), 14),
}


def _bracket_ratio(backend, num, den):
    value = backend.const(1)
    for n in num:
        value = value * backend.bracket((0, 0, n))
    for n in den:
        value = value / backend.bracket((0, 0, n))
    return value


def _weyl_product(backend, lam):
    """Weyl product for qdim, long-root factors via [3n]/[3].

    Independent of :func:`rootsys.qdim`, which builds the q^3 brackets directly.
    """
    shifted = Weight(*lam) + RHO
    value = backend.const(1)
    for root, co in zip(POSITIVE_ROOTS, POSITIVE_COROOTS):
        ell = root_length_class(root)
        top = LinearWeightForm(0, 0, pairing(co, shifted))
        bottom = LinearWeightForm(0, 0, pairing(co, RHO))
        value = value * _bracket_l(backend, top, ell) / _bracket_l(backend, bottom, ell)
    return value


class _QdimResidual:
    """Both loop values and both classical dimensions must match."""

    def __init__(self, parts: list[tuple[str, object]]):
        self.parts = parts

    def is_zero(self) -> bool:
        return all(vanishes(v) for _, v in self.parts)

    def witness_term(self):
        for name, v in self.parts:
            if not vanishes(v):
                return f"{name}: {v.witness_term() if hasattr(v, 'witness_term') else v}"
        return ""


def _qdim_residual(t: CoefficientTable):
    parts = []
    for i, (num, den, classical) in QDIM_EXPECTED.items():
        lam = FUNDAMENTAL[i]
        if isinstance(t.backend, SymbolicBackend):
            loop = qdim(lam)
        else:
            loop = _weyl_product(t.backend, lam)
        parts.append((f"qdim(w{i})", loop - _bracket_ratio(t.backend, num, den)))
        parts.append((f"dim(w{i})", t.backend.const(classical_dim(lam) - classical)))
    return _QdimResidual(parts)


def verify_qdim_loops(mode: str = SYMBOLIC, points: int = 5, seed: int = 0) -> VerificationReport:
    """qdim of both fundamentals against the loop values, plus dims 7 and 14."""
    return run_check("qdim", "loops", _qdim_residual, mode, points, seed, (0, 0), None)

