"""Exact sparse Laurent polynomials in ``q, A, B`` and unreduced rational functions.

Polynomials carry arbitrary-precision integer coefficients.  Rational
functions are never reduced by a GCD; instead a :class:`RationalFn` is kept as
a polynomial times a product of integer powers of *atoms*, where an atom is a
unit-normalised polynomial (a quantum-integer numerator, ``q - q^-1``, or any
polynomial that had to be inverted).  Sums are formed over the least common
multiple of the two factorisations, so denominators stay products of atoms and
never get expanded.  Equality is the cross-multiplication test, which in this
form reduces to checking that the difference has a zero polynomial part.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

__all__ = [
    "Monomial",
    "LaurentPoly",
    "RationalFn",
    "DivisionByZero",
    "PoleAtPoint",
    "poly_add",
    "poly_mul",
    "poly_neg",
    "rat_add",
    "rat_sub",
    "rat_mul",
    "rat_inv",
    "rat_eq",
    "eval_point",
    "specialize_weight",
]


class DivisionByZero(ZeroDivisionError):
    """Raised when inverting the zero rational function."""


class PoleAtPoint(ZeroDivisionError):
    """Raised when a denominator vanishes at an evaluation point."""


class Monomial(NamedTuple):
    e_q: int
    e_A: int
    e_B: int


# Exponent triples are packed into a single int key: e_q + e_A*P + e_B*P**2.
# Key addition is then exponent addition, and key order is lex on (e_B, e_A, e_q).
_BITS = 32
_P = 1 << _BITS
_HALF = _P >> 1
_P2 = _P * _P
_LIMIT = _HALF - 1


def _pack(eq: int, ea: int, eb: int) -> int:
    if max(abs(eq), abs(ea), abs(eb)) > _LIMIT:
        raise OverflowError("exponent out of supported range")
    return eq + ea * _P + eb * _P2


def _unpack(key: int) -> tuple[int, int, int]:
    eq = ((key + _HALF) & (_P - 1)) - _HALF
    key = (key - eq) >> _BITS
    ea = ((key + _HALF) & (_P - 1)) - _HALF
    eb = (key - ea) >> _BITS
    return eq, ea, eb


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("_t", "_deg", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | None = None):
        t: dict[int, int] = {}
        deg = 0
        for mono, c in (terms or {}).items():
            c = int(c)
            if c == 0:
                continue
            eq, ea, eb = mono
            k = _pack(eq, ea, eb)
            t[k] = t.get(k, 0) + c
            deg = max(deg, abs(eq), abs(ea), abs(eb))
        self._t = {k: c for k, c in t.items() if c}
        self._deg = deg
        self._hash = None

    @classmethod
    def _raw(cls, t: dict[int, int], deg: int) -> LaurentPoly:
        # t must already be free of zero coefficients
        if deg > _LIMIT:
            raise OverflowError("exponent out of supported range")
        obj = object.__new__(cls)
        obj._t = t
        obj._deg = deg
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        c = int(c)
        return cls._raw({0: c} if c else {}, 0)

    @classmethod
    def monomial(cls, e_q: int = 0, e_A: int = 0, e_B: int = 0, coeff: int = 1) -> LaurentPoly:
        return cls({(e_q, e_A, e_B): coeff})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        """Terms keyed by :class:`Monomial`, in ascending monomial order."""
        items = sorted((_unpack(k), c) for k, c in self._t.items())
        return {Monomial(*m): c for m, c in items}

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self._t)

    def lowest_term(self) -> LaurentPoly:
        """The term with the smallest packed exponent key.

        Packing is additive, so the lowest term of a product is the product
        of the lowest terms of its factors.
        """
        if not self._t:
            return _ZERO
        k = min(self._t)
        return LaurentPoly._raw({k: self._t[k]}, self._deg)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._t.get(0, 0)

    def is_unit(self) -> bool:
        """True for ``±monomial``, the units of the Laurent ring over Z."""
        if len(self._t) != 1:
            return False
        (c,) = self._t.values()
        return c in (1, -1)

    def involves_weight(self) -> bool:
        """True if any term has a nonzero A or B exponent."""
        return any(_unpack(k)[1:] != (0, 0) for k in self._t)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(self._t) < len(other._t):
            small, big = self._t, other._t
        else:
            small, big = other._t, self._t
        t = dict(big)
        for k, c in small.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                del t[k]
        return LaurentPoly._raw(t, max(self._deg, other._deg))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({k: -c for k, c in self._t.items()}, self._deg)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._raw({}, 0)
            return LaurentPoly._raw({k: c * other for k, c in self._t.items()}, self._deg)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return LaurentPoly._raw({}, 0)
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            ((k1, c1),) = a.items()
            return LaurentPoly._raw(
                {k1 + k2: c1 * c2 for k2, c2 in b.items()}, self._deg + other._deg
            )
        t: dict[int, int] = {}
        get = t.get
        bitems = list(b.items())
        for k1, c1 in a.items():
            for k2, c2 in bitems:
                k = k1 + k2
                t[k] = get(k, 0) + c1 * c2
        return LaurentPoly._raw({k: c for k, c in t.items() if c}, self._deg + other._deg)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit polynomial")
            ((k, c),) = self._t.items()
            return LaurentPoly._raw({-k * -n: c ** -n}, self._deg * -n)
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # -- normalisation, substitution, evaluation ---------------------------

    def unit_normalize(self) -> tuple[LaurentPoly, LaurentPoly]:
        """Split ``self = unit * p`` with ``p`` canonical among its associates.

        ``p`` has its smallest packed monomial at exponent 0 with a positive
        coefficient, so two polynomials differing by ``±monomial`` get the
        same ``p``.
        """
        if not self._t:
            raise DivisionByZero("zero polynomial has no normal form")
        k0 = min(self._t)
        c0 = self._t[k0]
        s = 1 if c0 > 0 else -1
        if k0 == 0 and s == 1:
            return LaurentPoly.const(1), self
        p = LaurentPoly._raw({k - k0: c * s for k, c in self._t.items()}, 2 * self._deg)
        return LaurentPoly._raw({k0: s}, self._deg), p

    def fold(self, a: int, b: int) -> LaurentPoly:
        """Substitute ``A -> q^a`` and ``B -> q^b``."""
        t: dict[int, int] = {}
        deg = 0
        for k, c in self._t.items():
            eq, ea, eb = _unpack(k)
            e = eq + a * ea + b * eb
            t[e] = t.get(e, 0) + c
            deg = max(deg, abs(e))
        return LaurentPoly._raw({k: c for k, c in t.items() if c}, deg)

    def evaluate(self, q0, A0=1, B0=1) -> Fraction:
        q0, A0, B0 = Fraction(q0), Fraction(A0), Fraction(B0)
        if not (q0 and A0 and B0):
            raise ValueError("evaluation point must have nonzero coordinates")
        cache: dict[tuple[int, int], Fraction] = {}

        def pw(i: int, x: Fraction, e: int) -> Fraction:
            v = cache.get((i, e))
            if v is None:
                v = cache[(i, e)] = x ** e
            return v

        total = Fraction(0)
        for k, c in self._t.items():
            eq, ea, eb = _unpack(k)
            total += c * pw(0, q0, eq) * pw(1, A0, ea) * pw(2, B0, eb)
        return total

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        if not self._t:
            return "0"
        out = []
        for mono, c in self.terms.items():
            factors = [f"{v}^{e}" for v, e in zip("qAB", mono) if e]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``: parse ``2*q^-3*A^1 - B^2 + 5``."""
        text = text.strip()
        if text == "0":
            return cls.const(0)
        terms: dict[tuple[int, int, int], int] = {}
        # split on + / - that are not exponent signs
        pieces = re.split(r"(?<!\^)\s*([+-])\s*", text)
        sign = 1
        for piece in pieces:
            if piece in ("+", "-"):
                sign = -1 if piece == "-" else 1
                continue
            if not piece:
                continue
            coeff = 1
            exps = {"q": 0, "A": 0, "B": 0}
            for f in piece.split("*"):
                f = f.strip()
                if "^" in f:
                    v, e = f.split("^")
                    if v not in exps:
                        raise ValueError(f"unknown variable {v!r}")
                    exps[v] += int(e)
                elif f in exps:
                    exps[f] += 1
                else:
                    coeff *= int(f)
            mono = (exps["q"], exps["A"], exps["B"])
            terms[mono] = terms.get(mono, 0) + sign * coeff
            sign = 1
        return cls(terms)


_ONE = LaurentPoly.const(1)
_ZERO = LaurentPoly.const(0)
_power_cache: dict[tuple[LaurentPoly, int], LaurentPoly] = {}


def _atom_power(atom: LaurentPoly, e: int) -> LaurentPoly:
    if e == 1:
        return atom
    key = (atom, e)
    v = _power_cache.get(key)
    if v is None:
        v = _power_cache[key] = atom ** e
    return v


class RationalFn:
    """Element of Q(q, A, B) kept as ``poly * prod(atom ** exp)``.

    ``num`` and ``den`` expand this into the plain quotient of two Laurent
    polynomials; nothing is ever reduced by a GCD.
    """

    __slots__ = ("poly", "atoms")

    def __init__(self, num: LaurentPoly | int = 0, den: LaurentPoly | int | None = None):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        self.poly = num
        self.atoms: dict[LaurentPoly, int] = {}
        if den is not None:
            inv = RationalFn(den).inverse()
            prod = self * inv
            self.poly, self.atoms = prod.poly, prod.atoms
        elif num.is_zero():
            self.poly = _ZERO

    @classmethod
    def _make(cls, poly: LaurentPoly, atoms: dict[LaurentPoly, int]) -> RationalFn:
        obj = object.__new__(cls)
        if poly.is_zero():
            obj.poly, obj.atoms = _ZERO, {}
        else:
            obj.poly, obj.atoms = poly, atoms
        return obj

    @classmethod
    def factor(cls, p: LaurentPoly, e: int = 1) -> RationalFn:
        """``p ** e`` with ``p`` held as an unexpanded atom."""
        if p.is_zero():
            if e < 0:
                raise DivisionByZero("zero polynomial raised to a negative power")
            return cls._make(_ZERO, {})
        unit, core = p.unit_normalize()
        atoms = {} if core == _ONE or e == 0 else {core: e}
        return cls._make(unit ** e, atoms)

    @classmethod
    def from_atoms(cls, factors: Iterable[tuple[LaurentPoly, int]], coeff: int = 1) -> RationalFn:
        """Build ``coeff * prod(p ** e)`` without expanding anything."""
        result = cls(coeff)
        for p, e in factors:
            result = result * cls.factor(p, e)
        return result

    # -- contract view ------------------------------------------------------

    @property
    def num(self) -> LaurentPoly:
        out = self.poly
        for a, e in self.atoms.items():
            if e > 0:
                out = out * _atom_power(a, e)
        return out

    @property
    def den(self) -> LaurentPoly:
        out = _ONE
        for a, e in self.atoms.items():
            if e < 0:
                out = out * _atom_power(a, -e)
        return out

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __bool__(self) -> bool:
        return not self.poly.is_zero()

    def constant_value(self) -> Fraction | None:
        """The value if this is a constant, else ``None``.

        Decided on the expanded quotient, so a constant hidden behind
        unreduced atoms (e.g. ``(q^2 - 1) / (q^2 - 1)``) is recognised.
        """
        if self.poly.is_zero():
            return Fraction(0)
        if not self.atoms:
            return Fraction(self.poly.constant_value()) if self.poly.is_constant() else None
        num, den = self.num, self.den
        if len(num) != len(den):
            return None
        kn, kd = min(num._t), min(den._t)
        if kn != kd:
            return None
        cn, cd = num._t[kn], den._t[kd]
        if num * cd != den * cn:
            return None
        return Fraction(cn, cd)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> RationalFn:
        if isinstance(x, RationalFn):
            return x
        if isinstance(x, (int, LaurentPoly)):
            return RationalFn(x)
        if isinstance(x, Fraction):
            return RationalFn(x.numerator) / RationalFn(x.denominator)
        raise TypeError(f"cannot convert {type(x).__name__} to RationalFn")

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.poly.is_zero() or other.poly.is_zero():
            return RationalFn._make(_ZERO, {})
        atoms = dict(self.atoms)
        for a, e in other.atoms.items():
            v = atoms.get(a, 0) + e
            if v:
                atoms[a] = v
            else:
                del atoms[a]
        return RationalFn._make(self.poly * other.poly, atoms)

    __rmul__ = __mul__

    def inverse(self) -> RationalFn:
        if self.poly.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        atoms = {a: -e for a, e in self.atoms.items()}
        unit, core = self.poly.unit_normalize()
        if core != _ONE:
            v = atoms.get(core, 0) - 1
            if v:
                atoms[core] = v
            else:
                del atoms[core]
        return RationalFn._make(unit ** -1, atoms)

    def __truediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self) -> RationalFn:
        return RationalFn._make(-self.poly, dict(self.atoms))

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.poly.is_zero():
            return other
        if other.poly.is_zero():
            return self
        common: dict[LaurentPoly, int] = {}
        px, py = self.poly, other.poly
        for a in set(self.atoms) | set(other.atoms):
            ex = self.atoms.get(a, 0)
            ey = other.atoms.get(a, 0)
            g = min(ex, ey)
            if g:
                common[a] = g
            if ex > g:
                px = px * _atom_power(a, ex - g)
            if ey > g:
                py = py * _atom_power(a, ey - g)
        return RationalFn._make(px + py, common)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, n: int) -> RationalFn:
        if n < 0:
            return self.inverse() ** -n
        if n == 0:
            return RationalFn(1)
        return RationalFn._make(self.poly ** n, {a: e * n for a, e in self.atoms.items()})

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).poly.is_zero()

    __hash__ = None  # equality is semantic, no canonical hash

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, q0, A0=1, B0=1) -> Fraction:
        value = self.poly.evaluate(q0, A0, B0)
        for a, e in self.atoms.items():
            v = a.evaluate(q0, A0, B0)
            if v == 0:
                if e < 0:
                    raise PoleAtPoint(f"denominator vanishes at q={q0}, A={A0}, B={B0}")
                value = Fraction(0)
                continue
            value *= v ** e
        return value

    def fold(self, a: int, b: int) -> RationalFn:
        """Substitute ``A -> q^a, B -> q^b`` (result is univariate in q)."""
        result = RationalFn(self.poly.fold(a, b))
        for atom, e in self.atoms.items():
            f = atom.fold(a, b)
            if f.is_zero():
                if e < 0:
                    raise DivisionByZero("denominator vanishes after substitution")
                return RationalFn(0)
            result = result * (RationalFn(f) ** e)
        return result

    def witness_term(self) -> LaurentPoly:
        """A nonzero monomial of ``num`` (zero if this function is zero),
        found without expanding the numerator."""
        out = self.poly.lowest_term()
        for a, e in self.atoms.items():
            if e > 0 and out:
                out = out * a.lowest_term() ** e
        return out

    def __str__(self) -> str:
        num, den = self.num, self.den
        if den == _ONE:
            return str(num)
        return f"({num}) / ({den})"

    def __repr__(self) -> str:
        return f"RationalFn({str(self)!r})"


# -- functional aliases -------------------------------------------------------


def poly_add(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p + r


def poly_mul(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p * r


def poly_neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def rat_add(x: RationalFn, y: RationalFn) -> RationalFn:
    return x + y


def rat_sub(x: RationalFn, y: RationalFn) -> RationalFn:
    return x - y


def rat_mul(x: RationalFn, y: RationalFn) -> RationalFn:
    return x * y


def rat_inv(x: RationalFn) -> RationalFn:
    return x.inverse()


def rat_eq(x: RationalFn, y: RationalFn) -> bool:
    """Cross-multiplication equality, ``n1*d2 == n2*d1``."""
    return x == y


def eval_point(x: RationalFn, q0, A0, B0) -> Fraction:
    return x.evaluate(q0, A0, B0)


def specialize_weight(x: RationalFn, a: int, b: int) -> RationalFn:
    return x.fold(a, b)
