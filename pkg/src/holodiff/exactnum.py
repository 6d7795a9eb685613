"""Exact arithmetic in cyclotomic fields over the rationals.

A ``CycloNumber`` is stored as a map from exponents of a primitive N-th root of
unity to ``Fraction`` coefficients, always reduced to a fixed basis. For each
prime power q^k exactly dividing N the basis keeps the exponents whose
q^k-residue has leading base-q digit different from q-1; the remaining powers
are rewritten through sum_{i<q} zeta^{e + i N/q} = 0. The basis contains the
exponent 0, so rational numbers are exactly the elements supported on {0}.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import NamedTuple, Union

from sympy import QQ, Poly, cyclotomic_poly, factorint, isprime, symbols, sympify

logger = logging.getLogger(__name__)

Rational = Fraction
Scalar = Union[int, Fraction]

_X = symbols("x")


@lru_cache(maxsize=None)
def _cyclotomic(conductor: int) -> Poly:
    return Poly(cyclotomic_poly(conductor, _X), _X, domain=QQ)


def _fraction(value: object) -> Fraction:
    if hasattr(value, "numerator") and not hasattr(value, "p"):
        return Fraction(int(value.numerator), int(value.denominator))
    value = sympify(value)
    return Fraction(int(value.p), int(value.q))


@lru_cache(maxsize=None)
def _reduction_plan(conductor: int) -> tuple[tuple[int, int, int], ...]:
    """Return (q, q^k, N/q) for every prime q dividing the conductor."""
    plan = []
    for q, k in sorted(factorint(conductor).items()):
        plan.append((q, q**k, conductor // q))
    return tuple(plan)


def _reduce(conductor: int, coeffs: Mapping[int, Fraction]) -> dict[int, Fraction]:
    current = {e % conductor: v for e, v in coeffs.items() if v}
    for q, qk, step in _reduction_plan(conductor):
        low = qk // q
        out: dict[int, Fraction] = {}
        for e, v in current.items():
            if (e % qk) // low == q - 1:
                for i in range(1, q):
                    f = (e - i * step) % conductor
                    out[f] = out.get(f, 0) - v
            else:
                out[e] = out.get(e, 0) + v
        current = {e: v for e, v in out.items() if v}
    return current


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class CycloNumber:
    """An element of Q(zeta_N) in canonical form."""

    __slots__ = ("conductor", "_coeffs")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, conductor: int, coeffs: Mapping[int, Scalar] | None = None) -> None:
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        self.conductor = conductor
        raw = {int(e): Fraction(v) for e, v in (coeffs or {}).items()}
        self._coeffs = _reduce(conductor, raw)

    @classmethod
    def _canonical(cls, conductor: int, coeffs: dict[int, Fraction]) -> CycloNumber:
        obj = cls.__new__(cls)
        obj.conductor = conductor
        obj._coeffs = coeffs
        return obj

    @classmethod
    def zeta(cls, conductor: int, exponent: int = 1) -> CycloNumber:
        """Return zeta_N^exponent."""
        return cls(conductor, {exponent % conductor: 1})

    @classmethod
    def rational(cls, value: Scalar, conductor: int = 1) -> CycloNumber:
        """Embed a rational number."""
        value = Fraction(value)
        return cls._canonical(conductor, {0: value} if value else {})

    @classmethod
    def sum(cls, terms: Iterable[CycloNumber | Scalar]) -> CycloNumber:
        """Add many elements with a single canonical reduction at the end."""
        items = [t if isinstance(t, CycloNumber) else cls.rational(t) for t in terms]
        conductor = 1
        for t in items:
            conductor = _lcm(conductor, t.conductor)
        raw: dict[int, Fraction] = {}
        for t in items:
            scale = conductor // t.conductor
            for e, v in t._coeffs.items():
                key = e * scale
                raw[key] = raw.get(key, 0) + v
        return cls._canonical(conductor, _reduce(conductor, raw))

    @classmethod
    def dot(cls, terms: Iterable[tuple[CycloNumber, CycloNumber, Scalar]]) -> CycloNumber:
        """Return sum(a * b * s) over the terms, reducing once at the end."""
        items = [(a, b, Fraction(s)) for a, b, s in terms if a and b and s]
        conductor = 1
        for a, b, _ in items:
            conductor = _lcm(conductor, _lcm(a.conductor, b.conductor))
        raw: dict[int, Fraction] = {}
        for a, b, s in items:
            sa, sb = conductor // a.conductor, conductor // b.conductor
            for e1, v1 in a._coeffs.items():
                w = v1 * s
                for e2, v2 in b._coeffs.items():
                    key = (e1 * sa + e2 * sb) % conductor
                    raw[key] = raw.get(key, 0) + w * v2
        return cls._canonical(conductor, _reduce(conductor, raw))

    def _poly(self) -> Poly:
        return Poly.from_dict({(e,): QQ(v.numerator, v.denominator) for e, v in self._coeffs.items()}, _X, domain=QQ)

    @property
    def coeffs(self) -> dict[int, Fraction]:
        """Reduced coefficients of the powers of zeta_N."""
        return dict(self._coeffs)

    def lift(self, conductor: int) -> CycloNumber:
        """Rewrite over Q(zeta_M) for a multiple M of the current conductor."""
        if conductor % self.conductor:
            raise ValueError(f"{conductor} is not a multiple of {self.conductor}")
        if conductor == self.conductor:
            return self
        scale = conductor // self.conductor
        return CycloNumber(conductor, {e * scale: v for e, v in self._coeffs.items()})

    def _coerce(self, other: object) -> CycloNumber | None:
        if isinstance(other, CycloNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.rational(other, self.conductor)
        return None

    def _align(self, other: CycloNumber) -> tuple[CycloNumber, CycloNumber]:
        if self.conductor == other.conductor:
            return self, other
        conductor = _lcm(self.conductor, other.conductor)
        return self.lift(conductor), other.lift(conductor)

    def __add__(self, other: object) -> CycloNumber:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._align(rhs)
        coeffs = dict(a._coeffs)
        for e, v in b._coeffs.items():
            s = coeffs.get(e, 0) + v
            if s:
                coeffs[e] = s
            else:
                coeffs.pop(e, None)
        return CycloNumber._canonical(a.conductor, coeffs)

    __radd__ = __add__

    def __neg__(self) -> CycloNumber:
        return CycloNumber._canonical(self.conductor, {e: -v for e, v in self._coeffs.items()})

    def __sub__(self, other: object) -> CycloNumber:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> CycloNumber:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def scale(self, factor: Scalar) -> CycloNumber:
        """Multiply by a rational number."""
        factor = Fraction(factor)
        if not factor:
            return CycloNumber._canonical(self.conductor, {})
        return CycloNumber._canonical(self.conductor, {e: v * factor for e, v in self._coeffs.items()})

    def __mul__(self, other: object) -> CycloNumber:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        if other.is_rational():
            return self.scale(other.to_rational())
        if self.is_rational():
            return other.scale(self.to_rational())
        a, b = self._align(other)
        n = a.conductor
        if len(b._coeffs) == 1:
            (shift, c), = b._coeffs.items()
            return CycloNumber(n, {(e + shift) % n: v * c for e, v in a._coeffs.items()})
        raw: dict[int, Fraction] = {}
        for e1, v1 in a._coeffs.items():
            for e2, v2 in b._coeffs.items():
                key = (e1 + e2) % n
                raw[key] = raw.get(key, 0) + v1 * v2
        return CycloNumber._canonical(n, _reduce(n, raw))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> CycloNumber:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycloNumber.rational(1, self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def galois(self, k: int) -> CycloNumber:
        """Apply the automorphism zeta -> zeta^k."""
        if gcd(k, self.conductor) != 1:
            raise ValueError(f"{k} is not a unit modulo {self.conductor}")
        n = self.conductor
        return CycloNumber(n, {(e * k) % n: v for e, v in self._coeffs.items()})

    def conjugate(self) -> CycloNumber:
        """Complex conjugate."""
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Field norm from Q(zeta_N) down to Q, the resultant with Phi_N."""
        return _fraction(_cyclotomic(self.conductor).resultant(self._poly()))

    def inverse(self) -> CycloNumber:
        """Return the multiplicative inverse, by inverting modulo Phi_N."""
        if not self._coeffs:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycloNumber.rational(1 / self.to_rational(), self.conductor)
        inv = self._poly().invert(_cyclotomic(self.conductor))
        return CycloNumber(self.conductor, {k: _fraction(c) for (k,), c in inv.terms()})

    def __truediv__(self, other: object) -> CycloNumber:
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self.scale(1 / Fraction(other))
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> CycloNumber:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._align(rhs)
        return a._coeffs == b._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_rational(self) -> bool:
        """Return whether the number lies in Q."""
        return not self._coeffs or set(self._coeffs) == {0}

    def to_rational(self) -> Fraction:
        """Return the rational value, or raise ``ValueError``."""
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._coeffs.get(0, 0))

    def to_json(self) -> dict:
        """Return exact coefficients as strings, keyed by exponent."""
        return {
            "conductor": self.conductor,
            "coeffs": {str(e): f"{v.numerator}/{v.denominator}" for e, v in sorted(self._coeffs.items())},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> CycloNumber:
        """Inverse of ``to_json``."""
        return cls(int(data["conductor"]), {int(e): Fraction(v) for e, v in data["coeffs"].items()})

    def __repr__(self) -> str:
        return f"CycloNumber({self.conductor}, {self._coeffs!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, v in sorted(self._coeffs.items()):
            parts.append(str(v) if e == 0 else f"{v}*z{self.conductor}^{e}")
        return " + ".join(parts)


class GaussSum(NamedTuple):
    """Quadratic residue sum s over zeta_l and the square root 2s+1 it fixes."""

    total: CycloNumber
    root: CycloNumber


def _residue_sum(ell: int) -> CycloNumber:
    return CycloNumber.sum(CycloNumber.zeta(ell, a * a) for a in range(1, (ell - 1) // 2 + 1))


def gauss_sum_quadratic(ell: int) -> GaussSum:
    """Return s = sum_{a=1}^{(l-1)/2} zeta_l^{a^2} and sqrt(-l) := 2s + 1 for l = 3 mod 4."""
    if ell < 3 or not isprime(ell):
        raise ValueError(f"{ell} is not an odd prime")
    if ell % 4 != 3:
        raise ValueError(f"{ell} is 1 mod 4; the residue sum does not fix a sqrt(-{ell})")
    total = _residue_sum(ell)
    return GaussSum(total=total, root=2 * total + 1)


def sqrt_signed_ell(ell: int) -> CycloNumber:
    """Return 2s + 1, a square root of (-1)^((l-1)/2) * l, for any odd prime l."""
    if ell < 3 or not isprime(ell):
        raise ValueError(f"{ell} is not an odd prime")
    return 2 * _residue_sum(ell) + 1
