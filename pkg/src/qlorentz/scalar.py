"""Exact coefficient ring: Laurent polynomials in hbar, c, m over Gaussian rationals.

A :class:`Scalar` maps unit monomials ``hbar^a * c^b * m^g`` (integer, possibly
negative exponents) to Gaussian rationals ``re + im*i`` with ``re``, ``im``
exact :class:`fractions.Fraction` values. Zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .errors import NonInvertibleScalarError

UNIT_NAMES = ("hbar", "c", "m")

Monomial = tuple[int, int, int]


class Gauss:
    """Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, Gauss):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Gauss({self.re}, {self.im})"

    def __add__(self, other: Gauss) -> Gauss:
        return Gauss(self.re + other.re, self.im + other.im)

    def __neg__(self) -> Gauss:
        return Gauss(-self.re, -self.im)

    def __mul__(self, other: Gauss) -> Gauss:
        return Gauss(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conjugate(self) -> Gauss:
        return Gauss(self.re, -self.im)

    def inverse(self) -> Gauss:
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise NonInvertibleScalarError("division by zero Gaussian rational")
        return Gauss(self.re / norm, -self.im / norm)


def _as_gauss(value) -> Gauss:
    if isinstance(value, Gauss):
        return value
    if isinstance(value, complex):
        return Gauss(Fraction(value.real), Fraction(value.imag))
    if isinstance(value, (Rational, str)):
        return Gauss(Fraction(value))
    raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")


class Scalar:
    """Immutable exact coefficient.

    Construct from a mapping ``{(a, b, g): Gauss}`` or with the helpers
    :meth:`number`, :meth:`unit` and the module constants ``ONE``, ``I``,
    ``HBAR``, ``C``, ``M``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Gauss] | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = _as_gauss(coeff)
                if coeff:
                    clean[tuple(mono)] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def number(cls, re=0, im=0) -> Scalar:
        return cls({(0, 0, 0): Gauss(re, im)})

    @classmethod
    def unit(cls, name: str, power: int = 1) -> Scalar:
        exps = [0, 0, 0]
        exps[UNIT_NAMES.index(name)] = power
        return cls({tuple(exps): Gauss(1)})

    @classmethod
    def coerce(cls, value) -> Scalar:
        if isinstance(value, Scalar):
            return value
        return cls({(0, 0, 0): _as_gauss(value)})

    @property
    def terms(self) -> Mapping[Monomial, Gauss]:
        return self._terms

    def items(self) -> Iterable[tuple[Monomial, Gauss]]:
        """Monomials in deterministic (descending exponent) order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, complex)):
            return self == Scalar.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        from .exprlang import render_scalar

        return f"Scalar({render_scalar(self)!r})"

    def __add__(self, other) -> Scalar:
        other = Scalar.coerce(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            out[mono] = out[mono] + coeff if mono in out else coeff
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar({mono: -coeff for mono, coeff in self._terms.items()})

    def __sub__(self, other) -> Scalar:
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other) -> Scalar:
        return Scalar.coerce(other) - self

    def __mul__(self, other) -> Scalar:
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        out: dict[Monomial, Gauss] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                prod = c1 * c2
                out[mono] = out[mono] + prod if mono in out else prod
        return Scalar(out)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if len(self._terms) != 1:
            raise NonInvertibleScalarError(
                "only a single unit monomial with nonzero coefficient is invertible"
            )
        (mono, coeff), = self._terms.items()
        return Scalar({(-mono[0], -mono[1], -mono[2]): coeff.inverse()})

    def __truediv__(self, other) -> Scalar:
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other) -> Scalar:
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> Scalar:
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self) -> Scalar:
        return Scalar({mono: coeff.conjugate() for mono, coeff in self._terms.items()})

    def evaluate(self, hbar: float = 1.0, c: float = 1.0, m: float = 1.0) -> complex:
        """Numeric value with the units bound to the given floats."""
        total = 0j
        for (a, b, g), coeff in self._terms.items():
            total += complex(float(coeff.re), float(coeff.im)) * (hbar**a) * (c**b) * (m**g)
        return total


ZERO = Scalar()
ONE = Scalar.number(1)
I = Scalar.number(0, 1)
HBAR = Scalar.unit("hbar")
C = Scalar.unit("c")
M = Scalar.unit("m")


def scalar_arith(a: Scalar, b: Scalar | None, op: str) -> Scalar:
    """Dispatch ``add``, ``mul``, ``neg`` or ``inv``; ``b`` is ignored for unary ops."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown scalar op {op!r}")
