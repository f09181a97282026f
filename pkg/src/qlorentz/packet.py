"""Numerical wave-packet oracle in the momentum representation (hbar = c = 1).

Operators act on amplitudes ``psi(p_j)`` sampled on a uniform grid:
``p`` and ``H = sqrt(p^2 + m^2)`` multiply, ``x = i d/dp`` differentiates,
and ``t`` is a plain number. Words are applied right to left exactly as
written, so an unnormalized expression is evaluated by literal operator
composition, independently of the rewrite engine.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import GridTooSmallError, UnitBindingError
from .identities import builtin_expressions
from .opalg import OpExpr, Word

EDGE_TOL = 1e-12
CONTAINED_RTOL = 1e-6  # above spectral roundoff amplified by repeated d/dp
METHODS = ("spectral", "fd4")


class AccuracyWarning(UserWarning):
    """An intermediate state reached the grid edges; results may be inaccurate."""


@dataclass(frozen=True)
class MomentumGrid:
    p_max: float
    n: int

    def __post_init__(self):
        if self.n < 64 or self.n & (self.n - 1):
            raise GridTooSmallError(f"n = {self.n} must be a power of two >= 64")
        if not self.p_max > 0:
            raise GridTooSmallError("p_max must be positive")

    @property
    def dp(self) -> float:
        return 2 * self.p_max / self.n

    @property
    def points(self) -> np.ndarray:
        return -self.p_max + self.dp * np.arange(self.n)

    @property
    def wavenumbers(self) -> np.ndarray:
        return 2 * np.pi * np.fft.fftfreq(self.n, d=self.dp)


@dataclass(frozen=True, eq=False)
class WavePacket:
    grid: MomentumGrid
    amplitudes: np.ndarray
    mass: float
    units: str = "natural"

    def norm(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2) * self.grid.dp)


@dataclass(frozen=True, eq=False)
class AppliedState:
    values: np.ndarray
    contained: bool


def _edge_ok(values: np.ndarray) -> bool:
    peak = np.max(np.abs(values))
    if peak == 0:
        return True
    edge = max(np.max(np.abs(values[:2])), np.max(np.abs(values[-2:])))
    return edge <= CONTAINED_RTOL * peak


def gaussian_packet(p0: float, sigma: float, m: float, grid: MomentumGrid) -> WavePacket:
    """Normalized Gaussian ``(2 pi sigma^2)^(-1/4) exp(-(p - p0)^2 / (4 sigma^2))``.

    The packet must sit at least 8 sigma from both grid edges and its edge
    amplitudes must be below 1e-12.
    """
    if not sigma > 0 or not m > 0:
        raise GridTooSmallError("sigma and m must be positive")
    lo, hi = -grid.p_max, grid.p_max - grid.dp
    if p0 - 8 * sigma < lo or p0 + 8 * sigma > hi:
        raise GridTooSmallError(f"packet p0={p0}, sigma={sigma} not within 8 sigma of the grid")
    p = grid.points
    psi = (2 * np.pi * sigma**2) ** -0.25 * np.exp(-((p - p0) ** 2) / (4 * sigma**2))
    psi = psi.astype(complex)
    psi /= math.sqrt(np.sum(np.abs(psi) ** 2) * grid.dp)
    if max(abs(psi[0]), abs(psi[-1])) >= EDGE_TOL:
        raise GridTooSmallError("packet amplitude at grid edge exceeds 1e-12")
    psi.setflags(write=False)
    return WavePacket(grid, psi, m)


def derivative(values: np.ndarray, grid: MomentumGrid, method: str = "spectral") -> np.ndarray:
    if method == "spectral":
        k = grid.wavenumbers.copy()
        k[grid.n // 2] = 0.0
        return np.fft.ifft(1j * k * np.fft.fft(values))
    if method == "fd4":
        f = np.concatenate([np.zeros(2, complex), values, np.zeros(2, complex)])
        return (-f[4:] + 8 * f[3:-1] - 8 * f[1:-3] + f[:-4]) / (12 * grid.dp)
    raise ValueError(f"unknown differentiation method {method!r}")


def apply_word(
    word: Word,
    pk: WavePacket,
    t: float = 0.0,
    method: str = "spectral",
    values: np.ndarray | None = None,
) -> AppliedState:
    """Apply ``word`` to ``values`` (default: the packet amplitudes), rightmost factor first."""
    f = np.array(pk.amplitudes if values is None else values, dtype=complex)
    p = pk.grid.points
    contained = True
    for gen, k in reversed(word):
        if gen == "t":
            f = f * t**k
        elif gen == "p":
            f = f * p**k
        elif gen == "H":
            f = f * np.sqrt(p**2 + pk.mass**2) ** k
        elif gen == "x":
            if k < 0:
                raise ValueError("x is not invertible")
            for _ in range(k):
                f = 1j * derivative(f, pk.grid, method)
        else:
            raise ValueError(f"unknown generator {gen!r}")
        contained = contained and _edge_ok(f)
    return AppliedState(f, contained)


def _bind(pk: WavePacket):
    if pk.units != "natural":
        raise UnitBindingError(f"cannot bind hbar, c in {pk.units!r} units; only natural units")
    return {"hbar": 1.0, "c": 1.0, "m": pk.mass}


def apply_expr(
    e: OpExpr,
    pk: WavePacket,
    t: float = 0.0,
    method: str = "spectral",
    values: np.ndarray | None = None,
) -> AppliedState:
    units = _bind(pk)
    total = np.zeros(pk.grid.n, complex)
    contained = True
    for word, coeff in e.terms.items():
        res = apply_word(word, pk, t, method, values)
        total += coeff.evaluate(**units) * res.values
        contained = contained and res.contained
    return AppliedState(total, contained)


def inner(pk: WavePacket, values: np.ndarray) -> complex:
    return complex(np.vdot(pk.amplitudes, values) * pk.grid.dp)


def expectation(e: OpExpr, pk: WavePacket, t: float = 0.0, method: str = "spectral") -> complex:
    res = apply_expr(e, pk, t, method)
    if not res.contained:
        warnings.warn("state reached the grid edge", AccuracyWarning, stacklevel=2)
    return inner(pk, res.values)


@dataclass(frozen=True)
class IntervalCheck:
    residual: float
    lhs: complex
    rhs: complex
    x2: float
    contained: bool


def check_interval_identity(pk: WavePacket, t: float, method: str = "spectral") -> IntervalCheck:
    """Compare ``<c^2 t'^2 - x'^2>`` built by composing the boosted coordinates
    against ``c^2 t^2 - <x^2> + <H^-2>/4``."""
    b = builtin_expressions()
    xp, tp = b["xprime5"], b["tprime5"]
    psi = pk.amplitudes
    t1 = apply_expr(tp, pk, t, method, psi)
    t2 = apply_expr(tp, pk, t, method, t1.values)
    x1 = apply_expr(xp, pk, t, method, psi)
    x2 = apply_expr(xp, pk, t, method, x1.values)
    lhs = inner(pk, t2.values - x2.values)

    xx = apply_word((("x", 2),), pk, t, method)
    hinv2 = apply_word((("H", -2),), pk, t, method)
    exp_x2 = inner(pk, xx.values)
    rhs = t**2 - exp_x2 + inner(pk, hinv2.values) / 4
    residual = abs(lhs - rhs) / max(1.0, abs(exp_x2))
    contained = all(s.contained for s in (t1, t2, x1, x2, xx, hinv2))
    return IntervalCheck(float(residual), lhs, rhs, float(exp_x2.real), contained)


def convergence_sweep(
    p0: float,
    sigma: float,
    m: float,
    t: float,
    p_max: float,
    ns: Sequence[int] = (512, 1024, 2048, 4096),
    method: str = "spectral",
) -> list[tuple[int, float]]:
    out = []
    for n in ns:
        pk = gaussian_packet(p0, sigma, m, MomentumGrid(p_max, n))
        out.append((n, check_interval_identity(pk, t, method).residual))
    return out


@dataclass(frozen=True)
class EhrenfestReport:
    slope_measured: float
    slope_predicted: float
    velocity_commutator: complex
    velocity_predicted: complex


def ehrenfest_check(pk: WavePacket, delta: float = 1e-3, method: str = "spectral") -> EhrenfestReport:
    """Drift of ``<x'>`` with t, and ``<i[H, x]>`` against ``<p H^-1>``."""
    xp = builtin_expressions()["xprime5"]
    at0 = expectation(xp, pk, 0.0, method).real
    at1 = expectation(xp, pk, delta, method).real
    p_mean = inner(pk, apply_word((("p", 1),), pk).values).real

    h_psi = apply_word((("H", 1),), pk, method=method).values
    x_psi = apply_word((("x", 1),), pk, method=method).values
    hx = apply_word((("H", 1),), pk, method=method, values=x_psi).values
    xh = apply_word((("x", 1),), pk, method=method, values=h_psi).values
    commutator = inner(pk, 1j * (hx - xh))
    predicted = inner(pk, apply_word((("p", 1), ("H", -1)), pk).values)
    return EhrenfestReport(
        slope_measured=(at1 - at0) / delta,
        slope_predicted=-p_mean / pk.mass,
        velocity_commutator=commutator,
        velocity_predicted=predicted,
    )
