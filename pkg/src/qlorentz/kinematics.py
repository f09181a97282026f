"""Classical Lorentz boosts, on-shell relations and the spacelike tunneling window.

All functions are plain floating point. Intervals are lab-frame quantities
``c^2 t^2 - x^2``; probabilities are normalized to 1 on the light cone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import (
    DomainError,
    InvariantViolationError,
    MasslessFrameError,
    SuperluminalFrameError,
)

SHELL_RTOL = 1e-12


@dataclass(frozen=True)
class Constants:
    hbar: float = 1.054571817e-34
    c: float = 2.99792458e8

    def __post_init__(self):
        if not (self.hbar > 0 and self.c > 0):
            raise DomainError("hbar and c must be strictly positive")


SI = Constants()
NATURAL = Constants(hbar=1.0, c=1.0)


@dataclass(frozen=True)
class Event:
    t: float
    x: float


@dataclass(frozen=True)
class ParticleState:
    m: float
    E: float
    p: float
    v: float


@dataclass(frozen=True)
class TunnelResult:
    classification: str
    interval: float
    s: Optional[float]
    amplitude: Optional[float]
    probability: Optional[float]


TIMELIKE = "timelike"
LIGHTLIKE = "lightlike"
ALLOWED = "spacelike-allowed"
SUPPRESSED = "spacelike-suppressed"


def boost_classical(e: Event, v: float, k: Constants = NATURAL) -> Event:
    """Standard boost along x into the frame moving with velocity ``v``."""
    if abs(v) >= k.c:
        raise SuperluminalFrameError(f"|v| = {abs(v)} must be below c = {k.c}")
    beta = v / k.c
    gamma = 1.0 / math.sqrt((1.0 - beta) * (1.0 + beta))
    return Event(t=gamma * (e.t - v * e.x / k.c**2), x=gamma * (e.x - v * e.t))


def _check_shell(s: ParticleState, k: Constants):
    rest = s.m * k.c**2
    lhs = s.E**2
    rhs = (s.p * k.c) ** 2 + rest**2
    if abs(lhs - rhs) > SHELL_RTOL * max(lhs, rhs):
        raise InvariantViolationError(f"off-shell state: E^2 = {lhs}, p^2c^2 + m^2c^4 = {rhs}")
    if abs(s.p * k.c**2 - s.E * s.v) > SHELL_RTOL * s.E * k.c:
        raise InvariantViolationError("inconsistent velocity: p != E v / c^2")


def boost_energy_form(e: Event, s: ParticleState, k: Constants = NATURAL) -> Event:
    """Boost written through the particle's energy and momentum instead of its velocity."""
    if s.m == 0:
        raise MasslessFrameError("a massless particle does not define a rest frame")
    _check_shell(s, k)
    mc2 = s.m * k.c**2
    return Event(t=(s.E * e.t - s.p * e.x) / mc2, x=(s.E * e.x - k.c**2 * s.p * e.t) / mc2)


def shell_relations(
    m: float,
    k: Constants = NATURAL,
    *,
    E: Optional[float] = None,
    p: Optional[float] = None,
    v: Optional[float] = None,
) -> ParticleState:
    """Complete (E, p, v) on the mass shell from one or two of them.

    When two are given the pair must already be consistent (relative 1e-12).
    """
    given = {name: val for name, val in (("E", E), ("p", p), ("v", v)) if val is not None}
    if not 1 <= len(given) <= 2:
        raise ValueError("give one or two of E, p, v")
    if m < 0:
        raise DomainError("mass must be non-negative")
    rest = m * k.c**2
    if v is not None:
        if abs(v) >= k.c:
            raise InvariantViolationError(f"|v| = {abs(v)} must be below c")
        beta = v / k.c
        gamma = 1.0 / math.sqrt((1.0 - beta) * (1.0 + beta))
        state = ParticleState(m, gamma * rest, gamma * m * v, v)
    elif p is not None:
        energy = math.hypot(p * k.c, rest)
        state = ParticleState(m, energy, p, p * k.c**2 / energy)
    else:
        if E < rest or E <= 0:
            raise InvariantViolationError(f"E = {E} is below the rest energy {rest}")
        mom = math.sqrt((E - rest) * (E + rest)) / k.c
        state = ParticleState(m, E, mom, mom * k.c**2 / E)
    for name, val in given.items():
        ref = getattr(state, name)
        scale = {"E": state.E, "p": state.E / k.c, "v": k.c}[name]
        if abs(ref - val) > SHELL_RTOL * scale:
            raise InvariantViolationError(f"given {name} = {val} inconsistent with {ref}")
    return state


def compton_wavelength(m: float, k: Constants = NATURAL) -> float:
    """Reduced Compton wavelength hbar / (m c)."""
    if m <= 0:
        raise DomainError("mass must be strictly positive")
    return k.hbar / (m * k.c)


def spacelike_window(m: float, k: Constants = NATURAL) -> float:
    """Half the Compton wavelength: the largest spacelike reach with P >= 1/e."""
    return compton_wavelength(m, k) / 2


def interval(e: Event, k: Constants = NATURAL) -> float:
    ct = k.c * e.t
    return (ct - e.x) * (ct + e.x)


def tunnel_probability(e: Event, m: float, k: Constants = NATURAL) -> TunnelResult:
    """Classify an event and, off the timelike region, give the decay amplitude.

    With ``s = sqrt(x^2 - c^2 t^2)`` the amplitude is ``exp(-s/lambda)`` and the
    probability its square; the event counts as allowed while ``s <= lambda/2``,
    i.e. while the probability is at least ``1/e``.
    """
    lam = compton_wavelength(m, k)
    iv = interval(e, k)
    if iv > 0:
        return TunnelResult(TIMELIKE, iv, None, None, None)
    s = math.sqrt(abs(iv))
    amplitude = math.exp(-s / lam)
    probability = amplitude * amplitude
    if iv == 0:
        cls = LIGHTLIKE
    else:
        cls = ALLOWED if s <= lam / 2 else SUPPRESSED
    return TunnelResult(cls, iv, s, amplitude, probability)
