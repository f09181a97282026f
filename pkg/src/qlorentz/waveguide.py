"""Guided photons in a hollow waveguide treated as particles of mass hbar*omega_c/c^2."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO

from .errors import DomainError
from .kinematics import (
    NATURAL,
    TIMELIKE,
    Constants,
    Event,
    TunnelResult,
    compton_wavelength,
    tunnel_probability,
)

CSV_COLUMNS = ("x", "interval", "s", "classification", "probability")


@dataclass(frozen=True)
class WaveguideParams:
    omega_c: float
    width: Optional[float] = None

    def __post_init__(self):
        if not self.omega_c > 0:
            raise DomainError("cutoff angular frequency must be positive")

    @classmethod
    def from_width(cls, a: float, k: Constants = NATURAL) -> WaveguideParams:
        """Rectangular guide of broad-wall width ``a``; lowest (TE10) mode."""
        if not a > 0:
            raise DomainError("waveguide width must be positive")
        return cls(omega_c=math.pi * k.c / a, width=a)

    @classmethod
    def from_cutoff_frequency(cls, f: float) -> WaveguideParams:
        return cls(omega_c=2 * math.pi * f)


@dataclass(frozen=True)
class EffectiveQuantities:
    m_eff: float
    lambda_c: float


@dataclass(frozen=True)
class GuidedPhotonState:
    omega: float
    k_x: Optional[float]
    kappa: Optional[float]
    v_g: Optional[float]


def effective_mass(w: WaveguideParams, k: Constants = NATURAL) -> float:
    return k.hbar * w.omega_c / k.c**2


def effective_quantities(w: WaveguideParams, k: Constants = NATURAL) -> EffectiveQuantities:
    m_eff = effective_mass(w, k)
    return EffectiveQuantities(m_eff=m_eff, lambda_c=compton_wavelength(m_eff, k))


def dispersion(
    w: WaveguideParams,
    k: Constants = NATURAL,
    *,
    omega: Optional[float] = None,
    k_x: Optional[float] = None,
) -> GuidedPhotonState:
    """Complete (omega, k_x) from ``omega^2 = k_x^2 c^2 + omega_c^2``.

    Below cutoff there is no real k_x; the evanescent decay constant
    ``kappa = sqrt(omega_c^2 - omega^2)/c`` is returned instead.
    """
    if (omega is None) == (k_x is None):
        raise ValueError("give exactly one of omega, k_x")
    wc = w.omega_c
    if k_x is not None:
        if k_x < 0:
            raise DomainError("k_x must be non-negative")
        omega = math.hypot(k_x * k.c, wc)
        return GuidedPhotonState(omega, k_x, None, k.c**2 * k_x / omega)
    if not omega > 0:
        raise DomainError("omega must be positive")
    if omega >= wc:
        kx = math.sqrt((omega - wc) * (omega + wc)) / k.c
        return GuidedPhotonState(omega, kx, None, k.c**2 * kx / omega)
    kappa = math.sqrt((wc - omega) * (wc + omega)) / k.c
    return GuidedPhotonState(omega, None, kappa, None)


def guided_tunnel_probability(e: Event, w: WaveguideParams, k: Constants = NATURAL) -> TunnelResult:
    return tunnel_probability(e, effective_mass(w, k), k)


@dataclass(frozen=True)
class ScanRow:
    x: float
    interval: float
    s: Optional[float]
    classification: str
    probability: Optional[float]


def scan_positions(x0: float, x1: float, step: float) -> list[float]:
    """``x0 + i*step`` up to ``x1`` inclusive (with a relative slack of 1e-9 steps)."""
    if not step > 0:
        raise DomainError("scan step must be positive")
    if x1 < x0:
        return []
    n = math.floor((x1 - x0) / step + 1e-9) + 1
    return [x0 + i * step for i in range(n)]


def scan(w: WaveguideParams, k: Constants, t: float, x0: float, x1: float, step: float) -> list[ScanRow]:
    rows = []
    for x in scan_positions(x0, x1, step):
        r = guided_tunnel_probability(Event(t, x), w, k)
        rows.append(ScanRow(x, r.interval, r.s, r.classification, r.probability))
    return rows


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(rows: Iterable[ScanRow], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_cell(getattr(row, col)) for col in CSV_COLUMNS])


def rows_to_csv(rows: Iterable[ScanRow]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def read_csv(text: str) -> list[ScanRow]:
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        rows.append(
            ScanRow(
                x=float(rec["x"]),
                interval=float(rec["interval"]),
                s=float(rec["s"]) if rec["s"] else None,
                classification=rec["classification"],
                probability=float(rec["probability"]) if rec["probability"] else None,
            )
        )
    return rows


__all__ = [
    "CSV_COLUMNS",
    "EffectiveQuantities",
    "GuidedPhotonState",
    "ScanRow",
    "TIMELIKE",
    "WaveguideParams",
    "dispersion",
    "effective_mass",
    "effective_quantities",
    "guided_tunnel_probability",
    "read_csv",
    "rows_to_csv",
    "scan",
    "scan_positions",
    "write_csv",
]
