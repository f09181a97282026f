"""Registry of the operator identities behind the quantum Lorentz transformation.

Each :class:`Identity` pairs two formal expressions in one algebra; it holds
when their difference normalizes to the empty expression.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .algebras import get_algebra
from .errors import UnknownIdentityError
from .exprlang import parse, render
from .opalg import OpExpr, reduce


@dataclass(frozen=True)
class Identity:
    name: str
    algebra: str
    lhs: OpExpr
    rhs: OpExpr
    location: str


@dataclass(frozen=True)
class VerificationReport:
    name: str
    status: str
    residual: str
    steps: int

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def line(self) -> str:
        return f"{self.status.upper()} {self.name} residual={self.residual} steps={self.steps}"


# Primed coordinates, both as quantized (symmetrized) and after using t's centrality.
_XPRIME3 = "(H*x + x*H - c^2*(p*t + t*p)) / (2*m*c^2)"
_TPRIME3 = "(H*t + t*H - (p*x + x*p)) / (2*m*c^2)"
_XPRIME5 = "(H*x + x*H) / (2*m*c^2) - t*p/m"
_TPRIME5 = "t*H/(m*c^2) - (p*x + x*p) / (2*m*c^2)"
_TNON = "m*(p^-1*x + x*p^-1)/2"
_HNON_INV = "2*m*p^-2"


@cache
def builtin_expressions() -> dict[str, OpExpr]:
    """Named formal expressions: the boosted coordinates and the arrival-time operator."""
    rel = get_algebra("rel")
    nonrel = get_algebra("nonrel")
    return {
        "xprime3": parse(_XPRIME3, rel),
        "tprime3": parse(_TPRIME3, rel),
        "xprime5": parse(_XPRIME5, rel),
        "tprime5": parse(_TPRIME5, rel),
        "Tnon": parse(_TNON, nonrel),
        "HnonInv": parse(_HNON_INV, nonrel),
    }


def _subst(template: str) -> str:
    return (
        template.replace("XP", f"({_XPRIME5})")
        .replace("TP", f"({_TPRIME5})")
        .replace("TNON", f"({_TNON})")
        .replace("HNI", f"({_HNON_INV})")
    )


# name, algebra, lhs, rhs, description
_TABLE = [
    ("eq4", "rel", "H*t - t*H", "0", "energy commutes with time"),
    ("eq6", "rel", "H^2*x - x*H^2", "2*H*(H*x - x*H)", "H^2 commutator via H commutator"),
    ("eq7", "rel", "H^2*x - x*H^2", "-2*i*hbar*p*c^2", "H^2 commutator with position"),
    ("eq8", "rel", "H*x - x*H", "-i*hbar*H^-1*p*c^2", "energy-position commutator"),
    ("velocity", "rel", "(i/hbar)*(H*x - x*H)", "c^2*p*H^-1", "Heisenberg velocity"),
    ("eq9", "rel", "c^2*TP*TP - XP*XP", "c^2*t^2 - x^2 + hbar^2*c^2*H^-2/4", "boosted interval with zero-point term"),
    (
        "a2",
        "rel",
        "(-t*H*(p*x + x*p) - (p*x + x*p)*t*H + (H*x + x*H)*t*p + t*p*(H*x + x*H))"
        " / (2*m^2*c^2)",
        "0",
        "mixed t-terms cancel",
    ),
    (
        "a5",
        "rel",
        "(2*x*p - i*hbar)*(2*x*p - i*hbar)",
        "4*x^2*p^2 - 8*i*hbar*x*p - hbar^2",
        "square of 2xp - i hbar",
    ),
    (
        "a6",
        "rel",
        "(2*x*H - i*hbar*H^-1*p*c^2)*(2*x*H - i*hbar*H^-1*p*c^2)",
        "4*x^2*H^2 - 8*i*hbar*x*p*c^2 - 2*hbar^2*c^2 + hbar^2*H^-2*p^2*c^4",
        "square of 2xH - i hbar c^2 p/H",
    ),
    (
        "a7",
        "rel",
        "(2*x*p - i*hbar)*(2*x*p - i*hbar)/(4*m^2*c^2)"
        " - (2*x*H - i*hbar*H^-1*p*c^2)*(2*x*H - i*hbar*H^-1*p*c^2)/(4*m^2*c^4)",
        "-x^2 + hbar^2*c^2*H^-2/4",
        "boosted interval, position part",
    ),
    (
        "b2",
        "rel",
        "((H*x + x*H)*H - H*(H*x + x*H)) + c^2*(p*(p*x + x*p) - (p*x + x*p)*p)",
        "0",
        "symmetrized commutators cancel",
    ),
    (
        "b3",
        "rel",
        "(p*x + x*p)*(H*x + x*H) - (H*x + x*H)*(p*x + x*p)",
        "-2*m^2*c^4*i*hbar*(x*H^-1 + H^-1*x)",
        "commutator of symmetrized products",
    ),
    ("eq18", "rel", "XP*TP - TP*XP", "-i*hbar*(H^-1*x + x*H^-1)/2", "boosted coordinate commutator"),
    ("eq19", "nonrel", "x*TNON - TNON*x", "-i*hbar*(HNI*x + x*HNI)/4", "nonrelativistic arrival-time commutator"),
]


@cache
def registry() -> dict[str, Identity]:
    out = {}
    for name, alg, lhs, rhs, loc in _TABLE:
        spec = get_algebra(alg)
        out[name] = Identity(name, alg, parse(_subst(lhs), spec), parse(_subst(rhs), spec), loc)
    return out


def get_identity(name: str) -> Identity:
    try:
        return registry()[name]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity {name!r}") from None


def check(identity: Identity) -> VerificationReport:
    spec = get_algebra(identity.algebra)
    residual, steps = reduce(identity.lhs - identity.rhs, spec)
    status = "pass" if residual.is_zero() else "fail"
    return VerificationReport(identity.name, status, render(residual), steps)


def verify_identity(name: str) -> VerificationReport:
    return check(get_identity(name))


def verify_all(algebra: str | None = None) -> list[VerificationReport]:
    """Verify every registered identity in registration order, optionally filtered by algebra."""
    return [check(ident) for ident in registry().values() if algebra in (None, ident.algebra)]
