"""The two operator algebras: relativistic (t, x, p, H) and nonrelativistic (x, p).

An :class:`AlgebraSpec` lists generators in canonical order and a set of
directed rewrite rules. Words are stored run-length encoded as tuples of
``(generator, power)`` pairs, so rules act on whole powers: the left side of
a swap rule is an adjacent pair ``g^a h^b`` with ``g`` after ``h`` in the
canonical order, and the left side of a power rule is a single ``g^k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from typing import Callable, Optional, Sequence

from .scalar import C, HBAR, I, M, ONE, Scalar

Factor = tuple[str, int]
Fragment = tuple[tuple[Factor, ...], Scalar]


@dataclass(frozen=True)
class Generator:
    name: str
    invertible: bool = False
    self_adjoint: bool = True


@dataclass(frozen=True)
class SwapRule:
    """``g^a h^b -> sum of fragments``; ``g`` sorts after ``h``."""

    left: tuple[str, str]
    rewrite: Callable[[int, int], Sequence[Fragment]]
    text: str


@dataclass(frozen=True)
class PowerRule:
    """``g^k -> sum of fragments`` whenever ``applies(k)``."""

    generator: str
    applies: Callable[[int], bool]
    rewrite: Callable[[int], Sequence[Fragment]]
    text: str


@dataclass(frozen=True)
class AlgebraSpec:
    name: str
    generators: tuple[Generator, ...]
    swap_rules: tuple[SwapRule, ...]
    power_rules: tuple[PowerRule, ...] = ()
    _rank: dict = field(init=False, repr=False, compare=False, hash=False)
    _swaps: dict = field(init=False, repr=False, compare=False, hash=False)
    _powers: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_rank", {g.name: i for i, g in enumerate(self.generators)})
        object.__setattr__(self, "_swaps", {r.left: r for r in self.swap_rules})
        object.__setattr__(self, "_powers", {r.generator: r for r in self.power_rules})
        for rule in self.swap_rules:
            g, h = rule.left
            if self._rank[g] <= self._rank[h]:
                raise ValueError(f"swap rule {rule.text!r} is not out of canonical order")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def rank(self, name: str) -> int:
        return self._rank[name]

    def generator(self, name: str) -> Generator:
        return self.generators[self._rank[name]]

    def swap_rule(self, g: str, h: str) -> Optional[SwapRule]:
        return self._swaps.get((g, h))

    def power_rule(self, g: str, k: int) -> Optional[PowerRule]:
        rule = self._powers.get(g)
        if rule is not None and rule.applies(k):
            return rule
        return None

    def rules_text(self) -> list[str]:
        return [r.text for r in self.swap_rules] + [r.text for r in self.power_rules]


def _commute(g: str, h: str) -> SwapRule:
    return SwapRule((g, h), lambda a, b: [(((h, b), (g, a)), ONE)], f"{g}*{h} -> {h}*{g}")


def _past_x(g: str, correction: Callable[[int], Sequence[Fragment]], text: str) -> SwapRule:
    """Move ``g^a`` right past one ``x``: ``g^a x -> x g^a + correction(a)``.

    For ``x^b`` with ``b > 1`` one ``x`` is peeled off and the rest stays put.
    """

    def rewrite(a: int, b: int) -> list[Fragment]:
        rest = ((("x", b - 1),) if b > 1 else ())
        out = [((("x", 1), (g, a)) + rest, ONE)]
        for frag, coeff in correction(a):
            out.append((frag + rest, coeff))
        return out

    return SwapRule((g, "x"), rewrite, text)


def _p_past_x(a: int) -> list[Fragment]:
    # [p^a, x] = -i hbar a p^(a-1)
    return [(((("p", a - 1),) if a != 1 else ()), -I * HBAR * a)]


def _h_past_x(a: int) -> list[Fragment]:
    # [H^a, x] = -i hbar c^2 a p H^(a-2)
    frag = (("p", 1),) + ((("H", a - 2),) if a != 2 else ())
    return [(frag, -I * HBAR * C**2 * a)]


def _mass_shell(k: int) -> list[Fragment]:
    # p^2 -> c^-2 H^2 - m^2 c^2
    rest = ((("p", k - 2),) if k > 2 else ())
    return [
        (rest + (("H", 2),), C ** -2),
        (rest, -(M**2) * C**2),
    ]


@cache
def relativistic_algebra() -> AlgebraSpec:
    """Generators t < x < p < H with H invertible.

    t is central, p and H commute, ``[p, x] = -i hbar`` and
    ``[H^a, x] = -i hbar c^2 a p H^(a-2)`` (the a = 1 case is the defining
    commutator; a = -1 gives ``H^-1 x -> x H^-1 + i hbar c^2 p H^-3``).
    ``p^k`` for k >= 2 is eliminated through the mass shell.
    """
    gens = (
        Generator("t"),
        Generator("x"),
        Generator("p"),
        Generator("H", invertible=True),
    )
    swaps = (
        _commute("x", "t"),
        _commute("p", "t"),
        _commute("H", "t"),
        _commute("H", "p"),
        _past_x("p", _p_past_x, "p^a*x -> x*p^a - a*i*hbar*p^(a-1)"),
        _past_x("H", _h_past_x, "H^a*x -> x*H^a - a*i*hbar*c^2*p*H^(a-2)"),
    )
    powers = (
        PowerRule("p", lambda k: k >= 2, _mass_shell, "p^2 -> c^-2*H^2 - m^2*c^2"),
    )
    return AlgebraSpec("rel", gens, swaps, powers)


@cache
def nonrelativistic_algebra() -> AlgebraSpec:
    """Generators x < p with p invertible; ``p^a x -> x p^a - a i hbar p^(a-1)``.

    No mass-shell reduction; the free Hamiltonian ``p^2/2m`` is built by callers.
    """
    gens = (Generator("x"), Generator("p", invertible=True))
    swaps = (_past_x("p", _p_past_x, "p^a*x -> x*p^a - a*i*hbar*p^(a-1)"),)
    return AlgebraSpec("nonrel", gens, swaps)


ALGEBRAS = {
    "rel": relativistic_algebra,
    "nonrel": nonrelativistic_algebra,
}


def get_algebra(name: str) -> AlgebraSpec:
    try:
        return ALGEBRAS[name]()
    except KeyError:
        raise KeyError(f"unknown algebra {name!r}; expected one of {sorted(ALGEBRAS)}") from None
