"""Noncommutative operator expressions and their canonical normal form.

An :class:`OpExpr` is a finite formal sum ``sum_w s_w * w`` of words ``w``
with exact :class:`~qlorentz.scalar.Scalar` coefficients. Arithmetic on
expressions is purely formal; :func:`normalize` rewrites an expression to the
unique canonical form under an :class:`~qlorentz.algebras.AlgebraSpec`.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

from .algebras import AlgebraSpec, Factor
from .errors import AlgebraMismatchError, ReductionBudgetError
from .scalar import ONE, Scalar

Word = tuple[Factor, ...]

DEFAULT_BUDGET = 10**6
STRATEGIES = ("leftmost", "rightmost")


def make_word(factors: Iterable[Factor]) -> Word:
    """Run-length word with adjacent equal generators merged and zero powers dropped."""
    out: list[Factor] = []
    for gen, power in factors:
        if power == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + power
            if merged:
                out[-1] = (gen, merged)
            else:
                out.pop()
        else:
            out.append((gen, power))
    return tuple(out)


class OpExpr:
    """Immutable formal sum of words over a fixed generator set."""

    __slots__ = ("_terms", "generators", "_hash")

    def __init__(self, terms: Mapping[Word, Scalar] | None, generators: tuple[str, ...]):
        clean: dict[Word, Scalar] = {}
        if terms:
            for word, coeff in terms.items():
                for gen, _ in word:
                    if gen not in generators:
                        raise AlgebraMismatchError(f"generator {gen!r} not in {generators}")
                word = make_word(word)
                coeff = Scalar.coerce(coeff)
                if word in clean:
                    coeff = clean[word] + coeff
                if coeff:
                    clean[word] = coeff
                else:
                    clean.pop(word, None)
        self._terms = clean
        self.generators = tuple(generators)
        self._hash = None

    @classmethod
    def zero(cls, generators) -> OpExpr:
        return cls(None, generators)

    @classmethod
    def scalar(cls, value, generators) -> OpExpr:
        return cls({(): Scalar.coerce(value)}, generators)

    @classmethod
    def gen(cls, name: str, generators, power: int = 1) -> OpExpr:
        return cls({((name, power),): ONE}, generators)

    @property
    def terms(self) -> Mapping[Word, Scalar]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def as_scalar(self) -> Optional[Scalar]:
        """The coefficient if this is a pure multiple of the identity, else None."""
        if not self._terms:
            return Scalar()
        if set(self._terms) == {()}:
            return self._terms[()]
        return None

    def degree(self) -> int:
        return max((sum(abs(k) for _, k in w) for w in self._terms), default=0)

    def __eq__(self, other):
        if isinstance(other, OpExpr):
            return self.generators == other.generators and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.generators, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from .exprlang import render

        return f"OpExpr({render(self)!r})"

    def _check(self, other: OpExpr):
        if self.generators != other.generators:
            raise AlgebraMismatchError(
                f"generator sets differ: {self.generators} vs {other.generators}"
            )

    def __add__(self, other) -> OpExpr:
        if not isinstance(other, OpExpr):
            other = OpExpr.scalar(other, self.generators)
        self._check(other)
        out = dict(self._terms)
        for word, coeff in other._terms.items():
            out[word] = out[word] + coeff if word in out else coeff
        return OpExpr(out, self.generators)

    __radd__ = __add__

    def __neg__(self) -> OpExpr:
        return self.scale(Scalar.number(-1))

    def __sub__(self, other) -> OpExpr:
        if not isinstance(other, OpExpr):
            other = OpExpr.scalar(other, self.generators)
        return self + (-other)

    def __rsub__(self, other) -> OpExpr:
        return OpExpr.scalar(other, self.generators) - self

    def scale(self, s) -> OpExpr:
        s = Scalar.coerce(s)
        return OpExpr({w: c * s for w, c in self._terms.items()}, self.generators)

    def __mul__(self, other) -> OpExpr:
        if not isinstance(other, OpExpr):
            return self.scale(other)
        self._check(other)
        out: dict[Word, Scalar] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                word = make_word(w1 + w2)
                coeff = c1 * c2
                out[word] = out[word] + coeff if word in out else coeff
        return OpExpr(out, self.generators)

    def __rmul__(self, other) -> OpExpr:
        return self.scale(other)

    def __truediv__(self, other) -> OpExpr:
        if isinstance(other, OpExpr):
            s = other.as_scalar()
            if s is None:
                raise TypeError("division by an operator expression is not supported")
            other = s
        return self.scale(Scalar.coerce(other).inverse())

    def __pow__(self, k: int) -> OpExpr:
        if k < 0:
            raise ValueError("negative powers of expressions are not supported")
        out = OpExpr.scalar(1, self.generators)
        for _ in range(k):
            out = out * self
        return out


def expr_combine(a: OpExpr, b: OpExpr | None, op: str, s: Scalar | None = None) -> OpExpr:
    """Formal ``add``, ``sub``, ``mul`` or ``scale`` (by ``s``; ``b`` unused)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(s)
    raise ValueError(f"unknown combine op {op!r}")


def _find_redex(word: Word, spec: AlgebraSpec, strategy: str):
    n = len(word)
    positions = range(n) if strategy == "leftmost" else range(n - 1, -1, -1)
    for i in positions:
        gen, k = word[i]
        if strategy == "rightmost" and i + 1 < n and spec.rank(gen) > spec.rank(word[i + 1][0]):
            return ("swap", i)
        if spec.power_rule(gen, k) is not None:
            return ("power", i)
        if strategy == "leftmost" and i + 1 < n and spec.rank(gen) > spec.rank(word[i + 1][0]):
            return ("swap", i)
    return None


def _rewrite(word: Word, redex, spec: AlgebraSpec):
    kind, i = redex
    if kind == "power":
        gen, k = word[i]
        frags = spec.power_rule(gen, k).rewrite(k)
        tail = word[i + 1 :]
    else:
        (g, a), (h, b) = word[i], word[i + 1]
        rule = spec.swap_rule(g, h)
        if rule is None:
            raise ReductionBudgetError(
                f"algebra {spec.name!r} has no rule for out-of-order pair {g}*{h}"
            )
        frags = rule.rewrite(a, b)
        tail = word[i + 2 :]
    head = word[:i]
    for frag, coeff in frags:
        yield make_word(head + frag + tail), coeff


def is_canonical(word: Word, spec: AlgebraSpec) -> bool:
    return _find_redex(word, spec, "leftmost") is None


def reduce(
    e: OpExpr,
    spec: AlgebraSpec,
    strategy: str = "leftmost",
    budget: int = DEFAULT_BUDGET,
) -> tuple[OpExpr, int]:
    """Normal form of ``e`` together with the number of rule applications.

    ``strategy`` picks which redex inside a word is rewritten first; the
    result does not depend on it (the rule set is confluent).
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if e.generators != spec.names:
        raise AlgebraMismatchError(
            f"expression over {e.generators} cannot be normalized in algebra {spec.name!r}"
        )
    for word in e.terms:
        for gen, k in word:
            if k < 0 and not spec.generator(gen).invertible:
                raise AlgebraMismatchError(f"generator {gen!r} is not invertible")

    pending: dict[Word, Scalar] = dict(e.terms)
    done: dict[Word, Scalar] = {}
    steps = 0
    while pending:
        word, coeff = pending.popitem()
        redex = _find_redex(word, spec, strategy)
        if redex is None:
            total = done[word] + coeff if word in done else coeff
            if total:
                done[word] = total
            else:
                del done[word]
            continue
        steps += 1
        if steps > budget:
            raise ReductionBudgetError(f"normalization exceeded {budget} rule applications")
        for new_word, frag_coeff in _rewrite(word, redex, spec):
            c = coeff * frag_coeff
            if new_word in pending:
                c = pending[new_word] + c
                if not c:
                    del pending[new_word]
                    continue
            pending[new_word] = c
    return OpExpr(done, e.generators), steps


def normalize(e: OpExpr, spec: AlgebraSpec, strategy: str = "leftmost", budget: int = DEFAULT_BUDGET) -> OpExpr:
    return reduce(e, spec, strategy, budget)[0]


def equals(a: OpExpr, b: OpExpr, spec: AlgebraSpec) -> bool:
    return normalize(a - b, spec).is_zero()


def comm(a: OpExpr, b: OpExpr, spec: AlgebraSpec) -> OpExpr:
    return normalize(a * b - b * a, spec)


def acomm(a: OpExpr, b: OpExpr, spec: AlgebraSpec) -> OpExpr:
    return normalize(a * b + b * a, spec)


def sym(a: OpExpr, b: OpExpr, spec: AlgebraSpec) -> OpExpr:
    """Weyl-symmetrized product ``(ab + ba)/2``."""
    return normalize((a * b + b * a).scale(Scalar.number(1) / 2), spec)


_BRACKETS = {"comm": comm, "acomm": acomm, "sym": sym}


def brackets(a: OpExpr, b: OpExpr, kind: str, spec: AlgebraSpec) -> OpExpr:
    try:
        fn = _BRACKETS[kind]
    except KeyError:
        raise ValueError(f"unknown bracket kind {kind!r}") from None
    return fn(a, b, spec)


def adjoint(e: OpExpr, spec: AlgebraSpec) -> OpExpr:
    """Hermitian adjoint, assuming every generator is self-adjoint."""
    for g in spec.generators:
        if not g.self_adjoint:
            raise ValueError(f"generator {g.name!r} is not self-adjoint")
    flipped = {tuple(reversed(w)): c.conjugate() for w, c in e.terms.items()}
    return normalize(OpExpr(flipped, e.generators), spec)
