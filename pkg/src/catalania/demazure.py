"""Level-aware Demazure operators on graded characters and the C-functors.

Words are in functor order: ``(i_1, ..., i_l)`` means ``D_{i_1} o ... o D_{i_l}``,
so the last letter acts first.  For example ``demazure_word(f, (1, 0))`` is
``D_1(D_0(f))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .character import GradedCharacter, monomial, twist_Lambda
from .lattice import AffineWeight, Partition, Word, m_index


def _check_index(n: int, i: int) -> None:
    if not 0 <= i < n:
        raise IndexError(f"affine index {i} outside 0..{n - 1}")


def demazure(f: GradedCharacter, i: int) -> GradedCharacter:
    """D_i via the alpha_i-string formula, term by term."""
    n = f.n
    _check_index(n, i)
    out: dict = {}
    get = out.get
    if i == 0:
        a, b, dm = 0, n - 1, -1  # e^{-alpha_0} = q^{-1} x_1 / x_n
        level = f.level
    else:
        a, b, dm = i, i - 1, 0  # e^{-alpha_i} = x_{i+1} / x_i
        level = 0
    for key, c in f.terms.items():
        p = level + key[b] - key[a] if i == 0 else key[b] - key[a]
        if p == -1:
            continue
        k = list(key)
        if p >= 0:
            for _ in range(p + 1):
                t = tuple(k)
                v = get(t, 0) + c
                if v:
                    out[t] = v
                else:
                    del out[t]
                # step by -alpha_i
                k[a] += 1
                k[b] -= 1
                k[-1] += dm
        else:
            for _ in range(-p - 1):
                # step by +alpha_i
                k[a] -= 1
                k[b] += 1
                k[-1] -= dm
                t = tuple(k)
                v = get(t, 0) - c
                if v:
                    out[t] = v
                else:
                    del out[t]
    return GradedCharacter._raw(n, out, f.level)


def demazure_word(f: GradedCharacter, word: Iterable[int]) -> GradedCharacter:
    word = tuple(word)
    for i in word:
        _check_index(f.n, i)
    for i in reversed(word):
        f = demazure(f, i)
    return f


def c_word(n: int, i: int, e: int) -> Word:
    """Index string of C_{i,e} in functor order: i-1, i-2, ..., e (mod n).

    Length i+n-e when i <= e <= n, i-e when 0 < e < i, and i-1 for the
    extension e = n+1 (the string stops at D_1).  e = 0 is read as e = n.
    """
    if not 0 <= i < n:
        raise IndexError(f"C-functor index i={i} outside 1..{n - 1}")
    if not 0 <= e <= n + 1:
        raise IndexError(f"C-functor index e={e} outside 1..{n + 1}")
    if e == 0:
        e = n
    if e == n + 1:
        length = i - 1
    elif e >= i:
        length = i + n - e
    else:
        length = i - e
    return tuple((i - 1 - t) % n for t in range(length))


def c_op(f: GradedCharacter, i: int, e: int) -> GradedCharacter:
    return demazure_word(f, c_word(f.n, i, e))


def c_op_twisted(f: GradedCharacter, i: int, e: int, lam: Sequence[int]) -> GradedCharacter:
    """C_{i,e}(lam): twist by m_e(lam) Lambda_e, then apply C_{i,e}."""
    n = f.n
    if not 1 <= e <= n:
        raise IndexError(f"twisted C-functor needs 1 <= e <= n, got {e}")
    f = twist_Lambda(f, e % n, m_index(lam, n, e))
    return c_op(f, i, e)


def demazure_character(weight: AffineWeight, word: Iterable[int]) -> GradedCharacter:
    return demazure_word(monomial(weight.gamma, weight.m, weight.level), word)


@dataclass(frozen=True)
class Apply:
    i: int


@dataclass(frozen=True)
class Twist:
    j: int
    mult: int


@dataclass(frozen=True)
class OperatorPlan:
    """A composite operator; ``steps`` run first to last."""

    steps: tuple[Union[Apply, Twist], ...] = ()

    def then(self, *steps: Union[Apply, Twist]) -> "OperatorPlan":
        return OperatorPlan(self.steps + steps)

    def word(self) -> Word:
        """Letters of the Apply steps in functor order (last applied first in the word)."""
        return tuple(s.i for s in reversed(self.steps) if isinstance(s, Apply))

    def run(self, f: GradedCharacter) -> GradedCharacter:
        for s in self.steps:
            if isinstance(s, Apply):
                f = demazure(f, s.i)
            else:
                if s.mult < 0:
                    raise ValueError(f"negative twist {s.mult}")
                f = twist_Lambda(f, s.j, s.mult)
        return f


def apply_word_plan(word: Iterable[int]) -> OperatorPlan:
    return OperatorPlan(tuple(Apply(i) for i in reversed(tuple(word))))


def key_character(lam: Sequence[int], n: int, word: Iterable[int], level: int | None = None):
    """D_word applied to x^lam at the given level (default lam_1)."""
    lam = Partition(lam)
    level = (lam[0] if lam else 0) if level is None else level
    return demazure_word(monomial(lam.padded(n), 0, level), word)
