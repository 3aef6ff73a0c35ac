"""Weights, affine reflections, permutations and words for GL(n).

Conventions: epsilon indices are 1-based everywhere in the public API.
Affine indices live in ``I_af = {0, 1, ..., n-1}``; index 0 is frequently
identified with n (so ``Lambda_0 == Lambda_n`` and ``m_0 == m_n``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]


class Partition(tuple):
    """Weakly decreasing tuple of non-negative integers, trailing zeros dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"not a partition: {tuple(parts)}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {tuple(parts)}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{tuple(self)} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls()
        return cls(int(tok) for tok in text.split(","))

    def to_str(self) -> str:
        return ",".join(map(str, self))


def partitions_of(total: int, max_parts: int, max_part: int | None = None):
    """Partitions of ``total`` with at most ``max_parts`` parts, reverse lex order."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield Partition()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions_of(total - first, max_parts - 1, first):
            yield Partition((first,) + tuple(rest))


def partitions_up_to(max_size: int, max_parts: int):
    for total in range(max_size + 1):
        yield from partitions_of(total, max_parts)


@dataclass(frozen=True)
class AffineWeight:
    """gamma in the epsilon basis, m the coefficient of delta, level that of wp."""

    gamma: tuple[int, ...]
    m: int = 0
    level: int = 0

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(int(g) for g in self.gamma))

    @property
    def n(self) -> int:
        return len(self.gamma)


def _check_affine_index(n: int, i: int) -> None:
    if not 0 <= i < n:
        raise IndexError(f"affine index {i} outside 0..{n - 1}")


def coroot_pairing(w: AffineWeight, i: int) -> int:
    """<alpha_i, Lambda> + delta_{i0} Lambda(K)."""
    n = w.n
    _check_affine_index(n, i)
    g = w.gamma
    if i == 0:
        return w.level + g[n - 1] - g[0]
    return g[i - 1] - g[i]


def simple_root(n: int, i: int) -> AffineWeight:
    """alpha_i as an affine weight; alpha_0 = eps_n - eps_1 + delta."""
    _check_affine_index(n, i)
    gamma = [0] * n
    if i == 0:
        gamma[n - 1] += 1
        gamma[0] -= 1
        return AffineWeight(tuple(gamma), 1, 0)
    gamma[i - 1] = 1
    gamma[i] = -1
    return AffineWeight(tuple(gamma), 0, 0)


def reflect(w: AffineWeight, i: int) -> AffineWeight:
    p = coroot_pairing(w, i)
    a = simple_root(w.n, i)
    gamma = tuple(g - p * d for g, d in zip(w.gamma, a.gamma))
    return AffineWeight(gamma, w.m - p * a.m, w.level)


def fundamental_weight(n: int, j: int) -> tuple[int, ...]:
    """varpi_j = eps_1 + ... + eps_j; j = 0 is read as j = n."""
    if j == 0:
        j = n
    if not 1 <= j <= n:
        raise IndexError(f"fundamental weight index {j} outside 0..{n}")
    return (1,) * j + (0,) * (n - j)


def m_vector(lam: Sequence[int], n: int) -> tuple[int, ...]:
    """(lam_1 - lam_2, ..., lam_{n-1} - lam_n, lam_n)."""
    lam = Partition(lam).padded(n)
    return tuple(lam[j] - lam[j + 1] for j in range(n - 1)) + (lam[n - 1],) if n else ()


def m_index(lam: Sequence[int], n: int, j: int) -> int:
    """m_j(lam) with m_0 identified with m_n."""
    if j == 0:
        j = n
    return m_vector(lam, n)[j - 1]


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation: ``images[k-1] = w(k)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(a) for a in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_word(cls, n: int, word: Iterable[int]) -> "Permutation":
        """Product s_{i_1} s_{i_2} ... s_{i_l} of finite simple transpositions."""
        w = cls.identity(n)
        for i in word:
            w = w.times_s(i)
        return w

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self(other(k)) for k in range(1, self.n + 1)))

    def times_s(self, i: int) -> "Permutation":
        """w * s_i, i.e. swap the entries in positions i and i+1."""
        if not 1 <= i < self.n:
            raise IndexError(f"simple reflection s_{i} outside 1..{self.n - 1}")
        im = list(self.images)
        im[i - 1], im[i] = im[i], im[i - 1]
        return Permutation(tuple(im))

    def length(self) -> int:
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def descents(self) -> list[int]:
        return [i for i in range(1, self.n) if self.images[i - 1] > self.images[i]]

    def to_str(self) -> str:
        return ",".join(map(str, self.images))


def descent(w: Permutation, i: int) -> bool:
    if not 1 <= i < w.n:
        raise IndexError(f"descent position {i} outside 1..{w.n - 1}")
    return w.images[i - 1] > w.images[i]


def reduced_word(w: Permutation) -> Word:
    """Deterministic reduced word: peel off the smallest right descent each time."""
    letters: list[int] = []
    while True:
        ds = w.descents()
        if not ds:
            break
        i = ds[0]
        letters.append(i)
        w = w.times_s(i)
    return tuple(reversed(letters))


def longest_element(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def longest_in_interval(n: int, a: int, b: int) -> Permutation:
    """Longest element of <s_a, ..., s_b>: reverses a..b+1 and fixes the rest."""
    if not 1 <= a <= b < n:
        raise ValueError(f"invalid interval [{a}, {b}] for n={n}")
    im = list(range(1, n + 1))
    im[a - 1 : b + 1] = reversed(im[a - 1 : b + 1])
    return Permutation(tuple(im))


def check_word(n: int, word: Iterable[int]) -> Word:
    word = tuple(int(i) for i in word)
    for i in word:
        _check_affine_index(n, i)
    return word
