"""Brute-force oracles, kept independent of the Demazure engine.

* SSYT enumeration and the charge statistic (Kostka-Foulkes polynomials)
* Demazure operators in divided-difference form, via exact division
* Schur straightening and the raising-operator expansion of Catalan functions
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .character import GradedCharacter, QPoly, qpoly_add
from .lattice import Partition
from .root_ideal import RootIdeal


class DivisionNotExact(ArithmeticError):
    pass


@dataclass(frozen=True)
class Tableau:
    """Rows in English notation: row 0 on top, entries weakly increasing."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def content(self) -> tuple[int, ...]:
        top = max((v for r in self.rows for v in r), default=0)
        counts = [0] * top
        for r in self.rows:
            for v in r:
                counts[v - 1] += 1
        return tuple(counts)

    def is_semistandard(self) -> bool:
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if len(lower) > len(upper) or any(lower[c] <= upper[c] for c in range(len(lower))):
                return False
        return True

    def reading_word(self) -> tuple[int, ...]:
        """Rows from bottom to top, each read left to right."""
        return tuple(v for r in reversed(self.rows) for v in r)


def _horizontal_strips(inner: tuple[int, ...], outer: tuple[int, ...], size: int):
    """Shapes nu with inner <= nu <= outer, nu/inner a horizontal strip of given size."""
    k = len(outer)

    def rec(row: int, left: int, acc: list[int]):
        if row == k:
            if left == 0:
                yield tuple(acc)
            return
        hi = outer[row]
        if row > 0:
            hi = min(hi, inner[row - 1])  # strip: at most one box per column
        lo = inner[row]
        for v in range(min(hi, lo + left), lo - 1, -1):
            acc.append(v)
            yield from rec(row + 1, left - (v - lo), acc)
            acc.pop()

    yield from rec(0, size, [])


def ssyt_enumerate(shape: Sequence[int], content: Sequence[int]) -> list[Tableau]:
    shape = Partition(shape)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise ValueError("content must be non-negative")
    if sum(shape) != sum(content):
        raise ValueError(f"|shape|={sum(shape)} but |content|={sum(content)}")
    k = len(shape)
    outer = tuple(shape)
    results: list[Tableau] = []

    def rec(letter: int, cur: tuple[int, ...], rows: list[list[int]]):
        if letter > len(content):
            if cur == outer:
                results.append(Tableau(tuple(tuple(r) for r in rows)))
            return
        for nxt in _horizontal_strips(cur, outer, content[letter - 1]):
            new_rows = [r + [letter] * (b - a) for r, a, b in zip(rows, cur, nxt)]
            rec(letter + 1, nxt, new_rows)

    rec(1, (0,) * k, [[] for _ in range(k)])
    return results


def _charge_standard(word: Sequence[int]) -> int:
    """Charge of a word with each letter 1..r exactly once."""
    pos = {v: p for p, v in enumerate(word)}
    index, total = 0, 0
    for v in range(2, len(word) + 1):
        # v is read after v-1 when scanning leftward; wrapping costs one
        if pos[v] > pos[v - 1]:
            index += 1
        total += index
    return total


def word_charge(word: Sequence[int]) -> int:
    """Charge of a word of partition content, via standard subword extraction."""
    word = list(word)
    counts = [word.count(v) for v in range(1, max(word, default=0) + 1)]
    if any(a < b for a, b in zip(counts, counts[1:])):
        raise ValueError(f"content {tuple(counts)} is not a partition")
    alive = list(range(len(word)))
    total = 0
    while alive:
        top = max(word[p] for p in alive)
        chosen = []
        start = len(alive)  # scan leftward from the right end
        for v in range(1, top + 1):
            for step in range(1, len(alive) + 1):
                idx = (start - step) % len(alive)
                if word[alive[idx]] == v:
                    chosen.append(alive[idx])
                    start = idx
                    break
        chosen_set = set(chosen)
        sub = [word[p] for p in alive if p in chosen_set]
        total += _charge_standard(sub)
        alive = [p for p in alive if p not in chosen_set]
    return total


def charge(t: Tableau) -> int:
    return word_charge(t.reading_word())


def kostka_foulkes(mu: Sequence[int], lam: Sequence[int]) -> QPoly:
    """K_{mu,lam}(q) = sum over SSYT of shape mu and content lam of q^charge."""
    lam = Partition(lam)
    mu = Partition(mu)
    if sum(mu) != sum(lam):
        return {}
    out: QPoly = {}
    for t in ssyt_enumerate(mu, lam):
        out = qpoly_add(out, {charge(t): 1})
    return out


def ssyt_schur(mu: Sequence[int], n: int) -> GradedCharacter:
    """s_mu(x_1..x_n) as the generating function of SSYT with entries <= n."""
    mu = Partition(mu)
    terms: dict = {}
    if len(mu) <= n:
        size = sum(mu)
        for content in itertools.product(range(size + 1), repeat=n):
            if sum(content) != size:
                continue
            cnt = len(ssyt_enumerate(mu, content))
            if cnt:
                terms[tuple(content) + (0,)] = cnt
    return GradedCharacter(n, terms, 0)


def complete_homogeneous(lam: Sequence[int], n: int) -> GradedCharacter:
    """h_lam in n variables: product over parts of the sum of all monomials of that degree."""
    out = GradedCharacter.one(n)
    for part in Partition(lam):
        terms = {}
        for combo in itertools.combinations_with_replacement(range(n), part):
            gamma = [0] * n
            for v in combo:
                gamma[v] += 1
            terms[tuple(gamma) + (0,)] = 1
        out = out * GradedCharacter(n, terms, 0)
    return out


# -- division-form Demazure operators ------------------------------------------


def _affine_reflect_key(key: tuple, n: int, i: int, level: int) -> tuple:
    k = list(key)
    if i == 0:
        p = level + k[n - 1] - k[0]
        # subtract p * alpha_0, alpha_0 = eps_n - eps_1 + delta
        k[n - 1] -= p
        k[0] += p
        k[-1] -= p
    else:
        k[i - 1], k[i] = k[i], k[i - 1]
    return tuple(k)


def _neg_alpha(n: int, i: int) -> tuple:
    d = [0] * (n + 1)
    if i == 0:
        d[0] += 1
        d[n - 1] -= 1
        d[-1] = -1
    else:
        d[i - 1] = -1
        d[i] = 1
    return tuple(d)


def demazure_div(f: GradedCharacter, i: int) -> GradedCharacter:
    """(f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}) by exact division."""
    n = f.n
    if not 0 <= i < n:
        raise IndexError(f"affine index {i} outside 0..{n - 1}")
    beta = _neg_alpha(n, i)
    num: dict = dict(f.terms)
    for key, c in f.terms.items():
        r = _affine_reflect_key(key, n, i, f.level)
        r = tuple(a + b for a, b in zip(r, beta))
        num[r] = num.get(r, 0) - c
    num = {k: c for k, c in num.items() if c}

    # Along each beta-line, Q - e^beta Q = num gives Q_t = sum_{s <= t} num_s.
    # The line position is read off a coordinate that beta moves by exactly 1.
    coord = -1 if i == 0 else i
    step = beta[coord]

    def line_of(key):
        t = key[coord] * step
        return tuple(a - t * b for a, b in zip(key, beta)), t

    lines: dict = {}
    for key, c in num.items():
        base, t = line_of(key)
        lines.setdefault(base, {})[t] = c
    out: dict = {}
    for base, coeffs in lines.items():
        if sum(coeffs.values()) != 0:
            raise DivisionNotExact(f"numerator does not vanish along the line through {base}")
        ts = sorted(coeffs)
        run = 0
        for t in range(ts[0], ts[-1]):
            run += coeffs.get(t, 0)
            if run:
                out[tuple(a + t * b for a, b in zip(base, beta))] = run
    return GradedCharacter(n, out, f.level)


# -- straightening and the raising-operator route --------------------------------


def straighten(gamma: Sequence[int]) -> tuple[int, Partition] | None:
    """s_gamma = sign * s_mu, or None when s_gamma vanishes."""
    L = len(gamma)
    shifted = [g + (L - 1 - k) for k, g in enumerate(gamma)]
    if any(v < 0 for v in shifted) or len(set(shifted)) < L:
        return None
    order = sorted(range(L), key=lambda k: -shifted[k])
    # sign of the sorting permutation via inversion count
    inv = sum(1 for a in range(L) for b in range(a + 1, L) if order[a] > order[b])
    ordered = [shifted[k] for k in order]
    mu = Partition(v - (L - 1 - k) for k, v in enumerate(ordered))
    return (-1 if inv % 2 else 1), mu


@dataclass
class SchurSeries:
    coeffs: dict = field(default_factory=dict)  # Partition -> QPoly
    qbound: int = 0

    def restricted(self, n: int) -> dict:
        return {mu: p for mu, p in self.coeffs.items() if len(mu) <= n and p}


def _multisets(count: int, size: int) -> Iterator[tuple[int, ...]]:
    """Composition vectors (one counter per root) summing to ``size``."""
    if count == 0:
        if size == 0:
            yield ()
        return
    for first in range(size, -1, -1):
        for rest in _multisets(count - 1, size - first):
            yield (first,) + rest


def raising_catalan(psi: RootIdeal, lam: Sequence[int], qbound: int) -> SchurSeries:
    """prod_{(i,j) in psi} (1 - q R_ij)^{-1} s_lam, truncated at q-degree qbound."""
    if qbound < 0:
        raise ValueError("qbound must be non-negative")
    n = psi.n
    base = Partition(lam).padded(n)
    roots = sorted(psi.roots())
    coeffs: dict = {}
    for d in range(qbound + 1):
        for counts in _multisets(len(roots), d):
            gamma = list(base)
            for (i, j), c in zip(roots, counts):
                gamma[i - 1] += c
                gamma[j - 1] -= c
            hit = straighten(gamma)
            if hit is None:
                continue
            sign, mu = hit
            poly = qpoly_add(coeffs.get(mu, {}), {d: sign})
            if poly:
                coeffs[mu] = poly
            else:
                coeffs.pop(mu, None)
    return SchurSeries(coeffs, qbound)
