"""Graded characters: integer Laurent polynomials in x_1..x_n and q with a level tag.

A term ``c * q^m * x^gamma`` is stored under the key ``gamma + (m,)``.
The serialization order sorts keys by gamma (lex, descending) and then by m
(descending), so JSON output is byte-stable.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .lattice import Partition, fundamental_weight

QPoly = dict  # exponent -> nonzero integer coefficient


class RankMismatch(ValueError):
    pass


class NotSymmetric(ValueError):
    pass


class NegativeExponent(ValueError):
    pass


class GradedCharacter:
    __slots__ = ("n", "level", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[tuple, int] | None = None, level: int = 0):
        self.n = int(n)
        self.level = int(level)
        clean = {}
        for key, c in (terms or {}).items():
            if c:
                if len(key) != self.n + 1:
                    raise RankMismatch(f"key {key} does not have length {self.n + 1}")
                clean[tuple(key)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict, level: int) -> "GradedCharacter":
        # trusted constructor: terms already zero-free with correct keys
        obj = cls.__new__(cls)
        obj.n, obj.level, obj._terms, obj._hash = n, level, terms, None
        return obj

    @classmethod
    def zero(cls, n: int, level: int = 0) -> "GradedCharacter":
        return cls._raw(n, {}, level)

    @classmethod
    def one(cls, n: int, level: int = 0) -> "GradedCharacter":
        return cls._raw(n, {(0,) * (n + 1): 1}, level)

    # -- mapping-ish access ------------------------------------------------
    @property
    def terms(self) -> Mapping[tuple, int]:
        return self._terms

    def items(self) -> Iterator[tuple[tuple[int, ...], int, int]]:
        """Yield (gamma, m, coefficient) in canonical order."""
        for key in sorted(self._terms, key=_order_key):
            yield key[:-1], key[-1], self._terms[key]

    def coeff(self, gamma: Iterable[int], m: int = 0) -> int:
        return self._terms.get(tuple(gamma) + (m,), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        if self.n != other.n or self._terms != other._terms:
            return False
        # the zero character carries no meaningful level
        return self.level == other.level or not self._terms

    def __hash__(self):
        if self._hash is None:
            lvl = self.level if self._terms else None
            self._hash = hash((self.n, lvl, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"GradedCharacter(n={self.n}, level={self.level}, {self.to_str()})"

    def to_str(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for gamma, m, c in self.items():
            mono = "*".join(
                f"x{k}" if g == 1 else f"x{k}^{g}" for k, g in enumerate(gamma, start=1) if g
            )
            if m:
                qm = "q" if m == 1 else f"q^{m}"
                mono = qm + ("*" + mono if mono else "")
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ")

    # -- ring structure ----------------------------------------------------
    def _check(self, other: "GradedCharacter") -> None:
        if self.n != other.n:
            raise RankMismatch(f"rank {self.n} vs {other.n}")

    def __add__(self, other: "GradedCharacter") -> "GradedCharacter":
        self._check(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            v = terms.get(k, 0) + c
            if v:
                terms[k] = v
            else:
                terms.pop(k, None)
        level = self.level if self._terms else other.level
        return GradedCharacter._raw(self.n, terms, level)

    def __neg__(self) -> "GradedCharacter":
        return GradedCharacter._raw(self.n, {k: -c for k, c in self._terms.items()}, self.level)

    def __sub__(self, other: "GradedCharacter") -> "GradedCharacter":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return GradedCharacter.zero(self.n, self.level)
            return GradedCharacter._raw(
                self.n, {k: c * other for k, c in self._terms.items()}, self.level
            )
        self._check(other)
        terms: dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                v = terms.get(k, 0) + c1 * c2
                if v:
                    terms[k] = v
                else:
                    del terms[k]
        return GradedCharacter._raw(self.n, terms, self.level + other.level)

    __rmul__ = __mul__

    def shift(self, gamma: Iterable[int], m: int = 0, level: int = 0) -> "GradedCharacter":
        """Multiply by the monomial q^m x^gamma and add ``level`` to the level."""
        delta = tuple(gamma) + (m,)
        if len(delta) != self.n + 1:
            raise RankMismatch(f"shift of length {len(delta) - 1} on rank {self.n}")
        terms = {tuple(a + b for a, b in zip(k, delta)): c for k, c in self._terms.items()}
        return GradedCharacter._raw(self.n, terms, self.level + level)

    def with_level(self, level: int) -> "GradedCharacter":
        return GradedCharacter._raw(self.n, self._terms, level)

    # -- comparisons and queries -------------------------------------------
    def dominated_by(self, other: "GradedCharacter") -> bool:
        """Coefficientwise self <= other."""
        self._check(other)
        keys = set(self._terms) | set(other._terms)
        return all(self._terms.get(k, 0) <= other._terms.get(k, 0) for k in keys)

    def q_exponents(self) -> set[int]:
        return {k[-1] for k in self._terms}

    def x_degrees(self) -> set[int]:
        return {sum(k[:-1]) for k in self._terms}

    # -- JSON --------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "n": self.n,
            "level": self.level,
            "terms": [{"x": list(g), "q": m, "c": str(c)} for g, m, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "GradedCharacter":
        n = int(data["n"])
        terms: dict = {}
        for t in data["terms"]:
            key = tuple(int(v) for v in t["x"]) + (int(t["q"]),)
            terms[key] = terms.get(key, 0) + int(t["c"])
        return cls(n, terms, int(data.get("level", 0)))


def _order_key(key: tuple) -> tuple:
    return tuple(-v for v in key)


def monomial(gamma: Iterable[int], m: int = 0, level: int = 0, coeff: int = 1) -> GradedCharacter:
    gamma = tuple(int(g) for g in gamma)
    return GradedCharacter(len(gamma), {gamma + (int(m),): coeff}, level)


def add(f: GradedCharacter, g: GradedCharacter) -> GradedCharacter:
    return f + g


def mul(f: GradedCharacter, g: GradedCharacter) -> GradedCharacter:
    return f * g


def negate(f: GradedCharacter) -> GradedCharacter:
    return -f


def twist_Lambda(f: GradedCharacter, j: int, mult: int) -> GradedCharacter:
    """Tensor with C_{mult * Lambda_j}; j = 0 denotes Lambda_0 = varpi_n + wp."""
    if mult < 0:
        raise ValueError(f"negative twist multiplicity {mult}")
    if not 0 <= j <= f.n:
        raise IndexError(f"twist index {j} outside 0..{f.n - 1}")
    if mult == 0:
        return f
    gamma = tuple(mult * v for v in fundamental_weight(f.n, j))
    return f.shift(gamma, 0, mult)


def flip_q(f: GradedCharacter) -> GradedCharacter:
    terms = {k[:-1] + (-k[-1],): c for k, c in f.terms.items()}
    return GradedCharacter._raw(f.n, terms, f.level)


def eval_q1(f: GradedCharacter) -> GradedCharacter:
    terms: dict = {}
    for k, c in f.terms.items():
        key = k[:-1] + (0,)
        terms[key] = terms.get(key, 0) + c
    return GradedCharacter(f.n, terms, f.level)


def swap_positions(f: GradedCharacter, i: int) -> GradedCharacter:
    """Apply the finite reflection s_i (1-based) to exponents; q untouched."""
    terms = {}
    for k, c in f.terms.items():
        k = list(k)
        k[i - 1], k[i] = k[i], k[i - 1]
        terms[tuple(k)] = c
    return GradedCharacter._raw(f.n, terms, f.level)


def is_symmetric(f: GradedCharacter) -> bool:
    return all(swap_positions(f, i) == f for i in range(1, f.n))


@lru_cache(maxsize=None)
def schur_poly(mu: tuple, n: int) -> GradedCharacter:
    """s_mu(x_1..x_n) as the full Demazure character of x^mu."""
    from .demazure import demazure_word
    from .lattice import longest_element, reduced_word

    lam = Partition(mu).padded(n)
    return demazure_word(monomial(lam), reduced_word(longest_element(n)))


# -- univariate q-polynomials -------------------------------------------------


def qpoly_add(a: Mapping[int, int], b: Mapping[int, int], scale: int = 1) -> QPoly:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + scale * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def qpoly_eval(a: Mapping[int, int], q: int) -> int:
    return sum(c * q**e for e, c in a.items())


def qpoly_to_json(a: Mapping[int, int]) -> dict:
    return {str(e): c for e, c in sorted(a.items())}


def qpoly_from_json(data: Mapping[str, int]) -> QPoly:
    return {int(e): int(c) for e, c in data.items() if int(c)}


def qpoly_str(a: Mapping[int, int]) -> str:
    if not a:
        return "0"
    parts = []
    for e, c in sorted(a.items()):
        mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)


class SchurExpansion:
    """Map from partitions to Laurent polynomials in q (zero entries dropped)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping | None = None):
        clean = {}
        for mu, poly in (coeffs or {}).items():
            if isinstance(poly, int):
                poly = {0: poly}
            poly = {int(e): int(c) for e, c in poly.items() if c}
            if poly:
                clean[Partition(mu)] = poly
        self.coeffs: dict[Partition, QPoly] = clean

    def __getitem__(self, mu) -> QPoly:
        return self.coeffs.get(Partition(mu), {})

    def __iter__(self):
        return iter(self.partitions())

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, SchurExpansion):
            return self.coeffs == other.coeffs
        if isinstance(other, Mapping):
            return self == SchurExpansion(other)
        return NotImplemented

    def __repr__(self):
        inner = ", ".join(f"{tuple(mu)}: {qpoly_str(p)}" for mu, p in self.items())
        return f"SchurExpansion({{{inner}}})"

    def partitions(self) -> list[Partition]:
        return sorted(self.coeffs, key=lambda mu: (-sum(mu), tuple(-p for p in mu)))

    def items(self):
        for mu in self.partitions():
            yield mu, self.coeffs[mu]

    def to_json(self) -> list[dict]:
        return [{"mu": mu.to_str(), "coeff": qpoly_to_json(p)} for mu, p in self.items()]

    @classmethod
    def from_json(cls, data) -> "SchurExpansion":
        return cls({Partition.parse(r["mu"]): qpoly_from_json(r["coeff"]) for r in data})

    def to_character(self, n: int) -> GradedCharacter:
        """Sum of c_mu(q) s_mu in n variables, level 0."""
        out = GradedCharacter.zero(n)
        for mu, poly in self.coeffs.items():
            s = schur_poly(tuple(mu), n)
            for e, c in poly.items():
                out = out + s.shift((0,) * n, e) * c
        return out


def schur_expand(f: GradedCharacter) -> SchurExpansion:
    """Peel off lex-greatest dominant monomials against Schur polynomials."""
    n = f.n
    for k in f.terms:
        if any(v < 0 for v in k[:-1]):
            raise NegativeExponent(f"exponent {k[:-1]} is not polynomial")
    if not is_symmetric(f):
        raise NotSymmetric("character is not symmetric in x")
    rem: dict[tuple, QPoly] = {}
    for k, c in f.terms.items():
        rem.setdefault(k[:-1], {})[k[-1]] = c
    out: dict[Partition, QPoly] = {}
    while rem:
        top = max(rem)
        poly = rem[top]
        mu = Partition(top)  # top is dominant since rem stays symmetric
        out[mu] = dict(poly)
        s = schur_poly(tuple(mu), n)
        for key, sc in s.terms.items():
            gamma = key[:-1]
            cur = qpoly_add(rem.get(gamma, {}), {e: sc * c for e, c in poly.items()}, -1)
            if cur:
                rem[gamma] = cur
            else:
                rem.pop(gamma, None)
    return SchurExpansion(out)
