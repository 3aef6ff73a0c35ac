"""Root ideals of GL(n) stored as right-justified row lengths (Dyck paths)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .lattice import Permutation, descent, longest_in_interval


class NotAnIdeal(ValueError):
    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        super().__init__(message)
        self.witness = witness


class OutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class RootIdeal:
    """Row i holds the roots eps_i - eps_j with j > n - rows[i-1]."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if len(rows) > self.n:
            raise OutOfRange(f"{len(rows)} rows given for n={self.n}")
        rows = rows + (0,) * (self.n - len(rows))
        for i, r in enumerate(rows, start=1):
            if not 0 <= r <= self.n - i:
                raise NotAnIdeal(
                    f"row {i} has length {r}, must lie in 0..{self.n - i} (staircase bound)"
                )
        for i in range(1, self.n):
            if rows[i - 1] < rows[i]:
                j = self.n - rows[i] + 1
                raise NotAnIdeal(
                    f"row {i + 1} is longer than row {i}: root ({i + 1},{j}) needs ({i},{j})",
                    witness=(i, j),
                )
        object.__setattr__(self, "rows", rows)

    @classmethod
    def empty(cls, n: int) -> "RootIdeal":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "RootIdeal":
        """All of the positive roots."""
        return cls(n, tuple(range(n - 1, -1, -1)))

    @classmethod
    def parse(cls, n: int, text: str) -> "RootIdeal":
        text = text.strip()
        rows = tuple(int(tok) for tok in text.split(",")) if text else ()
        return cls(n, rows)

    def to_str(self) -> str:
        rows = list(self.rows)
        while rows and rows[-1] == 0:
            rows.pop()
        return ",".join(map(str, rows))

    def roots(self) -> frozenset[tuple[int, int]]:
        n = self.n
        return frozenset(
            (i, j) for i, r in enumerate(self.rows, start=1) for j in range(n - r + 1, n + 1)
        )

    def __contains__(self, root) -> bool:
        i, j = root
        return 1 <= i < j <= self.n and j > self.n - self.rows[i - 1]

    def __le__(self, other: "RootIdeal") -> bool:
        return self.n == other.n and all(a <= b for a, b in zip(self.rows, other.rows))

    def __len__(self) -> int:
        return sum(self.rows)

    # Invariants. d_i, e_i are 1-indexed; d(i) for i = n is 1, e(n+1) = n+1.
    def d(self, i: int) -> int:
        return (self.n - i + 1) - self.rows[i - 1]

    def e(self, i: int) -> int:
        if i == 0:
            return 1
        if i == self.n + 1:
            return self.n + 1
        return i + self.d(i)

    def invariants(self) -> "Invariants":
        return invariants(self)


def from_roots(n: int, pairs: Iterable[tuple[int, int]], validate: bool = True) -> RootIdeal:
    pairs = {(int(i), int(j)) for i, j in pairs}
    for i, j in pairs:
        if not 1 <= i < j <= n:
            raise OutOfRange(f"({i},{j}) is not a positive root for n={n}")
    if validate:
        for i, j in sorted(pairs):
            for i2, j2 in ((i - 1, j), (i, j + 1)):
                if i2 >= 1 and j2 <= n and (i2, j2) not in pairs:
                    raise NotAnIdeal(
                        f"root ({i},{j}) requires ({i2},{j2})", witness=(i2, j2)
                    )
    rows = [0] * n
    for i, _ in pairs:
        rows[i - 1] += 1
    psi = RootIdeal(n, tuple(rows))
    if psi.roots() != pairs:
        raise NotAnIdeal("rows are not right-justified")
    return psi


@dataclass(frozen=True)
class Invariants:
    d: tuple[int, ...]
    e: tuple[int, ...]
    I: tuple[int, ...]
    ell: int
    ee: tuple[int, ...]
    ii: tuple[int, ...]
    w0psi: Permutation
    size: int
    area: int

    def to_json(self) -> dict:
        from .lattice import reduced_word

        return {
            "d": list(self.d),
            "e": list(self.e),
            "I": list(self.I),
            "ell": self.ell,
            "ee": list(self.ee),
            "ii": list(self.ii),
            "size": self.size,
            "area": self.area,
            "w0psi": list(reduced_word(self.w0psi)),
        }


def w0psi(psi: RootIdeal) -> Permutation:
    """Longest element of <s_{e_1}, ..., s_{n-1}>."""
    e1 = psi.e(1)
    if e1 >= psi.n:
        return Permutation.identity(psi.n)
    return longest_in_interval(psi.n, e1, psi.n - 1)


def invariants(psi: RootIdeal) -> Invariants:
    n = psi.n
    d = tuple(psi.d(i) for i in range(1, n + 1))
    e = tuple(psi.e(i) for i in range(1, n + 1))
    I = tuple(i for i in range(1, n) if e[i - 1] <= n and d[i - 1] <= d[i])
    ee = tuple(sorted({e[i - 1] for i in I}))
    ii = tuple(next(i for i in I if e[i - 1] == v) for v in ee)
    size = len(psi)
    return Invariants(
        d=d,
        e=e,
        I=I,
        ell=len(I),
        ee=ee,
        ii=ii,
        w0psi=w0psi(psi),
        size=size,
        area=n * (n - 1) // 2 - size,
    )


def is_tame(w: Permutation, psi: RootIdeal) -> bool:
    """w has a descent at every i with d_1(psi) < i < n."""
    return all(descent(w, i) for i in range(psi.d(1) + 1, psi.n))


def enumerate_ideals(n: int) -> Iterator[RootIdeal]:
    """All root ideals of rank n, lex order on rows."""

    def rec(i: int, bound: int, prefix: tuple[int, ...]):
        if i > n:
            yield RootIdeal(n, prefix)
            return
        for r in range(min(bound, n - i) + 1):
            yield from rec(i + 1, r, prefix + (r,))

    yield from rec(1, n - 1, ())


@dataclass(frozen=True)
class DimIdentities:
    lhsPlong: int
    rhsPlong: int
    lhsCPsi: int
    rhsCPsi: int
    lhsDim: int
    rhsDim: int

    @property
    def ok(self) -> bool:
        return (
            self.lhsPlong == self.rhsPlong
            and self.lhsCPsi == self.rhsCPsi
            and self.lhsDim == self.rhsDim
        )

    def to_json(self) -> dict:
        return {
            "lhsPlong": self.lhsPlong,
            "rhsPlong": self.rhsPlong,
            "lhsCPsi": self.lhsCPsi,
            "rhsCPsi": self.rhsCPsi,
            "lhsDim": self.lhsDim,
            "rhsDim": self.rhsDim,
            "ok": self.ok,
        }


def check_dim_identities(psi: RootIdeal) -> DimIdentities:
    """Length of w0psi, size of psi and the dimension bookkeeping, both sides each."""
    n = psi.n
    inv = invariants(psi)
    e1, d1 = psi.e(1), psi.d(1)
    top = n * (n - 1) // 2
    return DimIdentities(
        lhsPlong=inv.w0psi.length(),
        rhsPlong=(n - e1) * (n - d1) // 2,
        lhsCPsi=inv.size,
        rhsCPsi=sum(n + 1 - psi.e(i) for i in range(1, n + 1)),
        lhsDim=top + inv.size,
        rhsDim=2 * top - inv.area,
    )
