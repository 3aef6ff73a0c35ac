"""Catalan functions H(Psi; lam; w) through the two Demazure-operator routes.

Route M nests one C-functor per row of the ideal (innermost row n-1); route N
groups the C-functors by the distinct values of e_i over I(Psi).  Neither
route reuses the other's bookkeeping.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Sequence, Union

from .character import (
    GradedCharacter,
    SchurExpansion,
    flip_q,
    is_symmetric,
    schur_expand,
    twist_Lambda,
)
from .demazure import c_op, c_op_twisted, demazure_word
from .lattice import (
    Partition,
    Permutation,
    longest_element,
    m_vector,
    reduced_word,
)
from .root_ideal import RootIdeal, invariants, is_tame, w0psi

ROUTES = ("M", "N")
# conventions for the C_{i,n+1} factors of route M
EXTEND, DROP = "extend", "drop"


class NotTame(UserWarning):
    """w is not Psi-tame; route equivalence is not guaranteed."""


class NotTameError(ValueError):
    pass


def _prepare(psi: RootIdeal, lam) -> Partition:
    lam = Partition(lam)
    if len(lam) > psi.n:
        raise ValueError(f"{tuple(lam)} has more than n={psi.n} parts")
    return lam


def _apply_w(f: GradedCharacter, w: Permutation) -> GradedCharacter:
    if w.n != f.n:
        raise ValueError(f"permutation of rank {w.n} on a rank {f.n} character")
    return demazure_word(f, reduced_word(w))


def m_route(psi: RootIdeal, lam, w: Permutation, convention: str = EXTEND) -> GradedCharacter:
    """gch of M^Psi_w(lam), unflipped.

    Inside out: start from m_n(lam) Lambda_0, then for i = n-1 .. 1 apply
    C_{i, e_i(Psi)} and twist by m_i(lam) Lambda_i; finish with D_w.
    ``convention`` controls rows with e_i = n+1: "extend" applies
    D_{i-1} ... D_1, "drop" skips the factor.
    """
    lam = _prepare(psi, lam)
    n = psi.n
    m = m_vector(lam, n)
    f = twist_Lambda(GradedCharacter.one(n), 0, m[n - 1])
    for i in range(n - 1, 0, -1):
        e = psi.e(i)
        if not (e == n + 1 and convention == DROP):
            f = c_op(f, i, e)
        f = twist_Lambda(f, i, m[i - 1])
    return _apply_w(f, w)


def n_route(psi: RootIdeal, lam, w: Permutation) -> GradedCharacter:
    """gch of N^Psi_w(lam), unflipped.

    The grouped functors C^Psi_j(lam) for j = ell .. 1 act on the unit
    character, each running e = ee_{j+1}-1 down to ee_j with i = ii_j;
    then twist by lam(Psi) = sum_{t <= d_1} m_t Lambda_t and apply D_w.
    """
    lam = _prepare(psi, lam)
    n = psi.n
    inv = invariants(psi)
    ee = inv.ee + (n + 1,)
    f = GradedCharacter.one(n)
    for j in range(inv.ell, 0, -1):
        i = inv.ii[j - 1]
        for e in range(ee[j] - 1, ee[j - 1] - 1, -1):
            f = c_op_twisted(f, i, e, lam)
    m = m_vector(lam, n)
    # lam(Psi) reads d(Psi)_1 as d_1(Psi)
    for t in range(1, psi.d(1) + 1):
        f = twist_Lambda(f, t % n, m[t - 1])
    return _apply_w(f, w)


def resolve_w(w: Union[str, Permutation, Sequence[int], None], psi: RootIdeal) -> Permutation:
    """Accepts a Permutation, "w0", "w0psi", "e"/"id", one-line "3,1,2" or a word "s1 s2"."""
    n = psi.n
    if w is None:
        return longest_element(n)
    if isinstance(w, Permutation):
        if w.n != n:
            raise ValueError(f"permutation of rank {w.n} for n={n}")
        return w
    if not isinstance(w, str):
        return Permutation(tuple(w))
    text = w.strip()
    low = text.lower()
    if low in ("w0", "w_0"):
        return longest_element(n)
    if low in ("w0psi", "w0^psi"):
        return w0psi(psi)
    if low in ("e", "id", "identity", ""):
        return Permutation.identity(n)
    if "s" in low:
        letters = [int(tok) for tok in low.replace("s", " ").split()]
        if any(i == 0 for i in letters):
            raise ValueError("w must lie in the finite symmetric group (no s0)")
        return Permutation.from_word(n, letters)
    perm = Permutation(tuple(int(tok) for tok in text.split(",")))
    if perm.n != n:
        raise ValueError(f"permutation of rank {perm.n} for n={n}")
    return perm


@dataclass
class CatalanResult:
    character: GradedCharacter
    H: GradedCharacter
    route: str
    psi: RootIdeal
    lam: Partition
    w: Permutation
    tame: bool
    schur: SchurExpansion | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def level(self) -> int:
        return self.character.level

    def to_json(self) -> dict:
        return {
            "meta": {
                "n": self.psi.n,
                "psi": self.psi.to_str(),
                "lambda": self.lam.to_str(),
                "w": self.w.to_str(),
                "w_word": list(reduced_word(self.w)),
                "route": self.route,
                "level": self.level,
                "tame": self.tame,
                "notes": list(self.notes),
            },
            "character": self.character.to_json(),
            "H": self.H.to_json(),
            "schur": None if self.schur is None else self.schur.to_json(),
        }


def catalan_H(psi: RootIdeal, lam, w="w0", route: str = "M", strict_tame: bool = False):
    lam = _prepare(psi, lam)
    perm = resolve_w(w, psi)
    tame = is_tame(perm, psi)
    notes = []
    if not tame:
        msg = f"w={perm.to_str()} is not Psi-tame"
        if strict_tame:
            raise NotTameError(msg)
        warnings.warn(msg, NotTame, stacklevel=2)
        notes.append("w is not Psi-tame: the two routes are not guaranteed to agree")
    if route == "M":
        ch = m_route(psi, lam, perm)
    elif route == "N":
        ch = n_route(psi, lam, perm)
    else:
        raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")
    H = flip_q(ch)
    schur = None
    if is_symmetric(H) and all(v >= 0 for k in H.terms for v in k[:-1]):
        schur = schur_expand(H)
    else:
        notes.append("not symmetric in x; Schur expansion skipped")
    return CatalanResult(ch, H, route, psi, lam, perm, tame, schur, notes)


def kostka_psi(psi: RootIdeal, lam) -> SchurExpansion:
    """{mu: K^Psi_{mu,lam}(q)} read off H(Psi; lam; w0)."""
    lam = _prepare(psi, lam)
    H = flip_q(m_route(psi, lam, longest_element(psi.n)))
    return schur_expand(H)
