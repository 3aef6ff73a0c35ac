"""Verification sweeps shared by the ``check`` command and the acceptance tests.

Each suite expands into a list of independent cases.  A case is handled by a
module-level worker (so it can cross a process boundary) that returns the list
of failures it found.  Aggregation follows case order, so results do not depend
on the number of jobs.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

from .catalan import DROP, kostka_psi, m_route, n_route
from .character import (
    GradedCharacter,
    eval_q1,
    flip_q,
    is_symmetric,
    monomial,
    schur_expand,
    schur_poly,
    swap_positions,
)
from .demazure import c_op, demazure
from .lattice import Partition, longest_element, partitions_up_to
from .oracle import (
    complete_homogeneous,
    demazure_div,
    kostka_foulkes,
    raising_catalan,
    ssyt_schur,
)
from .root_ideal import (
    RootIdeal,
    check_dim_identities,
    enumerate_ideals,
    invariants,
    is_tame,
    w0psi,
)

SUITES = (
    "coincidence",
    "tame",
    "monotone",
    "positivity",
    "qnegativity",
    "operators",
    "identities",
    "oracles",
    "raising",
)


@dataclass
class CheckReport:
    suite: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0  # milliseconds

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "elapsed": round(self.elapsed, 3),
        }


def default_jobs() -> int:
    env = os.environ.get("CATALANIA_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _run(suite: str, worker: Callable, cases: Sequence, jobs: int | None) -> CheckReport:
    start = time.perf_counter()
    jobs = default_jobs() if jobs is None else max(1, jobs)
    if jobs == 1 or len(cases) < 2:
        results = [worker(c) for c in cases]
    else:
        chunk = max(1, len(cases) // (4 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, cases, chunksize=chunk))
    failures = [f for res in results for f in res]
    elapsed = (time.perf_counter() - start) * 1000
    return CheckReport(suite, len(cases), failures, elapsed)


def _fail(inputs, expected, actual) -> dict:
    return {"inputs": inputs, "expected": expected, "actual": actual}


def _show(x) -> str:
    if isinstance(x, GradedCharacter):
        return x.to_str()
    return repr(x)


def _psi_lambda_grid(ns: Sequence[int], max_weight: int):
    for n in ns:
        for psi in enumerate_ideals(n):
            for lam in partitions_up_to(max_weight, n):
                yield psi, lam


def _witness_ws(psi: RootIdeal):
    return [("w0", longest_element(psi.n)), ("w0psi", w0psi(psi))]


# -- identities ------------------------------------------------------------------


def _case_identities(psi: RootIdeal) -> list[dict]:
    out = []
    dims = check_dim_identities(psi)
    if not dims.ok:
        out.append(_fail({"psi": psi.to_str(), "n": psi.n}, "equal sides", dims.to_json()))
    inv = invariants(psi)
    n = psi.n
    for i in range(1, n):
        if not (psi.d(i) <= psi.d(i + 1) + 1 and i < psi.e(i) <= psi.e(i + 1) <= n + 1):
            out.append(_fail({"psi": psi.to_str(), "i": i}, "basic inequalities", list(inv.d)))
    for j in range(inv.ell):
        if inv.ii[j] >= inv.ee[j] or (j + 1 < inv.ell and inv.ii[j] >= inv.ii[j + 1]):
            out.append(_fail({"psi": psi.to_str(), "j": j + 1}, "ii increasing, ii < ee", inv.to_json()))
    if not is_tame(inv.w0psi, psi):
        out.append(_fail({"psi": psi.to_str()}, "w0psi is tame", False))
    return out


def check_identities(n: int, jobs: int | None = 1) -> CheckReport:
    ideals = list(enumerate_ideals(n))
    report = _run("identities", _case_identities, ideals, jobs)
    expected = comb(2 * n, n) // (n + 1)
    if len(ideals) != expected:
        report.failures.append(_fail({"n": n}, expected, len(ideals)))
    return report


# -- route comparisons -------------------------------------------------------------


def _case_coincidence(args) -> list[dict]:
    psi, lam = args
    out = []
    for name, w in _witness_ws(psi):
        a = m_route(psi, lam, w)
        b = n_route(psi, lam, w)
        inputs = {"n": psi.n, "psi": psi.to_str(), "lambda": lam.to_str(), "w": name}
        if a != b:
            out.append(_fail(inputs, "M == N", {"M": _show(a), "N": _show(b)}))
        c = m_route(psi, lam, w, convention=DROP)
        if c != a:
            out.append(_fail(inputs | {"check": "e=n+1 convention"}, _show(a), _show(c)))
    return out


def check_coincidence(n: int, max_weight: int, jobs: int | None = 1) -> CheckReport:
    cases = list(_psi_lambda_grid([n], max_weight))
    return _run("coincidence", _case_coincidence, cases, jobs)


def _case_tame(args) -> list[dict]:
    psi, lam = args
    out = []
    n = psi.n
    for name, w in _witness_ws(psi):
        base = n_route(psi, lam, w)
        for i in range(psi.e(1), n):
            other = n_route(psi, lam, w.times_s(i))
            if other != base:
                inputs = {"n": n, "psi": psi.to_str(), "lambda": lam.to_str(), "w": name, "i": i}
                out.append(_fail(inputs, _show(base), _show(other)))
    return out


def check_tame(n: int, max_weight: int, jobs: int | None = 1) -> CheckReport:
    cases = list(_psi_lambda_grid([n], max_weight))
    return _run("tame", _case_tame, cases, jobs)


def _case_monotone(args) -> list[dict]:
    small, big, lam = args
    w = longest_element(big.n)
    inputs = {"n": big.n, "psi_small": small.to_str(), "psi": big.to_str(), "lambda": lam.to_str()}
    a = n_route(small, lam, w)
    b = n_route(big, lam, w)
    out = []
    if not a.dominated_by(b):
        out.append(_fail(inputs | {"check": "gch"}, "coefficientwise <=", _show(b - a)))
    ka, kb = kostka_psi(small, lam), kostka_psi(big, lam)
    for mu in set(ka.coeffs) | set(kb.coeffs):
        pa, pb = ka[mu], kb[mu]
        if any(pa.get(e, 0) > pb.get(e, 0) for e in set(pa) | set(pb)):
            out.append(_fail(inputs | {"mu": mu.to_str()}, pb, pa))
    return out


def check_monotone(n: int, max_weight: int, jobs: int | None = 1) -> CheckReport:
    ideals = list(enumerate_ideals(n))
    pairs = [(a, b) for a in ideals for b in ideals if a <= b]
    cases = [(a, b, lam) for a, b in pairs for lam in partitions_up_to(max_weight, n)]
    return _run("monotone", _case_monotone, cases, jobs)


def _case_positivity(args) -> list[dict]:
    psi, lam = args
    out = []
    for mu, poly in kostka_psi(psi, lam).items():
        if any(c < 0 for c in poly.values()):
            inputs = {"n": psi.n, "psi": psi.to_str(), "lambda": lam.to_str(), "mu": mu.to_str()}
            out.append(_fail(inputs, "non-negative coefficients", poly))
    return out


def check_positivity(n: int, max_weight: int, jobs: int | None = 1) -> CheckReport:
    cases = list(_psi_lambda_grid(range(1, n + 1), max_weight))
    return _run("positivity", _case_positivity, cases, jobs)


def _case_qnegativity(args) -> list[dict]:
    psi, lam = args
    out = []
    level = lam[0] if lam else 0
    for name, w in _witness_ws(psi):
        for route, fn in (("M", m_route), ("N", n_route)):
            ch = fn(psi, lam, w)
            inputs = {"n": psi.n, "psi": psi.to_str(), "lambda": lam.to_str(), "w": name, "route": route}
            if any(e > 0 for e in ch.q_exponents()):
                out.append(_fail(inputs, "q-exponents <= 0", sorted(ch.q_exponents())))
            if ch.level != level:
                out.append(_fail(inputs | {"check": "level"}, level, ch.level))
            if name == "w0" and not is_symmetric(ch):
                out.append(_fail(inputs | {"check": "symmetry"}, True, False))
    return out


def check_qnegativity(n: int, max_weight: int, jobs: int | None = 1) -> CheckReport:
    cases = list(_psi_lambda_grid(range(1, n + 1), max_weight))
    return _run("qnegativity", _case_qnegativity, cases, jobs)


# -- operator laws ---------------------------------------------------------------


def random_character(rng: random.Random, n: int, level: int, terms: int = 3, spread: int = 2):
    data: dict = {}
    for _ in range(terms):
        gamma = tuple(rng.randint(-spread, spread) for _ in range(n))
        m = rng.randint(-spread, 0)
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        data[gamma + (m,)] = data.get(gamma + (m,), 0) + c
    return GradedCharacter(n, data, level)


def operator_law_failures(f: GradedCharacter) -> list[dict]:
    n = f.n
    out = []
    tag = {"n": n, "level": f.level, "f": f.to_str()}

    def expect(ok: bool, law: str, **extra):
        if not ok:
            out.append(_fail(tag | {"law": law} | extra, "identity holds", False))

    Df = {i: demazure(f, i) for i in range(n)}
    for i in range(n):
        expect(demazure(Df[i], i) == Df[i], "idempotence", i=i)
        expect(Df[i].level == f.level, "level", i=i)
    if n >= 3:
        for i in range(n):
            j = (i + 1) % n
            lhs = demazure(demazure(Df[i], j), i)
            rhs = demazure(demazure(Df[j], i), j)
            expect(lhs == rhs, "braid", i=i, j=j)
        for i, j in itertools.combinations(range(n), 2):
            if (j - i) % n not in (1, n - 1):
                expect(demazure(Df[j], i) == demazure(Df[i], j), "commute", i=i, j=j)
    for i in range(1, n):
        g = f + swap_positions(f, i)
        expect(demazure(g, i) == g, "fixed point", i=i)
        expect((Df[i] == f) == (swap_positions(f, i) == f), "fixed point iff symmetric", i=i)
        xi = tuple(int(k == i - 1) for k in range(n))
        xj = tuple(int(k == i) for k in range(n))
        h = monomial(xi) + monomial(xj) + monomial(tuple(a + b for a, b in zip(xi, xj)))
        expect(demazure(h * f, i) == h * Df[i], "product rule", i=i)
    for i in range(1, n):
        for e in range(i + 1, n + 1):
            C = c_op(f, i, e)
            for j in list(range(e, n)) + list(range(0, i - 1)):
                lhs = demazure(C, j)
                rhs = c_op(Df[(j + 1) % n], i, e)
                expect(lhs == rhs, "intertwining", i=i, e=e, j=j)
            if e < n:
                for e2 in list(range(e, n)) + list(range(0, i - 1)):
                    lhs = c_op(C, i - 1, e2)
                    rhs = c_op(c_op(f, i, e2 + 1), i, e)
                    expect(lhs == rhs, "C-shuffle", i=i, e=e, e2=e2)
    return out


def _case_operators(args) -> list[dict]:
    n, level, seed, count = args
    rng = random.Random(f"{seed}:{n}:{level}")
    out = []
    for _ in range(count):
        out.extend(operator_law_failures(random_character(rng, n, level)))
    return out


def _case_division(args) -> list[dict]:
    n, level, first = args
    out = []
    for rest in itertools.product(range(-3, 4), repeat=n - 1):
        gamma = (first,) + rest
        for m in range(-2, 3):
            f = monomial(gamma, m, level)
            for i in range(n):
                a, b = demazure(f, i), demazure_div(f, i)
                if a != b:
                    inputs = {"n": n, "gamma": list(gamma), "m": m, "level": level, "i": i}
                    out.append(_fail(inputs, _show(b), _show(a)))
    return out


def check_operators(n: int, seed: int = 0, per_level: int = 25, jobs: int | None = 1) -> CheckReport:
    cases = [(n, level, seed, per_level) for level in range(4)]
    report = _run("operators", _case_operators, cases, jobs)
    div = _run("operators", _case_division, [(n, lv, g) for lv in range(4) for g in range(-3, 4)], jobs)
    report.cases = per_level * 4 + div.cases
    report.failures.extend(div.failures)
    report.elapsed += div.elapsed
    return report


# -- oracles ---------------------------------------------------------------------


def _case_kostka_foulkes(lam: Partition, n: int) -> list[dict]:
    out = []
    psi = RootIdeal.full(n)
    got = kostka_psi(psi, lam)
    for mu in partitions_up_to(sum(lam), n):
        if sum(mu) != sum(lam):
            continue
        want = kostka_foulkes(mu, lam)
        if got[mu] != want:
            inputs = {"n": n, "lambda": lam.to_str(), "mu": mu.to_str()}
            out.append(_fail(inputs, want, got[mu]))
    extra = [mu for mu in got.coeffs if sum(mu) != sum(lam)]
    if extra:
        out.append(_fail({"n": n, "lambda": lam.to_str()}, "homogeneous", [m.to_str() for m in extra]))
    return out


def _case_q1(lam: Partition, n: int) -> list[dict]:
    H = flip_q(m_route(RootIdeal.full(n), lam, longest_element(n)))
    got = eval_q1(H).with_level(0)
    want = complete_homogeneous(lam, n)
    if got != want:
        return [_fail({"n": n, "lambda": lam.to_str()}, _show(want), _show(got))]
    return []


def _case_schur(mu: Partition, n: int) -> list[dict]:
    a, b = schur_poly(tuple(mu), n), ssyt_schur(mu, n)
    if a != b:
        return [_fail({"n": n, "mu": mu.to_str()}, _show(b), _show(a))]
    return []


def _case_oracles(args) -> list[dict]:
    kind, lam, n = args
    return {"kf": _case_kostka_foulkes, "q1": _case_q1, "schur": _case_schur}[kind](lam, n)


def kostka_foulkes_cases(n: int, max_weight: int):
    return [("kf", lam, n) for lam in partitions_up_to(max_weight, n)]


def q1_cases(n: int, max_weight: int):
    return [("q1", lam, n) for lam in partitions_up_to(max_weight, n)]


def check_oracles(n: int, max_weight: int, jobs: int | None = 1) -> CheckReport:
    cases = kostka_foulkes_cases(n, max_weight) + q1_cases(n, max_weight)
    cases += [("schur", mu, n) for mu in partitions_up_to(min(max_weight, 6), n)]
    return _run("oracles", _case_oracles, cases, jobs)


def _case_raising(args) -> list[dict]:
    psi, lam = args
    got = kostka_psi(psi, lam)
    maxdeg = max((e for p in got.coeffs.values() for e in p), default=0)
    bound = maxdeg + 2
    series = raising_catalan(psi, lam, bound).restricted(psi.n)
    inputs = {"n": psi.n, "psi": psi.to_str(), "lambda": lam.to_str(), "qbound": bound}
    out = []
    tail = {mu.to_str(): {e: c for e, c in p.items() if e > maxdeg} for mu, p in series.items()}
    tail = {k: v for k, v in tail.items() if v}
    if tail:
        out.append(_fail(inputs | {"check": "zero tail"}, {}, tail))
    head = {mu: {e: c for e, c in p.items() if e <= maxdeg} for mu, p in series.items()}
    head = {mu: p for mu, p in head.items() if p}
    if head != got.coeffs:
        out.append(_fail(inputs, repr(got), repr(head)))
    return out


def raising_ideals(n: int) -> list[RootIdeal]:
    return list(enumerate_ideals(n))


def check_raising(n: int, max_weight: int, jobs: int | None = 1) -> CheckReport:
    cases = [(psi, lam) for psi in raising_ideals(n) for lam in partitions_up_to(max_weight, n)]
    return _run("raising", _case_raising, cases, jobs)


def run_suite(
    suite: str, n: int, max_weight: int = 4, seed: int = 0, jobs: int | None = 1
) -> CheckReport:
    if suite == "identities":
        return check_identities(n, jobs)
    if suite == "operators":
        return check_operators(n, seed, jobs=jobs)
    table = {
        "coincidence": check_coincidence,
        "tame": check_tame,
        "monotone": check_monotone,
        "positivity": check_positivity,
        "qnegativity": check_qnegativity,
        "oracles": check_oracles,
        "raising": check_raising,
    }
    if suite not in table:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    return table[suite](n, max_weight, jobs)

