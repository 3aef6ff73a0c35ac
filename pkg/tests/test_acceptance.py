"""Acceptance criteria 1-11, each at its stated size and time bound.

A one-line PASS/FAIL summary per criterion is printed in the terminal summary
(and to stdout with ``-s``).
"""

import json
import time
from contextlib import contextmanager
from math import comb

from catalania import cli
from catalania.catalan import kostka_psi, m_route
from catalania.character import eval_q1, flip_q
from catalania.checks import (
    check_coincidence,
    check_identities,
    check_monotone,
    check_operators,
    check_positivity,
    check_qnegativity,
    check_raising,
    check_tame,
)
from catalania.lattice import longest_element, partitions_of, partitions_up_to
from catalania.oracle import complete_homogeneous, kostka_foulkes
from catalania.root_ideal import RootIdeal, enumerate_ideals

from conftest import ACCEPTANCE_LINES


@contextmanager
def criterion(number: int, title: str, limit_s: float):
    start = time.perf_counter()
    status, detail = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed >= limit_s:
            detail = f"too slow: {elapsed:.2f}s >= {limit_s}s"
            raise AssertionError(detail)
        status, detail = "PASS", f"{elapsed:.2f}s (limit {limit_s}s)"
    except BaseException as exc:
        detail = detail or f"{type(exc).__name__}: {str(exc)[:200]}"
        raise
    finally:
        line = f"criterion {number:2d} {status}  {title}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)


def assert_clean(report):
    assert report.ok, json.dumps(report.failures[:3], default=str)
    assert report.cases > 0


def test_c01_example_golden(capsys):
    with criterion(1, "ideal-info golden for n=6, psi=4,4,1", 1.0):
        code = cli.main(["ideal-info", "--n", "6", "--psi", "4,4,1"])
        assert code == 0
        rec = json.loads(capsys.readouterr().out)
        assert rec["d"] == [2, 1, 3, 3, 2, 1]
        assert rec["e"][:4] == [3, 3, 6, 7]
        assert rec["I"] == [2, 3]
        assert rec["ell"] == 2
        assert rec["ee"] == [3, 6]
        assert rec["ii"] == [2, 3]


def test_c02_kostka_foulkes_equivalence():
    with criterion(2, "K^{Delta+} equals charge K_{mu,lam}(q)", 30.0):
        checked = 0
        for n, top in ((3, 6), (4, 5)):
            full = RootIdeal.full(n)
            for lam in partitions_up_to(top, n):
                got = kostka_psi(full, lam)
                # no global q-shift: the diagonal coefficient is exactly 1
                assert got[lam] == {0: 1}, (n, lam, got[lam])
                mus = set(partitions_of(sum(lam), n))
                assert set(got.partitions()) <= mus
                for mu in mus:
                    assert got[mu] == kostka_foulkes(mu, lam), (n, lam, mu)
                    checked += 1
        assert checked > 0


def test_c03_route_coincidence():
    with criterion(3, "M route == N route for w0 and w0psi", 60.0):
        for n in (3, 4):
            assert len(list(enumerate_ideals(n))) == {3: 5, 4: 14}[n]
            assert_clean(check_coincidence(n, 4))


def test_c04_tame_invariance():
    with criterion(4, "N route invariant under w -> w s_i, e1 <= i < n", 60.0):
        for n in (3, 4):
            assert_clean(check_tame(n, 4))


def test_c05_monotonicity():
    with criterion(5, "nested ideals give coefficientwise larger gch and K", 30.0):
        assert_clean(check_monotone(3, 4))


def test_c06_q_negativity_and_level():
    with criterion(6, "q-exponents <= 0 and level = lam_1 over n <= 4", 60.0):
        assert_clean(check_qnegativity(4, 4))


def test_c07_positivity():
    with criterion(7, "K^psi coefficients non-negative over n <= 4", 60.0):
        assert_clean(check_positivity(4, 4))


def test_c08_operator_laws():
    with criterion(8, "operator laws and division oracle at n=3,4", 30.0):
        for n in (3, 4):
            report = check_operators(n, seed=0, per_level=25)
            assert_clean(report)
            assert report.cases >= 100


def test_c09_dimension_identities():
    with criterion(9, "dimension identities up to n=7, Catalan counts to n=8", 5.0):
        for n in range(1, 8):
            report = check_identities(n)
            assert_clean(report)
            assert report.cases == comb(2 * n, n) // (n + 1)
        assert check_identities(7).cases == 429
        for n in range(1, 9):
            assert sum(1 for _ in enumerate_ideals(n)) == comb(2 * n, n) // (n + 1)


def test_c10_raising_operator_cross_check():
    with criterion(10, "raising-operator expansion matches at n=3", 60.0):
        names = {psi.to_str() for psi in enumerate_ideals(3)}
        # the listed ideals: empty, full, rows (2,1) (the full ideal again at n=3)
        assert {"", "2,1"} <= names
        assert_clean(check_raising(3, 4))


def test_c11_q_equals_one():
    with criterion(11, "eval_q1 H(Delta+; lam; w0) == h_lam at n=3", 10.0):
        full = RootIdeal.full(3)
        w0 = longest_element(3)
        for lam in partitions_up_to(5, 3):
            H = flip_q(m_route(full, lam, w0))
            assert eval_q1(H).with_level(0) == complete_homogeneous(lam, 3), lam

