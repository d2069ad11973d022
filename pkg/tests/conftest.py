import random

import pytest

from lefschetz import Surface, twist_matrix


@pytest.fixture
def rng():
    return random.Random(20261016)


def random_class(rng, surface, bound=2):
    return surface.vector(rng.randint(-bound, bound) for _ in range(surface.rank))


def random_twist_product(rng, surface, length=4, bound=2):
    m = surface.identity()
    for _ in range(length):
        m = twist_matrix(random_class(rng, surface, bound), rng.choice((1, -1))) @ m
    return m


def gcd_of_minors(rows, k):
    """Determinantal divisor d_k: gcd of all k x k minors (brute force)."""
    from itertools import combinations
    from math import gcd

    from sympy import Matrix

    m, n = len(rows), len(rows[0]) if rows else 0
    out = 0
    for r in combinations(range(m), k):
        for c in combinations(range(n), k):
            out = gcd(out, int(Matrix([[rows[i][j] for j in c] for i in r]).det()))
    return out


def invariant_factors_by_minors(rows):
    """Invariant factors d_k / d_{k-1} from determinantal divisors; independent of any elimination."""
    m, n = len(rows), len(rows[0]) if rows else 0
    factors, prev = [], 1
    for k in range(1, min(m, n) + 1):
        dk = gcd_of_minors(rows, k)
        if dk == 0:
            factors += [0] * (min(m, n) - k + 1)
            break
        factors.append(dk // prev)
        prev = dk
    return factors


ACCEPTANCE_RESULTS = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        ACCEPTANCE_RESULTS.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in ACCEPTANCE_RESULTS:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")
