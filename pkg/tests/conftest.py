"""Shared helpers: seeded random exact values for deterministic test loops."""

from __future__ import annotations

import random
from fractions import Fraction

from quatlin import Operator4, Quaternion

# one verdict line per acceptance criterion, printed after the test run
ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)


def rand_fraction(rng: random.Random, num_bound: int = 100, den_bound: int = 20) -> Fraction:
    return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def rand_quaternion(rng: random.Random, num_bound: int = 100, den_bound: int = 20) -> Quaternion:
    return Quaternion(*(rand_fraction(rng, num_bound, den_bound) for _ in range(4)))


def rand_nonzero_quaternion(rng: random.Random, num_bound: int = 100, den_bound: int = 20) -> Quaternion:
    while True:
        q = rand_quaternion(rng, num_bound, den_bound)
        if not q.is_zero():
            return q


def rand_operator(rng: random.Random, num_bound: int = 100, den_bound: int = 20) -> Operator4:
    return Operator4(
        tuple(tuple(rand_fraction(rng, num_bound, den_bound) for _ in range(4)) for _ in range(4))
    )


def collinear(u: Quaternion, v: Quaternion) -> bool:
    """Exact proportionality test: all 2x2 cross-determinants vanish."""
    uc, vc = u.coords(), v.coords()
    return all(
        uc[a] * vc[b] - uc[b] * vc[a] == 0 for a in range(4) for b in range(a + 1, 4)
    )
