"""Self-checks exposed through ``hyperzeta verify``.

Each suite returns a list of ``Check`` rows. Sizes are scaled by ``limit`` so
that the default run stays quick; the test suite runs the full ranges.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import gcd

from ._arith import divisors, gcd_inf, square_unit_residues
from .dirichlet import X_func, count_squares, prop45_residual, theorem11_coeffs
from .enumeration import (M_direct, M_valuation, bruteforce_am, coset_intersection_card,
                          coset_union_count, prop43_flags, prop44_check)
from .squareclass import (SUPPORTED_B, EulerEvalConfig, explicit_zeta_coeffs,
                          h_eval, x_via_omega)

ORACLE_B = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 24)
SUITES = ("oracle", "valuation", "identities", "closedforms")
DEFAULT_SEED = 20240611


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def as_row(self) -> dict:
        return {"suite": self.suite, "check": self.name,
                "passed": self.passed, "detail": self.detail}


def oracle_suite(limit: int = 60, seed: int = DEFAULT_SEED) -> list[Check]:
    """Brute force, coset union and the coefficient formula agree for m <= limit."""
    out = []
    for B in ORACLE_B:
        coeffs = theorem11_coeffs(B, limit)
        bad = [(A, m) for A in range(1, B + 1) if gcd(A, B) == 1
               for m in range(1, limit + 1)
               if not bruteforce_am(A, B, m) == coset_union_count(m, A, B) == coeffs[m]]
        out.append(Check("oracle", f"B={B}", not bad,
                         f"first mismatch (A, m) = {bad[0]}" if bad else f"m <= {limit}"))
    return out


def _random_tuple(rng: random.Random, kmax: int, dmax: int):
    k = rng.randint(1, kmax)
    return tuple(sorted(rng.sample(range(1, dmax + 1), k)))


def valuation_suite(limit: int = 60, seed: int = DEFAULT_SEED) -> list[Check]:
    rng = random.Random(seed)
    trials = 50 * limit
    bad = []
    for _ in range(trials):
        dt = _random_tuple(rng, 5, 10**4)
        B = rng.randint(1, 1000)
        if M_direct(B, dt) != M_valuation(B, dt):
            bad.append((B, dt))
    out = [Check("valuation", "M_direct == M_valuation", not bad,
                 f"{trials} random tuples" + (f"; first failure {bad[0]}" if bad else ""))]

    bad = []
    for m in range(1, min(limit, 100) + 1):
        tuples = [dt for k in (1, 2, 3) for dt in combinations(divisors(m), k)]
        for B in range(1, 13):
            M = {dt: M_direct(B, dt) for dt in tuples}
            for A in range(1, B + 1):
                if gcd(A, B) != 1:
                    continue
                for dt in tuples:
                    card = coset_intersection_card(m, dt, A, B)
                    if (card > 0) != (m % M[dt] == 0) or card not in (0, gcd(*dt)):
                        bad.append((m, dt, A, B))
    out.append(Check("valuation", "nonempty intersection iff M | m", not bad,
                     f"m <= {min(limit, 100)}" + (f"; first failure {bad[0]}" if bad else "")))
    return out


def identities_suite(limit: int = 60, seed: int = DEFAULT_SEED) -> list[Check]:
    out = []
    mmax = 20 * limit
    bad = [(b, m) for b in range(1, 25) for m in range(1, mmax + 1)
           if sum(X_func(b, t, m) for t in square_unit_residues(b)) != count_squares(b, m)]
    out.append(Check("identities", "sum_t X = count_squares", not bad, f"b <= 24, m <= {mmax}"))

    bad = [(b, t, m) for b in (5, 7, 9, 16, 24) for t in square_unit_residues(b)
           for m in range(1, mmax + 1) if x_via_omega(b, t, m) != X_func(b, t, m)]
    out.append(Check("identities", "x_via_omega == X_func", not bad, f"m <= {mmax}"))

    m43 = min(2 * limit, 120)
    bad43, bad44 = [], []
    for b in range(1, 25):
        for m in range(1, m43 + 1):
            for k in (1, 2, 3):
                for dt in combinations(divisors(m), k):
                    if len(set(prop43_flags(b, b, m, dt))) != 1:
                        bad43.append((b, m, dt))
            for delta in divisors(gcd_inf(m, b)):
                for t in square_unit_residues(b):
                    if not prop44_check(b, m, delta, t):
                        bad44.append((b, m, delta, t))
    out.append(Check("identities", "three equivalent conditions on C(B; d)", not bad43,
                     f"b <= 24, m <= {m43}"))
    out.append(Check("identities", "union count splits off delta", not bad44,
                     f"b <= 24, m <= {m43}"))

    # K large enough that the truncated tail (scaled by F(b, s)) is negligible.
    worst = max(prop45_residual(b, 3.0, 10**9) for b in (2, 3, 4, 5, 6, 10, 12))
    out.append(Check("identities", "b-part local identity at s=3", worst <= 1e-6,
                     f"max residual {worst:.3e} at K = 1e9"))
    return out


def closedforms_suite(limit: int = 60, seed: int = DEFAULT_SEED) -> list[Check]:
    out = []
    N = 10 * limit
    for B in SUPPORTED_B:
        ok = explicit_zeta_coeffs(B, N) == theorem11_coeffs(B, N)
        out.append(Check("closedforms", f"explicit B={B}", ok, f"N = {N}"))
    cfg = EulerEvalConfig(2.0, 10**5)
    for b in range(1, 25):
        if len(square_unit_residues(b)) <= 3:
            diff = abs(h_eval(b, cfg, "general") - h_eval(b, cfg, "closed"))
            out.append(Check("closedforms", f"H_{b} modes", diff <= 1e-9, f"|diff| = {diff:.3e}"))
    return out


_RUNNERS = {
    "oracle": oracle_suite,
    "valuation": valuation_suite,
    "identities": identities_suite,
    "closedforms": closedforms_suite,
}


def run_suite(name: str, limit: int = 60, seed: int = DEFAULT_SEED) -> list[Check]:
    names = SUITES if name == "all" else (name,)
    checks = []
    for n in names:
        checks.extend(_RUNNERS[n](limit=limit, seed=seed))
    return checks
