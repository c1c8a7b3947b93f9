"""End-to-end verification suite over bundled reference data.

Twelve independent checks recompute the library's main constructions
from scratch and compare them against the fixtures: the fundamental
solution table, Pell-sequence consistency, the odd-index splitting, the
power-of-two product formula, prime classification against the residue
table, equivalence of the two representability routes, the companion
scan with its pinned poison primes, the bundled quadruple solutions,
the exponential growth bound, interval admissibility, the Robinson
criterion, and the quartic identity with its round trip.

Each check returns pass/fail plus a diagnostic rather than raising, so
a full run always reports every criterion.  Time limits are generous
envelopes, not benchmarks.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .arith import is_prime, small_primes, v2
from .fixtures import (
    FUNDAMENTAL_SOLUTIONS,
    INERT_RESIDUES,
    RESIDUE_MODULUS,
    SPLIT_RESIDUES,
    load_solutions,
)
from .growth import check_growth_lower_bound, check_matiyasevich, check_robinson, interval_even
from .normform import FormVariant, PrimeClass, classify_prime, decide_by_factoring
from .pell import HEEGNER_DS, nth, odd_index_split, params, power_of_two_index
from .quartic import pell_from_solution, quartic_spec, solution_from_pell, _unfolded_sides
from .scan import scan_d2

__all__ = ["CheckResult", "all_checks", "run_check", "run_all"]


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    elapsed_s: float
    limit_s: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" -- {self.detail}" if self.detail and not self.passed else ""
        return (
            f"C{self.number:02d} {self.name:<30s} {status}"
            f" ({self.elapsed_s:6.2f}s / {self.limit_s:.0f}s){tail}"
        )


def _check_fundamental_table() -> tuple[bool, str]:
    for d, (x1, y1) in FUNDAMENTAL_SOLUTIONS.items():
        pr = params(d)
        if (pr.x1, pr.y1) != (x1, y1):
            return False, f"d={d}: params gives ({pr.x1}, {pr.y1}), table has ({x1}, {y1})"
        if x1 * x1 - d * y1 * y1 != 1:
            return False, f"d={d}: table entry fails the equation"
    return True, ""


_CONSISTENCY_KS = list(range(65)) + [127, 128, 255, 256, 511, 512, 1023, 1024]


def _check_pell_consistency() -> tuple[bool, str]:
    for d in HEEGNER_DS:
        pr = params(d)
        xs, ys = [1, pr.x1], [0, pr.y1]
        t = 2 * pr.x1
        for _ in range(2, 1025):
            xs.append(t * xs[-1] - xs[-2])
            ys.append(t * ys[-1] - ys[-2])
        for k in _CONSISTENCY_KS:
            p = nth(d, k)
            if (p.x, p.y) != (xs[k], ys[k]):
                return False, f"d={d}, k={k}: doubling route disagrees with recurrence"
            if p.x * p.x - d * p.y * p.y != 1:
                return False, f"d={d}, k={k}: invariant violated"
    return True, ""


def _check_odd_index_split() -> tuple[bool, str]:
    for d in HEEGNER_DS:
        pr = params(d)
        ys = [0, pr.y1]
        t = 2 * pr.x1
        for _ in range(2, 602):
            ys.append(t * ys[-1] - ys[-2])
        for ell in range(301):
            sp = odd_index_split(d, ell)
            if pr.prefactor * sp.v * sp.w != ys[2 * ell + 1]:
                return False, f"d={d}, ell={ell}: split product misses y"
            if sp.y_next != ys[2 * ell + 1]:
                return False, f"d={d}, ell={ell}: y_next mismatch"
            if math.gcd(sp.v, sp.w) != 1:
                return False, f"d={d}, ell={ell}: split factors share a divisor"
    return True, ""


def _check_product_formula() -> tuple[bool, str]:
    for d in (2, 19):
        for m in range(1, 11):
            for h in (1, 3, 5):
                got = power_of_two_index(d, m, h)
                want = nth(d, (1 << m) * h).y
                if got != want:
                    return False, f"d={d}, m={m}, h={h}: product formula mismatch"
        for m in range(1, 13):
            val = v2(nth(d, 1 << m).y)
            if val != m + 1:
                return False, f"d={d}, m={m}: v2(y) = {val}, expected {m + 1}"
    return True, ""


def _check_prime_classification() -> tuple[bool, str]:
    primes = small_primes(10**5 - 1)
    for d, mod in RESIDUE_MODULUS.items():
        inert, split = INERT_RESIDUES[d], SPLIT_RESIDUES[d]
        for p in primes:
            r = p % mod
            if r in inert:
                want = PrimeClass.INERT
            elif r in split:
                want = PrimeClass.SPLIT
            else:
                want = PrimeClass.RAMIFIED
            got = classify_prime(d, p)
            if got != want:
                return False, f"d={d}, p={p}: classified {got.value}, table says {want.value}"
    return True, ""


def _brute_value_set(variant: FormVariant, bound: int) -> set[int]:
    # direct enumeration, kept independent of the form's own helpers
    out: set[int] = set()
    d = variant.d
    if variant.is_pure_shape:
        t = 0
        while d * t * t <= bound:
            w = 0
            while w * w + d * t * t <= bound:
                if w or t:
                    out.add(w * w + d * t * t)
                w += 1
            t += 1
        return out
    q = 4 * variant.c - 1
    t = 0
    while q * t * t <= 4 * bound:
        s = t % 2
        while s * s + q * t * t <= 4 * bound:
            if s or t:
                out.add((s * s + q * t * t) // 4)
            s += 2
        t += 1
    return out


def _factor_route_matches(variant: FormVariant, bound: int, brute: set[int]) -> Optional[str]:
    for m in range(1, bound + 1):
        verdict = decide_by_factoring(variant, m)
        if verdict.is_unknown:
            return f"{variant.label()}, m={m}: factor route returned unknown"
        if verdict.is_representable != (m in brute):
            return (
                f"{variant.label()}, m={m}: factor route says "
                f"{verdict.kind}, brute force says {'yes' if m in brute else 'no'}"
            )
        if verdict.is_representable and variant.value(*verdict.witness) != m:
            return f"{variant.label()}, m={m}: witness does not evaluate to m"
    return None


def _check_representability_equivalence() -> tuple[bool, str]:
    bound = 20000
    for d in (2, 3, 7, 11, 19, 43):
        variant = FormVariant.norm(d)
        err = _factor_route_matches(variant, bound, _brute_value_set(variant, bound))
        if err:
            return False, err
    norm3 = _brute_value_set(FormVariant.norm(3), bound)
    pure3 = _brute_value_set(FormVariant.pure(3), bound)
    if norm3 != pure3:
        diff = sorted(norm3 ^ pure3)[:5]
        return False, f"d=3 norm and pure value sets differ, e.g. {diff}"
    err = _factor_route_matches(FormVariant.pure(3), bound, pure3)
    if err:
        return False, err
    return True, ""


_PINNED_POISONS = ((4, "A", 5), (8, "B", 103), (12, "A", 29), (16, "A", 5))


def _check_companion_scan() -> tuple[bool, str]:
    reports = {r.index: r for r in scan_d2((4, 100))}
    for n, rep in reports.items():
        if rep.overall.kind == "both_representable":
            return False, f"n={n}: scan found both sides representable"
        if (n % 4 == 0) != rep.prefilter_passed:
            return False, f"n={n}: prefilter disagrees with n mod 4"
    for n, side, p in _PINNED_POISONS:
        verdict = reports[n].side_verdicts.get(side)
        if verdict is None or not verdict.is_not_representable:
            return False, f"{side}_{n}: expected a refutation"
        if verdict.poison != p:
            return False, f"{side}_{n}: poison {verdict.poison}, expected {p}"
        if verdict.exponent % 2 != 1:
            return False, f"{side}_{n}: poison exponent {verdict.exponent} is even"
    b20 = reports[20].side_verdicts.get("B")
    if b20 is None or not b20.is_not_representable:
        return False, "B_20: expected a refutation"
    if b20.poison % 8 != 7 or not is_prime(b20.poison):
        return False, f"B_20: poison {b20.poison} is not a prime congruent to 7 mod 8"
    return True, ""


def _check_solution_tuples() -> tuple[bool, str]:
    sols = load_solutions()
    if len(sols) != 3 or any(d != 2 for d, _ in sols):
        return False, "bundled file must hold exactly three d=2 solutions"
    spec = quartic_spec(2)
    indices = []
    for i, (_, tup) in enumerate(sols):
        pair = pell_from_solution(spec, tup)
        indices.append(pair.n)
    if set(indices[:2]) != {128, 140}:
        return False, f"first two solutions located at {indices[:2]}, expected {{128, 140}}"
    if indices[2] != 486:
        return False, f"third solution located at companion index {indices[2]}, expected 486"
    return True, ""


def _check_growth_lower_bound() -> tuple[bool, str]:
    for d in (19, 2):
        if not check_growth_lower_bound(d, 300):
            return False, f"d={d}: growth bound fails below n=300"
    return True, ""


def _check_interval_admissibility() -> tuple[bool, str]:
    for w in range(1, 10**5 + 1):
        if interval_even(w) is None:
            return False, f"w={w}: admissible interval is empty"
    expected_minimal = {19: 12, 2: 2}
    for d in (19, 2):
        report = check_matiyasevich(d, range(1, 10**4 + 1))
        if not report.all_ok:
            bad = next(e.w for e in report.entries if not e.ok)
            return False, f"d={d}: inequality chain fails first at w={bad}"
        if report.minimal_admissible_w != expected_minimal[d]:
            return False, (
                f"d={d}: minimal admissible w is {report.minimal_admissible_w},"
                f" expected {expected_minimal[d]}"
            )
    return True, ""


def _check_robinson() -> tuple[bool, str]:
    if not check_robinson(2, [5, 6, 7, 8]):
        return False, "d=2: criterion fails on the first four admissible indices"
    if not check_robinson(19, [6, 7, 8, 9]):
        return False, "d=19: criterion fails on the first four admissible indices"
    return True, ""


def _check_quartic_identity() -> tuple[bool, str]:
    for d in (3, 7, 11, 19, 43):
        spec = quartic_spec(d)
        pr = params(d)
        for ell in range(51):
            big_x, big_y, f1, f2 = _unfolded_sides(d, ell)
            lhs = spec.unfolded_left * f1 * f1 - spec.unfolded_right * f2 * f2
            if lhs != spec.constant:
                return False, f"d={d}, ell={ell}: unfolded identity fails"
            if big_x * big_x - d * pr.y1**2 * big_y * big_y != 1:
                return False, f"d={d}, ell={ell}: system constraint fails"
            if pr.y1 * f1 * f2 != nth(d, 2 * ell + 1).y:
                return False, f"d={d}, ell={ell}: forms do not factor y"
        # trivial round trip at the base point
        tup = solution_from_pell(d, 0, (1, 0), (1, 0))
        sol = pell_from_solution(spec, tup)
        if (sol.x, sol.y) != (1, 0):
            return False, f"d={d}: base point inverts to ({sol.x}, {sol.y})"
        if solution_from_pell(d, 0, (tup.r, tup.s), (tup.u, tup.v)) != tup:
            return False, f"d={d}: base-point round trip not the identity"
    spec2 = quartic_spec(2)
    for _, tup in load_solutions():
        pair = pell_from_solution(spec2, tup)
        back = solution_from_pell(2, pair.n, (tup.r, tup.s), (tup.u, tup.v))
        if back != tup:
            return False, f"companion index {pair.n}: round trip not the identity"
        if pell_from_solution(spec2, back).n != pair.n:
            return False, f"companion index {pair.n}: index drifts on re-inversion"
    return True, ""


_CHECKS: tuple[tuple[int, str, float, Callable[[], tuple[bool, str]]], ...] = (
    (1, "fundamental-table", 1.0, _check_fundamental_table),
    (2, "pell-consistency", 10.0, _check_pell_consistency),
    (3, "odd-index-split", 30.0, _check_odd_index_split),
    (4, "product-formula", 30.0, _check_product_formula),
    (5, "prime-classification", 10.0, _check_prime_classification),
    (6, "representability-equivalence", 120.0, _check_representability_equivalence),
    (7, "companion-scan", 600.0, _check_companion_scan),
    (8, "solution-tuples", 5.0, _check_solution_tuples),
    (9, "growth-lower-bound", 10.0, _check_growth_lower_bound),
    (10, "interval-admissibility", 60.0, _check_interval_admissibility),
    (11, "robinson-criterion", 60.0, _check_robinson),
    (12, "quartic-identity", 30.0, _check_quartic_identity),
)


def all_checks() -> tuple[tuple[int, str, float], ...]:
    """(number, name, time limit) for every check, in order."""
    return tuple((n, name, lim) for n, name, lim, _ in _CHECKS)


def run_check(number: int) -> CheckResult:
    for n, name, limit, fn in _CHECKS:
        if n == number:
            start = time.monotonic()
            try:
                passed, detail = fn()
            except Exception as exc:  # a crash is a failure, not an abort
                passed, detail = False, f"raised {type(exc).__name__}: {exc}"
            elapsed = time.monotonic() - start
            return CheckResult(n, name, passed, elapsed, limit, detail)
    raise ValueError(f"no check numbered {number}")


def run_all() -> Iterator[CheckResult]:
    for n, _, _, _ in _CHECKS:
        yield run_check(n)
