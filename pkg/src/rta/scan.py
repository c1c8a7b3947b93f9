"""Systematic search for simultaneously representable side pairs.

For d = 2 the scan walks the companion pairs (A_n, B_n): a nontrivial
quartic solution requires both A_n and B_n to be values of w^2 + 2t^2.
A residue prefilter removes three quarters of the indices up front
(representable odd numbers are 1 or 3 mod 8, while A_n mod 8 cycles
5,5,1,1 and B_n is 7 mod 8 at odd n).

For odd d the scan walks the linear-form pairs F1 = X + b^2*Y and
F2 = X + d*a^2*Y of the constraint system at each Pell index; both must
be representable in the relevant form (norm form, except the pure form
for d = 7) for a quartic solution to exist at that index.

Side A / F1 is evaluated first; when it is already refuted the other
side is skipped, so a report's side_verdicts may carry one entry or
two.  Every step is a pure function of (d, index, budget, hints), which
makes reports byte-stable across runs and thread counts.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .arith import Budget, DEFAULT_BUDGET
from .normform import FormVariant, ReprVerdict, Witness, representable
from .pell import nth, params

__all__ = [
    "Overall",
    "SearchReport",
    "residue_prefilter_d2",
    "scan_d2",
    "scan_odd_d",
]

HintMap = Mapping[tuple[str, int], Witness]


@dataclass(frozen=True)
class Overall:
    """Aggregate outcome for one scanned index."""

    kind: str  # both_representable | poisoned | unknown | filtered_out
    side: Optional[str] = None
    poison: Optional[int] = None
    exponent: Optional[int] = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == "poisoned":
            out["side"] = self.side
            out["poison"] = None if self.poison is None else str(self.poison)
            out["exponent"] = self.exponent
        return out


@dataclass(frozen=True)
class SearchReport:
    d: int
    index: int
    prefilter_passed: bool
    side_values: dict[str, int]
    side_verdicts: dict[str, ReprVerdict]
    overall: Overall
    elapsed_ms: int

    def to_json(self, timings: bool = False) -> dict:
        out: dict = {
            "d": self.d,
            "index": self.index,
            "prefilter_passed": self.prefilter_passed,
            "side_values": {k: str(v) for k, v in self.side_values.items()},
            "side_verdicts": {k: v.to_json() for k, v in self.side_verdicts.items()},
            "overall": self.overall.to_json(),
        }
        if timings:
            out["elapsed_ms"] = self.elapsed_ms
        return out


def residue_prefilter_d2(n: int) -> bool:
    """Keep only n = 0 (mod 4), where A_n = B_n = 1 (mod 8) is possible."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return n % 4 == 0


def _judge(
    d: int,
    index: int,
    prefilter_passed: bool,
    sides: Sequence[tuple[str, int, FormVariant]],
    budget: Budget,
    hints: Optional[HintMap],
    started: float,
) -> SearchReport:
    values = {name: value for name, value, _ in sides}
    verdicts: dict[str, ReprVerdict] = {}
    overall = Overall("unknown")
    if not prefilter_passed:
        overall = Overall("filtered_out")
    else:
        for name, value, variant in sides:
            hint = hints.get((name, index)) if hints else None
            verdict = representable(variant, value, budget, hint=hint)
            verdicts[name] = verdict
            if verdict.is_not_representable:
                overall = Overall("poisoned", name, verdict.poison, verdict.exponent)
                break
        else:
            if all(v.is_representable for v in verdicts.values()):
                overall = Overall("both_representable")
    elapsed_ms = int((time.monotonic() - started) * 1000)
    return SearchReport(d, index, prefilter_passed, values, verdicts, overall, elapsed_ms)


def _scan_one_d2(n: int, budget: Budget, hints: Optional[HintMap]) -> SearchReport:
    started = time.monotonic()
    pair = nth(2, n)
    a, b = pair.x + pair.y, pair.x + 2 * pair.y
    form = FormVariant.pure(2)
    return _judge(
        2,
        n,
        residue_prefilter_d2(n),
        (("A", a, form), ("B", b, form)),
        budget,
        hints,
        started,
    )


def _scan_one_odd(d: int, ell: int, budget: Budget) -> SearchReport:
    started = time.monotonic()
    pr = params(d)
    pair = nth(d, ell)
    big_x, big_y = pair.x, pair.y // pr.y1
    f1 = big_x + pr.bin_b**2 * big_y
    f2 = big_x + d * pr.bin_a**2 * big_y
    variant = FormVariant.pure(7) if d == 7 else FormVariant.norm(d)
    return _judge(
        d,
        ell,
        True,
        (("F1", f1, variant), ("F2", f2, variant)),
        budget,
        None,
        started,
    )


def _run_indexed(work, indices: Sequence[int], threads: int) -> list[SearchReport]:
    if threads > 1 and len(indices) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(work, indices))
    return [work(i) for i in indices]


def scan_d2(
    n_range: tuple[int, int],
    budget: Budget = DEFAULT_BUDGET,
    hints: Optional[HintMap] = None,
    threads: int = 1,
) -> list[SearchReport]:
    """Scan companion indices n_lo..n_hi inclusive; reports ordered by n.

    hints maps (side, index) to a claimed witness, e.g. ("A", 128) to an
    externally found (w, t) with w^2 + 2t^2 = A_128; a valid hint settles
    that side without factoring.
    """
    lo, hi = n_range
    if lo > hi:
        raise ValueError("empty range")
    if lo < 1:
        raise ValueError("n must be >= 1")
    return _run_indexed(
        lambda n: _scan_one_d2(n, budget, hints), list(range(lo, hi + 1)), threads
    )


def scan_odd_d(
    d: int,
    ell_range: tuple[int, int],
    budget: Budget = DEFAULT_BUDGET,
    threads: int = 1,
) -> list[SearchReport]:
    """Scan Pell indices ell_lo..ell_hi for odd d; reports ordered by ell."""
    if d not in (3, 7, 11, 19, 43):
        raise ValueError("odd-d scan supports d in {3, 7, 11, 19, 43}")
    lo, hi = ell_range
    if lo > hi:
        raise ValueError("empty range")
    if lo < 0:
        raise ValueError("ell must be >= 0")
    return _run_indexed(
        lambda ell: _scan_one_odd(d, ell, budget), list(range(lo, hi + 1)), threads
    )
