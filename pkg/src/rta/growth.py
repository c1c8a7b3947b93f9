"""Exact-arithmetic verifiers for the exponential-growth relations.

The J_d relation pairs a divisor p with q = y at a power-of-two index:
for d in {2, 7} the indices are 2^l (l > 4) with the size bound
p >= 2^(l+1); for d in {3, 11, 19, 43} they are 2^(2l+1) (l > 5) with
p >= 2^(2l+2).  The associated constant quadruple (alpha, beta, gamma,
delta) is (x1, 2, 2^6, 1) for the first family and (x1^4, 2, 2^7, x1^3)
for the second.

Everything here compares exact integers; no floating-point logarithms.
Where a value like y at index 2^31 is far too large to materialize, the
verification goes through the proven growth bound x1^(n-1) < y_n
(checked directly for accessible n by check_growth_lower_bound), which
turns the required inequality into one between powers of 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .pell import double, nth, params

__all__ = [
    "JRelationParams",
    "MatiyasevichEntry",
    "MatiyasevichReport",
    "check_growth_lower_bound",
    "check_matiyasevich",
    "check_robinson",
    "interval_even",
    "j_holds",
    "j_params",
    "odd_quotient_divides",
]

_SINGLE_EXPONENT_DS = (2, 7)
_DOUBLE_EXPONENT_DS = (3, 11, 19, 43)


@dataclass(frozen=True)
class JRelationParams:
    """Index maps, size bounds, and growth constants for one relation."""

    d: int
    ell_min: int
    alpha: int
    beta: int
    gamma: int
    delta: int

    def index_map(self, ell: int) -> int:
        return 1 << ell if self.d in _SINGLE_EXPONENT_DS else 1 << (2 * ell + 1)

    def p_bound_exp(self, ell: int) -> int:
        return ell + 1 if self.d in _SINGLE_EXPONENT_DS else 2 * ell + 2

    def p_bound(self, ell: int) -> int:
        return 1 << self.p_bound_exp(ell)


def j_params(d: int) -> JRelationParams:
    x1 = params(d).x1
    if d in _SINGLE_EXPONENT_DS:
        return JRelationParams(d, 4, x1, 2, 2**6, 1)
    if d in _DOUBLE_EXPONENT_DS:
        return JRelationParams(d, 5, x1**4, 2, 2**7, x1**3)
    raise ValueError(f"no growth relation for d={d}")


def j_holds(d: int, p: int, q: int) -> Optional[int]:
    """The witnessing ell for the pair (p, q), or None.

    Returns ell > ell_min such that q equals y at the mapped power-of-two
    index, p divides q, and p meets the size bound.  At most one ell can
    match because the y-sequence is strictly increasing.
    """
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonneg")
    jp = j_params(d)
    ell = jp.ell_min + 1
    pair = nth(d, jp.index_map(ell))
    while pair.y <= q:
        if pair.y == q:
            if p != 0 and q % p == 0 and p >= jp.p_bound(ell):
                return ell
            return None
        ell += 1
        while pair.k < jp.index_map(ell):
            pair = double(pair)
    return None


def odd_quotient_divides(u: int, v: int) -> bool:
    """True iff u divides v with an odd quotient."""
    if v == 0:
        raise ValueError("v must be nonzero")
    if u == 0 or v % u != 0:
        return False
    return (v // u) % 2 != 0


def check_growth_lower_bound(d: int, n_max: int) -> bool:
    """Verify x1^(n-1) < y_n for all 2 <= n <= n_max, exactly."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    pr = params(d)
    xk, yk = 1, 0
    xn, yn = pr.x1, pr.y1
    power = 1
    t = 2 * pr.x1
    for _ in range(2, n_max + 1):
        xk, yk, xn, yn = xn, yn, t * xn - xk, t * yn - yk
        power *= pr.x1
        if power >= yn:
            return False
    return True


def interval_even(w: int) -> Optional[int]:
    """Smallest ell >= 1 with 2^(2*ell+1) > 4 + 4*w and 2^(2*ell) < 32*w^2.

    The window is nonempty for every w >= 1; None would indicate the
    two inequalities admit no common ell.
    """
    if w < 1:
        raise ValueError("w must be >= 1")
    bound = 32 * w * w
    ell = 1
    while (1 << (2 * ell)) < bound:
        if (1 << (2 * ell + 1)) > 4 + 4 * w:
            return ell
        ell += 1
    return None


@dataclass(frozen=True)
class MatiyasevichEntry:
    w: int
    ell: Optional[int]
    ok: bool


@dataclass(frozen=True)
class MatiyasevichReport:
    d: int
    entries: tuple[MatiyasevichEntry, ...]
    all_ok: bool
    minimal_admissible_w: Optional[int]

    def to_json(self, verbose: bool = False) -> dict:
        out: dict = {
            "d": self.d,
            "checked": len(self.entries),
            "all_ok": self.all_ok,
            "minimal_admissible_w": self.minimal_admissible_w,
            "failures": [e.w for e in self.entries if not e.ok],
        }
        if verbose:
            out["entries"] = [{"w": e.w, "ell": e.ell, "ok": e.ok} for e in self.entries]
        return out


def _ell_window_d2(w: int) -> Optional[int]:
    """Smallest ell >= 1 with 2^ell > 1 + w and 2^ell < 32*w^2."""
    bound = 32 * w * w
    ell = 1
    while (1 << ell) < bound:
        if (1 << ell) > 1 + w:
            return ell
        ell += 1
    return None


def _admits_large_ell(d: int, w: int, ell_min: int) -> bool:
    """Does some admissible ell for w additionally satisfy ell > ell_min?

    The admissible set is an interval in ell (the lower inequality is
    monotone up, the upper monotone down), so it suffices to test the
    smallest ell that clears both the lower inequality and ell_min.
    """
    ell = ell_min + 1
    if d == 2:
        while (1 << ell) <= 1 + w:
            ell += 1
        return (1 << ell) < 32 * w * w
    while (1 << (2 * ell + 1)) <= 4 + 4 * w:
        ell += 1
    return (1 << (2 * ell)) < 32 * w * w


def check_matiyasevich(d: int, w_range: Sequence[int]) -> MatiyasevichReport:
    """Verify the growth-property inequality chain for each w.

    For each w an ell inside the admissible window is located with exact
    integer inequalities, then the two conclusions are verified:
    p_bound(ell) < gamma * w^beta, and y at the mapped index exceeds
    delta * alpha^w.  The latter reduces, through the proven bound
    x1^(n-1) < y_n, to an exact comparison of exponents, so no oversized
    y value is ever materialized.  The report also carries the smallest
    w whose window reaches beyond ell_min, where the relation's own
    index constraint becomes satisfiable.
    """
    if d not in (2, 19):
        raise ValueError("the explicit chains are set up for d in {2, 19}")
    jp = j_params(d)
    entries = []
    minimal_admissible: Optional[int] = None
    for w in w_range:
        if w < 1:
            raise ValueError("w values must be >= 1")
        if d == 2:
            ell = _ell_window_d2(w)
            ok = ell is not None and (
                # p_bound < gamma * w^beta: 2^(ell+1) < 64 w^2
                (1 << (ell + 1)) < jp.gamma * w**jp.beta
                # q > delta * alpha^w reduces to x1^(2^ell - 1) >= x1^w,
                # i.e. 2^ell - 1 >= w, via the growth bound
                and (1 << ell) - 1 >= w
            )
        else:
            ell = interval_even(w)
            ok = ell is not None and (
                # p_bound < gamma * w^beta: 2^(2ell+2) < 128 w^2
                (1 << (2 * ell + 2)) < jp.gamma * w**jp.beta
                # q > delta * alpha^w: x1^(2^(2ell+1) - 1) >= x1^(4w+3)
                and (1 << (2 * ell + 1)) - 1 >= 4 * w + 3
            )
        entries.append(MatiyasevichEntry(w, ell, ok))
        if minimal_admissible is None and _admits_large_ell(d, w, jp.ell_min):
            minimal_admissible = w
    return MatiyasevichReport(
        d=d,
        entries=tuple(entries),
        all_ok=all(e.ok for e in entries),
        minimal_admissible_w=minimal_admissible,
    )


def check_robinson(d: int, ells: Sequence[int], k: int = 1) -> bool:
    """Verify q <= p_min^p_min (and the unboundedness instance q > p_min^k).

    p_min = p_bound(ell) is a power of 2, so p_min^p_min is too, and the
    comparison against q is an exact bit-length test.  The list is meant
    to stay small: q doubles in size with every doubling of the index.
    """
    jp = j_params(d)
    for ell in ells:
        if ell <= jp.ell_min:
            raise ValueError(f"ell must exceed {jp.ell_min} for d={d}")
        e = jp.p_bound_exp(ell)
        q = nth(d, jp.index_map(ell)).y
        # q <= 2^(e * 2^e)  <=>  bit_length(q) <= e*2^e, or q == 2^(e*2^e)
        cap_exp = e << e
        bl = q.bit_length()
        if not (bl <= cap_exp or (bl == cap_exp + 1 and q == 1 << cap_exp)):
            return False
        # unboundedness instance: q > p_min^k = 2^(e*k)
        if q <= (1 << (e * k)):
            return False
    return True
