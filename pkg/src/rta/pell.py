"""Pell sequences x^2 - d*y^2 = 1 over the Heegner discriminants.

Supported d: 2, 3, 7, 11, 19, 43, 67, 163.  For each, the fundamental
solution (x1, y1) is tabulated together with the coefficients (a, b) of
the odd-index splitting

    y_{2l+1} = prefactor * (a*x_l + b*y_l) * (b*x_l + a*d*y_l),

where prefactor*a*b = y1 and prefactor*(a^2*d + b^2) = 2*x1.  The two
split factors are always coprime.

The companion sequence (A_n, B_n) solves 2*A^2 - B^2 = 1 and is tied to
the d = 2 sequence by A_n = x_n + y_n, B_n = x_n + 2*y_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

__all__ = [
    "HEEGNER_DS",
    "HeegnerParams",
    "NPellPair",
    "OddIndexSplit",
    "PellPair",
    "compose",
    "double",
    "next_pair",
    "npell",
    "npell_iter",
    "nth",
    "odd_index_split",
    "params",
    "power_of_two_index",
]

HEEGNER_DS = (2, 3, 7, 11, 19, 43, 67, 163)


@dataclass(frozen=True)
class HeegnerParams:
    """Per-discriminant constants.

    norm_c is the trailing coefficient of the ideal-norm form
    w^2 + w*t + c*t^2 for odd d (c = (d+1)/4) and None for d = 2,
    whose norm form is w^2 + 2*t^2.  bin_a/bin_b are the odd-index
    split coefficients; prefactor is 2 for d = 2 and 1 otherwise.
    """

    d: int
    x1: int
    y1: int
    norm_c: Optional[int]
    bin_a: int
    bin_b: int
    prefactor: int


_PARAMS = {
    2: HeegnerParams(2, 3, 2, None, 1, 1, 2),
    3: HeegnerParams(3, 2, 1, 1, 1, 1, 1),
    7: HeegnerParams(7, 8, 3, 2, 1, 3, 1),
    11: HeegnerParams(11, 10, 3, 3, 1, 3, 1),
    19: HeegnerParams(19, 170, 39, 5, 3, 13, 1),
    43: HeegnerParams(43, 3482, 531, 11, 9, 59, 1),
    67: HeegnerParams(67, 48842, 5967, 17, 27, 221, 1),
    163: HeegnerParams(163, 64080026, 5019135, 41, 627, 8005, 1),
}


def params(d: int) -> HeegnerParams:
    try:
        return _PARAMS[d]
    except KeyError:
        raise ValueError(f"d must be one of {HEEGNER_DS}, got {d}") from None


@dataclass(frozen=True)
class PellPair:
    """The k-th solution (x_k, y_k) of x^2 - d*y^2 = 1."""

    d: int
    k: int
    x: int
    y: int

    def check(self) -> None:
        if self.x * self.x - self.d * self.y * self.y != 1:
            raise ValueError(f"({self.x}, {self.y}) does not solve the d={self.d} equation")


@dataclass(frozen=True)
class NPellPair:
    """The n-th solution (A_n, B_n) of 2*A^2 - B^2 = 1, n >= 0."""

    n: int
    a: int
    b: int

    def check(self) -> None:
        if 2 * self.a * self.a - self.b * self.b != 1:
            raise ValueError(f"({self.a}, {self.b}) does not solve 2A^2 - B^2 = 1")


@dataclass(frozen=True)
class OddIndexSplit:
    """The two coprime cofactors of y_{2l+1} = prefactor * v * w."""

    v: int
    w: int
    y_next: int


def double(p: PellPair) -> PellPair:
    """Index doubling: (x, y) at index k maps to index 2k."""
    return PellPair(p.d, 2 * p.k, p.x * p.x + p.d * p.y * p.y, 2 * p.x * p.y)


def compose(p: PellPair, q: PellPair) -> PellPair:
    """Index addition: solutions at k and m combine to index k + m."""
    if p.d != q.d:
        raise ValueError("discriminant mismatch")
    return PellPair(p.d, p.k + q.k, p.x * q.x + p.d * p.y * q.y, p.x * q.y + q.x * p.y)


def next_pair(d: int, curr: PellPair, prev: PellPair) -> PellPair:
    """Advance one index using y_{k+2} = 2*x1*y_{k+1} - y_k.

    curr and prev must be consecutive solutions (indices k+1 and k).
    """
    if curr.d != d or prev.d != d:
        raise ValueError("discriminant mismatch")
    if curr.k != prev.k + 1:
        raise ValueError(f"indices {curr.k}, {prev.k} are not consecutive")
    t = 2 * params(d).x1
    return PellPair(d, curr.k + 1, t * curr.x - prev.x, t * curr.y - prev.y)


def nth(d: int, k: int) -> PellPair:
    """The k-th solution, by binary decomposition of k (k >= 0)."""
    if k < 0:
        raise ValueError("index must be nonneg")
    pr = params(d)
    base = PellPair(d, 1, pr.x1, pr.y1)
    acc = PellPair(d, 0, 1, 0)
    for bit in bin(k)[2:]:
        acc = double(acc)
        if bit == "1":
            acc = compose(acc, base)
    return acc


def npell(n: int) -> NPellPair:
    """The n-th companion solution of 2*A^2 - B^2 = 1 (n >= 0)."""
    if n < 0:
        raise ValueError("index must be nonneg")
    p = nth(2, n)
    return NPellPair(n, p.x + p.y, p.x + 2 * p.y)


def npell_iter(n_max: int) -> Iterator[NPellPair]:
    """Yield (A_n, B_n) for n = 0 .. n_max via the linear recurrence."""
    a, b = 1, 1
    for n in range(n_max + 1):
        yield NPellPair(n, a, b)
        a, b = 3 * a + 2 * b, 4 * a + 3 * b


def odd_index_split(d: int, ell: int) -> OddIndexSplit:
    """Split y_{2l+1} into its coprime cofactors v and w (l >= 0).

    v = a*x_l + b*y_l and w = b*x_l + a*d*y_l; prefactor*v*w = y_{2l+1}.
    """
    if ell < 0:
        raise ValueError("ell must be nonneg")
    pr = params(d)
    p = nth(d, ell)
    v = pr.bin_a * p.x + pr.bin_b * p.y
    w = pr.bin_b * p.x + pr.bin_a * d * p.y
    return OddIndexSplit(v, w, pr.prefactor * v * w)


def power_of_two_index(d: int, m: int, h: int = 1, max_m: int = 20) -> int:
    """y at index 2^m * h, via the product 2^m * x_h * y_h * prod x_{2^i h}.

    m is capped (default 20) because the value roughly doubles in size
    with every step; pass max_m explicitly for larger runs.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if h < 1 or h % 2 == 0:
        raise ValueError("h must be odd and positive")
    if m > max_m:
        raise ValueError(f"m={m} exceeds the cap {max_m}; pass max_m to override")
    p = nth(d, h)
    out = (1 << m) * p.x * p.y
    for _ in range(1, m):
        p = double(p)
        out *= p.x
    return out
