"""Binary quadratic forms attached to the Heegner discriminants.

Two variants per d: the ideal-norm form (w^2 + w*t + c*t^2 with
c = (d+1)/4 for odd d, w^2 + 2*t^2 for d = 2) and the pure form
w^2 + d*t^2.  Pure values are always norm values via the substitution
(w, t) -> (w - t, 2t); the converse holds for odd m, and for d = 3 for
all m because 2 is inert there.  For d = 7 the norm form represents 2
but the pure form does not, so the two variants genuinely differ.

A prime is "poison" for a value when it is inert and divides the value
to an odd exponent; such a value is representable by neither variant.
A complete, poison-free factorization guarantees a norm-form witness,
assembled here by composing per-prime witnesses.  Positive pure-form
verdicts always rest on an explicitly verified witness, never on the
factorization criterion alone.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Literal, Optional

from .arith import (
    Budget,
    DEFAULT_BUDGET,
    Factorization,
    factor,
    is_prime,
    is_square,
    jacobi,
)
from .pell import HEEGNER_DS, params

__all__ = [
    "FormVariant",
    "PrimeClass",
    "ReprVerdict",
    "Witness",
    "classify_prime",
    "compose_witnesses",
    "decide_by_factoring",
    "find_witness",
    "poison_in",
    "representable",
]

Witness = tuple[int, int]

# find_witness runs inline only when the t-range is below this cap;
# per-prime searches inside witness construction get a larger one.
DIRECT_SEARCH_CAP = 1 << 20
PER_PRIME_SEARCH_CAP = 1 << 22


class PrimeClass(enum.Enum):
    RAMIFIED = "ramified"
    SPLIT = "split"
    INERT = "inert"


@dataclass(frozen=True)
class FormVariant:
    """One of the two positive-definite forms for a Heegner d."""

    kind: Literal["norm", "pure"]
    d: int

    def __post_init__(self) -> None:
        if self.d not in HEEGNER_DS:
            raise ValueError(f"d must be one of {HEEGNER_DS}, got {self.d}")
        if self.kind not in ("norm", "pure"):
            raise ValueError(f"kind must be 'norm' or 'pure', got {self.kind!r}")

    @classmethod
    def norm(cls, d: int) -> "FormVariant":
        return cls("norm", d)

    @classmethod
    def pure(cls, d: int) -> "FormVariant":
        return cls("pure", d)

    @property
    def is_pure_shape(self) -> bool:
        """True when the form is w^2 + d*t^2 (includes the d = 2 norm form)."""
        return self.kind == "pure" or self.d == 2

    @property
    def c(self) -> Optional[int]:
        """Trailing norm-form coefficient; None where the pure shape applies."""
        return None if self.is_pure_shape else params(self.d).norm_c

    def value(self, w: int, t: int) -> int:
        if self.is_pure_shape:
            return w * w + self.d * t * t
        return w * w + w * t + params(self.d).norm_c * t * t

    def label(self) -> str:
        if self.is_pure_shape:
            return f"w^2 + {self.d}t^2"
        return f"w^2 + wt + {params(self.d).norm_c}t^2"

    def search_range(self, m: int) -> int:
        """Largest |t| that can appear in a representation of m."""
        if m < 0:
            return -1
        if self.is_pure_shape:
            return math.isqrt(m // self.d)
        return math.isqrt(4 * m // (4 * params(self.d).norm_c - 1))


def classify_prime(d: int, p: int) -> PrimeClass:
    """Splitting class of the prime p in the field of discriminant -d."""
    if d not in HEEGNER_DS:
        raise ValueError(f"d must be one of {HEEGNER_DS}, got {d}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == d:
        return PrimeClass.RAMIFIED
    if p == 2:
        if d == 2:
            return PrimeClass.RAMIFIED
        # 2 is inert for odd d exactly when w^2 + w + c is irreducible
        # mod 2, i.e. when c = (d+1)/4 is odd
        return PrimeClass.INERT if params(d).norm_c % 2 == 1 else PrimeClass.SPLIT
    return PrimeClass.INERT if jacobi(-d % p, p) == -1 else PrimeClass.SPLIT


@dataclass(frozen=True)
class ReprVerdict:
    """Three-valued answer to "does this form represent m?".

    kind is one of "representable", "not_representable", "unknown".
    Representable carries a verified witness (w, t).  NotRepresentable
    carries a poison prime and its exact odd exponent when one was
    found; a refutation by exhausted search or residue obstruction
    (possible only for the pure variant) leaves poison None.  Unknown
    carries the unfactored cofactor that blocked the decision (1 when
    only the witness construction was out of reach).  method records
    which path produced the verdict.
    """

    kind: str
    w: Optional[int] = None
    t: Optional[int] = None
    poison: Optional[int] = None
    exponent: Optional[int] = None
    cofactor: Optional[int] = None
    method: str = ""

    @classmethod
    def representable(cls, w: int, t: int, method: str = "witness_search") -> "ReprVerdict":
        return cls("representable", w=w, t=t, method=method)

    @classmethod
    def not_representable(
        cls, poison: Optional[int], exponent: Optional[int], method: str = "poison"
    ) -> "ReprVerdict":
        return cls("not_representable", poison=poison, exponent=exponent, method=method)

    @classmethod
    def unknown(cls, cofactor: int, method: str = "budget") -> "ReprVerdict":
        return cls("unknown", cofactor=cofactor, method=method)

    @property
    def is_representable(self) -> bool:
        return self.kind == "representable"

    @property
    def is_not_representable(self) -> bool:
        return self.kind == "not_representable"

    @property
    def is_unknown(self) -> bool:
        return self.kind == "unknown"

    @property
    def witness(self) -> Optional[Witness]:
        return (self.w, self.t) if self.kind == "representable" else None

    def to_json(self) -> dict:
        out: dict = {"outcome": self.kind, "method": self.method}
        if self.kind == "representable":
            out["witness"] = {"w": str(self.w), "t": str(self.t)}
        elif self.kind == "not_representable":
            out["poison"] = None if self.poison is None else str(self.poison)
            out["exponent"] = self.exponent
        else:
            out["cofactor"] = str(self.cofactor)
        return out


def find_witness(variant: FormVariant, m: int) -> Optional[Witness]:
    """Exhaustive canonical witness search; None means no representation.

    t runs 0, 1, 2, ...; the first hit is returned with w >= 0, flipping
    the sign of t instead of w when the symmetric representative is the
    nonnegative one.  Terminates because both variants are positive
    definite; intended for moderate m (callers bound the t-range).
    """
    if m < 0:
        return None
    if variant.is_pure_shape:
        d = variant.d
        t = 0
        while d * t * t <= m:
            w = is_square(m - d * t * t)
            if w is not None:
                return (w, t)
            t += 1
        return None
    c = params(variant.d).norm_c
    q = 4 * c - 1
    t = 0
    while q * t * t <= 4 * m:
        s = is_square(4 * m - q * t * t)
        if s is not None and (s - t) % 2 == 0:
            if s >= t:
                return ((s - t) // 2, t)
            return ((s + t) // 2, -t)
        t += 1
    return None


def compose_witnesses(d: int, a: Witness, b: Witness) -> Witness:
    """Norm-form composition: value(result) = value(a) * value(b).

    Multiplication in the ring of integers: for odd d the rule is
    (w1*w2 - c*t1*t2, w1*t2 + t1*w2 + t1*t2); d = 2 uses the simpler
    (w1*w2 - 2*t1*t2, w1*t2 + t1*w2).
    """
    return _compose(FormVariant.norm(d), a, b)


def _compose(variant: FormVariant, a: Witness, b: Witness) -> Witness:
    w1, t1 = a
    w2, t2 = b
    if variant.is_pure_shape:
        return (w1 * w2 - variant.d * t1 * t2, w1 * t2 + t1 * w2)
    c = params(variant.d).norm_c
    return (w1 * w2 - c * t1 * t2, w1 * t2 + t1 * w2 + t1 * t2)


def poison_in(d: int, f: Factorization) -> Optional[tuple[int, int]]:
    """First listed inert prime with odd exponent, if any."""
    for p, e in f.factors:
        if e % 2 == 1 and classify_prime(d, p) == PrimeClass.INERT:
            return (p, e)
    return None


def _exponent_in(m: int, p: int) -> int:
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def _construct_witness(variant: FormVariant, f: Factorization) -> Optional[Witness]:
    """Build a witness for a complete poison-free factorization.

    Composes per-prime witnesses in the matching ring.  For the pure
    variant with odd d, powers of 2 need care: 2 itself is never a pure
    value, but 4 = 2^2 and (for d = 7) 8 = 1 + 7 are, which covers every
    even exponent plus odd exponents >= 3 when d = 7.  Returns None when
    some needed per-prime search exceeds its cap or no per-prime witness
    exists, leaving the caller to report an honest Unknown.
    """
    d = variant.d
    acc: Witness = (1, 0)
    for p, e in f.factors:
        cls = classify_prime(d, p)
        if cls == PrimeClass.INERT:
            # poison-free input means e is even here
            acc = _compose(variant, acc, (p ** (e // 2), 0))
            continue
        if variant.kind == "pure" and d != 2 and p == 2:
            if e % 2 == 0:
                acc = _compose(variant, acc, (2 ** (e // 2), 0))
            elif d == 7 and e >= 3:
                acc = _compose(variant, acc, (1, 1))
                acc = _compose(variant, acc, (2 ** ((e - 3) // 2), 0))
            else:
                return None
            continue
        if variant.search_range(p) > PER_PRIME_SEARCH_CAP:
            return None
        unit = find_witness(variant, p)
        if unit is None:
            return None
        for _ in range(e):
            acc = _compose(variant, acc, unit)
    w, t = acc
    if variant.value(w, t) != f.value:
        raise AssertionError("witness composition failed verification")
    return acc


def representable(
    variant: FormVariant,
    m: int,
    budget: Budget = DEFAULT_BUDGET,
    hint: Optional[Witness] = None,
) -> ReprVerdict:
    """Decide whether the form represents m, under the given effort budget.

    A valid hint short-circuits everything.  Small m go straight to the
    exhaustive search, which is definitive either way.  Large m are
    factored: an inert prime at odd exponent refutes; a complete
    poison-free factorization yields a composed, verified witness when
    every split prime is within reach of the bounded per-prime search;
    anything else is Unknown, carrying the obstructing cofactor.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if hint is not None:
        w, t = hint
        if variant.value(w, t) != m:
            raise ValueError(f"hint {hint} does not evaluate to {m}")
        return ReprVerdict.representable(w, t, method="hint")

    if variant.kind == "pure" and variant.d != 2 and m % 4 == 2:
        # w^2 + d t^2 mod 4 only takes values {0, 1, 3} for odd d
        return ReprVerdict.not_representable(None, None, method="local_residue")

    if variant.search_range(m) <= DIRECT_SEARCH_CAP:
        wit = find_witness(variant, m)
        if wit is not None:
            return ReprVerdict.representable(*wit)
        # definitively refuted; attach poison evidence when visible
        f = factor(m, budget)
        pe = poison_in(variant.d, f)
        if pe is not None:
            return ReprVerdict.not_representable(pe[0], pe[1])
        return ReprVerdict.not_representable(None, None, method="exhaustive_search")

    return decide_by_factoring(variant, m, budget)


def decide_by_factoring(
    variant: FormVariant, m: int, budget: Budget = DEFAULT_BUDGET
) -> ReprVerdict:
    """Factorization-route verdict, regardless of the size of m.

    Factoring stops early once an inert prime with odd exact exponent
    turns up.  Callers wanting the residue shortcut for the odd-d pure
    variant should go through representable(); here a 2 at a bad
    exponent either shows up as poison (d = 3, where 2 is inert) or
    degrades to Unknown.
    """
    if m < 1:
        raise ValueError("m must be >= 1")

    def stop(p: int, _e: int) -> bool:
        return (
            classify_prime(variant.d, p) == PrimeClass.INERT
            and _exponent_in(m, p) % 2 == 1
        )

    f = factor(m, budget, stop=stop)
    pe = poison_in(variant.d, f)
    if pe is not None:
        return ReprVerdict.not_representable(pe[0], _exponent_in(m, pe[0]))
    if not f.complete:
        return ReprVerdict.unknown(f.cofactor)
    wit = _construct_witness(variant, f)
    if wit is None:
        return ReprVerdict.unknown(1, method="witness_out_of_reach")
    return ReprVerdict.representable(*wit, method="composition")
