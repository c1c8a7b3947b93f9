"""Integer primitives: primality, budgeted factorization, small helpers.

Everything here is deterministic: the same inputs always produce the same
outputs, independent of hashing, threading, or wall-clock time.  Pollard
rho uses a fixed polynomial-constant schedule instead of randomization so
that factorizations are reproducible run to run.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Callable, Optional

__all__ = [
    "Budget",
    "DEFAULT_BUDGET",
    "HARD_BUDGET",
    "Factorization",
    "factor",
    "is_prime",
    "is_square",
    "jacobi",
    "perfect_power",
    "small_primes",
    "v2",
]

# Below this bound the 13-base test is a proven deterministic primality
# decision; above it the verdict is "probable prime" with 40 bases.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES_13 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_BASES_40 = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
    67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137,
    139, 149, 151, 157, 163, 167, 173,
)

_sieve_cache: list[int] = []
_sieve_limit = 0


def small_primes(limit: int) -> list[int]:
    """All primes <= limit, from a cached sieve that grows on demand."""
    global _sieve_cache, _sieve_limit
    if limit > _sieve_limit:
        n = max(limit, 2 * _sieve_limit, 1 << 16)
        flags = bytearray([1]) * (n + 1)
        flags[0] = flags[1] = 0
        for p in range(2, math.isqrt(n) + 1):
            if flags[p]:
                flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
        _sieve_cache = [i for i, f in enumerate(flags) if f]
        _sieve_limit = n
    return _sieve_cache[: bisect.bisect_right(_sieve_cache, limit)]


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic (proven) for n below ~3.3e24 using the first 13 prime
    bases; above that bound the first 40 prime bases are used and a True
    answer means "probable prime" with error probability below 4**-40.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    bases = _MR_BASES_13 if n < _MR_DETERMINISTIC_BOUND else _MR_BASES_40
    for a in bases:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_square(n: int) -> Optional[int]:
    """The exact square root of n when n is a perfect square, else None."""
    if n < 0:
        return None
    # cheap mod-64 residue filter before the full isqrt
    if (0x202021202030213 >> (n & 63)) & 1 == 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def v2(n: int) -> int:
    """2-adic valuation of n (n must be nonzero)."""
    if n == 0:
        raise ValueError("v2(0) is undefined")
    return ((n if n > 0 else -n) & -(n if n > 0 else -n)).bit_length() - 1


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi requires odd positive n")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def perfect_power(n: int) -> Optional[tuple[int, int]]:
    """Return (b, k) with b**k == n and k >= 2, or None.

    Prefers the largest exponent, so perfect_power(64) == (2, 6).
    """
    if n < 4:
        return None
    for k in range(n.bit_length(), 1, -1):
        b = round(n ** (1.0 / k)) if n.bit_length() < 512 else _kth_root(n, k)
        for cand in (b - 1, b, b + 1):
            if cand >= 2 and cand**k == n:
                return cand, k
    return None


def _kth_root(n: int, k: int) -> int:
    """Floor of the k-th root via Newton iteration on integers."""
    if k == 1 or n < 2:
        return n
    x = 1 << (n.bit_length() // k + 1)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


@dataclass(frozen=True)
class Budget:
    """Effort caps for the factoring routine.

    trial_division_bound: largest prime tried by trial division.
    rho_iterations_cap:   Brent iterations per rho attempt.
    rho_restart_cap:      rho attempts (with distinct constants) per composite.
    """

    trial_division_bound: int = 1_000_000
    rho_iterations_cap: int = 1 << 22
    rho_restart_cap: int = 8


DEFAULT_BUDGET = Budget()
HARD_BUDGET = Budget(
    trial_division_bound=4_000_000,
    rho_iterations_cap=1 << 26,
    rho_restart_cap=16,
)


@dataclass(frozen=True)
class Factorization:
    """Result of a budgeted factorization of a positive integer.

    factors holds (prime, exponent) pairs in increasing prime order; every
    listed prime passes is_prime.  cofactor is the product of the parts left
    unfactored; it is 1 exactly when the factorization is complete.  When
    the budget itself ran out the cofactor is composite (a prime would have
    been listed), but a caller-requested early stop can leave a prime there;
    cofactor_probable_prime records is_prime(cofactor) either way.
    """

    value: int
    factors: tuple[tuple[int, int], ...]
    cofactor: int
    complete: bool
    cofactor_probable_prime: bool = False

    def reconstruct(self) -> int:
        out = self.cofactor
        for p, e in self.factors:
            out *= p**e
        return out

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def to_json(self) -> dict:
        return {
            "value": str(self.value),
            "factors": [[str(p), e] for p, e in self.factors],
            "cofactor": str(self.cofactor),
            "complete": self.complete,
        }


def _brent_rho(n: int, c: int, max_iters: int) -> Optional[int]:
    """One Brent-cycle rho attempt on odd composite n with x^2 + c.

    Returns a nontrivial divisor or None if the iteration cap is reached
    or the attempt degenerates.  gcds are batched over 128-step windows.
    """
    y, m = 2, 128
    g = q = r = 1
    x = ys = y
    iters = 0
    while g == 1 and iters < max_iters:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        iters += r
        r <<= 1
    if g == n:
        # backtrack one step at a time to recover the divisor
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    if 1 < g < n:
        return g
    return None


def _split_composite(n: int, budget: Budget) -> Optional[int]:
    """Find some nontrivial divisor of odd composite n within budget."""
    pp = perfect_power(n)
    if pp is not None:
        return pp[0] ** (pp[1] // 2) if pp[1] % 2 == 0 else pp[0]
    for c in range(1, budget.rho_restart_cap + 1):
        d = _brent_rho(n, c, budget.rho_iterations_cap)
        if d is not None:
            return d
    return None


def factor(
    n: int,
    budget: Budget = DEFAULT_BUDGET,
    stop: Optional[Callable[[int, int], bool]] = None,
) -> Factorization:
    """Factor n >= 1 under the given effort budget.

    Trial division runs up to budget.trial_division_bound; what remains is
    split recursively by Brent's rho, with primality certified by is_prime
    at every stage.  The result lists confirmed primes with exact exponents
    and leaves any rho-resistant composite part in cofactor.

    stop, if given, is called as stop(prime, exponent) after each prime is
    fully extracted; returning True abandons the remaining work and returns
    an incomplete factorization immediately.  Because the primes are
    discovered in a fixed order for fixed inputs, early stopping is as
    deterministic as a full run.
    """
    if n < 1:
        raise ValueError("factor requires n >= 1")
    found: dict[int, int] = {}

    def record(p: int, e: int) -> bool:
        found[p] = found.get(p, 0) + e
        return stop is not None and stop(p, found[p])

    if n == 1:
        return Factorization(1, (), 1, True)

    rem = n
    halted = False
    for p in small_primes(budget.trial_division_bound):
        if p * p > rem:
            break
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            if record(p, e):
                halted = True
                break

    # pending composites still to be split; exponent tracked per entry
    pending: list[tuple[int, int]] = []
    if rem > 1 and not halted:
        if rem <= budget.trial_division_bound * budget.trial_division_bound or is_prime(rem):
            # below the trial bound squared the remainder must be prime
            halted = record(rem, 1)
        else:
            pending.append((rem, 1))

    stuck: list[tuple[int, int]] = []
    while pending and not halted:
        m, mult = pending.pop()
        d = _split_composite(m, budget)
        if d is None:
            stuck.append((m, mult))
            continue
        for part in (d, m // d):
            e = mult
            # pull the same divisor out of everything still queued so
            # exponents stay exact even when rho repeats a factor
            for i, (q, qe) in enumerate(pending):
                while q % part == 0 and q > part:
                    q //= part
                    e += qe
                if q == part:
                    e += qe
                    q = 1
                pending[i] = (q, qe)
            pending = [(q, qe) for q, qe in pending if q > 1]
            if part == 1:
                continue
            if is_prime(part):
                if record(part, e):
                    halted = True
                    break
            else:
                pp = perfect_power(part)
                if pp is not None and is_prime(pp[0]):
                    if record(pp[0], e * pp[1]):
                        halted = True
                        break
                else:
                    pending.append((part, e))

    if halted:
        # everything not yet extracted goes to the cofactor, examined or not
        done = 1
        for p, e in found.items():
            done *= p**e
        cof = n // done
    else:
        cof = 1
        for m, mult in stuck:
            cof *= m**mult
    complete = cof == 1
    factors = tuple(sorted(found.items()))
    return Factorization(
        value=n,
        factors=factors,
        cofactor=cof,
        complete=complete,
        cofactor_probable_prime=cof != 1 and is_prime(cof),
    )
