"""Bundled reference data and its loader.

Three fixtures travel with the package: the fundamental Pell solutions
for every supported d, the inert/representable residue table that the
prime classifier must reproduce, and a JSON file with three known
solutions of 2*(r^2+2s^2)^2 - (u^2+2v^2)^2 = 1.  The verification suite
checks the library against these; they are data, never derived at
runtime.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .quartic import QuarticTuple

__all__ = [
    "FUNDAMENTAL_SOLUTIONS",
    "INERT_RESIDUES",
    "RESIDUE_MODULUS",
    "SPLIT_RESIDUES",
    "bundled_solutions_text",
    "load_solutions",
]

# (x1, y1) per discriminant
FUNDAMENTAL_SOLUTIONS = {
    2: (3, 2),
    3: (2, 1),
    7: (8, 3),
    11: (10, 3),
    19: (170, 39),
    43: (3482, 531),
    67: (48842, 5967),
    163: (64080026, 5019135),
}

# prime p != d is inert iff p mod RESIDUE_MODULUS[d] lands in
# INERT_RESIDUES[d], representable iff in SPLIT_RESIDUES[d]
RESIDUE_MODULUS = {2: 8, 3: 3, 7: 7, 11: 11, 19: 19, 43: 43}

INERT_RESIDUES = {
    2: frozenset({5, 7}),
    3: frozenset({2}),
    7: frozenset({3, 5, 6}),
    11: frozenset({2, 6, 7, 8, 10}),
    19: frozenset({2, 3, 8, 10, 12, 13, 14, 15, 18}),
    43: frozenset(
        {2, 3, 5, 7, 8, 12, 18, 19, 20, 22, 26, 27, 28, 29, 30, 32, 33, 34, 37, 39, 42}
    ),
}

SPLIT_RESIDUES = {
    2: frozenset({1, 3}),
    3: frozenset({1}),
    7: frozenset({1, 2, 4}),
    11: frozenset({1, 3, 4, 5, 9}),
    19: frozenset({1, 4, 5, 6, 7, 9, 11, 16, 17}),
    43: frozenset(
        {1, 4, 6, 9, 10, 11, 13, 14, 15, 16, 17, 21, 23, 24, 25, 31, 35, 36, 38, 40, 41}
    ),
}


def bundled_solutions_text() -> str:
    """Raw JSON text of the bundled solution file."""
    return resources.files("rta.data").joinpath("solutions_d2.json").read_text()


def load_solutions(path: Optional[Union[str, Path]] = None) -> list[tuple[int, QuarticTuple]]:
    """Parse a solutions file into (d, tuple) pairs; bundled file by default.

    The format is a JSON array of objects {"d": int, "r": "<decimal>",
    "s": ..., "u": ..., "v": ...} with full-precision decimal strings.
    Raises ValueError with positional diagnostics on malformed input;
    values are not checked against any equation here.
    """
    text = bundled_solutions_text() if path is None else Path(path).read_text()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(raw, list):
        raise ValueError("expected a JSON array of solution objects")
    out = []
    for i, obj in enumerate(raw):
        if not isinstance(obj, dict):
            raise ValueError(f"entry {i}: expected an object")
        missing = [k for k in ("d", "r", "s", "u", "v") if k not in obj]
        if missing:
            raise ValueError(f"entry {i}: missing keys {missing}")
        try:
            d = int(obj["d"])
            tup = QuarticTuple.from_json(obj)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"entry {i}: malformed decimal string ({exc})") from exc
        out.append((d, tup))
    return out
