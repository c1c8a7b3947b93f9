"""The six quaternary quartic equations and their Pell parametrizations.

Each equation has the published shape

    left_coeff * F1(r, s)^2 - right_coeff * F2(u, v)^2 = constant

with F1, F2 drawn from the form table (pure for d in {2, 3, 7}, norm
otherwise).  For odd d the published coefficients may fold a constant
factor into the forms; unfolded, the system is always

    L * F1^2 - R * F2^2 = C,   L = d*a^2,  R = b^2,  C = L - R,
    F1 = X + b^2*Y,  F2 = X + d*a^2*Y,  X^2 - d*y1^2*Y^2 = 1,

where (a, b) are the odd-index split coefficients with a*b = y1 and
(X, Y) = (x_l, y_l / y1) runs over the d-Pell solutions.  The product
y1 * F1 * F2 equals y_{2l+1}.  For d = 2 the system degenerates to the
companion equation 2*A^2 - B^2 = 1 with A = r^2+2s^2, B = u^2+2v^2.

Tuple convention: tuples are (r, s, u, v); the second form is evaluated
with the third slot leading, i.e. F2 = u^2 + u*v + c*v^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .normform import FormVariant, Witness, _compose
from .pell import NPellPair, nth, params

__all__ = [
    "QUARTIC_DS",
    "PellSystemSolution",
    "QuarticSpec",
    "QuarticTuple",
    "evaluate",
    "is_nontrivial",
    "is_solution",
    "pell_from_solution",
    "pell_index_of",
    "quartic_spec",
    "solution_from_pell",
]

QUARTIC_DS = (2, 3, 7, 11, 19, 43)


@dataclass(frozen=True)
class QuarticSpec:
    """Published coefficients of one quartic, plus its folding factors.

    fold_left / fold_right relate the published forms to the unfolded
    constraint system: the published equation's form values are
    G1 = fold_left * F1 and G2 = fold_right * F2.  The fold witnesses
    represent those factors in the form itself, so a witness for an
    unfolded value can be composed up to a witness for the published one.
    """

    d: int
    left_coeff: int
    right_coeff: int
    constant: int
    inner_left: FormVariant
    inner_right: FormVariant
    fold_left: int = 1
    fold_right: int = 1
    fold_left_witness: Optional[Witness] = None
    fold_right_witness: Optional[Witness] = None

    @property
    def unfolded_left(self) -> int:
        """L = d * a^2."""
        return self.left_coeff * self.fold_left**2

    @property
    def unfolded_right(self) -> int:
        """R = b^2."""
        return self.right_coeff * self.fold_right**2


_QUARTICS = {
    2: QuarticSpec(2, 2, 1, 1, FormVariant.pure(2), FormVariant.pure(2)),
    3: QuarticSpec(3, 3, 1, 2, FormVariant.pure(3), FormVariant.pure(3)),
    7: QuarticSpec(7, 7, 9, -2, FormVariant.pure(7), FormVariant.pure(7)),
    11: QuarticSpec(11, 11, 1, 2, FormVariant.norm(11), FormVariant.norm(11), 1, 3, None, (0, 1)),
    19: QuarticSpec(19, 171, 169, 2, FormVariant.norm(19), FormVariant.norm(19)),
    43: QuarticSpec(43, 43, 1, 2, FormVariant.norm(43), FormVariant.norm(43), 9, 59, (3, 0), (3, 2)),
}


def quartic_spec(d: int) -> QuarticSpec:
    try:
        return _QUARTICS[d]
    except KeyError:
        raise ValueError(f"no quartic for d={d}; valid: {QUARTIC_DS}") from None


@dataclass(frozen=True)
class QuarticTuple:
    r: int
    s: int
    u: int
    v: int

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.r, self.s, self.u, self.v)

    def to_json(self, d: Optional[int] = None) -> dict:
        out: dict = {} if d is None else {"d": d}
        out.update(r=str(self.r), s=str(self.s), u=str(self.u), v=str(self.v))
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "QuarticTuple":
        return cls(*(int(obj[k]) for k in ("r", "s", "u", "v")))


@dataclass(frozen=True)
class PellSystemSolution:
    """Solution of the unfolded constraint system for an odd d."""

    d: int
    x: int  # X, satisfying X^2 - d*y1^2*Y^2 = 1
    y: int  # Y = y_l / y1
    form1_value: int  # F1 = X + b^2 Y
    form2_value: int  # F2 = X + d a^2 Y

    def check(self) -> None:
        pr = params(self.d)
        if self.x**2 - self.d * pr.y1**2 * self.y**2 != 1:
            raise ValueError("system constraint violated")
        if self.x + pr.bin_b**2 * self.y != self.form1_value:
            raise ValueError("form1_value mismatch")
        if self.x + self.d * pr.bin_a**2 * self.y != self.form2_value:
            raise ValueError("form2_value mismatch")


def evaluate(spec: QuarticSpec, tup: QuarticTuple) -> int:
    """Left-hand side of the published equation at the given tuple."""
    f1 = spec.inner_left.value(tup.r, tup.s)
    f2 = spec.inner_right.value(tup.u, tup.v)
    return spec.left_coeff * f1 * f1 - spec.right_coeff * f2 * f2


def is_solution(spec: QuarticSpec, tup: QuarticTuple) -> bool:
    return evaluate(spec, tup) == spec.constant


def is_nontrivial(spec: QuarticSpec, tup: QuarticTuple) -> bool:
    """True unless the tuple sits at one of the constant base points."""
    return not (tup.r in (1, -1) and tup.s == 0)


def _unfolded_sides(d: int, ell: int) -> tuple[int, int, int, int]:
    """(X, Y, F1, F2) of the constraint system at Pell index ell (odd d)."""
    pr = params(d)
    p = nth(d, ell)
    if p.y % pr.y1 != 0:
        raise AssertionError("y_l is always divisible by y1")
    big_x, big_y = p.x, p.y // pr.y1
    f1 = big_x + pr.bin_b**2 * big_y
    f2 = big_x + d * pr.bin_a**2 * big_y
    return big_x, big_y, f1, f2


def _lift_witness(
    spec: QuarticSpec,
    variant: FormVariant,
    wit: Witness,
    target: int,
    fold: int,
    fold_wit: Optional[Witness],
) -> Witness:
    """Accept a witness for either the unfolded or the published form value.

    target is the unfolded value F; the published equation needs a witness
    for fold * F.  A witness already evaluating to fold * F passes through;
    one evaluating to F is composed with the fold witness.
    """
    got = variant.value(*wit)
    if got == fold * target:
        return wit
    if got == target and fold != 1:
        assert fold_wit is not None
        return _compose(variant, fold_wit, wit)
    raise ValueError(
        f"witness {wit} evaluates to {got}, expected {target}"
        + (f" or {fold * target}" if fold != 1 else "")
    )


def solution_from_pell(d: int, ell: int, wit1: Witness, wit2: Witness) -> QuarticTuple:
    """Assemble a quartic solution from a Pell index and two witnesses.

    For odd d, ell indexes the d-Pell sequence and the witnesses must
    represent the linear-form values F1, F2 at that index (or their
    folded multiples; unfolded witnesses are composed with the fold
    witnesses automatically).  For d = 2, ell indexes the companion
    sequence and the witnesses must represent A_ell and B_ell.
    """
    spec = quartic_spec(d)
    if d == 2:
        p = nth(2, ell)
        t1, t2 = p.x + p.y, p.x + 2 * p.y
        w1 = _lift_witness(spec, spec.inner_left, wit1, t1, 1, None)
        w2 = _lift_witness(spec, spec.inner_right, wit2, t2, 1, None)
    else:
        _, _, f1, f2 = _unfolded_sides(d, ell)
        w1 = _lift_witness(spec, spec.inner_left, wit1, f1, spec.fold_left, spec.fold_left_witness)
        w2 = _lift_witness(
            spec, spec.inner_right, wit2, f2, spec.fold_right, spec.fold_right_witness
        )
    tup = QuarticTuple(w1[0], w1[1], w2[0], w2[1])
    if not is_solution(spec, tup):
        raise AssertionError("constructed tuple fails the equation")
    return tup


def pell_from_solution(
    spec: QuarticSpec, tup: QuarticTuple
) -> Union[PellSystemSolution, NPellPair]:
    """Invert a quartic solution back to its Pell system coordinates.

    Odd d: returns the (X, Y, F1, F2) of the unfolded system, via
    Y = (F2 - F1)/C and X = (L*F1 - R*F2)/C.  d = 2: returns the
    companion pair (A_n, B_n) with its located index n.
    """
    if not is_solution(spec, tup):
        raise ValueError("tuple does not satisfy the equation")
    d = spec.d
    g1 = spec.inner_left.value(tup.r, tup.s)
    g2 = spec.inner_right.value(tup.u, tup.v)
    if d == 2:
        n = pell_index_of("npell", g1, g2)
        if n is None:
            raise ValueError("solution does not lie on the companion sequence")
        return NPellPair(n, g1, g2)
    if g1 % spec.fold_left or g2 % spec.fold_right:
        raise ValueError("form values do not carry the folding factors")
    f1 = g1 // spec.fold_left
    f2 = g2 // spec.fold_right
    c = spec.constant
    if (f2 - f1) % c:
        raise ValueError(f"parity failure: F2 - F1 = {f2 - f1} is not divisible by {c}")
    if (spec.unfolded_left * f1 - spec.unfolded_right * f2) % c:
        raise ValueError("parity failure in the X coordinate")
    big_y = (f2 - f1) // c
    big_x = (spec.unfolded_left * f1 - spec.unfolded_right * f2) // c
    # any true solution has F2 >= F1 and a positive X; a tuple breaking
    # that ordering would be a genuine counterexample, so surface it
    if big_x <= 0 or big_y < 0:
        raise ValueError(
            f"solution inverted to out-of-range system coordinates "
            f"(X={big_x}, Y={big_y}); the expected ordering of the form values failed"
        )
    sol = PellSystemSolution(d, big_x, big_y, f1, f2)
    sol.check()
    return sol


def pell_index_of(d_or_npell: Union[int, str], x: int, y: Optional[int] = None) -> Optional[int]:
    """Locate a pair on the d-Pell or companion sequence.

    Pass a Heegner d to search (x_k, y_k) by x (and y if given), or the
    string "npell" to search (A_n, B_n) the same way.  Returns the index,
    or None once the sequence overshoots the value.
    """
    if d_or_npell == "npell":
        n, an, bn = 0, 1, 1
        while an <= x:
            if an == x and (y is None or bn == y):
                return n
            an, bn = 3 * an + 2 * bn, 4 * an + 3 * bn
            n += 1
        return None
    pr = params(int(d_or_npell))
    t = 2 * pr.x1
    k, xk, yk = 0, 1, 0
    xn, yn = pr.x1, pr.y1
    while xk <= x:
        if xk == x and (y is None or yk == y):
            return k
        xk, yk, xn, yn = xn, yn, t * xn - xk, t * yn - yk
        k += 1
    return None
