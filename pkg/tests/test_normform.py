import pytest
from hypothesis import given, settings, strategies as st

from rta.arith import Budget, factor
from rta.normform import (
    FormVariant,
    PrimeClass,
    classify_prime,
    compose_witnesses,
    decide_by_factoring,
    find_witness,
    poison_in,
    representable,
)

heegner = st.sampled_from((2, 3, 7, 11, 19, 43, 67, 163))
small_int = st.integers(min_value=-50, max_value=50)


class TestFormVariant:
    def test_values(self):
        assert FormVariant.pure(2).value(3, 8) == 137
        assert FormVariant.norm(2).value(3, 8) == 137  # d=2 norm form is the pure shape
        assert FormVariant.norm(19).value(0, 1) == 5
        assert FormVariant.norm(43).value(3, 2) == 9 + 6 + 44
        assert FormVariant.pure(19).value(1, 1) == 20

    def test_coefficients(self):
        assert FormVariant.norm(7).c == 2
        assert FormVariant.norm(163).c == 41
        assert FormVariant.pure(7).c is None
        assert FormVariant.norm(2).c is None

    def test_labels(self):
        assert FormVariant.norm(19).label() == "w^2 + wt + 5t^2"
        assert FormVariant.pure(19).label() == "w^2 + 19t^2"
        assert FormVariant.norm(2).label() == "w^2 + 2t^2"

    def test_pure_values_embed_in_norm(self):
        # w^2 + d t^2 = norm(w - t, 2t) for odd d
        for d in (3, 7, 11, 19, 43):
            pure, norm = FormVariant.pure(d), FormVariant.norm(d)
            for w in range(-6, 7):
                for t in range(-6, 7):
                    assert pure.value(w, t) == norm.value(w - t, 2 * t)

    def test_rejects_bad_d(self):
        with pytest.raises(ValueError):
            FormVariant.norm(5)


class TestClassifyPrime:
    def test_ramified(self):
        assert classify_prime(2, 2) == PrimeClass.RAMIFIED
        for d in (3, 7, 11, 19, 43, 67, 163):
            assert classify_prime(d, d) == PrimeClass.RAMIFIED

    def test_two_for_odd_d(self):
        # 2 splits iff (d+1)/4 is even, which holds only for d = 7
        assert classify_prime(7, 2) == PrimeClass.SPLIT
        for d in (3, 11, 19, 43, 67, 163):
            assert classify_prime(d, 2) == PrimeClass.INERT

    def test_d2_follows_mod_8(self):
        for p in (3, 11, 17, 41, 73, 89, 97):
            assert classify_prime(2, p) == PrimeClass.SPLIT
        for p in (5, 7, 13, 23, 29, 37, 197):
            assert classify_prime(2, p) == PrimeClass.INERT

    def test_known_classifications(self):
        assert classify_prime(2, 5) == PrimeClass.INERT
        assert classify_prime(2, 103) == PrimeClass.INERT
        assert classify_prime(19, 5) == PrimeClass.SPLIT
        assert classify_prime(19, 3) == PrimeClass.INERT
        assert classify_prime(43, 41) == PrimeClass.SPLIT
        assert classify_prime(43, 5) == PrimeClass.INERT

    def test_matches_quadratic_residues(self):
        # split odd p (not d) <=> p is a square mod d, for odd d
        for d in (3, 7, 11, 19, 43):
            squares = {x * x % d for x in range(1, d)}
            for p in (3, 5, 7, 13, 29, 61, 101, 997):
                if p == d:
                    continue
                want = PrimeClass.SPLIT if p % d in squares else PrimeClass.INERT
                assert classify_prime(d, p) == want

    def test_rejects_composites(self):
        with pytest.raises(ValueError):
            classify_prime(2, 15)


class TestFindWitness:
    def test_canonical_small(self):
        assert find_witness(FormVariant.pure(2), 1) == (1, 0)
        assert find_witness(FormVariant.pure(2), 2) == (0, 1)
        assert find_witness(FormVariant.pure(2), 137) == (3, 8)
        assert find_witness(FormVariant.norm(19), 5) == (0, 1)
        assert find_witness(FormVariant.norm(43), 59) == (3, 2)

    def test_canonical_is_smallest_t(self):
        from rta.arith import is_square

        assert find_witness(FormVariant.pure(2), 1136689) == (1031, 192)
        for t in range(192):
            assert is_square(1136689 - 2 * t * t) is None

    def test_none_for_poisoned(self):
        assert find_witness(FormVariant.pure(2), 985) is None
        assert find_witness(FormVariant.norm(19), 3) is None

    def test_negative_t_branch(self):
        # first hit at m = 19 has s < t, so the sign lands on t
        wit = find_witness(FormVariant.norm(19), 19)
        assert wit == (1, -2)
        assert FormVariant.norm(19).value(1, -2) == 19

    @given(st.integers(min_value=1, max_value=3000), heegner)
    @settings(max_examples=80, deadline=None)
    def test_witness_evaluates(self, m, d):
        wit = find_witness(FormVariant.norm(d), m)
        if wit is not None:
            assert FormVariant.norm(d).value(*wit) == m


class TestCompose:
    def test_values_multiply(self):
        # d = 2: 17 * 9 = 153 = 11^2 + 2*4^2
        w = compose_witnesses(2, (3, 2), (3, 0))
        assert FormVariant.norm(2).value(*w) == 153
        # odd d
        w = compose_witnesses(19, (0, 1), (1, 1))
        assert FormVariant.norm(19).value(*w) == 5 * 7

    @given(heegner, small_int, small_int, small_int, small_int)
    @settings(max_examples=150)
    def test_multiplicative_identity(self, d, w1, t1, w2, t2):
        form = FormVariant.norm(d)
        got = compose_witnesses(d, (w1, t1), (w2, t2))
        assert form.value(*got) == form.value(w1, t1) * form.value(w2, t2)

    @given(st.sampled_from((2, 3, 7, 11, 19, 43)), small_int, small_int, small_int, small_int)
    @settings(max_examples=100)
    def test_pure_composition_closes(self, d, w1, t1, w2, t2):
        from rta.normform import _compose

        form = FormVariant.pure(d)
        got = _compose(form, (w1, t1), (w2, t2))
        assert form.value(*got) == form.value(w1, t1) * form.value(w2, t2)


class TestPoisonIn:
    def test_finds_odd_inert(self):
        assert poison_in(2, factor(985)) == (5, 1)
        assert poison_in(2, factor(5 * 5 * 7)) == (7, 1)

    def test_even_exponents_are_clean(self):
        assert poison_in(2, factor(25)) is None
        assert poison_in(2, factor(25 * 49 * 17)) is None


class TestRepresentable:
    def test_direct_search_positive(self):
        v = representable(FormVariant.pure(2), 1136689)
        assert v.is_representable and v.witness == (1031, 192)

    def test_direct_search_negative_with_poison(self):
        v = representable(FormVariant.pure(2), 985)
        assert v.is_not_representable
        assert (v.poison, v.exponent) == (5, 1)

    def test_residue_refutation_carries_no_poison(self):
        v = representable(FormVariant.pure(19), 2 * 5 * 5)
        assert v.is_not_representable
        assert v.poison is None and v.method == "local_residue"

    def test_local_residue_shortcut(self):
        v = representable(FormVariant.pure(7), 2 * 3**2)
        assert v.is_not_representable and v.method == "local_residue"

    def test_norm_and_pure_differ_at_2_for_d7(self):
        assert representable(FormVariant.norm(7), 2).is_representable
        assert representable(FormVariant.pure(7), 2).is_not_representable
        # but 8 = 1 + 7 is a pure value
        v = representable(FormVariant.pure(7), 8)
        assert v.is_representable and FormVariant.pure(7).value(*v.witness) == 8

    def test_hint_short_circuits(self):
        v = representable(FormVariant.pure(2), 1136689, hint=(1031, 192))
        assert v.is_representable and v.method == "hint"

    def test_bad_hint_rejected(self):
        with pytest.raises(ValueError):
            representable(FormVariant.pure(2), 1136689, hint=(1031, 191))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            representable(FormVariant.pure(2), 0)

    def test_factor_route_poison(self):
        # value above the direct-search cap with a small inert factor
        m = 5 * (10**15 + 37)
        v = representable(FormVariant.pure(2), m)
        assert v.is_not_representable and v.poison == 5 and v.exponent == 1

    def test_factor_route_poison_found_by_rho(self):
        # semiprime beyond trial division; 10^9 + 7 is 7 mod 8, exponent 1
        m = (10**9 + 7) * (10**9 + 9)
        v = representable(FormVariant.pure(2), m)
        assert v.is_not_representable
        assert (v.poison, v.exponent) == (10**9 + 7, 1)

    def test_factor_route_builds_witness(self):
        p, q = 1000003, 1000033  # 3 and 1 mod 8, both split
        m = p * p * q
        v = representable(FormVariant.pure(2), m)
        assert v.is_representable and v.method == "composition"
        assert FormVariant.pure(2).value(*v.witness) == m

    def test_factor_route_even_inert_exponents(self):
        q = 1000151  # 7 mod 8, inert, but squared
        m = 1000003 * q * q
        v = representable(FormVariant.pure(2), m)
        assert v.is_representable
        assert FormVariant.pure(2).value(*v.witness) == m

    def test_unknown_when_witness_out_of_reach(self):
        p = 35184405643273  # split prime whose witness search exceeds the cap
        v = representable(FormVariant.pure(2), p)
        assert v.is_unknown and v.method == "witness_out_of_reach" and v.cofactor == 1

    def test_unknown_when_budget_exhausted(self):
        n = (10**15 + 37) * (10**15 + 91)
        tiny = Budget(trial_division_bound=100, rho_iterations_cap=50, rho_restart_cap=1)
        v = representable(FormVariant.norm(11), n, tiny)
        assert v.is_unknown and v.cofactor == n

    def test_verdict_json_shapes(self):
        assert representable(FormVariant.pure(2), 2).to_json() == {
            "outcome": "representable",
            "method": "witness_search",
            "witness": {"w": "0", "t": "1"},
        }
        js = representable(FormVariant.pure(2), 985).to_json()
        assert js == {
            "outcome": "not_representable",
            "method": "poison",
            "poison": "5",
            "exponent": 1,
        }
        js = representable(FormVariant.pure(2), 35184405643273).to_json()
        assert js["outcome"] == "unknown" and js["cofactor"] == "1"


class TestRouteEquivalence:
    @pytest.mark.parametrize("d", [2, 3, 7, 11, 19, 43])
    def test_factor_route_matches_search(self, d):
        form = FormVariant.norm(d)
        for m in range(1, 400):
            direct = find_witness(form, m) is not None
            v = decide_by_factoring(form, m)
            assert not v.is_unknown
            assert v.is_representable == direct, f"d={d}, m={m}"

    def test_pure_d3_equals_norm_d3(self):
        for m in range(1, 400):
            a = representable(FormVariant.norm(3), m)
            b = representable(FormVariant.pure(3), m)
            assert a.is_representable == b.is_representable, m
