import pytest

from rta.fixtures import load_solutions
from rta.pell import NPellPair, nth, params
from rta.quartic import (
    QUARTIC_DS,
    PellSystemSolution,
    QuarticTuple,
    evaluate,
    is_nontrivial,
    is_solution,
    pell_from_solution,
    pell_index_of,
    quartic_spec,
    solution_from_pell,
)


class TestSpecTable:
    # (left, right, constant, kind, fold_left, fold_right)
    TABLE = {
        2: (2, 1, 1, "pure", 1, 1),
        3: (3, 1, 2, "pure", 1, 1),
        7: (7, 9, -2, "pure", 1, 1),
        11: (11, 1, 2, "norm", 1, 3),
        19: (171, 169, 2, "norm", 1, 1),
        43: (43, 1, 2, "norm", 9, 59),
    }

    @pytest.mark.parametrize("d", QUARTIC_DS)
    def test_published_coefficients(self, d):
        left, right, constant, kind, fl, fr = self.TABLE[d]
        spec = quartic_spec(d)
        assert (spec.left_coeff, spec.right_coeff, spec.constant) == (left, right, constant)
        assert spec.inner_left.kind == spec.inner_right.kind == kind
        assert (spec.fold_left, spec.fold_right) == (fl, fr)

    @pytest.mark.parametrize("d", [3, 7, 11, 19, 43])
    def test_unfolding_matches_split_coefficients(self, d):
        # L = d*a^2, R = b^2, C = L - R with (a, b) the odd-index split pair
        spec, pr = quartic_spec(d), params(d)
        assert spec.unfolded_left == d * pr.bin_a**2
        assert spec.unfolded_right == pr.bin_b**2
        assert spec.constant == spec.unfolded_left - spec.unfolded_right

    def test_fold_witnesses_evaluate_to_folds(self):
        s11 = quartic_spec(11)
        assert s11.inner_right.value(*s11.fold_right_witness) == 3
        s43 = quartic_spec(43)
        assert s43.inner_left.value(*s43.fold_left_witness) == 9
        assert s43.inner_right.value(*s43.fold_right_witness) == 59

    def test_rejects_other_d(self):
        with pytest.raises(ValueError):
            quartic_spec(5)
        with pytest.raises(ValueError):
            quartic_spec(67)


class TestEvaluate:
    def test_base_points_solve(self):
        # every equation is solved by form values G1 = G2 = their folds
        base = {
            2: (1, 0, 1, 0),
            3: (1, 0, 1, 0),
            7: (1, 0, 1, 0),
            11: (1, 0, 0, 1),
            19: (1, 0, 1, 0),
            43: (3, 0, 3, 2),
        }
        for d, t in base.items():
            assert is_solution(quartic_spec(d), QuarticTuple(*t)), d

    def test_values(self):
        assert evaluate(quartic_spec(43), QuarticTuple(3, 0, 3, 2)) == 2
        assert evaluate(quartic_spec(2), QuarticTuple(1, 1, 1, 1)) == 9
        assert not is_solution(quartic_spec(2), QuarticTuple(1, 1, 1, 1))
        assert evaluate(quartic_spec(19), QuarticTuple(1, 0, 1, 0)) == 2

    def test_second_form_leads_with_third_slot(self):
        # (r, s, u, v) with u^2 + uv + c v^2 on the right
        spec = quartic_spec(19)
        got = evaluate(spec, QuarticTuple(2, 1, 1, 2))
        f1 = 4 + 2 + 5
        f2 = 1 + 2 + 20
        assert got == 171 * f1 * f1 - 169 * f2 * f2

    def test_nontriviality_predicate(self):
        spec = quartic_spec(2)
        assert not is_nontrivial(spec, QuarticTuple(1, 0, 1, 0))
        assert not is_nontrivial(spec, QuarticTuple(-1, 0, 5, 5))
        assert is_nontrivial(spec, QuarticTuple(1, 1, 1, 1))
        assert is_nontrivial(quartic_spec(43), QuarticTuple(3, 0, 3, 2))


class TestSolutionFromPell:
    def test_unfolded_base_point_d19(self):
        assert solution_from_pell(19, 0, (1, 0), (1, 0)) == QuarticTuple(1, 0, 1, 0)

    def test_unfolded_witnesses_are_lifted_d43(self):
        # F1 = F2 = 1 at index 0; (1, 0) composes with the fold witnesses
        tup = solution_from_pell(43, 0, (1, 0), (1, 0))
        assert tup == QuarticTuple(3, 0, 3, 2)

    def test_folded_witnesses_pass_through_d43(self):
        tup = solution_from_pell(43, 0, (3, 0), (3, 2))
        assert tup == QuarticTuple(3, 0, 3, 2)

    def test_base_point_d11(self):
        tup = solution_from_pell(11, 0, (1, 0), (1, 0))
        assert tup == QuarticTuple(1, 0, 0, 1)

    def test_wrong_witness_rejected(self):
        with pytest.raises(ValueError, match="evaluates to"):
            solution_from_pell(19, 0, (0, 1), (1, 0))

    def test_companion_index_zero_d2(self):
        tup = solution_from_pell(2, 0, (1, 0), (1, 0))
        assert tup == QuarticTuple(1, 0, 1, 0)

    def test_wrong_companion_witness_rejected(self):
        # A_1 = 5, and (1, 0) evaluates to 1
        with pytest.raises(ValueError, match="expected 5"):
            solution_from_pell(2, 1, (1, 0), (1, 0))


class TestPellFromSolution:
    def test_trivial_inverts_to_unit_d19(self):
        sol = pell_from_solution(quartic_spec(19), QuarticTuple(1, 0, 1, 0))
        assert isinstance(sol, PellSystemSolution)
        assert (sol.x, sol.y, sol.form1_value, sol.form2_value) == (1, 0, 1, 1)

    def test_folded_base_point_unfolds_d43(self):
        sol = pell_from_solution(quartic_spec(43), QuarticTuple(3, 0, 3, 2))
        assert (sol.x, sol.y) == (1, 0)
        assert (sol.form1_value, sol.form2_value) == (1, 1)

    def test_round_trip_through_witnesses_d43(self):
        tup = solution_from_pell(43, 0, (1, 0), (1, 0))
        sol = pell_from_solution(quartic_spec(43), tup)
        assert (sol.x, sol.y) == (1, 0)

    def test_companion_pair_d2(self):
        pair = pell_from_solution(quartic_spec(2), QuarticTuple(1, 0, 1, 0))
        assert isinstance(pair, NPellPair)
        assert (pair.n, pair.a, pair.b) == (0, 1, 1)
        pair.check()

    def test_rejects_non_solutions(self):
        with pytest.raises(ValueError, match="does not satisfy"):
            pell_from_solution(quartic_spec(2), QuarticTuple(1, 1, 1, 1))

    def test_system_check_rejects_corruption(self):
        with pytest.raises(ValueError, match="constraint"):
            PellSystemSolution(19, 2, 0, 1, 1).check()
        with pytest.raises(ValueError, match="form1"):
            PellSystemSolution(19, 1, 0, 2, 1).check()


class TestBundledSolutions:
    def test_three_entries_for_d2(self):
        sols = load_solutions()
        assert len(sols) == 3
        assert all(d == 2 for d, _ in sols)
        spec = quartic_spec(2)
        for _, tup in sols:
            assert is_solution(spec, tup) and is_nontrivial(spec, tup)

    def test_companion_indices(self):
        # recomputed locations on the companion sequence
        spec = quartic_spec(2)
        got = [pell_from_solution(spec, tup).n for _, tup in load_solutions()]
        assert got == [128, 140, 468]

    def test_round_trip_with_original_witnesses(self):
        spec = quartic_spec(2)
        for _, tup in load_solutions():
            pair = pell_from_solution(spec, tup)
            rebuilt = solution_from_pell(2, pair.n, (tup.r, tup.s), (tup.u, tup.v))
            assert rebuilt == tup


class TestPellIndexOf:
    def test_companion_hits(self):
        assert pell_index_of("npell", 1, 1) == 0
        assert pell_index_of("npell", 5, 7) == 1
        assert pell_index_of("npell", 29, 41) == 2

    def test_companion_misses(self):
        assert pell_index_of("npell", 6, 8) is None
        assert pell_index_of("npell", 5, 8) is None

    def test_pell_hits(self):
        assert pell_index_of(19, 57799, 13260) == 2
        assert pell_index_of(2, 577, 408) == 4
        assert pell_index_of(2, 577) == 4
        assert pell_index_of(43, 1, 0) == 0

    def test_pell_misses(self):
        assert pell_index_of(2, 576) is None
        assert pell_index_of(2, 578, 408) is None


class TestQuarticTuple:
    def test_json_round_trip(self):
        tup = QuarticTuple(3, 0, 3, 2)
        js = tup.to_json(43)
        assert js == {"d": 43, "r": "3", "s": "0", "u": "3", "v": "2"}
        assert QuarticTuple.from_json(js) == tup
        assert "d" not in tup.to_json()

    def test_astuple(self):
        assert QuarticTuple(1, 2, 3, 4).astuple() == (1, 2, 3, 4)


class TestIdentity:
    @pytest.mark.parametrize("d", [3, 7, 11, 19, 43])
    def test_unfolded_system_along_the_sequence(self, d):
        from rta.quartic import _unfolded_sides

        spec, pr = quartic_spec(d), params(d)
        for ell in range(8):
            big_x, big_y, f1, f2 = _unfolded_sides(d, ell)
            assert big_x**2 - d * pr.y1**2 * big_y**2 == 1
            assert spec.unfolded_left * f1 * f1 - spec.unfolded_right * f2 * f2 == spec.constant
            # the product recovers the odd-index Pell value
            assert pr.y1 * f1 * f2 == nth(d, 2 * ell + 1).y
