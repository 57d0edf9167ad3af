"""Functions to test the polynomial system solver."""
import itertools

import pytest

from nilcent.groebner import (Inconclusive, PolySystem, SolutionSet, buchberger, dump, evaluate, factor_split,
                              is_groebner, inverse_name, lex_order, load, reduce_set, solve, solve_any, solve_many,
                              solve_zero_dim, univariate_roots)
from nilcent.scalars import QQ_FIELD, ScalarField


def rational_points(solutions: SolutionSet, names: list) -> set:
    return {tuple(solutions.field.to_rational(s[x]) for x in names) for s in solutions}


class TestPolySystem:

    def test_lex_order(self):
        names = ["a1", "t2", "inv_t1", "u1", "t10", "s1", "x"]
        assert lex_order(names) == ["t2", "t10", "u1", "s1", "a1", "x", "inv_t1"]
        assert inverse_name("t3") == "inv_t3"

    def test_construction(self):
        system = PolySystem(["t1^2 - 1"], ["t1"], aux=[("t1", "inv_t1")])
        assert system.variables == ["t1", "inv_t1"]
        assert len(system) == 2
        assert system.gen("t1") * system.gen("inv_t1") - 1 in system.polys

    def test_construction_errors(self):
        pytest.raises(ValueError, PolySystem, [], ["x"], order="grlex")
        pytest.raises(ValueError, PolySystem, [], ["x", "x"])
        pytest.raises(ValueError, PolySystem, [], ["x"], aux=[("y", "inv_y")])
        pytest.raises(TypeError, PolySystem, [1.5], ["x"])

    def test_textual_form(self):
        system = PolySystem(["3/2*t1^2*u1 - u1 + 2", "u1^3"], ["t1", "u1"], aux=[("t1", "inv_t1")])
        restored = load(dump(system))
        assert restored.variables == system.variables
        assert restored.aux == system.aux
        assert set(restored.polys) == set(system.polys)
        assert "3/2*t1^2*u1" in dump(system)

    def test_over_larger_field(self):
        system = PolySystem(["x^2 + 1"], ["x"])
        field4 = ScalarField(4)
        lifted = system.over(field4)
        assert lifted.field is field4
        assert len(lifted) == 1


class TestGroebnerBases:

    def test_basis(self):
        system = PolySystem(["x^2 + y^2 - 1", "x - y"], ["x", "y"])
        basis = buchberger(system)
        assert is_groebner(basis)
        assert len(basis) == 2
        assert all(p == p.monic() for p in basis)

    def test_degenerate_ideals(self):
        unit = buchberger(PolySystem(["x", "x - 1"], ["x"]))
        assert len(unit) == 1 and unit[0].is_ground
        assert buchberger(PolySystem([], ["x"])) == []

    def test_budget(self):
        system = PolySystem(["x^2 - y", "x*y - 1"], ["x", "y"])
        with pytest.raises(Inconclusive) as excinfo:
            buchberger(system, budget=0)
        assert "budget" in excinfo.value.reason
        assert solve_zero_dim(system, budget=0).is_inconclusive

    def test_reduce_set(self):
        system = PolySystem(["x^2 - 1", "x^3 - x", "2"], ["x"])
        assert reduce_set(system.polys) == [system.ring.one]
        system = PolySystem(["x^2 - 1", "x^3 - x"], ["x"])
        assert len(reduce_set(system.polys)) == 1


class TestSolving:

    def test_rational_solutions(self):
        system = PolySystem(["x^2 + x - 2", "y^2 - x*y + y - x"], ["x", "y"])
        solutions = solve_zero_dim(system)
        assert rational_points(solutions, ["x", "y"]) == {(1, 1), (1, -1), (-2, -2), (-2, -1)}
        for s in solutions:
            assert all(evaluate(p, s, solutions.field) == 0 for p in system.polys)

    def test_factor_split_against_grid(self):
        system = PolySystem(["x^2 + x - 2", "y^2 - x*y + y - x", "x*y^2 - x"], ["x", "y"])
        branches = factor_split(system)
        assert len(branches) > 1
        grid = {(x, y) for x, y in itertools.product(range(-3, 4), repeat=2)
                if all(evaluate(p, {"x": QQ_FIELD(x), "y": QQ_FIELD(y)}, QQ_FIELD) == 0 for p in system.polys)}
        found = set()
        for branch in branches:
            found |= rational_points(solve_zero_dim(branch), ["x", "y"])
        assert found == grid
        assert rational_points(solve(system), ["x", "y"]) == grid

    def test_cyclotomic_roots(self):
        solutions = solve(PolySystem(["x^2 + 1"], ["x"]))
        assert solutions.field.conductor == 4
        assert len(solutions) == 2
        assert all(s["x"] ** 2 == solutions.field(-1) for s in solutions)
        # sqrt(2) lies in Q(zeta_8)
        assert solve(PolySystem(["x^2 - 2"], ["x"])).field.conductor == 8

    def test_zero_dim_cyclotomic_roots(self):
        solutions = solve_zero_dim(PolySystem(["x^2 + 1"], ["x"]))
        assert not solutions.is_inconclusive
        assert solutions.field.conductor == 4
        assert len(solutions) == 2
        # Both square roots of -1 and both square roots of 2 live in Q(zeta_8).
        solutions = solve_zero_dim(PolySystem(["x^2 + 1", "y^2 - 2"], ["x", "y"]))
        assert solutions.field.conductor == 8
        assert len(solutions) == 4

    def test_roots_over_a_common_field(self):
        # x^4 + x^3 + 2x^2 + x + 1 = (x^2 + 1)(x^2 + x + 1)
        coeffs = [QQ_FIELD(c) for c in [1, 1, 2, 1, 1]]
        roots, field = univariate_roots(coeffs, QQ_FIELD)
        assert field.conductor == 12
        assert len(roots) == 4
        for r in roots:
            value = field.zero
            for c in coeffs:
                value = value * r + field(c)
            assert field.is_zero(value)

        solutions = solve_zero_dim(PolySystem(["x^4 + x^3 + 2*x^2 + x + 1"], ["x"]))
        assert solutions.field.conductor == 12
        assert len(solutions) == 4

    def test_unsupported_roots(self):
        result = solve(PolySystem(["x^3 - 2"], ["x"]))
        assert result.is_inconclusive
        pytest.raises(Inconclusive, result.require)

    def test_unsat_and_positive_dimension(self):
        assert solve(PolySystem(["x^2 + 1", "x"], ["x"])).is_unsat
        assert solve_zero_dim(PolySystem(["x - y"], ["x", "y"])).is_inconclusive

    def test_solve_any(self):
        found = solve_any(PolySystem(["x - y"], ["x", "y"]))
        assert len(found) == 1
        (solution,) = found
        assert solution["x"] == solution["y"]
        assert solve_any(PolySystem(["x", "x - 1"], ["x"])).is_unsat

    def test_solution_sets(self):
        empty = SolutionSet(["x"])
        assert empty.is_unsat
        undecided = SolutionSet.inconclusive(["x"], "budget")
        union = SolutionSet.union(["x"], [empty, undecided])
        assert union.is_inconclusive
        assert union.diagnostics == [{"reason": "budget"}]
        solutions = solve(PolySystem(["x^2 + 1"], ["x"]))
        restored = SolutionSet.from_dict(solutions.to_dict())
        assert restored.solutions == solutions.solutions
        assert restored.field is solutions.field

    def test_solve_many(self):
        systems = [PolySystem(["x - 1"], ["x"]), PolySystem(["x^2 - 4"], ["x"])]
        results = solve_many(systems)
        assert [len(r) for r in results] == [1, 2]
