import random
from itertools import product

import pytest

from andorcut.logic.cnf import clause_holds
from andorcut.logic.dpll import DpllSolver, SearchInterrupted, normalize_clause, sat_solve


def brute_force_sat(clauses, nvars, assumptions=()):
    for values in product([False, True], repeat=nvars):
        model = dict(enumerate(values, start=1))
        if all(model[abs(a)] == (a > 0) for a in assumptions) and all(clause_holds(c, model) for c in clauses):
            return True
    return False


def test_trivial_cases():
    result = sat_solve([[1]])
    assert result and result.model[1] is True
    assert not sat_solve([[1], [-1]])
    assert not sat_solve([[]])
    assert sat_solve([])


def test_listing_clauses_under_assumptions():
    # a=1 b=2 c=3 c1=4 d=5
    clauses = [[-1, -2, -4, -5], [-2, -3, -4, -5]]
    result = sat_solve(clauses, assumptions=[4, 5, 2])
    assert result
    assert result.model[1] is False
    assert result.model[3] is False


def test_failed_assumptions_give_a_core():
    clauses = [[-1, -2], [3, 4]]
    result = sat_solve(clauses, assumptions=[1, 2, 3])
    assert not result
    assert result.core <= {1, 2, 3}
    assert {1, 2} <= result.core


def test_contradictory_assumptions():
    result = sat_solve([[1, 2]], assumptions=[3, -3])
    assert not result
    assert result.core == {3, -3}


def test_normalize_clause():
    assert normalize_clause([1, 1, -2]) == [1, -2]
    assert normalize_clause([1, -1]) is None
    with pytest.raises(ValueError):
        normalize_clause([1, 0])


def test_solver_is_reusable():
    solver = DpllSolver([[1, 2], [-1, 3], [-2, 3]])
    assert solver.solve([-3]).satisfiable is False
    assert solver.solve([3]).satisfiable is True
    assert solver.solve([-1]).model[2] is True
    assert solver.calls == 3


def test_decision_limit_interrupts():
    solver = DpllSolver([[1, 2], [3, 4], [5, 6]])
    with pytest.raises(SearchInterrupted):
        solver.solve(max_decisions=1)


def test_random_cnf_against_enumeration():
    rng = random.Random(7)
    for _ in range(300):
        nvars = rng.randint(1, 8)
        clauses = [
            [rng.choice([-1, 1]) * rng.randint(1, nvars) for _ in range(rng.randint(1, 3))]
            for _ in range(rng.randint(1, 30))
        ]
        assumptions = list({rng.choice([-1, 1]) * rng.randint(1, nvars) for _ in range(rng.randint(0, 3))})
        result = sat_solve(clauses, assumptions, nvars=nvars)
        assert bool(result) == brute_force_sat(clauses, nvars, assumptions)
        if result:
            assert all(clause_holds(c, result.model) for c in clauses)
            assert all(result.model[abs(a)] == (a > 0) for a in assumptions)
        elif assumptions:
            core = sorted(result.core)
            assert set(core) <= set(assumptions)
            assert not brute_force_sat(clauses, nvars, core)
