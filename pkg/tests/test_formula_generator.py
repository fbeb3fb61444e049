# tests/test_formula_generator.py
from src.domain.services.formula_generator import formula_pool, random_formulas
from src.domain.value_objects.modal_formula import modal_depth, variables


def test_pool_is_deterministic_and_bounded():
    pool = formula_pool(("p",), 3)
    assert len(pool) >= 20
    assert pool == formula_pool(("p",), 3)
    assert len(set(pool)) == len(pool)
    assert max(modal_depth(f) for f in pool) == 3
    assert all(variables(f) <= {"p"} for f in pool)


def test_random_formulas_are_seeded():
    assert random_formulas(1, 20, ("p", "q"), 4) == random_formulas(1, 20, ("p", "q"), 4)
    assert random_formulas(1, 20, ("p", "q"), 4) != random_formulas(2, 20, ("p", "q"), 4)
