# tests/test_builtin_kernels.py
import pytest

from src.domain.exceptions.domain_exceptions import UnknownKernelError
from src.domain.services.builtin_kernels import builtin, builtin_names


def test_variable_counts():
    assert builtin("phi_1step").var_count == 4
    assert builtin("phi_2step").var_count == 9
    assert builtin("phi_eq").var_count == 3
    assert builtin("phi_grid").var_count == 9
    assert builtin("phi_univ").var_count == 3


def test_only_prior_kernel_uses_equality():
    for name in builtin_names():
        assert builtin(name).uses_equality == (name == "phi_prior_eq")
    assert builtin("phi_final").is_basic


def test_builtins_are_shared_instances():
    assert builtin("phi_grid") is builtin("phi_grid")
    assert builtin("phi_grid").name == "phi_grid"


def test_unknown_builtin():
    with pytest.raises(UnknownKernelError) as info:
        builtin("phi_missing")
    assert "phi_grid" in str(info.value)
