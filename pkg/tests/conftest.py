import functools

import pytest

from heckekit import CoxeterMatrix, HeckeAlgebra, build


@functools.lru_cache(maxsize=None)
def _system(name: str):
    return build(CoxeterMatrix.from_name(name))


@functools.lru_cache(maxsize=None)
def _algebra(name: str):
    return HeckeAlgebra(_system(name))


@pytest.fixture(scope="session")
def sys_of():
    """Factory returning a session-cached CoxeterSystem by type name."""
    return _system


@pytest.fixture(scope="session")
def alg_of():
    """Factory returning a session-cached HeckeAlgebra by type name."""
    return _algebra
