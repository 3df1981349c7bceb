import functools

import pytest

from omegaenv import algfile
from omegaenv.enveloping import EnvelopingAlgebra

VALID = ["weyl", "clifford2", "heisenberg", "sl2", "aff1", "super_1_1", "z3z3_example"]
MUTATED = ["broken_jacobi", "broken_antisymmetry", "broken_cocycle", "bad_grading", "bad_bicharacter", "bad_torsion"]


@functools.lru_cache(maxsize=None)
def load(name):
    return algfile.load(name)


@functools.lru_cache(maxsize=None)
def algebra(name, twisted=True):
    A = load(name)
    return EnvelopingAlgebra(A.L, A.omega if twisted else None, order=A.order)


@pytest.fixture(params=VALID)
def valid_name(request):
    return request.param
