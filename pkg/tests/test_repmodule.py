import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omegaenv.colorlie import Cocycle2
from omegaenv.repmodule import (
    ClosureError,
    GradedModule,
    adjoint_truncated,
    induce_action,
    measured_twist,
    trivial_module,
    validate_module,
)

from conftest import VALID, algebra, load


def test_trivial_valid(valid_name):
    A = load(valid_name)
    assert validate_module(A.L, Cocycle2.zero(A.L), trivial_module(A.L)) == []


def test_weyl_point_rejected():
    A = load("weyl")
    M = A.module("point")
    assert validate_module(A.L, Cocycle2.zero(A.L), M) == []
    bad = validate_module(A.L, A.omega, M)
    assert [(v.kind, v.where, v.detail) for v in bad] == [("module-relation", (0, 1), "(0,0)=-1")]
    with pytest.raises(ValueError):
        induce_action(algebra("weyl"), M)


def test_pauli_module():
    A = load("clifford2")
    M = A.module("pauli")
    assert validate_module(A.L, A.omega, M) == []
    assert measured_twist(A.L, M) == A.omega
    act = induce_action(algebra("clifford2"), M)
    assert act({(): A.L.field.one}) == M.identity()
    e12 = act.word_matrix((0, 1))
    z = A.L.field.zeta()
    assert e12.to_dense(A.L.field.zero) == [[z, 0], [0, -z]]


def test_module_degree_violation():
    A = load("clifford2")
    M = GradedModule("flat", A.L, ["a", "b"], [(0,), (0,)], {0: [["0", "1"], ["1", "0"]]})
    assert "module-degree" in [v.kind for v in validate_module(A.L, Cocycle2.zero(A.L), M)]


def test_pauli_well_defined():
    A = load("clifford2")
    E = algebra("clifford2")
    act = induce_action(E, A.module("pauli"))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(0, 1), max_size=6), st.lists(st.integers(0, 1), max_size=6))
    def check(u, v):
        u, v = tuple(u), tuple(v)
        assert act.word_matrix(u) == act(E.nf({u: E.one}))
        assert act.word_matrix(u + v) == act.word_matrix(u) @ act.word_matrix(v)

    check()


def test_weyl_adjoint_n1():
    E = algebra("weyl")
    M = adjoint_truncated(E, 1)
    assert M.basis_names == ["1", "q", "p"]
    adq = M.action(0).to_dense(E.field.zero)
    # ad(q) p = 1, ad(q) q = ad(q) 1 = 0
    assert [row[2] for row in adq] == [1, 0, 0]
    assert [row[1] for row in adq] == [0, 0, 0]
    assert [row[0] for row in adq] == [0, 0, 0]


@pytest.mark.parametrize("name", VALID)
def test_adjoint_is_untwisted(name):
    A = load(name)
    E = algebra(name)
    for N in (1, 2, 3):
        M = adjoint_truncated(E, N)
        assert validate_module(A.L, Cocycle2.zero(A.L), M) == []
        # ad(1) = 0 so the unit column is killed
        for i in range(A.L.dim):
            assert all(not row.get(0) for row in M.action(i).rows)
        if not A.omega.is_zero():
            assert validate_module(A.L, A.omega, M) != []


def test_h3_adjoint_n2():
    E = algebra("heisenberg")
    M = adjoint_truncated(E, 2)
    assert M.dim == 10
    assert validate_module(E.L, Cocycle2.zero(E.L), M) == []


def test_closure_failure_detected():
    # an untrusted rewriting system can leave the truncation
    A = load("broken_jacobi")
    from omegaenv.enveloping import EnvelopingAlgebra

    E = EnvelopingAlgebra(A.L, A.omega, force=True)
    try:
        M = adjoint_truncated(E, 2)
    except ClosureError:
        return
    assert validate_module(A.L, Cocycle2.zero(A.L), M) != []
