import pytest

from omegaenv.hopf import (
    TwistedHopfError,
    antipode,
    braided_mul,
    check_hopf_axioms,
    coproduct,
    counit,
    hopf_ideal_check,
)

from conftest import VALID, algebra, load


def test_braided_mul_examples():
    E = algebra("weyl", twisted=False)
    one = E.one
    unit = {((), ()): one}
    ab = {((0,), (1,)): one}
    assert braided_mul(E, unit, ab) == ab
    assert braided_mul(E, {((), (1,)): one}, {((0,), ()): one}) == {((0,), (1,)): one}
    S = algebra("super_1_1")
    assert braided_mul(S, {((), (1,)): S.one}, {((1,), ()): S.one}) == {((1,), (1,)): -S.one}


def test_coproduct_examples():
    E = algebra("weyl", twisted=False)
    one = E.one
    assert coproduct(E, {(0,): one}) == {((0,), ()): one, ((), (0,)): one}
    assert coproduct(E, {(0, 1): one}) == {
        ((0, 1), ()): one,
        ((0,), (1,)): one,
        ((1,), (0,)): one,
        ((), (0, 1)): one,
    }


def test_super_odd_square_coproduct():
    S = algebra("super_1_1")
    # theta theta = x/2, so Delta(theta theta) must be primitive
    d = coproduct(S, {(1, 1): S.one})
    half = S.field("1/2")
    assert d == {((0,), ()): half, ((), (0,)): half}


def test_antipode_examples():
    E = algebra("weyl", twisted=False)
    one = E.one
    assert antipode(E, {(0,): one}) == {(0,): -one}
    assert antipode(E, {(0, 1): one}) == {(0, 1): one}
    assert counit(E, {(0, 1): one, (): one}) == 1


def test_twisted_refused():
    E = algebra("weyl")
    with pytest.raises(TwistedHopfError):
        coproduct(E, {(0,): E.one})
    with pytest.raises(TwistedHopfError):
        antipode(E, {(0,): E.one})


@pytest.mark.parametrize("name", VALID)
def test_axioms_untwisted(name):
    rep = check_hopf_axioms(algebra(name, twisted=False), 4)
    assert rep["ok"], rep["failures"]


@pytest.mark.parametrize("name", VALID)
def test_obstruction_is_omega(name):
    A = load(name)
    L = A.L
    rep = hopf_ideal_check(algebra(name))
    got = {(L.index(o["i"]), L.index(o["j"])): (o["counit"], o["coproduct_residue"]) for o in rep["obstructions"]}
    want = {(i, j): (str(-v), str(v)) for (i, j), v in A.omega.entries().items()}
    assert got == want
    assert all("coproduct_residue_other" not in o for o in rep["obstructions"])
    assert not hopf_ideal_check(algebra(name, twisted=False))["obstructions"]


def test_weyl_and_clifford_tables():
    w = hopf_ideal_check(algebra("weyl"))["obstructions"]
    assert w == [{"i": "q", "j": "p", "counit": "-1", "coproduct_residue": "1"}]
    c = hopf_ideal_check(algebra("clifford2"))["obstructions"]
    assert [(o["i"], o["j"], o["counit"]) for o in c] == [("e1", "e1", "-2"), ("e2", "e2", "-2")]
