import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omegaenv.grading import Bicharacter, GroupSpec
from omegaenv.scalars import CycField

K3 = CycField(3)
SPEC = GroupSpec(1, (3, 3))
EPS = Bicharacter(SPEC, [["-1", "z", "1"], ["z^2", "1", "z"], ["1", "z^2", "1"]], K3)

elt = st.tuples(st.integers(-4, 4), st.integers(0, 2), st.integers(0, 2))


def test_group_ops():
    g = SPEC.element((2, 4, -1))
    assert g == (2, 1, 2)
    assert SPEC.compose(g, SPEC.invert(g)) == SPEC.identity
    assert SPEC.exponent() == 3
    with pytest.raises(ValueError):
        SPEC.element((1, 2))
    with pytest.raises(ValueError):
        GroupSpec(0, (1,))


def test_valid_bicharacter():
    assert EPS.validate() == []


@settings(max_examples=100, deadline=None)
@given(elt, elt, elt)
def test_bimultiplicative_and_antisymmetric(g, h, k):
    g, h, k = SPEC.element(g), SPEC.element(h), SPEC.element(k)
    assert EPS(SPEC.compose(g, h), k) == EPS(g, k) * EPS(h, k)
    assert EPS(g, SPEC.compose(h, k)) == EPS(g, h) * EPS(g, k)
    assert EPS(g, h) * EPS(h, g) == 1
    assert EPS.parity(g) in (1, -1)


def test_super_sign():
    K = CycField(1)
    eps = Bicharacter(GroupSpec(0, (2,)), [["-1"]], K)
    assert [[eps((i,), (j,)) for j in range(2)] for i in range(2)] == [[1, 1], [1, -1]]
    assert eps.parity((1,)) == -1


def test_violations_localized():
    K = CycField(1)
    bad = Bicharacter(GroupSpec(2, ()), [["1", "2"], ["1", "1"]], K)
    assert [(v.kind, v.where) for v in bad.validate()] == [("bicharacter-antisymmetry", (0, 1))]
    tors = Bicharacter(GroupSpec(0, (3, 3)), [["1", "-1"], ["-1", "1"]], K3)
    assert {(v.kind, v.where) for v in tors.validate()} == {("bicharacter-torsion", (0, 1)), ("bicharacter-torsion", (1, 0))}
    diag = Bicharacter(GroupSpec(1, ()), [["2"]], K)
    assert [v.kind for v in diag.validate()] == ["bicharacter-diagonal"]
    zero = Bicharacter(GroupSpec(1, ()), [["0"]], K)
    assert "bicharacter-nonzero" in [v.kind for v in zero.validate()]


def test_parity_requires_sign():
    K = CycField(1)
    eps = Bicharacter(GroupSpec(1, ()), [["2"]], K)
    with pytest.raises(ValueError):
        eps.parity((1,))
